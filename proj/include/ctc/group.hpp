#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ctc/errors.hpp"
#include "ctc/perm.hpp"

namespace ctc {

struct ConjClass {
  Perm rep;  // smallest element of the class
  std::size_t size = 0;
  std::size_t centralizer_order = 0;
};

/// One level of a stabilizer chain: the orbit of base_point under the
/// current stabilizer and, for each orbit point, the smallest element
/// carrying base_point to it.
struct StabilizerLevel {
  Perm::Point base_point = 0;
  std::vector<Perm::Point> orbit;
  std::vector<Perm> transversal;
};

/// A subgroup of some ambient permutation group, stored as its sorted
/// element list. Equality and ordering are by element list.
class Subgroup {
 public:
  Subgroup() = default;

  /// Closure of the generators; throws ResourceError past limits.max_order.
  static Subgroup generated_by(std::size_t degree, const std::vector<Perm>& gens,
                               const Limits& limits = {});
  /// Trusts the caller that `elements` is a sorted, closed element list.
  static Subgroup from_sorted(std::vector<Perm> elements);
  static Subgroup trivial(std::size_t degree);

  std::size_t degree() const { return elements_.empty() ? 0 : elements_.front().degree(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  /// Small deterministic generating set (greedy over the sorted elements).
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& g) const;
  bool is_subgroup_of(const Subgroup& other) const;
  /// H^g = { g^-1 h g : h in H }.
  Subgroup conjugate(const Perm& g) const;
  bool is_normalized_by(const Perm& g) const;

  auto operator<=>(const Subgroup& o) const { return elements_ <=> o.elements_; }
  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  void choose_generators();
};

/// A finite permutation group with its full element list, stabilizer chain
/// and conjugacy classes. Immutable after construction.
class Group {
 public:
  Group(std::size_t degree, std::vector<Perm> generators, const Limits& limits = {});
  explicit Group(const Subgroup& h, const Limits& limits = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t exponent() const { return exponent_; }
  Perm identity() const { return Perm(degree_); }

  const std::vector<StabilizerLevel>& chain() const { return chain_; }
  /// Membership by sifting through the stabilizer chain.
  bool contains(const Perm& g) const;

  const std::vector<Perm>& elements() const { return elements_; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const Perm& g) const;

  /// Classes sorted by size, then by representative; class 0 is the identity.
  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_of(const Perm& g) const;
  std::size_t class_of_index(std::size_t element_index) const { return class_of_[element_index]; }
  /// Class of the inverses of the elements of class k.
  std::size_t inverse_class(std::size_t k) const { return inverse_class_[k]; }

  Subgroup as_subgroup() const { return Subgroup::from_sorted(elements_); }

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<StabilizerLevel> chain_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  std::size_t exponent_ = 1;

  void build(const Limits& limits);
};

using GroupPtr = std::shared_ptr<const Group>;

std::vector<ConjClass> conjugacy_classes(const Group& g);

// ---- number-theoretic helpers -------------------------------------------

bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p);
/// log_p of an exact power of p; throws InputError otherwise.
unsigned log_p(std::uint64_t n, unsigned p);

// ---- subgroup machinery ---------------------------------------------------

bool is_normal(const Group& g, const Subgroup& h);
bool is_p_group(const Subgroup& h, unsigned p);

Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup centralizer(const Group& g, const Perm& x);
Subgroup center(const Group& g);
/// Largest normal p-subgroup: the intersection of the Sylow p-subgroups.
Subgroup p_core(const Group& g, unsigned p);
/// (Z(G), O_p(G)).
std::pair<Subgroup, Subgroup> center_and_core(const Group& g, unsigned p);

Subgroup sylow(const Group& g, unsigned p);
/// A Sylow p-subgroup of the given subgroup (which need not be a Group).
Subgroup sylow(const Subgroup& h, unsigned p);

/// The lexicographically smallest G-conjugate of h (compared as sorted
/// element lists); optionally reports g with h^g equal to the result.
Subgroup canonical_conjugate(const Group& g, const Subgroup& h, Perm* conjugator = nullptr);
/// Some x in G with a^x = b, if one exists.
std::optional<Perm> conjugating_element(const Group& g, const Subgroup& a, const Subgroup& b);

struct SubgroupClass {
  Subgroup rep;  // canonical conjugate
  std::size_t class_size = 0;
  Subgroup normalizer;
};

/// One representative per G-class of p-subgroups, sorted by order and then
/// by canonical key. The trivial group and the Sylow class are included.
std::vector<SubgroupClass> p_subgroup_classes(const Group& g, unsigned p,
                                              const Limits& limits = {});
/// Same, restricted to p-subgroups containing the normal p-subgroup `base`.
std::vector<SubgroupClass> p_subgroup_classes_above(const Group& g, unsigned p,
                                                    const Subgroup& base,
                                                    const Limits& limits = {});
/// Every subgroup of the p-group `p_group` that contains `base`.
std::vector<Subgroup> subgroups_of_p_group(const Subgroup& p_group, unsigned p,
                                           const Subgroup& base, const Limits& limits = {});

}  // namespace ctc
