#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <json.hpp>

#include "ctc/cyclotomic.hpp"
#include "ctc/group.hpp"

namespace ctc {

using ClassFunction = std::vector<Cyclo>;

/// Ordinary character table of a permutation group. Rows are irreducible
/// characters, columns follow Group::classes(). Values live in Q(zeta_e)
/// with e the group exponent.
///
/// Row order: trivial character first, then ascending degree, ties broken
/// by lexicographic comparison of the canonical coefficient vectors.
class CharTable {
 public:
  /// Dixon-Schneider over F_l (l the least prime = 1 mod e with l > 2 sqrt|G|),
  /// followed by an exact lift and a mandatory orthogonality check.
  static std::shared_ptr<const CharTable> compute(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  std::size_t size() const { return degrees_.size(); }
  const Cyclo& value(std::size_t chi, std::size_t cls) const { return values_[chi * size() + cls]; }
  std::span<const Cyclo> row(std::size_t chi) const {
    return {values_.data() + chi * size(), size()};
  }
  ClassFunction row_copy(std::size_t chi) const {
    auto r = row(chi);
    return {r.begin(), r.end()};
  }
  std::uint64_t degree(std::size_t chi) const { return degrees_[chi]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  std::size_t exponent() const { return exponent_; }
  /// The prime l used for the modular eigenvector computation.
  std::uint64_t lift_prime() const { return lift_prime_; }

  /// Row and column orthogonality, checked exactly.
  bool orthogonality_holds() const;

  nlohmann::ordered_json to_json() const;
  /// Rebuilds a table for `group` from an exported document; the class
  /// representatives and sizes must match the group's canonical classes.
  static std::shared_ptr<const CharTable> from_json(const nlohmann::ordered_json& doc,
                                                    GroupPtr group);

 private:
  CharTable() = default;
  GroupPtr group_;
  std::vector<Cyclo> values_;
  std::vector<std::uint64_t> degrees_;
  std::size_t exponent_ = 1;
  std::uint64_t lift_prime_ = 0;

  void sort_rows();
};

using CharTablePtr = std::shared_ptr<const CharTable>;

inline CharTablePtr character_table(GroupPtr group) { return CharTable::compute(std::move(group)); }

/// A character of a table together with its defect at a fixed prime.
struct CharRef {
  const CharTable* table = nullptr;
  std::size_t index = 0;
  unsigned defect = 0;
};

/// d(chi) with p^d(chi) = |G|_p / chi(1)_p.
unsigned defect(const CharTable& t, std::size_t chi, unsigned p);
inline unsigned defect(const CharRef& chi, unsigned p) { return defect(*chi.table, chi.index, p); }
CharRef char_ref(const CharTable& t, std::size_t chi, unsigned p);

/// Rows whose degree is prime to p.
std::vector<std::size_t> p_prime_degree_set(const CharTable& t, unsigned p);

/// <f, g> = |G|^-1 sum_K |K| f(K) conj(g(K)).
Cyclo inner_product(const CharTable& t, std::span<const Cyclo> f, std::span<const Cyclo> g);

}  // namespace ctc
