#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ctc/char_table.hpp"
#include "ctc/finite_field.hpp"
#include "ctc/group.hpp"

namespace ctc {

/// Reduction of Z[zeta_e] modulo a fixed prime ideal over p: writing
/// e = p^a e', zeta_e is sent to theta = x^((p^f - 1)/e') in GF(p^f), where
/// f is the order of p mod e' and x generates GF(p^f)^*. theta has order e',
/// so the p-power roots of unity go to 1.
class ModularReduction {
 public:
  ModularReduction(unsigned p, std::size_t exponent);

  unsigned prime() const { return p_; }
  std::size_t exponent() const { return exponent_; }
  const GaloisField& field() const { return field_; }
  GaloisField::Elem theta() const { return powers_.size() > 1 ? powers_[1] : field_.one(); }

  /// Image of an algebraic integer whose conductor divides exponent().
  GaloisField::Elem reduce(const Cyclo& x) const;

  nlohmann::ordered_json describe() const;

 private:
  unsigned p_;
  std::size_t exponent_;
  GaloisField field_;
  std::vector<GaloisField::Elem> powers_;  // theta^j, 0 <= j < exponent
};

struct ReducedCentralChar {
  unsigned p = 0;
  unsigned field_degree = 1;
  std::vector<GaloisField::Elem> values;  // one per conjugacy class

  bool operator==(const ReducedCentralChar&) const = default;
  auto operator<=>(const ReducedCentralChar&) const = default;
};

struct Block {
  std::size_t index = 0;
  std::vector<std::size_t> members;  // character indices, ascending
  unsigned defect = 0;
  Subgroup defect_group;
  std::size_t defect_class = 0;  // class used to locate the defect group
  ReducedCentralChar lambda;
  bool principal = false;
};

struct HeightTag {
  std::size_t chi = 0;
  unsigned height = 0;
};

/// omega_chi(K) = |K| chi(g_K) / chi(1), exactly.
std::vector<Cyclo> central_character(const CharTable& t, std::size_t chi);

/// The p-block partition of Irr(G) with defects and defect groups.
class BlockSystem {
 public:
  static std::shared_ptr<const BlockSystem> compute(CharTablePtr table, unsigned p,
                                                    std::shared_ptr<const ModularReduction> red);

  const CharTable& table() const { return *table_; }
  const CharTablePtr& table_ptr() const { return table_; }
  const Group& group() const { return table_->group(); }
  unsigned prime() const { return p_; }
  const ModularReduction& reduction() const { return *reduction_; }

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t b) const { return blocks_.at(b); }
  std::size_t block_of(std::size_t chi) const { return block_of_[chi]; }
  unsigned char_defect(std::size_t chi) const { return char_defect_[chi]; }
  std::size_t principal() const { return 0; }

  std::vector<HeightTag> heights(std::size_t b) const;
  /// Irr_0(B): members of height zero.
  std::vector<std::size_t> height_zero(std::size_t b) const;
  /// Irr^d(B).
  std::vector<std::size_t> of_defect(std::size_t b, unsigned d) const;

  /// Block whose reduced central character equals `lambda`, if any.
  std::optional<std::size_t> find(const ReducedCentralChar& lambda) const;

  nlohmann::ordered_json to_json() const;

 private:
  BlockSystem() = default;
  CharTablePtr table_;
  unsigned p_ = 2;
  std::shared_ptr<const ModularReduction> reduction_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<unsigned> char_defect_;
};

using BlockSystemPtr = std::shared_ptr<const BlockSystem>;

/// b^G for a block b of the subgroup H = sub.group() of G = ambient.group();
/// std::nullopt when Brauer induction is undefined. Throws InputError when H
/// is not contained in G or the two systems use different reductions.
std::optional<std::size_t> brauer_induce(const BlockSystem& sub, std::size_t b,
                                         const BlockSystem& ambient);

/// The block of H^x corresponding to block b of H, where to.group() = from.group()^x.
std::size_t conjugate_block(const BlockSystem& from, std::size_t b, const BlockSystem& to, const Perm& x);

/// The unique block b of N = N_G(D) with b^G = B and defect group D.
/// Throws InternalError when zero or several candidates are found.
std::size_t brauer_correspondent(const BlockSystem& ambient, std::size_t block,
                                 const BlockSystem& normalizer_blocks, const Subgroup& defect_group);

/// Group, table and blocks of subgroups of one ambient group at one prime,
/// all reduced with the same prime ideal. Tables are cached per subgroup
/// (as an embedded subgroup, not up to isomorphism).
class LocalContext {
 public:
  LocalContext(GroupPtr group, unsigned p, Limits limits = {});

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  unsigned prime() const { return p_; }
  const Limits& limits() const { return limits_; }
  const std::shared_ptr<const ModularReduction>& reduction() const { return reduction_; }

  const BlockSystem& top() const { return *top_; }
  BlockSystemPtr blocks_of(const Subgroup& h) const;

  /// Context for a subgroup H, sharing this context's reduction and cache, so
  /// block ids of subgroups of H can be induced to both H and G.
  LocalContext sub_context(const Subgroup& h) const;

  /// The Brauer correspondent of block B of G in N_G(D), D its defect group.
  std::pair<BlockSystemPtr, std::size_t> brauer_correspondent(std::size_t block) const;

  nlohmann::ordered_json environment() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<Subgroup, BlockSystemPtr> systems;
  };
  LocalContext() = default;

  GroupPtr group_;
  unsigned p_ = 2;
  Limits limits_;
  std::shared_ptr<const ModularReduction> reduction_;
  BlockSystemPtr top_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace ctc
