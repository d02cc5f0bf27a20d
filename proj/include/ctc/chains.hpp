#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ctc/blocks.hpp"
#include "ctc/group.hpp"

namespace ctc {

/// A normal p-chain D_0 < D_1 < ... < D_n; every term is normal in D_n.
struct PChain {
  std::vector<Subgroup> terms;

  std::size_t length() const { return terms.size() - 1; }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  const Subgroup& start() const { return terms.front(); }
  const Subgroup& last() const { return terms.back(); }

  PChain conjugate(const Perm& g) const;
  bool operator==(const PChain&) const = default;
};

/// Lexicographic order on (order, element list) term by term, shorter first.
bool chain_less(const PChain& a, const PChain& b);

/// Intersection of the normalizers of the terms.
Subgroup chain_stabilizer(const Group& g, const PChain& chain);

struct ChainOrbit {
  PChain rep;  // lexicographically least G-conjugate
  Subgroup stabilizer;
  std::size_t orbit_size = 0;
  int sign = 1;
};

/// A transversal of the G-orbits of normal p-chains starting at Z, sorted by
/// length and then by chain_less. Throws InputError if Z is not a normal
/// p-subgroup.
std::vector<ChainOrbit> enumerate_chain_orbits(const Group& g, const Subgroup& z, unsigned p,
                                               const Limits& limits = {});

/// The least G-conjugate of `chain`, with g such that chain^g is that conjugate.
PChain canonical_chain(const Group& g, const PChain& chain, Perm* conjugator = nullptr);

/// sigma_U: drops the first term.
PChain delete_first_term(const PChain& chain);
/// Appends D after checking D(sigma) < D, each term normal in D, D <= G_sigma.
PChain append_final_term(const Group& g, const PChain& chain, const Subgroup& d);

/// One G-orbit of pairs (sigma, theta) with theta in Irr(G_sigma). The
/// stabilizer fixes its own characters, so a pair orbit is named by the
/// chain orbit and a row of the stabilizer's table.
struct CTCPair {
  std::size_t orbit = 0;  // index into CTCSet::orbits
  std::size_t chi = 0;
  unsigned defect = 0;
  std::optional<std::size_t> induced_block;
};

struct CTCSet {
  std::vector<std::size_t> blocks;  // empty when all_blocks
  bool all_blocks = false;
  Subgroup start;
  unsigned d = 0;
  std::vector<ChainOrbit> orbits;
  std::vector<BlockSystemPtr> stabilizer_blocks;  // parallel to orbits
  std::vector<CTCPair> plus;
  std::vector<CTCPair> minus;

  std::size_t count(int sign) const { return sign > 0 ? plus.size() : minus.size(); }
  /// Pairs in one chain orbit.
  std::vector<CTCPair> pairs_of(std::size_t orbit) const;
};

/// C^d(B, Z)+- for a block of ctx.top(); std::nullopt selects every block.
CTCSet build_ctc_set(const LocalContext& ctx, std::optional<std::size_t> block, const Subgroup& z,
                     unsigned d);
/// Same, for a collection of blocks of ctx.top().
CTCSet build_ctc_set(const LocalContext& ctx, const std::vector<std::size_t>& blocks,
                     const Subgroup& z, unsigned d);
/// Reuses an existing chain enumeration.
CTCSet build_ctc_set(const LocalContext& ctx, std::vector<ChainOrbit> orbits, bool all_blocks,
                     const std::vector<std::size_t>& blocks, const Subgroup& z, unsigned d);

/// C^d_{Q-bar}: pair orbits whose second chain term is G-conjugate to Q
/// (as a sub-multiset of `set`), and C^d_Q counted by an independent route:
/// N_G(Q)-orbits of pairs whose second term is exactly Q, obtained from the
/// chains of N_G(Q) starting at Q with the start of `set` prepended.
struct SecondTermPartition {
  std::vector<CTCPair> bar_plus, bar_minus;  // subsets of set.plus / set.minus
  std::vector<ChainOrbit> exact_orbits;     // N_G(Q)-orbits of chains with D_1 = Q
  std::size_t exact_plus = 0, exact_minus = 0;
};
SecondTermPartition second_term_partition(const LocalContext& ctx, const CTCSet& set, const Subgroup& q);

/// G-classes of p-subgroups Q with U < Q^g < D for some g, as sorted
/// canonical representatives.
std::vector<Subgroup> mathcal_f_set(const Group& g, const Subgroup& u, const Subgroup& d, unsigned p);

/// Every pair chain of maximal defect can be conjugated to lie inside D:
/// true when each pair orbit of `set` with defect equal to log|D| has a
/// final term G-conjugate into D.
bool chains_conjugate_into(const Group& g, const CTCSet& set, const Subgroup& d);

/// Some x in G with h^x <= d.
std::optional<Perm> conjugate_into(const Group& g, const Subgroup& h, const Subgroup& d);

nlohmann::ordered_json subgroup_json(const Subgroup& h);
nlohmann::ordered_json chain_json(const ChainOrbit& orbit);
nlohmann::ordered_json ctc_set_json(const LocalContext& ctx, const CTCSet& set);

}  // namespace ctc
