#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ctc/checks.hpp"
#include "ctc/group.hpp"

namespace ctc {

/// Named groups:
///   Cn       cyclic of order n on n points
///   Dn       dihedral of order n (n even) on n/2 points; D4 is the Klein group on 4 points
///   V4       Klein four-group on 4 points
///   Sn, An   symmetric and alternating groups on n <= 7 points
///   Q8       quaternion group, regular on 8 points
///   SL23     SL(2,3) on the 8 nonzero vectors of F_3^2
///   F20, F21 Frobenius groups 5:4 and 7:3, affine on 5 and 7 points
///   M(m,n,r) x -> r^i x + b on Z_m, order m n, where r has order n mod m
///   GxH      direct product on the disjoint union of the point sets
GroupPtr library_group(const std::string& name, const Limits& limits = {});

/// The names accepted by library_group that make up the test corpus.
std::vector<std::string> library_corpus();

/// Text format: one "degree: N" line, then "gen: (a b c)(d e)" lines with
/// points 0..N-1. '#' starts a comment.
GroupPtr parse_group(std::istream& in, const Limits& limits = {});
GroupPtr load_group_file(const std::string& path, const Limits& limits = {});

/// "trivial", "Op" (O_p(G)), "center", "sylow", or "gens:" followed by
/// generators separated by ';', e.g. "gens:(0 1)(2 3);(0 2)(1 3)".
Subgroup parse_subgroup_spec(const std::string& spec, const Group& g, unsigned p, const Limits& limits = {});

/// A random instance for repair_bijection: |X+| = |X-| = n <= max_size with
/// random Omega, Pi and marked sets. With `with_action` a C2 action is
/// attached, and Omega and Pi are equivariant.
struct RepairInstance {
  RepairInput input;
  std::optional<FiniteAction> action;
};
RepairInstance random_repair_instance(std::mt19937_64& rng, std::size_t max_size, bool with_action);

/// Checks bijectivity, C0 -> C1, agreement with Omega away from the chased
/// elements, chase length, and equivariance; returns an empty string on
/// success or a description of the first violation.
std::string check_repair(const RepairInstance& inst, const RepairResult& r);

}  // namespace ctc
