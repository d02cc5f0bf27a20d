#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctc/blocks.hpp"
#include "ctc/chains.hpp"

namespace ctc {

enum class Verdict { Pass, Fail, NotApplicable };
enum class Mode { Strict, Permissive, BlockFree };

const char* to_string(Verdict v);
const char* to_string(Mode m);

struct CheckReport {
  std::string check;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::optional<std::size_t> left, right;
  Verdict verdict = Verdict::NotApplicable;
  std::string note;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

/// |C^d(B,Z)+/G| against |C^d(B,Z)-/G|. Strict mode needs Z = O_p(G) <= Z(G)
/// and a non-central defect group; permissive mode needs d(B) > log_p|Z|.
/// Otherwise the verdict is not-applicable. With an ambient group A (G normal
/// in A, same degree) the multisets of N_A(Z)_B-orbit lengths on the two
/// sides must also agree.
CheckReport verify_ctc_count(const LocalContext& ctx, std::size_t block, const Subgroup& z, unsigned d,
                             Mode mode, const Group* ambient = nullptr);

/// |Irr_0(B)| against |Irr_0(b)|, b the Brauer correspondent in N_G(D).
CheckReport verify_am_count(const LocalContext& ctx, std::size_t block);

/// verify_ctc_count at d = d(B) for every block with non-central defect
/// groups, with Z = O_p(G): strict mode when O_p(G) is central, permissive
/// mode otherwise.
std::vector<CheckReport> verify_max_defect_mode(const LocalContext& ctx, const Group* ambient = nullptr);

/// For blocks with abelian defect groups: all heights are zero and the
/// counts agree at every f with log_p|O_p(G)| < f <= d(B). Blocks with
/// non-abelian defect groups are not-applicable, with the positive-height
/// characters listed.
std::vector<CheckReport> verify_abelian_defect(const LocalContext& ctx);

/// Block-free counts at d = log_p|G|_p together with the McKay count
/// |Irr_p'(G)| = |Irr_p'(N_G(P))|.
CheckReport verify_blockfree(const LocalContext& ctx, const Subgroup& u);

/// Block-free counts at every 0 <= f <= log_p|G|_p for groups with abelian
/// Sylow p-subgroups; nonempty sets at f below the top defect are listed in
/// the witness as flags.
CheckReport defect_support_scan(const LocalContext& ctx, const Subgroup& u);

// ---- the pairing Pi and the repair of Omega ------------------------------------

/// A finite group acting on both X+ and X- through generator images.
struct FiniteAction {
  std::vector<std::vector<std::size_t>> on_plus;
  std::vector<std::vector<std::size_t>> on_minus;
};

struct RepairInput {
  std::vector<bool> c0;                          // marks on X+
  std::vector<bool> c1;                          // marks on X-
  std::vector<std::size_t> omega;                // X+ -> X-
  std::vector<std::optional<std::size_t>> pi;    // X+ \ C0 -> X- \ C1, unset on C0
};

struct RepairResult {
  std::vector<std::size_t> map;
  std::vector<std::vector<std::size_t>> swap_log;  // x_0, ..., x_n per chase
  std::size_t max_chase = 0;
};

/// A cell is a chain orbit together with a block b of its stabilizer with
/// b^G = B; its size is |Irr^d(b)|.
struct PiCell {
  std::size_t orbit = 0;
  std::size_t block = 0;
  std::size_t count = 0;
};

struct PiMatch {
  PiCell plus, minus;
  bool by_deletion = false;  // plus -> minus removes the final term
};

struct PairingWitness {
  bool applicable = false;
  std::string reason;
  CTCSet set;
  Subgroup defect_group;
  std::vector<std::size_t> c0, c1;  // indices into set.plus / set.minus
  std::vector<PiMatch> matches;
  bool bijective = false;
  bool counts_match = false;
  bool involution = false;
  /// Pair-level run of the repair on Omega = index order, when |C+| = |C-|.
  std::optional<RepairResult> repair;
  bool repair_ok = true;

  bool ok() const { return !applicable || (bijective && counts_match && involution && repair_ok); }
  nlohmann::ordered_json to_json() const;
};

/// The sign-reversing pairing of J+ against J- (pair orbits off the chains
/// {O_p(G)} and {O_p(G) < D}) by deleting a final term conjugate to D or
/// appending the defect group of the relevant block of the stabilizer.
PairingWitness build_pi_pairing(const LocalContext& ctx, std::size_t block);

/// Builds Omega' with Omega'(C0) = C1 by chasing x_i = Pi^-1(Omega(x_{i-1}))
/// from each x_0 in C0 with Omega(x_0) outside C1 until Omega(x_n) lies in
/// C1, then exchanging the images of x_0 and x_n. With an action, Omega and
/// Pi must be equivariant and whole orbits are exchanged, so the result is
/// equivariant too. Throws InputError on malformed input.
RepairResult repair_bijection(const RepairInput& in, const FiniteAction* action = nullptr);

/// Exit code for a batch: 0 all pass or not-applicable, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace ctc
