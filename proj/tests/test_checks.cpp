#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ctc/checks.hpp"
#include "ctc/library.hpp"

using namespace ctc;

TEST_CASE("repair: two-element hand trace") {
  // X+ = {a0, a1}, X- = {b1, b2} as indices 0, 1
  RepairInput in;
  in.c0 = {true, false};
  in.c1 = {true, false};
  in.omega = {1, 0};
  in.pi = {std::nullopt, 1};
  auto r = repair_bijection(in);
  REQUIRE(r.map == std::vector<std::size_t>{0, 1});
  REQUIRE(r.swap_log == std::vector<std::vector<std::size_t>>{{0, 1}});
  REQUIRE(r.max_chase == 1);
}

TEST_CASE("repair leaves a good Omega alone") {
  RepairInput in;
  in.c0 = {true, false, false};
  in.c1 = {false, true, false};
  in.omega = {1, 2, 0};
  in.pi = {std::nullopt, 0, 2};
  auto r = repair_bijection(in);
  REQUIRE(r.map == in.omega);
  REQUIRE(r.swap_log.empty());
}

TEST_CASE("repair with a C2 action on 4 + 4 points") {
  // orbits {0,1}, {2,3} on both sides; C0 = {0,1}, C1 = {2,3}
  RepairInput in;
  in.c0 = {true, true, false, false};
  in.c1 = {false, false, true, true};
  in.omega = {0, 1, 2, 3};
  in.pi = {std::nullopt, std::nullopt, 1, 0};
  FiniteAction act{{{1, 0, 3, 2}}, {{1, 0, 3, 2}}};
  RepairInstance inst{in, act};
  auto r = repair_bijection(in, &act);
  REQUIRE(check_repair(inst, r).empty());
  REQUIRE(in.c1[r.map[0]]);
  REQUIRE(in.c1[r.map[1]]);
  for (std::size_t x = 0; x < 4; ++x) REQUIRE(r.map[act.on_plus[0][x]] == act.on_minus[0][r.map[x]]);
}

TEST_CASE("repair rejects malformed input") {
  RepairInput in;
  in.c0 = {true, false};
  in.c1 = {false, false};
  in.omega = {0, 1};
  in.pi = {std::nullopt, 1};
  REQUIRE_THROWS_AS(repair_bijection(in), InputError);  // |C0| != |C1|
  in.c1 = {true, false};
  in.omega = {0, 0};
  REQUIRE_THROWS_AS(repair_bijection(in), InputError);  // Omega not a bijection
  in.omega = {0, 1};
  in.pi = {0, 1};
  REQUIRE_THROWS_AS(repair_bijection(in), InputError);  // Pi defined on C0
  in.pi = {std::nullopt, 0};
  REQUIRE_THROWS_AS(repair_bijection(in), InputError);  // Pi hits C1
  in.pi = {std::nullopt, 1};
  FiniteAction bad{{{1, 0}}, {{0, 1}}};
  REQUIRE_THROWS_AS(repair_bijection(in, &bad), InputError);
}

TEST_CASE("repair on random instances") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 2000; ++trial) {
    bool act = trial % 2;
    auto inst = random_repair_instance(rng, 64, act);
    auto r = repair_bijection(inst.input, inst.action ? &*inst.action : nullptr);
    INFO("trial " << trial);
    REQUIRE(check_repair(inst, r).empty());
  }
}

TEST_CASE("check_repair catches a broken map") {
  std::mt19937_64 rng(7);
  RepairInstance inst;
  do inst = random_repair_instance(rng, 12, false);
  while (std::count(inst.input.c0.begin(), inst.input.c0.end(), true) == 0);
  auto r = repair_bijection(inst.input);
  auto broken = r;
  broken.map[0] = broken.map[1];
  REQUIRE_FALSE(check_repair(inst, broken).empty());
}

TEST_CASE("CTC counts") {
  LocalContext a5(library_group("A5"), 2);
  auto r = verify_ctc_count(a5, 0, Subgroup::trivial(5), 2, Mode::Strict);
  REQUIRE(r.verdict == Verdict::Pass);
  REQUIRE(r.left == std::optional<std::size_t>(8));
  REQUIRE(r.right == std::optional<std::size_t>(8));
  REQUIRE(verify_ctc_count(a5, 1, Subgroup::trivial(5), 0, Mode::Strict).verdict == Verdict::NotApplicable);

  auto s4g = library_group("S4");
  LocalContext s4(s4g, 2);
  Subgroup op = p_core(*s4g, 2);
  REQUIRE(verify_ctc_count(s4, 0, op, 3, Mode::Strict).verdict == Verdict::NotApplicable);
  auto pr = verify_ctc_count(s4, 0, op, 3, Mode::Permissive);
  REQUIRE(pr.verdict == Verdict::Pass);
  REQUIRE(pr.left == std::optional<std::size_t>(4));
  REQUIRE(verify_ctc_count(s4, 0, op, 2, Mode::Permissive).left == std::optional<std::size_t>(1));
}

TEST_CASE("ambient orbit lengths") {
  LocalContext a5(library_group("A5"), 2);
  auto s5 = library_group("S5");
  auto r = verify_ctc_count(a5, 0, Subgroup::trivial(5), 2, Mode::Strict, s5.get());
  REQUIRE(r.verdict == Verdict::Pass);
  REQUIRE(r.witness["ambient_orbit_lengths"]["plus"] == r.witness["ambient_orbit_lengths"]["minus"]);
  auto reps = verify_max_defect_mode(a5, s5.get());
  REQUIRE(exit_code(reps) == 0);
}

TEST_CASE("AM counts") {
  LocalContext s4(library_group("S4"), 3);
  for (std::size_t b = 0; b < s4.top().blocks().size(); ++b)
    REQUIRE(verify_am_count(s4, b).verdict == Verdict::Pass);
  auto r = verify_am_count(s4, 0);
  REQUIRE(r.left == std::optional<std::size_t>(3));
}

TEST_CASE("abelian defect groups") {
  LocalContext a5(library_group("A5"), 2);
  auto reps = verify_abelian_defect(a5);
  REQUIRE(reps.size() == 2);
  REQUIRE(reps[0].verdict == Verdict::Pass);
  LocalContext s4(library_group("S4"), 2);
  auto nonab = verify_abelian_defect(s4);
  REQUIRE(nonab[0].verdict == Verdict::NotApplicable);
  REQUIRE(nonab[0].witness["positive_heights"].size() == 1);
}

TEST_CASE("block-free counts and McKay") {
  for (const char* name : {"A5", "S4", "SL23", "S5"}) {
    auto g = library_group(name);
    for (unsigned p : {2u, 3u, 5u}) {
      if (g->order() % p) continue;
      INFO(name << " p=" << p);
      LocalContext ctx(g, p);
      REQUIRE(verify_blockfree(ctx, Subgroup::trivial(g->degree())).verdict == Verdict::Pass);
    }
  }
  LocalContext a4(library_group("A4"), 2);
  REQUIRE_THROWS_AS(verify_blockfree(a4, sylow(a4.group(), 2)), InputError);
}

TEST_CASE("defect scan flags low defects for A5") {
  LocalContext a5(library_group("A5"), 2);
  auto r = defect_support_scan(a5, Subgroup::trivial(5));
  REQUIRE(r.verdict == Verdict::Pass);
  REQUIRE_FALSE(r.witness["flags"].empty());
}

TEST_CASE("pairing on A5") {
  LocalContext a5(library_group("A5"), 2);
  auto w = build_pi_pairing(a5, 0);
  REQUIRE(w.applicable);
  REQUIRE(w.bijective);
  REQUIRE(w.counts_match);
  REQUIRE(w.involution);
  REQUIRE(w.ok());
  for (const auto& m : w.matches) {
    REQUIRE(w.set.orbits[m.plus.orbit].sign == 1);
    REQUIRE(w.set.orbits[m.minus.orbit].sign == -1);
    REQUIRE(m.plus.count == m.minus.count);
  }
  LocalContext s4(library_group("S4"), 2);
  REQUIRE_FALSE(build_pi_pairing(s4, 0).applicable);
}

TEST_CASE("exit codes") {
  CheckReport pass, fail, na;
  pass.verdict = Verdict::Pass;
  fail.verdict = Verdict::Fail;
  na.verdict = Verdict::NotApplicable;
  REQUIRE(exit_code({pass, na}) == 0);
  REQUIRE(exit_code({pass, fail}) == 1);
  REQUIRE(exit_code({}) == 0);
  REQUIRE(std::string(to_string(Verdict::NotApplicable)) == "not-applicable");
}
