// Acceptance run over the library corpus: one PASS/FAIL line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "ctc/blocks.hpp"
#include "ctc/chains.hpp"
#include "ctc/char_table.hpp"
#include "ctc/checks.hpp"
#include "ctc/library.hpp"

using namespace ctc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t cases = 0;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::map<std::string, GroupPtr> corpus;
std::map<std::pair<std::string, unsigned>, std::unique_ptr<LocalContext>> contexts;

std::vector<unsigned> primes_of(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  return out;
}

LocalContext& ctx(const std::string& name, unsigned p) {
  auto& slot = contexts[{name, p}];
  if (!slot) slot = std::make_unique<LocalContext>(corpus.at(name), p);
  return *slot;
}

std::string tag(const std::string& name, unsigned p, std::size_t b) {
  return name + " p=" + std::to_string(p) + " block " + std::to_string(b);
}

void check_reports(Outcome& o, const std::string& where, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    ++o.cases;
    if (r.verdict == Verdict::Fail) o.fail(where + ": " + r.check + " " + r.inputs.dump() + " " + r.note);
  }
}

Outcome table_validity() {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    auto t = character_table(g);
    std::uint64_t s = 0;
    for (auto d : t->degrees()) s += d * d;
    if (!t->orthogonality_holds()) o.fail(name + ": orthogonality");
    if (s != g->order()) o.fail(name + ": degree sum");
    if (t->size() != g->classes().size()) o.fail(name + ": table is not square");
    ++o.cases;
  }
  return o;
}

Outcome block_axioms() {
  Outcome o;
  for (const auto& [name, g] : corpus)
    for (unsigned p : primes_of(g->order())) {
      const auto& bs = ctx(name, p).top();
      Subgroup op = p_core(*g, p);
      std::vector<int> seen(bs.table().size(), 0);
      std::size_t principals = 0;
      for (const auto& b : bs.blocks()) {
        ++o.cases;
        unsigned mx = 0;
        for (auto chi : b.members) {
          ++seen[chi];
          mx = std::max(mx, bs.char_defect(chi));
        }
        if (b.defect != mx) o.fail(tag(name, p, b.index) + ": defect is not the maximal member defect");
        if (!is_p_group(b.defect_group, p) || log_p(b.defect_group.order(), p) != b.defect)
          o.fail(tag(name, p, b.index) + ": defect group order");
        if (!op.is_subgroup_of(b.defect_group)) o.fail(tag(name, p, b.index) + ": O_p not in the defect group");
        principals += b.principal;
      }
      if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        o.fail(name + " p=" + std::to_string(p) + ": blocks do not partition Irr(G)");
      if (principals != 1 || !bs.block(0).principal || bs.block_of(0) != 0)
        o.fail(name + " p=" + std::to_string(p) + ": principal block");
    }
  return o;
}

Outcome brauer_machinery() {
  Outcome o;
  for (const auto& [name, g] : corpus)
    for (unsigned p : primes_of(g->order())) {
      auto& c = ctx(name, p);
      for (std::size_t b = 0; b < c.top().blocks().size(); ++b) {
        ++o.cases;
        auto [nb, idx] = c.brauer_correspondent(b);
        if (nb->block(idx).defect != c.top().block(b).defect) o.fail(tag(name, p, b) + ": correspondent defect");
        if (brauer_induce(*nb, idx, c.top()) != std::optional<std::size_t>(b))
          o.fail(tag(name, p, b) + ": correspondent does not induce back");
      }
      // normalizers of p-subgroups contain the centralizer of a Sylow of their own
      for (const auto& cls : p_subgroup_classes(*g, p)) {
        ++o.cases;
        auto sub = c.blocks_of(cls.normalizer);
        if (brauer_induce(*sub, sub->principal(), c.top()) != std::optional<std::size_t>(0))
          o.fail(name + " p=" + std::to_string(p) + ": principal block of N(Q), |Q|=" +
                 std::to_string(cls.rep.order()) + " does not induce to the principal block");
      }
    }
  return o;
}

Outcome ctc_strict_p2() {
  Outcome o;
  std::size_t passes = 0;
  for (const auto& [name, g] : corpus) {
    if (g->order() % 2) continue;
    auto& c = ctx(name, 2);
    Subgroup op = p_core(*g, 2);
    Subgroup z = center(*g);
    for (const auto& b : c.top().blocks()) {
      if (b.defect_group.is_subgroup_of(z)) continue;
      auto r = verify_ctc_count(c, b.index, op, b.defect, Mode::Strict);
      check_reports(o, tag(name, 2, b.index), {r});
      passes += r.verdict == Verdict::Pass;
    }
    check_reports(o, name, verify_max_defect_mode(c));
  }
  o.detail = o.ok ? std::to_string(passes) + " strict passes" : o.detail;
  return o;
}

Outcome am_counts() {
  Outcome o;
  for (const auto& [name, g] : corpus)
    for (unsigned p : primes_of(g->order())) {
      auto& c = ctx(name, p);
      for (std::size_t b = 0; b < c.top().blocks().size(); ++b) {
        auto r = verify_am_count(c, b);
        check_reports(o, tag(name, p, b), {r});
        if (r.verdict != Verdict::Pass) o.fail(tag(name, p, b) + ": not checked");
      }
    }
  return o;
}

Outcome abelian_defect_p2() {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    if (g->order() % 2) continue;
    check_reports(o, name, verify_abelian_defect(ctx(name, 2)));
  }
  return o;
}

Outcome blockfree() {
  Outcome o;
  for (const auto& [name, g] : corpus)
    for (unsigned p : {2u, 3u, 5u}) {
      if (g->order() % p) continue;
      auto r = verify_blockfree(ctx(name, p), Subgroup::trivial(g->degree()));
      check_reports(o, name + " p=" + std::to_string(p), {r});
      if (r.verdict != Verdict::Pass) o.fail(name + " p=" + std::to_string(p) + ": not checked");
    }
  return o;
}

Outcome pairing_and_repair() {
  Outcome o;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10000; ++trial) {
    ++o.cases;
    auto inst = random_repair_instance(rng, 64, trial % 2 == 1);
    auto r = repair_bijection(inst.input, inst.action ? &*inst.action : nullptr);
    if (auto why = check_repair(inst, r); !why.empty()) o.fail("repair trial " + std::to_string(trial) + ": " + why);
  }
  std::size_t applicable = 0;
  for (const auto& [name, g] : corpus)
    for (unsigned p : primes_of(g->order())) {
      auto& c = ctx(name, p);
      for (std::size_t b = 0; b < c.top().blocks().size(); ++b) {
        ++o.cases;
        auto w = build_pi_pairing(c, b);
        applicable += w.applicable;
        if (!w.ok()) o.fail(tag(name, p, b) + ": pairing " + w.to_json().dump());
      }
    }
  if (o.ok) o.detail = std::to_string(applicable) + " pairings applicable";
  return o;
}

Outcome a5_fixture() {
  Outcome o;
  LocalContext c(library_group("A5"), 2);
  auto set = build_ctc_set(c, std::optional<std::size_t>(0), Subgroup::trivial(5), 2);
  std::ifstream in(CTC_FIXTURE_DIR "/a5_p2_chains.json");
  if (!in) {
    o.fail("fixture file missing");
    return o;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  ++o.cases;
  if (ctc_set_json(c, set).dump(2) + "\n" != ss.str()) o.fail("emitted JSON differs from the fixture");
  std::vector<std::size_t> stab;
  for (const auto& orb : set.orbits) stab.push_back(orb.stabilizer.order());
  if (stab != std::vector<std::size_t>{60, 4, 12, 4} || set.plus.size() != 8 || set.minus.size() != 8)
    o.fail("orbit data");
  return o;
}

}  // namespace

int main() {
  for (const auto& name : library_corpus()) corpus[name] = library_group(name);
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 character tables: orthogonality and degree sums", table_validity},
      {"2 block axioms", block_axioms},
      {"3 Brauer correspondents and principal-block induction", brauer_machinery},
      {"4 CTC counts at p=2, maximal defect, strict mode", ctc_strict_p2},
      {"5 AM counts at every prime", am_counts},
      {"6 abelian defect 2-blocks: heights and all admissible f", abelian_defect_p2},
      {"7 block-free counts and McKay at p=2,3,5", blockfree},
      {"8 repair trials and Pi pairings", pairing_and_repair},
      {"9 A5 chain fixture", a5_fixture},
  };
  std::cout << "corpus: " << corpus.size() << " groups\n";
  bool all = true;
  for (const auto& [label, fn] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << label << " [" << o.cases << " cases, " << secs << " s]";
    if (!o.detail.empty()) std::cout << " - " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
