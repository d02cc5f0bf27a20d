#include "ctc/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ctc/errors.hpp"

namespace ctc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Strict: return "strict";
    case Mode::Permissive: return "permissive";
    case Mode::BlockFree: return "blockfree";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["inputs"] = inputs;
  j["left"] = left ? nlohmann::ordered_json(*left) : nlohmann::ordered_json(nullptr);
  j["right"] = right ? nlohmann::ordered_json(*right) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(verdict);
  if (!note.empty()) j["note"] = note;
  j["witness"] = witness;
  return j;
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return 1;
  return 0;
}

namespace {

bool commutes(const Perm& a, const Perm& b) { return a * b == b * a; }

bool is_abelian(const Subgroup& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutes(gens[i], gens[j])) return false;
  return true;
}

bool is_central(const Group& g, const Subgroup& h) {
  for (const auto& x : h.generators())
    for (const auto& s : g.generators())
      if (!commutes(x, s)) return false;
  return true;
}

void require_normal_p_subgroup(const Group& g, const Subgroup& z, unsigned p) {
  for (const auto& x : z.generators())
    if (!g.contains(x)) throw InputError("start subgroup is not contained in G");
  if (!is_p_group(z, p)) throw InputError("start subgroup is not a p-group");
  if (!is_normal(g, z)) throw InputError("start subgroup is not normal in G");
}

nlohmann::ordered_json base_inputs(const LocalContext& ctx) {
  nlohmann::ordered_json j;
  j["group_order"] = ctx.group().order();
  j["prime"] = ctx.prime();
  return j;
}

nlohmann::ordered_json orbit_counts(const CTCSet& set) {
  std::vector<std::size_t> n(set.orbits.size(), 0);
  for (const auto* side : {&set.plus, &set.minus})
    for (const auto& pr : *side) ++n[pr.orbit];
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < set.orbits.size(); ++i) {
    nlohmann::ordered_json o;
    o["orbit"] = i;
    o["length"] = set.orbits[i].rep.length();
    o["sign"] = set.orbits[i].sign;
    std::vector<std::size_t> orders;
    for (const auto& t : set.orbits[i].rep.terms) orders.push_back(t.order());
    o["term_orders"] = orders;
    o["stabilizer_order"] = set.orbits[i].stabilizer.order();
    o["pairs"] = n[i];
    arr.push_back(o);
  }
  return arr;
}

// ---- ambient actions on pair orbits --------------------------------------------

std::size_t find_row(const CharTable& t, const std::vector<Cyclo>& values) {
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    bool eq = true;
    for (std::size_t k = 0; k < values.size() && eq; ++k) eq = (t.value(chi, k) == values[k]);
    if (eq) return chi;
  }
  throw InternalError("conjugated character matches no row of the table");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<std::size_t> orbit_lengths(UnionFind& uf, std::size_t n) {
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < n; ++i) ++sizes[uf.find(i)];
  std::vector<std::size_t> out;
  for (auto& [root, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbit-length multisets of N_A(Z)_B on C+/G and C-/G.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> ambient_orbits(const LocalContext& ctx,
                                                                              const CTCSet& set,
                                                                              const Group& a) {
  const Group& g = ctx.group();
  if (a.degree() != g.degree()) throw InputError("ambient group acts on a different number of points");
  for (const auto& x : g.generators())
    if (!a.contains(x)) throw InputError("G is not contained in the ambient group");
  for (const auto& y : a.generators())
    for (const auto& x : g.generators())
      if (!g.contains(x.conjugate_by(y))) throw InputError("G is not normal in the ambient group");

  const auto& cls = g.classes();
  std::vector<Perm> keep;
  for (const auto& y : a.elements()) {
    if (!set.start.is_normalized_by(y)) continue;
    bool stable = true;
    for (auto b : set.blocks) {
      const auto& lam = ctx.top().block(b).lambda.values;
      for (std::size_t k = 0; k < cls.size() && stable; ++k)
        stable = lam[g.class_of(cls[k].rep.conjugate_by(y))] == lam[k];
    }
    if (stable) keep.push_back(y);
  }
  Subgroup stab = Subgroup::from_sorted(std::move(keep));

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_plus, index_minus;
  for (std::size_t i = 0; i < set.plus.size(); ++i) index_plus[{set.plus[i].orbit, set.plus[i].chi}] = i;
  for (std::size_t i = 0; i < set.minus.size(); ++i) index_minus[{set.minus[i].orbit, set.minus[i].chi}] = i;

  UnionFind up(set.plus.size()), um(set.minus.size());
  for (const auto& y : stab.generators()) {
    if (g.contains(y)) continue;
    for (int side = 0; side < 2; ++side) {
      const auto& pairs = side == 0 ? set.plus : set.minus;
      auto& index = side == 0 ? index_plus : index_minus;
      auto& uf = side == 0 ? up : um;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& pr = pairs[i];
        PChain moved = set.orbits[pr.orbit].rep.conjugate(y);
        Perm x;
        PChain canon = canonical_chain(g, moved, &x);
        Perm w = y * x;
        std::size_t j = set.orbits.size();
        for (std::size_t k = 0; k < set.orbits.size(); ++k)
          if (set.orbits[k].rep == canon) {
            j = k;
            break;
          }
        if (j == set.orbits.size()) throw InternalError("ambient element moves a chain out of the set");
        const CharTable& src = set.stabilizer_blocks[pr.orbit]->table();
        const CharTable& dst = set.stabilizer_blocks[j]->table();
        Perm wi = w.inverse();
        std::vector<Cyclo> vals;
        for (const auto& c : dst.group().classes())
          vals.push_back(src.value(pr.chi, src.group().class_of(c.rep.conjugate_by(wi))));
        std::size_t chi = find_row(dst, vals);
        auto it = index.find({j, chi});
        if (it == index.end()) throw InternalError("ambient element moves a pair out of the set");
        uf.unite(i, it->second);
      }
    }
  }
  return {orbit_lengths(up, set.plus.size()), orbit_lengths(um, set.minus.size())};
}

}  // namespace

// ---- count checks ----------------------------------------------------------------

CheckReport verify_ctc_count(const LocalContext& ctx, std::size_t block, const Subgroup& z, unsigned d, Mode mode,
                             const Group* ambient) {
  const Group& g = ctx.group();
  unsigned p = ctx.prime();
  require_normal_p_subgroup(g, z, p);
  const Block& b = ctx.top().block(block);

  CheckReport r;
  r.check = "ctc-count";
  r.inputs = base_inputs(ctx);
  r.inputs["block"] = block;
  r.inputs["start_order"] = z.order();
  r.inputs["d"] = d;
  r.inputs["mode"] = to_string(mode);
  r.inputs["block_defect"] = b.defect;

  if (mode == Mode::Strict) {
    if (!(z == p_core(g, p))) {
      r.note = "start is not O_p(G)";
      return r;
    }
    if (!is_central(g, z)) {
      r.note = "O_p(G) is not central";
      return r;
    }
    if (is_central(g, b.defect_group)) {
      r.note = "central defect group";
      return r;
    }
  } else if (mode == Mode::Permissive) {
    if (b.defect <= log_p(z.order(), p)) {
      r.note = "d(B) does not exceed log_p|Z|";
      return r;
    }
  } else {
    throw InputError("block-free mode has its own check");
  }

  CTCSet set = build_ctc_set(ctx, std::optional<std::size_t>(block), z, d);
  r.left = set.plus.size();
  r.right = set.minus.size();
  r.verdict = *r.left == *r.right ? Verdict::Pass : Verdict::Fail;
  r.witness["orbits"] = orbit_counts(set);
  if (ambient) {
    auto [lp, lm] = ambient_orbits(ctx, set, *ambient);
    r.witness["ambient_orbit_lengths"] = {{"plus", lp}, {"minus", lm}};
    if (lp != lm) {
      r.verdict = Verdict::Fail;
      r.note = "ambient orbit lengths differ";
    }
  }
  return r;
}

CheckReport verify_am_count(const LocalContext& ctx, std::size_t block) {
  const Block& b = ctx.top().block(block);
  CheckReport r;
  r.check = "am-count";
  r.inputs = base_inputs(ctx);
  r.inputs["block"] = block;
  r.inputs["block_defect"] = b.defect;
  auto [nb, c] = ctx.brauer_correspondent(block);
  auto irr0 = ctx.top().height_zero(block);
  auto loc0 = nb->height_zero(c);
  r.left = irr0.size();
  r.right = loc0.size();
  r.verdict = irr0.size() == loc0.size() ? Verdict::Pass : Verdict::Fail;
  r.witness["defect_group"] = subgroup_json(b.defect_group);
  r.witness["normalizer_order"] = nb->group().order();
  r.witness["correspondent"] = c;
  std::vector<std::uint64_t> dl, dr;
  for (auto chi : irr0) dl.push_back(ctx.top().table().degree(chi));
  for (auto chi : loc0) dr.push_back(nb->table().degree(chi));
  r.witness["degrees_left"] = dl;
  r.witness["degrees_right"] = dr;
  return r;
}

std::vector<CheckReport> verify_max_defect_mode(const LocalContext& ctx, const Group* ambient) {
  const Group& g = ctx.group();
  Subgroup op = p_core(g, ctx.prime());
  Mode mode = is_central(g, op) ? Mode::Strict : Mode::Permissive;
  std::vector<CheckReport> out;
  for (const auto& b : ctx.top().blocks()) {
    if (is_central(g, b.defect_group)) {
      CheckReport r;
      r.check = "ctc-count";
      r.inputs = base_inputs(ctx);
      r.inputs["block"] = b.index;
      r.inputs["start_order"] = op.order();
      r.inputs["d"] = b.defect;
      r.inputs["mode"] = to_string(mode);
      r.inputs["block_defect"] = b.defect;
      r.note = "central defect group";
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(verify_ctc_count(ctx, b.index, op, b.defect, mode, ambient));
  }
  return out;
}

std::vector<CheckReport> verify_abelian_defect(const LocalContext& ctx) {
  const Group& g = ctx.group();
  unsigned p = ctx.prime();
  Subgroup op = p_core(g, p);
  unsigned m = log_p(op.order(), p);
  std::vector<CheckReport> out;
  for (const auto& b : ctx.top().blocks()) {
    CheckReport r;
    r.check = "abelian-defect";
    r.inputs = base_inputs(ctx);
    r.inputs["block"] = b.index;
    r.inputs["block_defect"] = b.defect;
    auto hts = ctx.top().heights(b.index);
    auto positive = nlohmann::ordered_json::array();
    for (const auto& h : hts)
      if (h.height > 0)
        positive.push_back({{"chi", h.chi}, {"degree", ctx.top().table().degree(h.chi)}, {"height", h.height}});
    r.witness["positive_heights"] = positive;
    if (!is_abelian(b.defect_group)) {
      r.note = "non-abelian defect group";
      out.push_back(std::move(r));
      continue;
    }
    r.verdict = positive.empty() ? Verdict::Pass : Verdict::Fail;
    if (!positive.empty()) r.note = "positive height in a block with abelian defect group";
    auto per_f = nlohmann::ordered_json::array();
    if (b.defect > m) {
      auto orbits = enumerate_chain_orbits(g, op, p, ctx.limits());
      for (unsigned f = m + 1; f <= b.defect; ++f) {
        CTCSet set = build_ctc_set(ctx, orbits, false, {b.index}, op, f);
        bool ok = set.plus.size() == set.minus.size();
        per_f.push_back({{"f", f}, {"plus", set.plus.size()}, {"minus", set.minus.size()}, {"verdict", ok ? "pass" : "fail"}});
        if (f == b.defect) {
          r.left = set.plus.size();
          r.right = set.minus.size();
        }
        if (!ok) {
          r.verdict = Verdict::Fail;
          if (r.note.empty()) r.note = "counts differ at f = " + std::to_string(f);
        }
      }
    }
    r.witness["per_f"] = per_f;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::size_t top_defect(const Group& g, unsigned p) { return log_p(p_part(g.order(), p), p); }

}  // namespace

CheckReport verify_blockfree(const LocalContext& ctx, const Subgroup& u) {
  const Group& g = ctx.group();
  unsigned p = ctx.prime();
  require_normal_p_subgroup(g, u, p);
  if (u.order() >= p_part(g.order(), p)) throw InputError("|U| must be smaller than |G|_p");
  unsigned d = static_cast<unsigned>(top_defect(g, p));
  CheckReport r;
  r.check = "blockfree-count";
  r.inputs = base_inputs(ctx);
  r.inputs["start_order"] = u.order();
  r.inputs["d"] = d;
  CTCSet set = build_ctc_set(ctx, std::nullopt, u, d);
  r.left = set.plus.size();
  r.right = set.minus.size();
  r.witness["orbits"] = orbit_counts(set);

  Subgroup n = normalizer(g, sylow(g, p));
  auto nb = ctx.blocks_of(n);
  std::size_t mg = p_prime_degree_set(ctx.top().table(), p).size();
  std::size_t mn = p_prime_degree_set(nb->table(), p).size();
  r.witness["mckay"] = {{"group", mg}, {"sylow_normalizer", mn}, {"normalizer_order", n.order()}};
  bool ok = *r.left == *r.right && mg == mn;
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (mg != mn) r.note = "McKay counts differ";
  return r;
}

CheckReport defect_support_scan(const LocalContext& ctx, const Subgroup& u) {
  const Group& g = ctx.group();
  unsigned p = ctx.prime();
  require_normal_p_subgroup(g, u, p);
  CheckReport r;
  r.check = "defect-scan";
  r.inputs = base_inputs(ctx);
  r.inputs["start_order"] = u.order();
  Subgroup s = sylow(g, p);
  if (!is_abelian(s)) {
    r.note = "non-abelian Sylow subgroup";
    return r;
  }
  unsigned d = static_cast<unsigned>(top_defect(g, p));
  r.inputs["d"] = d;
  auto orbits = enumerate_chain_orbits(g, u, p, ctx.limits());
  auto table = nlohmann::ordered_json::array();
  auto flags = nlohmann::ordered_json::array();
  for (unsigned f = 0; f <= d; ++f) {
    CTCSet set = build_ctc_set(ctx, orbits, true, {}, u, f);
    table.push_back({{"f", f}, {"plus", set.plus.size()}, {"minus", set.minus.size()}});
    if (f == d) {
      r.left = set.plus.size();
      r.right = set.minus.size();
    } else if (!set.plus.empty() || !set.minus.empty()) {
      auto pairs = nlohmann::ordered_json::array();
      for (const auto* side : {&set.plus, &set.minus})
        for (const auto& pr : *side)
          pairs.push_back({{"orbit", pr.orbit},
                           {"term_orders", [&] {
                              std::vector<std::size_t> o;
                              for (const auto& t : set.orbits[pr.orbit].rep.terms) o.push_back(t.order());
                              return o;
                            }()},
                           {"sign", set.orbits[pr.orbit].sign},
                           {"chi", pr.chi},
                           {"degree", set.stabilizer_blocks[pr.orbit]->table().degree(pr.chi)}});
      flags.push_back({{"f", f}, {"pairs", pairs}});
    }
  }
  r.witness["counts"] = table;
  r.witness["flags"] = flags;
  r.verdict = *r.left == *r.right ? Verdict::Pass : Verdict::Fail;
  if (!flags.empty()) r.note = "nonempty pair sets below the top defect (reported, not enforced)";
  return r;
}

// ---- Pi ------------------------------------------------------------------------

namespace {

struct CellKey {
  std::size_t orbit;
  std::size_t block;
  auto operator<=>(const CellKey&) const = default;
};

class PiBuilder {
 public:
  PiBuilder(const LocalContext& ctx, const CTCSet& set, const Subgroup& d)
      : ctx_(ctx), set_(set), d_(d), d_key_(canonical_conjugate(ctx.group(), d)) {}

  bool conjugate_to_d(const Subgroup& h) const {
    return h.order() == d_.order() && canonical_conjugate(ctx_.group(), h) == d_key_;
  }

  std::size_t orbit_of(const PChain& canon) const {
    for (std::size_t k = 0; k < set_.orbits.size(); ++k)
      if (set_.orbits[k].rep == canon) return k;
    throw InternalError("chain produced by the pairing is not in the chain set");
  }

  /// Image of the cell (orbit, block of its stabilizer) under delete/append.
  std::pair<CellKey, bool> image(const CellKey& c) const {
    const Group& g = ctx_.group();
    const ChainOrbit& o = set_.orbits[c.orbit];
    const BlockSystem& bs = *set_.stabilizer_blocks[c.orbit];
    if (o.rep.length() >= 1 && conjugate_to_d(o.rep.last())) {
      PChain rho = o.rep;
      rho.terms.pop_back();
      Perm x;
      PChain canon = canonical_chain(g, rho, &x);
      std::size_t j = orbit_of(canon);
      auto moved = ctx_.blocks_of(o.stabilizer.conjugate(x));
      std::size_t b = conjugate_block(bs, c.block, *moved, x);
      auto up = brauer_induce(*moved, b, *set_.stabilizer_blocks[j]);
      if (!up) throw InternalError("Brauer induction to the shorter chain's stabilizer is undefined");
      return {{j, *up}, true};
    }
    const Subgroup& q = bs.block(c.block).defect_group;
    if (!conjugate_to_d(q)) throw InternalError("block of a chain stabilizer has defect group not conjugate to D");
    PChain rho = append_final_term(g, o.rep, q);
    Subgroup stab = chain_stabilizer(g, rho);
    auto nb = ctx_.blocks_of(stab);
    std::size_t corr = brauer_correspondent(bs, c.block, *nb, q);
    Perm x;
    PChain canon = canonical_chain(g, rho, &x);
    std::size_t j = orbit_of(canon);
    return {{j, conjugate_block(*nb, corr, *set_.stabilizer_blocks[j], x)}, false};
  }

 private:
  const LocalContext& ctx_;
  const CTCSet& set_;
  Subgroup d_;
  Subgroup d_key_;
};

}  // namespace

PairingWitness build_pi_pairing(const LocalContext& ctx, std::size_t block) {
  const Group& g = ctx.group();
  unsigned p = ctx.prime();
  const Block& B = ctx.top().block(block);
  PairingWitness w;
  w.defect_group = B.defect_group;
  Subgroup op = p_core(g, p);
  if (!is_central(g, op)) {
    w.reason = "O_p(G) is not central";
    return w;
  }
  if (is_central(g, B.defect_group)) {
    w.reason = "central defect group";
    return w;
  }
  w.applicable = true;
  w.set = build_ctc_set(ctx, std::optional<std::size_t>(block), op, B.defect);
  const CTCSet& s = w.set;
  PiBuilder pi(ctx, s, B.defect_group);

  std::vector<bool> is_c1(s.orbits.size(), false);
  for (std::size_t i = 0; i < s.orbits.size(); ++i)
    is_c1[i] = s.orbits[i].rep.length() == 1 && pi.conjugate_to_d(s.orbits[i].rep.last());
  for (std::size_t i = 0; i < s.plus.size(); ++i)
    if (s.orbits[s.plus[i].orbit].rep.length() == 0) w.c0.push_back(i);
  for (std::size_t i = 0; i < s.minus.size(); ++i)
    if (is_c1[s.minus[i].orbit]) w.c1.push_back(i);

  std::map<CellKey, std::vector<std::size_t>> plus_cells, minus_cells;
  for (std::size_t i = 0; i < s.plus.size(); ++i) {
    const auto& pr = s.plus[i];
    if (s.orbits[pr.orbit].rep.length() == 0) continue;
    plus_cells[{pr.orbit, s.stabilizer_blocks[pr.orbit]->block_of(pr.chi)}].push_back(i);
  }
  for (std::size_t i = 0; i < s.minus.size(); ++i) {
    const auto& pr = s.minus[i];
    if (is_c1[pr.orbit]) continue;
    minus_cells[{pr.orbit, s.stabilizer_blocks[pr.orbit]->block_of(pr.chi)}].push_back(i);
  }

  w.bijective = true;
  w.counts_match = true;
  w.involution = true;
  std::set<CellKey> hit;
  for (const auto& [cell, members] : plus_cells) {
    auto [img, deleted] = pi.image(cell);
    auto it = minus_cells.find(img);
    std::size_t cnt = it == minus_cells.end() ? 0 : it->second.size();
    w.matches.push_back({{cell.orbit, cell.block, members.size()}, {img.orbit, img.block, cnt}, deleted});
    if (it == minus_cells.end() || !hit.insert(img).second) w.bijective = false;
    if (cnt != members.size()) w.counts_match = false;
    if (!(pi.image(img).first == cell)) w.involution = false;
  }
  if (hit.size() != minus_cells.size()) w.bijective = false;
  for (const auto& [cell, members] : minus_cells)
    if (!(pi.image(pi.image(cell).first).first == cell)) w.involution = false;

  if (w.bijective && w.counts_match && s.plus.size() == s.minus.size() && w.c0.size() == w.c1.size()) {
    RepairInput in;
    std::size_t n = s.plus.size();
    in.c0.assign(n, false);
    in.c1.assign(n, false);
    for (auto i : w.c0) in.c0[i] = true;
    for (auto i : w.c1) in.c1[i] = true;
    in.omega.resize(n);
    std::iota(in.omega.begin(), in.omega.end(), 0);
    in.pi.assign(n, std::nullopt);
    for (const auto& m : w.matches) {
      const auto& a = plus_cells.at({m.plus.orbit, m.plus.block});
      const auto& b = minus_cells.at({m.minus.orbit, m.minus.block});
      for (std::size_t k = 0; k < a.size(); ++k) in.pi[a[k]] = b[k];
    }
    RepairResult res = repair_bijection(in);
    for (std::size_t i = 0; i < n; ++i)
      if (in.c0[i] && !in.c1[res.map[i]]) w.repair_ok = false;
    w.repair = std::move(res);
  } else if (w.c0.size() != w.c1.size()) {
    w.repair_ok = false;
  }
  return w;
}

nlohmann::ordered_json PairingWitness::to_json() const {
  nlohmann::ordered_json j;
  j["applicable"] = applicable;
  if (!applicable) {
    j["reason"] = reason;
    return j;
  }
  j["defect_group"] = subgroup_json(defect_group);
  j["c0"] = c0.size();
  j["c1"] = c1.size();
  j["j_plus"] = set.plus.size() - c0.size();
  j["j_minus"] = set.minus.size() - c1.size();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : matches) {
    nlohmann::ordered_json e;
    e["plus"] = {{"orbit", m.plus.orbit}, {"block", m.plus.block}, {"count", m.plus.count}};
    e["minus"] = {{"orbit", m.minus.orbit}, {"block", m.minus.block}, {"count", m.minus.count}};
    e["move"] = m.by_deletion ? "delete" : "append";
    arr.push_back(e);
  }
  j["matches"] = arr;
  j["bijective"] = bijective;
  j["counts_match"] = counts_match;
  j["involution"] = involution;
  if (repair) {
    j["repaired_map"] = repair->map;
    j["swap_log"] = repair->swap_log;
  }
  j["repair_ok"] = repair_ok;
  return j;
}

// ---- repair ------------------------------------------------------------------

namespace {

void require_permutation(const std::vector<std::size_t>& v, std::size_t n, const char* what) {
  if (v.size() != n) throw InputError(std::string(what) + " has the wrong size");
  std::vector<bool> seen(n, false);
  for (auto x : v) {
    if (x >= n || seen[x]) throw InputError(std::string(what) + " is not a bijection");
    seen[x] = true;
  }
}

using ActionElement = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

std::vector<ActionElement> action_closure(const FiniteAction& act, std::size_t n) {
  ActionElement id;
  id.first.resize(n);
  id.second.resize(n);
  std::iota(id.first.begin(), id.first.end(), 0);
  std::iota(id.second.begin(), id.second.end(), 0);
  std::set<ActionElement> seen{id};
  std::vector<ActionElement> out{id};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k < act.on_plus.size(); ++k) {
      ActionElement e;
      e.first.resize(n);
      e.second.resize(n);
      for (std::size_t x = 0; x < n; ++x) {
        e.first[x] = act.on_plus[k][out[i].first[x]];
        e.second[x] = act.on_minus[k][out[i].second[x]];
      }
      if (seen.insert(e).second) {
        if (out.size() >= 100000) throw ResourceError("acting group too large");
        out.push_back(std::move(e));
      }
    }
  return out;
}

}  // namespace

RepairResult repair_bijection(const RepairInput& in, const FiniteAction* action) {
  std::size_t n = in.omega.size();
  if (in.c0.size() != n || in.c1.size() != n || in.pi.size() != n) throw InputError("repair inputs differ in size");
  require_permutation(in.omega, n, "Omega");
  std::size_t n0 = std::count(in.c0.begin(), in.c0.end(), true);
  std::size_t n1 = std::count(in.c1.begin(), in.c1.end(), true);
  if (n0 != n1) throw InputError("|C0| and |C1| differ");
  std::vector<std::size_t> pinv(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (in.c0[x]) {
      if (in.pi[x]) throw InputError("Pi is defined on C0");
      continue;
    }
    if (!in.pi[x]) throw InputError("Pi is undefined outside C0");
    std::size_t y = *in.pi[x];
    if (y >= n || in.c1[y]) throw InputError("Pi maps outside X- minus C1");
    if (pinv[y] != n) throw InputError("Pi is not injective");
    pinv[y] = x;
  }

  std::vector<ActionElement> elems;
  if (action) {
    if (action->on_plus.size() != action->on_minus.size()) throw InputError("action generator lists differ");
    for (std::size_t k = 0; k < action->on_plus.size(); ++k) {
      const auto& gp = action->on_plus[k];
      const auto& gm = action->on_minus[k];
      require_permutation(gp, n, "action on X+");
      require_permutation(gm, n, "action on X-");
      for (std::size_t x = 0; x < n; ++x) {
        if (in.c0[gp[x]] != in.c0[x] || in.c1[gm[x]] != in.c1[x]) throw InputError("marked subsets are not invariant");
        if (in.omega[gp[x]] != gm[in.omega[x]]) throw InputError("Omega is not equivariant");
        if (in.pi[x] && *in.pi[gp[x]] != gm[*in.pi[x]]) throw InputError("Pi is not equivariant");
      }
    }
    elems = action_closure(*action, n);
  }

  RepairResult r;
  r.map = in.omega;
  auto& cur = r.map;
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    if (!in.c0[x0] || in.c1[cur[x0]]) continue;
    std::vector<std::size_t> chase{x0};
    std::size_t x = x0;
    while (!in.c1[cur[x]]) {
      x = pinv[cur[x]];
      chase.push_back(x);
      if (chase.size() > n + 1) throw InternalError("repair chase does not terminate");
    }
    std::size_t xn = x;
    std::size_t img0 = cur[x0], imgn = cur[xn];
    if (action) {
      for (const auto& h : elems) {
        cur[h.first[x0]] = h.second[imgn];
        cur[h.first[xn]] = h.second[img0];
      }
    } else {
      std::swap(cur[x0], cur[xn]);
    }
    r.max_chase = std::max(r.max_chase, chase.size() - 1);
    r.swap_log.push_back(std::move(chase));
  }
  return r;
}

}  // namespace ctc
