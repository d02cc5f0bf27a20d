#include "ctc/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

int compare_terms(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

void require_chain(const PChain& c) {
  if (c.terms.empty()) throw InputError("empty chain");
}

}  // namespace

PChain PChain::conjugate(const Perm& g) const {
  PChain out;
  out.terms.reserve(terms.size());
  for (const auto& t : terms) out.terms.push_back(t.conjugate(g));
  return out;
}

bool chain_less(const PChain& a, const PChain& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_terms(a.terms[i], b.terms[i]);
    if (c) return c < 0;
  }
  return a.terms.size() < b.terms.size();
}

Subgroup chain_stabilizer(const Group& g, const PChain& chain) {
  require_chain(chain);
  std::vector<Perm> out;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& t : chain.terms)
      if (!t.is_normalized_by(x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::from_sorted(std::move(out));
}

PChain canonical_chain(const Group& g, const PChain& chain, Perm* conjugator) {
  require_chain(chain);
  std::size_t n = chain.terms.size();
  std::vector<bool> fixed(n);
  for (std::size_t i = 0; i < n; ++i) fixed[i] = is_normal(g, chain.terms[i]);

  std::vector<std::vector<Perm>> best;
  Perm best_x = g.identity();
  std::vector<Perm> buf;
  for (const auto& x : g.elements()) {
    bool take = best.empty();
    std::vector<std::vector<Perm>> cand;
    if (!take) cand.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& src = chain.terms[i].elements();
      if (fixed[i]) {
        buf = src;
      } else {
        buf.resize(src.size());
        for (std::size_t k = 0; k < src.size(); ++k) buf[k] = src[k].conjugate_by(x);
        std::sort(buf.begin(), buf.end());
      }
      if (!take) {
        if (buf > best[i]) break;
        if (buf < best[i]) take = true;
      }
      cand.push_back(buf);
    }
    if (take && cand.size() == n) {
      best = std::move(cand);
      best_x = x;
    }
  }
  if (conjugator) *conjugator = best_x;
  PChain out;
  for (auto& e : best) out.terms.push_back(Subgroup::from_sorted(std::move(e)));
  return out;
}

std::vector<ChainOrbit> enumerate_chain_orbits(const Group& g, const Subgroup& z, unsigned p,
                                               const Limits& limits) {
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
  for (const auto& x : z.generators())
    if (!g.contains(x)) throw InputError("start subgroup is not contained in G");
  if (!is_p_group(z, p)) throw InputError("start subgroup is not a p-group");
  if (!is_normal(g, z)) throw InputError("start subgroup is not normal in G");

  struct Raw {
    PChain chain;
    Subgroup stab;
  };
  std::vector<Raw> raw;
  auto visit = [&](auto&& self, PChain chain, Subgroup stab) -> void {
    if (raw.size() >= limits.max_subgroup_classes)
      throw ResourceError("number of chain orbits exceeds configured ceiling");
    Group sg(stab, limits);
    raw.push_back({chain, stab});
    for (auto& cls : p_subgroup_classes_above(sg, p, chain.last(), limits)) {
      if (cls.rep.order() == chain.last().order()) continue;
      PChain next = chain;
      next.terms.push_back(cls.rep);
      self(self, std::move(next), std::move(cls.normalizer));
    }
  };
  visit(visit, PChain{{z}}, g.as_subgroup());

  std::vector<ChainOrbit> out;
  out.reserve(raw.size());
  for (auto& r : raw) {
    Perm x;
    ChainOrbit o;
    o.rep = canonical_chain(g, r.chain, &x);
    o.stabilizer = r.stab.conjugate(x);
    o.orbit_size = g.order() / o.stabilizer.order();
    o.sign = o.rep.sign();
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const ChainOrbit& a, const ChainOrbit& b) {
    if (a.rep.length() != b.rep.length()) return a.rep.length() < b.rep.length();
    return chain_less(a.rep, b.rep);
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].rep == out[i - 1].rep) throw InternalError("chain orbit enumerated twice");
  return out;
}

PChain delete_first_term(const PChain& chain) {
  require_chain(chain);
  if (chain.length() == 0) throw InputError("cannot delete the only term of a chain");
  PChain out;
  out.terms.assign(chain.terms.begin() + 1, chain.terms.end());
  return out;
}

PChain append_final_term(const Group& g, const PChain& chain, const Subgroup& d) {
  require_chain(chain);
  const Subgroup& last = chain.last();
  if (d.order() <= last.order() || !last.is_subgroup_of(d))
    throw InputError("new term must strictly contain the final term");
  for (const auto& x : d.generators())
    if (!g.contains(x)) throw InputError("new term is not contained in G");
  for (const auto& t : chain.terms)
    for (const auto& x : d.generators())
      if (!t.is_normalized_by(x)) throw InputError("new term does not normalize every chain term");
  PChain out = chain;
  out.terms.push_back(d);
  return out;
}

// ---- pair sets -----------------------------------------------------------------

std::vector<CTCPair> CTCSet::pairs_of(std::size_t orbit) const {
  std::vector<CTCPair> out;
  for (const auto* side : {&plus, &minus})
    for (const auto& pr : *side)
      if (pr.orbit == orbit) out.push_back(pr);
  return out;
}

namespace {

struct InducedBlocks {
  const LocalContext& ctx;
  std::map<std::pair<const BlockSystem*, std::size_t>, std::optional<std::size_t>> memo;

  std::optional<std::size_t> operator()(const BlockSystem& bs, std::size_t b) {
    auto key = std::make_pair(&bs, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto r = brauer_induce(bs, b, ctx.top());
    memo.emplace(key, r);
    return r;
  }
};

void collect_pairs(std::size_t index, bool all_blocks, const std::vector<std::size_t>& blocks, unsigned d,
                   int sign, InducedBlocks& induce, const BlockSystemPtr& bs, std::vector<CTCPair>& plus,
                   std::vector<CTCPair>& minus) {
  for (std::size_t chi = 0; chi < bs->table().size(); ++chi) {
    if (bs->char_defect(chi) != d) continue;
    auto up = induce(*bs, bs->block_of(chi));
    if (!all_blocks && (!up || std::find(blocks.begin(), blocks.end(), *up) == blocks.end())) continue;
    CTCPair pr{index, chi, d, up};
    (sign > 0 ? plus : minus).push_back(pr);
  }
}

}  // namespace

CTCSet build_ctc_set(const LocalContext& ctx, std::vector<ChainOrbit> orbits, bool all_blocks,
                     const std::vector<std::size_t>& blocks, const Subgroup& z, unsigned d) {
  for (auto b : blocks)
    if (b >= ctx.top().blocks().size()) throw InputError("block index out of range");
  CTCSet s;
  s.all_blocks = all_blocks;
  if (!all_blocks) s.blocks = blocks;
  s.start = z;
  s.d = d;
  s.orbits = std::move(orbits);
  InducedBlocks induce{ctx, {}};
  for (std::size_t i = 0; i < s.orbits.size(); ++i) {
    auto bs = ctx.blocks_of(s.orbits[i].stabilizer);
    s.stabilizer_blocks.push_back(bs);
    collect_pairs(i, all_blocks, s.blocks, d, s.orbits[i].sign, induce, bs, s.plus, s.minus);
  }
  return s;
}

CTCSet build_ctc_set(const LocalContext& ctx, const std::vector<std::size_t>& blocks, const Subgroup& z,
                     unsigned d) {
  return build_ctc_set(ctx, enumerate_chain_orbits(ctx.group(), z, ctx.prime(), ctx.limits()), false,
                       blocks, z, d);
}

CTCSet build_ctc_set(const LocalContext& ctx, std::optional<std::size_t> block, const Subgroup& z,
                     unsigned d) {
  auto orbits = enumerate_chain_orbits(ctx.group(), z, ctx.prime(), ctx.limits());
  if (!block) return build_ctc_set(ctx, std::move(orbits), true, {}, z, d);
  return build_ctc_set(ctx, std::move(orbits), false, {*block}, z, d);
}

SecondTermPartition second_term_partition(const LocalContext& ctx, const CTCSet& set, const Subgroup& q) {
  const Group& g = ctx.group();
  if (q.order() <= set.start.order() || !set.start.is_subgroup_of(q))
    throw InputError("Q must strictly contain the start of the chains");
  Subgroup key = canonical_conjugate(g, q);

  SecondTermPartition out;
  std::vector<bool> hit(set.orbits.size(), false);
  for (std::size_t i = 0; i < set.orbits.size(); ++i) {
    const auto& rep = set.orbits[i].rep;
    hit[i] = rep.length() >= 1 && rep.terms[1].order() == q.order() && canonical_conjugate(g, rep.terms[1]) == key;
  }
  for (const auto& pr : set.plus)
    if (hit[pr.orbit]) out.bar_plus.push_back(pr);
  for (const auto& pr : set.minus)
    if (hit[pr.orbit]) out.bar_minus.push_back(pr);

  LocalContext sub = ctx.sub_context(normalizer(g, q));
  InducedBlocks induce{ctx, {}};
  std::vector<CTCPair> plus, minus;
  for (auto& o : enumerate_chain_orbits(sub.group(), q, ctx.prime(), ctx.limits())) {
    ChainOrbit full;
    full.rep.terms.push_back(set.start);
    for (auto& t : o.rep.terms) full.rep.terms.push_back(t);
    full.stabilizer = o.stabilizer;
    full.orbit_size = sub.group().order() / o.stabilizer.order();
    full.sign = full.rep.sign();
    auto bs = ctx.blocks_of(full.stabilizer);
    collect_pairs(out.exact_orbits.size(), set.all_blocks, set.blocks, set.d, full.sign, induce, bs, plus,
                  minus);
    out.exact_orbits.push_back(std::move(full));
  }
  out.exact_plus = plus.size();
  out.exact_minus = minus.size();
  return out;
}

std::vector<Subgroup> mathcal_f_set(const Group& g, const Subgroup& u, const Subgroup& d, unsigned p) {
  if (!u.is_subgroup_of(d) || u.order() == d.order()) throw InputError("U must be a proper subgroup of D");
  std::set<Subgroup> reps;
  for (const auto& t : subgroups_of_p_group(d, p, u)) {
    if (t.order() == u.order() || t.order() == d.order()) continue;
    reps.insert(canonical_conjugate(g, t));
  }
  std::vector<Subgroup> out(reps.begin(), reps.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return compare_terms(a, b) < 0; });
  return out;
}

std::optional<Perm> conjugate_into(const Group& g, const Subgroup& h, const Subgroup& d) {
  if (d.order() % h.order() != 0) return std::nullopt;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& y : h.generators())
      if (!d.contains(y.conjugate_by(x))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

bool chains_conjugate_into(const Group& g, const CTCSet& set, const Subgroup& d) {
  std::set<std::size_t> seen;
  for (const auto* side : {&set.plus, &set.minus})
    for (const auto& pr : *side) {
      if (!seen.insert(pr.orbit).second) continue;
      if (!conjugate_into(g, set.orbits[pr.orbit].rep.last(), d)) return false;
    }
  return true;
}

// ---- reports -----------------------------------------------------------------

nlohmann::ordered_json subgroup_json(const Subgroup& h) {
  nlohmann::ordered_json j;
  j["order"] = h.order();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& x : h.generators()) gens.push_back(x.to_cycles());
  j["generators"] = gens;
  return j;
}

nlohmann::ordered_json chain_json(const ChainOrbit& orbit) {
  nlohmann::ordered_json j;
  j["length"] = orbit.rep.length();
  j["sign"] = orbit.sign;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : orbit.rep.terms) terms.push_back(subgroup_json(t));
  j["terms"] = terms;
  j["stabilizer"] = subgroup_json(orbit.stabilizer);
  j["orbit_size"] = orbit.orbit_size;
  return j;
}

nlohmann::ordered_json ctc_set_json(const LocalContext& ctx, const CTCSet& set) {
  nlohmann::ordered_json j;
  j["schema"] = "ctc-chains/1";
  j["prime"] = ctx.prime();
  j["group_order"] = ctx.group().order();
  if (set.all_blocks)
    j["blocks"] = "all";
  else
    j["blocks"] = set.blocks;
  j["start"] = subgroup_json(set.start);
  j["d"] = set.d;
  auto orbits = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < set.orbits.size(); ++i) {
    auto o = chain_json(set.orbits[i]);
    const auto& tab = set.stabilizer_blocks[i]->table();
    auto chars = nlohmann::ordered_json::array();
    for (const auto& pr : set.pairs_of(i)) {
      nlohmann::ordered_json c;
      c["chi"] = pr.chi;
      c["degree"] = tab.degree(pr.chi);
      c["defect"] = pr.defect;
      if (pr.induced_block)
        c["induced_block"] = *pr.induced_block;
      else
        c["induced_block"] = nullptr;
      chars.push_back(c);
    }
    o["pairs"] = chars.size();
    o["characters"] = chars;
    orbits.push_back(o);
  }
  j["orbits"] = orbits;
  j["plus"] = set.plus.size();
  j["minus"] = set.minus.size();
  return j;
}

}  // namespace ctc
