#include "ctc/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace ctc {

namespace {

std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& gens,
                          std::size_t max_order) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Perm y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw ResourceError("group order exceeds configured ceiling of " +
                              std::to_string(max_order));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool sorted_contains(const std::vector<Perm>& v, const Perm& g) {
  return std::binary_search(v.begin(), v.end(), g);
}

// <S, x> where x normalizes S and x^p lies in S.
std::vector<Perm> extend_by(const std::vector<Perm>& s, const Perm& x, unsigned p) {
  std::vector<Perm> out;
  out.reserve(s.size() * p);
  Perm xi(x.degree());
  for (unsigned i = 0; i < p; ++i) {
    for (const auto& h : s) out.push_back(h * xi);
    xi = xi * x;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup sylow_from_elements(const std::vector<Perm>& elems, unsigned p) {
  std::size_t target = p_part(elems.size(), p);
  std::size_t degree = elems.front().degree();
  std::vector<Perm> cur{Perm(degree)};
  while (cur.size() < target) {
    bool grown = false;
    for (const auto& x : elems) {
      if (sorted_contains(cur, x)) continue;
      if (!sorted_contains(cur, x.pow(p))) continue;
      bool normalizes = true;
      for (const auto& h : cur)
        if (!sorted_contains(cur, h.conjugate_by(x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      cur = extend_by(cur, x, p);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("Sylow construction stalled");
  }
  return Subgroup::from_sorted(std::move(cur));
}

}  // namespace

// ---- number theory ---------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

unsigned log_p(std::uint64_t n, unsigned p) {
  unsigned k = 0;
  while (n > 1) {
    if (n % p != 0) throw InputError(std::to_string(n) + " is not a power of " + std::to_string(p));
    n /= p;
    ++k;
  }
  return k;
}

// ---- Subgroup ---------------------------------------------------------------

Subgroup Subgroup::generated_by(std::size_t degree, const std::vector<Perm>& gens,
                                const Limits& limits) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw InputError("generator degree mismatch");
  return from_sorted(closure(degree, gens, limits.max_order));
}

Subgroup Subgroup::from_sorted(std::vector<Perm> elements) {
  Subgroup h;
  h.elements_ = std::move(elements);
  h.choose_generators();
  return h;
}

Subgroup Subgroup::trivial(std::size_t degree) { return from_sorted({Perm(degree)}); }

void Subgroup::choose_generators() {
  generators_.clear();
  if (elements_.size() <= 1) return;
  std::size_t degree = elements_.front().degree();
  std::vector<Perm> span{Perm(degree)};
  for (const auto& e : elements_) {
    if (sorted_contains(span, e)) continue;
    generators_.push_back(e);
    span = closure(degree, generators_, elements_.size());
    if (span.size() == elements_.size()) break;
  }
}

bool Subgroup::contains(const Perm& g) const { return sorted_contains(elements_, g); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (other.order() % order() != 0) return false;
  for (const auto& g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

Subgroup Subgroup::conjugate(const Perm& g) const {
  std::vector<Perm> out;
  out.reserve(elements_.size());
  for (const auto& h : elements_) out.push_back(h.conjugate_by(g));
  std::sort(out.begin(), out.end());
  return from_sorted(std::move(out));
}

bool Subgroup::is_normalized_by(const Perm& g) const {
  for (const auto& x : generators_)
    if (!contains(x.conjugate_by(g))) return false;
  return true;
}

// ---- Group ------------------------------------------------------------------

Group::Group(std::size_t degree, std::vector<Perm> generators, const Limits& limits)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw InputError("generator " + g.to_cycles() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree_));
  build(limits);
}

Group::Group(const Subgroup& h, const Limits& limits)
    : degree_(h.degree()), generators_(h.generators()) {
  build(limits);
}

void Group::build(const Limits& limits) {
  elements_ = closure(degree_, generators_, limits.max_order);

  // Stabilizer chain over the explicit element list, base points ascending.
  std::vector<Perm> cur = elements_;
  while (cur.size() > 1) {
    Perm::Point base = 0;
    bool found = false;
    for (Perm::Point x = 0; x < degree_ && !found; ++x)
      for (const auto& g : cur)
        if (g[x] != x) {
          base = x;
          found = true;
          break;
        }
    StabilizerLevel level;
    level.base_point = base;
    std::vector<bool> hit(degree_, false);
    std::vector<Perm> next;
    for (const auto& g : cur) {  // cur is sorted, so the first hit is the smallest
      if (!hit[g[base]]) {
        hit[g[base]] = true;
        level.orbit.push_back(g[base]);
        level.transversal.push_back(g);
      }
      if (g[base] == base) next.push_back(g);
    }
    chain_.push_back(std::move(level));
    cur = std::move(next);
  }

  // Conjugacy classes by closure under conjugation by the generators.
  class_of_.assign(elements_.size(), npos);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_of_[i] != npos) continue;
    std::size_t c = members.size();
    members.emplace_back();
    std::vector<std::size_t> stack{i};
    class_of_[i] = c;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      members[c].push_back(j);
      for (const auto& s : generators_) {
        std::size_t k = index_of(elements_[j].conjugate_by(s));
        if (class_of_[k] == npos) {
          class_of_[k] = c;
          stack.push_back(k);
        }
      }
    }
  }
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  // Each class was discovered from its smallest element, so members[c][0] is the rep.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
    return elements_[members[a][0]] < elements_[members[b][0]];
  });
  std::vector<std::size_t> remap(members.size());
  classes_.clear();
  for (std::size_t r = 0; r < order.size(); ++r) {
    remap[order[r]] = r;
    const auto& m = members[order[r]];
    classes_.push_back({elements_[m[0]], m.size(), elements_.size() / m.size()});
  }
  for (auto& c : class_of_) c = remap[c];

  inverse_class_.resize(classes_.size());
  exponent_ = 1;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    inverse_class_[k] = class_of(classes_[k].rep.inverse());
    exponent_ = std::lcm(exponent_, classes_[k].rep.order());
  }
}

bool Group::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm h = g;
  for (const auto& level : chain_) {
    auto it = std::find(level.orbit.begin(), level.orbit.end(), h[level.base_point]);
    if (it == level.orbit.end()) return false;
    h = h * level.transversal[static_cast<std::size_t>(it - level.orbit.begin())].inverse();
  }
  return h.is_identity();
}

std::size_t Group::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return npos;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Group::class_of(const Perm& g) const {
  std::size_t i = index_of(g);
  if (i == npos) throw InputError("element " + g.to_cycles() + " is not in the group");
  return class_of_[i];
}

std::vector<ConjClass> conjugacy_classes(const Group& g) { return g.classes(); }

// ---- subgroup machinery -------------------------------------------------------

bool is_normal(const Group& g, const Subgroup& h) {
  for (const auto& s : g.generators())
    if (!h.is_normalized_by(s)) return false;
  return true;
}

bool is_p_group(const Subgroup& h, unsigned p) { return p_part(h.order(), p) == h.order(); }

namespace {
void require_subgroup(const Group& g, const Subgroup& h) {
  for (const auto& x : h.generators())
    if (g.index_of(x) == Group::npos)
      throw InputError("subgroup is not contained in the group");
  if (h.order() == 0) throw InputError("empty subgroup");
}
}  // namespace

Subgroup normalizer(const Group& g, const Subgroup& h) {
  require_subgroup(g, h);
  std::vector<Perm> out;
  for (const auto& x : g.elements())
    if (h.is_normalized_by(x)) out.push_back(x);
  return Subgroup::from_sorted(std::move(out));
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  require_subgroup(g, h);
  std::vector<Perm> out;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& y : h.generators())
      if (x * y != y * x) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::from_sorted(std::move(out));
}

Subgroup centralizer(const Group& g, const Perm& x) {
  std::vector<Perm> out;
  for (const auto& y : g.elements())
    if (x * y == y * x) out.push_back(y);
  return Subgroup::from_sorted(std::move(out));
}

Subgroup center(const Group& g) {
  std::vector<Perm> out;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& s : g.generators())
      if (x * s != s * x) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::from_sorted(std::move(out));
}

Subgroup p_core(const Group& g, unsigned p) {
  Subgroup s = sylow(g, p);
  std::vector<Perm> core = s.elements();
  for (const auto& x : g.elements()) {
    if (core.size() == 1) break;
    std::vector<Perm> keep;
    for (const auto& y : core)
      if (s.contains(y.conjugate_by(x))) keep.push_back(y);
    core = std::move(keep);
  }
  return Subgroup::from_sorted(std::move(core));
}

std::pair<Subgroup, Subgroup> center_and_core(const Group& g, unsigned p) {
  return {center(g), p_core(g, p)};
}

Subgroup sylow(const Group& g, unsigned p) { return sylow_from_elements(g.elements(), p); }
Subgroup sylow(const Subgroup& h, unsigned p) { return sylow_from_elements(h.elements(), p); }

Subgroup canonical_conjugate(const Group& g, const Subgroup& h, Perm* conjugator) {
  require_subgroup(g, h);
  std::vector<Perm> best;
  Perm best_g = g.identity();
  std::vector<Perm> buf(h.order());
  for (const auto& x : g.elements()) {
    for (std::size_t i = 0; i < h.order(); ++i) buf[i] = h.elements()[i].conjugate_by(x);
    std::sort(buf.begin(), buf.end());
    if (best.empty() || buf < best) {
      best = buf;
      best_g = x;
    }
  }
  if (conjugator) *conjugator = best_g;
  return Subgroup::from_sorted(std::move(best));
}

std::optional<Perm> conjugating_element(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& y : a.generators())
      if (!b.contains(y.conjugate_by(x))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

std::vector<Subgroup> subgroups_of_p_group(const Subgroup& p_group, unsigned p,
                                           const Subgroup& base, const Limits& limits) {
  if (!is_p_group(p_group, p)) throw InputError("not a p-group");
  if (!base.is_subgroup_of(p_group)) throw InputError("base is not contained in the p-group");
  std::set<Subgroup> found{base};
  std::vector<Subgroup> frontier{base};
  const std::size_t raw_ceiling = 100 * limits.max_subgroup_classes;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      std::vector<Perm> covered = s.elements();
      for (const auto& x : p_group.elements()) {
        if (sorted_contains(covered, x)) continue;
        if (!s.contains(x.pow(p)) || !s.is_normalized_by(x)) continue;
        Subgroup t = Subgroup::from_sorted(extend_by(s.elements(), x, p));
        std::vector<Perm> merged;
        std::set_union(covered.begin(), covered.end(), t.elements().begin(), t.elements().end(),
                       std::back_inserter(merged));
        covered = std::move(merged);
        if (found.insert(t).second) {
          if (found.size() > raw_ceiling)
            throw ResourceError("p-subgroup enumeration exceeds configured ceiling");
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<SubgroupClass> p_subgroup_classes_above(const Group& g, unsigned p,
                                                    const Subgroup& base, const Limits& limits) {
  if (!is_p_group(base, p) || !is_normal(g, base))
    throw InputError("base must be a normal p-subgroup");
  Subgroup s = sylow(g, p);
  std::set<Subgroup> reps;
  for (const auto& t : subgroups_of_p_group(s, p, base, limits)) {
    reps.insert(canonical_conjugate(g, t));
    if (reps.size() > limits.max_subgroup_classes)
      throw ResourceError("number of p-subgroup classes exceeds configured ceiling");
  }
  std::vector<SubgroupClass> out;
  for (const auto& r : reps) {
    Subgroup n = normalizer(g, r);
    out.push_back({r, g.order() / n.order(), std::move(n)});
  }
  std::stable_sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.rep.order() != b.rep.order()) return a.rep.order() < b.rep.order();
    return a.rep < b.rep;
  });
  return out;
}

std::vector<SubgroupClass> p_subgroup_classes(const Group& g, unsigned p, const Limits& limits) {
  return p_subgroup_classes_above(g, p, Subgroup::trivial(g.degree()), limits);
}

}  // namespace ctc
