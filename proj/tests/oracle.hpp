#pragma once

// Brute-force reference computations used by the unit tests. Everything here
// works directly on element lists and is deliberately naive.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ctc/group.hpp"

namespace oracle {

using ctc::Group;
using ctc::Perm;
using ctc::Subgroup;

inline std::vector<std::vector<Perm>> classes(const Group& g) {
  std::set<Perm> seen;
  std::vector<std::vector<Perm>> out;
  for (const auto& x : g.elements()) {
    if (seen.count(x)) continue;
    std::set<Perm> cls;
    for (const auto& y : g.elements()) cls.insert(x.conjugate_by(y));
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

inline std::vector<Perm> normalizer(const Group& g, const Subgroup& h) {
  std::vector<Perm> out;
  for (const auto& x : g.elements())
    if (std::all_of(h.elements().begin(), h.elements().end(),
                    [&](const Perm& y) { return h.contains(y.conjugate_by(x)); }))
      out.push_back(x);
  return out;
}

inline std::vector<Perm> center(const Group& g) {
  std::vector<Perm> out;
  for (const auto& x : g.elements())
    if (std::all_of(g.elements().begin(), g.elements().end(), [&](const Perm& y) { return x * y == y * x; }))
      out.push_back(x);
  return out;
}

inline bool is_p_power(std::size_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Every p-subgroup of g, grown one cyclic subgroup at a time.
inline std::set<Subgroup> all_p_subgroups(const Group& g, unsigned p) {
  std::vector<Perm> p_elements;
  for (const auto& x : g.elements())
    if (is_p_power(x.order(), p)) p_elements.push_back(x);
  std::set<Subgroup> found{Subgroup::trivial(g.degree())};
  std::vector<Subgroup> todo(found.begin(), found.end());
  while (!todo.empty()) {
    Subgroup h = todo.back();
    todo.pop_back();
    for (const auto& x : p_elements) {
      if (h.contains(x)) continue;
      auto gens = h.generators();
      gens.push_back(x);
      Subgroup k = Subgroup::generated_by(g.degree(), gens);
      if (is_p_power(k.order(), p) && found.insert(k).second) todo.push_back(k);
    }
  }
  return found;
}

/// Number of normal p-chains Z = D_0 < ... < D_n (every term normal in D_n),
/// indexed by n.
inline std::map<std::size_t, std::size_t> chain_counts(const Group& g, const Subgroup& z, unsigned p) {
  auto subs = all_p_subgroups(g, p);
  std::map<std::size_t, std::size_t> counts;
  std::vector<Subgroup> chain{z};
  auto normal_in = [](const Subgroup& a, const Subgroup& b) {
    return std::all_of(b.elements().begin(), b.elements().end(), [&](const Perm& x) { return a.is_normalized_by(x); });
  };
  auto rec = [&](auto&& self) -> void {
    ++counts[chain.size() - 1];
    for (const auto& s : subs) {
      if (s.order() <= chain.back().order() || !chain.back().is_subgroup_of(s)) continue;
      if (!std::all_of(chain.begin(), chain.end(), [&](const Subgroup& t) { return normal_in(t, s); })) continue;
      chain.push_back(s);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return counts;
}

}  // namespace oracle
