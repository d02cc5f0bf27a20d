#include "ctc/library.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

Perm from_map(std::size_t n, auto f) {
  std::vector<Perm::Point> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Perm::Point>(f(x));
  return Perm(std::move(img));
}

unsigned parse_uint(const std::string& s, const std::string& name) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 6)
    throw InputError("unknown library group: " + name);
  return static_cast<unsigned>(std::stoul(s));
}

struct Gens {
  std::size_t degree;
  std::vector<Perm> gens;
};

Gens affine(unsigned m, unsigned n, unsigned r, const std::string& name) {
  if (m < 2 || std::gcd(r, m) != 1) throw InputError("bad metacyclic parameters: " + name);
  unsigned ord = 1, x = r % m;
  while (x != 1) {
    x = (x * r) % m;
    ++ord;
  }
  if (ord != n) throw InputError("r must have order n modulo m: " + name);
  Gens g{m, {from_map(m, [m](std::size_t x) { return (x + 1) % m; })}};
  if (n > 1) g.gens.push_back(from_map(m, [m, r](std::size_t x) { return (x * r) % m; }));
  return g;
}

Gens quaternion() {
  // point 2u + s is (-1)^s e_u with e_0 = 1, e_1 = i, e_2 = j, e_3 = k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right_mul = [](std::size_t u2) {
    return from_map(8, [u2](std::size_t x) {
      std::size_t u = x / 2, s = x % 2, v = u2;
      return 2 * unit[u][v] + ((s + sign[u][v]) % 2);
    });
  };
  return {8, {right_mul(1), right_mul(2)}};
}

Gens sl23() {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.push_back({a, b});
  auto act = [&](int m00, int m01, int m10, int m11) {
    return from_map(8, [&](std::size_t x) {
      auto [a, b] = vecs[x];
      std::pair<int, int> w{(a * m00 + b * m10) % 3, (a * m01 + b * m11) % 3};
      return static_cast<std::size_t>(std::find(vecs.begin(), vecs.end(), w) - vecs.begin());
    });
  };
  return {8, {act(1, 1, 0, 1), act(1, 0, 1, 1)}};
}

Gens atom(const std::string& name) {
  if (name == "Q8") return quaternion();
  if (name == "SL23") return sl23();
  if (name == "V4") return {4, {Perm::from_cycles(4, "(0 1)(2 3)"), Perm::from_cycles(4, "(0 2)(1 3)")}};
  if (name == "F20") return affine(5, 4, 2, name);
  if (name == "F21") return affine(7, 3, 2, name);
  static const std::regex meta(R"(M\((\d+),(\d+),(\d+)\))");
  std::smatch mm;
  if (std::regex_match(name, mm, meta))
    return affine(parse_uint(mm[1], name), parse_uint(mm[2], name), parse_uint(mm[3], name), name);
  if (name.size() < 2) throw InputError("unknown library group: " + name);
  char kind = name[0];
  std::string rest = name.substr(1);
  if (kind == 'C') {
    unsigned n = parse_uint(rest, name);
    if (n == 0) throw InputError("unknown library group: " + name);
    if (n == 1) return {1, {}};
    return {n, {from_map(n, [n](std::size_t x) { return (x + 1) % n; })}};
  }
  if (kind == 'D') {
    unsigned n = parse_uint(rest, name);
    if (n < 2 || n % 2) throw InputError("dihedral order must be even: " + name);
    if (n == 2) return {2, {Perm::from_cycles(2, "(0 1)")}};
    if (n == 4) return atom("V4");
    unsigned m = n / 2;
    return {m,
            {from_map(m, [m](std::size_t x) { return (x + 1) % m; }),
             from_map(m, [m](std::size_t x) { return (m - x) % m; })}};
  }
  if (kind == 'S' || kind == 'A') {
    unsigned n = parse_uint(rest, name);
    if (n == 0 || n > 7) throw InputError("symmetric and alternating groups are limited to n <= 7: " + name);
    Gens g{n, {}};
    if (kind == 'S' && n >= 2) {
      g.gens.push_back(from_map(n, [n](std::size_t x) { return (x + 1) % n; }));
      g.gens.push_back(Perm::from_cycles(n, "(0 1)"));
    }
    if (kind == 'A')
      for (unsigned k = 2; k < n; ++k)
        g.gens.push_back(Perm::from_cycles(n, "(0 1 " + std::to_string(k) + ")"));
    return g;
  }
  throw InputError("unknown library group: " + name);
}

std::vector<std::string> split_product(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : name) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

GroupPtr library_group(const std::string& name, const Limits& limits) {
  std::size_t degree = 0;
  std::vector<Gens> factors;
  for (const auto& part : split_product(name)) {
    if (part.empty()) throw InputError("unknown library group: " + name);
    factors.push_back(atom(part));
    degree += factors.back().degree;
  }
  if (degree > 4096) throw ResourceError("library group degree too large");
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens)
      gens.push_back(from_map(degree, [&](std::size_t x) {
        return (x >= offset && x < offset + f.degree) ? offset + g[x - offset] : x;
      }));
    offset += f.degree;
  }
  return std::make_shared<const Group>(degree, std::move(gens), limits);
}

std::vector<std::string> library_corpus() {
  return {"C2",        "C3",        "C4",        "C5",       "C6",        "C7",        "C8",       "C9",
          "C10",       "C12",       "C16",       "C25",      "V4",        "C2xC2xC2",  "C2xC2xC2xC2", "C3xC3",
          "C3xC3xC3",  "C4xC4",     "C4xC2",     "S3",       "D8",        "D10",       "D12",      "D14",
          "D16",       "D18",       "D20",       "D24",      "D30",       "D32",       "D36",      "D40",
          "Q8",        "A4",        "S4",        "A5",       "SL23",      "F20",       "F21",      "M(9,3,4)",
          "M(13,3,3)", "M(11,5,3)", "M(7,3,2)xC3", "S3xC2",  "S3xC3",     "S3xS3",     "S3xS3xC2", "D8xC2",
          "D8xC3",     "Q8xC2",     "Q8xC3",    "Q8xS3",     "A4xC2",     "A4xC3",    "A4xS3",
          "A4xA4",     "S4xC2",     "S4xC3",     "S4xS3",    "S4xC2xC2",  "SL23xC2",   "SL23xC3",  "F20xC2",
          "F20xC3",    "F21xC3",    "F21xS3",    "D10xS3",   "A5xC2",     "A5xC3",     "S5"};
}

GroupPtr parse_group(std::istream& in, const Limits& limits) {
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw InputError("line " + std::to_string(lineno) + ": expected 'degree:' or 'gen:'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    try {
      if (key == "degree") {
        if (degree) throw InputError("degree given twice");
        std::istringstream vs(value);
        long long n = -1;
        std::string tail;
        if (!(vs >> n) || (vs >> tail) || n < 1 || n > 65535) throw InputError("bad degree");
        degree = static_cast<std::size_t>(n);
      } else if (key == "gen") {
        if (!degree) throw InputError("gen before degree");
        gens.push_back(Perm::from_cycles(*degree, value));
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!degree) throw InputError("missing degree line");
  return std::make_shared<const Group>(*degree, std::move(gens), limits);
}

GroupPtr load_group_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file " + path);
  return parse_group(in, limits);
}

Subgroup parse_subgroup_spec(const std::string& spec, const Group& g, unsigned p, const Limits& limits) {
  if (spec == "trivial" || spec == "1") return Subgroup::trivial(g.degree());
  if (spec == "Op") return p_core(g, p);
  if (spec == "center") return center(g);
  if (spec == "sylow") return sylow(g, p);
  const std::string prefix = "gens:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<Perm> gens;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ';')) {
      Perm x = Perm::from_cycles(g.degree(), item);
      if (!g.contains(x)) throw InputError("generator " + item + " is not in G");
      gens.push_back(x);
    }
    return Subgroup::generated_by(g.degree(), gens, limits);
  }
  throw InputError("unknown subgroup spec: " + spec);
}

// ---- random repair instances ---------------------------------------------------

RepairInstance random_repair_instance(std::mt19937_64& rng, std::size_t max_size, bool with_action) {
  if (max_size < 2) throw InputError("instance size must be at least 2");
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  // Orbits of a C2 action: size 1 (fixed points) or 2. Without an action
  // every orbit is a point.
  std::size_t target = uniform(2, max_size);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < target) {
    std::size_t s = (with_action && total + 2 <= target && uniform(0, 1)) ? 2 : 1;
    sizes.push_back(s);
    total += s;
  }
  std::size_t k = sizes.size();
  std::vector<std::size_t> start(k);
  for (std::size_t i = 0, off = 0; i < k; off += sizes[i], ++i) start[i] = off;

  // A type-preserving permutation of the orbit list.
  auto random_orbit_perm = [&] {
    std::vector<std::size_t> ones, twos;
    for (std::size_t i = 0; i < k; ++i) (sizes[i] == 1 ? ones : twos).push_back(i);
    std::vector<std::size_t> perm(k);
    for (auto* cls : {&ones, &twos}) {
      auto shuffled = *cls;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t i = 0; i < cls->size(); ++i) perm[(*cls)[i]] = shuffled[i];
    }
    return perm;
  };
  // Lifts an orbit map to points, with a random twist on 2-orbits.
  auto lift = [&](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> m(total);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = perm[i];
      std::size_t twist = sizes[i] == 2 ? uniform(0, 1) : 0;
      for (std::size_t t = 0; t < sizes[i]; ++t) m[start[i] + t] = start[j] + ((t + twist) % sizes[i]);
    }
    return m;
  };

  RepairInstance inst;
  auto omega = lift(random_orbit_perm());
  auto pi0 = lift(random_orbit_perm());
  std::vector<bool> marked_orbit(k);
  std::size_t n_marked = uniform(0, k);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < n_marked; ++i) marked_orbit[order[i]] = true;

  RepairInput& in = inst.input;
  in.omega = omega;
  in.c0.assign(total, false);
  in.c1.assign(total, false);
  in.pi.assign(total, std::nullopt);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < sizes[i]; ++t) {
      std::size_t x = start[i] + t;
      if (marked_orbit[i]) {
        in.c0[x] = true;
        in.c1[pi0[x]] = true;
      } else {
        in.pi[x] = pi0[x];
      }
    }
  if (with_action) {
    std::vector<std::size_t> swap(total);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < sizes[i]; ++t) swap[start[i] + t] = start[i] + (sizes[i] == 2 ? 1 - t : 0);
    inst.action = FiniteAction{{swap}, {swap}};
  }
  return inst;
}

std::string check_repair(const RepairInstance& inst, const RepairResult& r) {
  const RepairInput& in = inst.input;
  std::size_t n = in.omega.size();
  if (r.map.size() != n) return "output has the wrong size";
  std::vector<bool> seen(n, false);
  for (auto y : r.map) {
    if (y >= n || seen[y]) return "output is not a bijection";
    seen[y] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (in.c0[x] && !in.c1[r.map[x]]) return "an element of C0 is not sent into C1";
  std::vector<bool> touched(n, false);
  for (const auto& chase : r.swap_log) {
    if (chase.size() < 2) return "empty chase in the swap log";
    if (chase.size() - 1 > n) return "chase longer than |X+|";
    touched[chase.front()] = touched[chase.back()] = true;
  }
  if (inst.action) {
    const auto& act = *inst.action;
    for (std::size_t g = 0; g < act.on_plus.size(); ++g)
      for (std::size_t x = 0; x < n; ++x)
        if (r.map[act.on_plus[g][x]] != act.on_minus[g][r.map[x]]) return "output is not equivariant";
    // whole orbits of the chase endpoints may move
    for (std::size_t g = 0; g < act.on_plus.size(); ++g)
      for (std::size_t x = 0; x < n; ++x)
        if (touched[x]) touched[act.on_plus[g][x]] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!touched[x] && r.map[x] != in.omega[x]) return "output differs from Omega away from the chases";
  return {};
}

}  // namespace ctc
