#include "ctc/char_table.hpp"

#include <algorithm>
#include <numeric>

#include "ctc/finite_field.hpp"

namespace ctc {

namespace {

using Vec = std::vector<std::uint64_t>;

struct ModSpace {
  std::vector<Vec> basis;  // reduced echelon form
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form of the span of `rows` over F_l.
ModSpace echelon(std::vector<Vec> rows, std::uint64_t l) {
  ModSpace out;
  if (rows.empty()) return out;
  std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::uint64_t inv = inv_mod(rows[r][c], l);
    for (auto& v : rows[r]) v = mul_mod(v, inv, l);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k)
        rows[i][k] = (rows[i][k] + l - mul_mod(f, rows[r][k], l)) % l;
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.basis = std::move(rows);
  return out;
}

// Basis of the null space of the square matrix a (a x = 0).
std::vector<Vec> null_space(std::vector<Vec> a, std::uint64_t l) {
  std::size_t n = a.size();
  ModSpace e = echelon(std::move(a), l);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = (l - e.basis[r][free]) % l;
    out.push_back(std::move(v));
  }
  return out;
}

// Splits the invariant subspace w into eigenspaces of the matrix m (acting on
// column vectors).
std::vector<ModSpace> split(const ModSpace& w, const std::vector<Vec>& m, std::uint64_t l) {
  std::size_t dim = w.basis.size(), n = m.size();
  std::vector<Vec> images(dim, Vec(n, 0));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][k] && w.basis[a][k]) s = (s + mul_mod(m[i][k], w.basis[a][k], l)) % l;
      images[a][i] = s;
    }
  // restricted[b][a]: coordinate b of m * w_a
  std::vector<Vec> restricted(dim, Vec(dim, 0));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) restricted[b][a] = images[a][w.pivots[b]];

  std::vector<ModSpace> parts;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < l && found < dim; ++lambda) {
    auto shifted = restricted;
    for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = (shifted[i][i] + l - lambda) % l;
    auto kernel = null_space(std::move(shifted), l);
    if (kernel.empty()) continue;
    std::vector<Vec> vecs;
    for (const auto& c : kernel) {
      Vec v(n, 0);
      for (std::size_t a = 0; a < dim; ++a)
        if (c[a])
          for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + mul_mod(c[a], w.basis[a][i], l)) % l;
      vecs.push_back(std::move(v));
    }
    found += kernel.size();
    parts.push_back(echelon(std::move(vecs), l));
  }
  if (found != dim) throw InternalError("class matrix is not diagonalizable over F_l");
  return parts;
}

std::uint64_t choose_lift_prime(std::size_t exponent, std::size_t order) {
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t l = k * exponent + 1;
    if (l * l > 4 * order && is_prime(l)) return l;
  }
}

}  // namespace

std::shared_ptr<const CharTable> CharTable::compute(GroupPtr group) {
  const Group& g = *group;
  const std::size_t k = g.classes().size();
  const std::size_t order = g.order();
  const std::size_t e = g.exponent();
  const std::uint64_t l = choose_lift_prime(e, order);

  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < order; ++i) members[g.class_of_index(i)].push_back(i);

  // class_matrix[j][i][t] = #{x in K_j : x^-1 g_t in K_i}, so that
  // omega(K_j) omega(K_i) = sum_t class_matrix[j][i][t] omega(K_t).
  auto class_matrix = [&](std::size_t j) {
    std::vector<Vec> m(k, Vec(k, 0));
    for (std::size_t t = 0; t < k; ++t) {
      const Perm& rep = g.classes()[t].rep;
      for (auto xi : members[j]) {
        std::size_t i = g.class_of(g.elements()[xi].inverse() * rep);
        ++m[i][t];
      }
    }
    for (auto& row : m)
      for (auto& v : row) v %= l;
    return m;
  };

  std::vector<ModSpace> spaces;
  {
    std::vector<Vec> id(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(echelon(std::move(id), l));
  }
  for (std::size_t j = 1; j < k && spaces.size() < k; ++j) {
    auto m = class_matrix(j);
    std::vector<ModSpace> next;
    for (const auto& w : spaces) {
      if (w.basis.size() == 1) {
        next.push_back(w);
        continue;
      }
      for (auto& part : split(w, m, l)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalError("central characters not separated over F_l");

  const std::uint64_t z = pow_mod(primitive_root(l), (l - 1) / e, l);

  // Power maps: class of rep^t for 0 <= t < order(rep).
  std::vector<std::vector<std::size_t>> powers(k);
  for (std::size_t c = 0; c < k; ++c) {
    const Perm& rep = g.classes()[c].rep;
    Perm x = g.identity();
    std::size_t o = rep.order();
    for (std::size_t t = 0; t < o; ++t) {
      powers[c].push_back(g.class_of(x));
      x = x * rep;
    }
  }

  auto table = std::shared_ptr<CharTable>(new CharTable());
  table->group_ = group;
  table->exponent_ = e;
  table->lift_prime_ = l;
  table->values_.reserve(k * k);

  for (const auto& space : spaces) {
    Vec w = space.basis[0];
    if (w[0] == 0) throw InternalError("central character vanishes on the identity");
    std::uint64_t inv0 = inv_mod(w[0], l);
    for (auto& v : w) v = mul_mod(v, inv0, l);

    std::uint64_t s = 0;
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t term = mul_mod(w[c], w[g.inverse_class(c)], l);
      s = (s + mul_mod(term, inv_mod(g.classes()[c].size % l, l), l)) % l;
    }
    std::uint64_t target = mul_mod(order % l, inv_mod(s, l), l);
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (mul_mod(d, d, l) == target) {
        deg = d;
        break;
      }
    if (deg == 0 || order % deg != 0) throw InternalError("degree recovery failed");

    Vec chi_mod(k);
    for (std::size_t c = 0; c < k; ++c)
      chi_mod[c] = mul_mod(mul_mod(w[c], deg, l), inv_mod(g.classes()[c].size % l, l), l);

    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t o = powers[c].size();
      const std::uint64_t zo = pow_mod(z, e / o, l);
      const std::uint64_t zo_inv = inv_mod(zo, l);
      const std::uint64_t o_inv = inv_mod(o % l, l);
      std::vector<mpq_class> dense(e, 0);
      std::uint64_t total = 0;
      for (std::size_t j = 0; j < o; ++j) {
        std::uint64_t acc = 0;
        std::uint64_t step = pow_mod(zo_inv, j, l);
        std::uint64_t zt = 1;
        for (std::size_t t = 0; t < o; ++t) {
          acc = (acc + mul_mod(chi_mod[powers[c][t]], zt, l)) % l;
          zt = mul_mod(zt, step, l);
        }
        std::uint64_t mult = mul_mod(acc, o_inv, l);
        if (mult > deg) throw InternalError("eigenvalue multiplicity out of range");
        total += mult;
        dense[j * (e / o)] += static_cast<unsigned long>(mult);
      }
      if (total != deg) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      table->values_.push_back(Cyclo::from_exponent_sums(e, dense));
    }
    table->degrees_.push_back(deg);
  }

  table->sort_rows();
  if (!table->orthogonality_holds())
    throw InternalError("lifted character table fails the orthogonality relations");
  return table;
}

void CharTable::sort_rows() {
  const std::size_t k = size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](std::size_t r) {
    for (std::size_t c = 0; c < k; ++c)
      if (!(values_[r * k + c] == Cyclo(1))) return false;
    return true;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
    for (std::size_t c = 0; c < k; ++c) {
      int cmp = values_[a * k + c].compare(values_[b * k + c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  std::vector<Cyclo> vals;
  std::vector<std::uint64_t> degs;
  vals.reserve(values_.size());
  for (auto r : idx) {
    for (std::size_t c = 0; c < k; ++c) vals.push_back(values_[r * k + c]);
    degs.push_back(degrees_[r]);
  }
  values_ = std::move(vals);
  degrees_ = std::move(degs);
}

bool CharTable::orthogonality_holds() const {
  const std::size_t k = size();
  const Group& g = *group_;
  if (g.classes().size() != k) return false;
  std::uint64_t sum_sq = 0;
  for (auto d : degrees_) sum_sq += d * d;
  if (sum_sq != g.order()) return false;

  std::vector<Cyclo> conj(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) conj[i] = values_[i].conj();

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclo s(0);
      for (std::size_t c = 0; c < k; ++c)
        s += values_[a * k + c] * conj[b * k + c] * mpq_class(static_cast<unsigned long>(g.classes()[c].size));
      if (!(s == Cyclo(a == b ? static_cast<long>(g.order()) : 0L))) return false;
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = c; d < k; ++d) {
      Cyclo s(0);
      for (std::size_t a = 0; a < k; ++a) s += values_[a * k + c] * conj[a * k + d];
      long expect = c == d ? static_cast<long>(g.classes()[c].centralizer_order) : 0L;
      if (!(s == Cyclo(expect))) return false;
    }
  return true;
}

nlohmann::ordered_json CharTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = "ctc-table/1";
  doc["order"] = group_->order();
  doc["exponent"] = exponent_;
  doc["lift_prime"] = lift_prime_;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : group_->classes())
    classes.push_back({{"rep", c.rep.to_cycles()}, {"size", c.size},
                       {"centralizer_order", c.centralizer_order}});
  doc["classes"] = classes;
  doc["degrees"] = degrees_;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < size(); ++a) {
    auto row_json = nlohmann::ordered_json::array();
    for (const auto& v : row(a)) {
      auto coeffs = nlohmann::ordered_json::array();
      for (const auto& q : v.coefficients()) coeffs.push_back(q.get_str());
      row_json.push_back({{"conductor", v.conductor()}, {"coefficients", coeffs}});
    }
    rows.push_back(row_json);
  }
  doc["characters"] = rows;
  return doc;
}

std::shared_ptr<const CharTable> CharTable::from_json(const nlohmann::ordered_json& doc,
                                                     GroupPtr group) {
  if (doc.value("schema", "") != "ctc-table/1") throw InputError("unsupported table schema");
  const auto& classes = group->classes();
  const auto& jc = doc.at("classes");
  if (jc.size() != classes.size()) throw InputError("class count mismatch");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (jc[c].at("rep").get<std::string>() != classes[c].rep.to_cycles() ||
        jc[c].at("size").get<std::size_t>() != classes[c].size)
      throw InputError("class list does not match the group");
  }
  auto t = std::shared_ptr<CharTable>(new CharTable());
  t->group_ = group;
  t->exponent_ = doc.at("exponent").get<std::size_t>();
  t->lift_prime_ = doc.at("lift_prime").get<std::uint64_t>();
  t->degrees_ = doc.at("degrees").get<std::vector<std::uint64_t>>();
  for (const auto& row_json : doc.at("characters")) {
    if (row_json.size() != classes.size()) throw InputError("row length mismatch");
    for (const auto& v : row_json) {
      std::vector<mpq_class> coeffs;
      for (const auto& s : v.at("coefficients")) {
        mpq_class q(s.get<std::string>());
        q.canonicalize();
        coeffs.push_back(q);
      }
      t->values_.push_back(Cyclo::from_coefficients(v.at("conductor").get<std::size_t>(), coeffs));
    }
  }
  if (t->degrees_.size() != classes.size() || !t->orthogonality_holds())
    throw InputError("imported table fails validation");
  return t;
}

unsigned defect(const CharTable& t, std::size_t chi, unsigned p) {
  return log_p(p_part(t.group().order(), p), p) - log_p(p_part(t.degree(chi), p), p);
}

CharRef char_ref(const CharTable& t, std::size_t chi, unsigned p) {
  return {&t, chi, defect(t, chi, p)};
}

std::vector<std::size_t> p_prime_degree_set(const CharTable& t, unsigned p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree(i) % p != 0) out.push_back(i);
  return out;
}

Cyclo inner_product(const CharTable& t, std::span<const Cyclo> f, std::span<const Cyclo> g) {
  const auto& classes = t.group().classes();
  if (f.size() != classes.size() || g.size() != classes.size())
    throw InputError("class function length does not match the number of classes");
  Cyclo s(0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    s += f[c] * g[c].conj() * mpq_class(static_cast<unsigned long>(classes[c].size));
  return s / mpq_class(static_cast<unsigned long>(t.group().order()));
}

}  // namespace ctc
