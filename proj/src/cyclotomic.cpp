#include "ctc/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

// Exact division of integer polynomials (lowest degree first) by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalError("cyclotomic polynomial division not exact");
  return q;
}

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

}  // namespace

std::vector<long> cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw InputError("cyclotomic polynomial of order 0");
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  return num;
}

CycloField::CycloField(std::size_t e) : conductor_(e), phi_poly_(cyclotomic_polynomial(e)) {
  degree_ = phi_poly_.size() - 1;
  powers_.resize(e);
  std::vector<long> cur(degree_, 0);
  cur[0] = 1;
  for (std::size_t j = 0; j < e; ++j) {
    powers_[j] = cur;
    // multiply by zeta and reduce with the monic Phi_e
    long top = cur[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < degree_; ++i) cur[i] -= top * phi_poly_[i];
  }
}

const CycloField& CycloField::get(std::size_t conductor) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot.reset(new CycloField(conductor));
  return *slot;
}

// ---- Cyclo -------------------------------------------------------------------

Cyclo::Cyclo(long n) : conductor_(1), coeffs_{mpq_class(n)} {}
Cyclo::Cyclo(const mpq_class& q) : conductor_(1), coeffs_{q} {}

Cyclo Cyclo::from_exponent_sums(std::size_t e, const std::vector<mpq_class>& dense) {
  const auto& f = CycloField::get(e);
  Cyclo r;
  r.conductor_ = e;
  r.coeffs_.assign(f.degree(), mpq_class(0));
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] == 0) continue;
    const auto& pw = f.power(j);
    for (std::size_t i = 0; i < f.degree(); ++i)
      if (pw[i] != 0) r.coeffs_[i] += dense[j] * pw[i];
  }
  return r;
}

Cyclo Cyclo::root_of_unity(std::size_t e, std::size_t k) {
  std::vector<mpq_class> dense(e, 0);
  dense[k % e] = 1;
  return from_exponent_sums(e, dense);
}

Cyclo Cyclo::from_coefficients(std::size_t e, std::vector<mpq_class> coeffs) {
  const auto& f = CycloField::get(e);
  if (coeffs.size() != f.degree())
    throw InputError("coefficient list length " + std::to_string(coeffs.size()) +
                     " does not match field degree " + std::to_string(f.degree()));
  Cyclo r;
  r.conductor_ = e;
  r.coeffs_ = std::move(coeffs);
  return r;
}

Cyclo Cyclo::in_field(std::size_t e) const {
  if (e == conductor_) return *this;
  if (e % conductor_ != 0) throw InputError("target conductor is not a multiple");
  std::size_t step = e / conductor_;
  std::vector<mpq_class> dense(e, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[i * step] = coeffs_[i];
  return from_exponent_sums(e, dense);
}

namespace {
void promote(Cyclo& a, Cyclo& b) {
  if (a.conductor() == b.conductor()) return;
  std::size_t l = lcm_size(a.conductor(), b.conductor());
  a = a.in_field(l);
  b = b.in_field(l);
}
}  // namespace

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  Cyclo b = o;
  promote(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  Cyclo b = o;
  promote(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.conductor_ == 1) return *this *= o.coeffs_[0];
  if (conductor_ == 1) {
    mpq_class q = coeffs_[0];
    *this = o;
    return *this *= q;
  }
  Cyclo b = o;
  promote(*this, b);
  std::size_t e = conductor_;
  std::vector<mpq_class> dense(e, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) dense[(i + j) % e] += coeffs_[i] * b.coeffs_[j];
  }
  *this = from_exponent_sums(e, dense);
  return *this;
}

Cyclo& Cyclo::operator*=(const mpq_class& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclo& Cyclo::operator/=(const mpq_class& q) {
  if (q == 0) throw InputError("division by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  Cyclo a = *this, b = o;
  promote(a, b);
  return a.coeffs_ == b.coeffs_;
}

Cyclo Cyclo::galois(std::size_t k) const {
  std::size_t e = conductor_;
  if (e > 1 && std::gcd(k, e) != 1) throw InputError("galois exponent not coprime to conductor");
  std::vector<mpq_class> dense(e, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[(i * k) % e] += coeffs_[i];
  return from_exponent_sums(e, dense);
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::optional<mpq_class> Cyclo::rational_value() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

int Cyclo::compare(const Cyclo& o) const {
  Cyclo a = *this, b = o;
  promote(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclo::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (any)
      out << (c < 0 ? " - " : " + ");
    else if (c < 0)
      out << "-";
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "z" << conductor_;
      if (i > 1) out << "^" << i;
    }
    any = true;
  }
  return any ? out.str() : "0";
}

}  // namespace ctc
