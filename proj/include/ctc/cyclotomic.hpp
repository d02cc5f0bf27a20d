#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctc {

/// Power-basis data for Q(zeta_e): Phi_e and the reduction of every zeta^j,
/// 0 <= j < e, to the basis {1, zeta, ..., zeta^(phi(e)-1)}.
class CycloField {
 public:
  static const CycloField& get(std::size_t conductor);

  std::size_t conductor() const { return conductor_; }
  std::size_t degree() const { return degree_; }
  /// Integer coefficients of Phi_e, lowest degree first (monic).
  const std::vector<long>& minimal_polynomial() const { return phi_poly_; }
  const std::vector<long>& power(std::size_t j) const { return powers_[j % conductor_]; }

 private:
  explicit CycloField(std::size_t e);
  std::size_t conductor_;
  std::size_t degree_;
  std::vector<long> phi_poly_;
  std::vector<std::vector<long>> powers_;
};

std::vector<long> cyclotomic_polynomial(std::size_t n);

/// An exact element of the cyclotomic field Q(zeta_e), stored in the power
/// basis of Phi_e with rational coefficients. zeta_e = exp(2 pi i / e).
/// Operands of different conductors are promoted to the lcm field.
class Cyclo {
 public:
  Cyclo() : Cyclo(0) {}
  Cyclo(long n);  // NOLINT(google-explicit-constructor)
  Cyclo(const mpq_class& q);  // NOLINT(google-explicit-constructor)

  static Cyclo root_of_unity(std::size_t e, std::size_t k);
  /// sum_j dense[j] * zeta_e^j for a dense exponent vector of length e.
  static Cyclo from_exponent_sums(std::size_t e, const std::vector<mpq_class>& dense);
  /// Coefficients in the canonical basis of Q(zeta_e); length must be phi(e).
  static Cyclo from_coefficients(std::size_t e, std::vector<mpq_class> coeffs);

  std::size_t conductor() const { return conductor_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  /// The same number in Q(zeta_e) for a multiple e of the conductor.
  Cyclo in_field(std::size_t e) const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const mpq_class& q);
  Cyclo& operator/=(const mpq_class& q);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const mpq_class& q) { return a *= q; }
  friend Cyclo operator/(Cyclo a, const mpq_class& q) { return a /= q; }
  bool operator==(const Cyclo& o) const;

  /// Image under zeta -> zeta^k, gcd(k, e) = 1.
  Cyclo galois(std::size_t k) const;
  Cyclo conj() const { return galois(conductor_ - 1); }

  bool is_zero() const;
  /// All canonical-basis coefficients are integers (algebraic integer test).
  bool is_integral() const;
  std::optional<mpq_class> rational_value() const;

  /// Lexicographic comparison of canonical coefficient vectors (same conductor).
  int compare(const Cyclo& o) const;

  std::string to_string() const;

 private:
  std::size_t conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

}  // namespace ctc
