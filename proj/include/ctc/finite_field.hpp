#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ctc {

// ---- prime-field helpers ------------------------------------------------------

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // m prime
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Smallest generator of the multiplicative group of F_p.
std::uint64_t primitive_root(std::uint64_t p);
/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// GF(p^f) as F_p[x]/(m(x)) with m the first primitive monic polynomial of
/// degree f in the order of its coefficient vector read as a base-p number
/// (constant term least significant). Elements are encoded as integers
/// sum c_i p^i for the residue sum c_i x^i.
class GaloisField {
 public:
  using Elem = std::uint64_t;

  GaloisField(unsigned p, unsigned f);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t size() const { return q_; }
  /// Coefficients of the modulus, lowest degree first, monic of length f+1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of x, a generator of the multiplicative group.
  Elem generator() const { return f_ == 1 ? gen1_ : p_; }
  Elem from_int(long long n) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem scale(Elem a, unsigned c) const;

  std::string to_string(Elem a) const;

 private:
  unsigned p_;
  unsigned f_;
  std::uint64_t q_;
  std::vector<unsigned> modulus_;
  Elem gen1_ = 1;

  std::vector<unsigned> digits(Elem a) const;
  Elem encode(const std::vector<unsigned>& d) const;
};

}  // namespace ctc
