#include "ctc/finite_field.hpp"

#include <numeric>

#include "ctc/errors.hpp"
#include "ctc/group.hpp"

namespace ctc {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (a % m == 0) throw InputError("inverse of zero");
  return pow_mod(a, m - 2, m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto qs = prime_factors(p - 1);
  for (std::uint64_t r = 2; r < p; ++r) {
    bool ok = true;
    for (auto q : qs)
      if (pow_mod(r, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  throw InternalError("no primitive root found");
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw InputError("order of a non-unit");
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++k;
  }
  return k;
}

// ---- GaloisField -------------------------------------------------------------

std::vector<unsigned> GaloisField::digits(Elem a) const {
  std::vector<unsigned> d(f_);
  for (unsigned i = 0; i < f_; ++i) {
    d[i] = static_cast<unsigned>(a % p_);
    a /= p_;
  }
  return d;
}

GaloisField::Elem GaloisField::encode(const std::vector<unsigned>& d) const {
  Elem a = 0;
  for (unsigned i = f_; i-- > 0;) a = a * p_ + d[i];
  return a;
}

GaloisField::GaloisField(unsigned p, unsigned f) : p_(p), f_(f) {
  if (!is_prime(p) || f == 0) throw InputError("GF(p^f) needs prime p and f >= 1");
  q_ = 1;
  for (unsigned i = 0; i < f; ++i) {
    if (q_ > (std::uint64_t{1} << 40) / p) throw ResourceError("finite field too large");
    q_ *= p;
  }
  if (f == 1) {
    gen1_ = primitive_root(p);
    modulus_ = {static_cast<unsigned>((p - gen1_) % p), 1};
    return;
  }
  auto qs = prime_factors(q_ - 1);
  // Scan monic candidates x^f + (lower part); lower part read as a base-p number.
  for (std::uint64_t low = 0; low < q_; ++low) {
    modulus_ = digits(low);
    modulus_.push_back(1);
    if (modulus_[0] == 0) continue;
    // x must have order exactly q - 1, which also forces irreducibility.
    Elem x = p_;
    if (pow(x, q_ - 1) != 1) continue;
    bool primitive = true;
    for (auto r : qs)
      if (pow(x, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return;
  }
  throw InternalError("no primitive polynomial found");
}

GaloisField::Elem GaloisField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (f_ == 1) return (a + b) % p_;
  auto x = digits(a), y = digits(b);
  for (unsigned i = 0; i < f_; ++i) x[i] = (x[i] + y[i]) % p_;
  return encode(x);
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const {
  if (f_ == 1) return (a + p_ - b) % p_;
  auto x = digits(a), y = digits(b);
  for (unsigned i = 0; i < f_; ++i) x[i] = (x[i] + p_ - y[i]) % p_;
  return encode(x);
}

GaloisField::Elem GaloisField::scale(Elem a, unsigned c) const {
  if (f_ == 1) return mul_mod(a, c % p_, p_);
  auto x = digits(a);
  for (auto& v : x) v = static_cast<unsigned>((static_cast<std::uint64_t>(v) * c) % p_);
  return encode(x);
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (f_ == 1) return mul_mod(a, b, p_);
  auto x = digits(a), y = digits(b);
  std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
  for (unsigned i = 0; i < f_; ++i)
    if (x[i])
      for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
  for (std::size_t k = prod.size(); k-- > f_;) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < f_; ++i)
      prod[k - f_ + i] = (prod[k - f_ + i] + (p_ - modulus_[i]) * c) % p_;
  }
  std::vector<unsigned> r(f_);
  for (unsigned i = 0; i < f_; ++i) r[i] = static_cast<unsigned>(prod[i]);
  return encode(r);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string GaloisField::to_string(Elem a) const {
  if (f_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string out;
  for (unsigned i = f_; i-- > 0;) {
    if (!d[i]) continue;
    if (!out.empty()) out += "+";
    if (d[i] != 1 || i == 0) out += std::to_string(d[i]);
    if (i >= 1) out += (d[i] != 1 ? "*x" : "x");
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ctc
