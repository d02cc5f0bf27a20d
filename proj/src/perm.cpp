#include "ctc/perm.hpp"

#include <algorithm>
#include <numeric>

#include "ctc/errors.hpp"

namespace ctc {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("permutation image list is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> moved(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw InputError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw InputError("bad character in cycle notation: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (v >= degree)
        throw InputError("point " + std::to_string(v) + " exceeds degree " +
                         std::to_string(degree));
      if (moved[v])
        throw InputError("cycles are not disjoint: " + std::string(text));
      moved[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[x] = rhs.images_[images_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Perm r(degree());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Perm Perm::conjugate_by(const Perm& g) const {
  // x^(g^-1 h g): send g[x] to g[h[x]].
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[g.images_[x]] = g.images_[images_[x]];
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t ord = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ctc
