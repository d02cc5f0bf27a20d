#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ctc {

/// A permutation of the points {0, ..., n-1}, acting on the right:
/// x^(ab) = (x^a)^b, so (a * b)[x] == b[a[x]].
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  /// Parses disjoint-cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs) { return *this = *this * rhs; }
  Perm inverse() const;
  Perm pow(long long k) const;
  /// g^-1 * this * g
  Perm conjugate_by(const Perm& g) const;

  bool is_identity() const;
  std::size_t order() const;
  std::string to_cycles() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace ctc
