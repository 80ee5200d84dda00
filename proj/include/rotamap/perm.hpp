#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rotamap {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1} stored as its image array.
//
// Products act on the right: (p * q)[i] == q[p[i]], so p is applied first.
// Conjugation follows the same convention: conj(h, g) == g^-1 * h * g.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  // Builds a permutation from disjoint or overlapping cycles; cycles are
  // composed left to right. Points are shifted down by `base`.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles,
                          Point base = 0);

  // Parses cycle notation such as "(1 4 5)(2 3)" or "(0,1)".
  static Perm parse_cycles(std::string_view text, std::size_t degree,
                           Point base = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<Point>& images() const noexcept { return images_; }
  Point operator[](std::size_t i) const { return images_[i]; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm pow(long long exponent) const;
  bool is_identity() const noexcept;

  std::string to_cycles(Point base = 0) const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// g^-1 h g
Perm conj(const Perm& h, const Perm& g);

// Least n >= 1 with p^n = identity.
std::size_t element_order(const Perm& p);

}  // namespace rotamap
