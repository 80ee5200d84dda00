#include "rotamap/perm.hpp"

#include <cctype>
#include <numeric>

#include "rotamap/error.hpp"

namespace rotamap {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error("BadPermutation", "image array is not a bijection");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles,
                       Point base) {
  Perm result = identity(degree);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    Perm c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from < base || to < base || from - base >= degree ||
          to - base >= degree) {
        throw Error("BadPermutation",
                    "cycle point " + std::to_string(from) + " out of range");
      }
      c.images_[from - base] = to - base;
    }
    // Validates repeated points inside one cycle.
    c = Perm(c.images_);
    result = result * c;
  }
  return result;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree,
                        Point base) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> current;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '(') {
      if (open) throw Error("ParseError", "nested '(' in cycle notation");
      open = true;
      current.clear();
      ++i;
    } else if (ch == ')') {
      if (!open) throw Error("ParseError", "unmatched ')' in cycle notation");
      open = false;
      cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!open) throw Error("ParseError", "point outside of a cycle");
      Point value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<Point>(text[i] - '0');
        ++i;
      }
      current.push_back(value);
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      ++i;
    } else {
      throw Error("ParseError",
                  std::string("unexpected character '") + ch + "'");
    }
  }
  if (open) throw Error("ParseError", "unterminated cycle");
  return from_cycles(degree, cycles, base);
}

Perm Perm::operator*(const Perm& other) const {
  if (other.degree() != degree()) {
    throw Error("DegreeMismatch", "cannot multiply permutations of degree " +
                                      std::to_string(degree()) + " and " +
                                      std::to_string(other.degree()));
  }
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[i] = other.images_[images_[i]];
  }
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[images_[i]] = static_cast<Point>(i);
  }
  return r;
}

Perm Perm::pow(long long exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Perm result = identity(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1ULL;
  }
  return result;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Perm::to_cycles(Point base) const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + base);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Perm conj(const Perm& h, const Perm& g) { return g.inverse() * h * g; }

std::size_t element_order(const Perm& p) {
  std::size_t order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    std::size_t q = start;
    while (!seen[q]) {
      seen[q] = true;
      q = p[q];
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace rotamap
