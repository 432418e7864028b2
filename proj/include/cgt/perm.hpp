#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cgt {

using Point = std::uint32_t;

// Bijection on {0, ..., d-1}. Products compose as functions:
// (a * b)[x] = a[b[x]], so b is applied first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);  // throws InputError unless bijective

  static Perm identity(std::size_t degree);
  // Product of disjoint or overlapping cycles, applied right to left.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::uint64_t order() const;
  Perm pow(std::int64_t e) const;
  // Smallest moved point, or degree() for the identity.
  Point first_moved() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

  std::string cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace cgt
