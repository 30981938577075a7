#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gnslab {

inline constexpr int kMaxDimension = 8;

/// A lattice point of N^d, 1 <= d <= kMaxDimension.
///
/// Ordering: `operator<=>` is the graded lexicographic order (coordinate sum
/// first, then lexicographic on coordinates). It is a monomial order and is
/// what every emitted point set is sorted by. The componentwise partial order
/// is `leq`.
class Point {
 public:
  using Coord = std::int32_t;

  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<std::int64_t> coords);
  explicit Point(std::span<const std::int64_t> coords);

  /// scale * e_axis in N^dim (axis is 0-based).
  static Point axis(int dim, int axis, std::int64_t scale = 1);

  int dim() const noexcept { return dim_; }
  std::int64_t operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  void set(int i, std::int64_t v);
  std::span<const Coord> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }

  std::int64_t norm() const noexcept;
  bool is_zero() const noexcept;
  /// Number of nonzero coordinates.
  int support() const noexcept;
  /// True iff this point lies on some coordinate axis (including 0).
  bool on_axis() const noexcept { return support() <= 1; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(std::int64_t k, Point a);

  friend bool operator==(const Point& a, const Point& b) noexcept {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept;

  std::string to_string() const;

 private:
  std::array<Coord, kMaxDimension> c_{};
  int dim_ = 0;
};

/// Componentwise a <= b.
bool leq(const Point& a, const Point& b) noexcept;

std::ostream& operator<<(std::ostream& os, const Point& p);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

using PointSet = std::vector<Point>;

/// Sorts in graded-lex order and removes duplicates.
void normalize(PointSet& points);

/// All points of N^dim with coordinate sum exactly `norm`, graded-lex order.
PointSet points_of_norm(int dim, std::int64_t norm);

}  // namespace gnslab
