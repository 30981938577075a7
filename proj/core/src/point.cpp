#include "gnslab/point.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "gnslab/error.hpp"

namespace gnslab {
namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDimension) {
    throw Error(Errc::kRangeExceeded,
                "dimension must be in [1, " + std::to_string(kMaxDimension) +
                    "], got " + std::to_string(dim));
  }
}

Point::Coord narrow(std::int64_t v) {
  if (v < 0) {
    throw Error(Errc::kInvalidArgument, "lattice coordinates must be non-negative");
  }
  if (v > std::numeric_limits<Point::Coord>::max()) {
    throw Error(Errc::kRangeExceeded, "coordinate " + std::to_string(v) + " too large");
  }
  return static_cast<Point::Coord>(v);
}

void same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::kDimensionMismatch, "points of dimension " + std::to_string(a.dim()) +
                                              " and " + std::to_string(b.dim()));
  }
}

}  // namespace

Point::Point(int dim) : dim_(dim) { check_dim(dim); }

Point::Point(std::initializer_list<std::int64_t> coords)
    : Point(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Point::Point(std::span<const std::int64_t> coords) : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = narrow(coords[i]);
}

Point Point::axis(int dim, int axis, std::int64_t scale) {
  Point p(dim);
  if (axis < 0 || axis >= dim) {
    throw Error(Errc::kInvalidArgument, "axis index out of range");
  }
  p.c_[static_cast<std::size_t>(axis)] = narrow(scale);
  return p;
}

void Point::set(int i, std::int64_t v) { c_[static_cast<std::size_t>(i)] = narrow(v); }

std::int64_t Point::norm() const noexcept {
  std::int64_t s = 0;
  for (int i = 0; i < dim_; ++i) s += c_[static_cast<std::size_t>(i)];
  return s;
}

bool Point::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Coord v) { return v == 0; });
}

int Point::support() const noexcept {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](Coord v) { return v != 0; }));
}

Point& Point::operator+=(const Point& o) {
  same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = narrow(std::int64_t{c_[k]} + o.c_[k]);
  }
  return *this;
}

Point& Point::operator-=(const Point& o) {
  same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = narrow(std::int64_t{c_[k]} - o.c_[k]);
  }
  return *this;
}

Point operator*(std::int64_t k, Point a) {
  for (int i = 0; i < a.dim_; ++i) {
    auto j = static_cast<std::size_t>(i);
    a.c_[j] = narrow(k * a.c_[j]);
  }
  return a;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.norm() <=> b.norm(); c != 0) return c;
  return a.c_ <=> b.c_;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool leq(const Point& a, const Point& b) noexcept {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (int i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  // splitmix64 over the packed coordinates
  std::uint64_t h = static_cast<std::uint64_t>(p.dim());
  for (auto c : p.coords()) {
    h += 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(c);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

void normalize(PointSet& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

PointSet points_of_norm(int dim, std::int64_t norm) {
  check_dim(dim);
  PointSet out;
  if (norm < 0) return out;
  Point p(dim);
  // Lexicographically increasing compositions: the last coordinate absorbs
  // the remainder, earlier ones count up.
  auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
    if (i == dim - 1) {
      p.set(i, left);
      out.push_back(p);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      p.set(i, v);
      self(self, i + 1, left - v);
    }
    p.set(i, 0);
  };
  rec(rec, 0, norm);
  return out;
}

}  // namespace gnslab
