#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace arcsep {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Rat& r) { return sgn(r); }

struct Vec2 {
  Rat x, y;

  Vec2() : x(0), y(0) {}
  Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Vec2(long px, long py) : x(px), y(py) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Vec2 lerp(const Vec2& a, const Vec2& b, const Rat& t) {
  return a + (b - a) * t;
}

// Sign of the signed area of (a, b, c): +1 for a counterclockwise turn.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return sign_of(cross(b - a, c - a));
}

// Directions (nonzero vectors up to positive scaling).
inline bool same_dir(const Vec2& u, const Vec2& v) {
  return sign_of(cross(u, v)) == 0 && sign_of(dot(u, v)) > 0;
}

// Total order on directions by angle in [0, 2pi).
inline bool dir_less(const Vec2& u, const Vec2& v) {
  auto half = [](const Vec2& d) {  // 0 for angle in [0,pi), 1 for [pi,2pi)
    int sy = sign_of(d.y);
    if (sy != 0) return sy > 0 ? 0 : 1;
    return sign_of(d.x) > 0 ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return sign_of(cross(u, v)) > 0;
}

// Going counterclockwise from direction a, do we meet d strictly before b?
// Requires d not parallel-equal to a or b (check with same_dir first).
inline bool cyclic_between(const Vec2& a, const Vec2& d, const Vec2& b) {
  int cab = sign_of(cross(a, b));
  if (same_dir(a, b)) return !same_dir(a, d);  // full circle minus the ray a
  if (cab > 0)  // sector smaller than pi
    return sign_of(cross(a, d)) > 0 && sign_of(cross(d, b)) > 0;
  if (cab < 0)  // sector larger than pi
    return sign_of(cross(a, d)) > 0 || sign_of(cross(d, b)) > 0;
  // a, b anti-parallel: the sector is the open half-plane left of a
  return sign_of(cross(a, d)) > 0;
}

std::string rat_to_string(const Rat& r);

}  // namespace arcsep
