#include "arcsep/twist.hpp"

#include <map>
#include <mutex>

namespace arcsep {

namespace {

struct AffineMap {
  // x' = a x + b y + tx ; y' = c x + d y + ty
  Rat a = 1, b = 0, c = 0, d = 1, tx = 0, ty = 0;
  Vec2 apply(const Vec2& p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
};

AffineMap affine_from_triangles(const Vec2& p0, const Vec2& p1, const Vec2& p2, const Vec2& q0,
                                const Vec2& q1, const Vec2& q2) {
  Vec2 u = p1 - p0, v = p2 - p0;
  Vec2 s = q1 - q0, t = q2 - q0;
  Rat det = cross(u, v);
  ARCSEP_CHECK(det != 0, "degenerate source triangle");
  AffineMap m;
  m.a = (s.x * v.y - t.x * u.y) / det;
  m.b = (t.x * u.x - s.x * v.x) / det;
  m.c = (s.y * v.y - t.y * u.y) / det;
  m.d = (t.y * u.x - s.y * v.x) / det;
  m.tx = q0.x - m.a * p0.x - m.b * p0.y;
  m.ty = q0.y - m.c * p0.x - m.d * p0.y;
  return m;
}

struct Cell {
  std::vector<Vec2> poly;  // convex, ccw
  AffineMap map;
};

struct TwistComplex {
  int i = 0;
  int sign = +1;
  std::vector<Cell> cells;
  std::vector<Vec2> support;  // outer ring polygon
  std::vector<std::pair<Vec2, Vec2>> walls;
  // bounding box of the support
  Rat bx_lo, bx_hi, by_lo, by_hi;
};

constexpr int kRingPoints = 16;
constexpr int kRings = 9;  // ring 0 fixed .. ring 8 bounding the core

std::vector<Vec2> ring_directions() {
  std::vector<Vec2> dirs = {{14, 0}, {13, 5}, {10, 10}, {5, 13}, {0, 14}, {-5, 13}, {-10, 10},
                            {-13, 5}};
  for (int k = 0; k < 8; ++k) dirs.push_back(Vec2(Rat(0), Rat(0)) - dirs[k]);
  return dirs;
}

void validate_level(const std::vector<Vec2>& outer, const std::vector<Vec2>& inner,
                    const std::vector<Cell>& level_cells) {
  // each image triangle positively oriented and clear of the open hole
  Rat area_sum = 0;
  for (const Cell& c : level_cells) {
    std::vector<Vec2> img;
    for (const Vec2& p : c.poly) img.push_back(c.map.apply(p));
    Rat a_src = signed_area(c.poly), a_img = signed_area(img);
    ARCSEP_CHECK(a_src > 0 && a_img > 0, "twist cell flips orientation");
    area_sum += a_img;
    // hole disjointness: no inner-polygon vertex strictly inside the image,
    // no image edge crossing the inner polygon boundary properly
    Polyline tri;
    tri.pts = img;
    tri.closed = true;
    for (const Vec2& h : inner) {
      bool on = false;
      for (int s = 0; s < tri.segment_count(); ++s) {
        auto [u, v] = tri.segment(s);
        if (orient(u, v, h) == 0 && dot(h - u, h - v) <= 0) on = true;
      }
      ARCSEP_CHECK(on || !point_inside(tri, h), "twist image triangle covers the hole");
    }
    Polyline hole;
    hole.pts = inner;
    hole.closed = true;
    for (const ContactEvent& ev : contact_events(tri, hole))
      ARCSEP_CHECK(!ev.proper, "twist image triangle crosses the hole boundary");
  }
  ARCSEP_CHECK(area_sum == signed_area(outer) - signed_area(inner),
               "twist level does not tile its annulus");
}

TwistComplex build_twist(int i, int sign) {
  TwistComplex tc;
  tc.i = i;
  tc.sign = sign;
  Vec2 center(Rat(2 * i + 1, 2), Rat(0));
  std::vector<Vec2> dirs = ring_directions();

  // ring scales 1/10 * (9/10)^j
  std::vector<std::vector<Vec2>> ring(kRings);
  for (int j = 0; j < kRings; ++j) {
    Rat s(9, 10);
    Rat scale(1, 10);
    for (int q = 0; q < j; ++q) scale *= s;
    for (int k = 0; k < kRingPoints; ++k) ring[j].push_back(center + dirs[k] * scale);
  }
  tc.support = ring[0];

  // the support stays off the axis except between the two punctures and
  // clear of every other puncture; the core contains both punctures
  for (const Vec2& p : tc.support) {
    ARCSEP_CHECK(p.x > Rat(i) - Rat(3, 2) + Rat(1, 20) && p.x < Rat(i) + Rat(5, 2) - Rat(1, 20),
                 "twist support too wide");
    ARCSEP_CHECK(p.y > -2 && p.y < 2, "twist support leaves the disk");
  }
  Polyline core_poly;
  core_poly.pts = ring[kRings - 1];
  core_poly.closed = true;
  ARCSEP_CHECK(point_inside(core_poly, Vec2(Rat(i), Rat(0))) &&
                   point_inside(core_poly, Vec2(Rat(i + 1), Rat(0))),
               "twist core must contain its two punctures");

  auto rot = [&](int j, int k) { return (((k + sign * j) % kRingPoints) + kRingPoints) % kRingPoints; };

  for (int j = 0; j + 1 < kRings; ++j) {
    std::vector<Cell> level;
    for (int k = 0; k < kRingPoints; ++k) {
      int k1 = (k + 1) % kRingPoints;
      // vertex images: ring j rotates by sign*j steps, ring j+1 by sign*(j+1).
      // The quad (o_k, i_k, i_{k1}, o_{k1}) is split along the diagonal whose
      // image stays interior; that depends on the twist direction.
      auto make_cell = [&](int l0, int v0, int l1, int v1, int l2, int v2) {
        Cell c;
        c.poly = {ring[l0][v0], ring[l1][v1], ring[l2][v2]};
        c.map = affine_from_triangles(ring[l0][v0], ring[l1][v1], ring[l2][v2],
                                      ring[l0][rot(l0, v0)], ring[l1][rot(l1, v1)],
                                      ring[l2][rot(l2, v2)]);
        if (signed_area(c.poly) < 0) std::reverse(c.poly.begin(), c.poly.end());
        return c;
      };
      if (sign > 0) {  // diagonal i_k -- o_{k1}
        level.push_back(make_cell(j, k, j + 1, k, j, k1));
        level.push_back(make_cell(j + 1, k, j + 1, k1, j, k1));
      } else {  // diagonal o_k -- i_{k1}
        level.push_back(make_cell(j, k, j + 1, k, j + 1, k1));
        level.push_back(make_cell(j, k, j + 1, k1, j, k1));
      }
    }
    validate_level(ring[j], ring[j + 1], level);
    for (Cell& c : level) tc.cells.push_back(std::move(c));
  }

  // core: point reflection about the center (rotation by 8 of 16 steps)
  Cell core;
  core.poly = ring[kRings - 1];
  core.map = AffineMap{-1, 0, 0, -1, 2 * center.x, 2 * center.y};
  tc.cells.push_back(core);

  // walls for subdivision
  for (const Cell& c : tc.cells) {
    int m = static_cast<int>(c.poly.size());
    for (int k = 0; k < m; ++k) {
      const Vec2& a = c.poly[k];
      const Vec2& b = c.poly[(k + 1) % m];
      tc.walls.emplace_back(a, b);
    }
  }

  tc.bx_lo = tc.bx_hi = tc.support[0].x;
  tc.by_lo = tc.by_hi = tc.support[0].y;
  for (const Vec2& p : tc.support) {
    tc.bx_lo = std::min(tc.bx_lo, p.x);
    tc.bx_hi = std::max(tc.bx_hi, p.x);
    tc.by_lo = std::min(tc.by_lo, p.y);
    tc.by_hi = std::max(tc.by_hi, p.y);
  }
  return tc;
}

const TwistComplex& twist_complex(int i, int sign) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TwistComplex> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(i, sign);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_twist(i, sign)).first;
  return it->second;
}

Vec2 map_point_impl(const TwistComplex& tc, const Vec2& p) {
  if (p.x < tc.bx_lo || p.x > tc.bx_hi || p.y < tc.by_lo || p.y > tc.by_hi) return p;
  for (const Cell& c : tc.cells)
    if (point_in_convex(c.poly, p)) return c.map.apply(p);
  return p;  // outside the support polygon but inside its bbox
}

}  // namespace

Vec2 map_point(int signed_gen, const Vec2& p) {
  const TwistComplex& tc = twist_complex(std::abs(signed_gen), signed_gen > 0 ? +1 : -1);
  return map_point_impl(tc, p);
}

Polyline map_polyline(int signed_gen, const Polyline& p) {
  const TwistComplex& tc = twist_complex(std::abs(signed_gen), signed_gen > 0 ? +1 : -1);
  Polyline out;
  out.closed = p.closed;
  int m = p.segment_count();
  for (int s = 0; s < m; ++s) {
    auto [a, b] = p.segment(s);
    // split at wall crossings
    std::vector<Rat> ts = {Rat(0)};
    if (!(std::max(a.x, b.x) < tc.bx_lo || std::min(a.x, b.x) > tc.bx_hi ||
          std::max(a.y, b.y) < tc.by_lo || std::min(a.y, b.y) > tc.by_hi)) {
      Vec2 r = b - a;
      for (const auto& [w0, w1] : tc.walls) {
        Vec2 ss = w1 - w0;
        Rat rxs = cross(r, ss);
        Vec2 qp = w0 - a;
        if (rxs != 0) {
          Rat t = cross(qp, ss) / rxs;
          Rat u = cross(qp, r) / rxs;
          if (t > 0 && t < 1 && u >= 0 && u <= 1) ts.push_back(t);
        } else if (cross(qp, r) == 0) {
          // collinear overlap: split at the wall's endpoints
          Rat rr = dot(r, r);
          if (rr != 0) {
            for (const Vec2* e : {&w0, &w1}) {
              Rat t = dot(*e - a, r) / rr;
              if (t > 0 && t < 1) ts.push_back(t);
            }
          }
        }
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
    for (const Rat& t : ts) {
      Vec2 q = map_point_impl(tc, lerp(a, b, t));
      if (out.pts.empty() || out.pts.back() != q) out.pts.push_back(q);
    }
  }
  if (!p.closed) {
    Vec2 q = map_point_impl(tc, p.pts.back());
    if (out.pts.empty() || out.pts.back() != q) out.pts.push_back(q);
  } else {
    if (out.pts.size() >= 2 && out.pts.front() == out.pts.back()) out.pts.pop_back();
  }
  return out;
}

IsotopyClass apply_generator(const PuncturedDisk& d, int signed_gen, const IsotopyClass& x) {
  int i = std::abs(signed_gen);
  ARCSEP_CHECK(i >= 1 && i <= d.n - 1, "generator index out of range");
  Polyline img = map_polyline(signed_gen, x.rep);
  std::array<int, 2> eps = x.endpoints;
  if (x.kind == Kind::Arc) {
    for (int& e : eps) {
      if (e == i)
        e = i + 1;
      else if (e == i + 1)
        e = i;
    }
  }
  return make_class(d, img, x.kind, eps);
}

IsotopyClass apply_word(const PuncturedDisk& d, const std::vector<int>& word,
                        const IsotopyClass& x) {
  IsotopyClass cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_generator(d, *it, cur);
  return cur;
}

}  // namespace arcsep
