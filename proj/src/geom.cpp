#include "arcsep/geom.hpp"

#include <algorithm>
#include <sstream>

#include "arcsep/errors.hpp"

namespace arcsep {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string vec_to_string(const Vec2& v) {
  return "(" + rat_to_string(v.x) + "," + rat_to_string(v.y) + ")";
}

Vec2 Polyline::point_at(const Rat& param) const {
  int m = segment_count();
  ARCSEP_CHECK(m > 0, "point_at on empty polyline");
  Rat t = param;
  if (closed) {
    // wrap into [0, m)
    Rat span(m);
    while (t < 0) t += span;
    while (t >= span) t -= span;
  }
  ARCSEP_CHECK(t >= 0 && t <= m, "parameter out of range");
  long idx = static_cast<long>(mpz_class(t.get_num() / t.get_den()).get_si());
  if (!closed && idx >= m) idx = m - 1;  // param == m hits the last endpoint
  Rat frac = t - idx;
  auto [a, b] = segment(static_cast<int>(idx));
  return lerp(a, b, frac);
}

Polyline Polyline::reversed() const {
  Polyline r = *this;
  std::reverse(r.pts.begin(), r.pts.end());
  return r;
}

Polyline Polyline::slice(const Rat& a, const Rat& b) const {
  ARCSEP_CHECK(!closed, "slice is for open polylines");
  ARCSEP_CHECK(a <= b, "slice needs ordered parameters");
  Polyline out;
  out.closed = false;
  out.pts.push_back(point_at(a));
  long lo = static_cast<long>(mpz_class(a.get_num() / a.get_den()).get_si());
  long hi = static_cast<long>(mpz_class(b.get_num() / b.get_den()).get_si());
  for (long i = lo + 1; i <= std::min<long>(hi, segment_count() - 1); ++i) {
    Vec2 v = pts[i];
    if (v != out.pts.back()) out.pts.push_back(v);
  }
  Vec2 end = point_at(b);
  if (end != out.pts.back()) out.pts.push_back(end);
  ARCSEP_CHECK(out.pts.size() >= 2, "degenerate slice");
  return out;
}

Vec2 dir_forward(const Polyline& p, const Rat& param) {
  int m = p.segment_count();
  Rat t = param;
  if (p.closed) {
    Rat span(m);
    while (t < 0) t += span;
    while (t >= span) t -= span;
  }
  long idx = static_cast<long>(mpz_class(t.get_num() / t.get_den()).get_si());
  if (t == idx) {
    // at a vertex: direction of the outgoing segment
    if (!p.closed && idx >= m) ARCSEP_CHECK(false, "dir_forward at open end");
  }
  if (!p.closed && idx >= m) idx = m - 1;
  auto [a, b] = p.segment(static_cast<int>(idx % m));
  return b - a;
}

Vec2 dir_backward(const Polyline& p, const Rat& param) {
  int m = p.segment_count();
  Rat t = param;
  if (p.closed) {
    Rat span(m);
    while (t <= 0) t += span;
    while (t > span) t -= span;
  }
  ARCSEP_CHECK(t > 0, "dir_backward at open start");
  long idx = static_cast<long>(mpz_class(t.get_num() / t.get_den()).get_si());
  if (t == idx) idx -= 1;  // at a vertex: incoming segment
  auto [a, b] = p.segment(static_cast<int>(idx % m));
  return a - b;  // pointing back
}

Rat signed_area(const std::vector<Vec2>& poly) {
  Rat s = 0;
  int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) s += cross(poly[i], poly[(i + 1) % m]);
  return s / 2;
}

bool point_in_convex(const std::vector<Vec2>& poly, const Vec2& pt) {
  int m = static_cast<int>(poly.size());
  int want = 0;
  for (int i = 0; i < m; ++i) {
    int o = orient(poly[i], poly[(i + 1) % m], pt);
    if (o == 0) continue;
    if (want == 0)
      want = o;
    else if (o != want)
      return false;
  }
  return true;
}

Rat dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  Vec2 ab = b - a;
  Rat len2 = dot(ab, ab);
  if (len2 == 0) {
    Vec2 d = p - a;
    return dot(d, d);
  }
  Rat t = dot(p - a, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  Vec2 proj = lerp(a, b, t);
  Vec2 d = p - proj;
  return dot(d, d);
}

bool point_inside(const Polyline& poly, const Vec2& pt) {
  ARCSEP_CHECK(poly.closed, "point_inside needs a closed polyline");
  // Ray cast in +x direction with the standard half-open rule on y.
  bool inside = false;
  int m = poly.segment_count();
  for (int i = 0; i < m; ++i) {
    auto [a, b] = poly.segment(i);
    bool a_below = a.y <= pt.y, b_below = b.y <= pt.y;
    if (a_below == b_below) continue;
    // x coordinate of the crossing of segment with the horizontal line
    Rat t = (pt.y - a.y) / (b.y - a.y);
    Rat x = a.x + (b.x - a.x) * t;
    ARCSEP_CHECK(x != pt.x, "point_inside query point on the polyline");
    if (x > pt.x) inside = !inside;
  }
  return inside;
}

namespace {

struct RawContact {
  Rat a_lo, a_hi;
  Rat b_lo, b_hi;  // parameters matched to a_lo/a_hi points
};

// Intersection of segment [p0,p1] (params s in [0,1]) with [q0,q1] (t in
// [0,1]): returns contacts in local params.
std::vector<RawContact> segment_contacts(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                                         const Vec2& q1) {
  std::vector<RawContact> out;
  Vec2 r = p1 - p0, s = q1 - q0;
  Rat rxs = cross(r, s);
  Vec2 qp = q0 - p0;
  if (rxs != 0) {
    Rat t = cross(qp, s) / rxs;  // along A
    Rat u = cross(qp, r) / rxs;  // along B
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) out.push_back({t, t, u, u});
    return out;
  }
  if (cross(qp, r) != 0) return out;  // parallel, not collinear
  // collinear: project B's endpoints on A's parameter
  Rat rr = dot(r, r);
  if (rr == 0) return out;  // degenerate segment, ignore
  Rat t0 = dot(q0 - p0, r) / rr;
  Rat t1 = dot(q1 - p0, r) / rr;
  Rat u0 = 0, u1 = 1;
  if (t0 > t1) {
    std::swap(t0, t1);
    std::swap(u0, u1);
  }
  Rat lo = std::max(Rat(0), t0), hi = std::min(Rat(1), t1);
  if (lo > hi) return out;
  auto b_at = [&](const Rat& t) -> Rat {  // B param matched to A param t
    if (t1 == t0) return u0;
    return u0 + (u1 - u0) * (t - t0) / (t1 - t0);
  };
  out.push_back({lo, hi, b_at(lo), b_at(hi)});
  return out;
}

// Side of B (+1 left / -1 right / 0 on) seen from direction d at the point
// with parameter bp on B.
int side_of(const Polyline& b, const Rat& bp, const Vec2& d) {
  int m = b.segment_count();
  bool at_start = !b.closed && bp == 0;
  bool at_end = !b.closed && bp == m;
  if (at_start || at_end) {
    // B ends here; the complement of a ray is a single sector. No side.
    return 0;
  }
  Vec2 r_fwd = dir_forward(b, bp);
  Vec2 r_back = dir_backward(b, bp);
  if (same_dir(r_fwd, d) || same_dir(r_back, d)) return 0;
  if (cyclic_between(r_fwd, d, r_back)) return +1;
  return -1;
}

}  // namespace

std::vector<ContactEvent> contact_events(const Polyline& a, const Polyline& b,
                                         const ContactOptions& opt) {
  std::vector<RawContact> raw;
  int ma = a.segment_count(), mb = b.segment_count();
  for (int i = 0; i < ma; ++i) {
    auto [p0, p1] = a.segment(i);
    // cheap bounding-box cull
    Rat ax_lo = std::min(p0.x, p1.x), ax_hi = std::max(p0.x, p1.x);
    Rat ay_lo = std::min(p0.y, p1.y), ay_hi = std::max(p0.y, p1.y);
    for (int j = 0; j < mb; ++j) {
      auto [q0, q1] = b.segment(j);
      if (std::max(q0.x, q1.x) < ax_lo || std::min(q0.x, q1.x) > ax_hi ||
          std::max(q0.y, q1.y) < ay_lo || std::min(q0.y, q1.y) > ay_hi)
        continue;
      for (RawContact c : segment_contacts(p0, p1, q0, q1)) {
        raw.push_back({c.a_lo + i, c.a_hi + i, c.b_lo + j, c.b_hi + j});
      }
    }
  }
  if (raw.empty()) return {};

  // Cluster contacts that touch along A. Two contacts belong together when
  // their A-ranges intersect (same geometric contact seen from two segment
  // pairs, or a longer collinear run).
  std::sort(raw.begin(), raw.end(),
            [](const RawContact& x, const RawContact& y) { return x.a_lo < y.a_lo; });
  std::vector<RawContact> merged;
  for (const RawContact& c : raw) {
    if (!merged.empty() && c.a_lo <= merged.back().a_hi) {
      RawContact& m = merged.back();
      if (c.a_hi > m.a_hi) {
        m.a_hi = c.a_hi;
        m.b_hi = c.b_hi;
      }
      if (c.a_lo < m.a_lo) {  // cannot happen under sort, kept for clarity
        m.a_lo = c.a_lo;
        m.b_lo = c.b_lo;
      }
      continue;
    }
    merged.push_back(c);
  }
  // For a closed A the first and last cluster may wrap around param 0.
  if (a.closed && merged.size() >= 2) {
    RawContact& first = merged.front();
    RawContact& last = merged.back();
    if (first.a_lo == 0 && last.a_hi == ma) {
      first.a_lo = last.a_lo - ma;
      first.b_lo = last.b_lo;
      merged.pop_back();
    }
  }

  std::vector<ContactEvent> events;
  for (const RawContact& c : merged) {
    if (opt.skip_a_endpoints && !a.closed) {
      // drop only contacts wholly at an endpoint of A (an arc resting on its
      // own puncture); runs emerging from the endpoint stay visible
      if (c.a_lo == c.a_hi && (c.a_lo == 0 || c.a_lo == ma)) continue;
    }
    ContactEvent ev;
    ev.a_lo = c.a_lo;
    ev.a_hi = c.a_hi;
    ev.b_lo = c.b_lo;
    ev.b_hi = c.b_hi;
    ev.p_lo = a.point_at(c.a_lo < 0 ? c.a_lo + ma : c.a_lo);
    ev.p_hi = a.point_at(c.a_hi);
    if (opt.skip_b_endpoints && !b.closed) {
      if ((ev.b_lo == 0 || ev.b_lo == mb) && (ev.b_hi == 0 || ev.b_hi == mb) &&
          ev.a_lo == ev.a_hi)
        continue;
    }
    bool a_interior_point = ev.a_lo == ev.a_hi && ev.a_lo != 0 && ev.a_hi != ma;
    bool at_b_end = !b.closed && (ev.b_lo == 0 || ev.b_lo == mb || ev.b_hi == 0 || ev.b_hi == mb);
    if (at_b_end) {
      // Touching the tip of B never separates the two sides.
      ev.crossing = false;
      ev.proper = false;
      events.push_back(ev);
      continue;
    }
    // A ends exactly on B's interior (possible for arcs sharing a puncture
    // with an edge endpoint is excluded; anything else is a genuine stop on
    // the curve). Treat as non-crossing touch; callers decide what to do.
    if (!a.closed && (ev.a_lo == 0 || ev.a_hi == ma)) {
      ev.crossing = false;
      ev.proper = false;
      events.push_back(ev);
      continue;
    }
    Vec2 u = dir_backward(a, ev.a_lo);  // direction back toward where A came from
    Vec2 v = dir_forward(a, ev.a_hi);   // direction A leaves along
    int side_in = side_of(b, ev.b_lo, u);
    int side_out = side_of(b, ev.b_hi, v);
    ARCSEP_CHECK(side_in != 0 && side_out != 0,
                 "contact cluster not maximal (direction lies along the other curve)");
    ev.crossing = side_in != side_out;
    if (ev.crossing && a_interior_point && ev.b_lo == ev.b_hi) {
      // proper only when away from both vertex sets
      bool a_vertex = ev.a_lo.get_den() == 1;
      bool b_vertex = ev.b_lo.get_den() == 1;
      if (!a_vertex && !b_vertex) {
        ev.proper = true;
        Vec2 bd = dir_forward(b, ev.b_lo);
        Vec2 ad = dir_forward(a, ev.a_lo);
        ev.sign = sign_of(cross(bd, ad));
      }
    }
    events.push_back(ev);
  }
  return events;
}

bool all_contacts_proper(const std::vector<ContactEvent>& evs) {
  return std::all_of(evs.begin(), evs.end(), [](const ContactEvent& e) { return e.proper; });
}

bool is_embedded(const Polyline& p) {
  int m = p.segment_count();
  int npts = static_cast<int>(p.pts.size());
  for (int i = 0; i < m; ++i) {
    auto [p0, p1] = p.segment(i);
    if (p0 == p1) return false;
    for (int j = i + 1; j < m; ++j) {
      auto [q0, q1] = p.segment(j);
      bool adjacent = (j == i + 1) || (p.closed && i == 0 && j == m - 1);
      auto contacts = segment_contacts(p0, p1, q0, q1);
      for (const RawContact& c : contacts) {
        if (adjacent) {
          // only the shared vertex may touch
          bool at_shared = c.a_lo == c.a_hi && ((j == i + 1 && c.a_lo == 1 && c.b_lo == 0) ||
                                                (j == m - 1 && i == 0 && c.a_lo == 0 && c.b_lo == 1));
          if (!at_shared) return false;
        } else if (!p.closed && i == 0 && j == m - 1 && npts >= 2 &&
                   p.pts.front() == p.pts.back()) {
          return false;  // open polyline closing on itself
        } else {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace arcsep
