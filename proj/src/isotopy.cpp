#include "arcsep/isotopy.hpp"

#include <algorithm>

namespace arcsep {

namespace {

void validate_raw(const PuncturedDisk& d, const Polyline& raw, Kind kind,
                  std::array<int, 2> endpoints) {
  ARCSEP_CHECK(raw.pts.size() >= 2, "representative needs at least two points");
  if (kind == Kind::Arc) {
    ARCSEP_CHECK(!raw.closed, "arc representative must be open");
    if (endpoints[0] == endpoints[1])
      throw same_endpoint_error("arcs join two distinct punctures");
    ARCSEP_CHECK(raw.pts.front() == d.puncture(endpoints[0]) &&
                     raw.pts.back() == d.puncture(endpoints[1]),
                 "arc representative must start and end on its punctures");
  } else {
    ARCSEP_CHECK(raw.closed, "curve representative must be closed");
  }
  // strictly inside the disk rectangle
  for (const Vec2& p : raw.pts) {
    ARCSEP_CHECK(p.x > 0 && p.x < d.n + 1 && p.y > -d.height() && p.y < d.height(),
                 "representative leaves the disk");
  }
  // punctures only at arc endpoints
  int m = raw.segment_count();
  for (int i = 0; i < m; ++i) {
    auto [a, b] = raw.segment(i);
    for (int p = 1; p <= d.n; ++p) {
      Vec2 q = d.puncture(p);
      if (q == a || q == b) {
        bool own = kind == Kind::Arc && ((i == 0 && q == raw.pts.front()) ||
                                         (i == m - 1 && q == raw.pts.back()));
        if (!own) throw not_embedded_error("representative passes through a puncture");
        continue;
      }
      if (orient(a, b, q) == 0 && dot(q - a, q - b) < 0)
        throw not_embedded_error("representative passes through a puncture");
    }
  }
}

}  // namespace

IsotopyClass make_class(const PuncturedDisk& d, const Polyline& raw, Kind kind,
                        std::array<int, 2> endpoints) {
  validate_raw(d, raw, kind, endpoints);
  IsotopyClass c;
  c.kind = kind;
  c.word = reduce_against(d.t0, raw, kind, endpoints);
  if (kind == Kind::Arc && c.word.endpoints[0] > c.word.endpoints[1]) {
    // canonical traversal: from the smaller puncture
    std::swap(c.word.endpoints[0], c.word.endpoints[1]);
    std::reverse(c.word.seq.begin(), c.word.seq.end());
    std::reverse(c.word.faces.begin(), c.word.faces.end());
  }
  c.key = make_key(c.word);
  c.fp = make_fingerprint(d.t0, c.word);
  c.endpoints = c.key.endpoints;
  c.rep = tidy_rep(d.t0, c.word, 0);
  if (kind == Kind::Curve) {
    // essential: at least two punctures on both sides (the outer side counts
    // the boundary end)
    long inside = static_cast<long>(punctures_inside(d, c).size());
    if (inside < 2 || inside > d.n - 1)
      throw inessential_error("curve bounds a disk with " + std::to_string(inside) +
                              " punctures");
  }
  return c;
}

IsotopyClass seed_arc(const PuncturedDisk& d, int i, int j) {
  if (i < 1 || i > d.n || j < 1 || j > d.n)
    throw bad_marks_error("seed_arc puncture out of range");
  if (std::abs(i - j) != 1)
    throw bad_marks_error("seed_arc needs adjacent punctures");
  Polyline raw;
  raw.pts = {d.puncture(i), Vec2(Rat(i + j, 2), Rat(1, 4)), d.puncture(j)};
  return make_class(d, raw, Kind::Arc, {i, j});
}

IsotopyClass seed_curve(const PuncturedDisk& d, int lo, int hi) {
  if (lo < 1 || hi > d.n || lo > hi) throw bad_marks_error("seed_curve run out of range");
  Polyline raw;
  Rat l = Rat(lo) - Rat(1, 4), r = Rat(hi) + Rat(1, 4), h(1, 2);
  raw.pts = {Vec2(l, -h), Vec2(r, -h), Vec2(r, h), Vec2(l, h)};
  raw.closed = true;
  return make_class(d, raw, Kind::Curve);  // throws inessential when |run| < 2 or > n-1
}

IsotopyClass retidy(const PuncturedDisk& d, const IsotopyClass& c, int jitter_index) {
  IsotopyClass out = c;
  out.rep = tidy_rep(d.t0, c.word, jitter_index);
  return out;
}

std::vector<int> punctures_inside(const PuncturedDisk& d, const IsotopyClass& curve) {
  ARCSEP_CHECK(curve.kind == Kind::Curve, "punctures_inside expects a curve");
  std::vector<int> in;
  for (int p = 1; p <= d.n; ++p)
    if (point_inside(curve.rep, d.puncture(p))) in.push_back(p);
  return in;
}

Fingerprint fingerprint_t1(const PuncturedDisk& d, const IsotopyClass& c) {
  std::array<int, 2> eps = c.endpoints;
  ReducedWord w = reduce_against(d.t1, c.rep, c.kind, eps);
  return make_fingerprint(d.t1, w);
}

}  // namespace arcsep
