#pragma once

#include <optional>
#include <vector>

#include "arcsep/rational.hpp"

namespace arcsep {

// An embedded polygonal curve: open (pts front/back are the endpoints) or
// closed (implicit segment from back to front). Parameters run over
// [0, segment_count()], segment i covering [i, i+1].
struct Polyline {
  std::vector<Vec2> pts;
  bool closed = false;

  int segment_count() const {
    return closed ? static_cast<int>(pts.size()) : static_cast<int>(pts.size()) - 1;
  }
  std::pair<Vec2, Vec2> segment(int i) const {
    int m = static_cast<int>(pts.size());
    return {pts[i % m], pts[(i + 1) % m]};
  }
  Vec2 point_at(const Rat& param) const;
  Polyline reversed() const;
  // sub-polyline of an open polyline between two parameters (a <= b)
  Polyline slice(const Rat& a, const Rat& b) const;
};

// Direction of travel just after `param` (forward) or just before (backward),
// as an unnormalized vector. For closed polylines parameters wrap.
Vec2 dir_forward(const Polyline& p, const Rat& param);
Vec2 dir_backward(const Polyline& p, const Rat& param);

// A maximal connected contact between two polylines: either a single point
// (a_lo == a_hi) or a collinear run. `crossing` says whether A passes from one
// side of B to the other across this contact.
struct ContactEvent {
  Rat a_lo, a_hi;   // parameter range on A
  Rat b_lo, b_hi;   // parameter range on B (b_lo corresponds to a_lo's point)
  Vec2 p_lo, p_hi;  // contact endpoints: p_lo = A(a_lo), p_hi = A(a_hi)
  bool crossing = false;
  bool proper = false;  // single transverse interior point, no vertices involved
  int sign = 0;         // for proper crossings: orientation of (B dir, A dir)

  Rat a_mid() const { return (a_lo + a_hi) / 2; }
  Rat b_mid() const { return (b_lo + b_hi) / 2; }
};

struct ContactOptions {
  // Ignore contacts located exactly at an endpoint of the open polyline A
  // (resp. B). Used for arcs whose endpoints sit on punctures shared with
  // triangulation edges.
  bool skip_a_endpoints = false;
  bool skip_b_endpoints = false;
};

// All maximal contacts between A and B, sorted along A. Exact; tolerates
// vertex hits and collinear overlaps. A and B must each be embedded.
std::vector<ContactEvent> contact_events(const Polyline& a, const Polyline& b,
                                         const ContactOptions& opt = {});

// True if every contact is a proper transverse interior crossing.
bool all_contacts_proper(const std::vector<ContactEvent>& evs);

// Self-intersection test for one polyline (adjacent segments share endpoints;
// anything else is a violation).
bool is_embedded(const Polyline& p);

// Winding-parity point-in-region test for a closed polyline; `pt` must not
// lie on the polyline.
bool point_inside(const Polyline& closed_poly, const Vec2& pt);

// Convex polygon containment (boundary counts as inside).
bool point_in_convex(const std::vector<Vec2>& poly, const Vec2& pt);

// Signed area (ccw positive) of a closed polygon walk.
Rat signed_area(const std::vector<Vec2>& poly);

// Squared distance from a point to a segment.
Rat dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

std::string vec_to_string(const Vec2& v);

}  // namespace arcsep
