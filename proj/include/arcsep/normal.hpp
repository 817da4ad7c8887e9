#pragma once

#include <array>
#include <compare>
#include <vector>

#include "arcsep/disk.hpp"

namespace arcsep {

enum class Kind { Arc, Curve };

// One crossing of a representative with a triangulation edge.
struct CrossRec {
  int edge = -1;
  Rat a_param;  // along the representative
  Rat b_param;  // along the edge (orders strands on the edge)
  int slot = 0; // 1-based rank of b_param among surviving crossings of edge
};

// Combinatorial normal form of a representative against one triangulation:
// the reduced crossing sequence together with the visited faces.
// faces.size() == seq.size() + 1 for arcs (start face first); for curves
// faces[i] is the face between seq[i] and seq[i+1], cyclically, and
// faces.size() == seq.size() (empty sequence: sole_face only).
struct ReducedWord {
  Kind kind = Kind::Arc;
  std::array<int, 2> endpoints{0, 0};  // arcs: traversal order; curves unused
  std::vector<CrossRec> seq;
  std::vector<int> faces;
  int sole_face = -1;  // face containing a crossing-free representative
};

// Scans `rep` against the triangulation and removes every bigon and
// puncture-corner bigon combinatorially. The representative is not modified;
// the surviving crossings keep their geometric positions, which fixes the
// strand order on every edge. Throws not_embedded_error on self-crossing
// input and inessential_error for null-homotopic closed curves.
ReducedWord reduce_against(const Triangulation& t, const Polyline& rep, Kind kind,
                           std::array<int, 2> endpoints);

// Canonical per-class identifier: (edge, slot) sequence, canonicalized over
// traversal direction (arcs: from the smaller endpoint) and rotation+direction
// (curves: lexicographic minimum).
struct NormalKey {
  Kind kind = Kind::Arc;
  std::array<int, 2> endpoints{0, 0};  // arcs: (lo, hi); curves: {0,0}
  std::vector<std::pair<int, int>> seq;

  auto operator<=>(const NormalKey&) const = default;
  bool operator==(const NormalKey&) const = default;
};

NormalKey make_key(const ReducedWord& w);

// Spec-shaped invariant: intersection numbers with every edge, per-triangle
// corner counts, per-triangle end counts, and the (ordered) endpoint pair.
struct Fingerprint {
  Kind kind = Kind::Arc;
  std::array<int, 2> endpoints{0, 0};
  std::vector<long> edge_counts;                  // by edge id
  std::vector<std::array<long, 3>> corner_counts; // by face id, corner index
  std::vector<std::array<long, 3>> end_counts;    // by face id, corner index

  auto operator<=>(const Fingerprint&) const = default;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint make_fingerprint(const Triangulation& t, const ReducedWord& w);

// Rebuilds the canonical compact representative realizing the normal form:
// crossing k of an edge with m survivors sits at parameter ~k/(m+1), faces
// are crossed by straight chords. jitter_index > 0 perturbs the positions
// (class-preserving) to restore transversality in degenerate pair scans.
Polyline tidy_rep(const Triangulation& t0, const ReducedWord& w, int jitter_index = 0);

}  // namespace arcsep
