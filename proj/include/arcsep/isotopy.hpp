#pragma once

#include "arcsep/normal.hpp"

namespace arcsep {

// An isotopy class of an essential simple arc (between two distinct
// punctures) or closed curve on the punctured disk, carried by its canonical
// compact representative. Immutable once built; all operations are pure.
struct IsotopyClass {
  Kind kind = Kind::Arc;
  std::array<int, 2> endpoints{0, 0};  // arcs: lo <= hi
  Polyline rep;                        // tidy representative
  ReducedWord word;                    // normal form against T0
  NormalKey key;
  Fingerprint fp;

  bool is_arc() const { return kind == Kind::Arc; }
};

inline bool same_class(const IsotopyClass& a, const IsotopyClass& b) { return a.key == b.key; }

// Reduces an arbitrary embedded representative to its class. Arcs must run
// from puncture `endpoints[0]` to `endpoints[1]` (distinct). Throws
// not_embedded_error / inessential_error.
IsotopyClass make_class(const PuncturedDisk& d, const Polyline& raw, Kind kind,
                        std::array<int, 2> endpoints = {0, 0});

// The straight arc class between adjacent punctures i, j (|i-j| == 1).
IsotopyClass seed_arc(const PuncturedDisk& d, int i, int j);

// The round curve enclosing exactly the punctures lo..hi (consecutive run).
// Throws inessential_error when the run has fewer than 2 or more than n-1
// punctures.
IsotopyClass seed_curve(const PuncturedDisk& d, int lo, int hi);

// Same class, representative rebuilt with perturbed crossing positions.
IsotopyClass retidy(const PuncturedDisk& d, const IsotopyClass& c, int jitter_index);

// Punctures enclosed by a curve class (winding parity of the tidy rep).
std::vector<int> punctures_inside(const PuncturedDisk& d, const IsotopyClass& curve);

// Fingerprint of the class against the disk's second triangulation; used by
// the cross-validation property checks.
Fingerprint fingerprint_t1(const PuncturedDisk& d, const IsotopyClass& c);

}  // namespace arcsep
