#pragma once

#include "arcsep/isotopy.hpp"

namespace arcsep {

// The half-twist generators sigma_i (1 <= i <= n-1) of the mapping class
// group of the punctured disk, realized as exact piecewise-affine
// homeomorphisms supported near punctures i, i+1. A positive generator
// rotates the support counterclockwise by pi, exchanging the two punctures.
//
// signed_gen: +i for sigma_i, -i for its inverse.
IsotopyClass apply_generator(const PuncturedDisk& d, int signed_gen, const IsotopyClass& x);

// Word applied right to left: the last entry acts first.
IsotopyClass apply_word(const PuncturedDisk& d, const std::vector<int>& word,
                        const IsotopyClass& x);

// The raw point map (exposed for tests).
Polyline map_polyline(int signed_gen, const Polyline& p);
Vec2 map_point(int signed_gen, const Vec2& p);

}  // namespace arcsep
