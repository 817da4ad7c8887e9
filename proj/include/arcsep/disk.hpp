#pragma once

#include <array>
#include <memory>
#include <vector>

#include "arcsep/errors.hpp"
#include "arcsep/geom.hpp"

namespace arcsep {

// Vertex ids: 1..n are the punctures at (1,0)..(n,0); 0 is the ideal vertex
// "infinity", realized as the boundary rectangle of the disk.
constexpr int kBoundaryVertex = 0;

struct TriEdge {
  int id = -1;
  int v0 = 0, v1 = 0;  // endpoint vertex ids (0 = boundary)
  Polyline geom;       // open polyline from v0's point to v1's point/boundary
};

struct TriFace {
  int id = -1;
  std::array<int, 3> vertices{};  // corner vertex ids, ccw
  std::array<int, 3> edges{};     // edges[c] is the side opposite vertices[c]
  std::vector<Vec2> poly;         // geometric region (convex for the vertical fan)
};

// An ideal triangulation of the n-punctured disk, seen as the (n+1)-punctured
// sphere. Euler data is validated on construction: E = 3V-6, F = 2V-4 with
// V = n+1.
struct Triangulation {
  int n = 0;
  std::vector<TriEdge> edges;
  std::vector<TriFace> faces;

  int face_at(const Vec2& p) const;                // p off all edges
  bool edge_has_vertex(int e, int v) const {
    return edges[e].v0 == v || edges[e].v1 == v;
  }
  // faces incident to an edge (exactly two)
  std::array<int, 2> edge_faces(int e) const;
  // the face corner index of vertex v in face f, or -1
  int corner_of(int f, int v) const;
};

// Marks on the punctures: Q is a plain subset, blocks an optional partition
// of a subset into nonempty disjoint blocks (Q is then their union).
struct Marks {
  std::vector<int> q;                    // sorted puncture ids
  std::vector<std::vector<int>> blocks;  // may be empty (plain Q)

  bool in_q(int p) const;
  int block_of(int p) const;  // -1 when p is in no block
};

struct PuncturedDisk {
  int n = 0;
  Marks marks;
  Triangulation t0;  // vertical fan: axis edges, up rays, down rays
  Triangulation t1;  // fan from puncture 1: axis edges, up rays, nested under-arcs

  Vec2 puncture(int i) const { return Vec2(Rat(i), Rat(0)); }
  Rat height() const { return Rat(2); }
  Polyline boundary() const;
};

// n >= 3; marks must reference existing punctures; blocks must be disjoint
// and nonempty. Throws bad_marks_error.
PuncturedDisk make_disk(int n, const std::vector<int>& q);
PuncturedDisk make_disk(int n, const std::vector<std::vector<int>>& blocks);
PuncturedDisk make_disk(int n);  // all punctures marked, no blocks

}  // namespace arcsep
