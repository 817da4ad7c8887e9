#include "arcsep/disk.hpp"

#include <algorithm>
#include <set>

namespace arcsep {

namespace {

Polyline seg(const Vec2& a, const Vec2& b) {
  Polyline p;
  p.pts = {a, b};
  return p;
}

// Orders face data so that vertices are ccw and edges[c] is opposite
// vertices[c]; fills the geometric polygon.
TriFace make_face(int id, std::array<int, 3> vs, std::array<int, 3> es, std::vector<Vec2> poly) {
  TriFace f;
  f.id = id;
  f.vertices = vs;
  f.edges = es;
  f.poly = std::move(poly);
  ARCSEP_CHECK(signed_area(f.poly) > 0, "face polygon must be ccw");
  return f;
}

void validate(const Triangulation& t) {
  long v = t.n + 1;
  ARCSEP_CHECK(static_cast<long>(t.edges.size()) == 3 * v - 6, "edge count != 3V-6");
  ARCSEP_CHECK(static_cast<long>(t.faces.size()) == 2 * v - 4, "face count != 2V-4");
  // each edge appears in exactly two faces
  std::vector<int> uses(t.edges.size(), 0);
  for (const TriFace& f : t.faces)
    for (int e : f.edges) uses[e]++;
  for (int u : uses) ARCSEP_CHECK(u == 2, "every edge bounds two faces");
  // edges meet only at punctures
  for (size_t i = 0; i < t.edges.size(); ++i)
    for (size_t j = i + 1; j < t.edges.size(); ++j) {
      for (const ContactEvent& ev :
           contact_events(t.edges[i].geom, t.edges[j].geom)) {
        bool at_ends = ev.a_lo == ev.a_hi &&
                       (ev.a_lo == 0 || ev.a_lo == t.edges[i].geom.segment_count());
        ARCSEP_CHECK(at_ends, "triangulation edges overlap off punctures");
      }
    }
}

Triangulation vertical_fan(int n) {
  // Edges: s_i = axis [p_i, p_{i+1}] (i=1..n-1), u_i = up rays to the top
  // wall (i=1..n), d_i = down rays (i=2..n-1). Faces: upper strips U_i and
  // lower strips L_i between consecutive rays (d_1 := u_1's lower mirror is
  // replaced by the wrap-around region realized by strips L_1..L_{n-1} with
  // the outer walls standing in for the ideal vertex).
  Triangulation t;
  t.n = n;
  Rat top(2), bot(-2);
  auto P = [](int i) { return Vec2(Rat(i), Rat(0)); };

  std::vector<int> s(n), u(n + 1), d(n + 1);
  for (int i = 1; i < n; ++i) {
    s[i] = static_cast<int>(t.edges.size());
    t.edges.push_back({s[i], i, i + 1, seg(P(i), P(i + 1))});
  }
  for (int i = 1; i <= n; ++i) {
    u[i] = static_cast<int>(t.edges.size());
    t.edges.push_back({u[i], i, kBoundaryVertex, seg(P(i), Vec2(Rat(i), top))});
  }
  // down rays from interior punctures; the two lower wrap regions next to
  // p_1 and p_n close up through the side walls
  for (int i = 2; i <= n - 1; ++i) {
    d[i] = static_cast<int>(t.edges.size());
    t.edges.push_back({d[i], i, kBoundaryVertex, seg(P(i), Vec2(Rat(i), bot))});
  }

  for (int i = 1; i < n; ++i) {
    int id = static_cast<int>(t.faces.size());
    std::vector<Vec2> poly = {P(i), P(i + 1), Vec2(Rat(i + 1), top), Vec2(Rat(i), top)};
    // corner at infinity opposite s_i; corner p_i opposite u_{i+1}; corner
    // p_{i+1} opposite u_i
    t.faces.push_back(
        make_face(id, {kBoundaryVertex, i, i + 1}, {s[i], u[i + 1], u[i]}, std::move(poly)));
  }
  for (int i = 1; i < n; ++i) {
    int id = static_cast<int>(t.faces.size());
    int left = (i == 1) ? u[1] : d[i];
    int right = (i == n - 1) ? u[n] : d[i + 1];
    std::vector<Vec2> poly;
    if (i == 1) {
      // wraps around the left wall of the rectangle
      poly = {Vec2(Rat(1), top), Vec2(Rat(0), top), Vec2(Rat(0), bot), Vec2(Rat(2), bot),
              P(2), P(1)};
    } else if (i == n - 1) {
      // wraps around the right wall
      poly = {P(i), Vec2(Rat(i), bot), Vec2(Rat(n + 1), bot), Vec2(Rat(n + 1), top),
              Vec2(Rat(n), top), P(n)};
    } else {
      poly = {P(i), Vec2(Rat(i), bot), Vec2(Rat(i + 1), bot), P(i + 1)};
    }
    if (signed_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    t.faces.push_back(
        make_face(id, {kBoundaryVertex, i + 1, i}, {s[i], left, right}, std::move(poly)));
  }
  validate(t);
  return t;
}

Triangulation p1_fan(int n) {
  // Fan from puncture 1 below the axis: edges s_i and u_i as in the vertical
  // fan, plus nested under-arcs g_j from p_1 to p_j (j = 3..n). Upper faces
  // match the vertical fan; lower faces are (p_1, p_j, p_{j+1}) plus the
  // outer region (p_1, p_n, infinity).
  Triangulation t;
  t.n = n;
  Rat top(2);
  auto P = [](int i) { return Vec2(Rat(i), Rat(0)); };

  std::vector<int> s(n), u(n + 1), g(n + 1);
  for (int i = 1; i < n; ++i) {
    s[i] = static_cast<int>(t.edges.size());
    t.edges.push_back({s[i], i, i + 1, seg(P(i), P(i + 1))});
  }
  for (int i = 1; i <= n; ++i) {
    u[i] = static_cast<int>(t.edges.size());
    t.edges.push_back({u[i], i, kBoundaryVertex, seg(P(i), Vec2(Rat(i), top))});
  }
  auto depth = [&](int j) -> Rat { return Rat(j - 2, 1) / Rat(n, 1) + Rat(1, 2); };  // in (0, 2)
  // distinct launch slopes keep the nested arcs disjoint away from p_1
  auto launch_x = [&](int j) -> Rat { return Rat(1) - depth(j) * depth(j) / 8; };
  for (int j = 3; j <= n; ++j) {
    g[j] = static_cast<int>(t.edges.size());
    Rat h = depth(j);
    Polyline arc;
    arc.pts = {P(1), Vec2(launch_x(j), -h), Vec2(Rat(j), -h), P(j)};
    t.edges.push_back({g[j], 1, j, std::move(arc)});
  }

  for (int i = 1; i < n; ++i) {
    int id = static_cast<int>(t.faces.size());
    std::vector<Vec2> poly = {P(i), P(i + 1), Vec2(Rat(i + 1), top), Vec2(Rat(i), top)};
    t.faces.push_back(
        make_face(id, {kBoundaryVertex, i, i + 1}, {s[i], u[i + 1], u[i]}, std::move(poly)));
  }
  // lower fan triangles (p_1, p_j, p_{j+1}) for j = 2..n-1; sides: gap
  // between under-arcs g_j, g_{j+1} (g_2 := s_1), the axis edge s_j
  for (int j = 2; j <= n - 1; ++j) {
    int id = static_cast<int>(t.faces.size());
    int near = (j == 2) ? s[1] : g[j];
    Rat h_in = (j == 2) ? Rat(0) : depth(j);
    Rat h_out = depth(j + 1);
    std::vector<Vec2> poly;
    poly.push_back(P(1));
    if (j > 2) {
      poly.push_back(Vec2(launch_x(j), -h_in));
      poly.push_back(Vec2(Rat(j), -h_in));
    }
    poly.push_back(P(j));
    poly.push_back(P(j + 1));
    poly.push_back(Vec2(Rat(j + 1), -h_out));
    poly.push_back(Vec2(launch_x(j + 1), -h_out));
    if (signed_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    t.faces.push_back(make_face(id, {1, j + 1, j}, {s[j], near, g[j + 1]}, std::move(poly)));
  }
  // outer region (p_1, p_n, infinity): below g_n plus the side/top walls
  {
    int id = static_cast<int>(t.faces.size());
    Rat h = depth(n), bot(-2);
    std::vector<Vec2> poly = {P(1),
                              Vec2(launch_x(n), -h),
                              Vec2(Rat(n), -h),
                              P(n),
                              Vec2(Rat(n), top),
                              Vec2(Rat(n + 1), top),
                              Vec2(Rat(n + 1), bot),
                              Vec2(Rat(0), bot),
                              Vec2(Rat(0), top),
                              Vec2(Rat(1), top)};
    if (signed_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    t.faces.push_back(make_face(id, {kBoundaryVertex, 1, n}, {g[n], u[n], u[1]}, std::move(poly)));
  }
  validate(t);
  return t;
}

}  // namespace

int Triangulation::face_at(const Vec2& p) const {
  for (const TriFace& f : faces) {
    // faces partition the rectangle; use winding on the polygon
    Polyline poly;
    poly.pts = f.poly;
    poly.closed = true;
    bool on_boundary = false;
    for (int i = 0; i < poly.segment_count(); ++i) {
      auto [a, b] = poly.segment(i);
      if (orient(a, b, p) == 0 && dot(p - a, p - b) <= 0) {
        on_boundary = true;
        break;
      }
    }
    if (on_boundary) continue;
    if (point_inside(poly, p)) return f.id;
  }
  throw internal_error("face_at: point on an edge or outside the disk: " + vec_to_string(p));
}

std::array<int, 2> Triangulation::edge_faces(int e) const {
  std::array<int, 2> out{-1, -1};
  int k = 0;
  for (const TriFace& f : faces)
    for (int fe : f.edges)
      if (fe == e) {
        ARCSEP_CHECK(k < 2, "edge in more than two faces");
        out[k++] = f.id;
      }
  ARCSEP_CHECK(k == 2, "edge not in two faces");
  return out;
}

int Triangulation::corner_of(int f, int v) const {
  for (int c = 0; c < 3; ++c)
    if (faces[f].vertices[c] == v) return c;
  return -1;
}

bool Marks::in_q(int p) const { return std::binary_search(q.begin(), q.end(), p); }

int Marks::block_of(int p) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), p) != blocks[b].end())
      return static_cast<int>(b);
  return -1;
}

Polyline PuncturedDisk::boundary() const {
  Polyline p;
  Rat top = height(), bot = -height();
  p.pts = {Vec2(Rat(0), bot), Vec2(Rat(n + 1), bot), Vec2(Rat(n + 1), top), Vec2(Rat(0), top)};
  p.closed = true;
  return p;
}

namespace {

PuncturedDisk make_disk_impl(int n, Marks marks) {
  if (n < 3) throw bad_marks_error("disk needs at least 3 punctures, got " + std::to_string(n));
  for (int p : marks.q)
    if (p < 1 || p > n) throw bad_marks_error("mark references missing puncture " + std::to_string(p));
  PuncturedDisk d;
  d.n = n;
  d.marks = std::move(marks);
  d.t0 = vertical_fan(n);
  d.t1 = p1_fan(n);
  return d;
}

}  // namespace

PuncturedDisk make_disk(int n, const std::vector<int>& q) {
  Marks m;
  m.q = q;
  std::sort(m.q.begin(), m.q.end());
  if (std::adjacent_find(m.q.begin(), m.q.end()) != m.q.end())
    throw bad_marks_error("duplicate puncture in Q");
  return make_disk_impl(n, std::move(m));
}

PuncturedDisk make_disk(int n, const std::vector<std::vector<int>>& blocks) {
  Marks m;
  m.blocks = blocks;
  std::set<int> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw bad_marks_error("empty block");
    for (int p : b) {
      if (!seen.insert(p).second) throw bad_marks_error("blocks overlap at " + std::to_string(p));
      m.q.push_back(p);
    }
  }
  std::sort(m.q.begin(), m.q.end());
  return make_disk_impl(n, std::move(m));
}

PuncturedDisk make_disk(int n) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return make_disk(n, all);
}

}  // namespace arcsep
