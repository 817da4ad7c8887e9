#include "arcsep/normal.hpp"

#include <algorithm>
#include <map>

namespace arcsep {

namespace {

struct ScanEvent {
  Rat a_lo, a_hi;
  int edge;
  bool crossing;
  Rat b_mid;
};

// All contacts of rep with the triangulation's edges, ordered along rep.
std::vector<ScanEvent> scan(const Triangulation& t, const Polyline& rep, Kind kind) {
  std::vector<ScanEvent> evs;
  ContactOptions opt;
  opt.skip_a_endpoints = (kind == Kind::Arc);
  opt.skip_b_endpoints = true;
  for (const TriEdge& e : t.edges) {
    for (const ContactEvent& c : contact_events(rep, e.geom, opt)) {
      evs.push_back({c.a_lo, c.a_hi, e.id, c.crossing, c.b_mid()});
    }
  }
  std::sort(evs.begin(), evs.end(),
            [](const ScanEvent& x, const ScanEvent& y) { return x.a_lo < y.a_lo; });
  for (size_t i = 0; i + 1 < evs.size(); ++i)
    ARCSEP_CHECK(evs[i].a_hi < evs[i + 1].a_lo || !(evs[i].crossing && evs[i + 1].crossing),
                 "two edge crossings at one point of the representative");
  return evs;
}

// A parameter strictly between consecutive events (wrapping for curves),
// guaranteed off every edge.
Rat gap_param(const std::vector<ScanEvent>& evs, size_t i, const Polyline& rep) {
  const ScanEvent& cur = evs[i];
  if (i + 1 < evs.size()) return (cur.a_hi + evs[i + 1].a_lo) / 2;
  if (rep.closed) {
    Rat wrap_next = evs.front().a_lo + rep.segment_count();
    return (cur.a_hi + wrap_next) / 2;
  }
  return (cur.a_hi + rep.segment_count()) / 2;
}

}  // namespace

ReducedWord reduce_against(const Triangulation& t, const Polyline& rep, Kind kind,
                           std::array<int, 2> endpoints) {
  if (!is_embedded(rep)) throw not_embedded_error("representative crosses itself");

  std::vector<ScanEvent> evs = scan(t, rep, kind);

  // Crossing subsequence plus the face between consecutive crossings.
  ReducedWord w;
  w.kind = kind;
  w.endpoints = endpoints;
  std::vector<int> faces;  // for arcs: face before crossing i at index i, plus final
  std::vector<CrossRec> seq;

  std::vector<size_t> crossing_idx;
  for (size_t i = 0; i < evs.size(); ++i)
    if (evs[i].crossing) crossing_idx.push_back(i);

  if (crossing_idx.empty()) {
    Rat sample = evs.empty() ? Rat(1, 2)
                             : (evs[0].a_lo > 0 ? evs[0].a_lo / 2 : gap_param(evs, 0, rep));
    w.sole_face = t.face_at(rep.point_at(sample));
    if (kind == Kind::Curve)
      throw inessential_error("closed curve crosses no edge: bounds a disk");
    int f = w.sole_face;
    bool ok0 = t.corner_of(f, endpoints[0]) >= 0, ok1 = t.corner_of(f, endpoints[1]) >= 0;
    ARCSEP_CHECK(ok0 && ok1, "crossing-free arc endpoints not on its face");
    return w;
  }

  for (size_t k = 0; k < crossing_idx.size(); ++k) {
    const ScanEvent& e = evs[crossing_idx[k]];
    seq.push_back({e.edge, (e.a_lo + e.a_hi) / 2, e.b_mid, 0});
  }
  // Face sampling: between two events the representative stays inside one
  // face, but it may rest on an edge for the duration of a touch run, so
  // samples must land in a gap between consecutive events (touches included).
  // All gaps within one crossing-to-crossing stretch see the same face.
  auto face_between_events = [&](size_t ev_a, size_t ev_b) -> int {
    // first nonempty gap in the stretch (ev_a, ev_b), indices into evs;
    // ev_a == SIZE_MAX means "start of an open rep"; ev_b == SIZE_MAX its end
    Rat prev_hi = (ev_a == SIZE_MAX) ? Rat(0) : evs[ev_a].a_hi;
    size_t i = (ev_a == SIZE_MAX) ? 0 : ev_a + 1;
    for (; i <= evs.size(); ++i) {
      Rat next_lo;
      if (i < evs.size() && (ev_b == SIZE_MAX || i <= ev_b))
        next_lo = evs[i].a_lo;
      else if (ev_b == SIZE_MAX)
        next_lo = Rat(rep.segment_count());
      else
        break;
      if (next_lo > prev_hi) return t.face_at(rep.point_at((prev_hi + next_lo) / 2));
      if (i < evs.size()) prev_hi = evs[i].a_hi;
      if (ev_b != SIZE_MAX && i == ev_b) break;
    }
    ARCSEP_CHECK(false, "no sampling gap between events");
    return -1;
  };
  auto face_after_wrap = [&](size_t last_cross, size_t first_cross) -> int {
    // curves: stretch from last_cross around the wrap to first_cross
    Rat span(rep.segment_count());
    Rat prev_hi = evs[last_cross].a_hi;
    for (size_t step = last_cross + 1; step <= evs.size() + first_cross; ++step) {
      size_t i = step % evs.size();
      Rat next_lo = evs[i].a_lo + (step >= evs.size() ? span : Rat(0));
      if (next_lo > prev_hi) return t.face_at(rep.point_at((prev_hi + next_lo) / 2));
      prev_hi = evs[i].a_hi + (step >= evs.size() ? span : Rat(0));
      if (i == first_cross && step >= evs.size()) break;
    }
    ARCSEP_CHECK(false, "no sampling gap around the wrap");
    return -1;
  };

  if (kind == Kind::Arc) {
    faces.push_back(face_between_events(SIZE_MAX, crossing_idx[0]));
    for (size_t k = 0; k + 1 < crossing_idx.size(); ++k)
      faces.push_back(face_between_events(crossing_idx[k], crossing_idx[k + 1]));
    faces.push_back(face_between_events(crossing_idx.back(), SIZE_MAX));
  } else {
    for (size_t k = 0; k + 1 < crossing_idx.size(); ++k)
      faces.push_back(face_between_events(crossing_idx[k], crossing_idx[k + 1]));
    faces.push_back(face_after_wrap(crossing_idx.back(), crossing_idx[0]));
  }

  // Reduction. Representation for arcs: faces.size() == seq.size() + 1.
  // For curves faces.size() == seq.size().
  auto erase2 = [&](size_t i) {  // erase seq[i], seq[i+1] (arcs, non-wrapping)
    seq.erase(seq.begin() + i, seq.begin() + i + 2);
    faces.erase(faces.begin() + i + 1, faces.begin() + i + 3);
  };

  if (kind == Kind::Arc) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i].edge == seq[i + 1].edge) {
          ARCSEP_CHECK(faces[i] == faces[i + 2], "backtrack faces disagree");
          erase2(i);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      if (!seq.empty() && t.edge_has_vertex(seq.front().edge, endpoints[0])) {
        seq.erase(seq.begin());
        faces.erase(faces.begin());
        changed = true;
        continue;
      }
      if (!seq.empty() && t.edge_has_vertex(seq.back().edge, endpoints[1])) {
        seq.pop_back();
        faces.pop_back();
        changed = true;
      }
    }
    if (seq.empty()) {
      ARCSEP_CHECK(faces.size() == 1, "face bookkeeping after full reduction");
      w.sole_face = faces[0];
      int f = w.sole_face;
      ARCSEP_CHECK(t.corner_of(f, endpoints[0]) >= 0 && t.corner_of(f, endpoints[1]) >= 0,
                   "crossing-free arc endpoints not on its face");
      w.faces.clear();
      return w;
    }
  } else {
    bool changed = true;
    while (changed && !seq.empty()) {
      changed = false;
      size_t m = seq.size();
      for (size_t i = 0; i < m; ++i) {
        size_t j = (i + 1) % m;
        if (i == j) break;
        if (seq[i].edge == seq[j].edge) {
          // faces between: for the pair (i, i+1), the strand between them is
          // faces[i]; removing both merges neighbors.
          if (j > i) {
            seq.erase(seq.begin() + i, seq.begin() + i + 2);
            faces.erase(faces.begin() + i, faces.begin() + i + 2);
          } else {  // wrap: remove last and first
            seq.pop_back();
            seq.erase(seq.begin());
            faces.pop_back();
            faces.erase(faces.begin());
          }
          changed = true;
          break;
        }
      }
    }
    if (seq.empty()) throw inessential_error("closed curve reduces to a disk boundary");
    ARCSEP_CHECK(seq.size() >= 2, "closed curve with a single crossing");
  }

  // Slots: rank of each surviving crossing along its edge.
  std::map<int, std::vector<size_t>> by_edge;
  for (size_t i = 0; i < seq.size(); ++i) by_edge[seq[i].edge].push_back(i);
  for (auto& [edge, idxs] : by_edge) {
    std::sort(idxs.begin(), idxs.end(),
              [&](size_t x, size_t y) { return seq[x].b_param < seq[y].b_param; });
    for (size_t r = 0; r < idxs.size(); ++r) seq[idxs[r]].slot = static_cast<int>(r) + 1;
  }

  w.seq = std::move(seq);
  w.faces = std::move(faces);
  return w;
}

namespace {

std::vector<std::pair<int, int>> raw_seq(const ReducedWord& w) {
  std::vector<std::pair<int, int>> s;
  s.reserve(w.seq.size());
  for (const CrossRec& c : w.seq) s.emplace_back(c.edge, c.slot);
  return s;
}

}  // namespace

NormalKey make_key(const ReducedWord& w) {
  NormalKey k;
  k.kind = w.kind;
  std::vector<std::pair<int, int>> s = raw_seq(w);
  if (w.kind == Kind::Arc) {
    k.endpoints = {std::min(w.endpoints[0], w.endpoints[1]),
                   std::max(w.endpoints[0], w.endpoints[1])};
    if (w.endpoints[0] > w.endpoints[1]) std::reverse(s.begin(), s.end());
    k.seq = std::move(s);
    return k;
  }
  // curves: lexicographic minimum over rotation and direction
  size_t m = s.size();
  std::vector<std::pair<int, int>> best;
  auto consider = [&](const std::vector<std::pair<int, int>>& cand) {
    for (size_t r = 0; r < m; ++r) {
      std::vector<std::pair<int, int>> rot;
      rot.reserve(m);
      for (size_t i = 0; i < m; ++i) rot.push_back(cand[(r + i) % m]);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  };
  consider(s);
  std::reverse(s.begin(), s.end());
  consider(s);
  k.endpoints = {0, 0};
  k.seq = std::move(best);
  return k;
}

Fingerprint make_fingerprint(const Triangulation& t, const ReducedWord& w) {
  Fingerprint fp;
  fp.kind = w.kind;
  if (w.kind == Kind::Arc)
    fp.endpoints = {std::min(w.endpoints[0], w.endpoints[1]),
                    std::max(w.endpoints[0], w.endpoints[1])};
  fp.edge_counts.assign(t.edges.size(), 0);
  fp.corner_counts.assign(t.faces.size(), {0, 0, 0});
  fp.end_counts.assign(t.faces.size(), {0, 0, 0});
  for (const CrossRec& c : w.seq) fp.edge_counts[c.edge]++;

  size_t m = w.seq.size();
  if (m == 0) return fp;

  auto shared_corner = [&](int face, int e1, int e2) {
    const TriEdge& a = t.edges[e1];
    const TriEdge& b = t.edges[e2];
    for (int v : {a.v0, a.v1}) {
      if ((b.v0 == v || b.v1 == v)) {
        int c = t.corner_of(face, v);
        if (c >= 0) return c;
      }
    }
    ARCSEP_CHECK(false, "consecutive crossings without a shared face corner");
    return -1;
  };

  if (w.kind == Kind::Arc) {
    // end strands
    {
      int f = w.faces.front();
      int c = t.corner_of(f, w.endpoints[0]);
      ARCSEP_CHECK(c >= 0, "start vertex not a corner of the start face");
      fp.end_counts[f][c]++;
    }
    {
      int f = w.faces.back();
      int c = t.corner_of(f, w.endpoints[1]);
      ARCSEP_CHECK(c >= 0, "end vertex not a corner of the end face");
      fp.end_counts[f][c]++;
    }
    for (size_t i = 0; i + 1 < m; ++i) {
      int f = w.faces[i + 1];
      fp.corner_counts[f][shared_corner(f, w.seq[i].edge, w.seq[i + 1].edge)]++;
    }
  } else {
    for (size_t i = 0; i < m; ++i) {
      size_t j = (i + 1) % m;
      int f = w.faces[i];
      fp.corner_counts[f][shared_corner(f, w.seq[i].edge, w.seq[j].edge)]++;
    }
  }
  return fp;
}

namespace {

Rat slot_position(int slot, int total, int jitter_index) {
  Rat base(slot, total + 1);
  if (jitter_index == 0) return base;
  // small strictly-monotone perturbation, bounded by 1/(total+1)
  Rat eps(1, 2 * (jitter_index + 1));
  return base + eps * Rat(slot, (total + 1) * (total + 1));
}

}  // namespace

Polyline tidy_rep(const Triangulation& t0, const ReducedWord& w, int jitter_index) {
  Polyline out;
  std::map<int, int> totals;
  for (const CrossRec& c : w.seq) totals[c.edge]++;

  auto cross_point = [&](const CrossRec& c) {
    const Polyline& g = t0.edges[c.edge].geom;
    ARCSEP_CHECK(g.pts.size() == 2, "tidy rebuild requires straight edges");
    return lerp(g.pts[0], g.pts[1], slot_position(c.slot, totals[c.edge], jitter_index));
  };

  if (w.kind == Kind::Arc) {
    out.closed = false;
    Vec2 a(Rat(w.endpoints[0]), Rat(0));
    Vec2 b(Rat(w.endpoints[1]), Rat(0));
    if (w.seq.empty()) {
      // bow into the upper strip between the two adjacent punctures
      ARCSEP_CHECK(std::abs(w.endpoints[0] - w.endpoints[1]) == 1,
                   "crossing-free arc between non-adjacent punctures");
      Rat midx = (a.x + b.x) / 2;
      Rat h = Rat(1, 4) + Rat(1, 8 * (jitter_index + 1));
      out.pts = {a, Vec2(midx, h), b};
      return out;
    }
    out.pts.push_back(a);
    for (const CrossRec& c : w.seq) out.pts.push_back(cross_point(c));
    out.pts.push_back(b);
    return out;
  }
  out.closed = true;
  for (const CrossRec& c : w.seq) out.pts.push_back(cross_point(c));
  return out;
}

}  // namespace arcsep
