#include <map>
#include <random>
#include <set>

#include "arcsep/isotopy.hpp"
#include "arcsep/twist.hpp"
#include "doctest.h"

using namespace arcsep;

namespace {

std::vector<int> random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), coin(0, 1);
  std::vector<int> w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) w.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return w;
}

IsotopyClass random_seed(std::mt19937& rng, const PuncturedDisk& d) {
  std::uniform_int_distribution<int> coin(0, 1), pos(1, d.n - 1);
  if (coin(rng)) {
    int i = pos(rng);
    return seed_arc(d, i, i + 1);
  }
  int lo = std::uniform_int_distribution<int>(1, d.n - 1)(rng);
  int hi = std::uniform_int_distribution<int>(lo + 1, std::min(d.n, lo + d.n - 2))(rng);
  hi = std::min(hi, d.n);
  if (hi - lo + 1 > d.n - 1) hi = lo + d.n - 2;
  return seed_curve(d, lo, hi);
}

}  // namespace

TEST_CASE("disk construction and validation") {
  for (int n : {3, 5, 8}) {
    PuncturedDisk d = make_disk(n);
    CHECK(static_cast<int>(d.t0.edges.size()) == 3 * n - 3);
    CHECK(static_cast<int>(d.t0.faces.size()) == 2 * n - 2);
    CHECK(static_cast<int>(d.t1.edges.size()) == 3 * n - 3);
    CHECK(static_cast<int>(d.t1.faces.size()) == 2 * n - 2);
  }
  CHECK_THROWS_AS(make_disk(2), bad_marks_error);
  CHECK_THROWS_AS(make_disk(5, std::vector<int>{1, 1, 2}), bad_marks_error);
  CHECK_THROWS_AS(make_disk(5, std::vector<std::vector<int>>{{1, 2}, {2, 3}}), bad_marks_error);
  CHECK_THROWS_AS(make_disk(5, std::vector<int>{6}), bad_marks_error);

  PuncturedDisk d = make_disk(7, std::vector<std::vector<int>>{{1, 2}, {3}, {4, 5}, {6}, {7}});
  CHECK(d.marks.blocks.size() == 5);
  CHECK(d.marks.block_of(4) == 2);
  CHECK(d.marks.in_q(6));
}

TEST_CASE("seed arcs reduce to the trivial normal form") {
  PuncturedDisk d3 = make_disk(3);
  IsotopyClass a = seed_arc(d3, 1, 2);
  CHECK(a.endpoints == std::array<int, 2>{1, 2});
  // golden fingerprint: no crossings with any edge of the fan triangulation
  for (long c : a.fp.edge_counts) CHECK(c == 0);
  CHECK(a.key.seq.empty());

  // reducing the tidy representative again is the identity
  IsotopyClass again = make_class(d3, a.rep, Kind::Arc, {1, 2});
  CHECK(same_class(a, again));
}

TEST_CASE("a pushed finger cancels back to the seed") {
  PuncturedDisk d = make_disk(5);
  IsotopyClass a = seed_arc(d, 1, 2);
  // detour crossing u_2 twice: out around puncture-free territory and back
  Polyline wiggle;
  wiggle.pts = {d.puncture(1), Vec2(Rat(5, 4), Rat(1, 2)),  Vec2(Rat(9, 4), Rat(3, 4)),
                Vec2(Rat(9, 4), Rat(5, 4)), Vec2(Rat(3, 2), Rat(5, 4)), Vec2(Rat(3, 2), Rat(1, 4)),
                d.puncture(2)};
  IsotopyClass b = make_class(d, wiggle, Kind::Arc, {1, 2});
  CHECK(same_class(a, b));
  CHECK(a.fp == b.fp);
}

TEST_CASE("seed curves and essentiality") {
  PuncturedDisk d = make_disk(5);
  IsotopyClass c = seed_curve(d, 1, 2);
  CHECK(punctures_inside(d, c) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(seed_curve(d, 3, 3), inessential_error);
  CHECK_THROWS_AS(seed_curve(d, 1, 5), inessential_error);

  // a 20-vertex wiggle of the seed curve lands on the same fingerprint
  Polyline wavy;
  wavy.closed = true;
  for (int k = 0; k < 10; ++k) {
    Rat x = Rat(3, 4) + Rat(k * 6, 40);
    wavy.pts.push_back(Vec2(x, Rat(-1, 2) - Rat((k % 2) * 1, 8)));
  }
  for (int k = 0; k < 10; ++k) {
    Rat x = Rat(9, 4) - Rat(k * 6, 40);
    wavy.pts.push_back(Vec2(x, Rat(1, 2) + Rat((k % 2) * 1, 8)));
  }
  IsotopyClass c2 = make_class(d, wavy, Kind::Curve);
  CHECK(same_class(c, c2));
  CHECK(c.fp == c2.fp);
}

TEST_CASE("half twist fixes its core arc and braid relations hold") {
  PuncturedDisk d3 = make_disk(3);
  IsotopyClass a12 = seed_arc(d3, 1, 2);
  CHECK(same_class(apply_generator(d3, 1, a12), a12));

  // sigma_1^2 moves arc(2,3) to a genuinely different class
  IsotopyClass a23 = seed_arc(d3, 2, 3);
  IsotopyClass twisted = apply_word(d3, {1, 1}, a23);
  CHECK(!same_class(a23, twisted));
  CHECK(a23.fp != twisted.fp);

  // inverse undoes the generator
  CHECK(same_class(apply_word(d3, {-1, 1}, a23), a23));
  CHECK(same_class(apply_word(d3, {1, -1}, twisted), twisted));

  PuncturedDisk d5 = make_disk(5);
  std::mt19937 rng(12u);
  for (int trial = 0; trial < 10; ++trial) {
    IsotopyClass x = apply_word(d5, random_word(rng, 5, 3), random_seed(rng, d5));
    // braid relation
    IsotopyClass lhs = apply_word(d5, {1, 2, 1}, x);
    IsotopyClass rhs = apply_word(d5, {2, 1, 2}, x);
    CHECK(same_class(lhs, rhs));
    CHECK(lhs.fp == rhs.fp);
    // far commutation
    IsotopyClass lhs2 = apply_word(d5, {1, 4}, x);
    IsotopyClass rhs2 = apply_word(d5, {4, 1}, x);
    CHECK(same_class(lhs2, rhs2));
  }
}

TEST_CASE("fingerprints separate classes consistently with T1") {
  PuncturedDisk d = make_disk(4);
  IsotopyClass s = seed_arc(d, 1, 2);
  std::vector<IsotopyClass> ball = {s};
  std::vector<std::vector<int>> words = {{}};
  std::mt19937 rng(5u);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> w = random_word(rng, 4, 4);
    ball.push_back(apply_word(d, w, s));
  }
  // group by T0 fingerprint; within a group keys and T1 fingerprints agree;
  // across groups T1 fingerprints differ
  std::map<std::string, std::vector<size_t>> groups;
  auto fp_str = [](const Fingerprint& f) {
    std::string s1;
    for (long c : f.edge_counts) s1 += std::to_string(c) + ",";
    for (auto& a : f.corner_counts)
      for (long c : a) s1 += std::to_string(c) + ".";
    for (auto& a : f.end_counts)
      for (long c : a) s1 += std::to_string(c) + "e";
    s1 += std::to_string(f.endpoints[0]) + ":" + std::to_string(f.endpoints[1]);
    return s1;
  };
  for (size_t i = 0; i < ball.size(); ++i) groups[fp_str(ball[i].fp)].push_back(i);
  std::map<std::string, std::string> t1_of_group;
  for (auto& [g, idxs] : groups) {
    std::string t1 = fp_str(fingerprint_t1(d, ball[idxs[0]]));
    for (size_t i : idxs) {
      CHECK(ball[i].key == ball[idxs[0]].key);
      CHECK(fp_str(fingerprint_t1(d, ball[i])) == t1);
    }
    for (auto& [g2, t1b] : t1_of_group) CHECK(t1b != t1);
    t1_of_group[g] = t1;
  }
}
