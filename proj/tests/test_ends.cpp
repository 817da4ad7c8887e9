#include <algorithm>
#include <random>
#include <variant>
#include <vector>

#include "arcsep/ends.hpp"
#include "doctest.h"

using namespace arcsep::ends;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle: countable compact spaces as finite sums of ordinal
// intervals [0, T] with T in Cantor normal form below omega^8. The derivative
// is computed by enumerating which elements are limit ordinals (an ordinal is
// a limit iff its least nonzero CNF term has exponent >= 1) and re-indexing
// {omega*y : 1 <= y <= shift_down(T)} as an interval. This path never touches
// the term-rewriting rules under test.

struct Cnf {
  // coeff[k] multiplies omega^k
  std::array<long, 8> coeff{};

  bool is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](long c) { return c == 0; });
  }
  bool is_finite() const {
    for (size_t k = 1; k < coeff.size(); ++k)
      if (coeff[k] != 0) return false;
    return true;
  }
  Cnf shift_down() const {  // floor division by omega
    Cnf r;
    for (size_t k = 1; k < coeff.size(); ++k) r.coeff[k - 1] = coeff[k];
    return r;
  }
};

struct OracleSpace {
  std::vector<Cnf> intervals;  // disjoint sum of [0, T_i]

  bool empty() const { return intervals.empty(); }
  bool finite(long* cardinality) const {
    long total = 0;
    for (const Cnf& t : intervals) {
      if (!t.is_finite()) return false;
      total += t.coeff[0] + 1;
    }
    *cardinality = total;
    return true;
  }
};

OracleSpace oracle_derivative(const OracleSpace& s) {
  OracleSpace out;
  for (const Cnf& t : s.intervals) {
    if (t.is_finite()) continue;  // finitely many points, all isolated
    // Limit elements of [0, T] are {omega*y : 1 <= y <= shift_down(T)},
    // order-isomorphic to [0, S-1] for successor S and to [0, S] for limit S.
    Cnf s_down = t.shift_down();
    Cnf top = s_down;
    if (top.coeff[0] > 0) top.coeff[0] -= 1;
    out.intervals.push_back(top);
  }
  return out;
}

OracleSpace to_oracle(const EndSpace& e) {
  OracleSpace s;
  for (const Leaf& l : e.leaves()) {
    REQUIRE(l.kind == LeafKind::Char);  // oracle covers countable terms only
    Cnf t;
    if (l.rank == 0) {
      t.coeff[0] = l.top - 1;
    } else {
      t.coeff[l.rank] = l.top;
    }
    s.intervals.push_back(t);
  }
  return s;
}

// |E|, |E'|, |E''|, ... with -1 for "infinite", ending at the first 0.
std::vector<long> oracle_signature(OracleSpace s) {
  std::vector<long> sig;
  while (true) {
    long card = 0;
    if (s.finite(&card)) {
      sig.push_back(card);
      if (card == 0) return sig;
      s = oracle_derivative(s);
      // the derivative of a finite space is empty
      long zero = 0;
      REQUIRE(s.finite(&zero));
      REQUIRE(zero == 0);
      sig.push_back(0);
      return sig;
    }
    sig.push_back(-1);
    s = oracle_derivative(s);
  }
}

std::vector<long> term_signature(EndSpace e) {
  std::vector<long> sig;
  while (true) {
    std::optional<long> card = e.finite_cardinality();
    sig.push_back(card.has_value() ? *card : -1);
    if (card.has_value() && *card == 0) return sig;
    e = cb_derivative(e);
    if (card.has_value()) {  // derivative of a finite space
      REQUIRE(e.is_empty());
      sig.push_back(0);
      return sig;
    }
  }
}

EndSpace random_countable_term(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_leaves(1, 4), rank(0, 4), top(1, 6);
  std::vector<EndSpace> parts;
  int k = n_leaves(rng);
  for (int i = 0; i < k; ++i) {
    int a = rank(rng);
    parts.push_back(a == 0 ? EndSpace::finite(top(rng)) : EndSpace::char_space(a, top(rng)));
  }
  return EndSpace::union_of(parts);
}

}  // namespace

TEST_CASE("cb_derivative on base cases") {
  CHECK(cb_derivative(EndSpace::empty()) == EndSpace::empty());
  CHECK(cb_derivative(EndSpace::finite(5)) == EndSpace::empty());
  CHECK(cb_derivative(EndSpace::cantor()) == EndSpace::cantor());
  // limit set of a convergent sequence is one point
  CHECK(cb_derivative(EndSpace::char_space(1, 1)) == EndSpace::finite(1));
  CHECK(cb_derivative(EndSpace::char_space(2, 3)) == EndSpace::char_space(1, 3));
}

TEST_CASE("cb_derivative agrees with the ordinal limit-point oracle") {
  // pinned case from the derivative rules
  CHECK(oracle_signature(to_oracle(EndSpace::char_space(2, 3))) ==
        term_signature(EndSpace::char_space(2, 3)));

  std::mt19937 rng(20240u);
  for (int trial = 0; trial < 300; ++trial) {
    EndSpace e = random_countable_term(rng);
    CAPTURE(e.to_string());
    CHECK(oracle_signature(to_oracle(e)) == term_signature(e));
  }
}

TEST_CASE("union commutation and flattening") {
  std::mt19937 rng(7u);
  for (int trial = 0; trial < 200; ++trial) {
    EndSpace a = random_countable_term(rng);
    EndSpace b = random_countable_term(rng);
    EndSpace u = EndSpace::union_of({a, b});
    CHECK(cb_derivative(u) == EndSpace::union_of({cb_derivative(a), cb_derivative(b)}));
  }
  // unions never nest and empty parts drop
  EndSpace nested = EndSpace::union_of(
      {EndSpace::union_of({EndSpace::finite(1), EndSpace::cantor()}), EndSpace::empty()});
  CHECK(nested == EndSpace::union_of({EndSpace::cantor(), EndSpace::finite(1)}));
}

TEST_CASE("characteristic_system") {
  CHECK(characteristic_system(EndSpace::char_space(1, 1)) == CharSystemResult{CharSystem{1, 1}});
  CHECK(characteristic_system(
            EndSpace::union_of({EndSpace::char_space(2, 1), EndSpace::char_space(1, 4)})) ==
        CharSystemResult{CharSystem{2, 1}});
  CHECK(characteristic_system(EndSpace::union_of({EndSpace::cantor(), EndSpace::finite(3)})) ==
        CharSystemResult{NotCountable{}});
  CHECK(characteristic_system(EndSpace::empty()) == CharSystemResult{EmptyCase{}});

  // derivative drops the rank by exactly one on countable infinite terms
  std::mt19937 rng(99u);
  for (int trial = 0; trial < 200; ++trial) {
    EndSpace e = random_countable_term(rng);
    auto cs = characteristic_system(e);
    auto rank = std::get<CharSystem>(cs).alpha;
    if (rank >= 1) {
      auto cs2 = characteristic_system(cb_derivative(e));
      CHECK(std::get<CharSystem>(cs2).alpha == rank - 1);
      CHECK(std::get<CharSystem>(cs2).n == std::get<CharSystem>(cs).n);
    }
  }
}

TEST_CASE("fii on the paper catalog") {
  auto exact = [](const SurfaceDescriptor& s) {
    FiiResult r = fii(s);
    REQUIRE(std::holds_alternative<FiiExact>(r));
    return std::get<FiiExact>(r).k;
  };
  CHECK(exact(named_surface("cantor_tree")) == 0);
  CHECK(exact(named_surface("blooming_cantor_tree")) == 0);
  CHECK(exact(named_surface("loch_ness")) == 0);
  CHECK(exact(named_surface("plane_minus_cantor")) == 2);
  CHECK(exact(named_surface("tripod")) == 3);
  CHECK(exact(named_surface("spotted_loch_ness")) == 1);
  CHECK(exact(named_surface("jacobs_ladder")) == 2);
  CHECK(exact(named_surface("punctured_jacobs_ladder")) == 3);
}

TEST_CASE("fii rule cascade") {
  // finite positive genus -> Infinity
  SurfaceDescriptor positive_genus = make_descriptor(2, {Leaf::char_space(1, 1)});
  CHECK(std::holds_alternative<FiiInfinity>(fii(positive_genus)));

  // countable, unmarked, >= 2 ends: the characteristic count
  SurfaceDescriptor grid = make_descriptor(0, {Leaf::char_space(2, 4)});
  CHECK(fii(grid) == FiiResult{FiiExact{4}});

  // finite-type inputs are rejected
  SurfaceDescriptor finite_type = make_descriptor(0, {Leaf::finite(3)});
  CHECK_THROWS_AS(fii(finite_type), finite_type_error);
  CHECK_THROWS_AS(classify_fii_zero(finite_type), finite_type_error);
}

TEST_CASE("fii lower bounds carry certificates") {
  // Cantor plus m isolated punctures: kernel + m singletons
  SurfaceDescriptor s = make_descriptor(0, {Leaf::cantor(), Leaf::finite(3)});
  FiiResult r = fii(s);
  REQUIRE(std::holds_alternative<FiiLowerBound>(r));
  const auto& lb = std::get<FiiLowerBound>(r);
  CHECK(lb.k == 4);
  CHECK(lb.certificate.size() == 4);

  // mixed marking: marked Cantor side + two unmarked punctures
  SurfaceDescriptor mixed =
      make_descriptor(std::nullopt, {Leaf::cantor(AgMark::All), Leaf::finite(2)});
  FiiResult r2 = fii(mixed);
  REQUIRE(std::holds_alternative<FiiLowerBound>(r2));
  CHECK(std::get<FiiLowerBound>(r2).k == 3);
  CHECK(std::get<FiiLowerBound>(r2).certificate.size() == 3);
}

TEST_CASE("classify_fii_zero matches fii") {
  CHECK(classify_fii_zero(named_surface("loch_ness")) == FiiZeroClass::LochNess);
  CHECK(classify_fii_zero(named_surface("cantor_tree")) == FiiZeroClass::CantorTree);
  CHECK(classify_fii_zero(named_surface("blooming_cantor_tree")) ==
        FiiZeroClass::BloomingCantorTree);
  CHECK(classify_fii_zero(named_surface("jacobs_ladder")) == FiiZeroClass::NotZero);

  // agreement: fii == Exact(0) iff classification != NotZero, across the
  // catalog and a family of grid descriptors
  std::vector<SurfaceDescriptor> all;
  for (const std::string& name : catalog_names()) all.push_back(named_surface(name));
  for (long a = 1; a <= 3; ++a)
    for (long n = 1; n <= 3; ++n) {
      all.push_back(make_descriptor(0, {Leaf::char_space(a, n)}));
      all.push_back(make_descriptor(std::nullopt, {Leaf::char_space(a, n, AgMark::All)}));
    }
  for (const SurfaceDescriptor& s : all) {
    bool zero = fii(s) == FiiResult{FiiExact{0}};
    CHECK(zero == (classify_fii_zero(s) != FiiZeroClass::NotZero));
  }
}

TEST_CASE("named_surface catalog shapes") {
  SurfaceDescriptor pmc = named_surface("plane_minus_cantor");
  CHECK(pmc.genus == 0);
  CHECK(pmc.ends_space() == EndSpace::union_of({EndSpace::cantor(), EndSpace::finite(1)}));
  CHECK(pmc.marked_empty());

  SurfaceDescriptor bct = named_surface("blooming_cantor_tree");
  CHECK(bct.infinite_genus());
  CHECK(bct.ends_space() == EndSpace::cantor());
  CHECK(bct.marked_everything());

  SurfaceDescriptor jl = named_surface("jacobs_ladder");
  CHECK(jl.infinite_genus());
  CHECK(jl.ends_space() == EndSpace::finite(2));
  CHECK(jl.marked_everything());

  CHECK_THROWS_AS(named_surface("klein_bottle"), unknown_name_error);
}

TEST_CASE("descriptor parsing") {
  SurfaceDescriptor s = parse_descriptor("genus=inf; ends=union(cantor, fin(1)); ag=leaf:1");
  CHECK(s.infinite_genus());
  CHECK(s.ends_space() == EndSpace::union_of({EndSpace::cantor(), EndSpace::finite(1)}));
  CHECK(!s.marked_empty());
  CHECK(!s.marked_everything());

  CHECK(parse_descriptor("genus=0; ends=cantor; ag=none") == named_surface("cantor_tree"));
  CHECK(parse_descriptor("genus=inf; ends=fin(3); ag=all") == named_surface("tripod"));
  CHECK(parse_descriptor("genus=inf; ends=char(1,1); ag=top:1") ==
        named_surface("spotted_loch_ness"));
  CHECK(parse_descriptor("genus=inf; ends=union(fin(2), fin(1)); ag=leaf:1") ==
        named_surface("punctured_jacobs_ladder"));

  CHECK(parse_ends_term("union(char(2,1), char(1,4))") == EndSpace::char_space(2, 1));

  CHECK_THROWS_AS(parse_descriptor("genus=1; ends=fin(2); ag=all"), ends_error);
  CHECK_THROWS_AS(parse_descriptor("ends=fin(2)"), ends_error);
  CHECK_THROWS_AS(parse_descriptor("genus=0; ends=blob(2)"), ends_error);
  CHECK_THROWS_AS(parse_descriptor("genus=inf; ends=cantor; ag=top:1"), ends_error);
}

TEST_CASE("marking granularity invariants") {
  // genus infinite iff marked nonempty
  CHECK_THROWS_AS(make_descriptor(std::nullopt, {Leaf::finite(2)}), ends_error);
  CHECK_THROWS_AS(make_descriptor(0, {Leaf::finite(2, AgMark::All)}), ends_error);

  // spotted Loch Ness: the marked subspace is the single top point
  SurfaceDescriptor sln = named_surface("spotted_loch_ness");
  CHECK(sln.marked_subspace() == EndSpace::finite(1));
  CHECK(sln.ends_space() == EndSpace::char_space(1, 1));
}
