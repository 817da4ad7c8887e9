#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Symbolic calculus on end spaces of infinite-type surfaces: Cantor-Bendixson
// derivatives, characteristic systems, the finite-invariance index and the
// index-zero classification.
//
// Terms denote compact, separable, totally disconnected spaces. A term is a
// clopen disjoint sum of leaves:
//   Finite(k)      k isolated points (k >= 1)
//   Char(rank, n)  the countable compact space with characteristic system
//                  (rank, n); Char(0, n) is the n-point discrete space
//   Cantor         the Cantor set
// Terms are kept normalized: countable leaves of equal marking collapse to a
// single Char leaf (Mazurkiewicz-Sierpinski: the characteristic system is a
// complete invariant of countable compact Hausdorff spaces), Cantor leaves of
// equal marking collapse to one.
//
// Ranks are restricted to finite values (spaces below omega^omega).

namespace arcsep::ends {

struct ends_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct finite_type_error : ends_error {
  using ends_error::ends_error;
};
struct unknown_name_error : ends_error {
  using ends_error::ends_error;
};

enum class LeafKind { Char, Cantor };

// Which part of a leaf consists of ends accumulated by genus.
//   None - no point of the leaf
//   All  - the whole leaf
//   Top  - exactly the top Cantor-Bendixson derivative points of a Char leaf
//          (the only closed subset expressible below whole-leaf granularity;
//          needed e.g. for the spotted Loch Ness monster)
enum class AgMark { None, All, Top };

struct Leaf {
  LeafKind kind = LeafKind::Char;
  long rank = 0;  // Char only, >= 0
  long top = 0;   // Char only, >= 1
  AgMark mark = AgMark::None;

  static Leaf finite(long k, AgMark m = AgMark::None) { return Leaf{LeafKind::Char, 0, k, m}; }
  static Leaf char_space(long rank, long top, AgMark m = AgMark::None) {
    return Leaf{LeafKind::Char, rank, top, m};
  }
  static Leaf cantor(AgMark m = AgMark::None) { return Leaf{LeafKind::Cantor, 0, 0, m}; }

  bool operator==(const Leaf&) const = default;
};

// A normalized clopen sum; empty vector denotes the empty space. With all
// marks None this is the plain EndSpace term; SurfaceDescriptor reuses the
// same representation with marks.
class EndSpace {
 public:
  EndSpace() = default;
  explicit EndSpace(std::vector<Leaf> leaves);

  static EndSpace empty() { return EndSpace{}; }
  static EndSpace finite(long k) { return EndSpace({Leaf::finite(k)}); }
  static EndSpace char_space(long rank, long top) {
    return EndSpace({Leaf::char_space(rank, top)});
  }
  static EndSpace cantor() { return EndSpace({Leaf::cantor()}); }
  static EndSpace union_of(const std::vector<EndSpace>& parts);

  const std::vector<Leaf>& leaves() const { return leaves_; }
  bool is_empty() const { return leaves_.empty(); }
  bool has_cantor() const;
  bool countable() const { return !has_cantor(); }
  // Number of points if finite, nullopt otherwise.
  std::optional<long> finite_cardinality() const;

  bool operator==(const EndSpace&) const = default;

  std::string to_string() const;

 private:
  std::vector<Leaf> leaves_;
};

// The set of limit points, as a normalized term.
EndSpace cb_derivative(const EndSpace& e);

struct CharSystem {
  long alpha = 0;
  long n = 0;
  bool operator==(const CharSystem&) const = default;
};
struct NotCountable {
  bool operator==(const NotCountable&) const = default;
};
struct EmptyCase {
  bool operator==(const EmptyCase&) const = default;
};
using CharSystemResult = std::variant<CharSystem, NotCountable, EmptyCase>;

// Least alpha with finite alpha-th derivative, paired with its cardinality.
CharSystemResult characteristic_system(const EndSpace& e);

// genus == nullopt means infinite genus.
struct SurfaceDescriptor {
  std::optional<long> genus;
  std::vector<Leaf> ends;  // normalized, marks meaningful

  bool infinite_genus() const { return !genus.has_value(); }
  EndSpace ends_space() const;
  EndSpace marked_subspace() const;    // the ends accumulated by genus
  bool marked_empty() const;
  bool marked_everything() const;
  bool infinite_type() const;

  bool operator==(const SurfaceDescriptor&) const = default;
  std::string to_string() const;
};

SurfaceDescriptor make_descriptor(std::optional<long> genus, std::vector<Leaf> ends);

struct FiiExact {
  long k;
  bool operator==(const FiiExact&) const = default;
};
struct FiiInfinity {
  bool operator==(const FiiInfinity&) const = default;
};
struct FiiLowerBound {
  long k;
  std::vector<std::string> certificate;  // the invariant collection, one entry per element
  bool operator==(const FiiLowerBound& o) const { return k == o.k && certificate == o.certificate; }
};
using FiiResult = std::variant<FiiExact, FiiInfinity, FiiLowerBound>;

FiiResult fii(const SurfaceDescriptor& s);

enum class FiiZeroClass { CantorTree, BloomingCantorTree, LochNess, NotZero };
FiiZeroClass classify_fii_zero(const SurfaceDescriptor& s);

// Catalog: cantor_tree, blooming_cantor_tree, loch_ness, plane_minus_cantor,
// tripod, spotted_loch_ness, jacobs_ladder, punctured_jacobs_ladder.
SurfaceDescriptor named_surface(const std::string& name);
std::vector<std::string> catalog_names();

// Parses the bracketed descriptor syntax, e.g.
//   genus=inf; ends=union(cantor, fin(1)); ag=none
// ends terms: empty | fin(k) | char(a,n) | cantor | union(t, ...)
// ag: none | all | comma list of leaf:<i> / top:<i> (1-based leaf indices of
// the ends term as written).
SurfaceDescriptor parse_descriptor(const std::string& text);
EndSpace parse_ends_term(const std::string& text);

}  // namespace arcsep::ends
