#include "arcsep/ends.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace arcsep::ends {

namespace {

void validate_leaf(const Leaf& l) {
  if (l.kind == LeafKind::Char) {
    if (l.rank < 0) throw ends_error("Char leaf needs rank >= 0");
    if (l.top < 1) throw ends_error("Char leaf needs top >= 1");
    if (l.mark == AgMark::Top && l.rank == 0)
      throw ends_error("top marking needs rank >= 1 (finite leaves have no limit points)");
  } else {
    if (l.mark == AgMark::Top) throw ends_error("Cantor leaves are marked wholly or not at all");
  }
}

bool leaf_less(const Leaf& a, const Leaf& b) {
  auto key = [](const Leaf& l) {
    return std::tuple(l.kind == LeafKind::Cantor ? 0 : 1, -l.rank, l.top, static_cast<int>(l.mark));
  };
  return key(a) < key(b);
}

// Collapse a list of leaves into normal form. Countable leaves with the same
// mark in {None, All} merge into their joint characteristic system; Top-marked
// Char leaves merge only within equal rank; Cantor leaves of one mark merge.
std::vector<Leaf> normalize(std::vector<Leaf> in) {
  for (const Leaf& l : in) validate_leaf(l);

  std::vector<Leaf> out;
  for (AgMark m : {AgMark::None, AgMark::All}) {
    bool cantor = false;
    long max_rank = -1, count = 0;
    for (const Leaf& l : in) {
      if (l.mark != m) continue;
      if (l.kind == LeafKind::Cantor) {
        cantor = true;
      } else if (l.rank > max_rank) {
        max_rank = l.rank;
        count = l.top;
      } else if (l.rank == max_rank) {
        count += l.top;
      }
    }
    if (cantor) out.push_back(Leaf::cantor(m));
    if (max_rank >= 0) out.push_back(Leaf::char_space(max_rank, count, m));
  }
  std::map<long, long> top_by_rank;
  for (const Leaf& l : in)
    if (l.mark == AgMark::Top) top_by_rank[l.rank] += l.top;
  for (auto [rank, top] : top_by_rank) out.push_back(Leaf::char_space(rank, top, AgMark::Top));

  std::sort(out.begin(), out.end(), leaf_less);
  return out;
}

std::string leaf_to_string(const Leaf& l, bool with_mark) {
  std::ostringstream os;
  if (l.kind == LeafKind::Cantor) {
    os << "cantor";
  } else if (l.rank == 0) {
    os << "fin(" << l.top << ")";
  } else {
    os << "char(" << l.rank << "," << l.top << ")";
  }
  if (with_mark && l.mark == AgMark::All) os << "[ag]";
  if (with_mark && l.mark == AgMark::Top) os << "[ag:top]";
  return os.str();
}

std::string leaves_to_string(const std::vector<Leaf>& leaves, bool with_marks) {
  if (leaves.empty()) return "empty";
  if (leaves.size() == 1) return leaf_to_string(leaves[0], with_marks);
  std::ostringstream os;
  os << "union(";
  for (size_t i = 0; i < leaves.size(); ++i) {
    if (i) os << ", ";
    os << leaf_to_string(leaves[i], with_marks);
  }
  os << ")";
  return os.str();
}

}  // namespace

EndSpace::EndSpace(std::vector<Leaf> leaves) : leaves_(normalize(std::move(leaves))) {}

EndSpace EndSpace::union_of(const std::vector<EndSpace>& parts) {
  std::vector<Leaf> all;
  for (const EndSpace& p : parts)
    for (const Leaf& l : p.leaves()) all.push_back(l);
  return EndSpace(std::move(all));
}

bool EndSpace::has_cantor() const {
  return std::any_of(leaves_.begin(), leaves_.end(),
                     [](const Leaf& l) { return l.kind == LeafKind::Cantor; });
}

std::optional<long> EndSpace::finite_cardinality() const {
  long total = 0;
  for (const Leaf& l : leaves_) {
    if (l.kind == LeafKind::Cantor || l.rank > 0) return std::nullopt;
    total += l.top;
  }
  return total;
}

std::string EndSpace::to_string() const { return leaves_to_string(leaves_, false); }

EndSpace cb_derivative(const EndSpace& e) {
  std::vector<Leaf> out;
  for (const Leaf& l : e.leaves()) {
    if (l.kind == LeafKind::Cantor) {
      out.push_back(Leaf::cantor());  // a perfect set equals its derivative
    } else if (l.rank >= 1) {
      out.push_back(Leaf::char_space(l.rank - 1, l.top));
    }
    // rank 0 (finite leaf): no limit points, drop
  }
  return EndSpace(std::move(out));
}

CharSystemResult characteristic_system(const EndSpace& e) {
  if (e.has_cantor()) return NotCountable{};
  if (e.is_empty()) return EmptyCase{};
  // Iterate the derivative; ranks strictly decrease so this terminates.
  EndSpace cur = e;
  long alpha = 0;
  while (!cur.finite_cardinality().has_value()) {
    cur = cb_derivative(cur);
    ++alpha;
  }
  return CharSystem{alpha, *cur.finite_cardinality()};
}

EndSpace SurfaceDescriptor::ends_space() const {
  std::vector<Leaf> plain;
  for (Leaf l : ends) {
    l.mark = AgMark::None;
    plain.push_back(l);
  }
  return EndSpace(std::move(plain));
}

EndSpace SurfaceDescriptor::marked_subspace() const {
  std::vector<Leaf> marked;
  for (const Leaf& l : ends) {
    if (l.mark == AgMark::All) {
      Leaf c = l;
      c.mark = AgMark::None;
      marked.push_back(c);
    } else if (l.mark == AgMark::Top) {
      marked.push_back(Leaf::finite(l.top));  // the top derivative points
    }
  }
  return EndSpace(std::move(marked));
}

bool SurfaceDescriptor::marked_empty() const {
  return std::all_of(ends.begin(), ends.end(),
                     [](const Leaf& l) { return l.mark == AgMark::None; });
}

bool SurfaceDescriptor::marked_everything() const {
  return !ends.empty() && std::all_of(ends.begin(), ends.end(), [](const Leaf& l) {
    return l.mark == AgMark::All;
  });
}

bool SurfaceDescriptor::infinite_type() const {
  if (infinite_genus()) return true;
  for (const Leaf& l : ends)
    if (l.kind == LeafKind::Cantor || l.rank >= 1) return true;
  return false;
}

std::string SurfaceDescriptor::to_string() const {
  std::ostringstream os;
  os << "genus=" << (infinite_genus() ? std::string("inf") : std::to_string(*genus))
     << "; ends=" << leaves_to_string(ends, true);
  return os.str();
}

SurfaceDescriptor make_descriptor(std::optional<long> genus, std::vector<Leaf> ends) {
  SurfaceDescriptor s;
  if (genus.has_value() && *genus < 0) throw ends_error("genus must be >= 0 or infinite");
  s.genus = genus;
  s.ends = normalize(std::move(ends));
  bool marked = !std::all_of(s.ends.begin(), s.ends.end(),
                             [](const Leaf& l) { return l.mark == AgMark::None; });
  if (marked != !s.genus.has_value())
    throw ends_error("genus is infinite if and only if some end is accumulated by genus");
  return s;
}

namespace {

// The largest invariant collection of disjoint closed proper subsets that is
// explicitly constructible from one marking side of the term, together with
// printable descriptions of its elements.
//
// For a side given as a plain subspace: the union of its Cantor leaves (the
// perfect kernel of the side) is one invariant element; the top derivative
// points of its countable part give n singleton elements. Individual leaves
// or lower-rank derivative points are not usable: homeomorphisms can move
// them between homeomorphic positions of different leaves.
struct SideCertificate {
  long k = 0;
  std::vector<std::string> elements;
};

SideCertificate side_certificate(const std::vector<Leaf>& side, const std::string& side_name) {
  SideCertificate cert;
  bool cantor = false;
  long max_rank = -1, count = 0;
  for (const Leaf& l : side) {
    if (l.kind == LeafKind::Cantor) {
      cantor = true;
    } else if (l.rank > max_rank) {
      max_rank = l.rank;
      count = l.top;
    } else if (l.rank == max_rank) {
      count += l.top;
    }
  }
  if (cantor) {
    cert.k += 1;
    cert.elements.push_back(side_name + ": perfect kernel (Cantor part)");
  }
  if (max_rank >= 0) {
    cert.k += count;
    for (long i = 1; i <= count; ++i)
      cert.elements.push_back(side_name + ": rank-" + std::to_string(max_rank) +
                              " derivative point " + std::to_string(i) + "/" +
                              std::to_string(count));
  }
  return cert;
}

FiiLowerBound lower_bound_certificate(const SurfaceDescriptor& s) {
  std::vector<Leaf> marked_whole, unmarked_whole;
  long top_marked_points = 0;
  for (const Leaf& l : s.ends) {
    if (l.mark == AgMark::All)
      marked_whole.push_back(l);
    else if (l.mark == AgMark::None)
      unmarked_whole.push_back(l);
    else
      top_marked_points += l.top;
  }
  FiiLowerBound lb;
  SideCertificate m = side_certificate(marked_whole, "marked");
  SideCertificate u = side_certificate(unmarked_whole, "unmarked");
  lb.k = m.k + u.k + top_marked_points;
  lb.certificate = m.elements;
  lb.certificate.insert(lb.certificate.end(), u.elements.begin(), u.elements.end());
  for (long i = 1; i <= top_marked_points; ++i)
    lb.certificate.push_back("marked: top derivative point " + std::to_string(i) + "/" +
                             std::to_string(top_marked_points));
  return lb;
}

void require_infinite_type(const SurfaceDescriptor& s) {
  if (!s.infinite_type())
    throw finite_type_error("operation requires an infinite-type surface: " + s.to_string());
}

}  // namespace

FiiResult fii(const SurfaceDescriptor& s) {
  require_infinite_type(s);
  // (1) finite positive genus
  if (!s.infinite_genus() && *s.genus > 0) return FiiInfinity{};

  EndSpace ends = s.ends_space();
  bool ag_trivial = s.marked_empty() || s.marked_everything();
  CharSystemResult cs = characteristic_system(ends);

  if (ag_trivial && std::holds_alternative<CharSystem>(cs)) {
    std::optional<long> card = ends.finite_cardinality();
    bool single_point = card.has_value() && *card == 1;
    // (2) one end: the Loch Ness monster case
    if (single_point) return FiiExact{0};
    // (3) countable with at least two ends
    return FiiExact{std::get<CharSystem>(cs).n};
  }

  // (4) Cantor set of ends
  if (ag_trivial && ends == EndSpace::cantor()) return FiiExact{0};

  // (5) catalog surfaces
  for (const std::string& name : catalog_names()) {
    SurfaceDescriptor c = named_surface(name);
    if (c == s) {
      if (name == "plane_minus_cantor") return FiiExact{2};
      if (name == "tripod") return FiiExact{3};
      if (name == "spotted_loch_ness") return FiiExact{1};
      if (name == "jacobs_ladder") return FiiExact{2};
      if (name == "punctured_jacobs_ladder") return FiiExact{3};
    }
  }

  // (6) explicit lower bound with certificate
  return lower_bound_certificate(s);
}

FiiZeroClass classify_fii_zero(const SurfaceDescriptor& s) {
  require_infinite_type(s);
  if (s == named_surface("cantor_tree")) return FiiZeroClass::CantorTree;
  if (s == named_surface("blooming_cantor_tree")) return FiiZeroClass::BloomingCantorTree;
  if (s == named_surface("loch_ness")) return FiiZeroClass::LochNess;
  return FiiZeroClass::NotZero;
}

SurfaceDescriptor named_surface(const std::string& name) {
  if (name == "cantor_tree") return make_descriptor(0, {Leaf::cantor()});
  if (name == "blooming_cantor_tree")
    return make_descriptor(std::nullopt, {Leaf::cantor(AgMark::All)});
  if (name == "loch_ness") return make_descriptor(std::nullopt, {Leaf::finite(1, AgMark::All)});
  if (name == "plane_minus_cantor")
    return make_descriptor(0, {Leaf::cantor(), Leaf::finite(1)});
  if (name == "tripod") return make_descriptor(std::nullopt, {Leaf::finite(3, AgMark::All)});
  if (name == "spotted_loch_ness")
    return make_descriptor(std::nullopt, {Leaf::char_space(1, 1, AgMark::Top)});
  if (name == "jacobs_ladder")
    return make_descriptor(std::nullopt, {Leaf::finite(2, AgMark::All)});
  if (name == "punctured_jacobs_ladder")
    return make_descriptor(std::nullopt, {Leaf::finite(2, AgMark::All), Leaf::finite(1)});
  throw unknown_name_error("unknown surface name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"cantor_tree",       "blooming_cantor_tree", "loch_ness",
          "plane_minus_cantor", "tripod",               "spotted_loch_ness",
          "jacobs_ladder",      "punctured_jacobs_ladder"};
}

// ---------------------------------------------------------------------------
// Descriptor text parsing

namespace {

struct Parser {
  std::string s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ends_error("descriptor parse error: expected '" + std::string(1, c) +
                                  "' at offset " + std::to_string(i) + " in: " + s);
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (start == i) throw ends_error("descriptor parse error: identifier expected in: " + s);
    return s.substr(start, i - start);
  }
  long number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ends_error("descriptor parse error: number expected in: " + s);
    return std::stol(s.substr(start, i - start));
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

// Leaves in written order, before normalization (indices for ag refer here).
std::vector<Leaf> parse_term_leaves(Parser& p) {
  std::string head = p.ident();
  if (head == "empty") return {};
  if (head == "cantor") return {Leaf::cantor()};
  if (head == "fin") {
    p.expect('(');
    long k = p.number();
    p.expect(')');
    return {Leaf::finite(k)};
  }
  if (head == "char") {
    p.expect('(');
    long a = p.number();
    p.expect(',');
    long n = p.number();
    p.expect(')');
    return {Leaf::char_space(a, n)};
  }
  if (head == "union") {
    p.expect('(');
    std::vector<Leaf> all;
    do {
      std::vector<Leaf> part = parse_term_leaves(p);
      all.insert(all.end(), part.begin(), part.end());
    } while (p.eat(','));
    p.expect(')');
    return all;
  }
  throw ends_error("descriptor parse error: unknown ends term '" + head + "'");
}

}  // namespace

EndSpace parse_ends_term(const std::string& text) {
  Parser p{text};
  std::vector<Leaf> leaves = parse_term_leaves(p);
  if (!p.done()) throw ends_error("descriptor parse error: trailing input in: " + text);
  return EndSpace(std::move(leaves));
}

SurfaceDescriptor parse_descriptor(const std::string& text) {
  std::optional<long> genus;
  bool have_genus = false;
  std::vector<Leaf> leaves;
  bool have_ends = false;
  std::string ag_field = "none";

  std::istringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ';')) {
    Parser p{field};
    if (p.done()) continue;
    std::string key = p.ident();
    p.expect('=');
    if (key == "genus") {
      p.skip_ws();
      if (p.i < p.s.size() && p.s[p.i] == 'i') {
        if (p.ident() != "inf") throw ends_error("genus must be a number or 'inf'");
        genus = std::nullopt;
      } else {
        genus = p.number();
      }
      have_genus = true;
      if (!p.done()) throw ends_error("descriptor parse error: trailing input after genus");
    } else if (key == "ends") {
      leaves = parse_term_leaves(p);
      if (!p.done()) throw ends_error("descriptor parse error: trailing input after ends");
      have_ends = true;
    } else if (key == "ag") {
      p.skip_ws();
      ag_field = p.s.substr(p.i);
      while (!ag_field.empty() && std::isspace(static_cast<unsigned char>(ag_field.back())))
        ag_field.pop_back();
    } else {
      throw ends_error("descriptor parse error: unknown field '" + key + "'");
    }
  }
  if (!have_genus || !have_ends)
    throw ends_error("descriptor needs both 'genus=' and 'ends=' fields: " + text);

  if (ag_field == "none") {
    // nothing marked
  } else if (ag_field == "all") {
    for (Leaf& l : leaves) l.mark = AgMark::All;
  } else {
    Parser p{ag_field};
    do {
      std::string kind = p.ident();
      p.expect(':');
      long idx = p.number();
      if (idx < 1 || idx > static_cast<long>(leaves.size()))
        throw ends_error("ag leaf index out of range: " + std::to_string(idx));
      if (kind == "leaf")
        leaves[idx - 1].mark = AgMark::All;
      else if (kind == "top")
        leaves[idx - 1].mark = AgMark::Top;
      else
        throw ends_error("ag entries are leaf:<i> or top:<i>, got '" + kind + "'");
    } while (p.eat(','));
    if (!p.done()) throw ends_error("descriptor parse error: trailing input after ag");
  }

  return make_descriptor(genus, std::move(leaves));
}

}  // namespace arcsep::ends
