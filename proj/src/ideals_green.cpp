#include "osg/ideals_green.hpp"

#include <sstream>
#include <stdexcept>

namespace osg {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds:          return "holds";
    case Outcome::fails:          return "fails";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "unknown";
}

std::string describe(OrderedSemigroup const& s, Verdict const& v) {
  std::ostringstream out;
  out << to_string(v.outcome);
  if (!v.clause.empty() || !v.witness.empty()) {
    out << " (";
    if (!v.clause.empty()) out << v.clause;
    if (!v.witness.empty()) {
      out << (v.clause.empty() ? "" : ":");
      for (Element w : v.witness) out << ' ' << s.name(w);
    }
    out << ')';
  }
  return out.str();
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::left:      return "left";
    case Side::right:     return "right";
    case Side::two_sided: return "two_sided";
  }
  return "unknown";
}

std::string_view to_string(GreenKind kind) {
  switch (kind) {
    case GreenKind::L: return "L";
    case GreenKind::R: return "R";
    case GreenKind::J: return "J";
    case GreenKind::H: return "H";
  }
  return "?";
}

// EquivalenceRelation ---------------------------------------------------------

EquivalenceRelation EquivalenceRelation::identity(std::size_t n) {
  std::vector<Element> ids(n);
  for (Element i = 0; i < n; ++i) ids[i] = i;
  return from_class_map(ids);
}

EquivalenceRelation EquivalenceRelation::universal(std::size_t n) {
  return from_class_map(std::vector<Element>(n, 0));
}

EquivalenceRelation EquivalenceRelation::from_class_map(std::vector<Element> const& ids) {
  return from_labels(ids);
}

ElementSet EquivalenceRelation::block(Element a) const {
  ElementSet out(size());
  for (Element i = 0; i < size(); ++i) {
    if (class_of_[i] == class_of_[a]) out.insert(i);
  }
  return out;
}

std::vector<ElementSet> EquivalenceRelation::blocks() const {
  std::vector<ElementSet> out;
  for (Element i = 0; i < size(); ++i) {
    if (class_of_[i] == i) out.push_back(block(i));
  }
  return out;
}

std::size_t EquivalenceRelation::class_count() const {
  std::size_t count = 0;
  for (Element i = 0; i < size(); ++i) count += class_of_[i] == i;
  return count;
}

bool EquivalenceRelation::refines(EquivalenceRelation const& coarser) const {
  for (Element i = 0; i < size(); ++i) {
    if (!coarser.related(i, class_of_[i])) return false;
  }
  return true;
}

EquivalenceRelation EquivalenceRelation::intersect(EquivalenceRelation const& other) const {
  std::vector<std::pair<Element, Element>> labels(size());
  for (Element i = 0; i < size(); ++i) labels[i] = {class_of_[i], other.class_of_[i]};
  return from_labels(labels);
}

// Ideals ----------------------------------------------------------------------

Verdict is_ideal(OrderedSemigroup const& s, ElementSet const& subset, Side side) {
  if (subset.empty()) {
    throw std::invalid_argument("is_ideal: an ideal must be nonempty");
  }
  std::size_t const n = s.size();
  if (side != Side::right) {
    for (Element x = 0; x < n; ++x) {
      for (Element i = 0; i < n; ++i) {
        if (subset.contains(i) && !subset.contains(s.product(x, i))) {
          return Verdict::no("left_absorption", {x, i});
        }
      }
    }
  }
  if (side != Side::left) {
    for (Element i = 0; i < n; ++i) {
      if (!subset.contains(i)) continue;
      for (Element x = 0; x < n; ++x) {
        if (!subset.contains(s.product(i, x))) {
          return Verdict::no("right_absorption", {i, x});
        }
      }
    }
  }
  for (Element t = 0; t < n; ++t) {
    if (subset.contains(t)) continue;
    for (Element h = 0; h < n; ++h) {
      if (subset.contains(h) && s.leq(t, h)) {
        return Verdict::no("downward_closure", {t, h});
      }
    }
  }
  return Verdict::yes();
}

ElementSet principal_ideal(OrderedSemigroup const& s, Element a, Side side) {
  ElementSet const all = s.carrier();
  ElementSet const single = s.singleton(a);
  ElementSet gen = single;
  if (side != Side::right) gen |= set_product(s, all, single);
  if (side != Side::left) gen |= set_product(s, single, all);
  if (side == Side::two_sided) gen |= set_product(s, set_product(s, all, single), all);
  return downward_closure(s, gen);
}

ElementSet minimal_ideal_oracle(OrderedSemigroup const& s, Element a, Side side,
                                Limits const& limits) {
  std::size_t const n = s.size();
  if (n > limits.oracle_n) {
    throw std::length_error("minimal_ideal_oracle: structure exceeds the oracle bound");
  }
  ElementSet result = s.carrier();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet candidate(n, bits);
    if (candidate.contains(a) && is_ideal(s, candidate, side).holds()) {
      result &= candidate;
    }
  }
  return result;
}

// Green's relations -----------------------------------------------------------

EquivalenceRelation green_relation(OrderedSemigroup const& s, GreenKind kind) {
  std::size_t const n = s.size();
  auto by_side = [&](Side side) {
    std::vector<std::uint64_t> labels(n);
    for (Element a = 0; a < n; ++a) labels[a] = principal_ideal(s, a, side).bits();
    return EquivalenceRelation::from_labels(labels);
  };
  switch (kind) {
    case GreenKind::L: return by_side(Side::left);
    case GreenKind::R: return by_side(Side::right);
    case GreenKind::J: return by_side(Side::two_sided);
    case GreenKind::H: return by_side(Side::left).intersect(by_side(Side::right));
  }
  throw std::invalid_argument("green_relation: unknown kind");
}

ElementSet green_class(OrderedSemigroup const& s, Element a, GreenKind kind) {
  return green_relation(s, kind).block(a);
}

}  // namespace osg
