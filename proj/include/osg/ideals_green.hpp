// Ideals, principal ideals and Green's relations of a finite ordered
// semigroup. Principal ideals use the closed forms
//   L(a) = ({a} u Sa],  R(a) = ({a} u aS],  I(a) = ({a} u Sa u aS u SaS]
// which minimal_ideal_oracle() checks against a brute-force subset scan.

#ifndef OSG_IDEALS_GREEN_HPP
#define OSG_IDEALS_GREEN_HPP

#include <string_view>
#include <vector>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

enum class Side { left, right, two_sided };

std::string_view to_string(Side side);

enum class GreenKind { L, R, J, H };

std::string_view to_string(GreenKind kind);

/// Partition of 0..n-1 stored as a class-id map. The id of a class is its
/// smallest member, so two relations are equal iff their maps are equal.
class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;

  static EquivalenceRelation identity(std::size_t n);
  static EquivalenceRelation universal(std::size_t n);
  /// Builds from any labelling; elements with equal labels are related.
  template <typename Label>
  static EquivalenceRelation from_labels(std::vector<Label> const& labels);
  /// From an arbitrary (not necessarily canonical) class-id map.
  static EquivalenceRelation from_class_map(std::vector<Element> const& ids);

  std::size_t size() const noexcept { return class_of_.size(); }
  Element class_id(Element a) const { return class_of_[a]; }
  bool related(Element a, Element b) const { return class_of_[a] == class_of_[b]; }
  std::vector<Element> const& class_map() const noexcept { return class_of_; }

  ElementSet block(Element a) const;
  std::vector<ElementSet> blocks() const;
  std::size_t class_count() const;

  /// Every pair related here is related in `coarser`.
  bool refines(EquivalenceRelation const& coarser) const;
  EquivalenceRelation intersect(EquivalenceRelation const& other) const;

  friend bool operator==(EquivalenceRelation const&, EquivalenceRelation const&) = default;

 private:
  std::vector<Element> class_of_;
};

template <typename Label>
EquivalenceRelation EquivalenceRelation::from_labels(std::vector<Label> const& labels) {
  std::vector<Element> ids(labels.size());
  for (Element i = 0; i < labels.size(); ++i) {
    ids[i] = i;
    for (Element j = 0; j < i; ++j) {
      if (labels[j] == labels[i]) {
        ids[i] = ids[j];
        break;
      }
    }
  }
  EquivalenceRelation r;
  r.class_of_ = std::move(ids);
  return r;
}

/// Side-ideal test. `subset` must be nonempty (std::invalid_argument).
/// Failure clauses: "left_absorption" with witness (s, i), s*i outside;
/// "right_absorption" with witness (i, s); "downward_closure" with witness
/// (t, h), t <= h, h inside, t outside.
Verdict is_ideal(OrderedSemigroup const& s, ElementSet const& subset, Side side);

ElementSet principal_ideal(OrderedSemigroup const& s, Element a, Side side);

/// Intersection of every side-ideal containing a, by scanning all nonempty
/// subsets. Throws std::length_error above limits.oracle_n.
ElementSet minimal_ideal_oracle(OrderedSemigroup const& s, Element a, Side side,
                                Limits const& limits = {});

EquivalenceRelation green_relation(OrderedSemigroup const& s, GreenKind kind);

ElementSet green_class(OrderedSemigroup const& s, Element a, GreenKind kind);

}  // namespace osg

#endif  // OSG_IDEALS_GREEN_HPP
