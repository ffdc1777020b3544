#ifndef OSG_CONGRUENCE_HPP
#define OSG_CONGRUENCE_HPP

#include <utility>
#include <vector>

#include "osg/classify.hpp"
#include "osg/core.hpp"
#include "osg/ideals_green.hpp"
#include "osg/verdict.hpp"

namespace osg {

/// Generating pairs for closure operations.
using RelationPairs = std::vector<std::pair<Element, Element>>;

/// left: a rho b => ca rho cb; right: a rho b => ac rho bc; two_sided: both.
/// Witness (a, b, c).
Verdict is_congruence(OrderedSemigroup const& s, EquivalenceRelation const& rho, Side side);

/// Two-sided congruence with a rho a^2 and ab rho ba.
Verdict is_semilattice_congruence(OrderedSemigroup const& s, EquivalenceRelation const& rho);

/// Semilattice congruence with a <= b => a rho ab.
Verdict is_complete_semilattice_congruence(OrderedSemigroup const& s,
                                           EquivalenceRelation const& sigma);

/// Least two-sided congruence containing `generators`.
EquivalenceRelation congruence_closure(OrderedSemigroup const& s,
                                       RelationPairs const& generators);

EquivalenceRelation least_complete_semilattice_congruence(OrderedSemigroup const& s);

/// The least complete semilattice congruence has every class closed under
/// multiplication, and every class, as an induced ordered subsemigroup,
/// satisfies the group-like predicate for `mode`. Group-like predicates
/// presuppose regularity, so a non-regular class fails.
Verdict is_complete_semilattice_of(OrderedSemigroup const& s, GroupLikeMode mode);

}  // namespace osg

#endif  // OSG_CONGRUENCE_HPP
