#ifndef OSG_REGULARITY_HPP
#define OSG_REGULARITY_HPP

#include <string_view>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

enum class RegularityVariant { regular, completely_regular, left_regular, right_regular };

std::string_view to_string(RegularityVariant v);

/// Which elements count as ordered idempotents: e <= e^2 (default) or the
/// strict reading e = e^2.
enum class IdempotentReading { leq, eq };

std::string_view to_string(IdempotentReading r);

/// a in (aSa] for every a; the witness is the least a that fails.
Verdict is_regular(OrderedSemigroup const& s);

/// regular:            a in (aSa]
/// completely_regular: a in (a^2 S a^2]
/// right_regular:      a in (a^2 S]
/// left_regular:       a in (S a^2]
Verdict regularity_variant(OrderedSemigroup const& s, RegularityVariant v);

ElementSet ordered_idempotents(OrderedSemigroup const& s,
                               IdempotentReading reading = IdempotentReading::leq);

/// V(a) = {b : a <= aba and b <= bab}
ElementSet inverses(OrderedSemigroup const& s, Element a);

}  // namespace osg

#endif  // OSG_REGULARITY_HPP
