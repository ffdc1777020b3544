#ifndef OSG_CONSTRUCTIONS_HPP
#define OSG_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

/// A plain semigroup under the discrete order. Throws std::invalid_argument
/// if the table is not associative.
OrderedSemigroup from_plain(std::vector<std::string> names, Table table,
                            Limits const& limits = {});

/// Nonempty subsets of F under the subset product, ordered by inclusion.
/// F must carry the discrete order (std::invalid_argument otherwise); the
/// result has 2^m - 1 elements and must fit limits.max_n
/// (std::length_error). Elements are named "{x,y}" and listed by the
/// bitmask of the subset.
OrderedSemigroup power_semigroup(OrderedSemigroup const& f, Limits const& limits = {});

/// The classical notion realized through the discrete order.
Verdict is_right_inverse_plain(OrderedSemigroup const& f);

}  // namespace osg

#endif  // OSG_CONSTRUCTIONS_HPP
