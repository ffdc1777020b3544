// Decision procedures for the classes of ordered semigroups built on
// regularity: right inverse, left/right Clifford, (left/right) group-like,
// simple, together with each individual characterization condition so that
// the equivalences between them can be checked structure by structure.

#ifndef OSG_CLASSIFY_HPP
#define OSG_CLASSIFY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/core.hpp"
#include "osg/ideals_green.hpp"
#include "osg/regularity.hpp"
#include "osg/verdict.hpp"

namespace osg {

/// RI1 is the definition of a right inverse ordered semigroup; RI2..RI5 are
/// the alternative characterizations; RI6 is "e L f implies e H f" on
/// ordered idempotents.
enum class RightInverseCondition { RI1, RI2, RI3, RI4, RI5, RI6 };

/// RC2..RC5 are the equivalent forms of right Clifford; LC1 and LC2 are the
/// two consequences a in (a^2 S a] and ef in (feSef].
enum class RightCliffordCondition { RC2, RC3, RC4, RC5, LC1, LC2 };

enum class GroupLikeMode { left, right, both };

/// Quantifier over idempotent pairs in "ef in (eSfSe]".
enum class PairQuantifier { forall, exists };

std::string_view to_string(RightInverseCondition c);
std::string_view to_string(RightCliffordCondition c);
std::string_view to_string(GroupLikeMode m);
std::string_view to_string(PairQuantifier q);

/// Interpretation switches for notions whose reading is a configuration
/// choice.
struct Readings {
  IdempotentReading idempotents = IdempotentReading::leq;
  PairQuantifier linv_quantifier = PairQuantifier::forall;
};

/// Regular, and for every a the ordered idempotents generating L(a) exist
/// and are pairwise R-related. Failure clauses: "not_regular" (a),
/// "no_idempotent_generator" (a), "generators_not_r_related" (e, f).
Verdict is_right_inverse(OrderedSemigroup const& s,
                         IdempotentReading reading = IdempotentReading::leq);

/// Mirror image: principal right ideals generated by L-unique idempotents.
Verdict is_left_inverse(OrderedSemigroup const& s,
                        IdempotentReading reading = IdempotentReading::leq);

/// Evaluates one condition; not_applicable("not_regular") on non-regular S.
Verdict right_inverse_condition(OrderedSemigroup const& s, RightInverseCondition id,
                                IdempotentReading reading = IdempotentReading::leq);

/// right: (Sa] within (aS] for all a; left: the converse inclusion.
/// Witness (a, t) with t in the difference. `side` must not be two_sided.
Verdict is_clifford(OrderedSemigroup const& s, Side side);

Verdict right_clifford_condition(OrderedSemigroup const& s, RightCliffordCondition id,
                                 IdempotentReading reading = IdempotentReading::leq);

/// left: a in (Sb] for all a, b; right: a in (bS]; both: the conjunction.
Verdict is_group_like(OrderedSemigroup const& s, GroupLikeMode mode);

/// No proper side-ideal; witness is an a whose principal ideal is proper.
Verdict is_simple(OrderedSemigroup const& s, Side side);

/// Every two ordered idempotents are related by `kind` (L or R).
Verdict idempotents_related(OrderedSemigroup const& s, GreenKind kind,
                            IdempotentReading reading = IdempotentReading::leq);

struct VerdictPair {
  Verdict lhs;
  Verdict rhs;
  bool hypothesis_met = true;
};

/// lhs: ef H fe.  rhs: (Se] n (Sf] = (Sef].  The hypothesis is that S is
/// right inverse. Throws std::invalid_argument unless e and f are ordered
/// idempotents.
VerdictPair h_commutative_corollary(OrderedSemigroup const& s, Element e, Element f,
                                    IdempotentReading reading = IdempotentReading::leq);

/// lhs: any two inverses of any a are L-related.
/// rhs: ef in (eSfSe] for all (or some) ordered idempotents e, f.
VerdictPair left_related_inverses_condition(
    OrderedSemigroup const& s, PairQuantifier quantifier,
    IdempotentReading reading = IdempotentReading::leq);

/// Every element lies in some subsemigroup T with a in (Tb]_T and
/// b in (aT]_T for all a, b in T. Throws std::length_error above
/// limits.subsemigroup_n.
Verdict is_union_of_group_like(OrderedSemigroup const& s, Limits const& limits = {});

class ClassificationReport {
 public:
  static std::vector<std::string_view> const& keys();

  Verdict const& at(std::string_view key) const;
  std::vector<std::pair<std::string, Verdict>> const& entries() const { return entries_; }

  void set(std::string key, Verdict v);

 private:
  std::vector<std::pair<std::string, Verdict>> entries_;
};

ClassificationReport classify(OrderedSemigroup const& s,
                              IdempotentReading reading = IdempotentReading::leq);

}  // namespace osg

#endif  // OSG_CLASSIFY_HPP
