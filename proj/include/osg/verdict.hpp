#ifndef OSG_VERDICT_HPP
#define OSG_VERDICT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/core.hpp"

namespace osg {

enum class Outcome { holds, fails, not_applicable };

std::string_view to_string(Outcome outcome);

/// Outcome of a decision procedure. When the outcome is `fails`, `witness`
/// re-evaluates to a violation of the clause named by `clause`. Predicates
/// whose statement presupposes regularity report `not_applicable` with
/// clause "not_regular" instead of failing.
struct Verdict {
  Outcome outcome = Outcome::holds;
  std::string clause;
  std::vector<Element> witness;

  bool holds() const noexcept { return outcome == Outcome::holds; }
  bool applicable() const noexcept { return outcome != Outcome::not_applicable; }

  static Verdict yes(std::string clause = {}, std::vector<Element> witness = {}) {
    return {Outcome::holds, std::move(clause), std::move(witness)};
  }
  static Verdict no(std::string clause, std::vector<Element> witness) {
    return {Outcome::fails, std::move(clause), std::move(witness)};
  }
  static Verdict not_applicable(std::string reason) {
    return {Outcome::not_applicable, std::move(reason), {}};
  }
  static Verdict from_bool(bool value, std::string clause = {}) {
    return {value ? Outcome::holds : Outcome::fails, std::move(clause), {}};
  }
};

/// "holds", "fails (clause: a e)" etc., with witnesses in element names.
std::string describe(OrderedSemigroup const& s, Verdict const& v);

}  // namespace osg

#endif  // OSG_VERDICT_HPP
