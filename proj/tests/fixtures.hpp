#ifndef OSG_TESTS_FIXTURES_HPP
#define OSG_TESTS_FIXTURES_HPP

#include <stdexcept>
#include <string>

#include "osg/core.hpp"

namespace fixtures {

inline osg::OrderedSemigroup load(std::string const& text) {
  auto result = osg::parse(text);
  if (!result.ok()) {
    std::string msg = "fixture failed to parse:";
    for (auto const& d : result.diagnostics) msg += "\n  " + osg::format_diagnostic(d);
    throw std::runtime_error(msg);
  }
  return *result.value;
}

inline osg::OrderedSemigroup worked_example() {
  return load(R"(osg v1
elements: a e f
table:
a e f
a e f
a e f
order:
a <= e
a <= f
)");
}

inline osg::OrderedSemigroup trivial() {
  return load("osg v1\nelements: x\ntable:\nx\norder:\n");
}

inline osg::OrderedSemigroup left_zero() {
  return load("osg v1\nelements: e f\ntable:\ne e\nf f\norder:\n");
}

inline osg::OrderedSemigroup right_zero() {
  return load("osg v1\nelements: e f\ntable:\ne f\ne f\norder:\n");
}

inline osg::OrderedSemigroup left_zero_ordered() {
  return load("osg v1\nelements: e f\ntable:\ne e\nf f\norder:\ne <= f\n");
}

// {0,1} under meet.
inline osg::OrderedSemigroup meet_semilattice(bool ordered = false) {
  return load(std::string("osg v1\nelements: 0 1\ntable:\n0 0\n0 1\norder:\n") +
              (ordered ? "0 <= 1\n" : ""));
}

// a*a = b, every other product b.
inline osg::OrderedSemigroup nilpotent() {
  return load("osg v1\nelements: a b\ntable:\nb b\nb b\norder:\n");
}

}  // namespace fixtures

#endif  // OSG_TESTS_FIXTURES_HPP
