#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "osg/ideals_green.hpp"
#include "osg/regularity.hpp"

using namespace osg;

namespace {

ElementSet set_of(OrderedSemigroup const& s, std::initializer_list<char const*> names) {
  ElementSet out = s.empty_set();
  for (auto const* n : names) out.insert(*s.find(n));
  return out;
}

oracle::Set to_oracle(ElementSet const& s) {
  oracle::Set out;
  s.for_each([&](Element x) { out.insert(static_cast<int>(x)); });
  return out;
}

// a in (x S y] computed without the library
bool member(OrderedSemigroup const& s, Element a, Element x, Element y, bool middle = true) {
  auto const r = oracle::raw(s);
  oracle::Set const xs{static_cast<int>(x)}, ys{static_cast<int>(y)};
  auto const p = middle ? oracle::prod(r, oracle::prod(r, xs, oracle::all(r)), ys)
                        : oracle::prod(r, xs, ys);
  return oracle::down(r, p).count(static_cast<int>(a)) > 0;
}

constexpr RegularityVariant kVariants[] = {RegularityVariant::regular,
                                           RegularityVariant::completely_regular,
                                           RegularityVariant::left_regular,
                                           RegularityVariant::right_regular};

}  // namespace

TEST_CASE("is_regular: examples") {
  CHECK(is_regular(fixtures::worked_example()).holds());
  CHECK(is_regular(fixtures::trivial()).holds());
  auto const nil = fixtures::nilpotent();
  auto const v = is_regular(nil);
  CHECK_FALSE(v.holds());
  CHECK(v.witness == std::vector<Element>{*nil.find("a")});
}

TEST_CASE("regularity_variant: examples") {
  auto const s = fixtures::worked_example();
  CHECK(regularity_variant(s, RegularityVariant::completely_regular).holds());
  CHECK(regularity_variant(s, RegularityVariant::left_regular).holds());
  auto const nil = fixtures::nilpotent();
  auto const v = regularity_variant(nil, RegularityVariant::right_regular);
  CHECK_FALSE(v.holds());
  CHECK(v.witness == std::vector<Element>{*nil.find("a")});
  CHECK(v.clause == "right_regular");
}

TEST_CASE("ordered_idempotents: examples") {
  auto const s = fixtures::worked_example();
  CHECK(ordered_idempotents(s) == s.carrier());
  CHECK(ordered_idempotents(fixtures::meet_semilattice()).size() == 2);
  auto const nil = fixtures::nilpotent();
  CHECK(ordered_idempotents(nil) == set_of(nil, {"b"}));
}

TEST_CASE("ordered_idempotents: the two readings differ when e < e^2") {
  // a*x = b for all x, b*x = b; order a <= b. Then a <= a^2 = b but a != a^2.
  auto const s = fixtures::load("osg v1\nelements: a b\ntable:\nb b\nb b\norder:\na <= b\n");
  CHECK(ordered_idempotents(s, IdempotentReading::leq) == s.carrier());
  CHECK(ordered_idempotents(s, IdempotentReading::eq) == set_of(s, {"b"}));
}

TEST_CASE("inverses: examples") {
  auto const s = fixtures::worked_example();
  CHECK(inverses(s, *s.find("a")) == s.carrier());
  CHECK(inverses(fixtures::trivial(), 0) == ElementSet::full(1));
  auto const lz = fixtures::left_zero();
  CHECK(inverses(lz, *lz.find("e")) == lz.carrier());
}

TEST_CASE("properties over every ordered semigroup of order <= 3") {
  std::size_t regular_count = 0;
  for (auto const& s : oracle::corpus(3)) {
    auto const r = oracle::raw(s);
    bool const regular = is_regular(s).holds();
    regular_count += regular;
    CHECK(regular == oracle::regular(r));
    CHECK(regularity_variant(s, RegularityVariant::regular).holds() == regular);
    CHECK(regularity_variant(s, RegularityVariant::completely_regular).holds() ==
          oracle::completely_regular(r));
    CHECK(regularity_variant(s, RegularityVariant::left_regular).holds() == oracle::left_regular(r));
    CHECK(regularity_variant(s, RegularityVariant::right_regular).holds() ==
          oracle::right_regular(r));
    CHECK(to_oracle(ordered_idempotents(s)) == oracle::idempotents(r));
    CHECK(to_oracle(ordered_idempotents(s, IdempotentReading::eq)) == oracle::idempotents(r, true));

    // the failure witness is the least element violating the variant
    for (RegularityVariant v : kVariants) {
      auto const verdict = regularity_variant(s, v);
      if (verdict.holds()) continue;
      REQUIRE(verdict.witness.size() == 1);
      Element const a = verdict.witness[0];
      auto const fails = [&](Element x) {
        Element const x2 = s.product(x, x);
        switch (v) {
          case RegularityVariant::regular:            return !member(s, x, x, x);
          case RegularityVariant::completely_regular: return !member(s, x, x2, x2);
          case RegularityVariant::left_regular: {
            auto const rr = oracle::raw(s);
            return !oracle::down(rr, oracle::prod(rr, oracle::all(rr), {static_cast<int>(x2)}))
                        .count(static_cast<int>(x));
          }
          case RegularityVariant::right_regular: {
            auto const rr = oracle::raw(s);
            return !oracle::down(rr, oracle::prod(rr, {static_cast<int>(x2)}, oracle::all(rr)))
                        .count(static_cast<int>(x));
          }
        }
        return false;
      };
      CHECK(fails(a));
      for (Element b = 0; b < a; ++b) CHECK_FALSE(fails(b));
    }

    for (Element a = 0; a < s.size(); ++a) {
      CHECK(to_oracle(inverses(s, a)) == oracle::inverses(r, static_cast<int>(a)));
      for (Element b = 0; b < s.size(); ++b) {
        // the definition is symmetric in a and b
        CHECK(inverses(s, a).contains(b) == inverses(s, b).contains(a));
      }
      if (s.product(a, a) == a) CHECK(ordered_idempotents(s).contains(a));
    }

    if (regularity_variant(s, RegularityVariant::completely_regular).holds()) CHECK(regular);

    if (regular) {
      auto const E = ordered_idempotents(s);
      auto const L = green_relation(s, GreenKind::L), R = green_relation(s, GreenKind::R);
      for (Element a = 0; a < s.size(); ++a) {
        CHECK_FALSE(inverses(s, a).empty());
        bool l = false, rr = false;
        E.for_each([&](Element e) {
          l = l || L.related(a, e);
          rr = rr || R.related(a, e);
        });
        CHECK(l);
        CHECK(rr);
      }
    }
  }
  CHECK(regular_count == 610);
}
