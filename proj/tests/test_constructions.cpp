#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "osg/classify.hpp"
#include "osg/constructions.hpp"
#include "osg/ideals_green.hpp"

using namespace osg;

namespace {

Element id(OrderedSemigroup const& s, char const* name) { return *s.find(name); }

// Index of the subset with the given bitmask in the power structure.
Element subset(unsigned mask) { return mask - 1; }

}  // namespace

TEST_CASE("from_plain: examples") {
  auto const rz = from_plain({"e", "f"}, {0, 1, 0, 1});
  CHECK(rz.has_discrete_order());
  CHECK(is_right_inverse(rz).holds());
  CHECK_FALSE(is_right_inverse(from_plain({"e", "f"}, {0, 0, 1, 1})).holds());
  CHECK(from_plain({"x"}, {0}).size() == 1);
  // a*a = b, a*b = a, b*x = b: (aa)a = ba = b but a(aa) = ab = a
  CHECK_THROWS_AS(from_plain({"a", "b"}, {1, 0, 1, 1}), std::invalid_argument);
}

TEST_CASE("power_semigroup: examples") {
  auto const trivial = power_semigroup(fixtures::trivial());
  CHECK(trivial.size() == 1);

  auto const p = power_semigroup(fixtures::right_zero());
  REQUIRE(p.size() == 3);
  CHECK(p.names() == std::vector<std::string>{"{e}", "{f}", "{e,f}"});
  for (unsigned a = 1; a < 4; ++a) {
    for (unsigned b = 1; b < 4; ++b) CHECK(p.product(subset(a), subset(b)) == subset(b));
  }
  CHECK(p.leq(subset(1), subset(3)));
  CHECK(p.leq(subset(2), subset(3)));
  CHECK_FALSE(p.leq(subset(1), subset(2)));
  CHECK(is_right_inverse(p).holds());

  auto const q = power_semigroup(fixtures::left_zero());
  auto const e = subset(1), f = subset(2);
  CHECK(principal_ideal(q, e, Side::left) == q.carrier());
  CHECK(principal_ideal(q, e, Side::left) == principal_ideal(q, f, Side::left));
  CHECK(principal_ideal(q, e, Side::right) == q.singleton(e));
  CHECK_FALSE(is_right_inverse(q).holds());
}

TEST_CASE("power_semigroup: errors") {
  CHECK_THROWS_AS(power_semigroup(fixtures::worked_example()), std::invalid_argument);
  Limits tight;
  tight.max_n = 2;
  CHECK_THROWS_AS(power_semigroup(fixtures::right_zero(), tight), std::length_error);
}

TEST_CASE("is_right_inverse_plain: examples") {
  CHECK(is_right_inverse_plain(fixtures::right_zero()).holds());
  CHECK_FALSE(is_right_inverse_plain(fixtures::left_zero()).holds());
  // every semilattice (commutative, idempotent) of order <= 3
  std::size_t semilattices = 0;
  for (auto const& f : oracle::plain_corpus(3)) {
    bool semilattice = true;
    for (Element a = 0; a < f.size(); ++a) {
      semilattice = semilattice && f.product(a, a) == a;
      for (Element b = 0; b < f.size(); ++b) {
        semilattice = semilattice && f.product(a, b) == f.product(b, a);
      }
    }
    if (!semilattice) continue;
    ++semilattices;
    CHECK(is_right_inverse_plain(f).holds());
  }
  CHECK(semilattices > 0);
}

TEST_CASE("power semigroups of every plain semigroup of order <= 3") {
  auto const plain = oracle::plain_corpus(3);
  CHECK(plain.size() == 1 + 8 + 113);
  for (auto const& f : plain) {
    auto const p = power_semigroup(f);
    std::size_t const m = f.size();
    REQUIRE(p.size() == (std::size_t{1} << m) - 1);
    auto const r = oracle::raw(p);
    CHECK(oracle::associative(r.n, r.t));
    CHECK(oracle::is_poset(r.n, r.le));
    CHECK(oracle::compatible(r.n, r.t, r.le));
    for (unsigned a = 1; a < (1U << m); ++a) {
      for (unsigned b = 1; b < (1U << m); ++b) {
        // AB = {xy : x in A, y in B}
        unsigned expected = 0;
        for (Element x = 0; x < m; ++x) {
          for (Element y = 0; y < m; ++y) {
            if (((a >> x) & 1U) && ((b >> y) & 1U)) expected |= 1U << f.product(x, y);
          }
        }
        CHECK(p.product(subset(a), subset(b)) == subset(expected));
        CHECK(p.leq(subset(a), subset(b)) == ((a & ~b) == 0));
        // monotone: A <= A', B <= B' implies AB <= A'B'
        for (unsigned a2 = 1; a2 < (1U << m); ++a2) {
          for (unsigned b2 = 1; b2 < (1U << m); ++b2) {
            if ((a & ~a2) == 0 && (b & ~b2) == 0) {
              CHECK(p.leq(p.product(subset(a), subset(b)), p.product(subset(a2), subset(b2))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("power semigroup element names round-trip through the file format") {
  auto const p = power_semigroup(from_plain({"a", "e", "f"}, {0, 1, 2, 0, 1, 2, 0, 1, 2}));
  auto const back = parse(serialize(p));
  REQUIRE(back.ok());
  CHECK(*back.value == p);
  CHECK(p.find("{a,e,f}").has_value());
  CHECK(id(p, "{a,e,f}") == subset(7));
}
