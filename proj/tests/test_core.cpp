#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "osg/core.hpp"

using namespace osg;

namespace {

ElementSet set_of(OrderedSemigroup const& s, std::initializer_list<char const*> names) {
  ElementSet out = s.empty_set();
  for (auto const* n : names) out.insert(*s.find(n));
  return out;
}

ElementSet from_mask(std::size_t n, unsigned mask) { return ElementSet(n, mask); }

bool has_kind(ValidationResult const& r, DiagnosticKind k) {
  for (auto const& d : r.diagnostics) {
    if (d.kind == k) return true;
  }
  return false;
}

Diagnostic const& first_of(ValidationResult const& r, DiagnosticKind k) {
  for (auto const& d : r.diagnostics) {
    if (d.kind == k) return d;
  }
  throw std::logic_error("no diagnostic of that kind");
}

Table flatten(std::vector<std::vector<int>> const& t) {
  Table out;
  for (auto const& row : t) {
    for (int v : row) out.push_back(static_cast<Element>(v));
  }
  return out;
}

}  // namespace

TEST_CASE("parse: the worked example") {
  auto const s = fixtures::worked_example();
  CHECK(s.size() == 3);
  auto a = *s.find("a"), e = *s.find("e"), f = *s.find("f");
  CHECK(s.product(a, e) == e);
  CHECK(s.product(e, a) == a);
  // {(a,a), (a,e), (a,f), (e,e), (f,f)}
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      bool const expected = x == y || (x == a && (y == e || y == f));
      CHECK(s.leq(x, y) == expected);
    }
  }
}

TEST_CASE("parse: single element with no order lines") {
  auto r = parse("osg v1\nelements: x\ntable:\nx\norder:\n");
  REQUIRE(r.ok());
  CHECK(r.value->size() == 1);
  CHECK(r.value->leq(0, 0));
  // the order section is optional
  CHECK(parse("osg v1\nelements: x\ntable:\nx\n").ok());
}

TEST_CASE("parse: cyclic order is an antisymmetry violation") {
  auto r = parse("osg v1\nelements: e f\ntable:\ne f\ne f\norder:\ne <= f\nf <= e\n");
  REQUIRE_FALSE(r.ok());
  REQUIRE(has_kind(r, DiagnosticKind::antisymmetry));
  CHECK(first_of(r, DiagnosticKind::antisymmetry).witness == std::vector<std::string>{"e", "f"});
}

TEST_CASE("parse: order generators are closed transitively") {
  auto r = parse("osg v1\nelements: a b c\ntable:\na a a\na a a\na a a\norder:\na <= b\nb <= c\n");
  REQUIRE(r.ok());
  CHECK(r.value->leq(0, 2));
  CHECK_FALSE(r.value->leq(2, 0));
}

TEST_CASE("parse: comments and blank lines are ignored") {
  auto r = parse("# leading comment\n\nosg v1   # header\nelements: x # one\n\ntable:\nx\n");
  CHECK(r.ok());
}

TEST_CASE("parse: errors carry line numbers") {
  struct Case {
    char const* text;
    std::size_t line;
    char const* fragment;
  };
  Case const cases[] = {
      {"osg v2\n", 1, "header"},
      {"osg v1\nelements: a b\ntable:\na b\na\n", 5, "ragged"},
      {"osg v1\nelements: a b\ntable:\na b\na c\n", 5, "unknown element"},
      {"osg v1\nelements: a\ntable:\na\norder:\na <= z\n", 6, "unknown element"},
      {"osg v1\nelements: a\ntable:\na\nextra:\n", 5, "unknown section"},
      {"osg v1\nelements: a a\n", 2, "duplicate element"},
      {"osg v1\nelements: a\ntable:\na\nelements: a\n", 5, "duplicate"},
      {"osg v1\nelements: a\norder:\na < a\n", 4, "expected"},
      {"osg v1\nelements: a b\ntable:\na b\n", 3, "rows"},
  };
  for (auto const& c : cases) {
    CAPTURE(c.text);
    auto r = parse(c.text);
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].kind == DiagnosticKind::parse);
    CHECK(r.diagnostics[0].line == c.line);
    CHECK(r.diagnostics[0].message.find(c.fragment) != std::string::npos);
  }
  CHECK_FALSE(parse("osg v1\ntable:\n").ok());
  CHECK_FALSE(parse("osg v1\nelements: a\n").ok());
  CHECK_FALSE(parse("").ok());
}

TEST_CASE("parse: size bound") {
  Limits small;
  small.max_n = 2;
  auto r = parse("osg v1\nelements: a b c\ntable:\na a a\na a a\na a a\n", small);
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics[0].message.find("maximum") != std::string::npos);
}

TEST_CASE("validate: examples") {
  // right-zero on {a,e,f} with a<=e, a<=f
  auto leq = order_closure(3, {{0, 1}, {0, 2}});
  CHECK(validate({"a", "e", "f"}, {0, 1, 2, 0, 1, 2, 0, 1, 2}, leq).ok());

  // left-zero on {e,f} with e<=f
  CHECK(validate({"e", "f"}, {0, 0, 1, 1}, order_closure(2, {{0, 1}})).ok());

  // the non-associative candidate named in the documentation, a*a=b, a*b=b*a=a, b*b=b, is in
  // fact associative: it is the group of order 2 with identity b.
  CHECK(validate({"a", "b"}, {1, 0, 0, 1}, order_closure(2, {})).ok());
}

TEST_CASE("validate: a genuine non-associative table, found by scan") {
  bool found = false;
  oracle::for_each_raw_table(2, [&](auto const& t) {
    if (found || oracle::associative(2, t)) return;
    found = true;
    auto r = validate({"a", "b"}, flatten(t), order_closure(2, {}));
    REQUIRE_FALSE(r.ok());
    auto const& d = first_of(r, DiagnosticKind::associativity);
    REQUIRE(d.witness.size() == 3);
    int x = d.witness[0] == "a" ? 0 : 1, y = d.witness[1] == "a" ? 0 : 1,
        z = d.witness[2] == "a" ? 0 : 1;
    CHECK(t[t[x][y]][z] != t[x][t[y][z]]);
  });
  CHECK(found);
}

TEST_CASE("validate: accepts exactly what the brute-force checks accept (n <= 2, every relation)") {
  for (int n = 1; n <= 2; ++n) {
    oracle::for_each_raw_table(n, [&](auto const& t) {
      for (unsigned mask = 0; mask < (1U << (n * n)); ++mask) {
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
        for (int i = 0; i < n * n; ++i) le[i / n][i % n] = (mask >> i) & 1U;
        bool const expected =
            oracle::associative(n, t) && oracle::is_poset(n, le) && oracle::compatible(n, t, le);
        auto r = validate(default_names(n), flatten(t), le);
        CHECK(r.ok() == expected);
        CHECK(r.ok() == r.diagnostics.empty());
      }
    });
  }
}

TEST_CASE("validate: agreement and witness re-check over all n = 3 tables and posets") {
  auto const posets = oracle::all_posets(3);
  CHECK(posets.size() == 19);
  std::size_t accepted = 0;
  oracle::for_each_raw_table(3, [&](auto const& t) {
    for (auto const& le : posets) {
      bool const assoc = oracle::associative(3, t);
      bool const compat = oracle::compatible(3, t, le);
      auto r = validate(default_names(3), flatten(t), le);
      REQUIRE(r.ok() == (assoc && compat));
      accepted += r.ok();
      REQUIRE(has_kind(r, DiagnosticKind::associativity) == !assoc);
      REQUIRE(has_kind(r, DiagnosticKind::compatibility) == !compat);
      for (auto const& d : r.diagnostics) {
        std::vector<int> w;
        for (auto const& name : d.witness) w.push_back(name[0] - 'a');
        if (d.kind == DiagnosticKind::associativity) {
          REQUIRE(w.size() == 3);
          CHECK(t[t[w[0]][w[1]]][w[2]] != t[w[0]][t[w[1]][w[2]]]);
        } else if (d.kind == DiagnosticKind::compatibility) {
          REQUIRE(w.size() == 3);  // (x, y, z): x <= y but z*x, z*y or x*z, y*z out of order
          CHECK(le[w[0]][w[1]]);
          CHECK((!le[t[w[2]][w[0]]][t[w[2]][w[1]]] || !le[t[w[0]][w[2]]][t[w[1]][w[2]]]));
        }
      }
    }
  });
  CHECK(accepted == 971);
}

TEST_CASE("validate: order axiom diagnostics re-check") {
  std::vector<std::vector<bool>> le = {{false, true}, {false, true}};
  auto r = validate({"a", "b"}, {0, 0, 0, 0}, le);
  REQUIRE(has_kind(r, DiagnosticKind::reflexivity));
  CHECK(first_of(r, DiagnosticKind::reflexivity).witness == std::vector<std::string>{"a"});

  std::vector<std::vector<bool>> nt = {{true, true, false}, {false, true, true}, {false, false, true}};
  auto r2 = validate({"a", "b", "c"}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, nt);
  REQUIRE(has_kind(r2, DiagnosticKind::transitivity));
  auto const& w = first_of(r2, DiagnosticKind::transitivity).witness;
  CHECK(w == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("downward_closure: examples") {
  auto const s = fixtures::worked_example();
  CHECK(downward_closure(s, set_of(s, {"e"})) == set_of(s, {"a", "e"}));
  CHECK(downward_closure(s, s.empty_set()).empty());
  CHECK(downward_closure(s, set_of(s, {"e", "f"})) == set_of(s, {"a", "e", "f"}));
}

TEST_CASE("set_product: examples") {
  auto const s = fixtures::worked_example();
  CHECK(set_product(s, set_of(s, {"a"}), set_of(s, {"e", "f"})) == set_of(s, {"e", "f"}));
  CHECK(set_product(s, s.empty_set(), s.carrier()).empty());
  CHECK(set_product(s, set_of(s, {"e"}), set_of(s, {"a"})) == set_of(s, {"a"}));
}

TEST_CASE("dual: examples") {
  auto const s = fixtures::worked_example();
  auto const d = dual(s);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(d.product(x, y) == x);
      CHECK(d.leq(x, y) == s.leq(x, y));
    }
  }
  CHECK(dual(fixtures::meet_semilattice()) == fixtures::meet_semilattice());
  CHECK(dual(fixtures::left_zero()).table() == fixtures::right_zero().table());
}

TEST_CASE("properties over every ordered semigroup of order <= 3") {
  auto const corpus = oracle::corpus(3);
  CHECK(corpus.size() == 1 + 20 + 971);
  for (auto const& s : corpus) {
    auto const r = oracle::raw(s);
    std::size_t const n = s.size();
    unsigned const subsets = 1U << n;
    CHECK(dual(dual(s)) == s);
    auto round = parse(serialize(s));
    REQUIRE(round.ok());
    CHECK(*round.value == s);

    for (unsigned h = 0; h < subsets; ++h) {
      auto const H = from_mask(n, h);
      auto const closed = downward_closure(s, H);
      // matches the oracle
      oracle::Set hs;
      H.for_each([&](Element x) { hs.insert(static_cast<int>(x)); });
      oracle::Set got;
      closed.for_each([&](Element x) { got.insert(static_cast<int>(x)); });
      CHECK(got == oracle::down(r, hs));
      // extensive, idempotent
      CHECK(H.is_subset_of(closed));
      CHECK(downward_closure(s, closed) == closed);
      for (unsigned k = 0; k < subsets; ++k) {
        auto const K = from_mask(n, k);
        if (H.is_subset_of(K)) CHECK(closed.is_subset_of(downward_closure(s, K)));
      }
    }
    // set_product is associative
    for (unsigned a = 0; a < subsets; ++a) {
      for (unsigned b = 0; b < subsets; ++b) {
        for (unsigned c = 0; c < subsets; ++c) {
          auto A = from_mask(n, a), B = from_mask(n, b), C = from_mask(n, c);
          CHECK(set_product(s, set_product(s, A, B), C) == set_product(s, A, set_product(s, B, C)));
        }
      }
    }
  }
}

TEST_CASE("bracket is the closure of a product") {
  auto const s = fixtures::worked_example();
  auto const a = s.singleton(*s.find("a")), S = s.carrier();
  CHECK(bracket(s, {a, S, a}) == downward_closure(s, set_product(s, set_product(s, a, S), a)));
  CHECK_THROWS_AS(bracket(s, {}), std::invalid_argument);
}

TEST_CASE("relabel and restrict_to") {
  auto const s = fixtures::worked_example();
  std::vector<Element> swap_ef = {0, 2, 1};
  auto const t = relabel(s, swap_ef);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(t.product(swap_ef[x], swap_ef[y]) == swap_ef[s.product(x, y)]);
      CHECK(t.leq(swap_ef[x], swap_ef[y]) == s.leq(x, y));
    }
  }
  CHECK_THROWS_AS(relabel(s, {0, 0, 1}), std::invalid_argument);

  auto sub = restrict_to(s, set_of(s, {"a", "e"}));
  REQUIRE(sub.has_value());
  CHECK(sub->size() == 2);
  CHECK(sub->names() == std::vector<std::string>{"a", "e"});
  CHECK(sub->leq(0, 1));
  // {a} * {e} ... right-zero, so any subset is closed; use the nilpotent one for a failure
  auto const nil = fixtures::nilpotent();
  CHECK_FALSE(restrict_to(nil, set_of(nil, {"a"})).has_value());
}

TEST_CASE("zero_element") {
  CHECK(zero_element(fixtures::trivial()).has_value());
  CHECK(*zero_element(fixtures::meet_semilattice()) == 0);
  CHECK_FALSE(zero_element(fixtures::worked_example()).has_value());
}

TEST_CASE("ElementSet basics") {
  ElementSet s(5);
  CHECK(s.empty());
  s.insert(3);
  s.insert(1);
  CHECK(s.size() == 2);
  CHECK(s.members() == std::vector<Element>{1, 3});
  CHECK(s.is_subset_of(ElementSet::full(5)));
  CHECK(ElementSet::full(5).first_outside(s) == Element{0});
  CHECK_FALSE(s.first_outside(ElementSet::full(5)).has_value());
  s.erase(3);
  CHECK(s == ElementSet::singleton(5, 1));
  CHECK_THROWS_AS(ElementSet(65), std::length_error);
}

TEST_CASE("Limits from the environment") {
  ::setenv("OSG_MAX_N", "20", 1);
  CHECK(Limits::from_environment().max_n == 20);
  ::setenv("OSG_MAX_N", "1000", 1);
  CHECK(Limits::from_environment().max_n == kHardMaxElements);
  ::setenv("OSG_MAX_N", "junk", 1);
  CHECK(Limits::from_environment().max_n == 12);
  ::unsetenv("OSG_MAX_N");
  CHECK(Limits::from_environment().max_n == 12);
}
