#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "osg/verify.hpp"

using namespace osg;

TEST_CASE("theorem ids") {
  CHECK(all_theorems().size() == kTheoremCount);
  for (auto id : all_theorems()) CHECK(theorem_from_string(to_string(id)) == id);
  CHECK_FALSE(theorem_from_string("T_NOPE").has_value());
}

TEST_CASE("theorem_suite: worked example") {
  auto const report = theorem_suite(fixtures::worked_example());
  CHECK(report.results.size() == kTheoremCount);
  CHECK_FALSE(report.has_mismatch());
  for (auto const& r : report.results) {
    CAPTURE(to_string(r.id));
    CHECK(r.verdict != TheoremVerdict::mismatch);
  }
  CHECK(report.at(TheoremId::T5_EQUIV).verdict == TheoremVerdict::consistent);
  CHECK(report.at(TheoremId::T_RI_CONG).verdict == TheoremVerdict::consistent);
  // plain semigroups only
  CHECK(report.at(TheoremId::T_PF_POWER).verdict == TheoremVerdict::not_applicable);
}

TEST_CASE("theorem_suite: left-zero on two elements") {
  auto const report = theorem_suite(fixtures::left_zero());
  auto const& t5 = report.at(TheoremId::T5_EQUIV);
  CHECK(t5.verdict == TheoremVerdict::consistent);
  for (auto const& [name, value] : t5.sides) CHECK_FALSE(value);
  auto const& ri = report.at(TheoremId::T_RI_IDEMP);
  CHECK(ri.verdict == TheoremVerdict::consistent);
  for (auto const& [name, value] : ri.sides) CHECK_FALSE(value);
  CHECK(report.at(TheoremId::T_PF_POWER).verdict == TheoremVerdict::consistent);
}

TEST_CASE("theorem_suite: trivial semigroup") {
  auto const report = theorem_suite(fixtures::trivial());
  for (auto const& r : report.results) {
    CAPTURE(to_string(r.id));
    CHECK(r.verdict == TheoremVerdict::consistent);
  }
}

TEST_CASE("theorem_suite: selection and hypotheses") {
  VerifyOptions only;
  only.theorems = {TheoremId::C_CREG, TheoremId::T5_EQUIV};
  auto const report = theorem_suite(fixtures::nilpotent(), only);
  REQUIRE(report.results.size() == 2);
  for (auto const& r : report.results) {
    CHECK_FALSE(r.hypothesis_met);
    CHECK(r.verdict == TheoremVerdict::not_applicable);
  }
  CHECK_THROWS(report.at(TheoremId::T_RC_EQUIV));
}

TEST_CASE("verdict is mismatch only when the hypothesis holds and the sides disagree") {
  for (auto const& s : oracle::corpus(3)) {
    for (auto const& r : theorem_suite(s).results) {
      if (!r.hypothesis_met) CHECK(r.verdict != TheoremVerdict::mismatch);
      if (r.verdict == TheoremVerdict::consistent) CHECK(r.hypothesis_met);
    }
  }
}

TEST_CASE("corpus_verify: small orders") {
  auto const one = corpus_verify(1);
  CHECK(one.structures == 1);
  CHECK(one.mismatch_count() == 0);
  for (auto const& [id, t] : one.tallies) CHECK(t.mismatch == 0);

  auto const two = corpus_verify(2);
  CHECK(two.structures == 21);
  for (auto id : {TheoremId::T5_EQUIV, TheoremId::T_RC_EQUIV, TheoremId::T_RC_LEAST_CSC}) {
    CHECK(two.tally(id).mismatch == 0);
  }
  for (auto const& [id, t] : two.tallies) {
    CHECK(t.consistent + t.mismatch + t.not_applicable == two.structures);
  }
}

TEST_CASE("corpus_verify: the exists reading of the inverse condition is refuted") {
  VerifyOptions exists;
  exists.readings.linv_quantifier = PairQuantifier::exists;
  exists.theorems = {TheoremId::T_LINV_LREL};
  auto const summary = corpus_verify(3, exists);
  CHECK(summary.tally(TheoremId::T_LINV_LREL).mismatch >= 1);
  // the worked example is one of the refuting structures
  auto const report = theorem_suite(fixtures::worked_example(), exists);
  CHECK(report.at(TheoremId::T_LINV_LREL).verdict == TheoremVerdict::mismatch);

  // every reported mismatch reproduces when re-run on its own
  for (auto const& m : summary.mismatches) {
    auto const again = theorem_suite(m.structure, exists);
    CHECK(again.at(m.id).verdict == TheoremVerdict::mismatch);
  }
}

TEST_CASE("corpus_verify: parallel and sequential summaries agree") {
  VerifyOptions exists;
  exists.readings.linv_quantifier = PairQuantifier::exists;
  auto const a = corpus_verify(3, exists, 1), b = corpus_verify(3, exists, 4);
  CHECK(render_summary(a) == render_summary(b));
  REQUIRE(a.mismatches.size() == b.mismatches.size());
  for (std::size_t k = 0; k < a.mismatches.size(); ++k) {
    CHECK(a.mismatches[k].structure == b.mismatches[k].structure);
    CHECK(a.mismatches[k].id == b.mismatches[k].id);
  }
}

TEST_CASE("emit_mismatches writes reproducible files") {
  namespace fs = std::filesystem;
  VerifyOptions exists;
  exists.readings.linv_quantifier = PairQuantifier::exists;
  exists.theorems = {TheoremId::T_LINV_LREL};
  auto const summary = corpus_verify(3, exists);
  REQUIRE_FALSE(summary.mismatches.empty());
  auto const dir = fs::temp_directory_path() / "osg-mismatch-test";
  fs::remove_all(dir);
  std::size_t const written = emit_mismatches(summary, dir.string());
  CHECK(written == summary.mismatches.size());
  for (auto const& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto const r = parse(text);
    REQUIRE(r.ok());
    CHECK(theorem_suite(*r.value, exists).has_mismatch());
  }
  fs::remove_all(dir);
}

TEST_CASE("every theorem holds on the corpus of order <= 3 under both idempotent readings") {
  for (auto reading : {IdempotentReading::leq, IdempotentReading::eq}) {
    VerifyOptions options;
    options.readings.idempotents = reading;
    auto const summary = corpus_verify(3, options);
    CHECK(summary.structures == 992);
    CHECK(summary.mismatch_count() == 0);
  }
}
