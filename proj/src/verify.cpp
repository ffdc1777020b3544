#include "osg/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "osg/congruence.hpp"
#include "osg/constructions.hpp"
#include "osg/enumerate.hpp"
#include "osg/ideals_green.hpp"

namespace osg {

namespace {

constexpr std::array<std::string_view, kTheoremCount> kTheoremNames = {
    "T_RC_EQUIV",  "L_RC_LEMMA",  "T_RC_LEAST_CSC", "T_RC_DECOMP",   "T_RI_IDEMP",
    "T_GL_IDEMP",  "C_RI_LGL",    "T_LINV_LREL",    "T5_EQUIV",      "C_H_COMM",
    "T_PF_POWER",  "T_RC_IFF_RI", "T_RI_LC_UNION",  "T_RI_CONG",     "C_CREG"};

}  // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kTheoremCount; ++k) {
    if (kTheoremNames[k] == name) return static_cast<TheoremId>(k);
  }
  return std::nullopt;
}

std::array<TheoremId, kTheoremCount> const& all_theorems() {
  static std::array<TheoremId, kTheoremCount> const ids = [] {
    std::array<TheoremId, kTheoremCount> a{};
    for (std::size_t k = 0; k < kTheoremCount; ++k) a[k] = static_cast<TheoremId>(k);
    return a;
  }();
  return ids;
}

std::string_view to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::consistent:     return "consistent";
    case TheoremVerdict::mismatch:       return "mismatch";
    case TheoremVerdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

TheoremResult const& TheoremReport::at(TheoremId id) const {
  for (auto const& r : results) {
    if (r.id == id) return r;
  }
  throw std::out_of_range("TheoremReport: theorem not evaluated");
}

bool TheoremReport::has_mismatch() const {
  return std::any_of(results.begin(), results.end(), [](TheoremResult const& r) {
    return r.verdict == TheoremVerdict::mismatch;
  });
}

namespace {

using Side_ = std::pair<std::string, Verdict>;

// Lazily computed facts shared by several theorems.
class Facts {
 public:
  Facts(OrderedSemigroup const& s, VerifyOptions const& options) : s_(s), opt_(options) {}

  OrderedSemigroup const& s() const { return s_; }
  Readings const& readings() const { return opt_.readings; }
  Limits const& limits() const { return opt_.limits; }
  IdempotentReading reading() const { return opt_.readings.idempotents; }

  bool regular() { return get(regular_, [&] { return is_regular(s_); }).holds(); }
  Verdict const& right_inverse() {
    return get(right_inverse_, [&] { return is_right_inverse(s_, reading()); });
  }
  Verdict const& right_clifford() {
    return get(right_clifford_, [&] { return is_clifford(s_, Side::right); });
  }
  Verdict const& left_clifford() {
    return get(left_clifford_, [&] { return is_clifford(s_, Side::left); });
  }
  Verdict const& left_regular() {
    return get(left_regular_, [&] { return regularity_variant(s_, RegularityVariant::left_regular); });
  }
  EquivalenceRelation const& green(GreenKind k) {
    auto& slot = green_[static_cast<int>(k)];
    if (!slot) slot = green_relation(s_, k);
    return *slot;
  }

 private:
  template <typename F>
  Verdict const& get(std::optional<Verdict>& slot, F&& compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  OrderedSemigroup const& s_;
  VerifyOptions const& opt_;
  std::optional<Verdict> regular_, right_inverse_, right_clifford_, left_clifford_,
      left_regular_;
  std::array<std::optional<EquivalenceRelation>, 4> green_;
};

TheoremResult make_result(TheoremId id, bool hypothesis, std::vector<Side_> const& sides) {
  TheoremResult r{id, hypothesis, {}, TheoremVerdict::not_applicable, {}, {}};
  for (auto const& [name, v] : sides) r.sides.emplace_back(name, v.holds());
  return r;
}

void set_witness(TheoremResult& r, std::vector<Side_> const& sides) {
  for (auto const& [name, v] : sides) {
    if (!v.holds() && !v.witness.empty()) {
      r.witness = v.witness;
      r.detail += " [" + name + (v.clause.empty() ? "" : ": " + v.clause) + "]";
      return;
    }
  }
}

std::string side_list(std::vector<Side_> const& sides) {
  std::string out;
  for (auto const& [name, v] : sides) {
    out += (out.empty() ? "" : " ") + name + "=" + (v.holds() ? "true" : "false");
  }
  return out;
}

// All sides agree.
TheoremResult equivalence(TheoremId id, bool hypothesis, std::vector<Side_> const& sides) {
  auto r = make_result(id, hypothesis, sides);
  if (!hypothesis) return r;
  bool const first = sides.front().second.holds();
  bool const agree = std::all_of(sides.begin(), sides.end(),
                                 [&](Side_ const& x) { return x.second.holds() == first; });
  r.verdict = agree ? TheoremVerdict::consistent : TheoremVerdict::mismatch;
  if (!agree) {
    r.detail = side_list(sides);
    set_witness(r, sides);
  }
  return r;
}

// Conjunction of the premises implies every conclusion.
TheoremResult implication(TheoremId id, bool hypothesis, std::vector<Side_> const& premises,
                          std::vector<Side_> const& conclusions) {
  std::vector<Side_> all = premises;
  all.insert(all.end(), conclusions.begin(), conclusions.end());
  auto r = make_result(id, hypothesis, all);
  if (!hypothesis) return r;
  bool const premise = std::all_of(premises.begin(), premises.end(),
                                   [](Side_ const& x) { return x.second.holds(); });
  bool const conclusion = std::all_of(conclusions.begin(), conclusions.end(),
                                      [](Side_ const& x) { return x.second.holds(); });
  bool const ok = !premise || conclusion;
  r.verdict = ok ? TheoremVerdict::consistent : TheoremVerdict::mismatch;
  if (!ok) {
    r.detail = side_list(all);
    set_witness(r, conclusions);
  }
  return r;
}

TheoremResult not_applicable(TheoremId id, std::string reason) {
  TheoremResult r{id, false, {}, TheoremVerdict::not_applicable, std::move(reason), {}};
  return r;
}

TheoremResult evaluate(TheoremId id, Facts& f) {
  auto const& s = f.s();
  auto const reading = f.reading();
  switch (id) {
    case TheoremId::T_RC_EQUIV: {
      bool const hyp = f.regular();
      if (!hyp) return equivalence(id, false, {{"right_clifford", f.right_clifford()}});
      return equivalence(id, true,
                         {{"right_clifford", f.right_clifford()},
                          {"RC2", right_clifford_condition(s, RightCliffordCondition::RC2, reading)},
                          {"RC3", right_clifford_condition(s, RightCliffordCondition::RC3, reading)},
                          {"RC4", right_clifford_condition(s, RightCliffordCondition::RC4, reading)},
                          {"RC5", right_clifford_condition(s, RightCliffordCondition::RC5, reading)}});
    }

    case TheoremId::L_RC_LEMMA: {
      bool const hyp = f.regular();
      if (!hyp) return implication(id, false, {{"right_clifford", f.right_clifford()}}, {});
      return implication(id, true, {{"right_clifford", f.right_clifford()}},
                         {{"LC1", right_clifford_condition(s, RightCliffordCondition::LC1, reading)},
                          {"LC2", right_clifford_condition(s, RightCliffordCondition::LC2, reading)}});
    }

    case TheoremId::T_RC_LEAST_CSC: {
      bool const hyp = f.regular();
      bool const least = f.green(GreenKind::R) == least_complete_semilattice_congruence(s);
      return equivalence(id, hyp,
                         {{"right_clifford", f.right_clifford()},
                          {"R_is_least_csc", Verdict::from_bool(least, "R_is_least_csc")}});
    }

    case TheoremId::T_RC_DECOMP: {
      bool const hyp = f.regular();
      return equivalence(id, hyp,
                         {{"right_clifford", f.right_clifford()},
                          {"csl_of_right_group_like",
                           hyp ? is_complete_semilattice_of(s, GroupLikeMode::right)
                               : Verdict::not_applicable("not_regular")}});
    }

    case TheoremId::T_RI_IDEMP: {
      bool const hyp = f.regular();
      return equivalence(
          id, hyp,
          {{"RI1", f.right_inverse()},
           {"RI6", hyp ? right_inverse_condition(s, RightInverseCondition::RI6, reading)
                       : Verdict::not_applicable("not_regular")}});
    }

    case TheoremId::T_GL_IDEMP: {
      bool const hyp = f.regular();
      std::vector<Side_> sides = {
          {"left_group_like", is_group_like(s, GroupLikeMode::left)},
          {"idempotents_L_related", idempotents_related(s, GreenKind::L, reading)},
          {"right_group_like", is_group_like(s, GroupLikeMode::right)},
          {"idempotents_R_related", idempotents_related(s, GreenKind::R, reading)}};
      auto r = make_result(id, hyp, sides);
      if (!hyp) return r;
      bool const ok = sides[0].second.holds() == sides[1].second.holds() &&
                      sides[2].second.holds() == sides[3].second.holds();
      r.verdict = ok ? TheoremVerdict::consistent : TheoremVerdict::mismatch;
      if (!ok) {
        r.detail = side_list(sides);
        set_witness(r, sides);
      }
      return r;
    }

    case TheoremId::C_RI_LGL:
      return implication(id, f.regular(),
                         {{"right_inverse", f.right_inverse()},
                          {"left_group_like", is_group_like(s, GroupLikeMode::left)}},
                         {{"group_like", is_group_like(s, GroupLikeMode::both)}});

    case TheoremId::T_LINV_LREL: {
      bool const hyp = f.regular();
      if (!hyp) return make_result(id, false, {});
      auto pair = left_related_inverses_condition(s, f.readings().linv_quantifier, reading);
      return equivalence(id, true,
                         {{"inverses_L_related", pair.lhs},
                          {std::string("ef_in_eSfSe_") +
                               std::string(to_string(f.readings().linv_quantifier)),
                           pair.rhs}});
    }

    case TheoremId::T5_EQUIV: {
      bool const hyp = f.regular();
      if (!hyp) return make_result(id, false, {{"RI1", f.right_inverse()}});
      std::vector<Side_> sides{{"RI1", f.right_inverse()}};
      for (auto c : {RightInverseCondition::RI2, RightInverseCondition::RI3,
                     RightInverseCondition::RI4, RightInverseCondition::RI5}) {
        sides.emplace_back(std::string(to_string(c)), right_inverse_condition(s, c, reading));
      }
      return equivalence(id, true, sides);
    }

    case TheoremId::C_H_COMM: {
      // Read as a statement about S: every pair of ordered idempotents is
      // H-commutative iff every pair satisfies (Se] meet (Sf] = (Sef].
      bool const hyp = f.right_inverse().holds();
      if (!hyp) return make_result(id, false, {});
      auto const idem = ordered_idempotents(s, reading).members();
      Verdict lhs = Verdict::yes(), rhs = Verdict::yes();
      for (Element e : idem) {
        for (Element g : idem) {
          auto const pair = h_commutative_corollary(s, e, g, reading);
          if (lhs.holds() && !pair.lhs.holds()) lhs = Verdict::no("ef_H_fe", {e, g});
          if (rhs.holds() && !pair.rhs.holds()) rhs = Verdict::no("Se_meet_Sf_is_Sef", {e, g});
        }
      }
      return equivalence(id, true, {{"idempotents_H_commute", lhs}, {"Se_meet_Sf_is_Sef", rhs}});
    }

    case TheoremId::T_PF_POWER: {
      std::size_t const m = s.size();
      bool const fits = m < 63 && (std::size_t{1} << m) - 1 <= f.limits().max_n &&
                        (std::size_t{1} << m) - 1 <= kHardMaxElements;
      if (!s.has_discrete_order()) return not_applicable(id, "order is not discrete");
      if (!fits) return not_applicable(id, "power semigroup exceeds the size bound");
      auto const power = power_semigroup(s, f.limits());
      return equivalence(id, true,
                         {{"power_right_inverse", is_right_inverse(power, reading)},
                          {"plain_right_inverse", is_right_inverse_plain(s)}});
    }

    case TheoremId::T_RC_IFF_RI: {
      bool const hyp = f.regular();
      if (!hyp) return make_result(id, false, {});
      auto const lc1 = right_clifford_condition(s, RightCliffordCondition::LC1, reading);
      Verdict rhs = f.right_inverse();
      if (rhs.holds() && !lc1.holds()) rhs = lc1;
      return equivalence(id, true,
                         {{"right_clifford", f.right_clifford()},
                          {"right_inverse_and_a_in_a2Sa", rhs}});
    }

    case TheoremId::T_RI_LC_UNION: {
      if (s.size() > f.limits().subsemigroup_n) {
        return not_applicable(id, "subsemigroup scan exceeds the size bound");
      }
      return implication(id, f.regular(),
                         {{"right_inverse", f.right_inverse()},
                          {"left_clifford", f.left_clifford()}},
                         {{"union_of_group_like", is_union_of_group_like(s, f.limits())}});
    }

    case TheoremId::T_RI_CONG:
    case TheoremId::C_CREG: {
      bool hyp = f.right_inverse().holds();
      if (id == TheoremId::C_CREG) hyp = hyp && f.left_regular().holds();
      if (!hyp) return make_result(id, false, {});
      bool const l_eq_h = f.green(GreenKind::L) == f.green(GreenKind::H);
      std::vector<Side_> sides = {
          {"R_congruence", is_congruence(s, f.green(GreenKind::R), Side::two_sided)},
          {"L_equals_H", Verdict::from_bool(l_eq_h, "L_equals_H")},
          {"csl_of_right_group_like", is_complete_semilattice_of(s, GroupLikeMode::right)}};
      if (id == TheoremId::C_CREG) {
        sides.emplace_back("completely_regular",
                           regularity_variant(s, RegularityVariant::completely_regular));
      }
      return equivalence(id, true, sides);
    }
  }
  throw std::invalid_argument("theorem_suite: unknown theorem");
}

}  // namespace

TheoremReport theorem_suite(OrderedSemigroup const& s, VerifyOptions const& options) {
  Facts facts(s, options);
  TheoremReport report;
  auto const& ids = options.theorems.empty()
                        ? std::vector<TheoremId>(all_theorems().begin(), all_theorems().end())
                        : options.theorems;
  for (TheoremId id : ids) report.results.push_back(evaluate(id, facts));
  return report;
}

// Corpus runs -----------------------------------------------------------------

std::size_t CorpusSummary::mismatch_count() const {
  std::size_t total = 0;
  for (auto const& [id, t] : tallies) total += t.mismatch;
  return total;
}

TheoremTally const& CorpusSummary::tally(TheoremId id) const {
  for (auto const& [k, t] : tallies) {
    if (k == id) return t;
  }
  throw std::out_of_range("CorpusSummary: theorem not tallied");
}

CorpusSummary corpus_verify(std::size_t n_max, VerifyOptions const& options,
                            std::size_t threads) {
  CorpusSummary summary;
  summary.n_max = n_max;
  auto const ids = options.theorems.empty()
                       ? std::vector<TheoremId>(all_theorems().begin(), all_theorems().end())
                       : options.theorems;
  for (TheoremId id : ids) summary.tallies.emplace_back(id, TheoremTally{});

  EnumerateOptions eopt;
  eopt.threads = threads;
  eopt.limits = options.limits;
  eopt.allow_large = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto const corpus = enumerate_corpus(n, eopt);
    std::vector<TheoremReport> reports(corpus.entries.size());
    auto work = [&](std::size_t w, std::size_t workers) {
      for (std::size_t k = w; k < corpus.entries.size(); k += workers) {
        reports[k] = theorem_suite(corpus.entries[k].structure, options);
      }
    };
    std::size_t const workers = std::max<std::size_t>(1, threads);
    if (workers == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
      for (auto& t : pool) t.join();
    }
    for (std::size_t k = 0; k < reports.size(); ++k) {
      ++summary.structures;
      for (std::size_t t = 0; t < ids.size(); ++t) {
        auto const& r = reports[k].results[t];
        auto& tally = summary.tallies[t].second;
        switch (r.verdict) {
          case TheoremVerdict::consistent:     ++tally.consistent; break;
          case TheoremVerdict::not_applicable: ++tally.not_applicable; break;
          case TheoremVerdict::mismatch:
            ++tally.mismatch;
            summary.mismatches.push_back({r.id, r.detail, corpus.entries[k].structure});
            break;
        }
      }
    }
  }
  return summary;
}

std::string render_summary(CorpusSummary const& summary) {
  std::ostringstream out;
  out << "corpus: orders 1.." << summary.n_max << ", " << summary.structures
      << " labelled ordered semigroups\n";
  out << std::left << std::setw(16) << "theorem" << std::right << std::setw(12) << "consistent"
      << std::setw(10) << "mismatch" << std::setw(16) << "not_applicable" << '\n';
  for (auto const& [id, t] : summary.tallies) {
    out << std::left << std::setw(16) << to_string(id) << std::right << std::setw(12)
        << t.consistent << std::setw(10) << t.mismatch << std::setw(16) << t.not_applicable
        << '\n';
  }
  out << "mismatches: " << summary.mismatch_count() << '\n';
  return out.str();
}

std::size_t emit_mismatches(CorpusSummary const& summary, std::string const& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::size_t k = 0;
  for (auto const& m : summary.mismatches) {
    std::ostringstream name;
    name << to_string(m.id) << '-' << std::setw(5) << std::setfill('0') << k++ << ".osg";
    std::ofstream file(fs::path(directory) / name.str());
    if (!file) throw std::runtime_error("cannot write into " + directory);
    file << "# mismatch " << to_string(m.id) << ": " << m.detail << '\n'
         << serialize(m.structure);
  }
  return k;
}

}  // namespace osg
