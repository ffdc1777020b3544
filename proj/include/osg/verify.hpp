// Checks each characterization theorem for ordered semigroups as a
// biconditional or implication on a concrete structure, and tallies the
// outcomes across exhaustively enumerated corpora. A mismatch is data, not an
// error: it means a statement fails under the configured readings.

#ifndef OSG_VERIFY_HPP
#define OSG_VERIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/classify.hpp"
#include "osg/core.hpp"

namespace osg {

enum class TheoremId {
  T_RC_EQUIV,      // right Clifford <=> RC2 <=> RC3 <=> RC4 <=> RC5
  L_RC_LEMMA,      // right Clifford => LC1 and LC2
  T_RC_LEAST_CSC,  // right Clifford <=> R is the least complete semilattice congruence
  T_RC_DECOMP,     // right Clifford <=> complete semilattice of right group-like
  T_RI_IDEMP,      // right inverse <=> (e L f => e H f)
  T_GL_IDEMP,      // left (right) group-like <=> idempotents L (R)-related
  C_RI_LGL,        // right inverse and left group-like => group-like
  T_LINV_LREL,     // inverses L-related <=> ef in (eSfSe]
  T5_EQUIV,        // RI1 <=> RI2 <=> RI3 <=> RI4 <=> RI5
  C_H_COMM,        // right inverse: all ef H fe <=> all (Se] n (Sf] = (Sef]
  T_PF_POWER,      // P_f(F) right inverse <=> F right inverse
  T_RC_IFF_RI,     // right Clifford <=> right inverse and a in (a^2 S a]
  T_RI_LC_UNION,   // right inverse and left Clifford => union of group-like
  T_RI_CONG,       // right inverse: R congruence <=> L = H <=> c.s. of right group-like
  C_CREG           // ... and, if left regular, <=> completely regular
};

inline constexpr std::size_t kTheoremCount = 15;

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);
std::array<TheoremId, kTheoremCount> const& all_theorems();

enum class TheoremVerdict { consistent, mismatch, not_applicable };

std::string_view to_string(TheoremVerdict v);

struct TheoremResult {
  TheoremId id;
  bool hypothesis_met = false;
  /// Truth value of each side / condition, in a fixed order per theorem.
  std::vector<std::pair<std::string, bool>> sides;
  TheoremVerdict verdict = TheoremVerdict::not_applicable;
  /// For mismatches: the conditions that disagree and, where one exists, the
  /// element tuple of a failing condition.
  std::string detail;
  std::vector<Element> witness;
};

struct TheoremReport {
  std::vector<TheoremResult> results;

  TheoremResult const& at(TheoremId id) const;
  bool has_mismatch() const;
};

struct VerifyOptions {
  Readings readings = {};
  Limits limits = {};
  /// Theorems to evaluate; empty means all.
  std::vector<TheoremId> theorems = {};
};

TheoremReport theorem_suite(OrderedSemigroup const& s, VerifyOptions const& options = {});

struct TheoremTally {
  std::size_t consistent = 0;
  std::size_t mismatch = 0;
  std::size_t not_applicable = 0;
};

struct CorpusMismatch {
  TheoremId id;
  std::string detail;
  OrderedSemigroup structure;
};

struct CorpusSummary {
  std::size_t n_max = 0;
  std::size_t structures = 0;
  std::vector<std::pair<TheoremId, TheoremTally>> tallies;
  std::vector<CorpusMismatch> mismatches;

  std::size_t mismatch_count() const;
  TheoremTally const& tally(TheoremId id) const;
};

/// theorem_suite over every labelled ordered semigroup of order 1..n_max.
CorpusSummary corpus_verify(std::size_t n_max, VerifyOptions const& options = {},
                            std::size_t threads = 1);

std::string render_summary(CorpusSummary const& summary);

/// Writes each mismatching structure as an osg v1 file; returns the count.
std::size_t emit_mismatches(CorpusSummary const& summary, std::string const& directory);

}  // namespace osg

#endif  // OSG_VERIFY_HPP
