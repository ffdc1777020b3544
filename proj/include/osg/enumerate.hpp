// Exhaustive generation of small ordered semigroups: every associative
// Cayley table on n labelled elements, every compatible partial order on
// each, with isomorphism reduction as a post-pass over canonical forms.

#ifndef OSG_ENUMERATE_HPP
#define OSG_ENUMERATE_HPP

#include <compare>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

struct EnumerateOptions {
  bool allow_large = false;  // permit n == limits.enumerate_large_n
  bool up_to_iso = false;
  std::size_t threads = 1;
  Limits limits = {};
};

/// Throws std::length_error unless 1 <= n <= the permitted bound.
void check_enumeration_bound(std::size_t n, EnumerateOptions const& options);

/// Calls `visit` on every associative table on n labelled elements exactly
/// once, in lexicographic order of the row-major table. When `first_row` is
/// given, only tables starting with that row are visited.
void for_each_table(std::size_t n, std::function<void(Table const&)> const& visit,
                    std::vector<Element> const* first_row = nullptr);

std::vector<Table> enumerate_tables(std::size_t n, EnumerateOptions const& options = {});

/// Every partial order on n labelled elements (reflexive, antisymmetric,
/// transitive), discrete order first.
std::vector<LeqMatrix> partial_orders(std::size_t n);

/// Partial orders compatible with multiplication on both sides.
std::vector<LeqMatrix> compatible_orders(Table const& table, std::size_t n);

/// Lexicographically least (table, order) encoding over all simultaneous
/// relabellings. Equal forms <=> isomorphic ordered semigroups.
struct CanonicalForm {
  std::string bytes;

  std::string hex_digest() const;  // FNV-1a 64, 16 hex digits
  friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;
  friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;
};

/// Throws std::length_error above 8 elements (n! relabellings).
CanonicalForm canonicalize(OrderedSemigroup const& s);

/// Encoding of the structure as labelled, without relabelling.
std::string labeled_encoding(OrderedSemigroup const& s);

struct CorpusEntry {
  CanonicalForm canonical;
  std::string labeled;
  OrderedSemigroup structure;
};

struct Corpus {
  std::size_t n = 0;
  bool up_to_iso = false;
  std::size_t table_count = 0;    // associative labelled tables
  std::size_t ordered_count = 0;  // labelled (table, compatible order) pairs
  /// Sorted by (canonical, labeled); one entry per isomorphism class when
  /// up_to_iso, otherwise one per labelled structure.
  std::vector<CorpusEntry> entries;
};

/// Work is split by first table row across `threads` workers and merged in
/// sorted order, so the result does not depend on scheduling.
Corpus enumerate_corpus(std::size_t n, EnumerateOptions const& options = {});

/// Text manifest: counts plus, per classification key, how many entries
/// satisfy it.
std::string corpus_manifest(Corpus const& corpus);

/// Writes one osg v1 file per entry, named by canonical hash (plus labelled
/// hash for labelled corpora), and manifest.txt. Returns the file count.
std::size_t emit_corpus(Corpus const& corpus, std::string const& directory);

// Predicate expressions --------------------------------------------------------

class ExpressionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names usable in search expressions: every classification key plus the
/// congruence-level predicates.
std::vector<std::string_view> const& predicate_names();

/// Evaluates one named predicate; not_applicable counts as false in
/// expressions. Throws ExpressionError for unknown names.
Verdict evaluate_predicate(OrderedSemigroup const& s, std::string_view name);

/// expr   := term ('or' term)*
/// term   := factor ('and' factor)*
/// factor := 'not' factor | '(' expr ')' | name
class PredicateExpression {
 public:
  static PredicateExpression parse(std::string_view text);

  bool evaluate(OrderedSemigroup const& s) const;
  std::string const& source() const noexcept { return source_; }

  struct Node;

 private:
  std::string source_;
  std::shared_ptr<Node const> root_;
};

struct SearchOptions {
  std::size_t limit = 0;  // 0: no limit
  EnumerateOptions enumerate = {};
};

/// Structures of order n satisfying `expr`, in corpus order.
std::vector<OrderedSemigroup> search(std::size_t n, PredicateExpression const& expr,
                                     SearchOptions const& options = {});

}  // namespace osg

#endif  // OSG_ENUMERATE_HPP
