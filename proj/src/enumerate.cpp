#include "osg/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "osg/classify.hpp"
#include "osg/congruence.hpp"
#include "osg/ideals_green.hpp"

namespace osg {

void check_enumeration_bound(std::size_t n, EnumerateOptions const& options) {
  std::size_t const bound =
      options.allow_large ? std::max(options.limits.enumerate_n, options.limits.enumerate_large_n)
                          : options.limits.enumerate_n;
  if (n < 1 || n > bound) {
    throw std::length_error("enumeration supports 1 <= n <= " + std::to_string(bound) +
                            (options.allow_large ? "" : " (use the large override for n = 5)"));
  }
}

// Tables ----------------------------------------------------------------------

namespace {

class TableSearch {
 public:
  TableSearch(std::size_t n, std::function<void(Table const&)> const& visit)
      : n_(n), cells_(n * n, kUnset), visit_(visit) {}

  void run(std::vector<Element> const* first_row) {
    std::size_t start = 0;
    if (first_row != nullptr) {
      for (std::size_t c = 0; c < n_; ++c) cells_[c] = static_cast<int>((*first_row)[c]);
      start = n_;
      for (std::size_t c = 0; c < n_; ++c) {
        if (!consistent(c)) return;
      }
    }
    fill(start);
  }

 private:
  static constexpr int kUnset = -1;

  int at(int x, int y) const { return cells_[static_cast<std::size_t>(x) * n_ + y]; }

  // Checks every associativity triple in which the cell `idx` takes part
  // and all four products are known.
  bool consistent(std::size_t idx) const {
    int const i = static_cast<int>(idx / n_);
    int const j = static_cast<int>(idx % n_);
    int const n = static_cast<int>(n_);
    auto check = [&](int x, int y, int z) {
      int const xy = at(x, y);
      int const yz = at(y, z);
      if (xy == kUnset || yz == kUnset) return true;
      int const l = at(xy, z);
      int const r = at(x, yz);
      return l == kUnset || r == kUnset || l == r;
    };
    for (int t = 0; t < n; ++t) {
      for (int u = 0; u < n; ++u) {
        // (i,j) as x*y, as y*z, as the outer left product, as the outer right product.
        if (!check(i, j, t) || !check(t, i, j)) return false;
        if (at(t, u) == i && !check(t, u, j)) return false;
        if (at(t, u) == j && !check(i, t, u)) return false;
      }
    }
    return true;
  }

  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      Table t(cells_.begin(), cells_.end());
      visit_(t);
      return;
    }
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      cells_[idx] = v;
      if (consistent(idx)) fill(idx + 1);
    }
    cells_[idx] = kUnset;
  }

  std::size_t n_;
  std::vector<int> cells_;
  std::function<void(Table const&)> const& visit_;
};

std::vector<std::vector<Element>> all_rows(std::size_t n) {
  std::vector<std::vector<Element>> rows;
  std::vector<Element> row(n, 0);
  while (true) {
    rows.push_back(row);
    std::size_t k = n;
    while (k > 0 && row[k - 1] == n - 1) row[--k] = 0;
    if (k == 0) break;
    ++row[k - 1];
  }
  return rows;
}

}  // namespace

void for_each_table(std::size_t n, std::function<void(Table const&)> const& visit,
                    std::vector<Element> const* first_row) {
  if (n == 0 || n > kHardMaxElements) throw std::length_error("for_each_table: bad n");
  if (first_row != nullptr && first_row->size() != n) {
    throw std::invalid_argument("for_each_table: first row has the wrong length");
  }
  TableSearch(n, visit).run(first_row);
}

std::vector<Table> enumerate_tables(std::size_t n, EnumerateOptions const& options) {
  check_enumeration_bound(n, options);
  std::vector<Table> out;
  for_each_table(n, [&](Table const& t) { out.push_back(t); });
  return out;
}

// Orders ----------------------------------------------------------------------

std::vector<LeqMatrix> partial_orders(std::size_t n) {
  if (n > 6) throw std::length_error("partial_orders: n too large");
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<LeqMatrix> out;
  std::vector<std::uint64_t> up(n);  // up[i]: {j : i <= j}
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    for (Element i = 0; i < n; ++i) up[i] = std::uint64_t{1} << i;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) up[pairs[k].first] |= std::uint64_t{1} << pairs[k].second;
    }
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i) {
      for (Element j = 0; j < n && ok; ++j) {
        if (i == j || !((up[i] >> j) & 1U)) continue;
        if ((up[j] >> i) & 1U) ok = false;                // antisymmetry
        else if ((up[j] & ~up[i]) != 0) ok = false;       // transitivity
      }
    }
    if (!ok) continue;
    LeqMatrix m(n, std::vector<bool>(n, false));
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) m[i][j] = (up[i] >> j) & 1U;
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool compatible(Table const& table, std::size_t n, LeqMatrix const& leq) {
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      for (Element x = 0; x < n; ++x) {
        if (!leq[table[x * n + i]][table[x * n + j]]) return false;
        if (!leq[table[i * n + x]][table[j * n + x]]) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<LeqMatrix> compatible_orders(Table const& table, std::size_t n) {
  std::vector<LeqMatrix> out;
  for (auto& order : partial_orders(n)) {
    if (compatible(table, n, order)) out.push_back(std::move(order));
  }
  return out;
}

// Canonical forms -------------------------------------------------------------

namespace {

// Encoding of s relabelled so that new label p is old element from[p].
std::string encode(OrderedSemigroup const& s, std::vector<Element> const& from,
                   std::vector<Element> const& to) {
  std::size_t const n = s.size();
  std::string out;
  out.reserve(1 + 2 * n * n);
  out.push_back(static_cast<char>(n));
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      out.push_back(static_cast<char>(to[s.product(from[p], from[q])]));
    }
  }
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) out.push_back(s.leq(from[p], from[q]) ? 1 : 0);
  }
  return out;
}

}  // namespace

std::string CanonicalForm::hex_digest() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

CanonicalForm canonicalize(OrderedSemigroup const& s) {
  std::size_t const n = s.size();
  if (n > 8) throw std::length_error("canonicalize: more than 8 elements");
  std::vector<Element> from(n);
  std::iota(from.begin(), from.end(), Element{0});
  std::vector<Element> to(n);
  std::string best;
  do {
    for (Element p = 0; p < n; ++p) to[from[p]] = p;
    std::string enc = encode(s, from, to);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(from.begin(), from.end()));
  return CanonicalForm{std::move(best)};
}

std::string labeled_encoding(OrderedSemigroup const& s) {
  std::vector<Element> id(s.size());
  std::iota(id.begin(), id.end(), Element{0});
  return encode(s, id, id);
}

// Corpus ----------------------------------------------------------------------

namespace {

struct WorkerResult {
  std::size_t tables = 0;
  std::vector<CorpusEntry> entries;
};

WorkerResult enumerate_rows(std::size_t n, std::vector<std::vector<Element>> const& rows,
                            std::vector<LeqMatrix> const& orders,
                            std::size_t worker, std::size_t workers) {
  WorkerResult out;
  auto const names = default_names(n);
  Limits limits;
  limits.max_n = kHardMaxElements;
  for (std::size_t r = worker; r < rows.size(); r += workers) {
    for_each_table(
        n,
        [&](Table const& table) {
          ++out.tables;
          for (auto const& order : orders) {
            if (!compatible(table, n, order)) continue;
            auto v = validate(names, table, order, limits);
            auto& s = *v.value;
            out.entries.push_back({canonicalize(s), labeled_encoding(s), std::move(s)});
          }
        },
        &rows[r]);
  }
  return out;
}

}  // namespace

Corpus enumerate_corpus(std::size_t n, EnumerateOptions const& options) {
  check_enumeration_bound(n, options);
  auto const rows = all_rows(n);
  auto const orders = partial_orders(n);
  std::size_t const workers = std::max<std::size_t>(1, std::min(options.threads, rows.size()));

  std::vector<WorkerResult> results(workers);
  if (workers == 1) {
    results[0] = enumerate_rows(n, rows, orders, 0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { results[w] = enumerate_rows(n, rows, orders, w, workers); });
    }
    for (auto& t : pool) t.join();
  }

  Corpus corpus;
  corpus.n = n;
  corpus.up_to_iso = options.up_to_iso;
  for (auto& r : results) {
    corpus.table_count += r.tables;
    corpus.ordered_count += r.entries.size();
    std::move(r.entries.begin(), r.entries.end(), std::back_inserter(corpus.entries));
  }
  std::sort(corpus.entries.begin(), corpus.entries.end(),
            [](CorpusEntry const& a, CorpusEntry const& b) {
              return std::tie(a.canonical, a.labeled) < std::tie(b.canonical, b.labeled);
            });
  if (options.up_to_iso) {
    auto last = std::unique(corpus.entries.begin(), corpus.entries.end(),
                            [](CorpusEntry const& a, CorpusEntry const& b) {
                              return a.canonical == b.canonical;
                            });
    corpus.entries.erase(last, corpus.entries.end());
  }
  return corpus;
}

std::string corpus_manifest(Corpus const& corpus) {
  std::ostringstream out;
  out << "osg corpus manifest v1\n";
  out << "n: " << corpus.n << '\n';
  out << "up_to_iso: " << (corpus.up_to_iso ? "true" : "false") << '\n';
  out << "tables: " << corpus.table_count << '\n';
  out << "ordered: " << corpus.ordered_count << '\n';
  out << "entries: " << corpus.entries.size() << '\n';

  // Digest of the ordered entry list, so two manifests agree only if the
  // corpora agree entry by entry.
  std::string listing;
  for (auto const& e : corpus.entries) listing += e.canonical.bytes + e.labeled;
  out << "digest: " << CanonicalForm{listing}.hex_digest() << '\n';

  auto const& keys = ClassificationReport::keys();
  std::vector<std::size_t> counts(keys.size(), 0);
  for (auto const& e : corpus.entries) {
    auto const report = classify(e.structure);
    for (std::size_t k = 0; k < keys.size(); ++k) counts[k] += report.at(keys[k]).holds();
  }
  for (std::size_t k = 0; k < keys.size(); ++k) {
    out << "class " << keys[k] << ": " << counts[k] << '\n';
  }
  return out.str();
}

std::size_t emit_corpus(Corpus const& corpus, std::string const& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::size_t written = 0;
  for (auto const& e : corpus.entries) {
    std::string name = e.canonical.hex_digest();
    if (!corpus.up_to_iso) name += "-" + CanonicalForm{e.labeled}.hex_digest();
    std::ofstream file(fs::path(directory) / (name + ".osg"));
    if (!file) throw std::runtime_error("cannot write into " + directory);
    file << serialize(e.structure);
    ++written;
  }
  std::ofstream manifest(fs::path(directory) / "manifest.txt");
  if (!manifest) throw std::runtime_error("cannot write manifest into " + directory);
  manifest << corpus_manifest(corpus);
  return written;
}

// Predicates ------------------------------------------------------------------

std::vector<std::string_view> const& predicate_names() {
  static std::vector<std::string_view> const names = [] {
    std::vector<std::string_view> v = ClassificationReport::keys();
    for (std::string_view extra :
         {"r_congruence", "l_equals_h", "complete_semilattice_right_group_like",
          "complete_semilattice_left_group_like", "complete_semilattice_group_like",
          "union_of_group_like", "discrete_order"}) {
      v.push_back(extra);
    }
    return v;
  }();
  return names;
}

Verdict evaluate_predicate(OrderedSemigroup const& s, std::string_view name) {
  if (name == "regular") return is_regular(s);
  if (name == "completely_regular") return regularity_variant(s, RegularityVariant::completely_regular);
  if (name == "left_regular") return regularity_variant(s, RegularityVariant::left_regular);
  if (name == "right_regular") return regularity_variant(s, RegularityVariant::right_regular);
  if (name == "right_inverse") return is_right_inverse(s);
  if (name == "left_inverse_dual") return is_left_inverse(s);
  if (name == "right_clifford") return is_clifford(s, Side::right);
  if (name == "left_clifford") return is_clifford(s, Side::left);
  if (name == "group_like") return is_group_like(s, GroupLikeMode::both);
  if (name == "left_group_like") return is_group_like(s, GroupLikeMode::left);
  if (name == "right_group_like") return is_group_like(s, GroupLikeMode::right);
  if (name == "simple") return is_simple(s, Side::two_sided);
  if (name == "left_simple") return is_simple(s, Side::left);
  if (name == "right_simple") return is_simple(s, Side::right);
  if (name == "has_zero") {
    auto z = zero_element(s);
    return z ? Verdict::yes("zero", {*z}) : Verdict::no("no_zero", {});
  }
  if (name == "r_congruence") {
    return is_congruence(s, green_relation(s, GreenKind::R), Side::two_sided);
  }
  if (name == "l_equals_h") {
    return Verdict::from_bool(green_relation(s, GreenKind::L) == green_relation(s, GreenKind::H),
                              "l_equals_h");
  }
  if (name == "complete_semilattice_right_group_like") {
    return is_complete_semilattice_of(s, GroupLikeMode::right);
  }
  if (name == "complete_semilattice_left_group_like") {
    return is_complete_semilattice_of(s, GroupLikeMode::left);
  }
  if (name == "complete_semilattice_group_like") {
    return is_complete_semilattice_of(s, GroupLikeMode::both);
  }
  if (name == "union_of_group_like") return is_union_of_group_like(s);
  if (name == "discrete_order") return Verdict::from_bool(s.has_discrete_order(), "discrete_order");
  throw ExpressionError("unknown predicate '" + std::string(name) + "'");
}

struct PredicateExpression::Node {
  enum class Kind { name, negation, conjunction, disjunction } kind;
  std::string name;
  std::shared_ptr<Node const> lhs;
  std::shared_ptr<Node const> rhs;
};

namespace {

using NodePtr = std::shared_ptr<PredicateExpression::Node const>;
using Kind = PredicateExpression::Node::Kind;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      char const c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        tokens_.emplace_back(1, c);
        ++i;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
          ++j;
        }
        tokens_.emplace_back(text.substr(i, j - i));
        i = j;
      } else {
        throw ExpressionError(std::string("unexpected character '") + c + "' in expression");
      }
    }
  }

  NodePtr parse() {
    auto node = expr();
    if (pos_ != tokens_.size()) throw ExpressionError("unexpected '" + tokens_[pos_] + "'");
    return node;
  }

 private:
  bool accept(std::string_view tok) {
    if (pos_ < tokens_.size() && tokens_[pos_] == tok) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    auto node = term();
    while (accept("or")) {
      node = std::make_shared<PredicateExpression::Node const>(
          PredicateExpression::Node{Kind::disjunction, {}, node, term()});
    }
    return node;
  }

  NodePtr term() {
    auto node = factor();
    while (accept("and")) {
      node = std::make_shared<PredicateExpression::Node const>(
          PredicateExpression::Node{Kind::conjunction, {}, node, factor()});
    }
    return node;
  }

  NodePtr factor() {
    if (accept("not")) {
      return std::make_shared<PredicateExpression::Node const>(
          PredicateExpression::Node{Kind::negation, {}, factor(), nullptr});
    }
    if (accept("(")) {
      auto node = expr();
      if (!accept(")")) throw ExpressionError("missing ')'");
      return node;
    }
    if (pos_ >= tokens_.size()) throw ExpressionError("unexpected end of expression");
    std::string const& tok = tokens_[pos_];
    auto const& known = predicate_names();
    if (std::find(known.begin(), known.end(), tok) == known.end()) {
      throw ExpressionError("unknown predicate '" + tok + "'");
    }
    ++pos_;
    return std::make_shared<PredicateExpression::Node const>(
        PredicateExpression::Node{Kind::name, tok, nullptr, nullptr});
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

bool eval(PredicateExpression::Node const& node, OrderedSemigroup const& s,
          std::map<std::string, bool>& memo) {
  switch (node.kind) {
    case Kind::name: {
      auto it = memo.find(node.name);
      if (it == memo.end()) {
        it = memo.emplace(node.name, evaluate_predicate(s, node.name).holds()).first;
      }
      return it->second;
    }
    case Kind::negation:    return !eval(*node.lhs, s, memo);
    case Kind::conjunction: return eval(*node.lhs, s, memo) && eval(*node.rhs, s, memo);
    case Kind::disjunction: return eval(*node.lhs, s, memo) || eval(*node.rhs, s, memo);
  }
  return false;
}

}  // namespace

PredicateExpression PredicateExpression::parse(std::string_view text) {
  PredicateExpression e;
  e.source_ = std::string(text);
  e.root_ = ExpressionParser(text).parse();
  return e;
}

bool PredicateExpression::evaluate(OrderedSemigroup const& s) const {
  std::map<std::string, bool> memo;
  return eval(*root_, s, memo);
}

std::vector<OrderedSemigroup> search(std::size_t n, PredicateExpression const& expr,
                                     SearchOptions const& options) {
  auto const corpus = enumerate_corpus(n, options.enumerate);
  std::vector<OrderedSemigroup> out;
  for (auto const& e : corpus.entries) {
    if (options.limit != 0 && out.size() >= options.limit) break;
    if (expr.evaluate(e.structure)) out.push_back(e.structure);
  }
  return out;
}

}  // namespace osg
