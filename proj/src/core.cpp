#include "osg/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace osg {

Limits Limits::from_environment() {
  Limits limits;
  if (char const* env = std::getenv("OSG_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && value >= 1) {
      limits.max_n = std::min<std::size_t>(value, kHardMaxElements);
      limits.enumerate_n = std::max(limits.enumerate_n, std::min<std::size_t>(value, 5));
    }
  }
  return limits;
}

// ElementSet ------------------------------------------------------------------

ElementSet::ElementSet(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n > kHardMaxElements) {
    throw std::length_error("ElementSet: ambient size exceeds 64");
  }
}

ElementSet ElementSet::singleton(std::size_t n, Element a) {
  return ElementSet(n, std::uint64_t{1} << a);
}

ElementSet ElementSet::full(std::size_t n) {
  return ElementSet(n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::size_t ElementSet::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::optional<Element> ElementSet::first_outside(ElementSet const& other) const noexcept {
  std::uint64_t diff = bits_ & ~other.bits_;
  if (diff == 0) {
    return std::nullopt;
  }
  return static_cast<Element>(std::countr_zero(diff));
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element a) { out.push_back(a); });
  return out;
}

// Diagnostics -----------------------------------------------------------------

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::associativity: return "associativity";
    case DiagnosticKind::reflexivity:   return "reflexivity";
    case DiagnosticKind::antisymmetry:  return "antisymmetry";
    case DiagnosticKind::transitivity:  return "transitivity";
    case DiagnosticKind::compatibility: return "compatibility";
    case DiagnosticKind::parse:         return "parse";
  }
  return "unknown";
}

std::string format_diagnostic(Diagnostic const& d) {
  std::ostringstream out;
  if (d.line != 0) {
    out << "line " << d.line << ": ";
  }
  out << to_string(d.kind) << ": " << d.message;
  if (!d.witness.empty()) {
    out << " [witness:";
    for (auto const& w : d.witness) {
      out << ' ' << w;
    }
    out << ']';
  }
  return out.str();
}

// OrderedSemigroup ------------------------------------------------------------

OrderedSemigroup::OrderedSemigroup(std::vector<std::string> names, Table table,
                                   std::vector<ElementSet> down)
    : n_(names.size()),
      names_(std::move(names)),
      table_(std::move(table)),
      down_(std::move(down)) {}

std::optional<Element> OrderedSemigroup::find(std::string_view name) const {
  for (Element i = 0; i < n_; ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

LeqMatrix OrderedSemigroup::leq_matrix() const {
  LeqMatrix m(n_, std::vector<bool>(n_, false));
  for (Element i = 0; i < n_; ++i) {
    for (Element j = 0; j < n_; ++j) {
      m[i][j] = leq(i, j);
    }
  }
  return m;
}

bool OrderedSemigroup::has_discrete_order() const noexcept {
  for (Element i = 0; i < n_; ++i) {
    if (down_[i].size() != 1) {
      return false;
    }
  }
  return true;
}

// Validation ------------------------------------------------------------------

namespace {

Diagnostic make_diag(DiagnosticKind kind, std::vector<std::string> const& names,
                     std::initializer_list<Element> witness, std::string message) {
  Diagnostic d{kind, {}, std::move(message), 0};
  for (Element w : witness) {
    d.witness.push_back(names[w]);
  }
  return d;
}

Diagnostic parse_error(std::size_t line, std::string message) {
  return Diagnostic{DiagnosticKind::parse, {}, std::move(message), line};
}

}  // namespace

ValidationResult validate(std::vector<std::string> names, Table table,
                          LeqMatrix const& leq, Limits const& limits) {
  ValidationResult result;
  auto& diags = result.diagnostics;
  std::size_t const n = names.size();

  if (n == 0) {
    diags.push_back(parse_error(0, "a semigroup needs at least one element"));
    return result;
  }
  if (n > limits.max_n || n > kHardMaxElements) {
    diags.push_back(parse_error(0, "structure has " + std::to_string(n) +
                                       " elements; the configured maximum is " +
                                       std::to_string(std::min(limits.max_n,
                                                               kHardMaxElements))));
    return result;
  }
  if (table.size() != n * n || leq.size() != n) {
    diags.push_back(parse_error(0, "table or order has the wrong shape"));
    return result;
  }
  for (auto const& row : leq) {
    if (row.size() != n) {
      diags.push_back(parse_error(0, "order matrix row has the wrong length"));
      return result;
    }
  }
  for (Element v : table) {
    if (v >= n) {
      diags.push_back(parse_error(0, "table entry out of range"));
      return result;
    }
  }
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
      diags.push_back(parse_error(0, "duplicate element name '" + *it + "'"));
      return result;
    }
  }

  auto mul = [&](Element a, Element b) { return table[a * n + b]; };

  [&] {
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        for (Element k = 0; k < n; ++k) {
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            diags.push_back(make_diag(DiagnosticKind::associativity, names, {i, j, k},
                                      "(xy)z != x(yz)"));
            return;
          }
        }
      }
    }
  }();

  for (Element i = 0; i < n; ++i) {
    if (!leq[i][i]) {
      diags.push_back(make_diag(DiagnosticKind::reflexivity, names, {i}, "x <= x fails"));
      break;
    }
  }

  [&] {
    for (Element i = 0; i < n; ++i) {
      for (Element j = i + 1; j < n; ++j) {
        if (leq[i][j] && leq[j][i]) {
          diags.push_back(make_diag(DiagnosticKind::antisymmetry, names, {i, j},
                                    "x <= y and y <= x with x != y"));
          return;
        }
      }
    }
  }();

  [&] {
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (!leq[i][j]) continue;
        for (Element k = 0; k < n; ++k) {
          if (leq[j][k] && !leq[i][k]) {
            diags.push_back(make_diag(DiagnosticKind::transitivity, names, {i, j, k},
                                      "x <= y and y <= z but not x <= z"));
            return;
          }
        }
      }
    }
  }();

  [&] {
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (!leq[i][j]) continue;
        for (Element x = 0; x < n; ++x) {
          if (!leq[mul(x, i)][mul(x, j)] || !leq[mul(i, x)][mul(j, x)]) {
            diags.push_back(make_diag(DiagnosticKind::compatibility, names, {i, j, x},
                                      "x <= y must imply zx <= zy and xz <= yz"));
            return;
          }
        }
      }
    }
  }();

  if (!diags.empty()) {
    return result;
  }

  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (leq[i][j]) {
        down[j].insert(i);
      }
    }
  }
  result.value = OrderedSemigroup(std::move(names), std::move(table), std::move(down));
  return result;
}

LeqMatrix order_closure(std::size_t n,
                        std::vector<std::pair<Element, Element>> const& generators) {
  LeqMatrix m(n, std::vector<bool>(n, false));
  for (Element i = 0; i < n; ++i) {
    m[i][i] = true;
  }
  for (auto [a, b] : generators) {
    m[a][b] = true;
  }
  // Warshall
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (Element j = 0; j < n; ++j) {
        if (m[k][j]) {
          m[i][j] = true;
        }
      }
    }
  }
  return m;
}

// osg v1 ----------------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

std::string_view strip(std::string_view s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// A section header's first token ends in ':' ("elements: a b", "table:").
bool is_section_header(std::string_view line) {
  auto end = line.find_first_of(" \t");
  auto first = line.substr(0, end);
  return first.ends_with(':');
}

}  // namespace

ValidationResult parse(std::string_view text, Limits const& limits) {
  ValidationResult result;
  auto fail = [&](std::size_t line, std::string message) {
    result.diagnostics.push_back(parse_error(line, std::move(message)));
    return result;
  };

  struct Line {
    std::size_t number;
    std::string_view text;
  };
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      raw = strip(raw);
      if (!raw.empty()) {
        lines.push_back({number, raw});
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  if (lines.empty() || lines.front().text != "osg v1") {
    return fail(lines.empty() ? 1 : lines.front().number, "expected header 'osg v1'");
  }

  std::vector<std::string> names;
  std::unordered_map<std::string, Element> index;
  Table table;
  bool seen_elements = false, seen_table = false, seen_order = false;
  std::vector<std::pair<Element, Element>> pairs;

  auto lookup = [&](std::string const& name) -> std::optional<Element> {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  std::size_t i = 1;
  while (i < lines.size()) {
    auto const& line = lines[i];
    if (line.text.starts_with("elements:")) {
      if (seen_elements) return fail(line.number, "duplicate 'elements:' section");
      seen_elements = true;
      names = tokenize(line.text.substr(9));
      if (names.empty()) return fail(line.number, "'elements:' lists no elements");
      for (Element k = 0; k < names.size(); ++k) {
        if (names[k] == "<=") return fail(line.number, "'<=' is not a valid element name");
        if (!index.emplace(names[k], k).second) {
          return fail(line.number, "duplicate element name '" + names[k] + "'");
        }
      }
      ++i;
    } else if (line.text == "table:") {
      if (!seen_elements) return fail(line.number, "'table:' before 'elements:'");
      if (seen_table) return fail(line.number, "duplicate 'table:' section");
      seen_table = true;
      std::size_t const n = names.size();
      table.assign(n * n, 0);
      for (std::size_t r = 0; r < n; ++r) {
        ++i;
        if (i >= lines.size()) {
          return fail(line.number, "table has " + std::to_string(r) + " rows, expected " +
                                       std::to_string(n));
        }
        auto row = tokenize(lines[i].text);
        if (row.size() != n) {
          return fail(lines[i].number, "ragged table row: " + std::to_string(row.size()) +
                                           " entries, expected " + std::to_string(n));
        }
        for (std::size_t c = 0; c < n; ++c) {
          auto v = lookup(row[c]);
          if (!v) return fail(lines[i].number, "unknown element name '" + row[c] + "'");
          table[r * n + c] = *v;
        }
      }
      ++i;
    } else if (line.text == "order:") {
      if (!seen_elements) return fail(line.number, "'order:' before 'elements:'");
      if (seen_order) return fail(line.number, "duplicate 'order:' section");
      seen_order = true;
      ++i;
      while (i < lines.size() && !is_section_header(lines[i].text)) {
        auto tok = tokenize(lines[i].text);
        if (tok.size() != 3 || tok[1] != "<=") {
          return fail(lines[i].number, "expected '<name> <= <name>'");
        }
        auto a = lookup(tok[0]);
        auto b = lookup(tok[2]);
        if (!a) return fail(lines[i].number, "unknown element name '" + tok[0] + "'");
        if (!b) return fail(lines[i].number, "unknown element name '" + tok[2] + "'");
        pairs.emplace_back(*a, *b);
        ++i;
      }
    } else {
      return fail(line.number, "unknown section or stray line '" + std::string(line.text) + "'");
    }
  }

  if (!seen_elements) return fail(0, "missing 'elements:' section");
  if (!seen_table) return fail(0, "missing 'table:' section");

  auto leq = order_closure(names.size(), pairs);
  return validate(std::move(names), std::move(table), leq, limits);
}

std::string serialize(OrderedSemigroup const& s) {
  std::ostringstream out;
  std::size_t const n = s.size();
  out << "osg v1\nelements:";
  for (auto const& name : s.names()) out << ' ' << name;
  out << "\ntable:\n";
  for (Element r = 0; r < n; ++r) {
    for (Element c = 0; c < n; ++c) {
      out << (c == 0 ? "" : " ") << s.name(s.product(r, c));
    }
    out << '\n';
  }
  out << "order:\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !s.leq(a, b)) continue;
      bool covering = true;
      for (Element c = 0; c < n && covering; ++c) {
        if (c != a && c != b && s.leq(a, c) && s.leq(c, b)) covering = false;
      }
      if (covering) out << s.name(a) << " <= " << s.name(b) << '\n';
    }
  }
  return out.str();
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                           : "x" + std::to_string(i));
  }
  return names;
}

// Set algebra -----------------------------------------------------------------

ElementSet downward_closure(OrderedSemigroup const& s, ElementSet const& h) {
  ElementSet out = s.empty_set();
  h.for_each([&](Element x) { out |= s.below(x); });
  return out;
}

ElementSet set_product(OrderedSemigroup const& s, ElementSet const& a,
                       ElementSet const& b) {
  ElementSet out = s.empty_set();
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(s.product(x, y)); }); });
  return out;
}

ElementSet bracket(OrderedSemigroup const& s, std::initializer_list<ElementSet> factors) {
  if (factors.size() == 0) {
    throw std::invalid_argument("bracket: at least one factor required");
  }
  auto it = factors.begin();
  ElementSet acc = *it;
  for (++it; it != factors.end(); ++it) {
    acc = set_product(s, acc, *it);
  }
  return downward_closure(s, acc);
}

OrderedSemigroup dual(OrderedSemigroup const& s) {
  std::size_t const n = s.size();
  Table t(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      t[i * n + j] = s.product(j, i);
    }
  }
  Limits limits;
  limits.max_n = kHardMaxElements;
  return *validate(s.names(), std::move(t), s.leq_matrix(), limits).value;
}

std::optional<OrderedSemigroup> restrict_to(OrderedSemigroup const& s,
                                            ElementSet const& subset) {
  if (subset.empty()) return std::nullopt;
  auto members = subset.members();
  std::vector<Element> position(s.size(), 0);
  for (Element k = 0; k < members.size(); ++k) position[members[k]] = k;

  std::size_t const m = members.size();
  Table t(m * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      Element p = s.product(members[i], members[j]);
      if (!subset.contains(p)) return std::nullopt;
      t[i * m + j] = position[p];
    }
  }
  LeqMatrix leq(m, std::vector<bool>(m, false));
  std::vector<std::string> names;
  for (Element i = 0; i < m; ++i) {
    names.push_back(s.name(members[i]));
    for (Element j = 0; j < m; ++j) leq[i][j] = s.leq(members[i], members[j]);
  }
  Limits limits;
  limits.max_n = kHardMaxElements;
  return validate(std::move(names), std::move(t), leq, limits).value;
}

OrderedSemigroup relabel(OrderedSemigroup const& s, std::vector<Element> const& perm) {
  std::size_t const n = s.size();
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
  Table t(n * n);
  LeqMatrix leq(n, std::vector<bool>(n, false));
  std::vector<std::string> names(n);
  for (Element i = 0; i < n; ++i) {
    names[perm[i]] = s.name(i);
    for (Element j = 0; j < n; ++j) {
      t[perm[i] * n + perm[j]] = perm[s.product(i, j)];
      leq[perm[i]][perm[j]] = s.leq(i, j);
    }
  }
  Limits limits;
  limits.max_n = kHardMaxElements;
  auto r = validate(std::move(names), std::move(t), leq, limits);
  if (!r.ok()) throw std::invalid_argument("relabel: not a permutation");
  return *r.value;
}

std::optional<Element> zero_element(OrderedSemigroup const& s) {
  for (Element z = 0; z < s.size(); ++z) {
    bool zero = true;
    for (Element x = 0; x < s.size() && zero; ++x) {
      zero = s.product(z, x) == z && s.product(x, z) == z;
    }
    if (zero) return z;
  }
  return std::nullopt;
}

}  // namespace osg
