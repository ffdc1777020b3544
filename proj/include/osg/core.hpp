// Finite ordered semigroups: representation, validation, the osg v1 text
// format, and the set algebra every other module is written against.

#ifndef OSG_CORE_HPP
#define OSG_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace osg {

/// Dense index of an element of the carrier, 0..n-1.
using Element = std::uint32_t;

/// Row-major n*n Cayley table; entry [i*n+j] is the index of i*j.
using Table = std::vector<Element>;

/// leq[i][j] means element i <= element j.
using LeqMatrix = std::vector<std::vector<bool>>;

/// Hard ceiling imposed by the bitset representation of ElementSet.
inline constexpr std::size_t kHardMaxElements = 64;

/// Size bounds. Every algorithm is exact; these only decide what is refused.
struct Limits {
  std::size_t max_n         = 12;  // largest accepted structure
  std::size_t oracle_n      = 8;   // 2^n subset scans in minimal_ideal_oracle
  std::size_t subsemigroup_n = 10; // 2^n subsemigroup scans
  std::size_t enumerate_n   = 4;   // exhaustive enumeration without override
  std::size_t enumerate_large_n = 5;

  /// Defaults, with OSG_MAX_N from the environment overriding max_n.
  static Limits from_environment();
};

/// Subset of the carrier of a fixed ambient structure.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n, std::uint64_t bits = 0);

  static ElementSet singleton(std::size_t n, Element a);
  static ElementSet full(std::size_t n);

  std::size_t ambient_size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Element a) const noexcept { return (bits_ >> a) & 1U; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept;

  void insert(Element a) noexcept { bits_ |= std::uint64_t{1} << a; }
  void erase(Element a) noexcept { bits_ &= ~(std::uint64_t{1} << a); }

  bool is_subset_of(ElementSet const& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Least member not in `other`, if any.
  std::optional<Element> first_outside(ElementSet const& other) const noexcept;

  std::vector<Element> members() const;

  ElementSet operator&(ElementSet const& o) const { return ElementSet(n_, bits_ & o.bits_); }
  ElementSet operator|(ElementSet const& o) const { return ElementSet(n_, bits_ | o.bits_); }
  ElementSet& operator|=(ElementSet const& o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet const& o) { bits_ &= o.bits_; return *this; }

  friend bool operator==(ElementSet const&, ElementSet const&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<Element>(__builtin_ctzll(b)));
    }
  }

 private:
  std::size_t   n_    = 0;
  std::uint64_t bits_ = 0;
};

enum class DiagnosticKind {
  associativity,
  reflexivity,
  antisymmetry,
  transitivity,
  compatibility,
  parse
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::vector<std::string> witness;  // element names
  std::string message;
  std::size_t line = 0;  // 1-based source line for parse errors, 0 if none
};

std::string format_diagnostic(Diagnostic const& d);

struct ValidationResult;

/// Immutable finite ordered semigroup: a Cayley table plus a compatible
/// partial order. Instances only come out of validate(), so every invariant
/// holds for every live object.
class OrderedSemigroup {
 public:
  std::size_t size() const noexcept { return n_; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string const& name(Element a) const { return names_[a]; }
  std::optional<Element> find(std::string_view name) const;

  Element product(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Table const& table() const noexcept { return table_; }

  bool leq(Element a, Element b) const noexcept { return down_[b].contains(a); }
  /// {t : t <= a}
  ElementSet const& below(Element a) const noexcept { return down_[a]; }
  LeqMatrix leq_matrix() const;
  bool has_discrete_order() const noexcept;

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet carrier() const { return ElementSet::full(n_); }
  ElementSet singleton(Element a) const { return ElementSet::singleton(n_, a); }

  friend bool operator==(OrderedSemigroup const& a, OrderedSemigroup const& b) {
    return a.n_ == b.n_ && a.names_ == b.names_ && a.table_ == b.table_ &&
           a.down_ == b.down_;
  }

 private:
  OrderedSemigroup(std::vector<std::string> names, Table table,
                   std::vector<ElementSet> down);
  friend ValidationResult validate(std::vector<std::string>, Table, LeqMatrix const&,
                                   Limits const&);

  std::size_t n_;
  std::vector<std::string> names_;
  Table table_;
  std::vector<ElementSet> down_;
};

struct ValidationResult {
  std::optional<OrderedSemigroup> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return value.has_value(); }
};

/// Checks every ordered-semigroup axiom. On failure, returns one diagnostic
/// per violated axiom kind, carrying the lexicographically first witness.
ValidationResult validate(std::vector<std::string> names, Table table,
                          LeqMatrix const& leq, Limits const& limits = {});

/// Reflexive-transitive closure of a set of generating pairs.
LeqMatrix order_closure(std::size_t n,
                        std::vector<std::pair<Element, Element>> const& generators);

/// Parses an osg v1 document. Order pairs are closed reflexively and
/// transitively before validation, so antisymmetry is the only order axiom
/// the file can violate.
ValidationResult parse(std::string_view text, Limits const& limits = {});

/// osg v1 rendering; order lines are the covering pairs of the order.
std::string serialize(OrderedSemigroup const& s);

/// Default element names a, b, c, ... (then x26, x27, ...).
std::vector<std::string> default_names(std::size_t n);

/// (H] = {t : t <= h for some h in H}
ElementSet downward_closure(OrderedSemigroup const& s, ElementSet const& h);

/// AB = {ab : a in A, b in B}; no closure.
ElementSet set_product(OrderedSemigroup const& s, ElementSet const& a,
                       ElementSet const& b);

/// (A1 A2 ... Ak]
ElementSet bracket(OrderedSemigroup const& s, std::initializer_list<ElementSet> factors);

/// Same carrier and order, multiplication reversed.
OrderedSemigroup dual(OrderedSemigroup const& s);

/// Induced ordered subsemigroup on `subset`, or nullopt when the subset is
/// empty or not closed under multiplication. Element i of the result is the
/// i-th member of `subset` in index order.
std::optional<OrderedSemigroup> restrict_to(OrderedSemigroup const& s,
                                            ElementSet const& subset);

/// Relabels element i to perm[i].
OrderedSemigroup relabel(OrderedSemigroup const& s, std::vector<Element> const& perm);

/// An element z with zx = xz = z for every x.
std::optional<Element> zero_element(OrderedSemigroup const& s);

}  // namespace osg

#endif  // OSG_CORE_HPP
