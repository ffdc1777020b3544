#include "osg/constructions.hpp"

#include <stdexcept>

#include "osg/classify.hpp"

namespace osg {

OrderedSemigroup from_plain(std::vector<std::string> names, Table table,
                            Limits const& limits) {
  std::size_t const n = names.size();
  auto r = validate(std::move(names), std::move(table), order_closure(n, {}), limits);
  if (!r.ok()) {
    throw std::invalid_argument("from_plain: " + format_diagnostic(r.diagnostics.front()));
  }
  return std::move(*r.value);
}

OrderedSemigroup power_semigroup(OrderedSemigroup const& f, Limits const& limits) {
  if (!f.has_discrete_order()) {
    throw std::invalid_argument("power_semigroup: F must be a plain semigroup (discrete order)");
  }
  std::size_t const m = f.size();
  if (m >= kHardMaxElements || (std::size_t{1} << m) - 1 > limits.max_n) {
    throw std::length_error("power_semigroup: 2^" + std::to_string(m) +
                            " - 1 elements exceed the configured maximum");
  }
  std::size_t const n = (std::size_t{1} << m) - 1;
  // Element k stands for the subset with bitmask k + 1.
  auto subset_of = [m](std::size_t k) { return ElementSet(m, k + 1); };

  std::vector<std::string> names(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::string name = "{";
    bool first = true;
    subset_of(k).for_each([&](Element x) {
      name += (first ? "" : ",") + f.name(x);
      first = false;
    });
    names[k] = name + "}";
  }

  Table table(n * n);
  LeqMatrix leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t prod = 0;
      subset_of(i).for_each([&](Element a) {
        subset_of(j).for_each([&](Element b) { prod |= std::uint64_t{1} << f.product(a, b); });
      });
      table[i * n + j] = static_cast<Element>(prod - 1);
      leq[i][j] = ((i + 1) & ~(j + 1)) == 0;
    }
  }
  auto r = validate(std::move(names), std::move(table), leq, limits);
  if (!r.ok()) {
    throw std::logic_error("power_semigroup: " + format_diagnostic(r.diagnostics.front()));
  }
  return std::move(*r.value);
}

Verdict is_right_inverse_plain(OrderedSemigroup const& f) {
  if (!f.has_discrete_order()) {
    throw std::invalid_argument("is_right_inverse_plain: F must carry the discrete order");
  }
  return is_right_inverse(f);
}

}  // namespace osg
