#include "osg/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace osg {

std::string_view to_string(RightInverseCondition c) {
  static constexpr std::string_view names[] = {"RI1", "RI2", "RI3", "RI4", "RI5", "RI6"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(RightCliffordCondition c) {
  static constexpr std::string_view names[] = {"RC2", "RC3", "RC4", "RC5", "LC1", "LC2"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(GroupLikeMode m) {
  switch (m) {
    case GroupLikeMode::left:  return "left";
    case GroupLikeMode::right: return "right";
    case GroupLikeMode::both:  return "both";
  }
  return "unknown";
}

std::string_view to_string(PairQuantifier q) {
  return q == PairQuantifier::forall ? "forall" : "exists";
}

namespace {

Verdict const kNotRegular = Verdict::not_applicable("not_regular");

// Shared body of the left/right inverse definitions. `generate` is the side
// of the principal ideals the idempotents must generate; `unique` the Green
// relation under which the generators must agree.
Verdict inverse_definition(OrderedSemigroup const& s, IdempotentReading reading,
                           Side generate, GreenKind unique) {
  if (auto reg = is_regular(s); !reg.holds()) {
    return Verdict::no("not_regular", reg.witness);
  }
  std::size_t const n = s.size();
  std::vector<ElementSet> ideals(n);
  for (Element a = 0; a < n; ++a) ideals[a] = principal_ideal(s, a, generate);
  auto const uniq = green_relation(s, unique);
  auto const idem = ordered_idempotents(s, reading);

  for (Element a = 0; a < n; ++a) {
    std::vector<Element> generators;
    idem.for_each([&](Element e) {
      if (ideals[e] == ideals[a]) generators.push_back(e);
    });
    if (generators.empty()) {
      return Verdict::no("no_idempotent_generator", {a});
    }
  }
  // Generators of the same ideal are pairwise related iff every two
  // idempotents with equal ideals are related; scanning pairs (e, f) directly
  // yields the lexicographically least witness.
  for (Element e = 0; e < n; ++e) {
    if (!idem.contains(e)) continue;
    for (Element f = e + 1; f < n; ++f) {
      if (idem.contains(f) && ideals[e] == ideals[f] && !uniq.related(e, f)) {
        return Verdict::no(unique == GreenKind::R ? "generators_not_r_related"
                                                  : "generators_not_l_related",
                           {e, f});
      }
    }
  }
  return Verdict::yes();
}

template <typename Pred>
Verdict for_all_idempotent_pairs(ElementSet const& idem, std::string clause, Pred&& ok) {
  std::optional<Verdict> failure;
  idem.for_each([&](Element e) {
    if (failure) return;
    idem.for_each([&](Element f) {
      if (!failure && !ok(e, f)) failure = Verdict::no(clause, {e, f});
    });
  });
  return failure ? *failure : Verdict::yes();
}

}  // namespace

Verdict is_right_inverse(OrderedSemigroup const& s, IdempotentReading reading) {
  return inverse_definition(s, reading, Side::left, GreenKind::R);
}

Verdict is_left_inverse(OrderedSemigroup const& s, IdempotentReading reading) {
  return inverse_definition(s, reading, Side::right, GreenKind::L);
}

Verdict right_inverse_condition(OrderedSemigroup const& s, RightInverseCondition id,
                                IdempotentReading reading) {
  if (!is_regular(s).holds()) return kNotRegular;
  std::size_t const n = s.size();
  ElementSet const all = s.carrier();
  ElementSet const idem = ordered_idempotents(s, reading);
  auto one = [&](Element x) { return s.singleton(x); };

  switch (id) {
    case RightInverseCondition::RI1:
      return is_right_inverse(s, reading);

    case RightInverseCondition::RI2: {
      auto const r = green_relation(s, GreenKind::R);
      for (Element a = 0; a < n; ++a) {
        auto const v = inverses(s, a).members();
        for (Element p : v) {
          for (Element q : v) {
            if (!r.related(p, q)) return Verdict::no("RI2", {a, p, q});
          }
        }
      }
      return Verdict::yes();
    }

    case RightInverseCondition::RI3:
      return for_all_idempotent_pairs(idem, "RI3", [&](Element e, Element f) {
        return bracket(s, {one(f), all, one(e), all, one(f)}).contains(s.product(e, f));
      });

    case RightInverseCondition::RI4:
      return for_all_idempotent_pairs(idem, "RI4", [&](Element e, Element f) {
        auto const lhs = bracket(s, {one(e), all}) & bracket(s, {one(f), all});
        return lhs == bracket(s, {one(s.product(e, f)), all});
      });

    case RightInverseCondition::RI5: {
      std::optional<Verdict> failure;
      idem.for_each([&](Element e) {
        if (failure) return;
        auto const right_of_e = bracket(s, {one(e), all});
        bracket(s, {all, one(e)}).for_each([&](Element x) {
          if (failure) return;
          if (auto bad = inverses(s, x).first_outside(right_of_e)) {
            failure = Verdict::no("RI5", {e, x, *bad});
          }
        });
      });
      return failure ? *failure : Verdict::yes();
    }

    case RightInverseCondition::RI6: {
      auto const l = green_relation(s, GreenKind::L);
      auto const h = green_relation(s, GreenKind::H);
      return for_all_idempotent_pairs(idem, "RI6", [&](Element e, Element f) {
        return !l.related(e, f) || h.related(e, f);
      });
    }
  }
  throw std::invalid_argument("right_inverse_condition: unknown condition");
}

Verdict is_clifford(OrderedSemigroup const& s, Side side) {
  if (side == Side::two_sided) {
    throw std::invalid_argument("is_clifford: side must be left or right");
  }
  if (!is_regular(s).holds()) return kNotRegular;
  ElementSet const all = s.carrier();
  for (Element a = 0; a < s.size(); ++a) {
    auto const left_ideal = bracket(s, {all, s.singleton(a)});
    auto const right_ideal = bracket(s, {s.singleton(a), all});
    auto const bad = side == Side::right ? left_ideal.first_outside(right_ideal)
                                         : right_ideal.first_outside(left_ideal);
    if (bad) return Verdict::no(side == Side::right ? "right_clifford" : "left_clifford",
                                {a, *bad});
  }
  return Verdict::yes();
}

Verdict right_clifford_condition(OrderedSemigroup const& s, RightCliffordCondition id,
                                 IdempotentReading reading) {
  if (!is_regular(s).holds()) return kNotRegular;
  std::size_t const n = s.size();
  ElementSet const all = s.carrier();
  ElementSet const idem = ordered_idempotents(s, reading);
  auto one = [&](Element x) { return s.singleton(x); };
  // Some x with lhs <= a x.
  auto dominated_on_right = [&](Element lhs, Element a) {
    for (Element x = 0; x < n; ++x) {
      if (s.leq(lhs, s.product(a, x))) return true;
    }
    return false;
  };

  switch (id) {
    case RightCliffordCondition::RC2: {
      std::optional<Verdict> failure;
      idem.for_each([&](Element e) {
        if (failure) return;
        if (auto bad = bracket(s, {all, one(e)}).first_outside(bracket(s, {one(e), all}))) {
          failure = Verdict::no("RC2", {e, *bad});
        }
      });
      return failure ? *failure : Verdict::yes();
    }

    case RightCliffordCondition::RC3: {
      std::optional<Verdict> failure;
      idem.for_each([&](Element e) {
        for (Element a = 0; a < n && !failure; ++a) {
          if (!dominated_on_right(s.product(e, a), a)) failure = Verdict::no("RC3", {e, a});
        }
      });
      return failure ? *failure : Verdict::yes();
    }

    case RightCliffordCondition::RC4:
      for (Element b = 0; b < n; ++b) {
        for (Element a = 0; a < n; ++a) {
          if (!dominated_on_right(s.product(b, a), a)) return Verdict::no("RC4", {b, a});
        }
      }
      return Verdict::yes();

    case RightCliffordCondition::RC5: {
      auto const l = green_relation(s, GreenKind::L);
      auto const r = green_relation(s, GreenKind::R);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (l.related(a, b) && !r.related(a, b)) return Verdict::no("RC5", {a, b});
        }
      }
      return Verdict::yes();
    }

    case RightCliffordCondition::LC1:
      for (Element a = 0; a < n; ++a) {
        if (!bracket(s, {one(s.product(a, a)), all, one(a)}).contains(a)) {
          return Verdict::no("LC1", {a});
        }
      }
      return Verdict::yes();

    case RightCliffordCondition::LC2:
      return for_all_idempotent_pairs(idem, "LC2", [&](Element e, Element f) {
        return bracket(s, {one(f), one(e), all, one(e), one(f)}).contains(s.product(e, f));
      });
  }
  throw std::invalid_argument("right_clifford_condition: unknown condition");
}

Verdict is_group_like(OrderedSemigroup const& s, GroupLikeMode mode) {
  if (!is_regular(s).holds()) return kNotRegular;
  std::size_t const n = s.size();
  ElementSet const all = s.carrier();
  if (mode != GroupLikeMode::right) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!bracket(s, {all, s.singleton(b)}).contains(a)) return Verdict::no("left", {a, b});
      }
    }
  }
  if (mode != GroupLikeMode::left) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!bracket(s, {s.singleton(b), all}).contains(a)) return Verdict::no("right", {a, b});
      }
    }
  }
  return Verdict::yes();
}

Verdict is_simple(OrderedSemigroup const& s, Side side) {
  for (Element a = 0; a < s.size(); ++a) {
    if (principal_ideal(s, a, side) != s.carrier()) {
      return Verdict::no("proper_ideal", {a});
    }
  }
  return Verdict::yes();
}

Verdict idempotents_related(OrderedSemigroup const& s, GreenKind kind,
                            IdempotentReading reading) {
  if (kind != GreenKind::L && kind != GreenKind::R) {
    throw std::invalid_argument("idempotents_related: kind must be L or R");
  }
  if (!is_regular(s).holds()) return kNotRegular;
  auto const rel = green_relation(s, kind);
  return for_all_idempotent_pairs(ordered_idempotents(s, reading),
                                  std::string(to_string(kind)),
                                  [&](Element e, Element f) { return rel.related(e, f); });
}

VerdictPair h_commutative_corollary(OrderedSemigroup const& s, Element e, Element f,
                                    IdempotentReading reading) {
  auto const idem = ordered_idempotents(s, reading);
  if (e >= s.size() || f >= s.size() || !idem.contains(e) || !idem.contains(f)) {
    throw std::invalid_argument("h_commutative_corollary: e and f must be ordered idempotents");
  }
  ElementSet const all = s.carrier();
  auto const h = green_relation(s, GreenKind::H);
  Element const ef = s.product(e, f);
  Element const fe = s.product(f, e);

  VerdictPair out;
  out.hypothesis_met = is_right_inverse(s, reading).holds();
  out.lhs = h.related(ef, fe) ? Verdict::yes() : Verdict::no("ef_H_fe", {ef, fe});
  auto const meet = bracket(s, {all, s.singleton(e)}) & bracket(s, {all, s.singleton(f)});
  auto const target = bracket(s, {all, s.singleton(ef)});
  out.rhs = meet == target ? Verdict::yes() : Verdict::no("Se_meet_Sf", {e, f});
  return out;
}

VerdictPair left_related_inverses_condition(OrderedSemigroup const& s,
                                            PairQuantifier quantifier,
                                            IdempotentReading reading) {
  if (!is_regular(s).holds()) {
    return {kNotRegular, kNotRegular, false};
  }
  std::size_t const n = s.size();
  ElementSet const all = s.carrier();
  auto one = [&](Element x) { return s.singleton(x); };

  VerdictPair out;
  out.lhs = Verdict::yes();
  auto const l = green_relation(s, GreenKind::L);
  for (Element a = 0; a < n && out.lhs.holds(); ++a) {
    auto const v = inverses(s, a).members();
    for (Element p : v) {
      for (Element q : v) {
        if (out.lhs.holds() && !l.related(p, q)) out.lhs = Verdict::no("L", {a, p, q});
      }
    }
  }

  auto member = [&](Element e, Element f) {
    return bracket(s, {one(e), all, one(f), all, one(e)}).contains(s.product(e, f));
  };
  auto const idem = ordered_idempotents(s, reading);
  if (quantifier == PairQuantifier::forall) {
    out.rhs = for_all_idempotent_pairs(idem, "ef_in_eSfSe", member);
  } else {
    out.rhs = Verdict::no("ef_in_eSfSe", {});
    idem.for_each([&](Element e) {
      idem.for_each([&](Element f) {
        if (!out.rhs.holds() && member(e, f)) out.rhs = Verdict::yes("ef_in_eSfSe", {e, f});
      });
    });
  }
  return out;
}

Verdict is_union_of_group_like(OrderedSemigroup const& s, Limits const& limits) {
  std::size_t const n = s.size();
  if (n > limits.subsemigroup_n) {
    throw std::length_error("is_union_of_group_like: structure exceeds the subsemigroup scan bound");
  }
  ElementSet covered = s.empty_set();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet const t(n, bits);
    if (t.is_subset_of(covered)) continue;
    auto sub = restrict_to(s, t);
    if (!sub) continue;
    ElementSet const inner = sub->carrier();
    bool group_like = true;
    for (Element a = 0; a < sub->size() && group_like; ++a) {
      for (Element b = 0; b < sub->size() && group_like; ++b) {
        group_like = bracket(*sub, {inner, sub->singleton(b)}).contains(a) &&
                     bracket(*sub, {sub->singleton(a), inner}).contains(b);
      }
    }
    if (group_like) covered |= t;
  }
  if (auto bad = s.carrier().first_outside(covered)) {
    return Verdict::no("uncovered", {*bad});
  }
  return Verdict::yes();
}

// ClassificationReport --------------------------------------------------------

std::vector<std::string_view> const& ClassificationReport::keys() {
  static std::vector<std::string_view> const k = {
      "regular",         "completely_regular", "left_regular",    "right_regular",
      "right_inverse",   "left_inverse_dual",  "right_clifford",  "left_clifford",
      "group_like",      "left_group_like",    "right_group_like", "simple",
      "left_simple",     "right_simple",       "has_zero"};
  return k;
}

Verdict const& ClassificationReport::at(std::string_view key) const {
  for (auto const& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw std::out_of_range("ClassificationReport: no entry '" + std::string(key) + "'");
}

void ClassificationReport::set(std::string key, Verdict v) {
  for (auto& [k, old] : entries_) {
    if (k == key) {
      old = std::move(v);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(v));
}

ClassificationReport classify(OrderedSemigroup const& s, IdempotentReading reading) {
  ClassificationReport r;
  r.set("regular", is_regular(s));
  r.set("completely_regular", regularity_variant(s, RegularityVariant::completely_regular));
  r.set("left_regular", regularity_variant(s, RegularityVariant::left_regular));
  r.set("right_regular", regularity_variant(s, RegularityVariant::right_regular));
  r.set("right_inverse", is_right_inverse(s, reading));
  r.set("left_inverse_dual", is_left_inverse(s, reading));
  r.set("right_clifford", is_clifford(s, Side::right));
  r.set("left_clifford", is_clifford(s, Side::left));
  r.set("group_like", is_group_like(s, GroupLikeMode::both));
  r.set("left_group_like", is_group_like(s, GroupLikeMode::left));
  r.set("right_group_like", is_group_like(s, GroupLikeMode::right));
  r.set("simple", is_simple(s, Side::two_sided));
  r.set("left_simple", is_simple(s, Side::left));
  r.set("right_simple", is_simple(s, Side::right));
  if (auto z = zero_element(s)) {
    r.set("has_zero", Verdict::yes("zero", {*z}));
  } else {
    r.set("has_zero", Verdict::no("no_zero", {}));
  }
  return r;
}

}  // namespace osg
