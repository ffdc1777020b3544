#include "osg/regularity.hpp"

namespace osg {

std::string_view to_string(RegularityVariant v) {
  switch (v) {
    case RegularityVariant::regular:            return "regular";
    case RegularityVariant::completely_regular: return "completely_regular";
    case RegularityVariant::left_regular:       return "left_regular";
    case RegularityVariant::right_regular:      return "right_regular";
  }
  return "unknown";
}

std::string_view to_string(IdempotentReading r) {
  return r == IdempotentReading::leq ? "leq" : "eq";
}

Verdict is_regular(OrderedSemigroup const& s) {
  return regularity_variant(s, RegularityVariant::regular);
}

Verdict regularity_variant(OrderedSemigroup const& s, RegularityVariant v) {
  ElementSet const all = s.carrier();
  for (Element a = 0; a < s.size(); ++a) {
    ElementSet const x = s.singleton(a);
    ElementSet const x2 = s.singleton(s.product(a, a));
    ElementSet ideal;
    switch (v) {
      case RegularityVariant::regular:            ideal = bracket(s, {x, all, x}); break;
      case RegularityVariant::completely_regular: ideal = bracket(s, {x2, all, x2}); break;
      case RegularityVariant::right_regular:      ideal = bracket(s, {x2, all}); break;
      case RegularityVariant::left_regular:       ideal = bracket(s, {all, x2}); break;
    }
    if (!ideal.contains(a)) {
      return Verdict::no(std::string(to_string(v)), {a});
    }
  }
  return Verdict::yes();
}

ElementSet ordered_idempotents(OrderedSemigroup const& s, IdempotentReading reading) {
  ElementSet out = s.empty_set();
  for (Element e = 0; e < s.size(); ++e) {
    Element const sq = s.product(e, e);
    if (reading == IdempotentReading::eq ? sq == e : s.leq(e, sq)) out.insert(e);
  }
  return out;
}

ElementSet inverses(OrderedSemigroup const& s, Element a) {
  ElementSet out = s.empty_set();
  for (Element b = 0; b < s.size(); ++b) {
    Element const aba = s.product(s.product(a, b), a);
    Element const bab = s.product(s.product(b, a), b);
    if (s.leq(a, aba) && s.leq(b, bab)) out.insert(b);
  }
  return out;
}

}  // namespace osg
