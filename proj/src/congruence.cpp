#include "osg/congruence.hpp"

#include <deque>
#include <numeric>

namespace osg {

Verdict is_congruence(OrderedSemigroup const& s, EquivalenceRelation const& rho, Side side) {
  std::size_t const n = s.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!rho.related(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (side != Side::right && !rho.related(s.product(c, a), s.product(c, b))) {
          return Verdict::no("left_compatible", {a, b, c});
        }
        if (side != Side::left && !rho.related(s.product(a, c), s.product(b, c))) {
          return Verdict::no("right_compatible", {a, b, c});
        }
      }
    }
  }
  return Verdict::yes();
}

Verdict is_semilattice_congruence(OrderedSemigroup const& s, EquivalenceRelation const& rho) {
  if (auto v = is_congruence(s, rho, Side::two_sided); !v.holds()) return v;
  std::size_t const n = s.size();
  for (Element a = 0; a < n; ++a) {
    if (!rho.related(a, s.product(a, a))) return Verdict::no("square", {a});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!rho.related(s.product(a, b), s.product(b, a))) {
        return Verdict::no("commutative", {s.product(a, b), s.product(b, a)});
      }
    }
  }
  return Verdict::yes();
}

Verdict is_complete_semilattice_congruence(OrderedSemigroup const& s,
                                           EquivalenceRelation const& sigma) {
  if (auto v = is_semilattice_congruence(s, sigma); !v.holds()) return v;
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (s.leq(a, b) && !sigma.related(a, s.product(a, b))) {
        return Verdict::no("complete", {a, b});
      }
    }
  }
  return Verdict::yes();
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }
  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Element> parent_;
};

}  // namespace

EquivalenceRelation congruence_closure(OrderedSemigroup const& s,
                                       RelationPairs const& generators) {
  std::size_t const n = s.size();
  UnionFind uf(n);
  std::deque<std::pair<Element, Element>> pending(generators.begin(), generators.end());
  // Translations are only needed for pairs that actually merge two classes:
  // the equivalence is generated by those pairs, and translating a chain of
  // merged pairs gives a chain between the translated ends.
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    if (!uf.unite(a, b)) continue;
    for (Element c = 0; c < n; ++c) {
      pending.emplace_back(s.product(c, a), s.product(c, b));
      pending.emplace_back(s.product(a, c), s.product(b, c));
    }
  }
  std::vector<Element> ids(n);
  for (Element i = 0; i < n; ++i) ids[i] = uf.find(i);
  return EquivalenceRelation::from_class_map(ids);
}

EquivalenceRelation least_complete_semilattice_congruence(OrderedSemigroup const& s) {
  std::size_t const n = s.size();
  RelationPairs seeds;
  for (Element a = 0; a < n; ++a) {
    seeds.emplace_back(a, s.product(a, a));
    for (Element b = 0; b < n; ++b) {
      seeds.emplace_back(s.product(a, b), s.product(b, a));
      if (s.leq(a, b)) seeds.emplace_back(a, s.product(a, b));
    }
  }
  // Any congruence containing the seeds satisfies all three conditions, so
  // one closure is already the fixpoint.
  return congruence_closure(s, seeds);
}

Verdict is_complete_semilattice_of(OrderedSemigroup const& s, GroupLikeMode mode) {
  auto const rho = least_complete_semilattice_congruence(s);
  for (auto const& cls : rho.blocks()) {
    auto sub = restrict_to(s, cls);
    Element const rep = cls.members().front();
    if (!sub) return Verdict::no("class_not_closed", {rep});
    auto inner = is_group_like(*sub, mode);
    if (!inner.holds()) {
      std::vector<Element> witness{rep};
      auto const members = cls.members();
      for (Element w : inner.witness) witness.push_back(members[w]);
      return Verdict::no("class_not_" + std::string(to_string(mode)) + "_group_like" +
                             (inner.applicable() ? "" : "_not_regular"),
                         witness);
    }
  }
  return Verdict::yes();
}

}  // namespace osg
