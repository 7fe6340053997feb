#include "hitchin/weyl.hpp"

#include <algorithm>
#include <deque>

namespace hitchin {

namespace {

Error no_enumeration(const WeylGroup& g) {
  return Error(ErrorCode::enumeration_unavailable, "Weyl group of order " + std::to_string(g.order()) +
                                                       " exceeds the enumeration cap " + std::to_string(g.cap()));
}

std::vector<RootOrbit> compute_orbits(const RootDatum& datum, const std::vector<IntMatrix>& generators) {
  const std::size_t nroots = datum.num_roots();
  std::vector<std::vector<RootIndex>> perms;
  for (const auto& g : generators) {
    std::vector<RootIndex> p(nroots);
    for (RootIndex r = 0; r < nroots; ++r) {
      const auto image = datum.find_root(g * std::span<const Int>(datum.root(r)));
      if (!image) throw Error(ErrorCode::inconsistent_input, "simple reflection does not permute the roots");
      p[r] = *image;
    }
    perms.push_back(std::move(p));
  }

  std::vector<RootOrbit> orbits;
  std::vector<bool> seen(nroots, false);
  for (RootIndex start = 0; start < nroots; ++start) {
    if (seen[start]) continue;
    RootOrbit orbit;
    orbit.component = datum.component_of(start);
    orbit.long_roots = datum.is_long(start);
    std::deque<RootIndex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const RootIndex r = queue.front();
      queue.pop_front();
      orbit.roots.push_back(r);
      for (const auto& p : perms)
        if (!seen[p[r]]) {
          seen[p[r]] = true;
          queue.push_back(p[r]);
        }
    }
    std::sort(orbit.roots.begin(), orbit.roots.end());
    orbit.representative = orbit.roots.front();  // positive roots precede negatives
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const RootOrbit& a, const RootOrbit& b) {
    if (a.component != b.component) return a.component < b.component;
    return a.long_roots && !b.long_roots;
  });
  return orbits;
}

}  // namespace

IntMatrix reflection_matrix(const RootDatum& datum, RootIndex alpha) {
  const auto& x = datum.root(alpha);
  const auto& y = datum.coroot(alpha);
  const std::size_t n = x.size();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= x[i] * y[j];
  return s;
}

const std::vector<IntMatrix>& WeylGroup::elements() const {
  if (!enumerated()) throw no_enumeration(*this);
  return elements_;
}

const IntMatrix& WeylGroup::element(ElementIndex i) const {
  if (!enumerated()) throw no_enumeration(*this);
  if (i >= elements_.size()) throw Error(ErrorCode::index_out_of_range, "Weyl element index out of range");
  return elements_[i];
}

std::optional<ElementIndex> WeylGroup::index_of(const IntMatrix& w) const {
  if (!enumerated()) throw no_enumeration(*this);
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex WeylGroup::inverse(ElementIndex i) const {
  if (!enumerated()) throw no_enumeration(*this);
  return inverse_.at(i);
}

ElementIndex WeylGroup::multiply(ElementIndex a, ElementIndex b) const {
  const auto idx = index_of(element(a) * element(b));
  if (!idx) throw Error(ErrorCode::inconsistent_input, "Weyl group not closed under multiplication");
  return *idx;
}

std::optional<RootIndex> WeylGroup::reflection_root(const IntMatrix& w) const {
  auto it = reflections_.find(w);
  if (it == reflections_.end()) return std::nullopt;
  return it->second;
}

RootIndex WeylGroup::act(const IntMatrix& w, RootIndex root) const {
  const auto image = datum_->find_root(w * std::span<const Int>(datum_->root(root)));
  if (!image) throw Error(ErrorCode::inconsistent_input, "matrix does not permute the roots");
  return *image;
}

Int WeylGroup::fixed_coset_count(std::size_t orbit, ElementIndex w) const {
  if (!enumerated()) throw no_enumeration(*this);
  if (orbit >= induced_.size()) throw Error(ErrorCode::index_out_of_range, "orbit index out of range");
  if (w >= elements_.size()) throw Error(ErrorCode::index_out_of_range, "Weyl element index out of range");
  return induced_[orbit][w];
}

WeylGroup generate(std::shared_ptr<const RootDatum> datum, Int cap) {
  if (cap < 1) throw Error(ErrorCode::inconsistent_input, "enumeration cap must be >= 1");
  WeylGroup g;
  g.datum_ = std::move(datum);
  g.cap_ = cap;
  const RootDatum& d = *g.datum_;
  for (const auto& c : d.type().components) g.order_ = checked_mul(g.order_, weyl_order(c));
  for (RootIndex s : d.simple_roots()) g.generators_.push_back(reflection_matrix(d, s));
  g.orbits_ = compute_orbits(d, g.generators_);
  for (RootIndex r : d.positive_roots()) g.reflections_.emplace(reflection_matrix(d, r), r);

  if (g.order_ > cap) return g;

  // BFS closure; each element records the (parent, generator) that reached it
  // so inverses can be rebuilt as inverse(parent) * generator.
  const std::size_t n = static_cast<std::size_t>(d.rank());
  std::vector<std::pair<ElementIndex, std::size_t>> parent;
  g.elements_.push_back(IntMatrix::identity(n));
  g.index_.emplace(g.elements_.back(), 0);
  parent.emplace_back(0, 0);
  for (ElementIndex head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t k = 0; k < g.generators_.size(); ++k) {
      IntMatrix next = g.generators_[k] * g.elements_[head];
      if (g.index_.contains(next)) continue;
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
      parent.emplace_back(head, k);
    }
  }
  if (static_cast<Int>(g.elements_.size()) != g.order_)
    throw Error(ErrorCode::inconsistent_input, "enumerated Weyl group has " + std::to_string(g.elements_.size()) +
                                                   " elements, expected " + std::to_string(g.order_));

  g.inverse_.assign(g.elements_.size(), 0);
  std::vector<IntMatrix> inv_matrix(g.elements_.size());
  inv_matrix[0] = IntMatrix::identity(n);
  for (ElementIndex i = 1; i < g.elements_.size(); ++i) {
    const auto [p, k] = parent[i];
    inv_matrix[i] = inv_matrix[p] * g.generators_[k];  // (s_k p)^{-1} = p^{-1} s_k
    g.inverse_[i] = g.index_.at(inv_matrix[i]);
  }

  // Induced characters: pick one representative u per coset uH_j. The coset is
  // fixed by w exactly when u^{-1} w u lies in H_j, i.e. w = 1 or w = u s u^{-1}.
  const std::size_t order = g.elements_.size();
  for (const RootOrbit& orbit : g.orbits_) {
    const IntMatrix s = reflection_matrix(d, orbit.representative);
    std::vector<Int> counts(order, 0);
    std::vector<bool> covered(order, false);
    Int cosets = 0;
    for (ElementIndex u = 0; u < order; ++u) {
      if (covered[u]) continue;
      const ElementIndex partner = g.index_.at(g.elements_[u] * s);
      covered[u] = covered[partner] = true;
      ++cosets;
      const ElementIndex conj = g.index_.at(g.elements_[u] * s * inv_matrix[u]);
      ++counts[conj];
    }
    counts[0] = cosets;
    g.induced_.push_back(std::move(counts));
  }
  return g;
}

std::vector<RootOrbit> root_orbits(const WeylGroup& group) { return group.root_orbits(); }

Int fixed_coset_count(const WeylGroup& group, std::size_t orbit, const IntMatrix& w) {
  const auto idx = group.index_of(w);
  if (!idx) throw Error(ErrorCode::inconsistent_input, "matrix is not an element of W");
  return group.fixed_coset_count(orbit, *idx);
}

}  // namespace hitchin
