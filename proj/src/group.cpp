#include "bispace/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bispace {

FiniteGroup FiniteGroup::from_table(CayleyTable table) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(Errc::Malformed, "group table is empty");
  for (std::size_t i = 0; i < m; ++i) {
    if (table[i].size() != m)
      throw Error(Errc::Malformed, "group table is not square", {i});
  }

  FiniteGroup G;
  G.order_ = m;
  G.cayley_.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (table[i][j] >= m) throw Error(Errc::NotClosed, "entry out of range", {i, j});
      G.cayley_.push_back(table[i][j]);
    }
  }

  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          throw Error(Errc::NotAssociative, "(ab)c != a(bc)", {a, b, c});

  bool found = false;
  for (Elem e = 0; e < m && !found; ++e) {
    bool ok = true;
    for (Elem g = 0; g < m && ok; ++g) ok = G.mul(e, g) == g && G.mul(g, e) == g;
    if (ok) {
      G.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::NoIdentity, "no two-sided identity");

  G.inverse_.assign(m, m);
  for (Elem g = 0; g < m; ++g) {
    for (Elem h = 0; h < m; ++h) {
      if (G.mul(g, h) == G.identity_ && G.mul(h, g) == G.identity_) {
        G.inverse_[g] = h;
        break;
      }
    }
    if (G.inverse_[g] == m) throw Error(Errc::NoInverse, "element has no inverse", {g});
  }
  return G;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t k) {
  if (k == 0) throw Error(Errc::Malformed, "cyclic group order must be positive");
  CayleyTable t(k, std::vector<Elem>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::klein4() {
  CayleyTable t(4, std::vector<Elem>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  if (k == 0) throw Error(Errc::Malformed, "symmetric group degree must be positive");
  if (k > 5) throw Error(Errc::Malformed, "symmetric group degree above 5 is out of scale");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = perms.size();
  CayleyTable t(m, std::vector<Elem>(m));
  std::vector<std::size_t> prod(k);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < k; ++i) prod[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), prod) - perms.begin());
    }
  }
  return from_table(std::move(t));
}

std::size_t FiniteGroup::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem p = g; p != identity_; p = mul(p, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

CayleyTable FiniteGroup::table() const {
  CayleyTable t(order_, std::vector<Elem>(order_));
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

ElemSet FiniteGroup::generated_subgroup(const ElemSet& gens) const {
  std::vector<bool> seen(order_, false);
  std::vector<Elem> stack{identity_};
  seen[identity_] = true;
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    for (Elem s : gens) {
      Elem y = mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  ElemSet out;
  for (Elem g = 0; g < order_; ++g)
    if (seen[g]) out.push_back(g);
  return out;
}

ElemSet FiniteGroup::generators() const {
  ElemSet gens;
  ElemSet span{identity_};
  for (Elem g = 0; g < order_ && span.size() < order_; ++g) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = generated_subgroup(gens);
  }
  return gens;
}

ElemSet make_elem_set(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

ElemSet all_elements(const FiniteGroup& G) {
  ElemSet all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

bool is_subgroup(const FiniteGroup& G, const ElemSet& members) {
  const ElemSet S = make_elem_set(members);
  if (S.empty() || S.back() >= G.order()) return false;
  auto contains = [&](Elem g) { return std::binary_search(S.begin(), S.end(), g); };
  for (Elem a : S) {
    if (!contains(G.inverse(a))) return false;
    for (Elem b : S)
      if (!contains(G.mul(a, b))) return false;
  }
  return true;
}

ElemSet conjugate_subgroup(const FiniteGroup& G, Elem g, const ElemSet& H) {
  if (!is_subgroup(G, H)) throw Error(Errc::NotASubgroup, "cannot conjugate a non-subgroup");
  std::vector<Elem> out;
  out.reserve(H.size());
  const Elem gi = G.inverse(g);
  for (Elem h : H) out.push_back(G.mul(G.mul(g, h), gi));
  return make_elem_set(std::move(out));
}

}  // namespace bispace
