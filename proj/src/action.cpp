#include "bispace/action.hpp"

#include <string>

namespace bispace {

BinaryAction::BinaryAction(GroupPtr group, std::size_t carrier_size, const ActionTable& act)
    : group_(std::move(group)), n_(carrier_size) {
  if (!group_) throw Error(Errc::Malformed, "action has no group");
  if (n_ == 0) throw Error(Errc::Malformed, "carrier must be nonempty");
  const std::size_t m = group_->order();
  if (act.size() != m) throw Error(Errc::Malformed, "act must have one slice per group element");

  act_.reserve(m * n_ * n_);
  for (Elem g = 0; g < m; ++g) {
    if (act[g].size() != n_) throw Error(Errc::Malformed, "act slice has wrong row count", {g});
    for (Point x1 = 0; x1 < n_; ++x1) {
      if (act[g][x1].size() != n_) throw Error(Errc::Malformed, "act row has wrong length", {g, x1});
      for (Point x2 = 0; x2 < n_; ++x2) {
        if (act[g][x1][x2] >= n_) throw Error(Errc::IndexOutOfRange, "act entry outside carrier", {g, x1, x2});
        act_.push_back(act[g][x1][x2]);
      }
    }
  }

  const BinaryAction& self = *this;
  const Elem e = group_->identity();
  for (Point x1 = 0; x1 < n_; ++x1)
    for (Point x2 = 0; x2 < n_; ++x2)
      if (self(e, x1, x2) != x2) throw Error(Errc::IdentityAxiomFailed, "e(x1,x2) != x2", {x1, x2});

  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h) {
      const Elem gh = group_->mul(g, h);
      for (Point x1 = 0; x1 < n_; ++x1)
        for (Point x2 = 0; x2 < n_; ++x2)
          if (self(gh, x1, x2) != self(g, x1, self(h, x1, x2)))
            throw Error(Errc::CompositionAxiomFailed, "gh(x1,x2) != g(x1,h(x1,x2))", {g, h, x1, x2});
    }

  for (Elem g = 0; g < m; ++g) {
    const Elem gi = group_->inverse(g);
    for (Point x1 = 0; x1 < n_; ++x1)
      for (Point x2 = 0; x2 < n_; ++x2)
        if (self(gi, x1, self(g, x1, x2)) != x2)
          throw Error(Errc::NotInvertible, "g^-1 does not undo g", {g, x1});
  }
}

ActionTable BinaryAction::table() const {
  const std::size_t m = group_->order();
  ActionTable t(m, std::vector<std::vector<Point>>(n_, std::vector<Point>(n_)));
  for (Elem g = 0; g < m; ++g)
    for (Point x1 = 0; x1 < n_; ++x1)
      for (Point x2 = 0; x2 < n_; ++x2) t[g][x1][x2] = (*this)(g, x1, x2);
  return t;
}

BinaryOperation::BinaryOperation(std::vector<std::vector<Point>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  for (Point x = 0; x < n; ++x) {
    if (table_[x].size() != n) throw Error(Errc::Malformed, "operation table is not square", {x});
    for (Point xp = 0; xp < n; ++xp)
      if (table_[x][xp] >= n) throw Error(Errc::IndexOutOfRange, "operation entry outside carrier", {x, xp});
  }
}

BinaryOperation BinaryOperation::identity(std::size_t n) {
  std::vector<std::vector<Point>> t(n, std::vector<Point>(n));
  for (Point x = 0; x < n; ++x)
    for (Point xp = 0; xp < n; ++xp) t[x][xp] = xp;
  return BinaryOperation(std::move(t));
}

BinaryAction action_from_table(GroupPtr G, std::size_t n, const ActionTable& act) {
  return BinaryAction(std::move(G), n, act);
}

Point evaluate(const BinaryAction& a, Elem g, Point x1, Point x2) {
  if (g >= a.group().order() || x1 >= a.carrier_size() || x2 >= a.carrier_size())
    throw Error(Errc::IndexOutOfRange, "evaluate arguments out of range", {g, x1, x2});
  return a(g, x1, x2);
}

BinaryAction canonical_self_action(GroupPtr G, SelfActionVariant variant) {
  const FiniteGroup& grp = *G;
  const std::size_t m = grp.order();
  ActionTable t(m, std::vector<std::vector<Point>>(m, std::vector<Point>(m)));
  for (Elem g = 0; g < m; ++g)
    for (Elem g1 = 0; g1 < m; ++g1) {
      const Elem g1i = grp.inverse(g1);
      const Elem twist = variant == SelfActionVariant::Distributive ? grp.mul(grp.mul(g1, g), g1i)
                                                                    : grp.mul(grp.mul(g1i, g), g1);
      for (Elem g2 = 0; g2 < m; ++g2) t[g][g1][g2] = grp.mul(twist, g2);
    }
  return BinaryAction(std::move(G), m, t);
}

Verdict is_distributive(const BinaryAction& a) {
  const std::size_t m = a.group().order();
  const std::size_t n = a.carrier_size();
  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h)
      for (Point x = 0; x < n; ++x)
        for (Point x1 = 0; x1 < n; ++x1) {
          const Point hx1 = a(h, x, x1);
          for (Point x2 = 0; x2 < n; ++x2)
            if (a(g, hx1, a(h, x, x2)) != a(h, x, a(g, x1, x2))) return Verdict::fail({g, h, x, x1, x2});
        }
  return Verdict::pass();
}

Verdict is_ordinary_action(const FiniteGroup& G, std::size_t n, const OrdinaryTable& rho) {
  const std::size_t m = G.order();
  if (rho.size() != m) return Verdict::fail({});
  for (Elem g = 0; g < m; ++g) {
    if (rho[g].size() != n) return Verdict::fail({g});
    for (Point x = 0; x < n; ++x)
      if (rho[g][x] >= n) return Verdict::fail({g, x});
  }
  for (Point x = 0; x < n; ++x)
    if (rho[G.identity()][x] != x) return Verdict::fail({x});
  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h)
      for (Point x = 0; x < n; ++x)
        if (rho[G.mul(g, h)][x] != rho[g][rho[h][x]]) return Verdict::fail({g, h, x});
  return Verdict::pass();
}

BinaryAction from_ordinary_action(GroupPtr G, std::size_t n, const OrdinaryTable& rho) {
  if (auto v = is_ordinary_action(*G, n, rho); !v)
    throw Error(Errc::NotAnOrdinaryAction, "rho violates the ordinary action laws", *v.witness);
  const std::size_t m = G->order();
  ActionTable t(m, std::vector<std::vector<Point>>(n, std::vector<Point>(n)));
  for (Elem g = 0; g < m; ++g)
    for (Point x1 = 0; x1 < n; ++x1)
      for (Point x2 = 0; x2 < n; ++x2) t[g][x1][x2] = rho[g][x2];
  return BinaryAction(std::move(G), n, t);
}

OrdinaryTable family_at(const BinaryAction& a, Point x1) {
  if (x1 >= a.carrier_size()) throw Error(Errc::IndexOutOfRange, "family index outside carrier", {x1});
  const std::size_t m = a.group().order();
  const std::size_t n = a.carrier_size();
  OrdinaryTable rho(m, std::vector<Point>(n));
  for (Elem g = 0; g < m; ++g)
    for (Point x2 = 0; x2 < n; ++x2) rho[g][x2] = a(g, x1, x2);
  return rho;
}

BinaryAction from_family(GroupPtr G, std::size_t n, const std::vector<OrdinaryTable>& family) {
  if (family.size() != n) throw Error(Errc::Malformed, "family must have one member per carrier point");
  for (Point x1 = 0; x1 < n; ++x1) {
    if (auto v = is_ordinary_action(*G, n, family[x1]); !v) {
      Witness w{x1};
      w.insert(w.end(), v.witness->begin(), v.witness->end());
      throw Error(Errc::MemberNotAnAction, "family member is not an ordinary action", std::move(w));
    }
  }
  const std::size_t m = G->order();
  ActionTable t(m, std::vector<std::vector<Point>>(n, std::vector<Point>(n)));
  for (Elem g = 0; g < m; ++g)
    for (Point x1 = 0; x1 < n; ++x1)
      for (Point x2 = 0; x2 < n; ++x2) t[g][x1][x2] = family[x1][g][x2];
  return BinaryAction(std::move(G), n, t);
}

BinaryOperation compose_binary_ops(const BinaryOperation& f, const BinaryOperation& g) {
  const std::size_t n = f.carrier_size();
  if (g.carrier_size() != n) throw Error(Errc::CarrierMismatch, "operations act on different carriers");
  std::vector<std::vector<Point>> t(n, std::vector<Point>(n));
  for (Point x = 0; x < n; ++x)
    for (Point xp = 0; xp < n; ++xp) t[x][xp] = f(x, g(x, xp));
  return BinaryOperation(std::move(t));
}

BinaryOperation operation_of(const BinaryAction& a, Elem g) {
  if (g >= a.group().order()) throw Error(Errc::IndexOutOfRange, "group element out of range", {g});
  const std::size_t n = a.carrier_size();
  std::vector<std::vector<Point>> t(n, std::vector<Point>(n));
  for (Point x = 0; x < n; ++x)
    for (Point xp = 0; xp < n; ++xp) t[x][xp] = a(g, x, xp);
  return BinaryOperation(std::move(t));
}

}  // namespace bispace
