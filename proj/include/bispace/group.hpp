#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "bispace/error.hpp"

namespace bispace {

/// Sorted, duplicate-free list of group elements.
using ElemSet = std::vector<Elem>;

/// Square table of element indices; row a, column b holds a*b.
using CayleyTable = std::vector<std::vector<Elem>>;

/// A finite group given by its Cayley table. Elements are dense indices
/// 0..order-1; the identity and inverses are discovered during validation,
/// never declared. Immutable once constructed.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses exhaustively.
  /// Throws Error with NotClosed (i,j), NotAssociative (a,b,c), NoIdentity,
  /// or NoInverse (g).
  static FiniteGroup from_table(CayleyTable table);

  static FiniteGroup trivial();
  /// Z_k under addition mod k.
  static FiniteGroup cyclic(std::size_t k);
  /// Z_2 x Z_2, elements encoded as two-bit vectors under xor.
  static FiniteGroup klein4();
  /// S_k on permutations of {0..k-1} listed in lexicographic order, with
  /// (p*q)(i) = p(q(i)).
  static FiniteGroup symmetric(std::size_t k);

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const { return cayley_[a * order_ + b]; }
  Elem inverse(Elem g) const { return inverse_[g]; }
  /// Order of g as a group element: least k >= 1 with g^k = e.
  std::size_t element_order(Elem g) const;
  bool is_abelian() const;

  CayleyTable table() const;

  /// A generating set built greedily in ascending index order.
  ElemSet generators() const;
  /// The subgroup generated by `gens`.
  ElemSet generated_subgroup(const ElemSet& gens) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.cayley_ == b.cayley_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> cayley_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// The unique h with g*h = h*g = e.
inline Elem inverse(const FiniteGroup& G, Elem g) { return G.inverse(g); }

/// True iff S is nonempty and closed under product and inverse.
bool is_subgroup(const FiniteGroup& G, const ElemSet& S);

/// {g h g^-1 : h in H}, sorted. Throws NotASubgroup if H is not one.
ElemSet conjugate_subgroup(const FiniteGroup& G, Elem g, const ElemSet& H);

/// {0, ..., order-1}.
ElemSet all_elements(const FiniteGroup& G);

/// Normalizes an arbitrary element list into an ElemSet.
ElemSet make_elem_set(std::vector<Elem> elems);

}  // namespace bispace
