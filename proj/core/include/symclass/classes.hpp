#pragma once

// Symmetry classes of tensor spaces.

#include "symclass/clips.hpp"
#include "symclass/isotypic.hpp"
#include "symclass/space_expr.hpp"
#include "symclass/subgroup.hpp"

namespace symclass {

// Isotropy classes of the irreducible representation H^k.
ClassSet irreducible_classes(int k);

struct FoldOptions {
  ClipsTable table = ClipsTable::Geometric;
  // Clip each order in alpha_k times instead of min(alpha_k, 2).
  bool naive_multiplicity = false;
};

// Isotropy classes of a direct sum, by folding clips over its components.
// Throws DomainError when `a` is empty.
ClassSet isotypic_classes(const Isotypic& a, const FoldOptions& options = {});

// Classes of the totally symmetric space of order 2n. Throws for n < 1.
ClassSet sym_space_classes(int n);
// Classes of the generic space of order 2n, i.e. every class an order-2n
// tensor can have. Throws for n < 1.
ClassSet generic_space_classes(int n);

enum class ClosedForm { None, SymmetricSpace, GenericSpace };

struct ClassReport {
  SpaceExpr expr;
  Isotypic isotypic;
  int order = 0; // highest harmonic order present, 2n
  ClassSet classes;
  bool even_harmonic = false;
  ClosedForm closed_form = ClosedForm::None;

  std::size_t count() const noexcept { return classes.size(); }
};

// Throws DomainError when the highest order present is odd, or the space
// is zero.
ClassReport classify_space(const SpaceExpr& e, const FoldOptions& options = {});

} // namespace symclass
