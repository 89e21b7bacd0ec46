#pragma once

// SO(3) isotypic decompositions  ⊕ α_k H^k  and the Clebsch-Gordan calculus on
// them.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace symclass {

using Multiplicity = std::uint64_t;

class Isotypic {
public:
  Isotypic() = default;
  // Zero multiplicities are dropped.
  Isotypic(std::initializer_list<std::pair<const int, Multiplicity>> terms);

  static Isotypic harmonic(int order, Multiplicity count = 1);

  // Throws DomainError for negative orders or on overflow.
  void add(int order, Multiplicity count);

  Multiplicity multiplicity(int order) const;
  const std::map<int, Multiplicity>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  // Highest order present; -1 when empty.
  int max_order() const noexcept;
  // Σ (2k+1) α_k. Throws DomainError on overflow.
  Multiplicity dimension() const;

  Isotypic& operator+=(const Isotypic& rhs);
  friend Isotypic operator+(Isotypic lhs, const Isotypic& rhs) { return lhs += rhs; }
  friend bool operator==(const Isotypic&, const Isotypic&) = default;

  // "2H0 + 2H2 + H4"; "0" when empty.
  std::string str() const;

private:
  std::map<int, Multiplicity> terms_;
};

// H^p ⊗ H^q = ⊕_{i=|p-q|}^{p+q} H^i
Isotypic cg_product(int p, int q);

// Bilinear extension of cg_product.
Isotypic tensor(const Isotypic& a, const Isotypic& b);

// Symmetric square, from S²(A⊕B) = S²A ⊕ S²B ⊕ A⊗B and S²(H^k) = ⊕_{j=0}^{k} H^{2j}.
Isotypic sym_square(const Isotypic& a);

// Completely symmetric order-n tensors on R^3: H^n ⊕ H^{n-2} ⊕ ...
Isotypic sym_power_vector(int n);

// ⊗^n R^3.
Isotypic generic(int n);

// No odd order present.
bool is_even_harmonic(const Isotypic& a);

} // namespace symclass
