#include "symclass/isotypic.hpp"

#include <cstdlib>
#include <iterator>

#include "symclass/error.hpp"

namespace symclass {

namespace {

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw DomainError("multiplicity overflow");
  return out;
}

Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
  Multiplicity out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw DomainError("multiplicity overflow");
  return out;
}

void add_scaled(Isotypic& out, const Isotypic& term, Multiplicity scale) {
  for (const auto& [k, m] : term.terms())
    out.add(k, checked_mul(m, scale));
}

Isotypic sym_square_irreducible(int k) {
  Isotypic out;
  for (int j = 0; j <= k; ++j)
    out.add(2 * j, 1);
  return out;
}

void check_order(int n, const char* what) {
  if (n < 0)
    throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(n));
}

} // namespace

Isotypic::Isotypic(std::initializer_list<std::pair<const int, Multiplicity>> terms) {
  for (const auto& [k, m] : terms)
    add(k, m);
}

Isotypic Isotypic::harmonic(int order, Multiplicity count) {
  Isotypic out;
  out.add(order, count);
  return out;
}

void Isotypic::add(int order, Multiplicity count) {
  check_order(order, "harmonic order");
  if (count == 0)
    return;
  auto& slot = terms_[order];
  slot = checked_add(slot, count);
}

Multiplicity Isotypic::multiplicity(int order) const {
  const auto it = terms_.find(order);
  return it == terms_.end() ? 0 : it->second;
}

int Isotypic::max_order() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

Multiplicity Isotypic::dimension() const {
  Multiplicity total = 0;
  for (const auto& [k, m] : terms_)
    total = checked_add(total, checked_mul(static_cast<Multiplicity>(2 * k + 1), m));
  return total;
}

Isotypic& Isotypic::operator+=(const Isotypic& rhs) {
  for (const auto& [k, m] : rhs.terms_)
    add(k, m);
  return *this;
}

std::string Isotypic::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [k, m] : terms_) {
    if (!out.empty())
      out += " + ";
    if (m != 1)
      out += std::to_string(m);
    out += "H" + std::to_string(k);
  }
  return out;
}

Isotypic cg_product(int p, int q) {
  check_order(p, "harmonic order");
  check_order(q, "harmonic order");
  Isotypic out;
  for (int i = std::abs(p - q); i <= p + q; ++i)
    out.add(i, 1);
  return out;
}

Isotypic tensor(const Isotypic& a, const Isotypic& b) {
  Isotypic out;
  for (const auto& [p, alpha] : a.terms())
    for (const auto& [q, beta] : b.terms())
      add_scaled(out, cg_product(p, q), checked_mul(alpha, beta));
  return out;
}

Isotypic sym_square(const Isotypic& a) {
  Isotypic out;
  const auto& terms = a.terms();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const auto [i, beta] = *it;
    add_scaled(out, sym_square_irreducible(i), beta);
    // C(beta, 2) cross terms between copies of the same H^i.
    const Multiplicity pairs = beta % 2 == 0 ? checked_mul(beta / 2, beta - 1)
                                             : checked_mul(beta, (beta - 1) / 2);
    add_scaled(out, cg_product(i, i), pairs);
    for (auto jt = std::next(it); jt != terms.end(); ++jt)
      add_scaled(out, cg_product(i, jt->first), checked_mul(beta, jt->second));
  }
  return out;
}

Isotypic sym_power_vector(int n) {
  check_order(n, "tensor order");
  Isotypic out;
  for (int k = n % 2; k <= n; k += 2)
    out.add(k, 1);
  return out;
}

Isotypic generic(int n) {
  check_order(n, "tensor order");
  Isotypic out = Isotypic::harmonic(0);
  const Isotypic vector = Isotypic::harmonic(1);
  for (int i = 0; i < n; ++i)
    out = tensor(out, vector);
  return out;
}

bool is_even_harmonic(const Isotypic& a) {
  for (const auto& [k, m] : a.terms())
    if (k % 2 != 0)
      return false;
  return true;
}

} // namespace symclass
