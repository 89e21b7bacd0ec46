#include "symclass/classes.hpp"

#include <algorithm>
#include <string>

#include "symclass/error.hpp"

namespace symclass {

namespace {

bool in(int k, std::initializer_list<int> values) {
  return std::find(values.begin(), values.end(), k) != values.end();
}

void check_n(int n) {
  if (n < 1)
    throw DomainError("n must be >= 1, got " + std::to_string(n));
  if (2 * n > max_axial_order)
    throw DomainError("n must be <= " + std::to_string(max_axial_order / 2) + ", got " +
                      std::to_string(n));
}

} // namespace

ClassSet irreducible_classes(int k) {
  if (k < 0)
    throw DomainError("harmonic order must be non-negative, got " + std::to_string(k));
  if (k > max_axial_order)
    throw DomainError("harmonic order must be <= " + std::to_string(max_axial_order) + ", got " +
                      std::to_string(k));
  ClassSet out{SubgroupClass::so3()};
  if (k == 0)
    return out;
  if (k >= 3)
    out.insert(SubgroupClass::identity());
  const int cyclic_max = k % 2 == 1 ? k : k / 2;
  for (int n = 2; n <= cyclic_max; ++n)
    out.insert(SubgroupClass::cyclic(n));
  for (int n = 2; n <= k; ++n)
    out.insert(SubgroupClass::dihedral(n));
  if (in(k, {3, 6, 7}) || k >= 9)
    out.insert(SubgroupClass::tetrahedral());
  if (!in(k, {1, 2, 3, 5, 7, 11}))
    out.insert(SubgroupClass::octahedral());
  if (in(k, {6, 10, 12, 15, 18}) || (k >= 20 && !in(k, {23, 29})))
    out.insert(SubgroupClass::icosahedral());
  out.insert(k % 2 == 1 ? SubgroupClass::so2() : SubgroupClass::o2());
  return out;
}

ClassSet isotypic_classes(const Isotypic& a, const FoldOptions& options) {
  if (a.empty())
    throw DomainError("cannot classify the zero space");
  ClassSet acc{SubgroupClass::so3()};
  for (const auto& [k, alpha] : a.terms()) {
    const ClassSet irr = irreducible_classes(k);
    const Multiplicity times = options.naive_multiplicity ? alpha : std::min<Multiplicity>(alpha, 2);
    for (Multiplicity i = 0; i < times; ++i) {
      ClassSet next = clips_sets(acc, irr, options.table);
      if (next == acc)
        break; // fixed point, further copies change nothing
      acc = std::move(next);
    }
  }
  return acc;
}

ClassSet sym_space_classes(int n) {
  check_n(n);
  if (n == 1)
    return {SubgroupClass::dihedral(2), SubgroupClass::o2(), SubgroupClass::so3()};
  if (n == 2)
    return {SubgroupClass::identity(),  SubgroupClass::cyclic(2),   SubgroupClass::dihedral(2),
            SubgroupClass::dihedral(3), SubgroupClass::dihedral(4), SubgroupClass::o2(),
            SubgroupClass::octahedral(), SubgroupClass::so3()};
  ClassSet out{SubgroupClass::identity(),    SubgroupClass::o2(),          SubgroupClass::tetrahedral(),
               SubgroupClass::octahedral(), SubgroupClass::icosahedral(), SubgroupClass::so3()};
  for (int m = 2; m <= 2 * (n - 1); ++m)
    out.insert(SubgroupClass::cyclic(m));
  for (int m = 2; m <= 2 * n; ++m)
    out.insert(SubgroupClass::dihedral(m));
  return out;
}

ClassSet generic_space_classes(int n) {
  check_n(n);
  ClassSet out{SubgroupClass::identity(), SubgroupClass::so2(), SubgroupClass::o2(), SubgroupClass::so3()};
  for (int m = 2; m <= 2 * n; ++m) {
    out.insert(SubgroupClass::cyclic(m));
    out.insert(SubgroupClass::dihedral(m));
  }
  if (n >= 2) {
    out.insert(SubgroupClass::tetrahedral());
    out.insert(SubgroupClass::octahedral());
  }
  if (n >= 3)
    out.insert(SubgroupClass::icosahedral());
  return out;
}

ClassReport classify_space(const SpaceExpr& e, const FoldOptions& options) {
  Isotypic iso = evaluate(e);
  if (iso.empty())
    throw DomainError("cannot classify the zero space");
  const int order = iso.max_order();
  if (order % 2 != 0)
    throw DomainError("only even-order spaces are supported, " + e.str() + " has order " +
                      std::to_string(order));
  ClassReport report{e, iso, order, isotypic_classes(iso, options), is_even_harmonic(iso),
                     ClosedForm::None};
  if (order >= 2 && order <= max_axial_order) {
    const int n = order / 2;
    if (report.classes == sym_space_classes(n))
      report.closed_form = ClosedForm::SymmetricSpace;
    else if (report.classes == generic_space_classes(n))
      report.closed_form = ClosedForm::GenericSpace;
  }
  return report;
}

} // namespace symclass
