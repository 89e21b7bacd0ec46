#include "symclass/clips.hpp"

#include <numeric>
#include <utility>

#include "symclass/error.hpp"

namespace symclass {

namespace {

using C = SubgroupClass;

C Z(int n) { return C::cyclic(n); }
C D(int n) { return C::dihedral(n); }

int gcd2(int n) { return std::gcd(n, 2); }
int gcd3(int n) { return std::gcd(n, 3); }
int gcd5(int n) { return std::gcd(n, 5); }
int four_if_divides(int n) { return n % 4 == 0 ? 4 : 1; }

// Published table, lower triangle: fam(hi) >= fam(lo). Does not handle
// Identity or SO(3). Identity membership is added by the caller.
ClassSet published_entry(const C& hi, const C& lo) {
  const int n = lo.n(); // parameter of the column class, when it has one
  const int m = hi.n(); // parameter of the row class, when it has one

  switch (hi.family()) {
  case Family::Cyclic: // lo is cyclic too
    return {Z(std::gcd(m, n))};

  case Family::Dihedral:
    if (lo.family() == Family::Cyclic)
      return {Z(gcd2(n)), Z(std::gcd(m, n))};
    else {
      const int d = std::gcd(m, n);
      const int dz = d == 1 ? 2 : 1;
      return {Z(gcd2(n)), Z(gcd2(m)), Z(dz), Z(d), D(d)};
    }

  case Family::Tetrahedral:
    switch (lo.family()) {
    case Family::Cyclic:
      return {Z(gcd2(n)), Z(gcd3(n))};
    case Family::Dihedral:
      return {Z(2), Z(gcd3(n)), D(gcd2(n))};
    default:
      return {Z(2), Z(3), C::tetrahedral()};
    }

  case Family::Octahedral:
    switch (lo.family()) {
    case Family::Cyclic:
      return {Z(gcd2(n)), Z(gcd3(n)), Z(four_if_divides(n))};
    case Family::Dihedral:
      return {Z(2),          Z(gcd3(n)), Z(four_if_divides(n)),
              D(gcd2(n)),    D(gcd3(n)), D(four_if_divides(n))};
    case Family::Tetrahedral:
      return {Z(2), Z(3), C::tetrahedral()};
    default:
      return {Z(2), D(2), Z(3), D(3), Z(4), D(4), C::octahedral()};
    }

  case Family::Icosahedral:
    switch (lo.family()) {
    case Family::Cyclic:
      return {Z(gcd2(n)), Z(gcd3(n)), Z(gcd5(n))};
    case Family::Dihedral:
      return {Z(2), Z(gcd3(n)), Z(gcd5(n)), D(gcd2(n)), D(gcd3(n)), D(gcd5(n))};
    case Family::Tetrahedral:
      return {Z(2), Z(3), C::tetrahedral()};
    case Family::Octahedral:
      return {Z(2), Z(3), D(3), C::tetrahedral()};
    default:
      return {Z(2), Z(3), D(3), Z(5), D(5), C::icosahedral()};
    }

  case Family::PlanarRotations:
    switch (lo.family()) {
    case Family::Cyclic:
      return {Z(n)};
    case Family::Dihedral:
      return {Z(2), Z(n)};
    case Family::Tetrahedral:
      return {Z(2), Z(3)};
    case Family::Octahedral:
      return {Z(2), Z(3), Z(4)};
    case Family::Icosahedral:
      return {Z(2), Z(3), Z(5)};
    default:
      return {C::so2()};
    }

  case Family::PlanarFull:
    switch (lo.family()) {
    case Family::Cyclic:
      return {Z(gcd2(n)), Z(n)};
    case Family::Dihedral:
      return {Z(2), D(n)};
    case Family::Tetrahedral:
      return {D(2), Z(3)};
    case Family::Octahedral:
      return {D(2), D(3), D(4)};
    case Family::Icosahedral:
      return {D(2), D(3), D(5)};
    case Family::PlanarRotations:
      return {Z(2), C::so2()};
    default:
      return {Z(2), C::o2()};
    }

  default:
    break;
  }
  return {};
}

// Realizable intersections missing from the published table.
ClassSet gap_entry(const C& hi, const C& lo) {
  const int n = lo.n();
  const int m = hi.n();
  switch (hi.family()) {
  case Family::Dihedral:
    if (lo.family() == Family::Dihedral) {
      // A shared secondary axis always gives Z2; perpendicular primary axes
      // give D2 when both orders are even.
      ClassSet out{Z(2)};
      if (m % 2 == 0 && n % 2 == 0)
        out.insert(D(2));
      return out;
    }
    return {};
  case Family::Octahedral:
    // O contains two conjugacy classes of D2 subgroups; the one using a
    // 4-fold axis and two edge axes does not extend to a shared T.
    if (lo.family() == Family::Tetrahedral)
      return {D(2)};
    return {};
  case Family::Icosahedral:
    if (lo.family() == Family::Octahedral)
      return {D(2)};
    // I and its conjugate by a quarter turn about a 2-fold axis share T.
    if (lo.family() == Family::Icosahedral)
      return {C::tetrahedral()};
    return {};
  case Family::PlanarFull:
    switch (lo.family()) {
    case Family::Dihedral:
      return {D(gcd2(n))};
    case Family::Tetrahedral:
    case Family::Octahedral:
    case Family::Icosahedral:
      // O(2) about an axis orthogonal to exactly one 2-fold axis.
      return {Z(2)};
    case Family::PlanarFull:
      // Orthogonal axes.
      return {D(2)};
    default:
      return {};
    }
  default:
    return {};
  }
}

std::pair<C, C> ordered(const C& a, const C& b) {
  return a.family() >= b.family() ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

ClassSet clips_pair(const SubgroupClass& a, const SubgroupClass& b, ClipsTable table) {
  if (a.family() == Family::Identity || b.family() == Family::Identity)
    return {C::identity()};
  if (a.family() == Family::Full)
    return {b};
  if (b.family() == Family::Full)
    return {a};

  const auto [hi, lo] = ordered(a, b);
  ClassSet out = published_entry(hi, lo);
  if (table == ClipsTable::Geometric)
    merge_into(out, gap_entry(hi, lo));

  // O(2) o O(2) always shares the half-turn about the common perpendicular.
  const bool both_o2 = hi.family() == Family::PlanarFull && lo.family() == Family::PlanarFull;
  if (!both_o2)
    out.insert(C::identity());
  return out;
}

ClassSet clips_sets(const ClassSet& lhs, const ClassSet& rhs, ClipsTable table) {
  ClassSet out;
  for (const auto& a : lhs)
    for (const auto& b : rhs)
      merge_into(out, clips_pair(a, b, table));
  return out;
}

ClassSet published_table_gaps(const SubgroupClass& a, const SubgroupClass& b) {
  const ClassSet geometric = clips_pair(a, b, ClipsTable::Geometric);
  const ClassSet published = clips_pair(a, b, ClipsTable::Published);
  ClassSet out;
  for (const auto& c : geometric)
    if (!published.contains(c))
      out.insert(c);
  return out;
}

ClipsTable parse_clips_table(std::string_view name) {
  if (name == "geometric")
    return ClipsTable::Geometric;
  if (name == "published")
    return ClipsTable::Published;
  throw DomainError("unknown clips table '" + std::string(name) +
                    "' (expected 'geometric' or 'published')");
}

std::string_view to_string(ClipsTable table) {
  return table == ClipsTable::Geometric ? "geometric" : "published";
}

} // namespace symclass
