#pragma once

// Conjugacy classes of closed subgroups of SO(3).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace symclass {

// Declaration order is the canonical ordering of classes.
enum class Family : std::uint8_t {
  Identity,
  Cyclic,
  Dihedral,
  Tetrahedral,
  Octahedral,
  Icosahedral,
  PlanarRotations, // SO(2)
  PlanarFull,      // O(2)
  Full,            // SO(3)
};

// Largest n accepted for Z_n and D_n.
inline constexpr int max_axial_order = 64;

// A conjugacy class [K] of closed subgroups of SO(3). Z_1 and D_1 are stored
// as Identity, so two values compare equal iff they denote the same class.
class SubgroupClass {
public:
  constexpr SubgroupClass() = default;

  // Throws DomainError for n < 1 or n > max_axial_order.
  static SubgroupClass cyclic(int n);
  static SubgroupClass dihedral(int n);

  static constexpr SubgroupClass identity() { return SubgroupClass(Family::Identity, 0); }
  static constexpr SubgroupClass tetrahedral() { return SubgroupClass(Family::Tetrahedral, 0); }
  static constexpr SubgroupClass octahedral() { return SubgroupClass(Family::Octahedral, 0); }
  static constexpr SubgroupClass icosahedral() { return SubgroupClass(Family::Icosahedral, 0); }
  static constexpr SubgroupClass so2() { return SubgroupClass(Family::PlanarRotations, 0); }
  static constexpr SubgroupClass o2() { return SubgroupClass(Family::PlanarFull, 0); }
  static constexpr SubgroupClass so3() { return SubgroupClass(Family::Full, 0); }

  // Builds any class from its family; `n` is only read for Cyclic and
  // Dihedral (and must then be >= 1).
  static SubgroupClass make(Family family, int n = 0);

  // Parses "1", "Z<n>", "D<n>", "T", "O", "I", "SO(2)", "O(2)", "SO(3)".
  // Throws ParseError on anything else.
  static SubgroupClass parse(std::string_view text);

  constexpr Family family() const noexcept { return family_; }
  // n for Z_n / D_n, 0 otherwise.
  constexpr int n() const noexcept { return n_; }

  constexpr bool is_finite() const noexcept {
    return family_ <= Family::Icosahedral;
  }
  // Number of elements; 0 for the continuous groups.
  int group_order() const noexcept;

  std::string name() const;

  friend constexpr auto operator<=>(const SubgroupClass&, const SubgroupClass&) = default;

private:
  constexpr SubgroupClass(Family f, int n) : family_(f), n_(n) {}

  Family family_ = Family::Identity;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SubgroupClass& c);

// Finite set of classes, iterated in canonical order.
using ClassSet = std::set<SubgroupClass>;

// "1 Z2 D2 O(2) SO(3)"
std::string format_classes(const ClassSet& classes);

ClassSet& merge_into(ClassSet& target, const ClassSet& source);
bool is_subset(const ClassSet& small, const ClassSet& big);

// True iff some representative of `small` is a subgroup of some
// representative of `big` (inclusion up to conjugacy).
bool contains(const SubgroupClass& big, const SubgroupClass& small);

} // namespace symclass
