#pragma once

// Numeric cross-check of the clips table: explicit rotation groups in a
// standard orientation, intersected with conjugated copies and classified.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symclass/clips.hpp"
#include "symclass/rotation.hpp"
#include "symclass/subgroup.hpp"

namespace symclass {

// Closure iteration aborts beyond this many elements.
inline constexpr std::size_t max_group_elements = 120;

struct RotationAxis {
  Eigen::Vector3d direction; // canonical line representative
  int order = 1;             // largest n with a 2pi/n rotation about it
};

class FiniteGroup {
public:
  // Closure of the generators under composition. Throws OracleError if the
  // closure exceeds max_group_elements.
  static FiniteGroup generated_by(const std::vector<Rotation>& generators,
                                  std::string description);
  // Wraps an explicit element list; throws OracleError unless it contains
  // the identity and is closed under products and inverses.
  static FiniteGroup from_elements(std::vector<Rotation> elements, std::string description);

  const std::vector<Rotation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& description() const noexcept { return description_; }
  const std::vector<RotationAxis>& axes() const noexcept { return axes_; }

  bool contains(const Rotation& r) const;
  bool is_closed() const;
  FiniteGroup conjugated_by(const Rotation& g) const;

private:
  FiniteGroup(std::vector<Rotation> elements, std::string description);

  std::vector<Rotation> elements_;
  std::string description_;
  std::vector<RotationAxis> axes_;
};

// SO(2) or O(2) about a given axis. The SO(3) conjugacy class is `kind`.
struct AxialGroup {
  SubgroupClass kind;
  Eigen::Vector3d axis;
};

// Standard representative: Z_n and D_n about z with a secondary axis along x;
// T and O from the cube (+-1,+-1,+-1); I from the dodecahedron with vertices
// (+-1,+-1,+-1) and the cyclic permutations of (0, +-1/phi, +-phi), which has a
// 5-fold axis along (0, phi, 1). Throws DomainError for continuous classes.
FiniteGroup build_group(const SubgroupClass& c);

FiniteGroup intersect(const FiniteGroup& g1, const FiniteGroup& g2);
// Elements of g about the axis, plus (for O(2)) half-turns about axes
// perpendicular to it.
FiniteGroup intersect(const FiniteGroup& g, const AxialGroup& axial);
// Exact two-axis case analysis for a pair of axial groups.
SubgroupClass identify_axial_intersection(const AxialGroup& a, const AxialGroup& b);

// Conjugacy class of a finite rotation group. Throws OracleError when the
// element set matches no closed subgroup.
SubgroupClass identify(const FiniteGroup& g);

// Class of A ∩ g B g^-1, with A and B in standard orientation.
SubgroupClass conjugate_intersection(const SubgroupClass& a, const SubgroupClass& b,
                                     const Rotation& g);

// Union of observed intersection classes over seeded uniform conjugators
// plus, when `structured`, conjugators aligning one axis (with rational and
// generic twists) or two axes of b onto axes of a. Continuous classes are
// handled through their axis.
ClassSet clips_sample(const SubgroupClass& a, const SubgroupClass& b, int trials,
                      std::uint64_t seed, bool structured = true);

// Conjugators singled out in the hand derivation of the table, with the
// intersection class each one is known to produce.
struct NamedConjugator {
  std::string name;
  SubgroupClass a;
  SubgroupClass b;
  Rotation g;
  SubgroupClass expected;
};
std::vector<NamedConjugator> named_conjugators();

struct PairReport {
  SubgroupClass a;
  SubgroupClass b;
  ClassSet expected;   // clips_pair(a, b)
  ClassSet observed;   // clips_sample(a, b)
  ClassSet missing;    // expected but never observed
  ClassSet violations; // observed but not expected
};

struct TableReport {
  int max_n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  ClipsTable table = ClipsTable::Geometric;
  std::vector<PairReport> pairs;

  std::size_t violation_count() const;
  std::size_t missing_count() const;
  bool ok() const { return violation_count() == 0 && missing_count() == 0; }
};

// Checks every unordered pair from {1, Z2..Zmax_n, D2..Dmax_n, T, O, I,
// SO(2), O(2)} against the given table.
TableReport verify_table(int max_n, int trials, std::uint64_t seed,
                         ClipsTable table = ClipsTable::Geometric);

} // namespace symclass
