#include "symclass/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>

#include "symclass/error.hpp"

namespace symclass {

namespace {

using Eigen::Vector3d;
constexpr double pi = std::numbers::pi;
// Angle used for "generic" twists: not a rational multiple of pi.
constexpr double generic_twist = 1.0;
// Largest denominator m for rational twists 2*pi*j/m.
constexpr int max_twist_denominator = 12;

std::vector<RotationAxis> compute_axes(const std::vector<Rotation>& elements) {
  std::vector<RotationAxis> axes;
  for (const auto& r : elements) {
    if (r.is_identity())
      continue;
    const Vector3d line = r.axis();
    auto it = std::find_if(axes.begin(), axes.end(),
                           [&](const RotationAxis& a) { return same_line(a.direction, line); });
    if (it == axes.end())
      axes.push_back({line, 2});
    else
      ++it->order;
  }
  return axes;
}

bool in_list(const std::vector<Rotation>& list, const Rotation& r) {
  return std::any_of(list.begin(), list.end(),
                     [&](const Rotation& x) { return x.approx_equal(r); });
}

bool is_half_turn(const Rotation& r) { return std::abs(r.quaternion().w()) <= 1e-7; }

Rotation random_rotation(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  Eigen::Quaterniond q;
  do {
    q = Eigen::Quaterniond(normal(rng), normal(rng), normal(rng), normal(rng));
  } while (q.norm() < 1e-6);
  return Rotation(q);
}

Vector3d random_axis(std::uint64_t seed, std::uint64_t index) {
  return random_rotation(seed, index).apply(Vector3d::UnitZ());
}

Vector3d perpendicular_to(const Vector3d& v) {
  const Vector3d trial = std::abs(v.normalized().x()) < 0.9 ? Vector3d::UnitX() : Vector3d::UnitY();
  return v.cross(trial).normalized();
}

// One axis per orbit of the group acting on its own axes.
std::vector<RotationAxis> axis_orbit_representatives(const FiniteGroup& g) {
  std::vector<RotationAxis> reps;
  std::vector<bool> covered(g.axes().size(), false);
  for (std::size_t i = 0; i < g.axes().size(); ++i) {
    if (covered[i])
      continue;
    reps.push_back(g.axes()[i]);
    for (const auto& r : g.elements()) {
      const Vector3d image = r.apply(g.axes()[i].direction);
      for (std::size_t j = 0; j < g.axes().size(); ++j)
        if (same_line(image, g.axes()[j].direction))
          covered[j] = true;
    }
  }
  return reps;
}

std::vector<double> twist_angles() {
  std::vector<double> angles{generic_twist};
  for (int m = 1; m <= max_twist_denominator; ++m)
    for (int j = 0; j < m; ++j)
      if (std::gcd(j, m) == 1 || (j == 0 && m == 1))
        angles.push_back(2 * pi * j / m);
  return angles;
}

// Conjugators g for which A ∩ gBg^-1 is worth inspecting.
std::vector<Rotation> structured_conjugators(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Rotation> out{Rotation()};
  const auto reps_a = axis_orbit_representatives(a);
  const auto reps_b = axis_orbit_representatives(b);
  static const std::vector<double> twists = twist_angles();

  for (const auto& u : reps_a) {
    for (const auto& v : reps_b) {
      for (double sign : {1.0, -1.0}) {
        const Rotation base = Rotation::mapping(v.direction, sign * u.direction);
        for (double t : twists)
          out.push_back(Rotation::about(u.direction, t) * base);
      }
      // Second axis pair with a matching angle fixes the conjugator.
      for (const auto& u2 : a.axes()) {
        if (same_line(u2.direction, u.direction))
          continue;
        const double cu = u.direction.dot(u2.direction);
        for (const auto& v2 : b.axes()) {
          if (same_line(v2.direction, v.direction))
            continue;
          const double cv = v.direction.dot(v2.direction);
          for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0})
              if (std::abs(s1 * s2 * cv - cu) < 1e-9)
                out.push_back(Rotation::aligning(s1 * v.direction, s2 * v2.direction,
                                                 u.direction, u2.direction));
        }
      }
    }
  }
  return out;
}

// Candidate axes for an axial group meeting a finite group.
std::vector<Vector3d> structured_axes(const FiniteGroup& g) {
  std::vector<Vector3d> out{Vector3d::UnitZ()};
  for (const auto& ax : g.axes()) {
    out.push_back(ax.direction);
    // Orthogonal to this axis only.
    out.push_back(Rotation::about(ax.direction, generic_twist).apply(perpendicular_to(ax.direction)));
    for (const auto& other : g.axes())
      if (!same_line(ax.direction, other.direction))
        out.push_back(ax.direction.cross(other.direction).normalized());
  }
  return out;
}

bool is_axial(const SubgroupClass& c) {
  return c.family() == Family::PlanarRotations || c.family() == Family::PlanarFull;
}

ClassSet sample_finite_pair(const SubgroupClass& ca, const SubgroupClass& cb, int trials,
                            std::uint64_t seed, bool structured) {
  const FiniteGroup a = build_group(ca);
  const FiniteGroup b = build_group(cb);
  ClassSet out;
  auto observe = [&](const Rotation& g) { out.insert(identify(intersect(a, b.conjugated_by(g)))); };

  for (int i = 0; i < trials; ++i)
    observe(random_rotation(seed, static_cast<std::uint64_t>(i)));
  if (structured) {
    for (const auto& g : structured_conjugators(a, b))
      observe(g);
    for (const auto& nc : named_conjugators())
      if ((nc.a == ca && nc.b == cb) || (nc.a == cb && nc.b == ca))
        observe(nc.g);
  }
  return out;
}

ClassSet sample_finite_axial(const SubgroupClass& finite, const SubgroupClass& axial, int trials,
                             std::uint64_t seed, bool structured) {
  const FiniteGroup g = build_group(finite);
  ClassSet out;
  auto observe = [&](const Vector3d& axis) {
    out.insert(identify(intersect(g, AxialGroup{axial, axis.normalized()})));
  };
  for (int i = 0; i < trials; ++i)
    observe(random_axis(seed, static_cast<std::uint64_t>(i)));
  if (structured)
    for (const auto& axis : structured_axes(g))
      observe(axis);
  return out;
}

ClassSet sample_axial_pair(const SubgroupClass& ca, const SubgroupClass& cb, int trials,
                           std::uint64_t seed, bool structured) {
  const AxialGroup a{ca, Vector3d::UnitZ()};
  ClassSet out;
  auto observe = [&](const Vector3d& axis) {
    out.insert(identify_axial_intersection(a, AxialGroup{cb, axis.normalized()}));
  };
  for (int i = 0; i < trials; ++i)
    observe(random_axis(seed, static_cast<std::uint64_t>(i)));
  if (structured) {
    observe(Vector3d::UnitZ());
    observe(Vector3d::UnitX());
    observe(Vector3d(1, 0, 1));
  }
  return out;
}

} // namespace

// FiniteGroup ---------------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<Rotation> elements, std::string description)
    : elements_(std::move(elements)), description_(std::move(description)),
      axes_(compute_axes(elements_)) {}

FiniteGroup FiniteGroup::generated_by(const std::vector<Rotation>& generators,
                                      std::string description) {
  std::vector<Rotation> elements{Rotation()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& gen : generators) {
      Rotation candidate = elements[next] * gen;
      if (!in_list(elements, candidate)) {
        elements.push_back(candidate);
        if (elements.size() > max_group_elements)
          throw OracleError("closure of '" + description + "' exceeded " +
                            std::to_string(max_group_elements) + " elements");
      }
    }
  }
  return FiniteGroup(std::move(elements), std::move(description));
}

FiniteGroup FiniteGroup::from_elements(std::vector<Rotation> elements, std::string description) {
  FiniteGroup g(std::move(elements), std::move(description));
  if (!g.is_closed())
    throw OracleError("element set '" + g.description_ + "' is not a group");
  return g;
}

bool FiniteGroup::contains(const Rotation& r) const { return in_list(elements_, r); }

bool FiniteGroup::is_closed() const {
  if (!contains(Rotation()))
    return false;
  for (const auto& x : elements_) {
    if (!contains(x.inverse()))
      return false;
    for (const auto& y : elements_)
      if (!contains(x * y))
        return false;
  }
  return true;
}

FiniteGroup FiniteGroup::conjugated_by(const Rotation& g) const {
  std::vector<Rotation> out;
  out.reserve(elements_.size());
  for (const auto& r : elements_)
    out.push_back(r.conjugated_by(g));
  return FiniteGroup(std::move(out), description_ + "^g");
}

// Construction ----------------------------------------------------------------

FiniteGroup build_group(const SubgroupClass& c) {
  const Vector3d x = Vector3d::UnitX();
  const Vector3d z = Vector3d::UnitZ();
  const Vector3d body_diagonal(1, 1, 1);
  const double phi = std::numbers::phi;

  switch (c.family()) {
  case Family::Identity:
    return FiniteGroup::generated_by({}, "1");
  case Family::Cyclic:
    return FiniteGroup::generated_by({Rotation::about(z, 2 * pi / c.n())}, c.name());
  case Family::Dihedral:
    return FiniteGroup::generated_by(
        {Rotation::about(z, 2 * pi / c.n()), Rotation::about(x, pi)}, c.name());
  case Family::Tetrahedral:
    return FiniteGroup::generated_by(
        {Rotation::about(body_diagonal, 2 * pi / 3), Rotation::about(z, pi)}, "T");
  case Family::Octahedral:
    return FiniteGroup::generated_by(
        {Rotation::about(z, pi / 2), Rotation::about(body_diagonal, 2 * pi / 3)}, "O");
  case Family::Icosahedral:
    // (0, phi, 1) passes through a face centre of the dodecahedron.
    return FiniteGroup::generated_by({Rotation::about(z, pi),
                                      Rotation::about(body_diagonal, 2 * pi / 3),
                                      Rotation::about(Vector3d(0, phi, 1), 2 * pi / 5)},
                                     "I");
  default:
    throw DomainError("cannot enumerate the continuous group " + c.name());
  }
}

// Intersection and identification ----------------------------------------------

FiniteGroup intersect(const FiniteGroup& g1, const FiniteGroup& g2) {
  std::vector<Rotation> common;
  for (const auto& r : g1.elements())
    if (g2.contains(r))
      common.push_back(r);
  return FiniteGroup::from_elements(std::move(common),
                                    g1.description() + " & " + g2.description());
}

FiniteGroup intersect(const FiniteGroup& g, const AxialGroup& axial) {
  const bool with_flips = axial.kind.family() == Family::PlanarFull;
  if (!with_flips && axial.kind.family() != Family::PlanarRotations)
    throw DomainError("axial group must be SO(2) or O(2), got " + axial.kind.name());
  const Vector3d a = axial.axis.normalized();
  std::vector<Rotation> common;
  for (const auto& r : g.elements()) {
    if (r.is_identity() || same_line(r.axis(), a) ||
        (with_flips && is_half_turn(r) && std::abs(r.axis().dot(a)) < 1e-7))
      common.push_back(r);
  }
  return FiniteGroup::from_elements(std::move(common), g.description() + " & " + axial.kind.name());
}

SubgroupClass identify_axial_intersection(const AxialGroup& a, const AxialGroup& b) {
  for (const auto* g : {&a, &b})
    if (!is_axial(g->kind))
      throw DomainError("axial group must be SO(2) or O(2), got " + g->kind.name());
  const bool a_full = a.kind.family() == Family::PlanarFull;
  const bool b_full = b.kind.family() == Family::PlanarFull;
  const Vector3d u = a.axis.normalized();
  const Vector3d v = b.axis.normalized();

  if (same_line(u, v))
    return a_full && b_full ? SubgroupClass::o2() : SubgroupClass::so2();
  const bool orthogonal = std::abs(u.dot(v)) < 1e-7;
  if (a_full && b_full)
    // Half-turn about u x v is in both; orthogonal axes add the half-turns
    // about u and v themselves.
    return orthogonal ? SubgroupClass::dihedral(2) : SubgroupClass::cyclic(2);
  if (a_full || b_full)
    // The SO(2) half-turn lies in the O(2) iff the axes are orthogonal.
    return orthogonal ? SubgroupClass::cyclic(2) : SubgroupClass::identity();
  return SubgroupClass::identity();
}

SubgroupClass identify(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto& axes = g.axes();
  if (n == 1)
    return SubgroupClass::identity();

  auto count_axes = [&](int order) {
    return std::count_if(axes.begin(), axes.end(),
                         [&](const RotationAxis& a) { return a.order == order; });
  };
  auto fail = [&]() -> SubgroupClass {
    throw OracleError("unclassifiable rotation set of order " + std::to_string(n) + " ('" +
                      g.description() + "')");
  };

  if (axes.size() == 1) {
    if (static_cast<std::size_t>(axes.front().order) != n)
      return fail();
    return SubgroupClass::cyclic(static_cast<int>(n));
  }

  const auto main = std::max_element(axes.begin(), axes.end(),
                                     [](const auto& l, const auto& r) { return l.order < r.order; });
  const int k = main->order;
  if (n == static_cast<std::size_t>(2 * k) && axes.size() == static_cast<std::size_t>(k + 1)) {
    const bool dihedral = std::all_of(axes.begin(), axes.end(), [&](const RotationAxis& a) {
      return &a == &*main ||
             (a.order == 2 && std::abs(a.direction.dot(main->direction)) < 1e-7);
    });
    if (dihedral)
      return SubgroupClass::dihedral(k);
  }
  if (n == 12 && count_axes(3) == 4 && count_axes(2) == 3)
    return SubgroupClass::tetrahedral();
  if (n == 24 && count_axes(4) == 3 && count_axes(3) == 4 && count_axes(2) == 6)
    return SubgroupClass::octahedral();
  if (n == 60 && count_axes(5) == 6 && count_axes(3) == 10 && count_axes(2) == 15)
    return SubgroupClass::icosahedral();
  return fail();
}

SubgroupClass conjugate_intersection(const SubgroupClass& a, const SubgroupClass& b,
                                     const Rotation& g) {
  return identify(intersect(build_group(a), build_group(b).conjugated_by(g)));
}

// Sampling ---------------------------------------------------------------------

ClassSet clips_sample(const SubgroupClass& a, const SubgroupClass& b, int trials,
                      std::uint64_t seed, bool structured) {
  if (trials < 0)
    throw DomainError("trials must be non-negative");
  if (a.family() == Family::Full)
    return {b};
  if (b.family() == Family::Full)
    return {a};
  if (a.is_finite() && b.is_finite())
    return sample_finite_pair(a, b, trials, seed, structured);
  if (a.is_finite())
    return sample_finite_axial(a, b, trials, seed, structured);
  if (b.is_finite())
    return sample_finite_axial(b, a, trials, seed, structured);
  return sample_axial_pair(a, b, trials, seed, structured);
}

std::vector<NamedConjugator> named_conjugators() {
  const Vector3d i = Vector3d::UnitX();
  const Vector3d k = Vector3d::UnitZ();
  const auto D4 = SubgroupClass::dihedral(4);
  const auto O = SubgroupClass::octahedral();
  return {
      {"D4 o D4, g = Q(k, pi/3)", D4, D4, Rotation::about(k, pi / 3), SubgroupClass::cyclic(4)},
      {"O o O, g = Q(i, pi/4)", O, O, Rotation::about(i, pi / 4), SubgroupClass::dihedral(4)},
      {"O o O, g = Q(k, pi/4) Q(i, pi/4)", O, O,
       Rotation::about(k, pi / 4) * Rotation::about(i, pi / 4), SubgroupClass::dihedral(2)},
  };
}

// Table verification -------------------------------------------------------------

std::size_t TableReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& p : pairs)
    total += p.violations.size();
  return total;
}

std::size_t TableReport::missing_count() const {
  std::size_t total = 0;
  for (const auto& p : pairs)
    total += p.missing.size();
  return total;
}

TableReport verify_table(int max_n, int trials, std::uint64_t seed, ClipsTable table) {
  if (max_n < 2)
    throw DomainError("max_n must be >= 2");
  if (max_n > max_axial_order)
    throw DomainError("max_n must be <= " + std::to_string(max_axial_order));
  if (trials < 0)
    throw DomainError("trials must be non-negative");

  std::vector<SubgroupClass> universe{SubgroupClass::identity()};
  for (int n = 2; n <= max_n; ++n)
    universe.push_back(SubgroupClass::cyclic(n));
  for (int n = 2; n <= max_n; ++n)
    universe.push_back(SubgroupClass::dihedral(n));
  for (auto c : {SubgroupClass::tetrahedral(), SubgroupClass::octahedral(),
                 SubgroupClass::icosahedral(), SubgroupClass::so2(), SubgroupClass::o2()})
    universe.push_back(c);

  TableReport report{max_n, trials, seed, table, {}};
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = i; j < universe.size(); ++j) {
      PairReport p{universe[i], universe[j], {}, {}, {}, {}};
      p.expected = clips_pair(p.a, p.b, table);
      p.observed = clips_sample(p.a, p.b, trials, seed);
      std::set_difference(p.expected.begin(), p.expected.end(), p.observed.begin(),
                          p.observed.end(), std::inserter(p.missing, p.missing.end()));
      std::set_difference(p.observed.begin(), p.observed.end(), p.expected.begin(),
                          p.expected.end(), std::inserter(p.violations, p.violations.end()));
      report.pairs.push_back(std::move(p));
    }
  }
  return report;
}

} // namespace symclass
