#include "symclass/subgroup.hpp"

#include <charconv>
#include <ostream>

#include "symclass/error.hpp"

namespace symclass {

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

namespace {

void check_axial(int n) {
  if (n < 1)
    throw DomainError("subgroup parameter must be >= 1, got " + std::to_string(n));
  if (n > max_axial_order)
    throw DomainError("subgroup parameter " + std::to_string(n) + " exceeds the limit of " +
                      std::to_string(max_axial_order));
}

bool divides(int a, int b) { return b % a == 0; }

} // namespace

SubgroupClass SubgroupClass::cyclic(int n) {
  check_axial(n);
  return n == 1 ? identity() : SubgroupClass(Family::Cyclic, n);
}

SubgroupClass SubgroupClass::dihedral(int n) {
  check_axial(n);
  return n == 1 ? identity() : SubgroupClass(Family::Dihedral, n);
}

SubgroupClass SubgroupClass::make(Family family, int n) {
  switch (family) {
  case Family::Cyclic:
    return cyclic(n);
  case Family::Dihedral:
    return dihedral(n);
  default:
    return SubgroupClass(family, 0);
  }
}

SubgroupClass SubgroupClass::parse(std::string_view text) {
  static constexpr std::pair<std::string_view, Family> fixed[] = {
      {"1", Family::Identity},        {"T", Family::Tetrahedral},
      {"O", Family::Octahedral},      {"I", Family::Icosahedral},
      {"SO(2)", Family::PlanarRotations}, {"O(2)", Family::PlanarFull},
      {"SO(3)", Family::Full},
  };
  for (const auto& [name, family] : fixed)
    if (text == name)
      return SubgroupClass(family, 0);

  if (text.size() >= 2 && (text[0] == 'Z' || text[0] == 'D')) {
    int n = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && text[1] != '+' && text[1] != '-') {
      if (n < 1 || n > max_axial_order)
        throw DomainError("subgroup parameter out of range in '" + std::string(text) + "'");
      return text[0] == 'Z' ? cyclic(n) : dihedral(n);
    }
  }
  throw ParseError("unknown subgroup class '" + std::string(text) + "'", 0,
                   {"1", "Z<n>", "D<n>", "T", "O", "I", "SO(2)", "O(2)", "SO(3)"});
}

int SubgroupClass::group_order() const noexcept {
  switch (family_) {
  case Family::Identity:
    return 1;
  case Family::Cyclic:
    return n_;
  case Family::Dihedral:
    return 2 * n_;
  case Family::Tetrahedral:
    return 12;
  case Family::Octahedral:
    return 24;
  case Family::Icosahedral:
    return 60;
  default:
    return 0;
  }
}

std::string SubgroupClass::name() const {
  switch (family_) {
  case Family::Identity:
    return "1";
  case Family::Cyclic:
    return "Z" + std::to_string(n_);
  case Family::Dihedral:
    return "D" + std::to_string(n_);
  case Family::Tetrahedral:
    return "T";
  case Family::Octahedral:
    return "O";
  case Family::Icosahedral:
    return "I";
  case Family::PlanarRotations:
    return "SO(2)";
  case Family::PlanarFull:
    return "O(2)";
  case Family::Full:
    return "SO(3)";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const SubgroupClass& c) { return os << c.name(); }

std::string format_classes(const ClassSet& classes) {
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty())
      out += ' ';
    out += c.name();
  }
  return out;
}

ClassSet& merge_into(ClassSet& target, const ClassSet& source) {
  target.insert(source.begin(), source.end());
  return target;
}

bool is_subset(const ClassSet& small, const ClassSet& big) {
  for (const auto& c : small)
    if (!big.contains(c))
      return false;
  return true;
}

bool contains(const SubgroupClass& big, const SubgroupClass& small) {
  if (big == small || big.family() == Family::Full || small.family() == Family::Identity)
    return true;

  const int m = small.n();
  const int n = big.n();
  switch (small.family()) {
  case Family::Cyclic:
    switch (big.family()) {
    case Family::Cyclic:
      return divides(m, n);
    case Family::Dihedral:
      return m == 2 || divides(m, n);
    case Family::Tetrahedral:
      return m == 2 || m == 3;
    case Family::Octahedral:
      return m == 2 || m == 3 || m == 4;
    case Family::Icosahedral:
      return m == 2 || m == 3 || m == 5;
    case Family::PlanarRotations:
    case Family::PlanarFull:
      return true;
    default:
      return false;
    }
  case Family::Dihedral:
    switch (big.family()) {
    case Family::Dihedral:
      return divides(m, n);
    case Family::Tetrahedral:
      return m == 2;
    case Family::Octahedral:
      return m == 2 || m == 3 || m == 4;
    case Family::Icosahedral:
      return m == 2 || m == 3 || m == 5;
    case Family::PlanarFull:
      return true;
    default:
      return false;
    }
  case Family::Tetrahedral:
    return big.family() == Family::Octahedral || big.family() == Family::Icosahedral;
  case Family::PlanarRotations:
    return big.family() == Family::PlanarFull;
  default:
    // O, I, O(2) and SO(3) are only contained in themselves and SO(3).
    return false;
  }
}

} // namespace symclass
