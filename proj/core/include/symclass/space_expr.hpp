#pragma once

// Tensor spaces described by their index-symmetry structure.
//
//   expr := sum
//   sum  := prod { "+" prod }
//   prod := atom { "*" atom }
//   atom := "V" | "H(" INT ")" | "Sym(" INT ")" | "S2(" expr ")" | "G(" INT ")"
//         | PRESET | "(" expr ")"
//
// Whitespace is ignored. '*' binds tighter than '+', both associate left.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "symclass/isotypic.hpp"

namespace symclass {

enum class Preset { Ela, Photo, Flex, Fgr, Ces, Sgr };

inline constexpr std::array<Preset, 6> all_presets = {
    Preset::Ela, Preset::Photo, Preset::Flex, Preset::Fgr, Preset::Ces, Preset::Sgr};

std::string_view preset_name(Preset p);
std::optional<Preset> find_preset(std::string_view name);

// Upper bounds on INT arguments.
inline constexpr int max_space_order = 64;
inline constexpr int max_generic_order = 32;

class SpaceExpr {
public:
  enum class Kind { Vector, Harmonic, SymPower, Generic, TensorProduct, SymSquare, DirectSum, Preset };

  static SpaceExpr vector();
  static SpaceExpr harmonic(int k);
  static SpaceExpr sym_power(int n);
  static SpaceExpr generic(int n);
  static SpaceExpr tensor(SpaceExpr lhs, SpaceExpr rhs);
  static SpaceExpr sym_square(SpaceExpr inner);
  static SpaceExpr direct_sum(SpaceExpr lhs, SpaceExpr rhs);
  static SpaceExpr preset(Preset p);

  Kind kind() const noexcept;
  // Argument of Harmonic, SymPower and Generic; 0 otherwise.
  int param() const noexcept;
  // Children of binary nodes (lhs only for SymSquare). Throws
  // std::logic_error on leaves.
  const SpaceExpr& lhs() const;
  const SpaceExpr& rhs() const;
  Preset preset_id() const;
  // Closed expression a preset stands for.
  SpaceExpr expansion() const;

  // Canonical text; parse_space(e.str()) == e.
  std::string str() const;

  friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

private:
  struct Node;
  static std::shared_ptr<const Node> make_node(Kind kind, int param = 0, Preset preset = Preset::Ela,
                                               std::optional<SpaceExpr> lhs = std::nullopt,
                                               std::optional<SpaceExpr> rhs = std::nullopt);
  explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Throws ParseError with the byte offset of the offending token and the
// tokens that would have been accepted there; DomainError for INT arguments
// beyond the bounds above.
SpaceExpr parse_space(std::string_view text);

Isotypic evaluate(const SpaceExpr& e);

} // namespace symclass
