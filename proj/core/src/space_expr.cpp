#include "symclass/space_expr.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symclass/error.hpp"

namespace symclass {

struct SpaceExpr::Node {
  Kind kind;
  int param = 0;
  Preset preset = Preset::Ela;
  std::optional<SpaceExpr> lhs;
  std::optional<SpaceExpr> rhs;
};

namespace {

constexpr std::array<std::string_view, 6> preset_names = {"Ela", "Photo", "Flex", "Fgr", "Ces", "Sgr"};

void check_param(int n, int bound, const char* what) {
  if (n < 0 || n > bound)
    throw DomainError(std::string(what) + " argument must be in 0.." + std::to_string(bound) +
                      ", got " + std::to_string(n));
}

} // namespace

std::string_view preset_name(Preset p) { return preset_names.at(static_cast<std::size_t>(p)); }

std::optional<Preset> find_preset(std::string_view name) {
  for (Preset p : all_presets)
    if (preset_name(p) == name)
      return p;
  return std::nullopt;
}

std::shared_ptr<const SpaceExpr::Node> SpaceExpr::make_node(Kind kind, int param, Preset preset,
                                                            std::optional<SpaceExpr> lhs,
                                                            std::optional<SpaceExpr> rhs) {
  return std::make_shared<const Node>(Node{kind, param, preset, std::move(lhs), std::move(rhs)});
}

SpaceExpr SpaceExpr::vector() { return SpaceExpr(make_node(Kind::Vector)); }

SpaceExpr SpaceExpr::harmonic(int k) {
  check_param(k, max_space_order, "H");
  return SpaceExpr(make_node(Kind::Harmonic, k));
}

SpaceExpr SpaceExpr::sym_power(int n) {
  check_param(n, max_space_order, "Sym");
  return SpaceExpr(make_node(Kind::SymPower, n));
}

SpaceExpr SpaceExpr::generic(int n) {
  check_param(n, max_generic_order, "G");
  return SpaceExpr(make_node(Kind::Generic, n));
}

SpaceExpr SpaceExpr::tensor(SpaceExpr lhs, SpaceExpr rhs) {
  return SpaceExpr(make_node(Kind::TensorProduct, 0, Preset::Ela, std::move(lhs), std::move(rhs)));
}

SpaceExpr SpaceExpr::sym_square(SpaceExpr inner) {
  return SpaceExpr(make_node(Kind::SymSquare, 0, Preset::Ela, std::move(inner), std::nullopt));
}

SpaceExpr SpaceExpr::direct_sum(SpaceExpr lhs, SpaceExpr rhs) {
  return SpaceExpr(make_node(Kind::DirectSum, 0, Preset::Ela, std::move(lhs), std::move(rhs)));
}

SpaceExpr SpaceExpr::preset(Preset p) {
  return SpaceExpr(make_node(Kind::Preset, 0, p));
}

SpaceExpr::Kind SpaceExpr::kind() const noexcept { return node_->kind; }
int SpaceExpr::param() const noexcept { return node_->param; }

const SpaceExpr& SpaceExpr::lhs() const {
  if (!node_->lhs)
    throw std::logic_error("space expression has no operand");
  return *node_->lhs;
}

const SpaceExpr& SpaceExpr::rhs() const {
  if (!node_->rhs)
    throw std::logic_error("space expression has no right operand");
  return *node_->rhs;
}

Preset SpaceExpr::preset_id() const {
  if (node_->kind != Kind::Preset)
    throw std::logic_error("space expression is not a preset");
  return node_->preset;
}

SpaceExpr SpaceExpr::expansion() const {
  const SpaceExpr s2 = sym_power(2);
  switch (preset_id()) {
  case Preset::Ela:
    return sym_square(s2);
  case Preset::Photo:
    return tensor(s2, s2);
  case Preset::Flex:
    return tensor(tensor(s2, vector()), vector());
  case Preset::Fgr:
    return sym_square(tensor(s2, vector()));
  case Preset::Ces:
    return tensor(s2, tensor(s2, s2));
  case Preset::Sgr:
    return sym_square(tensor(s2, s2));
  }
  throw std::logic_error("unknown preset");
}

std::string SpaceExpr::str() const {
  switch (kind()) {
  case Kind::Vector:
    return "V";
  case Kind::Harmonic:
    return "H(" + std::to_string(param()) + ")";
  case Kind::SymPower:
    return "Sym(" + std::to_string(param()) + ")";
  case Kind::Generic:
    return "G(" + std::to_string(param()) + ")";
  case Kind::Preset:
    return std::string(preset_name(preset_id()));
  case Kind::SymSquare:
    return "S2(" + lhs().str() + ")";
  case Kind::DirectSum: {
    // '+' is left-associative, so only a right-hand sum needs parentheses.
    std::string right = rhs().str();
    if (rhs().kind() == Kind::DirectSum)
      right = "(" + right + ")";
    return lhs().str() + "+" + right;
  }
  case Kind::TensorProduct: {
    std::string left = lhs().str();
    std::string right = rhs().str();
    if (lhs().kind() == Kind::DirectSum)
      left = "(" + left + ")";
    if (rhs().kind() == Kind::DirectSum || rhs().kind() == Kind::TensorProduct)
      right = "(" + right + ")";
    return left + "*" + right;
  }
  }
  throw std::logic_error("unknown space expression kind");
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind() || a.param() != b.param())
    return false;
  switch (a.kind()) {
  case SpaceExpr::Kind::Preset:
    return a.preset_id() == b.preset_id();
  case SpaceExpr::Kind::SymSquare:
    return a.lhs() == b.lhs();
  case SpaceExpr::Kind::TensorProduct:
  case SpaceExpr::Kind::DirectSum:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  default:
    return true;
  }
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpaceExpr parse() {
    SpaceExpr e = sum();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'", {"+", "*", "end of input"});
    return e;
  }

private:
  static const std::vector<std::string>& atom_starts() {
    static const std::vector<std::string> starts = {"V",   "H(",  "Sym(", "S2(",  "G(",  "Ela", "Photo",
                                                    "Flex", "Fgr", "Ces",  "Sgr", "("};
    return starts;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError(message + " at offset " + std::to_string(pos_), pos_, std::move(expected));
  }

  std::string found() const {
    return pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
  }

  void expect(char c) {
    if (!accept(c))
      fail("expected '" + std::string(1, c) + "', found " + found(), {std::string(1, c)});
  }

  SpaceExpr sum() {
    SpaceExpr e = prod();
    while (accept('+'))
      e = SpaceExpr::direct_sum(std::move(e), prod());
    return e;
  }

  SpaceExpr prod() {
    SpaceExpr e = atom();
    while (accept('*'))
      e = SpaceExpr::tensor(std::move(e), atom());
    return e;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer, found " + found(), {"INT"});
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc())
      throw DomainError("integer out of range at offset " + std::to_string(start));
    (void)ptr;
    return value;
  }

  template <class Make>
  SpaceExpr int_call(Make make) {
    expect('(');
    const int n = integer();
    expect(')');
    return make(n);
  }

  SpaceExpr atom() {
    skip_space();
    const std::size_t start = pos_;
    if (accept('(')) {
      SpaceExpr e = sum();
      expect(')');
      return e;
    }
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty())
      fail("expected a space, found " + found(), atom_starts());
    if (word == "V")
      return SpaceExpr::vector();
    if (word == "H")
      return int_call(SpaceExpr::harmonic);
    if (word == "Sym")
      return int_call(SpaceExpr::sym_power);
    if (word == "G")
      return int_call(SpaceExpr::generic);
    if (word == "S2") {
      expect('(');
      SpaceExpr inner = sum();
      expect(')');
      return SpaceExpr::sym_square(std::move(inner));
    }
    if (auto p = find_preset(word))
      return SpaceExpr::preset(*p);
    pos_ = start;
    fail("unknown identifier '" + std::string(word) + "'", atom_starts());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

SpaceExpr parse_space(std::string_view text) { return Parser(text).parse(); }

Isotypic evaluate(const SpaceExpr& e) {
  using Kind = SpaceExpr::Kind;
  switch (e.kind()) {
  case Kind::Vector:
    return Isotypic::harmonic(1);
  case Kind::Harmonic:
    return Isotypic::harmonic(e.param());
  case Kind::SymPower:
    return sym_power_vector(e.param());
  case Kind::Generic:
    return generic(e.param());
  case Kind::TensorProduct:
    return tensor(evaluate(e.lhs()), evaluate(e.rhs()));
  case Kind::SymSquare:
    return sym_square(evaluate(e.lhs()));
  case Kind::DirectSum:
    return evaluate(e.lhs()) + evaluate(e.rhs());
  case Kind::Preset:
    return evaluate(e.expansion());
  }
  throw std::logic_error("unknown space expression kind");
}

} // namespace symclass
