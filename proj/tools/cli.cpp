#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "symclass/classes.hpp"
#include "symclass/error.hpp"
#include "symclass/json_io.hpp"
#include "symclass/oracle.hpp"
#include "symclass/space_expr.hpp"

namespace symclass::cli {

namespace {

struct Options {
  bool json = false;
  int max_n = 8;
  int trials = 200;
  std::uint64_t seed = 0;
  std::string table = "geometric";
  std::string expr;
  std::string class_a;
  std::string class_b;
  int k = 0;
};

constexpr const char* description =
    "Harmonic decompositions and symmetry classes of even-order tensor spaces.\n\n"
    "Spaces are written with V, H(k), Sym(n), G(n), S2(...), the presets\n"
    "Ela Photo Flex Fgr Ces Sgr, '*' for tensor products and '+' for direct sums.\n"
    "Quote expressions containing '*' or parentheses, e.g.\n"
    "  symclass classes 'S2(Sym(2)*Sym(2))'";

std::string closed_form_text(ClosedForm f) {
  switch (f) {
  case ClosedForm::SymmetricSpace:
    return "S (totally symmetric)";
  case ClosedForm::GenericSpace:
    return "G (generic)";
  case ClosedForm::None:
    break;
  }
  return "none";
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int decompose(const Options& o, std::ostream& out) {
  const SpaceExpr e = parse_space(o.expr);
  const Isotypic iso = evaluate(e);
  if (o.json) {
    print(out, to_json(iso));
    return Success;
  }
  out << e.str() << " = " << iso.str() << '\n';
  out << std::setw(6) << "order" << std::setw(14) << "multiplicity" << '\n';
  for (const auto& [k, m] : iso.terms())
    out << std::setw(6) << k << std::setw(14) << m << '\n';
  out << "dimension " << iso.dimension() << '\n';
  return Success;
}

int classes(const Options& o, std::ostream& out) {
  const ClassReport r = classify_space(parse_space(o.expr), {parse_clips_table(o.table)});
  if (o.json) {
    print(out, to_json(r));
    return Success;
  }
  out << "expr           " << r.expr.str() << '\n'
      << "isotypic       " << r.isotypic.str() << '\n'
      << "order          " << r.order << '\n'
      << "count          " << r.count() << '\n'
      << "classes        " << format_classes(r.classes) << '\n'
      << "even harmonic  " << (r.even_harmonic ? "yes" : "no") << '\n'
      << "closed form    " << closed_form_text(r.closed_form) << '\n';
  return Success;
}

int clips(const Options& o, std::ostream& out) {
  const auto a = SubgroupClass::parse(o.class_a);
  const auto b = SubgroupClass::parse(o.class_b);
  const ClipsTable table = parse_clips_table(o.table);
  const ClassSet result = clips_pair(a, b, table);
  if (o.json) {
    Json j;
    j["pair"] = Json::array({a.name(), b.name()});
    j["table"] = std::string(to_string(table));
    j["classes"] = to_json(result);
    print(out, j);
    return Success;
  }
  out << format_classes(result) << '\n';
  return Success;
}

int irreducible(const Options& o, std::ostream& out) {
  const ClassSet result = irreducible_classes(o.k);
  if (o.json) {
    Json j;
    j["k"] = o.k;
    j["classes"] = to_json(result);
    j["count"] = result.size();
    print(out, j);
    return Success;
  }
  out << format_classes(result) << '\n';
  return Success;
}

int verify(const Options& o, std::ostream& out, std::ostream& err) {
  const TableReport r = verify_table(o.max_n, o.trials, o.seed, parse_clips_table(o.table));
  if (o.json) {
    print(out, to_json(r));
  } else {
    out << "table " << to_string(r.table) << ", max-n " << r.max_n << ", trials " << r.trials
        << ", seed " << r.seed << '\n';
    for (const auto& p : r.pairs) {
      if (p.violations.empty() && p.missing.empty())
        continue;
      out << p.a.name() << " o " << p.b.name() << ":";
      if (!p.violations.empty())
        out << " unexpected {" << format_classes(p.violations) << "}";
      if (!p.missing.empty())
        out << " unrealized {" << format_classes(p.missing) << "}";
      out << '\n';
    }
    out << r.pairs.size() << " pairs, " << r.violation_count() << " violations, "
        << r.missing_count() << " unrealized\n";
  }
  if (!r.ok()) {
    err << "error: oracle: " << r.violation_count() << " table violations, " << r.missing_count()
        << " unrealized table classes\n";
    return OracleFailure;
  }
  return Success;
}

int presets(const Options& o, std::ostream& out) {
  Json list = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(7) << "name" << std::setw(26) << "expansion" << std::setw(11)
       << "dimension" << "classes" << '\n';
  for (Preset p : all_presets) {
    const SpaceExpr e = SpaceExpr::preset(p);
    const ClassReport r = classify_space(e, {parse_clips_table(o.table)});
    const std::string expansion = e.expansion().str();
    const auto dim = r.isotypic.dimension();
    Json j;
    j["name"] = std::string(preset_name(p));
    j["expansion"] = expansion;
    j["dimension"] = dim;
    j["count"] = r.count();
    list.push_back(std::move(j));
    text << std::setw(7) << preset_name(p) << std::setw(26) << expansion << std::setw(11) << dim
         << r.count() << '\n';
  }
  if (o.json)
    print(out, list);
  else
    out << text.str();
  return Success;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items)
    out += (out.empty() ? "" : ", ") + s;
  return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{description, "symclass"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--max-n", o.max_n, "Largest n of Z_n and D_n in verify-table")->capture_default_str();
  app.add_option("--trials", o.trials, "Random conjugators per pair in verify-table")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for verify-table")->capture_default_str();
  app.add_option("--table", o.table, "Clips table: geometric or published")->capture_default_str();

  auto* cmd = app.add_subcommand("decompose", "Isotypic decomposition of a space");
  cmd->add_option("expr", o.expr, "Space expression")->required();
  cmd = app.add_subcommand("classes", "Symmetry classes of an even-order space");
  cmd->add_option("expr", o.expr, "Space expression")->required();
  cmd = app.add_subcommand("clips", "Clips product of two subgroup classes");
  cmd->add_option("A", o.class_a, "Class name: 1, Zn, Dn, T, O, I, SO(2), O(2), SO(3)")->required();
  cmd->add_option("B", o.class_b, "Class name")->required();
  cmd = app.add_subcommand("irreducible", "Symmetry classes of the harmonic space H(k)");
  cmd->add_option("k", o.k, "Harmonic order")->required();
  app.add_subcommand("verify-table", "Check the clips table against the rotation oracle");
  app.add_subcommand("presets", "List the built-in spaces");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return DomainFailure;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "decompose")
      return decompose(o, out);
    if (name == "classes")
      return classes(o, out);
    if (name == "clips")
      return clips(o, out);
    if (name == "irreducible")
      return irreducible(o, out);
    if (name == "verify-table")
      return verify(o, out, err);
    return presets(o, out);
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what();
    if (!e.expected().empty())
      err << " (expected one of: " << join(e.expected()) << ")";
    err << '\n';
    return DomainFailure;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return DomainFailure;
  } catch (const OracleError& e) {
    err << "error: oracle: " << e.what() << '\n';
    return OracleFailure;
  }
}

} // namespace symclass::cli
