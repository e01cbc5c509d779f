#include "nmval/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nmval/chain.hpp"
#include "nmval/errors.hpp"
#include "nmval/export.hpp"
#include "nmval/filters.hpp"
#include "nmval/formula.hpp"
#include "nmval/free_algebra.hpp"
#include "nmval/models.hpp"
#include "nmval/valuations.hpp"

namespace nmval::cli {

namespace {

struct AlgebraArgs {
  std::optional<int> vars;
  std::string variant = "nm";
  std::size_t cap = FreeAlgebra::kDefaultCap;
};

void add_algebra_options(CLI::App* sub, AlgebraArgs& args) {
  sub->add_option("--vars,-n", args.vars, "Number of variables (default: highest variable index in the formulas, 0 without formulas)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--variant", args.variant, "nm or nm-")->check(CLI::IsMember({"nm", "nm-"}));
  sub->add_option("--cap", args.cap, "Element cap for the free-algebra build")->check(CLI::PositiveNumber);
}

FreeAlgebra build_for(const AlgebraArgs& args, int inferred) {
  return FreeAlgebra::build(args.vars.value_or(inferred), parse_variant(args.variant), args.cap);
}

// "x1=1/2" or "x1=1/2,x2=1"
std::map<int, Rational> parse_bindings(const std::vector<std::string>& specs) {
  std::map<int, Rational> out;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq < 2 || item[0] != 'x')
        throw SemanticError("malformed binding '" + item + "' (expected x<k>=<rational>)");
      int var = 0;
      try {
        var = std::stoi(item.substr(1, eq - 1));
      } catch (const std::exception&) {
        throw SemanticError("malformed binding '" + item + "'");
      }
      if (var < 1) throw SemanticError("variable index must be >= 1 in '" + item + "'");
      out[var] = Rational::parse(item.substr(eq + 1));
    }
  }
  return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw SemanticError("cannot open '" + path + "' for writing");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent Minimum logic: evaluation, free algebras and valuations"};
  app.name(args.empty() ? "nmval" : args.front());
  app.require_subcommand(1);

  std::function<int()> action;

  // eval
  std::string eval_formula;
  std::optional<int> eval_chain_size;
  bool eval_standard_flag = false;
  std::vector<std::string> eval_assign;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula in a finite chain or in [0,1]");
  eval_cmd->add_option("formula", eval_formula)->required();
  auto* chain_opt = eval_cmd->add_option("--chain", eval_chain_size, "Chain size k >= 2")->check(CLI::Range(2, 1 << 20));
  auto* std_opt = eval_cmd->add_flag("--standard", eval_standard_flag, "Evaluate in the standard algebra [0,1]");
  chain_opt->excludes(std_opt);
  eval_cmd->add_option("--assign,-a", eval_assign, "Bindings such as x1=1/2 (repeatable or comma separated)");
  eval_cmd->callback([&] {
    action = [&]() -> int {
      const Formula f = parse(eval_formula);
      const auto bindings = parse_bindings(eval_assign);
      if (eval_chain_size) {
        const Chain c(*eval_chain_size);
        ChainAssignment a;
        for (auto [var, r] : bindings) {
          const Rational scaled = r * Rational(c.top());
          if (!scaled.is_integer() || scaled.num() < 0 || scaled.num() > c.top())
            throw SemanticError("value " + r.str() + " for x" + std::to_string(var) + " is not in the chain of size " +
                                std::to_string(c.size()));
          a[var] = value(c, static_cast<int>(scaled.num()));
        }
        out << eval_chain(f, c, a).as_rational() << "\n";
      } else {
        out << eval_standard(f, bindings) << "\n";
      }
      return kYes;
    };
  });

  // chi / chi-plus
  std::string chi_formula;
  AlgebraArgs chi_args;
  auto add_chi = [&](const char* name, const char* help, bool idempotent) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("formula", chi_formula)->required();
    add_algebra_options(sub, chi_args);
    sub->callback([&, idempotent] {
      action = [&, idempotent]() -> int {
        const Formula f = parse(chi_formula);
        const FreeAlgebra a = build_for(chi_args, max_variable(f));
        const ElementId x = a.element_of(f);
        out << (idempotent ? idempotent_euler_char(a, x) : euler_char(a, x)) << "\n";
        return kYes;
      };
    });
  };
  add_chi("chi", "Euler characteristic of a formula", false);
  add_chi("chi-plus", "Idempotent Euler characteristic of a formula", true);

  // count-models
  std::string count_formula;
  std::optional<int> count_vars;
  int count_values = 3;
  auto* count_cmd = app.add_subcommand("count-models", "Count assignments into {0,1/2,1} or {0,1} sending a formula to 1");
  count_cmd->add_option("formula", count_formula)->required();
  count_cmd->add_option("--vars,-n", count_vars)->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--values", count_values, "3 or 2")->check(CLI::IsMember({3, 2}));
  count_cmd->callback([&] {
    action = [&]() -> int {
      const Formula f = parse(count_formula);
      const auto space = count_values == 3 ? AssignmentSpace::Three : AssignmentSpace::Two;
      out << count_models(f, count_vars.value_or(max_variable(f)), space) << "\n";
      return kYes;
    };
  });

  // build / export / filters
  AlgebraArgs build_args;
  std::string export_format = "json";
  std::string out_path;
  auto* build_cmd = app.add_subcommand("build", "Build a free algebra and report its size");
  add_algebra_options(build_cmd, build_args);
  build_cmd->callback([&] {
    action = [&]() -> int {
      const FreeAlgebra a = build_for(build_args, 0);
      out << a.size() << " elements\n";
      return kYes;
    };
  });
  auto* export_cmd = app.add_subcommand("export", "Write a free algebra as JSON or as a DOT Hasse diagram");
  add_algebra_options(export_cmd, build_args);
  export_cmd->add_option("--format", export_format)->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--out,-o", out_path, "Output file (default: stdout)");
  export_cmd->callback([&] {
    action = [&]() -> int {
      const FreeAlgebra a = build_for(build_args, 0);
      write_output(export_format == "json" ? export_json(a).dump(2) + "\n" : hasse_dot(a), out_path, out);
      return kYes;
    };
  });
  auto* filters_cmd = app.add_subcommand("filters", "Write the forest of prime filters as DOT");
  add_algebra_options(filters_cmd, build_args);
  filters_cmd->add_option("--out,-o", out_path, "Output file (default: stdout)");
  filters_cmd->callback([&] {
    action = [&]() -> int {
      const FreeAlgebra a = build_for(build_args, 0);
      write_output(forest_dot(a), out_path, out);
      return kYes;
    };
  });

  // tautology / proves
  std::string taut_formula;
  std::string proves_premise;
  std::string proves_conclusion;
  AlgebraArgs taut_args;
  auto* taut_cmd = app.add_subcommand("tautology", "Decide whether a formula is a tautology");
  taut_cmd->add_option("formula", taut_formula)->required();
  add_algebra_options(taut_cmd, taut_args);
  taut_cmd->callback([&] {
    action = [&]() -> int {
      const Formula f = parse(taut_formula);
      const GenericGrid grid(taut_args.vars.value_or(max_variable(f)), parse_variant(taut_args.variant));
      const bool yes = is_tautology(grid, f);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? kYes : kNo;
    };
  });
  auto* proves_cmd = app.add_subcommand("proves", "Decide whether the first formula proves the second");
  proves_cmd->add_option("premise", proves_premise)->required();
  proves_cmd->add_option("conclusion", proves_conclusion)->required();
  add_algebra_options(proves_cmd, taut_args);
  proves_cmd->callback([&] {
    action = [&]() -> int {
      const Formula phi = parse(proves_premise);
      const Formula psi = parse(proves_conclusion);
      const GenericGrid grid(taut_args.vars.value_or(std::max(max_variable(phi), max_variable(psi))),
                             parse_variant(taut_args.variant));
      const bool yes = proves(grid, phi, psi);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? kYes : kNo;
    };
  });

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kYes : kParseError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  }
}

}  // namespace nmval::cli
