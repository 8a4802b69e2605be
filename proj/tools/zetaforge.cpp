#include <CLI11.hpp>

#include <iostream>

#include "zetaforge/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"zetaforge: zeta functions of schemes at negative integers"};
  app.require_subcommand(1);

  zetaforge::Command cmd;
  cmd.precision = zetaforge::default_precision();

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* opt_n = sub->add_option("-n", cmd.n, "negative integer s = n");
    if (needs_n) opt_n->required();
    sub->add_option("--precision", cmd.precision, "decimal digits (default 50, env ZETAFORGE_PRECISION)");
    sub->add_option("--format", cmd.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--series-order", cmd.series_order, "series order K (default 10)");
  };

  struct Verb {
    const char* name;
    const char* help;
    bool needs_n;
  };
  const Verb verbs[] = {
      {"zeta", "print the factorization of zeta(X, s)", false},
      {"ord", "analytic and conjectural vanishing orders at s = n", true},
      {"value", "leading Taylor coefficient at s = n", true},
      {"verify-c", "|zeta(X, n)| against the Weil-etale order product", true},
      {"verify-vo", "vanishing order against equivariant Euler characteristics", true},
      {"trace-check", "zeta series against point counts", false},
      {"ell-check", "l-adic valuation identity", true},
      {"p-check", "p-adic valuation of zeta(X, n) vanishes", true},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    const bool is_ord = std::string(v.name) == "ord";
    auto* expr = sub->add_option("expr", cmd.target, "scheme expression");
    if (!is_ord) expr->required();
    add_common(sub, v.needs_n);
    if (is_ord) sub->add_option("--hodge", cmd.hodge, "inline Hodge data JSON");
    if (std::string(v.name) == "ell-check") sub->add_option("--ell", cmd.ell, "prime l (default: all l <= 50)");
  }
  CLI::App* det = app.add_subcommand("det", "determinant and cohomology of a complex file");
  det->add_option("file", cmd.target, "complex JSON file")->required();
  add_common(det, false);
  CLI::App* batch = app.add_subcommand("batch", "run the verification battery over a manifest");
  batch->add_option("--manifest", cmd.manifest, "manifest of '<n> <expr>' lines")->required();
  add_common(batch, false);

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  cmd.verb = chosen->get_name();
  if (cmd.verb == "ord" && !cmd.hodge && cmd.target.empty()) {
    std::cerr << "ord needs an expression or --hodge\n";
    return 2;
  }

  const zetaforge::Outcome out = zetaforge::run(cmd);
  std::cout << out.render(cmd.format);
  return out.exit_code;
}
