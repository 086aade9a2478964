// pcat: command-line front end for the partition / intertwiner toolkit.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pcat/cli.hpp"

namespace {

constexpr int kUsageExit = 64;

}  // namespace

int main(int argc, char** argv) {
  pcat::RunConfig cfg;
  std::string format = "json";
  std::string cache_dir;
  std::string out_path;

  CLI::App app{"Noncrossing partitions, outlines and generated intertwiner spaces"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Dimension of one leg");
    sub->add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };
  auto closure_flags = [&](CLI::App* sub) {
    sub->add_option("--max-legs", cfg.max_legs, "Largest reported number of legs");
    sub->add_option("--slack", cfg.slack, "Extra legs allowed for intermediates");
    sub->add_option("--cache-dir", cache_dir, "Cache directory (default: $PCAT_CACHE_DIR)");
    sub->add_option("--seed", cfg.seed, "Unused by exact verbs; accepted for uniform configs");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List noncrossing partitions or pairings");
  common(enumerate);
  enumerate->add_option("--k", cfg.k, "Upper points");
  enumerate->add_option("--l", cfg.l, "Lower points");
  enumerate->add_flag("--pairings", cfg.pairings, "Pairings only");
  enumerate->add_flag("--catalan-table", cfg.catalan_table, "Counts against Catalan numbers");
  enumerate->add_option("--max-points", cfg.max_points, "Largest k in the Catalan table");

  auto* dims = app.add_subcommand("dims", "Ranks of realized diagrams per signature");
  common(dims);
  dims->add_option("--max-points", cfg.max_points, "Largest number of points");
  dims->add_option("--k", cfg.k, "Only this upper count");
  dims->add_option("--l", cfg.l, "Only this lower count");
  dims->add_flag("--pairings", cfg.pairings, "Pairings only");
  dims->add_flag("--expect-independent", cfg.expect_independent, "Fail unless every family is independent");
  dims->add_flag("--homomorphism", cfg.homomorphism, "Check realize against compose/tensor/adjoint");

  auto* gram = app.add_subcommand("gram", "Gram matrices at n^2 against scaled outlines at n");
  common(gram);
  gram->add_option("--max-points", cfg.max_points, "Largest number of partition points");
  gram->add_option("--k", cfg.k, "Only this upper count");
  gram->add_option("--l", cfg.l, "Only this lower count");

  auto* fv = app.add_subcommand("fatten-verify", "Outline bijection and functoriality");
  common(fv);
  fv->add_option("--max-points", cfg.max_points, "Largest number of points for functoriality");

  auto* closure = app.add_subcommand("closure", "Saturate a generator preset");
  common(closure);
  closure_flags(closure);
  closure->add_option("--preset", cfg.preset, "o-plus, o-plus-bare, s-plus, o or o-minus");
  closure->add_option("--mode", cfg.mode, "plain or projective")->check(CLI::IsMember({"plain", "projective"}));

  auto* theorem = app.add_subcommand("theorem-t", "Projective generation by S and its sandwiched copy");
  common(theorem);
  closure_flags(theorem);
  theorem->add_option("--preset", cfg.preset, "o-plus, s-plus or o-plus-bare");

  auto* pupo = app.add_subcommand("pu-po", "Colored against uncolored pairings on alternating words");
  common(pupo);
  pupo->add_option("--max-legs", cfg.max_legs, "Largest number of legs for the span check");
  pupo->add_option("--max-points", cfg.max_points, "Largest number of points for the color check");

  auto* twisted = app.add_subcommand("twisted", "Twisted against untwisted projective closures");
  common(twisted);
  closure_flags(twisted);

  auto* classical = app.add_subcommand("classical-check", "Sampled orthogonal matrices");
  common(classical);
  classical->add_option("--samples", cfg.samples, "Number of samples");
  classical->add_option("--seed", cfg.seed, "First seed; sample i uses seed + i");
  classical->add_option("--tol", cfg.tolerance, "Tolerance");

  auto* cache = app.add_subcommand("cache", "List or clear cached closures");
  common(cache);
  cache->add_option("--cache-dir", cache_dir, "Cache directory (default: $PCAT_CACHE_DIR)");
  cache->add_flag("--clear", cfg.clear, "Remove the listed entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = pcat::format_from_string(format);
  if (!cache_dir.empty())
    cfg.cache_dir = cache_dir;
  else if (const char* env = std::getenv("PCAT_CACHE_DIR"); env && *env)
    cfg.cache_dir = env;

  try {
    if (out_path.empty()) return pcat::run(cfg, std::cout, std::cerr);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 74;
    }
    return pcat::run(cfg, out, std::cerr);
  } catch (const pcat::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 70;
  }
}
