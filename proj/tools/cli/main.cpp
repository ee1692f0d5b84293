#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "anamorph/error.hpp"
#include "cli/commands.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

void add_lexicon_flags(CLI::App& cmd, anamorph::cli::RunConfig& config) {
  cmd.add_option("--language", config.language, "Language label (e.g. ENG)");
  cmd.add_option("--schema", config.schema, "Column layout, e.g. lemma,form,tag,rating?")->capture_default_str();
  cmd.add_option("--modifiers", config.modifiers, "Characters glued onto the preceding base character");
  cmd.add_option("--separators", config.separators, "Particle separators")->capture_default_str();
}

void add_dataset_flags(CLI::App& cmd, anamorph::cli::RunConfig& config) {
  cmd.add_option("--train", config.train, "Training data (a)");
  cmd.add_option("--dev", config.dev, "Attested development data (b)");
  cmd.add_option("--dev-wug", config.dev_wug, "Wug development data with judgments (c)");
  cmd.add_option("--test-wug", config.test_wug, "Wug test data (d)");
}

}  // namespace

int main(int argc, char** argv) {
  anamorph::cli::RunConfig config;
  std::optional<unsigned> workers;
  std::optional<std::size_t> var_count = 1;
  bool any_var_count = false;

  CLI::App app{"anamorph: analogical alternation patterns for inflectional lexicons"};
  app.require_subcommand(1);
  app.add_option("--workers", workers, "Worker threads (ANAMORPH_WORKERS overrides)");

  auto* stats = app.add_subcommand("stats", "Dataset statistics (entries, phonemes, tags, syncretism)");
  add_dataset_flags(*stats, config);
  add_lexicon_flags(*stats, config);

  auto* mine = app.add_subcommand("mine", "Mine BAPs and FAPs over the union of the four datasets");
  add_dataset_flags(*mine, config);
  add_lexicon_flags(*mine, config);
  mine->add_option("--out", config.out, "Output directory")->required();
  mine->add_option("--min-pair-cov", config.min_pair_coverage, "Minimum joint pair coverage")->capture_default_str();
  mine->add_option("--min-form-cov", config.min_form_coverage, "Minimum column form coverage")->capture_default_str();
  mine->add_option("--var-count", var_count, "Exact number of variables per FAP side")->capture_default_str();
  mine->add_flag("--any-var-count", any_var_count, "Accept FAPs with any number of variables");
  mine->add_option("--min-pair-frac", config.min_pair_fraction, "Minimum pair coverage as a share of the series");
  mine->add_option("--min-form-frac", config.min_form_fraction, "Minimum form coverage as a share of the column");
  mine->add_option("--column-cap", config.column_cap, "Forms per column used for WP harvesting")
      ->capture_default_str();
  mine->add_flag("!--no-coarsen", config.coarsen, "Do not add one-variable skeletons of harvested WPs");
  mine->add_flag("--per-tag", config.per_tag, "Split analogical series by tag");

  auto* score = app.add_subcommand("score", "Score wug forms");
  score->add_option("model", config.model, "Scoring model")->check(CLI::IsMember({"m4"}))->required();
  score->add_option("--train", config.train, "Training data (a)")->required();
  score->add_option("--test", config.test_wug, "Wug file to score")->required();
  score->add_option("--out", config.out, "Score file")->required();
  score->add_flag("--same-tag", config.same_tag, "Count only training pairs with the wug's tag");
  add_lexicon_flags(*score, config);

  auto* evaluate = app.add_subcommand("evaluate", "Correlate scores with human judgments");
  evaluate->add_option("--scores", config.scores, "Score file")->required();
  evaluate->add_option("--judgments", config.judgments, "Judgment file (lemma, form, tag, rating)")->required();
  evaluate->add_option("--report", config.report, "JSON report path");

  auto* neural = app.add_subcommand("export-neural", "Write the symbol vocabulary for the neural models");
  neural->add_option("--mined", config.mined, "Output directory of `mine`")->required();
  neural->add_option("--out", config.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  config.workers = anamorph::cli::resolve_workers(workers);
  config.exact_var_count = any_var_count ? std::nullopt : var_count;
  try {
    if (stats->parsed()) anamorph::cli::cmd_stats(config, std::cout);
    if (mine->parsed()) anamorph::cli::cmd_mine(config);
    if (score->parsed()) anamorph::cli::cmd_score(config, std::cerr);
    if (evaluate->parsed()) anamorph::cli::cmd_evaluate(config, std::cout);
    if (neural->parsed()) anamorph::cli::cmd_export_neural(config);
  } catch (const anamorph::Error& e) {
    std::cerr << "error (" << anamorph::to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
