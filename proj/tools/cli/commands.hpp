#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anamorph/fap.hpp"
#include "anamorph/lexicon.hpp"

namespace anamorph::cli {

/// Everything a run depends on. Serialized into the header of every output
/// file; the worker count is left out because results never depend on it.
struct RunConfig {
  std::string language;
  std::filesystem::path train;
  std::filesystem::path dev;
  std::filesystem::path dev_wug;
  std::filesystem::path test_wug;
  std::string schema = "lemma,form,tag,rating?";
  std::string modifiers = utf8_encode(kDefaultModifiers);
  std::string separators = utf8_encode(kDefaultSeparators);

  std::size_t min_pair_coverage = 2;
  std::size_t min_form_coverage = 2;
  std::optional<std::size_t> exact_var_count = 1;
  double min_pair_fraction = 0.0;
  double min_form_fraction = 0.0;
  std::size_t column_cap = 2000;
  bool coarsen = true;
  bool per_tag = false;
  bool same_tag = false;

  std::string model = "m4";
  std::filesystem::path out;
  std::filesystem::path scores;
  std::filesystem::path judgments;
  std::filesystem::path report;
  std::filesystem::path mined;

  unsigned workers = 1;

  LoadOptions load_options() const;
  FapConfig fap_config() const;
  std::string to_json() const;
};

/// Default worker count: ANAMORPH_WORKERS if set, else `requested`, else the
/// hardware concurrency.
unsigned resolve_workers(std::optional<unsigned> requested);

/// SHA-256 over the listed files (path-independent: contents only, each
/// length-prefixed). Missing files hash as empty.
std::string input_digest(const std::vector<std::filesystem::path>& files);

/// Header lines, without the "# " prefix.
std::vector<std::string> run_header(const std::string& command, const RunConfig& config,
                                    const std::vector<std::filesystem::path>& inputs);

void cmd_stats(const RunConfig& config, std::ostream& out);
void cmd_mine(const RunConfig& config);
void cmd_score(const RunConfig& config, std::ostream& warnings);
void cmd_evaluate(const RunConfig& config, std::ostream& out);
void cmd_export_neural(const RunConfig& config);

}  // namespace anamorph::cli
