#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "anamorph/lexicon.hpp"
#include "anamorph/series.hpp"

namespace anamorph {

struct WugScore {
  std::string lemma;
  std::string form;
  std::string tag;
  double score = 0.0;
};

/// Type frequency of the wug pair's BAP among the training pairs. With
/// `same_tag`, only training pairs carrying the wug's tag are counted.
std::size_t m4_score(const FormPair& wug, const BapIndex& train_index, bool same_tag = false);

enum class ScoreModel { kM4 };

struct ScoreOptions {
  ScoreModel model = ScoreModel::kM4;
  bool same_tag = false;
  std::u32string separators{kDefaultSeparators};
};

/// Scores every test row in file order. Rows that cannot be tokenized with
/// the training inventory score 0 and add a warning.
std::vector<WugScore> score_rows(const Dataset& train, const BapIndex& train_index, const RawTable& test,
                                 const ScoreOptions& options, std::vector<std::string>* warnings = nullptr);

/// Writes "lemma<TAB>form<TAB>tag<TAB>score" rows with six decimals after
/// the given header lines (each prefixed with "# ").
void write_scores(const std::filesystem::path& path, std::span<const WugScore> scores,
                  std::span<const std::string> header = {});
std::string format_scores(std::span<const WugScore> scores, std::span<const std::string> header = {});

/// Reads a score file; '#' lines are skipped.
std::vector<WugScore> read_scores(const std::filesystem::path& path);

std::vector<std::string> score_file(const Dataset& train, const RawTable& test, const ScoreOptions& options,
                                    const std::filesystem::path& out_path,
                                    std::span<const std::string> header = {});

}  // namespace anamorph
