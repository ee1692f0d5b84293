#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anamorph/lexicon.hpp"
#include "anamorph/score.hpp"

namespace anamorph {

/// Product-moment correlation. Throws kUndefinedCorrelation for fewer than
/// two points, mismatched lengths or a constant vector.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// 1-based ranks; ties share the mean of their positions.
std::vector<double> mid_ranks(std::span<const double> values);

double spearman(std::span<const double> xs, std::span<const double> ys);

struct LemmaCorrelation {
  std::string lemma;
  std::size_t n = 0;
  std::optional<double> pearson;  // unset when undefined for this lemma
};

struct EvalReport {
  std::size_t n = 0;
  double pearson = 0.0;
  double spearman = 0.0;
  std::vector<LemmaCorrelation> per_lemma;  // sorted by lemma
  std::size_t unmatched = 0;                // rows of either table left out of the join
};

/// Inner join on (lemma, form, tag). Rows sharing a key are averaged on
/// their side first, so row order never matters. Throws kEmptyJoin when
/// nothing matches.
EvalReport evaluate(std::span<const WugScore> scored, std::span<const Judgment> judgments);

std::string report_json(const EvalReport& report);

}  // namespace anamorph
