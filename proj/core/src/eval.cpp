#include "anamorph/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "anamorph/error.hpp"

namespace anamorph {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::kUndefinedCorrelation, "vectors differ in length (" + std::to_string(xs.size()) + " vs " +
                                                      std::to_string(ys.size()) + ")");
  }
  const std::size_t n = xs.size();
  if (n < 2) throw Error(ErrorKind::kUndefinedCorrelation, "correlation needs at least two points");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorKind::kUndefinedCorrelation, "zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> mid_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) return pearson(xs, ys);  // reports the length mismatch
  const auto rx = mid_ranks(xs);
  const auto ry = mid_ranks(ys);
  return pearson(rx, ry);
}

namespace {

using Key = std::tuple<std::string, std::string, std::string>;

struct Mean {
  double sum = 0.0;
  std::size_t rows = 0;
  double value() const { return sum / static_cast<double>(rows); }
};

}  // namespace

EvalReport evaluate(std::span<const WugScore> scored, std::span<const Judgment> judgments) {
  std::map<Key, Mean> scores;
  for (const WugScore& s : scored) {
    Mean& m = scores[{s.lemma, s.form, s.tag}];
    m.sum += s.score;
    ++m.rows;
  }
  std::map<Key, Mean> ratings;
  for (const Judgment& j : judgments) {
    Mean& m = ratings[{j.lemma, j.form, j.tag}];
    m.sum += j.rating;
    ++m.rows;
  }

  EvalReport report;
  std::vector<double> xs;
  std::vector<double> ys;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by_lemma;
  for (const auto& [key, rating] : ratings) {
    const auto it = scores.find(key);
    if (it == scores.end()) {
      report.unmatched += rating.rows;
      continue;
    }
    xs.push_back(it->second.value());
    ys.push_back(rating.value());
    auto& [lx, ly] = by_lemma[std::get<0>(key)];
    lx.push_back(it->second.value());
    ly.push_back(rating.value());
  }
  for (const auto& [key, score] : scores) {
    if (!ratings.contains(key)) report.unmatched += score.rows;
  }
  if (xs.empty()) throw Error(ErrorKind::kEmptyJoin, "no scored row matches a judgment on (lemma, form, tag)");

  report.n = xs.size();
  report.pearson = pearson(xs, ys);
  report.spearman = spearman(xs, ys);
  for (const auto& [lemma, vectors] : by_lemma) {
    LemmaCorrelation row{lemma, vectors.first.size(), std::nullopt};
    try {
      row.pearson = pearson(vectors.first, vectors.second);
    } catch (const Error&) {
    }
    report.per_lemma.push_back(std::move(row));
  }
  return report;
}

std::string report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["pearson"] = report.pearson;
  j["spearman"] = report.spearman;
  j["per_lemma"] = nlohmann::ordered_json::array();
  for (const LemmaCorrelation& row : report.per_lemma) {
    nlohmann::ordered_json r;
    r["lemma"] = row.lemma;
    r["n"] = row.n;
    r["pearson"] = row.pearson ? nlohmann::ordered_json(*row.pearson) : nlohmann::ordered_json(nullptr);
    j["per_lemma"].push_back(std::move(r));
  }
  j["unmatched"] = report.unmatched;
  return j.dump(2) + "\n";
}

}  // namespace anamorph
