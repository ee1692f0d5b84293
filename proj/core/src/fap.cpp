#include "anamorph/fap.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <unordered_map>

#include "anamorph/parallel.hpp"

namespace anamorph {

namespace {

std::size_t threshold(std::size_t absolute, double fraction, std::size_t total) {
  const auto relative = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(total)));
  return std::max(absolute, relative);
}

std::vector<PhonemeSeq> sorted_unique(std::span<const PhonemeSeq> column) {
  std::vector<PhonemeSeq> out(column.begin(), column.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<WordPattern> harvest(std::span<const PhonemeSeq> forms, std::size_t cap, bool coarsen) {
  const std::size_t n = std::min(cap, forms.size());
  std::set<WordPattern> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      WordPattern wp = commonality_pattern(forms[i], forms[j]);
      if (coarsen && wp.var_count() > 1) out.insert(skeleton(wp));
      out.insert(std::move(wp));
    }
  }
  return out;
}

// A column's harvested WPs with an inverted index form -> matching WPs.
struct ColumnAnalysis {
  std::vector<PhonemeSeq> forms;  // distinct, sorted
  std::vector<WpCoverage> wps;    // sorted by pattern
  std::vector<std::vector<std::uint32_t>> wps_of_form;

  std::size_t form_index(PhonemeView form) const {
    return static_cast<std::size_t>(std::lower_bound(forms.begin(), forms.end(), form,
                                                     [](const PhonemeSeq& a, PhonemeView b) { return a < b; }) -
                                    forms.begin());
  }
};

ColumnAnalysis analyse_column(std::span<const PhonemeSeq> column, std::size_t cap,
                              std::optional<std::size_t> var_filter, std::size_t min_forms, bool coarsen) {
  ColumnAnalysis out;
  out.forms = sorted_unique(column);
  std::vector<std::size_t> multiplicity(out.forms.size(), 0);
  for (const PhonemeSeq& f : column) ++multiplicity[out.form_index(f)];

  std::vector<WordPattern> patterns;
  for (const WordPattern& wp : harvest(out.forms, cap, coarsen)) {
    if (!var_filter || wp.var_count() == *var_filter) patterns.push_back(wp);
  }

  // matched[w] = distinct form indexes covered by pattern w.
  std::vector<std::vector<std::uint32_t>> matched(patterns.size());
  if (var_filter && *var_filter == 1) {
    std::unordered_map<WordPattern, std::uint32_t> lookup;
    for (std::uint32_t w = 0; w < patterns.size(); ++w) lookup.emplace(patterns[w], w);
    for (std::uint32_t f = 0; f < out.forms.size(); ++f) {
      const PhonemeSeq& form = out.forms[f];
      const std::size_t len = form.size();
      PhonemeSeq key;
      for (std::size_t head = 0; head < len; ++head) {
        for (std::size_t tail = 0; head + tail < len; ++tail) {
          key.assign(form, 0, head);
          key.push_back(kVarSymbol);
          key.append(form, len - tail, tail);
          const auto it = lookup.find(WordPattern(key));
          if (it != lookup.end()) matched[it->second].push_back(f);
        }
      }
    }
  } else {
    for (std::uint32_t w = 0; w < patterns.size(); ++w) {
      for (std::uint32_t f = 0; f < out.forms.size(); ++f) {
        if (is_match(patterns[w], out.forms[f])) matched[w].push_back(f);
      }
    }
  }

  out.wps_of_form.resize(out.forms.size());
  for (std::size_t w = 0; w < patterns.size(); ++w) {
    if (matched[w].size() < std::max<std::size_t>(min_forms, 2)) continue;
    std::size_t pairs = 0;
    const auto kept = static_cast<std::uint32_t>(out.wps.size());
    for (const std::uint32_t f : matched[w]) {
      pairs += multiplicity[f];
      out.wps_of_form[f].push_back(kept);
    }
    out.wps.push_back({patterns[w], matched[w].size(), pairs});
  }
  return out;
}

bool better(const FapCandidate& a, const FapCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.literal_length() != b.literal_length()) return a.literal_length() > b.literal_length();
  return std::tie(a.first, a.second) < std::tie(b.first, b.second);
}

bool var_count_ok(const FapCandidate& c, const FapConfig& config) {
  const std::size_t vars = c.first.var_count();
  if (vars != c.second.var_count()) return false;
  return !config.exact_var_count || vars == *config.exact_var_count;
}

struct ClassWork {
  const BapClass* series = nullptr;
  ClassReport report;
  std::vector<FapCandidate> screened;
};

// Candidates of one class, generated from the pairs so that combinations
// with zero joint coverage are never materialized.
void mine_class(ClassWork& work, const FapConfig& config) {
  const BapClass& series = *work.series;
  const auto& pairs = series.pairs();
  const auto col1 = series.column(Side::kFirst);
  const auto col2 = series.column(Side::kSecond);
  ClassReport& report = work.report;
  report.bap = series.bap();
  report.tag = series.tag();
  report.pairs = pairs.size();

  const std::size_t distinct1 = sorted_unique(col1).size();
  const std::size_t distinct2 = sorted_unique(col2).size();
  report.col1_forms = distinct1;
  report.col2_forms = distinct2;

  const std::size_t pair_min = std::max<std::size_t>(threshold(config.min_pair_coverage, config.min_pair_fraction,
                                                               pairs.size()), 1);
  if (pairs.size() < pair_min || distinct1 < 2 || distinct2 < 2) return;

  const std::size_t form_min1 = threshold(config.min_form_coverage, config.min_form_fraction, distinct1);
  const std::size_t form_min2 = threshold(config.min_form_coverage, config.min_form_fraction, distinct2);
  const bool coarsen = config.coarsen && config.exact_var_count == std::size_t{1};
  const ColumnAnalysis side1 = analyse_column(col1, config.column_cap, config.exact_var_count, form_min1, coarsen);
  const ColumnAnalysis side2 = analyse_column(col2, config.column_cap, config.exact_var_count, form_min2, coarsen);
  report.wps1 = side1.wps.size();
  report.wps2 = side2.wps.size();
  if (side1.wps.empty() || side2.wps.empty()) return;

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> joint;
  const std::uint64_t stride = side2.wps.size();
  for (std::uint32_t t = 0; t < pairs.size(); ++t) {
    const auto& ps = side1.wps_of_form[side1.form_index(pairs[t].lemma)];
    const auto& qs = side2.wps_of_form[side2.form_index(pairs[t].form)];
    for (const std::uint32_t p : ps) {
      for (const std::uint32_t q : qs) joint[p * stride + q].push_back(t);
    }
  }
  report.candidates = 0;

  std::vector<FapCandidate> kept;
  for (auto& [key, matched] : joint) {
    const WpCoverage& p = side1.wps[key / stride];
    const WpCoverage& q = side2.wps[key % stride];
    FapCandidate c{p.wp, q.wp, p.covered_forms, q.covered_forms, matched.size(), 0, {}};
    if (!var_count_ok(c, config)) continue;
    if (ap_of_wps(p.wp, q.wp) != series.bap()) continue;
    ++report.candidates;
    if (c.pair_coverage < pair_min) continue;
    c.matched_pairs = std::move(matched);
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(),
            [](const FapCandidate& a, const FapCandidate& b) { return std::tie(a.first, a.second) < std::tie(b.first, b.second); });
  report.screened = kept.size();
  work.screened = std::move(kept);
}

}  // namespace

std::vector<WpCoverage> column_wps(std::span<const PhonemeSeq> column, std::size_t column_cap) {
  return analyse_column(column, column_cap, std::nullopt, 2, false).wps;
}

std::vector<FapCandidate> align_wps(const BapClass& series, std::span<const WpCoverage> wps1,
                                    std::span<const WpCoverage> wps2) {
  std::vector<FapCandidate> out;
  const auto& pairs = series.pairs();
  for (const WpCoverage& p : wps1) {
    for (const WpCoverage& q : wps2) {
      if (p.wp.var_count() != q.wp.var_count()) continue;
      if (ap_of_wps(p.wp, q.wp) != series.bap()) continue;
      FapCandidate c{p.wp, q.wp, p.covered_forms, q.covered_forms, 0, 0, {}};
      for (std::uint32_t t = 0; t < pairs.size(); ++t) {
        if (is_match(p.wp, pairs[t].lemma) && is_match(q.wp, pairs[t].form)) c.matched_pairs.push_back(t);
      }
      c.pair_coverage = c.matched_pairs.size();
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<FapCandidate> screen_candidates(std::span<const FapCandidate> candidates, const FapConfig& config,
                                            std::size_t pair_total, std::size_t col1_total,
                                            std::size_t col2_total) {
  const std::size_t pair_min = threshold(config.min_pair_coverage, config.min_pair_fraction, pair_total);
  const std::size_t form_min1 = threshold(config.min_form_coverage, config.min_form_fraction, col1_total);
  const std::size_t form_min2 = threshold(config.min_form_coverage, config.min_form_fraction, col2_total);
  std::vector<FapCandidate> out;
  for (const FapCandidate& c : candidates) {
    if (c.pair_coverage < pair_min || c.first_forms < form_min1 || c.second_forms < form_min2) continue;
    if (!var_count_ok(c, config)) continue;
    out.push_back(c);
  }
  return out;
}

std::optional<FapAssignment> select_fap(const FormPair& pair, std::span<const FapCandidate> candidates,
                                        const WpFrequency& frequency) {
  auto freq = [&](const WordPattern& wp) {
    const auto it = frequency.find(wp);
    return it == frequency.end() ? std::size_t{0} : it->second;
  };
  std::optional<FapCandidate> best;
  for (const FapCandidate& c : candidates) {
    if (!is_match(c.first, pair.lemma) || !is_match(c.second, pair.form)) continue;
    FapCandidate scored = c;
    scored.score = freq(c.first) + freq(c.second);
    if (!best || better(scored, *best)) best = std::move(scored);
  }
  if (!best) return std::nullopt;
  return FapAssignment{pair, best->pattern(), best->score};
}

MiningResult mine_faps(const BapIndex& index, const FapConfig& config) {
  std::vector<ClassWork> work;
  work.reserve(index.size());
  for (const auto& [key, series] : index.classes()) work.push_back({&series, {}, {}});

  parallel_for(work.size(), config.workers, [&](std::size_t i) { mine_class(work[i], config); });

  // |X| sums, class by class, the pairs covered by any screened candidate
  // that contains X. Classes hold disjoint pairs.
  MiningResult result;
  for (const ClassWork& w : work) {
    std::map<WordPattern, std::vector<std::uint32_t>> covered;
    for (const FapCandidate& c : w.screened) {
      auto& a = covered[c.first];
      a.insert(a.end(), c.matched_pairs.begin(), c.matched_pairs.end());
      if (c.second != c.first) {
        auto& b = covered[c.second];
        b.insert(b.end(), c.matched_pairs.begin(), c.matched_pairs.end());
      }
    }
    for (auto& [wp, ids] : covered) {
      std::sort(ids.begin(), ids.end());
      result.frequency[wp] += static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
    }
  }

  std::vector<std::vector<FapAssignment>> chosen(work.size());
  parallel_for(work.size(), config.workers, [&](std::size_t i) {
    ClassWork& w = work[i];
    for (FapCandidate& c : w.screened) c.score = result.frequency.at(c.first) + result.frequency.at(c.second);
    const auto& pairs = w.series->pairs();
    std::vector<const FapCandidate*> best(pairs.size(), nullptr);
    for (const FapCandidate& c : w.screened) {
      for (const std::uint32_t t : c.matched_pairs) {
        if (!best[t] || better(c, *best[t])) best[t] = &c;
      }
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (!best[t]) continue;
      chosen[i].push_back({pairs[t], best[t]->pattern(), best[t]->score});
      ++w.report.usage[best[t]->pattern()];
    }
    w.report.assigned = chosen[i].size();
  });

  for (std::size_t i = 0; i < work.size(); ++i) {
    for (FapAssignment& a : chosen[i]) {
      FormPair key = a.pair;
      result.assignments.emplace(std::move(key), std::move(a));
    }
    result.classes.push_back(std::move(work[i].report));
  }
  return result;
}

MiningResult mine_faps(const Dataset& union_dataset, const FapConfig& config) {
  return mine_faps(index_by_bap(union_dataset, {config.per_tag, config.workers}), config);
}

}  // namespace anamorph
