#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "anamorph/pattern.hpp"
#include "anamorph/series.hpp"

namespace anamorph {

struct FapConfig {
  std::size_t min_pair_coverage = 2;
  std::size_t min_form_coverage = 2;
  /// Unset means any variable count is accepted.
  std::optional<std::size_t> exact_var_count = 1;
  /// Optional relative thresholds (share of Φ, Φ₁, Φ₂); the effective
  /// threshold is the larger of the absolute and relative one.
  double min_pair_fraction = 0.0;
  double min_form_fraction = 0.0;
  /// Columns with more distinct forms only harvest WPs from the first
  /// `column_cap` forms in canonical order.
  std::size_t column_cap = 2000;
  /// With exact_var_count == 1, commonality patterns with several variables
  /// also contribute their skeleton.
  bool coarsen = true;
  bool per_tag = false;
  unsigned workers = 1;
};

/// A word pattern harvested from a column, with the number of distinct
/// column forms and of column entries (pairs) it matches.
struct WpCoverage {
  WordPattern wp;
  std::size_t covered_forms = 0;
  std::size_t covered_pairs = 0;

  auto operator<=>(const WpCoverage&) const = default;
};

/// Harvests commonality patterns from every unordered pair of distinct forms
/// of the column (multiplicity counts towards covered_pairs only). WPs
/// covering fewer than two forms are dropped. Sorted by pattern.
std::vector<WpCoverage> column_wps(std::span<const PhonemeSeq> column,
                                   std::size_t column_cap = SIZE_MAX);

struct FapCandidate {
  WordPattern first;
  WordPattern second;
  std::size_t first_forms = 0;  // covered_forms of `first` in Φ₁
  std::size_t second_forms = 0;
  std::size_t pair_coverage = 0;
  std::size_t score = 0;  // |first| + |second| once global frequencies are known
  std::vector<std::uint32_t> matched_pairs;  // indexes into the class pairs

  AlternationPattern pattern() const { return {first, second}; }
  std::size_t literal_length() const { return first.literal_length() + second.literal_length(); }
};

/// Candidates (p, q) whose WP-level BAP equals the class BAP, with joint
/// pair coverage over Φ. Every p x q combination is examined.
std::vector<FapCandidate> align_wps(const BapClass& series, std::span<const WpCoverage> wps1,
                                    std::span<const WpCoverage> wps2);

/// Keeps candidates that reach the coverage thresholds and the exact
/// variable count. `series_size`/`column sizes` feed the relative thresholds.
std::vector<FapCandidate> screen_candidates(std::span<const FapCandidate> candidates, const FapConfig& config,
                                            std::size_t pair_total = 0, std::size_t col1_total = 0,
                                            std::size_t col2_total = 0);

/// |X|: number of form pairs of the whole dataset that satisfy a screened
/// candidate containing the word pattern X.
using WpFrequency = std::map<WordPattern, std::size_t>;

struct FapAssignment {
  FormPair pair;
  AlternationPattern fap;
  std::size_t score = 0;
};

/// Highest |P|+|Q| among the candidates matching both forms; ties go to the
/// longer total literal, then the smaller pattern in symbol order.
std::optional<FapAssignment> select_fap(const FormPair& pair, std::span<const FapCandidate> candidates,
                                        const WpFrequency& frequency);

struct ClassReport {
  AlternationPattern bap;
  std::string tag;
  std::size_t pairs = 0;
  std::size_t col1_forms = 0;
  std::size_t col2_forms = 0;
  std::size_t wps1 = 0;
  std::size_t wps2 = 0;
  std::size_t candidates = 0;  // aligned with non-zero pair coverage
  std::size_t screened = 0;
  std::size_t assigned = 0;
  /// Selected FAP -> number of pairs it was assigned to.
  std::map<AlternationPattern, std::size_t> usage;
};

struct MiningResult {
  std::map<FormPair, FapAssignment> assignments;
  std::vector<ClassReport> classes;  // index order
  WpFrequency frequency;
};

MiningResult mine_faps(const BapIndex& index, const FapConfig& config = {});
MiningResult mine_faps(const Dataset& union_dataset, const FapConfig& config = {});

}  // namespace anamorph
