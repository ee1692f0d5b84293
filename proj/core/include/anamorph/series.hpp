#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "anamorph/lexicon.hpp"
#include "anamorph/pattern.hpp"

namespace anamorph {

/// Lemma (always first) and inflected form with the inflected form's tag.
struct FormPair {
  PhonemeSeq lemma;
  PhonemeSeq form;
  std::string tag;

  auto operator<=>(const FormPair&) const = default;
};

enum class Side { kFirst = 1, kSecond = 2 };

/// Analogical series: all pairs sharing one BAP.
class BapIndex;
struct IndexOptions;

class BapClass {
 public:
  BapClass() = default;
  BapClass(AlternationPattern bap, std::string tag) : bap_(std::move(bap)), tag_(std::move(tag)) {}

  const AlternationPattern& bap() const noexcept { return bap_; }
  /// Non-empty only for per-tag indexes.
  const std::string& tag() const noexcept { return tag_; }
  /// Distinct (lemma, form, tag) triples, sorted.
  const std::vector<FormPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Column with multiplicity, aligned with pairs().
  std::vector<PhonemeSeq> column(Side side) const;
  /// Column deduplicated by form, sorted.
  std::vector<PhonemeSeq> distinct_column(Side side) const;

  std::size_t count_with_tag(std::string_view tag) const;

 private:
  friend BapIndex index_by_bap(std::span<const FormPair>, const IndexOptions&);

  AlternationPattern bap_;
  std::string tag_;
  std::vector<FormPair> pairs_;
};

struct IndexOptions {
  bool per_tag = false;
  unsigned workers = 1;
};

/// Map from BAP (and tag, for per-tag indexes) to its analogical series.
/// Iteration follows the canonical pattern order.
class BapIndex {
 public:
  struct Key {
    AlternationPattern bap;
    std::string tag;
    auto operator<=>(const Key&) const = default;
  };
  using Map = std::map<Key, BapClass>;

  BapIndex() = default;

  const Map& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  bool empty() const noexcept { return classes_.empty(); }
  bool per_tag() const noexcept { return per_tag_; }

  const BapClass* find(const AlternationPattern& bap, std::string_view tag = {}) const;
  /// Σ|Φ| over classes.
  std::size_t pair_count() const;

 private:
  friend BapIndex index_by_bap(std::span<const FormPair>, const IndexOptions&);

  Map classes_;
  bool per_tag_ = false;
};

BapIndex index_by_bap(std::span<const FormPair> pairs, const IndexOptions& options = {});
BapIndex index_by_bap(const Dataset& dataset, const IndexOptions& options = {});

std::vector<FormPair> form_pairs(const Dataset& dataset);

/// Forms of one column of the series, with multiplicity.
std::vector<PhonemeSeq> class_similar_forms(const BapClass& series, Side side);

/// "bap<TAB>pair_count<TAB>col1_count<TAB>col2_count" (plus a tag column
/// for per-tag indexes). Column counts are distinct forms.
std::string export_classes_tsv(const BapIndex& index, const PhonemeInventory& inventory);

}  // namespace anamorph
