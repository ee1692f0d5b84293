#include "anamorph/series.hpp"

#include <algorithm>
#include <sstream>

#include "anamorph/parallel.hpp"

namespace anamorph {

std::vector<PhonemeSeq> BapClass::column(Side side) const {
  std::vector<PhonemeSeq> out;
  out.reserve(pairs_.size());
  for (const FormPair& p : pairs_) out.push_back(side == Side::kFirst ? p.lemma : p.form);
  return out;
}

std::vector<PhonemeSeq> BapClass::distinct_column(Side side) const {
  std::vector<PhonemeSeq> out = column(side);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t BapClass::count_with_tag(std::string_view tag) const {
  return static_cast<std::size_t>(
      std::count_if(pairs_.begin(), pairs_.end(), [&](const FormPair& p) { return p.tag == tag; }));
}

const BapClass* BapIndex::find(const AlternationPattern& bap, std::string_view tag) const {
  const auto it = classes_.find(Key{bap, std::string(per_tag_ ? tag : std::string_view{})});
  return it == classes_.end() ? nullptr : &it->second;
}

std::size_t BapIndex::pair_count() const {
  std::size_t total = 0;
  for (const auto& [key, series] : classes_) total += series.size();
  return total;
}

BapIndex index_by_bap(std::span<const FormPair> pairs, const IndexOptions& options) {
  std::vector<FormPair> distinct(pairs.begin(), pairs.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<AlternationPattern> baps(distinct.size());
  parallel_for(distinct.size(), options.workers, [&](std::size_t i) {
    // Syncretic triples that share (lemma, form) sit next to each other.
    if (i > 0 && distinct[i - 1].lemma == distinct[i].lemma && distinct[i - 1].form == distinct[i].form) return;
    baps[i] = bap(distinct[i].lemma, distinct[i].form);
  });
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    if (distinct[i - 1].lemma == distinct[i].lemma && distinct[i - 1].form == distinct[i].form) baps[i] = baps[i - 1];
  }

  BapIndex index;
  index.per_tag_ = options.per_tag;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    BapIndex::Key key{baps[i], options.per_tag ? distinct[i].tag : std::string{}};
    auto it = index.classes_.find(key);
    if (it == index.classes_.end()) {
      it = index.classes_.emplace(key, BapClass(key.bap, key.tag)).first;
    }
    it->second.pairs_.push_back(std::move(distinct[i]));
  }
  return index;
}

std::vector<FormPair> form_pairs(const Dataset& dataset) {
  std::vector<FormPair> out;
  out.reserve(dataset.size());
  for (const LexEntry& e : dataset.entries()) out.push_back({e.lemma, e.form, e.tag});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BapIndex index_by_bap(const Dataset& dataset, const IndexOptions& options) {
  const auto pairs = form_pairs(dataset);
  return index_by_bap(pairs, options);
}

std::vector<PhonemeSeq> class_similar_forms(const BapClass& series, Side side) { return series.column(side); }

std::string export_classes_tsv(const BapIndex& index, const PhonemeInventory& inventory) {
  std::ostringstream out;
  for (const auto& [key, series] : index.classes()) {
    out << render(series.bap(), inventory) << '\t' << series.size() << '\t'
        << series.distinct_column(Side::kFirst).size() << '\t' << series.distinct_column(Side::kSecond).size();
    if (index.per_tag()) out << '\t' << series.tag();
    out << '\n';
  }
  return out.str();
}

}  // namespace anamorph
