#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "anamorph/lexicon.hpp"
#include "anamorph/series.hpp"
#include "oracle.hpp"

namespace fixtures {

using Row = std::array<std::string, 3>;

inline anamorph::RawTable table_of(const std::vector<Row>& rows,
                                   anamorph::Source source = anamorph::Source::kTrain) {
  anamorph::RawTable table{"<memory>", source, {}};
  std::size_t line = 0;
  for (const Row& r : rows) table.rows.push_back({r[0], r[1], r[2], std::nullopt, ++line});
  return table;
}

inline anamorph::Dataset dataset_of(const std::vector<Row>& rows) {
  const std::vector<anamorph::RawTable> tables{table_of(rows)};
  return anamorph::make_dataset(tables);
}

// Infinitive/participle rows of the German series used throughout the tests.
inline std::vector<Row> anspielen_rows() {
  return {
      {"anʃpiːlən", "anʃpiːlət", "V;IND;PST;2;PL"},   {"anʃpiːlən", "anʃpiːltə", "V;SBJV;PST;1;SG"},
      {"anʃpiːlən", "anʃpiːlt", "V;IMP;2;PL"},        {"anʃpiːlən", "anʃpiːlə", "V;IMP;2;SG"},
      {"anʃpiːlən", "anʃpiːləst", "V;SBJV;PST;2;SG"}, {"anʃpiːlən", "anʃpiːlst", "V;IND;PRS;2;SG"},
      {"anʃpiːlən", "anʃpiːlənt", "V.PTCP;PRS"},
  };
}

inline std::vector<Row> other_verb_rows() {
  return {
      {"tariːfiːrən", "tariːfiːrənt", "V.PTCP;PRS"}, {"tariːfiːrən", "tariːfiːrtən", "V;SBJV;PST;3;PL"},
      {"astən", "astənt", "V.PTCP;PRS"},             {"astən", "astətət", "V;SBJV;PST;2;PL"},
      {"vai̯nən", "vai̯nənt", "V.PTCP;PRS"},            {"vai̯nən", "vai̯nt", "V;IND;PRS;3;SG"},
      {"ʦɛrʃtrai̯tən", "ʦɛrʃtrai̯tənt", "V.PTCP;PRS"},  {"ʦɛrʃtrai̯tən", "ʦɛrʃtrai̯təst", "V;SBJV;PST;2;SG"},
  };
}

inline std::vector<Row> participle_rows() {
  return {
      {"apzuːxən", "apɡəzuːxt", "V.PTCP;PST"},
      {"aplɔxən", "apɡəlɔxt", "V.PTCP;PST"},
      {"aprʏkən", "apɡərʏkt", "V.PTCP;PST"},
      {"apɡʊkən", "apɡəɡʊkt", "V.PTCP;PST"},
  };
}

inline std::vector<Row> mini_lexicon_rows() {
  std::vector<Row> rows = anspielen_rows();
  for (const auto& part : {other_verb_rows(), participle_rows()}) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

inline std::vector<oracle::Triple> triples_of(const anamorph::Dataset& dataset) {
  std::vector<oracle::Triple> out;
  for (const auto& e : dataset.entries()) out.push_back({e.lemma, e.form, e.tag});
  return out;
}

// Synthetic lexicon: random stems over a small alphabet, inflected by a few
// suffix or prefix rules so that analogical series of several pairs appear.
struct LexiconSpec {
  std::size_t lexemes = 8;
  std::size_t alphabet = 6;
  std::size_t min_stem = 2;
  std::size_t max_stem = 5;
  std::size_t max_entries = 30;
};

inline std::vector<Row> random_lexicon(std::uint32_t seed, const LexiconSpec& spec = {}) {
  static const std::vector<std::string> letters{"a", "e", "i", "k", "l", "m", "n", "o", "p", "s", "t", "u"};
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::size_t alpha = std::min(spec.alphabet, letters.size());
  auto word = [&](std::size_t lo, std::size_t hi) {
    const std::size_t len = lo + pick(hi - lo + 1);
    std::string w;
    for (std::size_t k = 0; k < len; ++k) w += letters[pick(alpha)];
    return w;
  };
  const std::string lemma_suffix = word(1, 2);
  struct Rule {
    std::string tag, prefix, suffix;
  };
  std::vector<Rule> rules;
  const std::size_t rule_count = 2 + pick(3);
  for (std::size_t r = 0; r < rule_count; ++r) {
    const bool with_prefix = pick(3) == 0;
    rules.push_back({"T" + std::to_string(r), with_prefix ? word(1, 2) : "", word(1, 3)});
  }
  std::vector<Row> rows;
  for (std::size_t l = 0; l < spec.lexemes && rows.size() < spec.max_entries; ++l) {
    const std::string stem = word(spec.min_stem, spec.max_stem);
    const std::string lemma = stem + lemma_suffix;
    for (const Rule& rule : rules) {
      if (rows.size() >= spec.max_entries) break;
      if (pick(5) == 0) continue;
      std::string form = rule.prefix + stem + rule.suffix;
      if (pick(6) == 0) form = word(spec.min_stem, spec.max_stem + 2);  // suppletion/noise
      rows.push_back({lemma, form, rule.tag});
    }
  }
  return rows;
}

inline anamorph::PhonemeSeq random_seq(std::mt19937& rng, std::size_t alphabet, std::size_t min_len,
                                       std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<char32_t> sym(anamorph::kFirstPhonemeCode,
                                              anamorph::kFirstPhonemeCode + static_cast<char32_t>(alphabet) - 1);
  anamorph::PhonemeSeq s(len(rng), 0);
  for (auto& c : s) c = sym(rng);
  return s;
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) {
    path_ = std::filesystem::temp_directory_path() /
            (name + "-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string tsv(const std::vector<Row>& rows) {
  std::string out;
  for (const Row& r : rows) out += r[0] + "\t" + r[1] + "\t" + r[2] + "\n";
  return out;
}

}  // namespace fixtures
