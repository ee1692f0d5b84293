#include "anamorph/score.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "anamorph/error.hpp"

namespace anamorph {

std::size_t m4_score(const FormPair& wug, const BapIndex& train_index, bool same_tag) {
  const BapClass* series = train_index.find(bap(wug.lemma, wug.form), wug.tag);
  if (series == nullptr) return 0;
  return same_tag ? series->count_with_tag(wug.tag) : series->size();
}

std::vector<WugScore> score_rows(const Dataset& train, const BapIndex& train_index, const RawTable& test,
                                 const ScoreOptions& options, std::vector<std::string>* warnings) {
  std::vector<WugScore> out;
  out.reserve(test.rows.size());
  const PhonemeInventory& inventory = train.inventory();
  for (const RawRow& row : test.rows) {
    WugScore scored{row.lemma, row.form, row.tag, 0.0};
    try {
      const FormPair wug{inventory.tokenize(reorder_particle(row.lemma, options.separators)),
                         inventory.tokenize(reorder_particle(row.form, options.separators)), row.tag};
      scored.score = static_cast<double>(m4_score(wug, train_index, options.same_tag));
    } catch (const Error& e) {
      if (warnings) warnings->push_back(test.path + ": line " + std::to_string(row.line) + ": scored 0: " + e.what());
    }
    out.push_back(std::move(scored));
  }
  return out;
}

std::string format_scores(std::span<const WugScore> scores, std::span<const std::string> header) {
  std::ostringstream out;
  for (const std::string& line : header) out << "# " << line << '\n';
  char buf[64];
  for (const WugScore& s : scores) {
    std::snprintf(buf, sizeof buf, "%.6f", s.score);
    out << s.lemma << '\t' << s.form << '\t' << s.tag << '\t' << buf << '\n';
  }
  return out.str();
}

void write_scores(const std::filesystem::path& path, std::span<const WugScore> scores,
                  std::span<const std::string> header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << format_scores(scores, header);
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

std::vector<WugScore> read_scores(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<WugScore> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::istringstream fs(line);
    for (std::string f; std::getline(fs, f, '\t');) fields.push_back(f);
    if (fields.size() != 4) {
      throw Error(ErrorKind::kSchema, path.string() + ": expected 4 columns, found " + std::to_string(fields.size()),
                  line_no);
    }
    double value = 0.0;
    const std::string& text = fields[3];
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::kSchema, path.string() + ": score '" + text + "' is not a number", line_no);
    }
    out.push_back({fields[0], fields[1], fields[2], value});
  }
  return out;
}

std::vector<std::string> score_file(const Dataset& train, const RawTable& test, const ScoreOptions& options,
                                    const std::filesystem::path& out_path, std::span<const std::string> header) {
  const BapIndex index = index_by_bap(train);
  std::vector<std::string> warnings;
  const auto scores = score_rows(train, index, test, options, &warnings);
  write_scores(out_path, scores, header);
  return warnings;
}

}  // namespace anamorph
