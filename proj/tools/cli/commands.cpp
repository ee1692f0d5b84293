#include "cli/commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "anamorph/error.hpp"
#include "anamorph/eval.hpp"
#include "anamorph/pattern.hpp"
#include "anamorph/score.hpp"
#include "anamorph/series.hpp"

namespace anamorph::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

LoadOptions RunConfig::load_options() const {
  LoadOptions options;
  options.modifiers = utf8_decode(modifiers);
  options.separators = utf8_decode(separators);
  options.language = language;
  return options;
}

FapConfig RunConfig::fap_config() const {
  FapConfig config;
  config.min_pair_coverage = min_pair_coverage;
  config.min_form_coverage = min_form_coverage;
  config.exact_var_count = exact_var_count;
  config.min_pair_fraction = min_pair_fraction;
  config.min_form_fraction = min_form_fraction;
  config.column_cap = column_cap;
  config.coarsen = coarsen;
  config.per_tag = per_tag;
  config.workers = workers;
  return config;
}

std::string RunConfig::to_json() const {
  json j;
  j["language"] = language;
  j["train"] = train.string();
  j["dev"] = dev.string();
  j["dev_wug"] = dev_wug.string();
  j["test_wug"] = test_wug.string();
  j["schema"] = schema;
  j["modifiers"] = modifiers;
  j["separators"] = separators;
  j["min_pair_coverage"] = min_pair_coverage;
  j["min_form_coverage"] = min_form_coverage;
  j["exact_var_count"] = exact_var_count ? json(*exact_var_count) : json(nullptr);
  j["min_pair_fraction"] = min_pair_fraction;
  j["min_form_fraction"] = min_form_fraction;
  j["column_cap"] = column_cap;
  j["coarsen"] = coarsen;
  j["per_tag"] = per_tag;
  j["same_tag"] = same_tag;
  j["model"] = model;
  return j.dump();
}

unsigned resolve_workers(std::optional<unsigned> requested) {
  if (const char* env = std::getenv("ANAMORPH_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  if (requested && *requested > 0) return *requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string input_digest(const std::vector<fs::path>& files) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kIo, "cannot initialise SHA-256");
  }
  for (const fs::path& file : files) {
    std::string bytes;
    if (!file.empty()) {
      std::ifstream in(file, std::ios::binary);
      if (in) bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    const std::string length = std::to_string(bytes.size()) + ":";
    EVP_DigestUpdate(ctx.get(), length.data(), length.size());
    EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size());
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &size);
  std::ostringstream hex;
  for (unsigned int i = 0; i < size; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::vector<std::string> run_header(const std::string& command, const RunConfig& config,
                                    const std::vector<fs::path>& inputs) {
  return {"anamorph " + command, "config: " + config.to_json(), "inputs-sha256: " + input_digest(inputs)};
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

std::string commented(const std::vector<std::string>& header) {
  std::string out;
  for (const std::string& line : header) out += "# " + line + "\n";
  return out;
}

json header_json(const std::vector<std::string>& header, const RunConfig& config,
                 const std::vector<fs::path>& inputs) {
  json meta;
  meta["command"] = header.front();
  meta["config"] = json::parse(config.to_json());
  meta["inputs_sha256"] = input_digest(inputs);
  return meta;
}

const fs::path& require_path(const fs::path& path, const char* what) {
  if (path.empty()) throw Error(ErrorKind::kIo, std::string("missing ") + what + " dataset: no path given");
  if (!fs::exists(path)) throw Error(ErrorKind::kIo, std::string("missing ") + what + " dataset: " + path.string());
  return path;
}

}  // namespace

void cmd_stats(const RunConfig& config, std::ostream& out) {
  const ColumnSchema schema = ColumnSchema::parse(config.schema);
  struct Column {
    std::string label;
    DatasetStats stats;
  };
  std::vector<Column> columns;
  std::vector<fs::path> inputs;
  const std::pair<const fs::path*, Source> files[] = {{&config.train, Source::kTrain},
                                                      {&config.dev, Source::kDevAttested},
                                                      {&config.dev_wug, Source::kDevWug},
                                                      {&config.test_wug, Source::kTestWug}};
  for (const auto& [path, source] : files) {
    if (path->empty()) continue;
    inputs.push_back(*path);
    const Dataset d = load_dataset(*path, schema, source, config.load_options());
    columns.push_back({std::string(to_string(source)), dataset_stats(d)});
  }
  if (columns.empty()) throw Error(ErrorKind::kIo, "stats needs at least one dataset (--train, --dev, ...)");

  out << commented(run_header("stats", config, inputs));
  auto row = [&](const char* name, auto value_of) {
    out << std::left << std::setw(14) << name;
    for (const Column& c : columns) out << std::right << std::setw(12) << value_of(c.stats);
    out << '\n';
  };
  out << std::left << std::setw(14) << (config.language.empty() ? "" : config.language);
  for (const Column& c : columns) out << std::right << std::setw(12) << c.label;
  out << '\n';
  row("entries", [](const DatasetStats& s) { return s.entry_count; });
  row("phonemes", [](const DatasetStats& s) { return s.phoneme_count; });
  row("UTs", [](const DatasetStats& s) { return s.tag_count; });
  row("syncretism %", [](const DatasetStats& s) { return std::lround(s.syncretism_pct); });
  for (const Column& c : columns) {
    out << c.label << ": " << c.stats.entry_count << " / " << c.stats.phoneme_count << " / " << c.stats.tag_count
        << " / " << std::lround(c.stats.syncretism_pct) << '\n';
  }
}

void cmd_mine(const RunConfig& config) {
  const ColumnSchema schema = ColumnSchema::parse(config.schema);
  const std::pair<const fs::path*, Source> files[] = {{&config.train, Source::kTrain},
                                                      {&config.dev, Source::kDevAttested},
                                                      {&config.dev_wug, Source::kDevWug},
                                                      {&config.test_wug, Source::kTestWug}};
  std::vector<RawTable> tables;
  std::vector<fs::path> inputs;
  for (const auto& [path, source] : files) {
    const std::string what(to_string(source));
    tables.push_back(read_table(require_path(*path, what.c_str()), schema, source, /*allow_empty=*/true));
    inputs.push_back(*path);
  }
  if (config.out.empty()) throw Error(ErrorKind::kIo, "mine needs an output directory (--out)");
  fs::create_directories(config.out);

  const Dataset dataset = make_dataset(tables, config.load_options());
  const FapConfig fap_config = config.fap_config();
  const BapIndex index = index_by_bap(dataset, {config.per_tag, config.workers});
  const MiningResult mined = mine_faps(index, fap_config);
  const PhonemeInventory& inventory = dataset.inventory();
  const auto header = run_header("mine", config, inputs);

  std::map<Source, std::string> annotated;
  for (const auto& [path, source] : files) annotated[source] = commented(header);
  std::map<std::pair<PhonemeView, PhonemeView>, std::string> bap_text;
  for (const LexEntry& e : dataset.entries()) {
    auto [it, fresh] = bap_text.try_emplace({e.lemma, e.form});
    if (fresh) it->second = render(bap(e.lemma, e.form), inventory);
    std::string& out = annotated[e.source];
    out += e.raw_lemma + '\t' + e.raw_form + '\t' + e.tag + '\t' + it->second + '\t';
    const auto fap = mined.assignments.find(FormPair{e.lemma, e.form, e.tag});
    if (fap != mined.assignments.end()) {
      out += render(fap->second.fap.first, inventory) + '\t' + render(fap->second.fap.second, inventory);
    } else {
      out += '\t';
    }
    out += '\n';
  }
  for (const auto& [source, content] : annotated) {
    std::string name(to_string(source));
    std::replace(name.begin(), name.end(), '-', '_');
    write_file(config.out / (name + ".annotated.tsv"), content);
  }

  write_file(config.out / "classes.tsv", commented(header) + export_classes_tsv(index, inventory));

  json doc;
  doc["meta"] = header_json(header, config, inputs);
  doc["inventory"] = inventory.symbols();
  doc["classes"] = json::array();
  for (const ClassReport& report : mined.classes) {
    json c;
    c["bap"] = render(report.bap, inventory);
    if (config.per_tag) c["tag"] = report.tag;
    c["pair_count"] = report.pairs;
    c["col1_forms"] = report.col1_forms;
    c["col2_forms"] = report.col2_forms;
    c["wps1"] = report.wps1;
    c["wps2"] = report.wps2;
    c["candidates"] = report.candidates;
    c["screened"] = report.screened;
    c["assigned"] = report.assigned;
    std::vector<std::pair<AlternationPattern, std::size_t>> usage(report.usage.begin(), report.usage.end());
    std::stable_sort(usage.begin(), usage.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    c["selected_faps"] = json::array();
    for (const auto& [fap, count] : usage) {
      c["selected_faps"].push_back({{"fap", render(fap, inventory)}, {"usage_count", count}});
    }
    doc["classes"].push_back(std::move(c));
  }
  write_file(config.out / "patterns.json", doc.dump(2) + "\n");
}

void cmd_score(const RunConfig& config, std::ostream& warnings) {
  if (config.model != "m4") throw Error(ErrorKind::kSchema, "unknown model '" + config.model + "' (expected m4)");
  const ColumnSchema schema = ColumnSchema::parse(config.schema);
  require_path(config.train, "train");
  require_path(config.test_wug, "test");
  if (config.out.empty()) throw Error(ErrorKind::kIo, "score needs an output file (--out)");

  const Dataset train = load_dataset(config.train, schema, Source::kTrain, config.load_options());
  const RawTable test = read_table(config.test_wug, schema, Source::kTestWug);
  ScoreOptions options;
  options.same_tag = config.same_tag;
  options.separators = utf8_decode(config.separators);
  const auto header = run_header("score", config, {config.train, config.test_wug});
  for (const std::string& w : score_file(train, test, options, config.out, header)) warnings << "warning: " << w << '\n';
}

void cmd_evaluate(const RunConfig& config, std::ostream& out) {
  if (config.scores.empty()) throw Error(ErrorKind::kIo, "evaluate needs --scores");
  if (config.judgments.empty()) throw Error(ErrorKind::kIo, "evaluate needs --judgments");
  const auto scores = read_scores(config.scores);
  const RawTable table = read_table(config.judgments, ColumnSchema::parse("lemma,form,tag,rating"), Source::kDevWug);
  std::vector<Judgment> judgments;
  judgments.reserve(table.rows.size());
  for (const RawRow& row : table.rows) judgments.push_back({row.lemma, row.form, row.tag, *row.rating});

  const EvalReport report = evaluate(scores, judgments);
  const std::vector<fs::path> inputs{config.scores, config.judgments};
  json doc = json::parse(report_json(report));
  doc["meta"] = header_json(run_header("evaluate", config, inputs), config, inputs);
  const std::string text = doc.dump(2) + "\n";
  if (!config.report.empty()) write_file(config.report, text);
  out << "n=" << report.n << " pearson=" << report.pearson << " spearman=" << report.spearman
      << " unmatched=" << report.unmatched << '\n';
}

void cmd_export_neural(const RunConfig& config) {
  if (config.mined.empty() || config.out.empty()) throw Error(ErrorKind::kIo, "export-neural needs --mined and --out");
  const fs::path patterns = config.mined / "patterns.json";
  std::ifstream in(patterns, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + patterns.string());
  json mined;
  try {
    mined = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema, patterns.string() + ": " + e.what());
  }

  std::set<std::string> tags;
  std::set<std::string> features;
  std::vector<fs::path> inputs{patterns};
  for (const char* name : {"train", "dev", "dev_wug", "test_wug"}) {
    const fs::path file = config.mined / (std::string(name) + ".annotated.tsv");
    if (!fs::exists(file)) continue;
    inputs.push_back(file);
    std::ifstream tsv(file, std::ios::binary);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(tsv, line)) {
      ++line_no;
      if (line.empty() || line.front() == '#') continue;
      std::vector<std::string> fields;
      std::istringstream fs(line);
      for (std::string f; std::getline(fs, f, '\t');) fields.push_back(f);
      if (fields.size() < 3) throw Error(ErrorKind::kSchema, file.string() + ": malformed annotated row", line_no);
      tags.insert(fields[2]);
      std::istringstream parts(fields[2]);
      for (std::string feature; std::getline(parts, feature, ';');) features.insert(feature);
    }
  }

  fs::create_directories(config.out);
  json vocab;
  vocab["meta"] = header_json(run_header("export-neural", config, inputs), config, inputs);
  vocab["phonemes"] = mined.at("inventory");
  vocab["tags"] = tags;
  vocab["tag_features"] = features;
  vocab["pattern_symbols"] = {"+"};
  vocab["delimiters"] = {"<pad>", "<s>", "</s>", "<sep>", "<unk>"};
  write_file(config.out / "vocab.json", vocab.dump(2) + "\n");
}

}  // namespace anamorph::cli
