#include "anamorph/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <tuple>
#include <utility>

#include "anamorph/error.hpp"

namespace anamorph {

namespace {

bool contains(std::u32string_view set, char32_t cp) { return set.find(cp) != std::u32string_view::npos; }

bool is_control(char32_t cp) { return cp < 0x20 || (cp >= 0x7F && cp <= 0x9F); }

std::string codepoint_label(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

// Rejects characters that can never be a phoneme.
void check_characters(std::u32string_view cps, std::size_t line) {
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_control(cp)) {
      throw Error(ErrorKind::kEncoding,
                  "control character " + codepoint_label(cp) + " at offset " + std::to_string(i), line);
    }
    if (cp == U'+' || cp == U'/') {
      throw Error(ErrorKind::kInventoryConflict,
                  "reserved pattern character '" + utf8_encode(std::u32string(1, cp)) + "' at offset " +
                      std::to_string(i),
                  line);
    }
  }
}

std::vector<std::u32string> segment_codepoints(std::u32string_view cps, std::u32string_view modifiers) {
  std::vector<std::u32string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    std::u32string token(1, cps[i++]);
    while (i < cps.size() && contains(modifiers, cps[i])) {
      const char32_t mod = cps[i++];
      token.push_back(mod);
      if (contains(kTieBars, mod) && i < cps.size()) token.push_back(cps[i++]);
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::u32string utf8_decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      throw Error(ErrorKind::kEncoding, "invalid UTF-8 lead byte at byte " + std::to_string(i));
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= text.size()) throw Error(ErrorKind::kEncoding, "truncated UTF-8 sequence at byte " + std::to_string(i));
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Error(ErrorKind::kEncoding, "invalid UTF-8 continuation at byte " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(ErrorKind::kEncoding, "invalid UTF-8 code point at byte " + std::to_string(i));
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

// PhonemeInventory

std::optional<Symbol> PhonemeInventory::code_of(std::string_view multigraph) const {
  const auto it = codes_.find(multigraph);
  if (it == codes_.end()) return std::nullopt;
  return it->second;
}

std::string_view PhonemeInventory::surface_of(Symbol code) const {
  if (code == kVarSymbol || code == kPlusLiteral) return "+";
  const std::size_t index = code - kFirstPhonemeCode;
  if (code < kFirstPhonemeCode || index >= symbols_.size()) {
    throw Error(ErrorKind::kUnknownSymbol, "code " + std::to_string(code) + " is not in the inventory");
  }
  return symbols_[index];
}

PhonemeSeq PhonemeInventory::tokenize(std::string_view raw) const {
  if (raw.empty()) throw Error(ErrorKind::kEmptyInput, "empty form");
  const std::u32string cps = utf8_decode(raw);
  PhonemeSeq out;
  out.reserve(cps.size());
  std::size_t pos = 0;
  while (pos < cps.size()) {
    const std::size_t limit = std::min(longest_symbol_, cps.size() - pos);
    bool found = false;
    for (std::size_t len = limit; len >= 1; --len) {
      const auto it = codes_.find(utf8_encode(std::u32string_view(cps).substr(pos, len)));
      if (it != codes_.end()) {
        out.push_back(it->second);
        pos += len;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kUnknownSymbol, "symbol '" + utf8_encode(std::u32string(1, cps[pos])) + "' (" +
                                                 codepoint_label(cps[pos]) + ") at offset " + std::to_string(pos) +
                                                 " is not in the inventory");
    }
  }
  return out;
}

std::string PhonemeInventory::decode(PhonemeView seq) const {
  std::string out;
  for (const Symbol code : seq) out += surface_of(code);
  return out;
}

PhonemeInventory build_inventory(std::span<const std::string> raw_forms, std::u32string_view modifiers) {
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < raw_forms.size(); ++i) {
    std::u32string cps;
    try {
      cps = utf8_decode(raw_forms[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), i + 1);
    }
    check_characters(cps, i + 1);
    for (const auto& token : segment_codepoints(cps, modifiers)) distinct.insert(utf8_encode(token));
  }

  PhonemeInventory inventory;
  Symbol next = kFirstPhonemeCode;
  for (const auto& symbol : distinct) {
    inventory.codes_.emplace(symbol, next++);
    inventory.longest_symbol_ = std::max(inventory.longest_symbol_, utf8_decode(symbol).size());
    inventory.symbols_.push_back(symbol);
  }
  return inventory;
}

std::vector<std::string> segment(std::string_view raw, std::u32string_view modifiers) {
  std::vector<std::string> out;
  for (const auto& token : segment_codepoints(utf8_decode(raw), modifiers)) out.push_back(utf8_encode(token));
  return out;
}

std::string reorder_particle(std::string_view form, std::u32string_view separators) {
  const std::u32string cps = utf8_decode(form);
  if (std::none_of(cps.begin(), cps.end(), [&](char32_t cp) { return contains(separators, cp); })) {
    return std::string(form);
  }
  std::vector<std::u32string> pieces;
  std::u32string current;
  for (const char32_t cp : cps) {
    if (contains(separators, cp)) {
      if (!current.empty()) pieces.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) pieces.push_back(std::move(current));
  if (pieces.empty()) throw Error(ErrorKind::kEmptyInput, "form consists only of separators");

  std::u32string out = pieces.back();
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) out += pieces[i];
  return utf8_encode(out);
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::kTrain: return "train";
    case Source::kDevAttested: return "dev";
    case Source::kDevWug: return "dev-wug";
    case Source::kTestWug: return "test-wug";
  }
  return "train";
}

std::optional<Source> parse_source(std::string_view label) {
  for (const Source s : {Source::kTrain, Source::kDevAttested, Source::kDevWug, Source::kTestWug}) {
    if (to_string(s) == label) return s;
  }
  return std::nullopt;
}

// ColumnSchema

ColumnSchema ColumnSchema::parse(std::string_view spec) {
  ColumnSchema schema;
  bool optional_seen = false;
  for (std::string_view name : split(spec, ',')) {
    bool optional = false;
    if (!name.empty() && name.back() == '?') {
      optional = true;
      name.remove_suffix(1);
    }
    if (name != "lemma" && name != "form" && name != "tag" && name != "rating" && name != "_") {
      throw Error(ErrorKind::kSchema, "unknown schema column '" + std::string(name) + "'");
    }
    if (name != "_" && schema.index_of(name)) {
      throw Error(ErrorKind::kSchema, "duplicate schema column '" + std::string(name) + "'");
    }
    if (optional) {
      optional_seen = true;
    } else if (optional_seen) {
      throw Error(ErrorKind::kSchema, "required column '" + std::string(name) + "' after an optional one");
    } else {
      ++schema.required;
    }
    schema.columns.emplace_back(name);
  }
  for (const char* needed : {"lemma", "form", "tag"}) {
    const auto at = schema.index_of(needed);
    if (!at || *at >= schema.required) {
      throw Error(ErrorKind::kSchema, std::string("schema lacks a required '") + needed + "' column");
    }
  }
  return schema;
}

std::optional<std::size_t> ColumnSchema::index_of(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

RawTable read_table(const std::filesystem::path& path, const ColumnSchema& schema, Source source,
                    bool allow_empty) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());

  RawTable table;
  table.path = path.string();
  table.source = source;

  const std::size_t lemma_at = *schema.index_of("lemma");
  const std::size_t form_at = *schema.index_of("form");
  const std::size_t tag_at = *schema.index_of("tag");
  const auto rating_at = schema.index_of("rating");

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      utf8_decode(line);
    } catch (const Error& e) {
      throw Error(ErrorKind::kEncoding, table.path + ": " + e.what(), line_no);
    }
    const auto fields = split(line, '\t');
    if (fields.size() < schema.required || fields.size() > schema.columns.size()) {
      throw Error(ErrorKind::kSchema,
                  table.path + ": expected " + std::to_string(schema.required) +
                      (schema.required == schema.columns.size() ? "" : "-" + std::to_string(schema.columns.size())) +
                      " columns, found " + std::to_string(fields.size()),
                  line_no);
    }
    RawRow row;
    row.line = line_no;
    row.lemma = fields[lemma_at];
    row.form = fields[form_at];
    row.tag = fields[tag_at];
    if (row.lemma.empty() || row.form.empty() || row.tag.empty()) {
      throw Error(ErrorKind::kSchema, table.path + ": empty lemma, form or tag field", line_no);
    }
    if (rating_at && *rating_at < fields.size()) {
      const std::string_view text = fields[*rating_at];
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::kSchema, table.path + ": rating '" + std::string(text) + "' is not a number", line_no);
      }
      row.rating = value;
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty() && !allow_empty) throw Error(ErrorKind::kEmptyInput, table.path + ": empty file");
  return table;
}

// Dataset

Dataset::Dataset(std::string language, PhonemeInventory inventory, std::vector<LexEntry> entries,
                 std::vector<Judgment> judgments)
    : language_(std::move(language)),
      inventory_(std::move(inventory)),
      entries_(std::move(entries)),
      judgments_(std::move(judgments)) {
  std::sort(entries_.begin(), entries_.end(), [](const LexEntry& a, const LexEntry& b) {
    return std::tie(a.lemma, a.tag, a.form, a.source, a.raw_lemma, a.raw_form) <
           std::tie(b.lemma, b.tag, b.form, b.source, b.raw_lemma, b.raw_form);
  });
  std::sort(judgments_.begin(), judgments_.end());
}

Dataset make_dataset(std::span<const RawTable> tables, const LoadOptions& options) {
  struct Prepared {
    std::string lemma;
    std::string form;
    const RawRow* row;
    Source source;
  };
  std::vector<Prepared> prepared;
  std::vector<std::string> surface;
  for (const RawTable& table : tables) {
    for (const RawRow& row : table.rows) {
      Prepared p{{}, {}, &row, table.source};
      try {
        p.lemma = reorder_particle(row.lemma, options.separators);
        p.form = reorder_particle(row.form, options.separators);
        check_characters(utf8_decode(p.lemma), 0);
        check_characters(utf8_decode(p.form), 0);
      } catch (const Error& e) {
        throw Error(e.kind(), table.path + ": " + e.what(), row.line);
      }
      surface.push_back(p.lemma);
      surface.push_back(p.form);
      prepared.push_back(std::move(p));
    }
  }

  PhonemeInventory inventory = build_inventory(surface, options.modifiers);

  std::vector<LexEntry> entries;
  std::vector<Judgment> judgments;
  entries.reserve(prepared.size());
  for (const Prepared& p : prepared) {
    LexEntry entry;
    entry.lemma = inventory.tokenize(p.lemma);
    entry.form = inventory.tokenize(p.form);
    entry.tag = p.row->tag;
    entry.source = p.source;
    entry.raw_lemma = p.row->lemma;
    entry.raw_form = p.row->form;
    entries.push_back(std::move(entry));
    if (p.row->rating) judgments.push_back({p.row->lemma, p.row->form, p.row->tag, *p.row->rating});
  }
  return Dataset(options.language, std::move(inventory), std::move(entries), std::move(judgments));
}

Dataset load_dataset(const std::filesystem::path& path, const ColumnSchema& schema, Source source,
                     const LoadOptions& options) {
  const RawTable table = read_table(path, schema, source);
  return make_dataset(std::span(&table, 1), options);
}

DatasetStats dataset_stats(const Dataset& dataset) {
  DatasetStats stats;
  stats.entry_count = dataset.size();
  stats.phoneme_count = dataset.inventory().size();

  std::set<std::string_view> tags;
  std::map<std::pair<PhonemeView, PhonemeView>, std::set<std::string_view>> cells;
  for (const LexEntry& e : dataset.entries()) {
    tags.insert(e.tag);
    cells[{e.lemma, e.form}].insert(e.tag);
  }
  stats.tag_count = tags.size();
  if (!cells.empty()) {
    const auto syncretic = std::count_if(cells.begin(), cells.end(), [](const auto& kv) { return kv.second.size() >= 2; });
    stats.syncretism_pct = 100.0 * static_cast<double>(syncretic) / static_cast<double>(cells.size());
  }
  return stats;
}

}  // namespace anamorph
