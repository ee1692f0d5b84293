#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anamorph/symbols.hpp"

namespace anamorph {

/// IPA length marks, the non-syllabicity diacritic and the two tie bars.
inline constexpr std::u32string_view kDefaultModifiers = U"\u02D0\u02D1\u032F\u035C\u0361";
/// Tie bars additionally glue the base character that follows them.
inline constexpr std::u32string_view kTieBars = U"\u035C\u0361";
inline constexpr std::u32string_view kDefaultSeparators = U" ";

/// Decodes UTF-8; throws Error(kEncoding) on malformed input.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);

/// Bijection between surface multigraphs and internal codes. Codes are
/// assigned in byte order of the multigraphs, starting at kFirstPhonemeCode.
class PhonemeInventory {
 public:
  PhonemeInventory() = default;

  /// Symbols in code order.
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  std::optional<Symbol> code_of(std::string_view multigraph) const;
  /// '+' for the variable and literal-plus codes.
  std::string_view surface_of(Symbol code) const;

  /// Greedy longest-match segmentation. Throws kEmptyInput on "" and
  /// kUnknownSymbol naming the character and its code-point offset.
  PhonemeSeq tokenize(std::string_view raw) const;
  std::string decode(PhonemeView seq) const;

  bool operator==(const PhonemeInventory& other) const { return symbols_ == other.symbols_; }

 private:
  friend PhonemeInventory build_inventory(std::span<const std::string>, std::u32string_view);

  std::vector<std::string> symbols_;
  std::map<std::string, Symbol, std::less<>> codes_;
  std::size_t longest_symbol_ = 0;  // in code points
};

/// Splits each form into base characters plus trailing modifiers and assigns
/// a code to every distinct token. Control characters are rejected with the
/// 1-based index of the offending form as line number; '+' and '/' are
/// reserved for pattern rendering and rejected as kInventoryConflict.
PhonemeInventory build_inventory(std::span<const std::string> raw_forms,
                                 std::u32string_view modifiers = kDefaultModifiers);

/// Splits a form into multigraphs using the same grouping rule as
/// build_inventory.
std::vector<std::string> segment(std::string_view raw, std::u32string_view modifiers = kDefaultModifiers);

/// Moves the last separated particle to the front and drops all separators:
/// "vɛksələ yːbər" -> "yːbərvɛksələ".
std::string reorder_particle(std::string_view form,
                             std::u32string_view separators = kDefaultSeparators);

enum class Source { kTrain, kDevAttested, kDevWug, kTestWug };

std::string_view to_string(Source source);
std::optional<Source> parse_source(std::string_view label);

/// Column layout of an input TSV, e.g. "lemma,form,tag,rating?". A trailing
/// '?' marks an optional column; "_" skips a column.
struct ColumnSchema {
  std::vector<std::string> columns;
  std::size_t required = 0;

  static ColumnSchema parse(std::string_view spec);
  static ColumnSchema standard() { return parse("lemma,form,tag,rating?"); }

  std::optional<std::size_t> index_of(std::string_view name) const;
};

struct RawRow {
  std::string lemma;
  std::string form;
  std::string tag;
  std::optional<double> rating;
  std::size_t line = 0;
};

struct RawTable {
  std::string path;
  Source source = Source::kTrain;
  std::vector<RawRow> rows;  // file order
};

/// Reads a UTF-8 TSV. Blank lines and lines starting with '#' are skipped.
RawTable read_table(const std::filesystem::path& path, const ColumnSchema& schema, Source source,
                    bool allow_empty = false);

struct LexEntry {
  PhonemeSeq lemma;
  PhonemeSeq form;
  std::string tag;
  Source source = Source::kTrain;
  std::string raw_lemma;  // as found in the file, before particle reordering
  std::string raw_form;

  auto operator<=>(const LexEntry&) const = default;
};

struct Judgment {
  std::string lemma;
  std::string form;
  std::string tag;
  double rating = 0.0;

  auto operator<=>(const Judgment&) const = default;
};

struct LoadOptions {
  std::u32string modifiers{kDefaultModifiers};
  std::u32string separators{kDefaultSeparators};
  std::string language;
};

/// Immutable collection of entries sharing one inventory. Entries are kept
/// in canonical (lemma, tag, form) order.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::string language, PhonemeInventory inventory, std::vector<LexEntry> entries,
          std::vector<Judgment> judgments);

  const std::string& language() const noexcept { return language_; }
  const PhonemeInventory& inventory() const noexcept { return inventory_; }
  const std::vector<LexEntry>& entries() const noexcept { return entries_; }
  const std::vector<Judgment>& judgments() const noexcept { return judgments_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  bool operator==(const Dataset&) const = default;

 private:
  std::string language_;
  PhonemeInventory inventory_;
  std::vector<LexEntry> entries_;
  std::vector<Judgment> judgments_;
};

/// Preprocesses and tokenizes several tables over one shared inventory.
Dataset make_dataset(std::span<const RawTable> tables, const LoadOptions& options = {});

Dataset load_dataset(const std::filesystem::path& path, const ColumnSchema& schema, Source source,
                     const LoadOptions& options = {});

struct DatasetStats {
  std::size_t entry_count = 0;
  std::size_t phoneme_count = 0;
  std::size_t tag_count = 0;
  double syncretism_pct = 0.0;
};

/// Syncretism is the share of distinct (lemma, form) pairs carrying two or
/// more distinct tags.
DatasetStats dataset_stats(const Dataset& dataset);

}  // namespace anamorph
