#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anamorph/lexicon.hpp"
#include "anamorph/symbols.hpp"

namespace anamorph {

/// Literal segments interleaved with variable slots. Stored as one symbol
/// sequence in which kVarSymbol marks a variable, so adjacent literals are
/// fused by construction and equality is structural.
class WordPattern {
 public:
  WordPattern() = default;
  explicit WordPattern(PhonemeSeq symbols) : symbols_(std::move(symbols)) {}

  const PhonemeSeq& symbols() const noexcept { return symbols_; }
  std::size_t var_count() const noexcept;
  std::size_t literal_length() const noexcept { return symbols_.size() - var_count(); }
  bool empty() const noexcept { return symbols_.empty(); }

  auto operator<=>(const WordPattern&) const = default;

 private:
  PhonemeSeq symbols_;
};

/// Pair of word patterns whose k-th variables co-refer.
struct AlternationPattern {
  WordPattern first;
  WordPattern second;

  std::size_t var_count() const noexcept { return first.var_count(); }
  bool is_trivial() const noexcept { return first.var_count() == 0 && second.var_count() == 0; }

  auto operator<=>(const AlternationPattern&) const = default;
};

/// Segment bound to each variable, in variable order.
using Bindings = std::vector<PhonemeSeq>;

struct DerivedBap {
  AlternationPattern pattern;
  Bindings bindings;  // the aligned blocks
};

/// Broad alternation pattern: matching blocks become shared variables and the
/// residues between them stay literal.
DerivedBap derive_bap(PhonemeView f1, PhonemeView f2);
AlternationPattern bap(PhonemeView f1, PhonemeView f2);

/// What two forms share: matching blocks stay literal, each gap becomes one
/// variable.
WordPattern commonality_pattern(PhonemeView f1, PhonemeView f2);

/// Keeps the literal before the first and after the last variable and
/// replaces everything in between with one variable: "+a+ən" -> "+ən".
/// Patterns with at most one variable are returned unchanged.
WordPattern skeleton(const WordPattern& pattern);

/// Decomposes `form` according to `pattern`, each variable bound to a
/// non-empty segment. The first variable takes the longest feasible segment,
/// then the second, and so on.
std::optional<Bindings> matches(const WordPattern& pattern, PhonemeView form);
/// Same feasibility test as `matches`, without building the bindings.
bool is_match(const WordPattern& pattern, PhonemeView form);

/// Throws Error(kArity) when the binding count differs from the variable
/// count or a binding is empty.
PhonemeSeq instantiate(const WordPattern& pattern, const Bindings& bindings);

/// Every pattern obtained by abstracting a subset of the aligned shared
/// positions. Abstracted positions that are adjacent inside one block fuse
/// into a single variable. Sorted; throws kGuardExceeded when more than
/// `max_shared` positions are shared.
std::vector<AlternationPattern> enumerate_aps(PhonemeView f1, PhonemeView f2, std::size_t max_shared = 20);

/// f1 : f2 :: f3 : f4 holds when both pairs have the same BAP.
bool is_formal_analogy(PhonemeView f1, PhonemeView f2, PhonemeView f3, PhonemeView f4);

/// BAP of two word patterns read as forms in which '+' is an ordinary symbol.
/// Unaligned '+' end up as kPlusLiteral, never as a variable.
AlternationPattern ap_of_wps(const WordPattern& p, const WordPattern& q);

std::string render(const WordPattern& pattern, const PhonemeInventory& inventory);
/// Canonical "LHS/RHS" rendering, e.g. "++ən/+ɡə+t".
std::string render(const AlternationPattern& pattern, const PhonemeInventory& inventory);

/// Inverse of render: '+' is a variable, everything else is tokenized.
WordPattern parse_word_pattern(std::string_view text, const PhonemeInventory& inventory);
AlternationPattern parse_alternation(std::string_view text, const PhonemeInventory& inventory);

}  // namespace anamorph

template <>
struct std::hash<anamorph::WordPattern> {
  std::size_t operator()(const anamorph::WordPattern& p) const noexcept {
    return std::hash<anamorph::PhonemeSeq>{}(p.symbols());
  }
};

template <>
struct std::hash<anamorph::AlternationPattern> {
  std::size_t operator()(const anamorph::AlternationPattern& p) const noexcept {
    const std::size_t h1 = std::hash<anamorph::WordPattern>{}(p.first);
    const std::size_t h2 = std::hash<anamorph::WordPattern>{}(p.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
