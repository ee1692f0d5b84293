#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "anamorph/symbols.hpp"

namespace anamorph {

/// A common contiguous run: a[a_begin, a_begin+length) == b[b_begin, b_begin+length).
struct MatchBlock {
  std::size_t a_begin = 0;
  std::size_t b_begin = 0;
  std::size_t length = 0;

  auto operator<=>(const MatchBlock&) const = default;
};

/// Half-open index range into a sequence.
struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Longest common block inside the windows. Ties go to the smallest a_begin,
/// then the smallest b_begin. No junk or popularity filtering.
std::optional<MatchBlock> longest_match(PhonemeView a, PhonemeView b, Window a_window, Window b_window);

/// Ratcliff-Obershelp decomposition: the longest match splits both
/// sequences and the halves are processed recursively. Blocks contiguous in
/// both sequences are merged; the result is sorted by a_begin.
std::vector<MatchBlock> matching_blocks(PhonemeView a, PhonemeView b);

}  // namespace anamorph
