#include "anamorph/align.hpp"

#include <algorithm>
#include <utility>

namespace anamorph {

std::optional<MatchBlock> longest_match(PhonemeView a, PhonemeView b, Window a_window, Window b_window) {
  const std::size_t width = b_window.end - b_window.begin;
  if (a_window.end <= a_window.begin || width == 0) return std::nullopt;

  // run[j + 1] = length of the common run ending at a[i], b[b_window.begin + j].
  std::vector<std::size_t> previous(width + 1, 0);
  std::vector<std::size_t> current(width + 1, 0);
  MatchBlock best;
  for (std::size_t i = a_window.begin; i < a_window.end; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (a[i] == b[b_window.begin + j]) {
        const std::size_t k = previous[j] + 1;
        current[j + 1] = k;
        // Strict comparison keeps the earliest start in a, then in b.
        if (k > best.length) best = {i + 1 - k, b_window.begin + j + 1 - k, k};
      } else {
        current[j + 1] = 0;
      }
    }
    std::swap(previous, current);
  }
  if (best.length == 0) return std::nullopt;
  return best;
}

std::vector<MatchBlock> matching_blocks(PhonemeView a, PhonemeView b) {
  std::vector<MatchBlock> found;
  std::vector<std::pair<Window, Window>> pending{{{0, a.size()}, {0, b.size()}}};
  while (!pending.empty()) {
    const auto [aw, bw] = pending.back();
    pending.pop_back();
    const auto block = longest_match(a, b, aw, bw);
    if (!block) continue;
    found.push_back(*block);
    if (aw.begin < block->a_begin && bw.begin < block->b_begin) {
      pending.push_back({{aw.begin, block->a_begin}, {bw.begin, block->b_begin}});
    }
    if (block->a_begin + block->length < aw.end && block->b_begin + block->length < bw.end) {
      pending.push_back({{block->a_begin + block->length, aw.end}, {block->b_begin + block->length, bw.end}});
    }
  }
  std::sort(found.begin(), found.end());

  std::vector<MatchBlock> merged;
  for (const MatchBlock& block : found) {
    if (!merged.empty()) {
      MatchBlock& last = merged.back();
      if (last.a_begin + last.length == block.a_begin && last.b_begin + last.length == block.b_begin) {
        last.length += block.length;
        continue;
      }
    }
    merged.push_back(block);
  }
  return merged;
}

}  // namespace anamorph
