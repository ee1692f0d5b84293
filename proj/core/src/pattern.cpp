#include "anamorph/pattern.hpp"

#include <algorithm>
#include <set>

#include "anamorph/align.hpp"
#include "anamorph/error.hpp"

namespace anamorph {

std::size_t WordPattern::var_count() const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), kVarSymbol));
}

DerivedBap derive_bap(PhonemeView f1, PhonemeView f2) {
  DerivedBap out;
  PhonemeSeq lhs;
  PhonemeSeq rhs;
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (const MatchBlock& block : matching_blocks(f1, f2)) {
    lhs.append(f1.substr(ia, block.a_begin - ia));
    rhs.append(f2.substr(ib, block.b_begin - ib));
    lhs.push_back(kVarSymbol);
    rhs.push_back(kVarSymbol);
    out.bindings.emplace_back(f1.substr(block.a_begin, block.length));
    ia = block.a_begin + block.length;
    ib = block.b_begin + block.length;
  }
  lhs.append(f1.substr(ia));
  rhs.append(f2.substr(ib));
  out.pattern = {WordPattern(std::move(lhs)), WordPattern(std::move(rhs))};
  return out;
}

AlternationPattern bap(PhonemeView f1, PhonemeView f2) { return derive_bap(f1, f2).pattern; }

WordPattern commonality_pattern(PhonemeView f1, PhonemeView f2) {
  PhonemeSeq out;
  auto open_gap = [&out] {
    if (out.empty() || out.back() != kVarSymbol) out.push_back(kVarSymbol);
  };
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (const MatchBlock& block : matching_blocks(f1, f2)) {
    if (ia < block.a_begin || ib < block.b_begin) open_gap();
    out.append(f1.substr(block.a_begin, block.length));
    ia = block.a_begin + block.length;
    ib = block.b_begin + block.length;
  }
  if (ia < f1.size() || ib < f2.size()) open_gap();
  return WordPattern(std::move(out));
}

WordPattern skeleton(const WordPattern& pattern) {
  if (pattern.var_count() <= 1) return pattern;
  const PhonemeView symbols = pattern.symbols();
  const std::size_t first = symbols.find(kVarSymbol);
  const std::size_t last = symbols.rfind(kVarSymbol);
  PhonemeSeq out(symbols.substr(0, first));
  out.push_back(kVarSymbol);
  out.append(symbols.substr(last + 1));
  return WordPattern(std::move(out));
}

namespace {

struct Element {
  bool is_var = false;
  PhonemeView literal;
};

std::vector<Element> elements_of(const WordPattern& pattern) {
  std::vector<Element> out;
  const PhonemeView symbols = pattern.symbols();
  std::size_t i = 0;
  while (i < symbols.size()) {
    if (symbols[i] == kVarSymbol) {
      out.push_back({true, {}});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < symbols.size() && symbols[i] != kVarSymbol) ++i;
    out.push_back({false, symbols.substr(start, i - start)});
  }
  return out;
}

// Backtracking decomposition with a memo of failed (element, position) states.
class Matcher {
 public:
  Matcher(const WordPattern& pattern, PhonemeView form) : elements_(elements_of(pattern)), form_(form) {
    const std::size_t m = elements_.size();
    min_tail_.assign(m + 1, 0);
    for (std::size_t k = m; k-- > 0;) {
      min_tail_[k] = min_tail_[k + 1] + (elements_[k].is_var ? 1 : elements_[k].literal.size());
    }
    failed_.assign((m + 1) * (form.size() + 1), false);
  }

  bool run(Bindings* bindings) {
    if (min_tail_[0] > form_.size()) return false;
    return solve(0, 0, bindings);
  }

 private:
  bool solve(std::size_t k, std::size_t pos, Bindings* bindings) {
    if (k == elements_.size()) return pos == form_.size();
    const std::size_t slot = k * (form_.size() + 1) + pos;
    if (failed_[slot]) return false;
    const Element& e = elements_[k];
    if (!e.is_var) {
      if (form_.substr(pos, e.literal.size()) == e.literal && solve(k + 1, pos + e.literal.size(), bindings)) {
        return true;
      }
    } else if (pos + min_tail_[k] <= form_.size()) {
      const std::size_t longest = form_.size() - pos - min_tail_[k + 1];
      for (std::size_t len = longest; len >= 1; --len) {
        if (bindings) bindings->emplace_back(form_.substr(pos, len));
        if (solve(k + 1, pos + len, bindings)) return true;
        if (bindings) bindings->pop_back();
      }
    }
    failed_[slot] = true;
    return false;
  }

  std::vector<Element> elements_;
  PhonemeView form_;
  std::vector<std::size_t> min_tail_;
  std::vector<bool> failed_;
};

// Single-variable patterns are a prefix/suffix test.
std::optional<std::pair<std::size_t, std::size_t>> split_single_var(const WordPattern& pattern) {
  const PhonemeView symbols = pattern.symbols();
  const std::size_t at = symbols.find(kVarSymbol);
  if (at == PhonemeView::npos || symbols.find(kVarSymbol, at + 1) != PhonemeView::npos) return std::nullopt;
  return std::pair{at, symbols.size() - at - 1};
}

}  // namespace

std::optional<Bindings> matches(const WordPattern& pattern, PhonemeView form) {
  const PhonemeView symbols = pattern.symbols();
  if (const auto split = split_single_var(pattern)) {
    const auto [head, tail] = *split;
    if (form.size() < head + tail + 1) return std::nullopt;
    if (form.substr(0, head) != symbols.substr(0, head)) return std::nullopt;
    if (form.substr(form.size() - tail) != symbols.substr(head + 1)) return std::nullopt;
    return Bindings{PhonemeSeq(form.substr(head, form.size() - head - tail))};
  }
  Bindings bindings;
  Matcher matcher(pattern, form);
  if (!matcher.run(&bindings)) return std::nullopt;
  return bindings;
}

bool is_match(const WordPattern& pattern, PhonemeView form) {
  const PhonemeView symbols = pattern.symbols();
  if (const auto split = split_single_var(pattern)) {
    const auto [head, tail] = *split;
    return form.size() >= head + tail + 1 && form.substr(0, head) == symbols.substr(0, head) &&
           form.substr(form.size() - tail) == symbols.substr(head + 1);
  }
  if (symbols.find(kVarSymbol) == PhonemeView::npos) return symbols == form;
  Matcher matcher(pattern, form);
  return matcher.run(nullptr);
}

PhonemeSeq instantiate(const WordPattern& pattern, const Bindings& bindings) {
  if (bindings.size() != pattern.var_count()) {
    throw Error(ErrorKind::kArity, "pattern has " + std::to_string(pattern.var_count()) + " variables but " +
                                       std::to_string(bindings.size()) + " bindings were given");
  }
  PhonemeSeq out;
  std::size_t next = 0;
  for (const Symbol s : pattern.symbols()) {
    if (s != kVarSymbol) {
      out.push_back(s);
      continue;
    }
    if (bindings[next].empty()) throw Error(ErrorKind::kArity, "variable bound to an empty segment");
    out += bindings[next++];
  }
  return out;
}

std::vector<AlternationPattern> enumerate_aps(PhonemeView f1, PhonemeView f2, std::size_t max_shared) {
  const auto blocks = matching_blocks(f1, f2);
  std::size_t shared = 0;
  for (const MatchBlock& b : blocks) shared += b.length;
  if (shared > max_shared || shared >= 63) {
    throw Error(ErrorKind::kGuardExceeded, std::to_string(shared) + " shared positions exceed the limit of " +
                                               std::to_string(max_shared));
  }

  std::set<AlternationPattern> out;
  const std::uint64_t subsets = std::uint64_t{1} << shared;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    PhonemeSeq lhs;
    PhonemeSeq rhs;
    std::size_t ia = 0;
    std::size_t ib = 0;
    std::size_t bit = 0;
    for (const MatchBlock& block : blocks) {
      lhs.append(f1.substr(ia, block.a_begin - ia));
      rhs.append(f2.substr(ib, block.b_begin - ib));
      bool in_var = false;
      for (std::size_t k = 0; k < block.length; ++k, ++bit) {
        if (mask >> bit & 1U) {
          if (!in_var) {
            lhs.push_back(kVarSymbol);
            rhs.push_back(kVarSymbol);
          }
          in_var = true;
        } else {
          lhs.push_back(f1[block.a_begin + k]);
          rhs.push_back(f1[block.a_begin + k]);
          in_var = false;
        }
      }
      ia = block.a_begin + block.length;
      ib = block.b_begin + block.length;
    }
    lhs.append(f1.substr(ia));
    rhs.append(f2.substr(ib));
    out.insert({WordPattern(std::move(lhs)), WordPattern(std::move(rhs))});
  }
  return {out.begin(), out.end()};
}

bool is_formal_analogy(PhonemeView f1, PhonemeView f2, PhonemeView f3, PhonemeView f4) {
  return bap(f1, f2) == bap(f3, f4);
}

AlternationPattern ap_of_wps(const WordPattern& p, const WordPattern& q) {
  auto as_form = [](const WordPattern& wp) {
    PhonemeSeq s = wp.symbols();
    std::replace(s.begin(), s.end(), kVarSymbol, kPlusLiteral);
    return s;
  };
  return bap(as_form(p), as_form(q));
}

std::string render(const WordPattern& pattern, const PhonemeInventory& inventory) {
  return inventory.decode(pattern.symbols());
}

std::string render(const AlternationPattern& pattern, const PhonemeInventory& inventory) {
  return render(pattern.first, inventory) + "/" + render(pattern.second, inventory);
}

WordPattern parse_word_pattern(std::string_view text, const PhonemeInventory& inventory) {
  PhonemeSeq out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    const std::string_view piece = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
    if (!piece.empty()) out += inventory.tokenize(piece);
    if (plus == std::string_view::npos) break;
    out.push_back(kVarSymbol);
    start = plus + 1;
  }
  return WordPattern(std::move(out));
}

AlternationPattern parse_alternation(std::string_view text, const PhonemeInventory& inventory) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(ErrorKind::kSchema, "alternation pattern '" + std::string(text) + "' needs exactly one '/'");
  }
  return {parse_word_pattern(text.substr(0, slash), inventory), parse_word_pattern(text.substr(slash + 1), inventory)};
}

}  // namespace anamorph
