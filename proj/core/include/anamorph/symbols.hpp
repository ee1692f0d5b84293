#pragma once

#include <string>
#include <string_view>

namespace anamorph {

/// One internal phoneme code. Surface multigraphs are remapped to a single
/// code each so that alignment works on atomic units.
using Symbol = char32_t;

/// A tokenized word-form (or a word pattern) as a sequence of codes.
using PhonemeSeq = std::u32string;
using PhonemeView = std::u32string_view;

/// Variable slot of a word pattern, rendered '+'.
inline constexpr Symbol kVarSymbol = 0;
/// A '+' that is part of a literal. Only produced when word patterns are
/// themselves aligned as if they were forms.
inline constexpr Symbol kPlusLiteral = 1;
/// Phoneme codes start here.
inline constexpr Symbol kFirstPhonemeCode = 2;

}  // namespace anamorph
