#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "anamorph/lexicon.hpp"
#include "anamorph/pattern.hpp"

namespace fixtures {

// Inventory over a fixed set of German and English example forms, with
// helpers to move between surface strings, sequences and patterns.
class Ipa {
 public:
  Ipa() : Ipa(default_forms()) {}
  explicit Ipa(const std::vector<std::string>& forms) : inventory_(anamorph::build_inventory(forms)) {}

  const anamorph::PhonemeInventory& inventory() const { return inventory_; }

  anamorph::PhonemeSeq seq(std::string_view form) const { return inventory_.tokenize(form); }
  std::string str(anamorph::PhonemeView seq) const { return inventory_.decode(seq); }
  anamorph::WordPattern wp(std::string_view text) const { return anamorph::parse_word_pattern(text, inventory_); }
  anamorph::AlternationPattern ap(std::string_view text) const {
    return anamorph::parse_alternation(text, inventory_);
  }
  std::string render(const anamorph::WordPattern& p) const { return anamorph::render(p, inventory_); }
  std::string render(const anamorph::AlternationPattern& p) const { return anamorph::render(p, inventory_); }
  std::string bap(std::string_view a, std::string_view b) const { return render(anamorph::bap(seq(a), seq(b))); }

  static std::vector<std::string> default_forms() {
    return {"anʃpiːlənt", "apɡəzuːxt", "apɡəlɔxt", "apɡərʏkt", "apɡəɡʊkt", "apɡətai̯lt", "tariːfiːrən",
            "ʦɛrʃtrai̯təst", "wɜrks", "kæt", "dɔɡ", "sɪŋ", "sæŋ", "xy", "bʏç", "mboː"};
  }

 private:
  anamorph::PhonemeInventory inventory_;
};

}  // namespace fixtures
