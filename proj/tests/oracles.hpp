#pragma once

// Test-side oracles, independent of the library's codecs: words are
// generated length by length via explicit digit tuples and ordered by
// (length, colex). The position in that list is the expected rank.

#include "phaselab/words.hpp"

#include <algorithm>
#include <vector>

namespace phaselab::testing {

inline std::vector<Word> words_up_to_length(Alphabet a, std::size_t max_len) {
  std::vector<Word> all;
  all.emplace_back(a);  // the empty word
  std::vector<std::vector<Symbol>> current{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Symbol>> next;
    for (const auto& stem : current)
      for (Symbol s = 1; s <= a.size(); ++s) {
        auto w = stem;
        w.push_back(s);
        next.push_back(std::move(w));
      }
    std::vector<std::vector<Symbol>> sorted = next;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
      return false;
    });
    for (auto& w : sorted) all.emplace_back(a, w);
    current = std::move(next);
  }
  return all;
}

// Expected rank: index in the (length, colex) order.
inline long find_rank(const std::vector<Word>& ordered, const Word& w) {
  for (std::size_t i = 0; i < ordered.size(); ++i)
    if (ordered[i] == w) return static_cast<long>(i);
  return -1;
}

}  // namespace phaselab::testing
