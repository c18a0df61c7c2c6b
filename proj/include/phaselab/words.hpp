#pragma once

#include "phaselab/errors.hpp"
#include "phaselab/qmath.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace phaselab {

using Symbol = std::uint32_t;
using Rank = BigInt;

// Symbol set {1..k}, k >= 2.
class Alphabet {
public:
  explicit Alphabet(std::uint32_t size) : size_(size) {
    if (size < 2) throw InvalidWordError("alphabet must have at least two symbols");
  }

  std::uint32_t size() const { return size_; }
  bool contains(Symbol s) const { return s >= 1 && s <= size_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.size_ == b.size_; }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
  std::uint32_t size_;
};

// Finite symbol sequence over one alphabet; the empty word is valid.
// Symbols are stored least-significant first with respect to the rank codec.
class Word {
public:
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, std::vector<Symbol> symbols);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t length() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  friend bool operator==(const Word& x, const Word& y) {
    return x.alphabet_ == y.alphabet_ && x.symbols_ == y.symbols_;
  }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
  friend bool operator<(const Word& x, const Word& y);  // by length, then colex

private:
  friend class WordEnumerator;
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

// Position of w in the canonical enumeration: the bijective base-k value
// sum_j k^j * w_j. Exact, unbounded.
Rank rank_of(const Word& w);

// Inverse of rank_of; total on the nonnegative integers.
Word word_at(const Rank& r, Alphabet a);

// Rank-preserving change of alphabet.
Word transcode(const Word& w, Alphabet dst);

// Sum of the word's symbols.
Rank symbol_sum(const Word& w);

constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Streams words of one alphabet in rank order, starting at rank 0.
class WordEnumerator {
public:
  explicit WordEnumerator(Alphabet a) : current_(a) {}

  const Word& current() const { return current_; }
  const Rank& rank() const { return rank_; }
  void advance();

private:
  Word current_;
  Rank rank_ = 0;
};

// Words with ranks 0..max_rank, in order. Guarded by the enumeration cap.
std::vector<Word> enumerate_words(Alphabet a, const Rank& max_rank,
                                  std::uint64_t cap = kDefaultEnumerationCap);

// Number of words of length < n: (k^n - 1)/(k - 1). Rank of the first
// length-n word; length-n words occupy [length_start(n), length_start(n+1)).
Rank length_class_start(Alphabet a, std::uint64_t n);

// Length of the word encoding rank r, without materializing it.
std::uint64_t length_of_rank(const Rank& r, Alphabet a);

// Text codec: symbols as base-36 digit characters ('1'-'9' then 'a'-'z'),
// empty word as "-". Only alphabets with k <= 35 are renderable.
std::string render_word(const Word& w);
Word parse_word(const std::string& text, Alphabet a);
std::string render_alphabet(Alphabet a);   // "k=<int>"
Alphabet parse_alphabet(const std::string& text);

}  // namespace phaselab
