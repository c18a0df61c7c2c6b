#include "phaselab/langs.hpp"

#include <doctest.h>

#include <algorithm>

using namespace phaselab;

namespace {
Word w(Alphabet a, std::vector<Symbol> syms) { return Word(a, std::move(syms)); }
}  // namespace

TEST_CASE("kernel scan") {
  Alphabet k3(3);
  CHECK(kernel(Word(k3)) == Word(k3));
  CHECK(kernel(w(k3, {3, 1, 2, 2, 2})) == w(k3, {3}));
  CHECK(kernel(w(k3, {1, 1, 3})) == w(k3, {1, 3}));
  CHECK(kernel(w(k3, {1})) == w(k3, {1}));        // trailing lone 1
  CHECK(kernel(w(k3, {1, 3})) == w(k3, {1, 3}));  // 1 before a non-separator symbol
  CHECK(kernel(w(k3, {1, 2})) == Word(k3));       // bare separator
}

TEST_CASE("pad construction") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
  Alphabet k3(3);
  CHECK(pad(lang, w(k3, {3}), w(k3, {2, 2})) == w(k3, {3, 1, 2, 2, 2}));
  CHECK(pad(lang, Word(k3), Word(k3)) == w(k3, {1, 2}));
  CHECK(pad(lang, w(k3, {1, 3}), w(k3, {3})) == w(k3, {1, 1, 3, 1, 2, 3}));
}

TEST_CASE("dec recovers payloads and is total") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
  Alphabet k3(3);
  CHECK(dec(lang, w(k3, {3, 1, 2, 2, 2})) == w(k3, {2, 2}));
  CHECK(dec(lang, w(k3, {1, 2})) == Word(k3));
  CHECK(dec(lang, w(k3, {2, 2})) == Word(k3));  // no separator anywhere
}

TEST_CASE("padding invariants across built-ins") {
  for (std::uint32_t k : {2u, 3u}) {
    for (Builtin b : {Builtin::FirstSymbol, Builtin::KernelMajority, Builtin::SumParity}) {
      Language lang = builtin_language(b, Alphabet(k));
      auto words = enumerate_words(lang.alphabet, 40);
      for (const Word& x : words)
        for (const Word& y : words) {
          Word padded = pad(lang, x, y);
          CAPTURE(lang.name);
          CHECK(lang.decide(padded) == lang.decide(x));
          CHECK(dec(lang, padded) == y);
          CHECK(kernel(padded) == kernel(x));
          CHECK(padded.length() > y.length());
        }
    }
  }
}

TEST_CASE("pad image count matches the closed form") {
  Alphabet k3(3);
  Language lang = builtin_language(Builtin::FirstSymbol, k3);
  Word x = w(k3, {2, 3});
  for (std::uint64_t n = 0; n <= 3; ++n) {
    Rank payloads = length_class_start(k3, n + 1);  // (3^(n+1)-1)/2
    std::vector<Word> images;
    for (const Word& y : enumerate_words(k3, payloads - 1)) images.push_back(pad(lang, x, y));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    CHECK(Rank(images.size()) == payloads);
  }
}

TEST_CASE("first-symbol membership") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
  CHECK(lang.decide(w(Alphabet(3), {1, 3})));
  CHECK_FALSE(lang.decide(Word(Alphabet(3))));
  CHECK_FALSE(lang.decide(w(Alphabet(3), {1, 2})));  // kernel is empty
  CHECK_FALSE(lang.decide(w(Alphabet(3), {2, 1})));
}

TEST_CASE("kernel-majority membership") {
  Language lang = builtin_language(Builtin::KernelMajority, Alphabet(3));
  CHECK_FALSE(lang.decide(Word(Alphabet(3))));
  CHECK(lang.decide(w(Alphabet(3), {3})));
  CHECK_FALSE(lang.decide(w(Alphabet(3), {3, 1, 1})));  // kernel (3,1): tie
  CHECK(lang.decide(w(Alphabet(3), {3, 3, 1, 1})));     // kernel (3,3,1)
}

TEST_CASE("sum-parity membership factors through the kernel") {
  Language lang = builtin_language(Builtin::SumParity, Alphabet(2));
  CHECK(lang.decide(w(Alphabet(2), {1})));        // kernel sum 1
  CHECK_FALSE(lang.decide(w(Alphabet(2), {2})));  // kernel sum 2
  CHECK_FALSE(lang.decide(w(Alphabet(2), {1, 2})));  // kernel is empty, sum 0
  CHECK(lang.decide(w(Alphabet(2), {2, 1})));     // kernel (2,1), sum 3
}

TEST_CASE("witnesses decide as promised") {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    for (Builtin b : {Builtin::FirstSymbol, Builtin::KernelMajority, Builtin::SumParity,
                      Builtin::SignedLengthDemo}) {
      Language lang = builtin_language(b, Alphabet(k));
      REQUIRE(lang.witnesses.has_value());
      CHECK(lang.decide(lang.witnesses->member));
      CHECK_FALSE(lang.decide(lang.witnesses->non_member));
    }
  }
}

TEST_CASE("token parsing") {
  Language lang = builtin_language("first-symbol@k=3");
  CHECK(lang.alphabet == Alphabet(3));
  CHECK(lang.name == "first-symbol@k=3");
  CHECK_THROWS_AS(builtin_language("no-such-language@k=3"), ConfigError);
  CHECK_THROWS_AS(builtin_language("first-symbol"), ConfigError);
}

TEST_CASE("complement flips decisions, keeps padding, swaps witnesses") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
  Language comp = complement(lang);
  CHECK_FALSE(comp.decide(w(Alphabet(3), {1, 3})));
  CHECK(comp.witnesses->member == lang.witnesses->non_member);
  CHECK(comp.witnesses->non_member == lang.witnesses->member);

  Language twice = complement(comp);
  for (const Word& word : enumerate_words(Alphabet(3), 2000))
    CHECK(twice.decide(word) == lang.decide(word));

  for (const Word& x : enumerate_words(Alphabet(3), 25))
    for (const Word& y : enumerate_words(Alphabet(3), 25))
      CHECK(comp.decide(pad(comp, x, y)) == comp.decide(x));
}

TEST_CASE("languages without a padder refuse to pad") {
  Language bare{Alphabet(2), "bare", [](const Word&) { return true; }, std::nullopt,
                std::nullopt};
  CHECK_THROWS_AS(pad(bare, Word(Alphabet(2)), Word(Alphabet(2))), UnsupportedOperationError);
  CHECK_THROWS_AS(dec(bare, Word(Alphabet(2))), UnsupportedOperationError);
}
