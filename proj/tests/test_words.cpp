#include "phaselab/words.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace phaselab;

TEST_CASE("rank examples") {
  CHECK(rank_of(Word(Alphabet(3))) == 0);
  CHECK(rank_of(Word(Alphabet(2), {2, 1})) == 4);   // 4th word after the empty one
  CHECK(rank_of(Word(Alphabet(3), {1, 3})) == 10);  // 1*3^0 + 3*3^1
}

TEST_CASE("rank agrees with the sorted enumeration oracle") {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    Alphabet a(k);
    auto ordered = testing::words_up_to_length(a, 5);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      CAPTURE(k);
      CAPTURE(i);
      CHECK(rank_of(ordered[i]) == i);
      CHECK(word_at(Rank(i), a) == ordered[i]);
    }
  }
}

TEST_CASE("unrank examples") {
  CHECK(word_at(0, Alphabet(2)) == Word(Alphabet(2)));
  CHECK(word_at(4, Alphabet(2)) == Word(Alphabet(2), {2, 1}));
  CHECK(word_at(12, Alphabet(4)) == Word(Alphabet(4), {4, 2}));  // 4 + 2*4
}

TEST_CASE("round trips hold exactly, including huge ranks") {
  for (std::uint32_t k : {2u, 3u, 5u}) {
    Alphabet a(k);
    WordEnumerator e(a);
    for (Rank r = 0; r <= 3000; ++r) {
      CHECK(rank_of(word_at(r, a)) == r);
      CHECK(word_at(rank_of(e.current()), a) == e.current());
      e.advance();
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Rank r = Rank(rng()) * Rank(rng()) + Rank(rng());  // ~10^38
    for (std::uint32_t k : {2u, 3u, 4u, 5u}) {
      CHECK(rank_of(word_at(r, Alphabet(k))) == r);
    }
  }
}

TEST_CASE("transcoding preserves rank and inverts") {
  Alphabet k3(3), k4(4);
  CHECK(transcode(Word(k3), k4) == Word(k4));
  CHECK(transcode(Word(k3, {2, 1}), k4) == Word(k4, {1, 1}));  // rank 5 both sides
  CHECK(transcode(Word(k3, {3, 3}), k4) == Word(k4, {4, 2}));  // rank 12 both sides
  WordEnumerator e(k3);
  for (Rank r = 0; r <= 5000; ++r) {
    Word v = transcode(e.current(), k4);
    CHECK(rank_of(v) == r);
    CHECK(transcode(v, k3) == e.current());
    e.advance();
  }
}

TEST_CASE("transcoded prefix stays bijective") {
  Alphabet k3(3), k4(4);
  std::vector<Word> images;
  WordEnumerator e(k3);
  for (Rank r = 0; r < 500; ++r) {
    images.push_back(transcode(e.current(), k4));
    e.advance();
  }
  std::sort(images.begin(), images.end());
  CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
  CHECK(rank_of(images.front()) == 0);
  CHECK(rank_of(images.back()) == 499);
}

TEST_CASE("length relation through one alphabet step") {
  Alphabet k2(2), k3(3);
  Interval log_ratio = log_ratio_interval(Rational(3), Rational(2), Rational(1, 1000000));
  WordEnumerator e(k2);
  for (Rank r = 0; r <= 4000; ++r) {
    Word image = transcode(e.current(), k3);
    CHECK(image.length() <= e.current().length());
    // |w| <= 2 |image| log_k(k+1) + 1
    Interval bound = Interval(Rational(2 * image.length())) * log_ratio + Interval(Rational(1));
    CHECK(Rational(e.current().length()) <= bound.hi);
    CHECK(compare_leq(Interval(Rational(e.current().length())), bound) !=
          IntervalOrder::Greater);
    e.advance();
  }
}

TEST_CASE("enumeration order and cap") {
  auto words = enumerate_words(Alphabet(2), 2);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == Word(Alphabet(2)));
  CHECK(words[1] == Word(Alphabet(2), {1}));
  CHECK(words[2] == Word(Alphabet(2), {2}));

  CHECK(enumerate_words(Alphabet(3), 0).size() == 1);

  auto seven = enumerate_words(Alphabet(2), 6);
  CHECK(seven.back() == Word(Alphabet(2), {2, 2}));  // rank 6 = 2 + 2*2

  CHECK_THROWS_AS(enumerate_words(Alphabet(2), 100, 10), ResourceLimitError);
}

TEST_CASE("symbol sums") {
  CHECK(symbol_sum(Word(Alphabet(2))) == 0);
  CHECK(symbol_sum(Word(Alphabet(2), {2, 1})) == 3);
  CHECK(symbol_sum(Word(Alphabet(3), {3, 3})) == 6);
}

TEST_CASE("invalid symbols are rejected") {
  CHECK_THROWS_AS(Word(Alphabet(3), {4}), InvalidWordError);
  CHECK_THROWS_AS(Word(Alphabet(3), {0}), InvalidWordError);
  CHECK_THROWS_AS(Alphabet(1), InvalidWordError);
}

TEST_CASE("length classes") {
  Alphabet k3(3);
  CHECK(length_class_start(k3, 0) == 0);
  CHECK(length_class_start(k3, 1) == 1);
  CHECK(length_class_start(k3, 2) == 4);
  CHECK(length_class_start(k3, 3) == 13);
  CHECK(length_of_rank(0, k3) == 0);
  CHECK(length_of_rank(3, k3) == 1);
  CHECK(length_of_rank(4, k3) == 2);
  CHECK(length_of_rank(12, k3) == 2);
  CHECK(length_of_rank(13, k3) == 3);
  WordEnumerator e(k3);
  for (Rank r = 0; r < 1000; ++r) {
    CHECK(length_of_rank(r, k3) == e.current().length());
    e.advance();
  }
}

TEST_CASE("text codec") {
  Alphabet k3(3), k12(12);
  CHECK(render_word(Word(k3)) == "-");
  CHECK(parse_word("-", k3) == Word(k3));
  CHECK(render_word(Word(k3, {2, 1})) == "21");
  CHECK(parse_word("21", k3) == Word(k3, {2, 1}));
  CHECK(render_word(Word(k12, {10, 11, 12})) == "abc");
  CHECK(parse_word("abc", k12) == Word(k12, {10, 11, 12}));
  CHECK_THROWS_AS(parse_word("4", k3), InvalidWordError);
  CHECK_THROWS_AS(parse_word("0", k3), InvalidWordError);
  CHECK(render_alphabet(k3) == "k=3");
  CHECK(parse_alphabet("k=3") == k3);
  CHECK_THROWS_AS(parse_alphabet("3"), ConfigError);
  CHECK_THROWS_AS(render_word(Word(Alphabet(36))), UnsupportedOperationError);
}
