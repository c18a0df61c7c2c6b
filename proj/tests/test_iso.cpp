#include "phaselab/iso.hpp"

#include <doctest.h>

using namespace phaselab;

TEST_CASE("step-up isomorphism basics") {
  PreservingIso iso = build_step_up_iso(Alphabet(3));
  CHECK(iso.dst == Alphabet(4));
  CHECK(iso.forward(Word(Alphabet(3))) == Word(Alphabet(4)));
  CHECK(iso.forward(Word(Alphabet(3), {3, 3})) == Word(Alphabet(4), {4, 2}));  // rank 12

  WordEnumerator e(Alphabet(3));
  for (Rank r = 0; r <= 10000; ++r) {
    CHECK(iso.backward(iso.forward(e.current())) == e.current());
    e.advance();
  }
}

TEST_CASE("odd source sizes step up to even ones") {
  for (std::uint32_t k : {3u, 5u, 7u}) {
    PreservingIso iso = build_step_up_iso(Alphabet(k));
    CHECK(iso.dst.size() % 2 == 0);
  }
}

TEST_CASE("conjugated language decides through the inverse map") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
  PreservingIso iso = build_step_up_iso(Alphabet(3));
  Language conj = conjugate_language(lang, iso);

  CHECK(conj.alphabet == Alphabet(4));
  CHECK(conj.decide(iso.forward(Word(Alphabet(3), {1, 3}))));
  CHECK(conj.decide(Word(Alphabet(4))) == lang.decide(Word(Alphabet(3))));

  WordEnumerator e(Alphabet(3));
  for (Rank r = 0; r <= 10000; ++r) {
    CHECK(conj.decide(iso.forward(e.current())) == lang.decide(e.current()));
    e.advance();
  }

  REQUIRE(conj.witnesses.has_value());
  CHECK(conj.decide(conj.witnesses->member));
  CHECK_FALSE(conj.decide(conj.witnesses->non_member));
}

TEST_CASE("alphabet mismatch is rejected") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(4));
  PreservingIso iso = build_step_up_iso(Alphabet(3));
  CHECK_THROWS_AS(conjugate_language(lang, iso), AlphabetMismatchError);
}

TEST_CASE("transferred padding satisfies the padding laws") {
  Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
  PreservingIso iso = build_step_up_iso(Alphabet(3));
  Language conj = conjugate_language(lang, iso);

  // pad(empty, empty) on the source side is the bare separator (1,2), rank 7
  Word expected = iso.forward(Word(Alphabet(3), {1, 2}));
  CHECK(pad(conj, Word(Alphabet(4)), Word(Alphabet(4))) == expected);

  auto words = enumerate_words(Alphabet(4), 60);
  for (const Word& y : words)
    for (const Word& z : words) {
      Word padded = pad(conj, y, z);
      CHECK(dec(conj, padded) == z);
      CHECK(conj.decide(padded) == conj.decide(y));
    }
}

TEST_CASE("padder transfer requires a padder") {
  Language bare{Alphabet(3), "bare", [](const Word&) { return false; }, std::nullopt,
                std::nullopt};
  PreservingIso iso = build_step_up_iso(Alphabet(3));
  CHECK_THROWS_AS(transfer_padding(bare, iso), UnsupportedOperationError);
  Language conj = conjugate_language(bare, iso);  // fine: padder stays absent
  CHECK_FALSE(conj.padder.has_value());
}
