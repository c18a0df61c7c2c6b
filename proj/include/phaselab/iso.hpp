#pragma once

#include "phaselab/langs.hpp"

#include <functional>

namespace phaselab {

// Rank-preserving bijection between the word sets of two alphabets whose
// sizes differ by one. Both directions are stored; the inverse of a
// membership-preserving bijection preserves membership as well.
struct PreservingIso {
  Alphabet src;
  Alphabet dst;
  std::function<Word(const Word&)> forward;   // src words -> dst words
  std::function<Word(const Word&)> backward;  // dst words -> src words
};

// The canonical step-up isomorphism: decode a word's rank over k and
// re-encode it over k+1. Rank-preserving in both directions.
PreservingIso build_step_up_iso(Alphabet src);

// Language over iso.dst that accepts v exactly when iso.backward(v) is
// accepted; witnesses are mapped through, and the padder is transferred.
Language conjugate_language(const Language& lang, const PreservingIso& iso);

// Padding scheme for the conjugated language: map both arguments back,
// pad there, map the result forward (and likewise for dec).
Language::Padder transfer_padding(const Language& lang, const PreservingIso& iso);

}  // namespace phaselab
