#pragma once

#include "phaselab/words.hpp"

#include <functional>
#include <optional>
#include <string>

namespace phaselab {

// A language over one alphabet: a total membership decider, optionally a
// padding scheme and one witness of each class. Deciders must be pure.
struct Language {
  using Decider = std::function<bool(const Word&)>;
  using PadFn = std::function<Word(const Word&, const Word&)>;
  using DecFn = std::function<Word(const Word&)>;

  struct Padder {
    PadFn pad;
    DecFn dec;
  };
  struct Witnesses {
    Word member;
    Word non_member;
  };

  Alphabet alphabet;
  std::string name;
  Decider decide;
  std::optional<Padder> padder;
  std::optional<Witnesses> witnesses;

  bool contains(const Word& w) const { return decide(w); }
};

// Kernel scheme: the payload-free core of a word. Scans left to right;
// (1,1) decodes to a single 1, (1,2) is the separator and ends the scan,
// anything else is copied through. A trailing lone 1 is copied.
Word kernel(const Word& w);

// Doubles every 1 so the kernel survives concatenation with a payload.
Word escape_ones(const Word& w);

// pad(x, y) = escape_ones(kernel(x)) ++ (1,2) ++ y. Membership of every
// built-in factors through the kernel, so padding never changes it.
Word pad(const Language& lang, const Word& x, const Word& y);

// Payload after the first unescaped separator; the empty word when no
// separator is present.
Word dec(const Language& lang, const Word& z);

enum class Builtin {
  FirstSymbol,      // kernel's first symbol is 1 (empty kernel rejected)
  KernelMajority,   // kernel has more k's than 1's
  SumParity,        // symbol sum of the kernel is odd
  SignedLengthDemo, // FirstSymbol, bundled with the signed-length parameter
};

Language builtin_language(Builtin which, Alphabet a);
Language builtin_language(const std::string& token);  // e.g. "first-symbol@k=3"

std::string builtin_name(Builtin which);

Language complement(const Language& lang);

}  // namespace phaselab
