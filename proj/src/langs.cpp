#include "phaselab/langs.hpp"

#include <utility>

namespace phaselab {

namespace {

std::vector<Symbol> kernel_symbols(const Word& w) {
  const auto& in = w.symbols();
  std::vector<Symbol> out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] == 1) {
      if (i + 1 < in.size() && in[i + 1] == 1) {
        out.push_back(1);
        i += 2;
        continue;
      }
      if (i + 1 < in.size() && in[i + 1] == 2) break;  // separator
      out.push_back(1);  // trailing or unpaired 1
      ++i;
      continue;
    }
    out.push_back(in[i]);
    ++i;
  }
  return out;
}

// Index just past the first separator, or npos when there is none.
std::size_t payload_start(const Word& w) {
  const auto& in = w.symbols();
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] == 1) {
      if (i + 1 < in.size() && in[i + 1] == 1) {
        i += 2;
        continue;
      }
      if (i + 1 < in.size() && in[i + 1] == 2) return i + 2;
      ++i;
      continue;
    }
    ++i;
  }
  return std::string::npos;
}

Language::Padder kernel_padder(Alphabet a) {
  return Language::Padder{
      [a](const Word& x, const Word& y) {
        Word core = escape_ones(kernel(x));
        std::vector<Symbol> syms = core.symbols();
        syms.push_back(1);
        syms.push_back(2);
        syms.insert(syms.end(), y.symbols().begin(), y.symbols().end());
        return Word(a, std::move(syms));
      },
      [a](const Word& z) {
        std::size_t start = payload_start(z);
        if (start == std::string::npos) return Word(a);
        std::vector<Symbol> syms(z.symbols().begin() + static_cast<std::ptrdiff_t>(start),
                                 z.symbols().end());
        return Word(a, std::move(syms));
      }};
}

// First member and non-member by rank. Every built-in has both within a
// handful of ranks.
Language::Witnesses scan_witnesses(const Language::Decider& decide, Alphabet a) {
  std::optional<Word> member, non_member;
  WordEnumerator e(a);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    if (!member && decide(e.current())) member = e.current();
    if (!non_member && !decide(e.current())) non_member = e.current();
    if (member && non_member) return {*member, *non_member};
    e.advance();
  }
  throw ConstructionError("no witness pair found in the first 10000 words");
}

}  // namespace

Word kernel(const Word& w) {
  return Word(w.alphabet(), kernel_symbols(w));
}

Word escape_ones(const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.length() * 2);
  for (Symbol s : w.symbols()) {
    out.push_back(s);
    if (s == 1) out.push_back(1);
  }
  return Word(w.alphabet(), std::move(out));
}

Word pad(const Language& lang, const Word& x, const Word& y) {
  if (!lang.padder) throw UnsupportedOperationError("language '" + lang.name + "' has no padder");
  return lang.padder->pad(x, y);
}

Word dec(const Language& lang, const Word& z) {
  if (!lang.padder) throw UnsupportedOperationError("language '" + lang.name + "' has no padder");
  return lang.padder->dec(z);
}

std::string builtin_name(Builtin which) {
  switch (which) {
    case Builtin::FirstSymbol: return "first-symbol";
    case Builtin::KernelMajority: return "kernel-majority";
    case Builtin::SumParity: return "sum-parity";
    case Builtin::SignedLengthDemo: return "signed-length-demo";
  }
  throw ConfigError("unknown builtin");
}

Language builtin_language(Builtin which, Alphabet a) {
  Language::Decider decide;
  switch (which) {
    case Builtin::FirstSymbol:
    case Builtin::SignedLengthDemo:
      decide = [](const Word& w) {
        std::vector<Symbol> core = kernel_symbols(w);
        return !core.empty() && core.front() == 1;
      };
      break;
    case Builtin::KernelMajority:
      decide = [k = a.size()](const Word& w) {
        std::vector<Symbol> core = kernel_symbols(w);
        std::size_t ones = 0, tops = 0;
        for (Symbol s : core) {
          if (s == 1) ++ones;
          if (s == k) ++tops;
        }
        return tops > ones;
      };
      break;
    case Builtin::SumParity:
      decide = [](const Word& w) {
        std::vector<Symbol> core = kernel_symbols(w);
        std::uint64_t sum = 0;
        for (Symbol s : core) sum += s;
        return sum % 2 == 1;
      };
      break;
    default:
      throw ConfigError("unknown builtin");
  }
  Language lang{a, builtin_name(which) + "@" + render_alphabet(a), decide,
                kernel_padder(a), std::nullopt};
  lang.witnesses = scan_witnesses(lang.decide, a);
  return lang;
}

Language builtin_language(const std::string& token) {
  auto at = token.find('@');
  if (at == std::string::npos)
    throw ConfigError("language token must look like <name>@k=<int>: " + token);
  std::string name = token.substr(0, at);
  Alphabet a = parse_alphabet(token.substr(at + 1));
  for (Builtin b : {Builtin::FirstSymbol, Builtin::KernelMajority, Builtin::SumParity,
                    Builtin::SignedLengthDemo}) {
    if (builtin_name(b) == name) return builtin_language(b, a);
  }
  throw ConfigError("unknown language: " + name);
}

Language complement(const Language& lang) {
  Language out = lang;
  out.name = "complement(" + lang.name + ")";
  out.decide = [inner = lang.decide](const Word& w) { return !inner(w); };
  if (lang.witnesses)
    out.witnesses = Language::Witnesses{lang.witnesses->non_member, lang.witnesses->member};
  return out;
}

}  // namespace phaselab
