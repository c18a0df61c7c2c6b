#include "phaselab/words.hpp"

#include <algorithm>
#include <sstream>

namespace phaselab {

Word::Word(Alphabet a, std::vector<Symbol> symbols)
    : alphabet_(a), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_) {
    if (!alphabet_.contains(s)) {
      std::ostringstream os;
      os << "symbol " << s << " out of range for k=" << a.size();
      throw InvalidWordError(os.str());
    }
  }
}

bool operator<(const Word& x, const Word& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  // colex: compare from the most significant position down
  const auto& a = x.symbols();
  const auto& b = y.symbols();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Rank rank_of(const Word& w) {
  const std::uint32_t k = w.alphabet().size();
  Rank r = 0;
  const auto& syms = w.symbols();
  for (std::size_t i = syms.size(); i-- > 0;) {
    if (!w.alphabet().contains(syms[i])) throw InvalidWordError("symbol out of range");
    r = r * k + syms[i];
  }
  return r;
}

Word word_at(const Rank& r, Alphabet a) {
  if (r < 0) throw InvalidWordError("rank must be nonnegative");
  const std::uint32_t k = a.size();
  Rank n = r;
  std::vector<Symbol> syms;
  while (n > 0) {
    Rank d = (n - 1) % k + 1;
    syms.push_back(static_cast<Symbol>(d));
    n = (n - d) / k;
  }
  return Word(a, std::move(syms));
}

Word transcode(const Word& w, Alphabet dst) {
  return word_at(rank_of(w), dst);
}

Rank symbol_sum(const Word& w) {
  Rank total = 0;
  for (Symbol s : w.symbols()) {
    if (!w.alphabet().contains(s)) throw InvalidWordError("symbol out of range");
    total += s;
  }
  return total;
}

void WordEnumerator::advance() {
  // bijective base-k increment, little-endian
  const std::uint32_t k = current_.alphabet_.size();
  auto& syms = current_.symbols_;
  std::size_t i = 0;
  for (;;) {
    if (i == syms.size()) {
      syms.push_back(1);
      break;
    }
    if (syms[i] < k) {
      ++syms[i];
      break;
    }
    syms[i] = 1;
    ++i;
  }
  ++rank_;
}

std::vector<Word> enumerate_words(Alphabet a, const Rank& max_rank, std::uint64_t cap) {
  if (max_rank < 0) return {};
  if (max_rank + 1 > cap) {
    std::ostringstream os;
    os << "enumeration of " << (max_rank + 1) << " words exceeds cap " << cap;
    throw ResourceLimitError(os.str());
  }
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(max_rank + 1));
  WordEnumerator e(a);
  for (Rank r = 0; r <= max_rank; ++r) {
    out.push_back(e.current());
    e.advance();
  }
  return out;
}

Rank length_class_start(Alphabet a, std::uint64_t n) {
  Rank pow = boost::multiprecision::pow(Rank(a.size()), static_cast<unsigned>(n));
  return (pow - 1) / (a.size() - 1);
}

std::uint64_t length_of_rank(const Rank& r, Alphabet a) {
  if (r < 0) throw InvalidWordError("rank must be nonnegative");
  std::uint64_t len = 0;
  Rank boundary = 1;  // number of words of length <= len
  Rank pow = 1;
  while (r >= boundary) {
    ++len;
    pow *= a.size();
    boundary += pow;
  }
  return len;
}

namespace {

char symbol_char(Symbol s) {
  if (s <= 9) return static_cast<char>('0' + s);
  return static_cast<char>('a' + (s - 10));
}

Symbol char_symbol(char c) {
  if (c >= '1' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(c - 'a' + 10);
  throw InvalidWordError(std::string("bad symbol character '") + c + "'");
}

}  // namespace

std::string render_word(const Word& w) {
  if (w.alphabet().size() > 35)
    throw UnsupportedOperationError("text codec supports k <= 35 only");
  if (w.empty()) return "-";
  std::string out;
  out.reserve(w.length());
  for (Symbol s : w.symbols()) out.push_back(symbol_char(s));
  return out;
}

Word parse_word(const std::string& text, Alphabet a) {
  if (a.size() > 35) throw UnsupportedOperationError("text codec supports k <= 35 only");
  if (text == "-") return Word(a);
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) {
    Symbol s = char_symbol(c);
    if (!a.contains(s)) {
      std::ostringstream os;
      os << "symbol '" << c << "' out of range for " << render_alphabet(a);
      throw InvalidWordError(os.str());
    }
    syms.push_back(s);
  }
  return Word(a, std::move(syms));
}

std::string render_alphabet(Alphabet a) {
  return "k=" + std::to_string(a.size());
}

Alphabet parse_alphabet(const std::string& text) {
  if (text.rfind("k=", 0) != 0) throw ConfigError("alphabet must look like k=<int>: " + text);
  try {
    unsigned long k = std::stoul(text.substr(2));
    return Alphabet(static_cast<std::uint32_t>(k));
  } catch (const std::exception&) {
    throw ConfigError("bad alphabet: " + text);
  }
}

}  // namespace phaselab
