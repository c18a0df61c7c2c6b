#include "phaselab/roughp.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace phaselab {

namespace {

std::uint64_t to_u64(const Rank& r, const char* what) {
  if (r < 0 || r > Rank(UINT64_MAX))
    throw ResourceLimitError(std::string(what) + ": rank outside the 64-bit working range");
  return r.convert_to<std::uint64_t>();
}

// Plain bitvector with block-sampled rank and binary-searched select.
class BitRank {
public:
  void reserve(std::uint64_t bits) { blocks_.reserve((bits + 63) / 64); }

  void push_back(bool bit) {
    std::uint64_t i = size_++;
    if (i / 64 == blocks_.size()) blocks_.push_back(0);
    if (bit) blocks_[i / 64] |= (std::uint64_t{1} << (i % 64));
  }

  void finalize() {
    prefix_.resize(blocks_.size() + 1, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      prefix_[b + 1] = prefix_[b] + std::popcount(blocks_[b]);
  }

  std::uint64_t size() const { return size_; }
  bool get(std::uint64_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1; }

  // ones among positions [0, i)
  std::uint64_t rank1(std::uint64_t i) const {
    std::uint64_t b = i / 64, r = i % 64;
    std::uint64_t count = prefix_[b];
    if (r) count += std::popcount(blocks_[b] & ((std::uint64_t{1} << r) - 1));
    return count;
  }
  std::uint64_t rank0(std::uint64_t i) const { return i - rank1(i); }

  // position of the j-th one (0-based)
  std::uint64_t select1(std::uint64_t j) const {
    std::size_t lo = 0, hi = blocks_.size();
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      (prefix_[mid] <= j ? lo : hi) = mid;
    }
    std::uint64_t need = j - prefix_[lo];
    std::uint64_t word = blocks_[lo];
    for (std::uint64_t pos = 0;; ++pos) {
      if (word & 1) {
        if (need == 0) return lo * 64 + pos;
        --need;
      }
      word >>= 1;
    }
  }

  std::uint64_t select0(std::uint64_t j) const {
    std::size_t lo = 0, hi = blocks_.size();
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      (mid * 64 - prefix_[mid] <= j ? lo : hi) = mid;
    }
    std::uint64_t need = j - (lo * 64 - prefix_[lo]);
    std::uint64_t word = blocks_[lo];
    for (std::uint64_t pos = 0;; ++pos) {
      if (!(word & 1)) {
        if (need == 0) return lo * 64 + pos;
        --need;
      }
      word >>= 1;
    }
  }

private:
  std::vector<std::uint64_t> blocks_;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t size_ = 0;
};

}  // namespace

char outcome_char(HeuristicOutcome o) {
  switch (o) {
    case HeuristicOutcome::Accept: return 'A';
    case HeuristicOutcome::Reject: return 'R';
    case HeuristicOutcome::Undecided: return '_';
  }
  return '?';
}

bool is_square(const Word& w) {
  const auto& s = w.symbols();
  if (s.size() % 2 != 0) return false;
  std::size_t h = s.size() / 2;
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(h),
                    s.begin() + static_cast<std::ptrdiff_t>(h));
}

std::optional<Word> square_root(const Word& w) {
  if (!is_square(w)) return std::nullopt;
  const auto& s = w.symbols();
  return Word(w.alphabet(),
              std::vector<Symbol>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2)));
}

HeuristicOutcome heuristic_outcome(const Word& w) {
  std::uint64_t sum = 0;
  for (Symbol s : w.symbols()) sum += s;
  if (sum % 2 == 1) return HeuristicOutcome::Accept;
  if (is_square(w)) return HeuristicOutcome::Undecided;
  return HeuristicOutcome::Reject;
}

HeuristicTarget make_heuristic_target(const Language& base) {
  Language target{base.alphabet,
                  "target(" + base.name + ")",
                  [decide = base.decide](const Word& w) {
                    if (symbol_sum(w) % 2 == 1) return true;
                    auto half = square_root(w);
                    return half.has_value() && decide(*half);
                  },
                  std::nullopt,
                  std::nullopt};
  return HeuristicTarget{base, std::move(target)};
}

HeuristicOutcome errorless_heuristic(const HeuristicTarget&, const Word& w) {
  return heuristic_outcome(w);
}

Word Bijection::forward(const Word& w) const {
  return word_at(forward_rank(rank_of(w)), alphabet());
}

Word Bijection::backward(const Word& v) const {
  return word_at(backward_rank(rank_of(v)), alphabet());
}

namespace {

class IdentityBijection final : public Bijection {
public:
  explicit IdentityBijection(Alphabet a) : a_(a) {}
  Alphabet alphabet() const override { return a_; }
  Word forward(const Word& w) const override { return w; }
  Word backward(const Word& v) const override { return v; }
  Rank forward_rank(const Rank& r) const override { return r; }
  Rank backward_rank(const Rank& s) const override { return s; }

private:
  Alphabet a_;
};

}  // namespace

BijectionPtr identity_bijection(Alphabet a) {
  return std::make_shared<IdentityBijection>(a);
}

class RankMatchingBijection final : public Bijection {
public:
  RankMatchingBijection(const Language& from, const Language& to, const Rank& max_rank,
                        std::uint64_t dst_scan_cap)
      : a_(from.alphabet) {
    if (from.alphabet != to.alphabet)
      throw AlphabetMismatchError("rank matching needs both languages over one alphabet");
    coverage_ = to_u64(max_rank, "rank matching window") + 1;
    if (dst_scan_cap == 0) dst_scan_cap = 8 * coverage_ + 1024;

    src_member_.reserve(coverage_);
    WordEnumerator src(a_);
    for (std::uint64_t r = 0; r < coverage_; ++r) {
      src_member_.push_back(from.decide(src.current()));
      src.advance();
    }
    src_member_.finalize();
    report_.source_members = src_member_.rank1(coverage_);
    report_.source_non_members = coverage_ - report_.source_members;

    dst_members_.reserve(report_.source_members);
    dst_non_members_.reserve(report_.source_non_members);
    WordEnumerator dst(a_);
    for (std::uint64_t s = 0; s < dst_scan_cap; ++s) {
      bool need_m = dst_members_.size() < report_.source_members;
      bool need_n = dst_non_members_.size() < report_.source_non_members;
      if (!need_m && !need_n) break;
      if (to.decide(dst.current())) {
        if (need_m) dst_members_.push_back(s);
      } else {
        if (need_n) dst_non_members_.push_back(s);
      }
      dst.advance();
    }
    report_.matched_members = dst_members_.size();
    report_.matched_non_members = dst_non_members_.size();
  }

  Alphabet alphabet() const override { return a_; }
  std::optional<Rank> coverage() const override { return Rank(coverage_); }
  const MatchReport& report() const { return report_; }

  Rank forward_rank(const Rank& r) const override {
    std::uint64_t rr = to_u64(r, "rank matching forward");
    if (r < 0 || rr >= coverage_)
      throw CoverageError("source rank outside the matched window");
    if (src_member_.get(rr)) {
      std::uint64_t idx = src_member_.rank1(rr);
      if (idx >= dst_members_.size())
        throw CoverageError("member index beyond the matched image stream");
      return Rank(dst_members_[idx]);
    }
    std::uint64_t idx = src_member_.rank0(rr);
    if (idx >= dst_non_members_.size())
      throw CoverageError("non-member index beyond the matched image stream");
    return Rank(dst_non_members_[idx]);
  }

  Rank backward_rank(const Rank& s) const override {
    std::uint64_t ss = to_u64(s, "rank matching backward");
    auto mit = std::lower_bound(dst_members_.begin(), dst_members_.end(), ss);
    if (mit != dst_members_.end() && *mit == ss) {
      auto idx = static_cast<std::uint64_t>(mit - dst_members_.begin());
      return Rank(src_member_.select1(idx));
    }
    auto nit = std::lower_bound(dst_non_members_.begin(), dst_non_members_.end(), ss);
    if (nit != dst_non_members_.end() && *nit == ss) {
      auto idx = static_cast<std::uint64_t>(nit - dst_non_members_.begin());
      return Rank(src_member_.select0(idx));
    }
    throw CoverageError("image rank outside the matched window");
  }

private:
  Alphabet a_;
  std::uint64_t coverage_ = 0;
  BitRank src_member_;
  std::vector<std::uint64_t> dst_members_;
  std::vector<std::uint64_t> dst_non_members_;
  MatchReport report_;
};

BijectionPtr build_rank_matching_bijection(const Language& from, const Language& to,
                                           const Rank& max_rank, std::uint64_t dst_scan_cap) {
  return std::make_shared<RankMatchingBijection>(from, to, max_rank, dst_scan_cap);
}

MatchReport match_report(const Bijection& phi) {
  if (auto* p = dynamic_cast<const RankMatchingBijection*>(&phi)) return p->report();
  throw UnsupportedOperationError("match reports exist only for rank-matching bijections");
}

Injection doubling_injection(Alphabet a) {
  return Injection{
      [a](const Word& x) {
        std::vector<Symbol> syms = x.symbols();
        syms.insert(syms.end(), x.symbols().begin(), x.symbols().end());
        return Word(a, std::move(syms));
      },
      [](const Word& v) { return square_root(v); }};
}

namespace {

// Payload tags for the three cases; (1) and (2) exist in every alphabet.
// Case tags plus distinct witness kernels keep the images disjoint.
std::vector<Symbol> tagged_payload(std::initializer_list<Symbol> tag, const Word& y) {
  std::vector<Symbol> p(tag);
  p.insert(p.end(), y.symbols().begin(), y.symbols().end());
  return p;
}

}  // namespace

Injection target_to_base_injection(const Language& base) {
  if (!base.padder || !base.witnesses)
    throw UnsupportedOperationError("injection needs a padder and witnesses");
  const Language lang = base;  // value copy shared by both closures
  auto encode = [lang](const Word& y) {
    Word member = lang.witnesses->member;
    Word non_member = lang.witnesses->non_member;
    if (symbol_sum(y) % 2 == 1)
      return pad(lang, member, Word(lang.alphabet, tagged_payload({1}, y)));
    if (auto half = square_root(y))
      return pad(lang, *half, Word(lang.alphabet, tagged_payload({2}, y)));
    return pad(lang, non_member, Word(lang.alphabet, tagged_payload({1, 2}, y)));
  };
  auto decode = [lang, encode](const Word& z) -> std::optional<Word> {
    Word payload = dec(lang, z);
    const auto& p = payload.symbols();
    std::optional<Word> candidate;
    if (p.size() >= 2 && p[0] == 1 && p[1] == 2)
      candidate = Word(lang.alphabet, {p.begin() + 2, p.end()});
    else if (!p.empty() && (p[0] == 1 || p[0] == 2))
      candidate = Word(lang.alphabet, {p.begin() + 1, p.end()});
    if (candidate && encode(*candidate) == z) return candidate;
    // the (1,2...) payload is ambiguous between two tags; retry the short tag
    if (p.size() >= 2 && p[0] == 1) {
      Word alt(lang.alphabet, {p.begin() + 1, p.end()});
      if (encode(alt) == z) return alt;
    }
    return std::nullopt;
  };
  return Injection{std::move(encode), std::move(decode)};
}

namespace {

class ChainBijection final : public Bijection {
public:
  ChainBijection(Injection f, Injection g, Alphabet a, std::uint64_t budget)
      : f_(std::move(f)), g_(std::move(g)), a_(a), budget_(budget) {}

  Alphabet alphabet() const override { return a_; }

  Word forward(const Word& w) const override {
    if (origin_is_forward_side(w, /*start_on_source=*/true)) return f_.apply(w);
    auto back = g_.invert(w);
    return *back;  // origin check already proved membership in g's image
  }

  Word backward(const Word& v) const override {
    if (origin_is_forward_side(v, /*start_on_source=*/false)) {
      auto half = f_.invert(v);
      if (!half) throw ConstructionError("chain origin inconsistent with the forward injection");
      return *half;
    }
    return g_.apply(v);
  }

  Rank forward_rank(const Rank& r) const override { return rank_of(forward(word_at(r, a_))); }
  Rank backward_rank(const Rank& s) const override { return rank_of(backward(word_at(s, a_))); }

private:
  // Chase preimages alternating g^-1, f^-1 until one injection fails to
  // invert. A chain that bottoms out on the source side (or cycles) pairs
  // with f; one that bottoms out on the image side pairs with g.
  bool origin_is_forward_side(const Word& start, bool start_on_source) const {
    Word cur = start;
    bool on_source = start_on_source;
    for (std::uint64_t step = 0; step < budget_; ++step) {
      const Injection& inj = on_source ? g_ : f_;
      auto prev = inj.invert(cur);
      if (!prev) return on_source;
      if (*prev == cur) return true;  // fixed point: cycle, assigned to f
      cur = *prev;
      on_source = !on_source;
    }
    throw ConstructionError(
        "preimage chain exceeded the step budget; an injection is not length-increasing");
  }

  Injection f_;
  Injection g_;
  Alphabet a_;
  std::uint64_t budget_;
};

}  // namespace

BijectionPtr build_chain_bijection(Injection f, Injection g, Alphabet a,
                                   std::uint64_t step_budget) {
  return std::make_shared<ChainBijection>(std::move(f), std::move(g), a, step_budget);
}

BijectionPtr build_default_chain_bijection(const Language& base, std::uint64_t step_budget) {
  return build_chain_bijection(doubling_injection(base.alphabet),
                               target_to_base_injection(base), base.alphabet, step_budget);
}

std::vector<Word> preimage_of_length(const Bijection& phi, std::uint64_t n, std::uint64_t cap) {
  Alphabet a = phi.alphabet();
  Rank count = boost::multiprecision::pow(Rank(a.size()), static_cast<unsigned>(n));
  if (count > cap) {
    std::ostringstream os;
    os << "length class of " << count << " words exceeds cap " << cap;
    throw ResourceLimitError(os.str());
  }
  Rank start = length_class_start(a, n);
  std::vector<Word> out;
  out.reserve(count.convert_to<std::size_t>());
  for (Rank s = start; s < start + count; ++s)
    out.push_back(word_at(phi.backward_rank(s), a));
  std::sort(out.begin(), out.end());
  return out;
}

Rational undecided_fraction(const HeuristicTarget& t, const Bijection& phi, std::uint64_t n,
                            std::uint64_t cap) {
  std::vector<Word> preimage = preimage_of_length(phi, n, cap);
  if (preimage.empty()) throw UndefinedFractionError("empty length preimage");
  std::uint64_t undecided = 0;
  for (const Word& w : preimage)
    if (errorless_heuristic(t, w) == HeuristicOutcome::Undecided) ++undecided;
  return Rational(undecided, preimage.size());
}

namespace {

class ConjugatedBijection final : public Bijection {
public:
  ConjugatedBijection(BijectionPtr inner, PreservingIso iso)
      : inner_(std::move(inner)), iso_(std::move(iso)) {}

  Alphabet alphabet() const override { return iso_.dst; }
  Word forward(const Word& v) const override {
    return iso_.forward(inner_->forward(iso_.backward(v)));
  }
  Word backward(const Word& v) const override {
    return iso_.forward(inner_->backward(iso_.backward(v)));
  }
  Rank forward_rank(const Rank& r) const override { return inner_->forward_rank(r); }
  Rank backward_rank(const Rank& s) const override { return inner_->backward_rank(s); }
  std::optional<Rank> coverage() const override { return inner_->coverage(); }

private:
  BijectionPtr inner_;
  PreservingIso iso_;
};

}  // namespace

BijectionPtr conjugate_bijection(BijectionPtr phi, const PreservingIso& iso) {
  if (phi->alphabet() != iso.src)
    throw AlphabetMismatchError("bijection alphabet does not match the isomorphism source");
  return std::make_shared<ConjugatedBijection>(std::move(phi), iso);
}

}  // namespace phaselab
