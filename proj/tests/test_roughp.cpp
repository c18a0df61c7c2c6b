#include "phaselab/roughp.hpp"

#include <doctest.h>

#include <set>

using namespace phaselab;

namespace {
Word w(Alphabet a, std::vector<Symbol> syms) { return Word(a, std::move(syms)); }
}  // namespace

TEST_CASE("target membership rule") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  HeuristicTarget t = make_heuristic_target(base);
  Alphabet k2(2);

  CHECK(t.target.decide(w(k2, {1, 2})));            // symbol sum 3, odd
  CHECK_FALSE(t.target.decide(w(k2, {1, 1, 2})));   // sum 4, odd length, no square
  CHECK(t.target.decide(Word(k2)) == base.decide(Word(k2)));  // empty square

  // squares carry their half's membership
  Word x = w(k2, {2, 1});  // kernel (2,1), sum 3: member of base
  Word xx = w(k2, {2, 1, 2, 1});
  CHECK(base.decide(x));
  CHECK(t.target.decide(xx));
  Word y = w(k2, {2});  // non-member of base
  CHECK_FALSE(t.target.decide(w(k2, {2, 2})));
  CHECK_FALSE(base.decide(y));
}

TEST_CASE("heuristic outcomes") {
  Alphabet k2(2);
  CHECK(heuristic_outcome(w(k2, {1, 2})) == HeuristicOutcome::Accept);
  CHECK(heuristic_outcome(w(k2, {1, 1, 2})) == HeuristicOutcome::Reject);
  CHECK(heuristic_outcome(w(k2, {1, 2, 1, 2})) == HeuristicOutcome::Undecided);
  CHECK(outcome_char(HeuristicOutcome::Accept) == 'A');
  CHECK(outcome_char(HeuristicOutcome::Reject) == 'R');
  CHECK(outcome_char(HeuristicOutcome::Undecided) == '_');
}

TEST_CASE("heuristic never contradicts the target, undecided only on squares") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  HeuristicTarget t = make_heuristic_target(base);
  WordEnumerator e(Alphabet(2));
  for (Rank r = 0; r < 2047; ++r) {  // all words of length <= 10
    HeuristicOutcome o = errorless_heuristic(t, e.current());
    bool member = t.target.decide(e.current());
    if (o == HeuristicOutcome::Accept) CHECK(member);
    if (o == HeuristicOutcome::Reject) CHECK_FALSE(member);
    if (o == HeuristicOutcome::Undecided) CHECK(is_square(e.current()));
    e.advance();
  }
}

TEST_CASE("undecided fraction under the identity bijection") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  HeuristicTarget t = make_heuristic_target(base);
  BijectionPtr id = identity_bijection(Alphabet(2));

  CHECK(undecided_fraction(t, *id, 4) == Rational(4, 16));  // 4 squares of length 4
  CHECK(undecided_fraction(t, *id, 3) == 0);
  CHECK(undecided_fraction(t, *id, 5) == 0);

  Rational prev(1);
  for (std::uint64_t n = 2; n <= 12; n += 2) {
    Rational f = undecided_fraction(t, *id, n);
    BigInt squares = BigInt(1) << static_cast<unsigned>(n / 2);
    BigInt total = BigInt(1) << static_cast<unsigned>(n);
    CHECK(f == Rational(squares, total));
    CHECK(f <= inv_sqrt2_pow(static_cast<unsigned>(n)).hi);
    CHECK(f <= prev);
    prev = f;
  }
}

TEST_CASE("rank matching pairs the class streams in order") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  HeuristicTarget t = make_heuristic_target(base);
  BijectionPtr phi = build_rank_matching_bijection(base, t.target, 5000);

  // smallest member of the base maps to the smallest member of the target
  Word first_member = Word(Alphabet(2), {1});
  REQUIRE(base.decide(first_member));
  CHECK(phi->forward(first_member) == Word(Alphabet(2), {1}));

  WordEnumerator e(Alphabet(2));
  for (Rank r = 0; r <= 5000; ++r) {
    Word image = phi->forward(e.current());
    CHECK(base.decide(e.current()) == t.target.decide(image));
    CHECK(phi->backward(image) == e.current());
    e.advance();
  }

  MatchReport report = match_report(*phi);
  CHECK(report.source_members + report.source_non_members == 5001);
  CHECK(report.matched_members == report.source_members);
  CHECK(report.matched_non_members == report.source_non_members);
  CHECK(report.unmatched_remainder() == 0);

  CHECK_THROWS_AS(phi->forward_rank(Rank(5001)), CoverageError);
}

TEST_CASE("length preimages partition a rank prefix") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  HeuristicTarget t = make_heuristic_target(base);
  BijectionPtr phi = build_rank_matching_bijection(base, t.target, 2000);

  auto b0 = preimage_of_length(*phi, 0);
  CHECK(b0.size() == 1);
  CHECK(b0[0] == phi->backward(Word(Alphabet(2))));

  std::set<Rank> seen;
  std::uint64_t total = 0;
  for (std::uint64_t n = 0; n <= 6; ++n) {
    auto b = preimage_of_length(*phi, n);
    CHECK(b.size() == (std::uint64_t{1} << n));
    total += b.size();
    for (const Word& x : b) seen.insert(rank_of(x));
  }
  CHECK(seen.size() == total);  // disjoint
  CHECK(total == 127);          // (2^7 - 1)/(2 - 1)
}

TEST_CASE("resource caps on length preimages") {
  BijectionPtr id = identity_bijection(Alphabet(2));
  CHECK_THROWS_AS(preimage_of_length(*id, 20, 1000), ResourceLimitError);
}

TEST_CASE("chain bijection with the default injections") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  HeuristicTarget t = make_heuristic_target(base);
  BijectionPtr phi = build_default_chain_bijection(base);

  CHECK(phi->forward(Word(Alphabet(2))) == Word(Alphabet(2)));  // fixed point stays put

  WordEnumerator e(Alphabet(2));
  std::set<Rank> images;
  for (Rank r = 0; r <= 2000; ++r) {
    Word image = phi->forward(e.current());
    CHECK(base.decide(e.current()) == t.target.decide(image));  // class preserving
    CHECK(phi->backward(image) == e.current());                 // mutual inverses
    images.insert(rank_of(image));
    e.advance();
  }
  CHECK(images.size() == 2001);  // injective on the prefix
}

TEST_CASE("words whose chain starts on the source side map through doubling") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  BijectionPtr phi = build_default_chain_bijection(base);
  Injection g = target_to_base_injection(base);
  WordEnumerator e(Alphabet(2));
  for (Rank r = 0; r <= 500; ++r) {
    if (!g.invert(e.current())) {
      Word expected = doubling_injection(Alphabet(2)).apply(e.current());
      CHECK(phi->forward(e.current()) == expected);
    }
    e.advance();
  }
}

TEST_CASE("target-to-base injection is injective and length-increasing") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(2));
  Injection g = target_to_base_injection(base);
  std::set<Rank> seen;
  WordEnumerator e(Alphabet(2));
  for (Rank r = 0; r <= 2000; ++r) {
    Word image = g.apply(e.current());
    CHECK(image.length() > e.current().length());
    seen.insert(rank_of(image));
    auto back = g.invert(image);
    REQUIRE(back.has_value());
    CHECK(*back == e.current());
    e.advance();
  }
  CHECK(seen.size() == 2001);
}

TEST_CASE("non-terminating chains hit the step budget") {
  Alphabet k2(2);
  // both "inverses" walk forward forever: no origin is ever found
  Injection bad_f{[](const Word& x) { return x; },
                  [](const Word& x) { return word_at(rank_of(x) + 1, x.alphabet()); }};
  Injection bad_g = bad_f;
  BijectionPtr phi = build_chain_bijection(bad_f, bad_g, k2, 100);
  CHECK_THROWS_AS(phi->forward(Word(k2, {1})), ConstructionError);
}

TEST_CASE("conjugated bijections keep the rank map") {
  Language base = builtin_language(Builtin::SumParity, Alphabet(3));
  HeuristicTarget t = make_heuristic_target(base);
  BijectionPtr phi = build_rank_matching_bijection(base, t.target, 3000);
  PreservingIso iso = build_step_up_iso(Alphabet(3));
  BijectionPtr conj = conjugate_bijection(phi, iso);

  CHECK(conj->alphabet() == Alphabet(4));
  WordEnumerator e(Alphabet(4));
  for (Rank r = 0; r <= 3000; ++r) {
    CHECK(conj->forward_rank(r) == phi->forward_rank(r));
    Word expected = iso.forward(phi->forward(iso.backward(e.current())));
    CHECK(conj->forward(e.current()) == expected);
    e.advance();
  }
}
