#pragma once

#include "phaselab/roughp.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phaselab {

// Total, deterministic map from words to exact rationals.
struct Parameter {
  std::string name;
  std::function<Rational(const Word&)> eval;
};

Parameter length_parameter();
Parameter symbol_sum_parameter();
// +|w| on members, -|w| on non-members, 0 on the empty word.
Parameter signed_length_parameter(const Language& lang);
// count of the top symbol minus count of 1 in the kernel.
Parameter kernel_margin_parameter(Alphabet a);
// gp(x) = g(iso.forward(x)): the parameter seen through the isomorphism.
Parameter pull_back_parameter(const Parameter& g, const PreservingIso& iso);

// Resolves a CLI token; signed-length needs the language, the others don't.
Parameter parameter_by_token(const std::string& token, const Language& lang);

struct SliceStats {
  Rational value;
  std::uint64_t total = 0;
  std::uint64_t accepted = 0;
  std::uint64_t undecided = 0;

  Rational fraction() const { return Rational(accepted, total); }
};

enum class Verdict { Pass, Fail, Indeterminate };
std::string verdict_name(Verdict v);

struct ConditionReport {
  Verdict verdict = Verdict::Indeterminate;
  std::string diagnostic;
};

struct TransitionVerdicts {
  ConditionReport rises_to_one;      // accepting fraction -> 1 with a monotone envelope
  ConditionReport falls_to_zero;     // accepting fraction -> 0 with a monotone envelope
  ConditionReport mass_grows;        // slice mass grows exponentially away from the threshold
};

struct CurveReport {
  std::string language;
  std::string parameter;
  Rank max_rank;
  std::uint64_t corpus_size = 0;
  std::vector<SliceStats> slices;  // ordered by value
  std::optional<Rational> threshold;
  std::optional<TransitionVerdicts> verdicts;
};

struct Tolerances {
  Rational mono{0};            // allowed wiggle in the monotone envelopes
  Rational limit{1, 20};       // distance from 1 (resp. 0) required at the edges
  Rational r2{9, 10};          // minimum coefficient of determination for the mass fit
  Rational split{1, 10};       // allowed deviation in the proportional-split audit
  Rational delta{1};           // window width for the mass fit
  Rational fit_cutoff{2};      // slices closer to the threshold than this are not fitted
};

// Exact |S intersect L| / |S|; S must be nonempty.
Rational accepting_fraction(const Language& lang, const std::vector<Word>& sample);

// Groups all words of rank <= max_rank by parameter value and estimates the
// threshold by linear interpolation at the first half-crossing (midpoint of
// the value range when the curve never crosses). An attached heuristic
// contributes per-slice undecided counts.
CurveReport build_curve(const Language& lang, const Parameter& g, const Rank& max_rank,
                        std::uint64_t cap = kDefaultEnumerationCap,
                        const std::function<HeuristicOutcome(const Word&)>* heuristic = nullptr);

// Finite-window transition verdicts; needs at least five slices on each
// side of the threshold.
TransitionVerdicts assess_transition(const CurveReport& report, const Tolerances& tol = {});

// --- pullback span of image-length classes (conjugated B-set geometry) ---

struct PullbackProfile {
  struct Cell {
    std::uint64_t total = 0;
    std::uint64_t members = 0;
  };
  Alphabet src;
  Alphabet dst;
  std::uint64_t window = 0;   // source ranks [0, window) were profiled
  std::uint64_t skipped = 0;  // ranks the bijection could not map
  std::map<std::pair<std::uint64_t, std::uint64_t>, Cell> by_jm;  // (src class, dst class)
  std::map<std::uint64_t, Cell> by_j;
  std::map<std::uint64_t, Cell> by_m;

  bool src_class_complete(std::uint64_t j) const;
  bool dst_class_complete(std::uint64_t m) const;
};

// One pass over source ranks [0, window): classify every image rank by its
// encoded length over both alphabets. `lang` (optional) adds member counts.
PullbackProfile build_pullback_profile(const Language* lang, const PreservingIso& iso,
                                       const Bijection& phi, std::uint64_t window);

struct SpanBounds {
  std::uint64_t n = 0;
  bool empty = true;
  bool complete = false;       // the whole dst length class was covered
  std::uint64_t low = 0;
  std::uint64_t upp = 0;
  Interval bound;              // 2 n log_k(k+1)
  Verdict bound_ok = Verdict::Indeterminate;
  bool interior_filled = true;     // inner classes lie wholly inside the pullback
  bool boundary_nonempty = true;   // edge classes at least touch it
  bool union_covers = true;        // the covered pullback stays inside [low, upp]
};

SpanBounds span_bounds(const PullbackProfile& profile, std::uint64_t n);
SpanBounds measure_pullback_span(const PreservingIso& iso, const Bijection& phi, std::uint64_t n,
                                 std::uint64_t window);

// --- balance audits ---

struct BalanceRow {
  std::uint64_t n = 0;
  std::uint64_t size = 0;
  std::uint64_t accepted_correct = 0;
  std::uint64_t rejected_correct = 0;
  Rational accepted_fraction{0};
  Rational rejected_fraction{0};
  Rational floor_bound{0};  // 1/poly(n)
  bool pass = false;
};

struct BalanceReport {
  std::vector<BalanceRow> rows;
  bool fractions_ok = false;
  bool decay_ok = false;  // poly(n) (1/sqrt 2)^n nonincreasing, exact
  bool pass = false;
};

// Correct-accept and correct-reject fractions of every length preimage,
// each required to stay above 1/poly(n); the heuristic is evaluated on the
// image side of phi.
BalanceReport balance_audit(const Language& lang, const Bijection& phi,
                            const std::function<HeuristicOutcome(const Word&)>& image_heuristic,
                            const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi,
                            std::uint64_t cap = kDefaultEnumerationCap);

BalanceReport balance_audit(const Language& lang, const Bijection& phi, const HeuristicTarget& t,
                            const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Exact check of poly(n+1) <= sqrt(2) poly(n) over the range.
bool poly_decay_nonincreasing(const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi);

// lambda = 2 log_k(k+1), enclosed to width <= 1e-12.
Interval lambda_for(Alphabet a);

// Poly'(lambda n) <= |ln(1/sqrt 2)| / lambda * Poly(lambda n).
struct DerivativeRow {
  std::uint64_t n = 0;
  Interval lhs;
  Interval rhs;
  Verdict verdict = Verdict::Indeterminate;
};
DerivativeRow derivative_condition(const Polynomial& poly, const Interval& lambda,
                                   std::uint64_t n);

// Poly(lambda n) (1/sqrt 2)^n nonincreasing over [n_lo, n_hi], by intervals.
Verdict scaled_decay_nonincreasing(const Polynomial& poly, const Interval& lambda,
                                   std::uint64_t n_lo, std::uint64_t n_hi);

struct SplitRow {
  std::uint64_t j = 0;  // source length class
  std::uint64_t m = 0;  // dst length class it falls into
  std::uint64_t size = 0;
  Rational piece_fraction{0};
  Rational class_fraction{0};
  Rational deviation{0};
  bool pass = false;
};

struct AdequacyReport {
  std::vector<SplitRow> splits;
  bool split_ok = false;
  std::vector<DerivativeRow> derivative;
  Verdict derivative_ok = Verdict::Indeterminate;
  Verdict scaled_decay = Verdict::Indeterminate;
  BalanceReport alt_balance;
  bool pass = false;
};

// Odd-alphabet audit: proportional split of members across the pullback
// classes, the derivative condition on poly at lambda-spaced points, and
// the balance audit through the step-up isomorphism.
AdequacyReport adequacy_audit(const Language& lang, const PreservingIso& iso, BijectionPtr phi,
                              const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi,
                              std::uint64_t window, const Tolerances& tol = {},
                              std::uint64_t cap = kDefaultEnumerationCap);

// --- density and sparsity ---

BigInt density(const Language& lang, std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);

struct SparsityReport {
  bool exceeded = false;
  std::uint64_t at_n = 0;
  BigInt density_at{0};
  Rational bound_at{0};
  std::uint64_t n_hi = 0;
  std::vector<BigInt> density_by_n;  // density at 0..n_hi
};

// First n <= n_hi where the density climbs above poly_s(n), if any.
SparsityReport sparsity_probe(const Language& lang, const Polynomial& poly_s, std::uint64_t n_hi,
                              std::uint64_t cap = kDefaultEnumerationCap);

// CSV with header "value,total,accepted,undecided,fraction".
std::string render_curve_csv(const CurveReport& report);

}  // namespace phaselab
