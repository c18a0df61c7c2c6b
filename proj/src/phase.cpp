#include "phaselab/phase.hpp"

#include <algorithm>
#include <sstream>

namespace phaselab {

namespace {

const Rational kLogEps{BigInt(1), BigInt("100000000000000")};  // 1e-14

std::uint64_t to_u64_checked(const Rank& r, const char* what) {
  if (r < 0 || r > Rank(UINT64_MAX))
    throw ResourceLimitError(std::string(what) + ": rank outside the 64-bit working range");
  return r.convert_to<std::uint64_t>();
}

BigInt rational_floor(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt d = num / den;
  if (num < 0 && d * den != num) --d;
  return d;
}

Interval abs_ln_inv_sqrt2() {  // |ln(1/sqrt 2)| = ln(2)/2
  Interval ln2 = ln_interval(Rational(2), kLogEps);
  return Interval(Rational(1, 2)) * ln2;
}

}  // namespace

Parameter length_parameter() {
  return {"length", [](const Word& w) { return Rational(w.length()); }};
}

Parameter symbol_sum_parameter() {
  return {"symbol-sum", [](const Word& w) { return Rational(symbol_sum(w)); }};
}

Parameter signed_length_parameter(const Language& lang) {
  return {"signed-length", [decide = lang.decide](const Word& w) {
            if (w.empty()) return Rational(0);
            Rational len(w.length());
            return decide(w) ? len : -len;
          }};
}

Parameter kernel_margin_parameter(Alphabet a) {
  return {"kernel-margin", [k = a.size()](const Word& w) {
            Word core = kernel(w);
            std::int64_t margin = 0;
            for (Symbol s : core.symbols()) {
              if (s == k) ++margin;
              if (s == 1) --margin;
            }
            return Rational(margin);
          }};
}

Parameter pull_back_parameter(const Parameter& g, const PreservingIso& iso) {
  return {"pullback(" + g.name + ")",
          [eval = g.eval, fwd = iso.forward](const Word& x) { return eval(fwd(x)); }};
}

Parameter parameter_by_token(const std::string& token, const Language& lang) {
  if (token == "signed-length") return signed_length_parameter(lang);
  if (token == "kernel-margin") return kernel_margin_parameter(lang.alphabet);
  if (token == "length") return length_parameter();
  if (token == "symbol-sum") return symbol_sum_parameter();
  throw ConfigError("unknown parameter: " + token);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

Rational accepting_fraction(const Language& lang, const std::vector<Word>& sample) {
  if (sample.empty()) throw UndefinedFractionError("accepting fraction of an empty set");
  std::uint64_t members = 0;
  for (const Word& w : sample)
    if (lang.decide(w)) ++members;
  return Rational(members, sample.size());
}

namespace {

std::optional<Rational> estimate_threshold(const std::vector<SliceStats>& slices) {
  if (slices.empty()) return std::nullopt;
  const Rational half(1, 2);
  for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
    Rational f0 = slices[i].fraction();
    Rational f1 = slices[i + 1].fraction();
    if (f0 < half && f1 >= half) {
      Rational t = slices[i].value +
                   (half - f0) * (slices[i + 1].value - slices[i].value) / (f1 - f0);
      return t;
    }
  }
  // no crossing: centre of the observed value range
  return (slices.front().value + slices.back().value) / 2;
}

}  // namespace

CurveReport build_curve(const Language& lang, const Parameter& g, const Rank& max_rank,
                        std::uint64_t cap,
                        const std::function<HeuristicOutcome(const Word&)>* heuristic) {
  if (max_rank < 0) throw ConfigError("curve needs a corpus: max_rank must be nonnegative");
  if (max_rank + 1 > cap) {
    std::ostringstream os;
    os << "corpus of " << (max_rank + 1) << " words exceeds cap " << cap;
    throw ResourceLimitError(os.str());
  }
  std::map<Rational, SliceStats> slices;
  WordEnumerator e(lang.alphabet);
  for (Rank r = 0; r <= max_rank; ++r) {
    const Word& w = e.current();
    Rational value = g.eval(w);
    SliceStats& s = slices.try_emplace(value, SliceStats{value}).first->second;
    ++s.total;
    if (lang.decide(w)) ++s.accepted;
    if (heuristic && (*heuristic)(w) == HeuristicOutcome::Undecided) ++s.undecided;
    e.advance();
  }
  CurveReport report;
  report.language = lang.name;
  report.parameter = g.name;
  report.max_rank = max_rank;
  report.corpus_size = to_u64_checked(max_rank + 1, "corpus");
  report.slices.reserve(slices.size());
  for (auto& [value, stats] : slices) report.slices.push_back(stats);
  report.threshold = estimate_threshold(report.slices);
  return report;
}

namespace {

struct FitPoint {
  Rational x;
  Interval y;
};

// Least squares of y against x where only y carries interval uncertainty.
struct FitResult {
  Interval slope;
  Interval r2;
  bool r2_valid = false;
};

FitResult fit_line(const std::vector<FitPoint>& pts) {
  const auto n = static_cast<std::int64_t>(pts.size());
  Rational x_mean(0);
  for (const auto& p : pts) x_mean += p.x;
  x_mean /= n;
  Rational sxx(0);
  Interval sxy{Rational(0)};
  Interval sum_y{Rational(0)};
  Interval sum_y2{Rational(0)};
  for (const auto& p : pts) {
    Rational dx = p.x - x_mean;
    sxx += dx * dx;
    sxy = sxy + Interval(dx) * p.y;
    sum_y = sum_y + p.y;
    sum_y2 = sum_y2 + p.y * p.y;
  }
  FitResult out;
  out.slope = sxy / Interval(sxx);
  Interval syy = sum_y2 - sum_y * sum_y / Interval(Rational(n));
  if (syy.lo > 0) {
    out.r2 = (sxy * sxy) / (Interval(sxx) * syy);
    out.r2_valid = true;
  }
  return out;
}

ConditionReport monotone_tail(const std::vector<const SliceStats*>& side, bool rising,
                              const Tolerances& tol) {
  // `side` is ordered from the threshold outward.
  ConditionReport rep;
  std::ostringstream diag;
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < side.size(); ++i) {
    Rational cur = side[i]->fraction();
    Rational nxt = side[i + 1]->fraction();
    bool ok = rising ? (nxt + tol.mono >= cur) : (nxt <= cur + tol.mono);
    if (!ok) {
      monotone = false;
      diag << "envelope breaks at value " << to_fraction_string(side[i + 1]->value) << "; ";
      break;
    }
  }
  Rational edge = side.back()->fraction();
  bool edge_ok = rising ? (edge >= Rational(1) - tol.limit) : (edge <= tol.limit);
  if (!edge_ok)
    diag << "edge fraction " << to_fraction_string(edge) << " misses the limit; ";
  rep.verdict = (monotone && edge_ok) ? Verdict::Pass : Verdict::Fail;
  std::string d = diag.str();
  rep.diagnostic = d.empty() ? "monotone envelope and edge within tolerance" : d;
  return rep;
}

}  // namespace

TransitionVerdicts assess_transition(const CurveReport& report, const Tolerances& tol) {
  if (!report.threshold) throw InsufficientDataError("curve has no slices");
  const Rational t = *report.threshold;

  std::vector<const SliceStats*> right, left;
  for (const auto& s : report.slices) {
    if (s.value > t) right.push_back(&s);
    if (s.value < t) left.push_back(&s);
  }
  if (right.size() < 5 || left.size() < 5) {
    std::ostringstream os;
    os << "need at least 5 slices on each side of the threshold, have " << left.size()
       << " left and " << right.size() << " right";
    throw InsufficientDataError(os.str());
  }
  std::reverse(left.begin(), left.end());  // order outward from the threshold

  TransitionVerdicts out;
  out.rises_to_one = monotone_tail(right, /*rising=*/true, tol);
  out.falls_to_zero = monotone_tail(left, /*rising=*/false, tol);

  // exponential mass growth away from the threshold, fitted on log(mass)
  std::map<BigInt, BigInt> window_mass;
  for (const auto& s : report.slices) {
    Rational d = s.value > t ? s.value - t : t - s.value;
    if (d < tol.fit_cutoff) continue;
    window_mass[rational_floor(d / tol.delta)] += s.total;
  }
  ConditionReport mass;
  if (window_mass.size() < 3) {
    mass.verdict = Verdict::Indeterminate;
    mass.diagnostic = "fewer than 3 fit windows away from the threshold";
  } else {
    std::vector<FitPoint> pts;
    pts.reserve(window_mass.size());
    for (const auto& [bin, count] : window_mass) {
      Rational x = (Rational(bin) + Rational(1, 2)) * tol.delta;
      pts.push_back({x, ln_interval(Rational(count), kLogEps)});
    }
    FitResult fit = fit_line(pts);
    std::ostringstream diag;
    diag << "slope in [" << to_decimal_string(fit.slope.lo, 6) << ", "
         << to_decimal_string(fit.slope.hi, 6) << "]";
    if (fit.slope.hi <= 0) {
      mass.verdict = Verdict::Fail;
      diag << "; not positive";
    } else if (!(fit.slope.lo > 0) || !fit.r2_valid) {
      mass.verdict = Verdict::Indeterminate;
    } else {
      diag << ", r2 in [" << to_decimal_string(fit.r2.lo, 6) << ", "
           << to_decimal_string(fit.r2.hi, 6) << "]";
      if (fit.r2.lo >= tol.r2)
        mass.verdict = Verdict::Pass;
      else if (fit.r2.hi < tol.r2) {
        mass.verdict = Verdict::Fail;
        diag << "; poor fit";
      } else
        mass.verdict = Verdict::Indeterminate;
    }
    mass.diagnostic = diag.str();
  }
  out.mass_grows = mass;
  return out;
}

bool PullbackProfile::src_class_complete(std::uint64_t j) const {
  auto it = by_j.find(j);
  if (it == by_j.end()) return false;
  BigInt expected = boost::multiprecision::pow(BigInt(src.size()), static_cast<unsigned>(j));
  return BigInt(it->second.total) == expected;
}

bool PullbackProfile::dst_class_complete(std::uint64_t m) const {
  auto it = by_m.find(m);
  if (it == by_m.end()) return false;
  BigInt expected = boost::multiprecision::pow(BigInt(dst.size()), static_cast<unsigned>(m));
  return BigInt(it->second.total) == expected;
}

namespace {

// starts[j] = rank of the first length-j word; saturates on overflow.
std::vector<std::uint64_t> class_starts_u64(std::uint32_t k) {
  std::vector<std::uint64_t> starts{0};
  std::uint64_t cur = 0;
  for (;;) {
    if (cur > (UINT64_MAX - 1) / k) {
      starts.push_back(UINT64_MAX);
      break;
    }
    cur = cur * k + 1;
    starts.push_back(cur);
  }
  return starts;
}

std::uint64_t class_of(const std::vector<std::uint64_t>& starts, std::uint64_t s) {
  auto it = std::upper_bound(starts.begin(), starts.end(), s);
  return static_cast<std::uint64_t>(it - starts.begin()) - 1;
}

}  // namespace

PullbackProfile build_pullback_profile(const Language* lang, const PreservingIso& iso,
                                       const Bijection& phi, std::uint64_t window) {
  if (phi.alphabet() != iso.src)
    throw AlphabetMismatchError("bijection must act on the isomorphism source alphabet");
  if (lang && lang->alphabet != iso.src)
    throw AlphabetMismatchError("language must live on the isomorphism source alphabet");

  PullbackProfile profile{iso.src, iso.dst, 0, 0, {}, {}, {}};
  profile.window = window;
  const auto src_starts = class_starts_u64(iso.src.size());
  const auto dst_starts = class_starts_u64(iso.dst.size());

  WordEnumerator e(iso.src);
  for (std::uint64_t r = 0; r < window; ++r) {
    Rank image(0);
    bool ok = true;
    try {
      image = phi.forward_rank(Rank(r));
    } catch (const CoverageError&) {
      ok = false;
    }
    if (ok) {
      std::uint64_t s = to_u64_checked(image, "pullback profile");
      std::uint64_t j = class_of(src_starts, s);
      std::uint64_t m = class_of(dst_starts, s);
      bool member = lang && lang->decide(e.current());
      auto bump = [member](PullbackProfile::Cell& c) {
        ++c.total;
        if (member) ++c.members;
      };
      bump(profile.by_jm[{j, m}]);
      bump(profile.by_j[j]);
      bump(profile.by_m[m]);
    } else {
      ++profile.skipped;
    }
    e.advance();
  }
  return profile;
}

SpanBounds span_bounds(const PullbackProfile& profile, std::uint64_t n) {
  SpanBounds out;
  out.n = n;
  out.bound = Interval(Rational(2 * n)) * log_ratio_interval(
                  Rational(profile.dst.size()), Rational(profile.src.size()), kLogEps);
  auto it = profile.by_m.find(n);
  if (it == profile.by_m.end()) return out;

  out.empty = false;
  out.complete = profile.dst_class_complete(n);
  bool first = true;
  for (const auto& [jm, cell] : profile.by_jm) {
    if (jm.second != n) continue;
    if (first || jm.first < out.low) out.low = jm.first;
    if (first || jm.first > out.upp) out.upp = jm.first;
    first = false;
  }
  switch (compare_leq(Interval(Rational(out.upp)), out.bound)) {
    case IntervalOrder::LessOrEqual: out.bound_ok = Verdict::Pass; break;
    case IntervalOrder::Greater: out.bound_ok = Verdict::Fail; break;
    case IntervalOrder::Indeterminate: out.bound_ok = Verdict::Indeterminate; break;
  }
  out.boundary_nonempty = profile.by_jm.count({out.low, n}) > 0 &&
                          profile.by_jm.count({out.upp, n}) > 0;
  if (out.complete) {
    Rank dst_lo = length_class_start(profile.dst, n);
    Rank dst_hi = length_class_start(profile.dst, n + 1) - 1;
    for (std::uint64_t j = out.low + 1; j < out.upp; ++j) {
      Rank src_lo = length_class_start(profile.src, j);
      Rank src_hi = length_class_start(profile.src, j + 1) - 1;
      if (!(src_lo >= dst_lo && src_hi <= dst_hi)) out.interior_filled = false;
      if (profile.by_jm.count({j, n}) == 0) out.interior_filled = false;
    }
    Rank cover_lo = length_class_start(profile.src, out.low);
    Rank cover_hi = length_class_start(profile.src, out.upp + 1) - 1;
    out.union_covers = cover_lo <= dst_lo && dst_hi <= cover_hi;
  }
  return out;
}

SpanBounds measure_pullback_span(const PreservingIso& iso, const Bijection& phi, std::uint64_t n,
                                 std::uint64_t window) {
  return span_bounds(build_pullback_profile(nullptr, iso, phi, window), n);
}

BalanceReport balance_audit(const Language& lang, const Bijection& phi,
                            const std::function<HeuristicOutcome(const Word&)>& image_heuristic,
                            const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi,
                            std::uint64_t cap) {
  if (lang.alphabet != phi.alphabet())
    throw AlphabetMismatchError("balance audit needs the bijection over the language alphabet");
  Alphabet a = lang.alphabet;
  BalanceReport report;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    Rank count = boost::multiprecision::pow(Rank(a.size()), static_cast<unsigned>(n));
    if (count > cap) {
      std::ostringstream os;
      os << "length class " << n << " of " << count << " words exceeds cap " << cap;
      throw ResourceLimitError(os.str());
    }
    Rank start = length_class_start(a, n);
    BalanceRow row;
    row.n = n;
    row.size = count.convert_to<std::uint64_t>();
    for (Rank s = start; s < start + count; ++s) {
      Word image = word_at(s, a);
      Word source = word_at(phi.backward_rank(s), a);
      HeuristicOutcome o = image_heuristic(image);
      bool member = lang.decide(source);
      if (member && o == HeuristicOutcome::Accept) ++row.accepted_correct;
      if (!member && o == HeuristicOutcome::Reject) ++row.rejected_correct;
    }
    row.accepted_fraction = Rational(row.accepted_correct, row.size);
    row.rejected_fraction = Rational(row.rejected_correct, row.size);
    Rational p = poly(Rational(n));
    if (p > 0) {
      row.floor_bound = Rational(1) / p;
      row.pass = row.accepted_fraction >= row.floor_bound &&
                 row.rejected_fraction >= row.floor_bound;
    }
    report.rows.push_back(std::move(row));
  }
  report.fractions_ok =
      !report.rows.empty() &&
      std::all_of(report.rows.begin(), report.rows.end(), [](const BalanceRow& r) { return r.pass; });
  report.decay_ok = poly_decay_nonincreasing(poly, n_lo, n_hi);
  report.pass = report.fractions_ok && report.decay_ok;
  return report;
}

BalanceReport balance_audit(const Language& lang, const Bijection& phi, const HeuristicTarget& t,
                            const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi,
                            std::uint64_t cap) {
  std::function<HeuristicOutcome(const Word&)> heur = [t](const Word& v) {
    return errorless_heuristic(t, v);
  };
  return balance_audit(lang, phi, heur, poly, n_lo, n_hi, cap);
}

bool poly_decay_nonincreasing(const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi) {
  // poly(n+1) <= sqrt(2) poly(n), decided exactly via signs and squares
  for (std::uint64_t n = n_lo; n < n_hi; ++n) {
    Rational a = poly(Rational(n + 1));
    Rational b = poly(Rational(n));
    bool ok;
    if (a <= 0)
      ok = b >= 0 || a * a >= 2 * b * b;
    else
      ok = b > 0 && a * a <= 2 * b * b;
    if (!ok) return false;
  }
  return true;
}

Interval lambda_for(Alphabet a) {
  return Interval(Rational(2)) *
         log_ratio_interval(Rational(a.size() + 1), Rational(a.size()), kLogEps);
}

DerivativeRow derivative_condition(const Polynomial& poly, const Interval& lambda,
                                   std::uint64_t n) {
  DerivativeRow row;
  row.n = n;
  Interval x = Interval(Rational(n)) * lambda;
  row.lhs = poly.derivative()(x);
  row.rhs = (abs_ln_inv_sqrt2() / lambda) * poly(x);
  switch (compare_leq(row.lhs, row.rhs)) {
    case IntervalOrder::LessOrEqual: row.verdict = Verdict::Pass; break;
    case IntervalOrder::Greater: row.verdict = Verdict::Fail; break;
    case IntervalOrder::Indeterminate: row.verdict = Verdict::Indeterminate; break;
  }
  return row;
}

Verdict scaled_decay_nonincreasing(const Polynomial& poly, const Interval& lambda,
                                   std::uint64_t n_lo, std::uint64_t n_hi) {
  bool indeterminate = false;
  for (std::uint64_t n = n_lo; n < n_hi; ++n) {
    Interval cur = poly(Interval(Rational(n)) * lambda) * inv_sqrt2_pow(static_cast<unsigned>(n));
    Interval nxt = poly(Interval(Rational(n + 1)) * lambda) *
                   inv_sqrt2_pow(static_cast<unsigned>(n + 1));
    switch (compare_leq(nxt, cur)) {
      case IntervalOrder::LessOrEqual: break;
      case IntervalOrder::Greater: return Verdict::Fail;
      case IntervalOrder::Indeterminate: indeterminate = true; break;
    }
  }
  return indeterminate ? Verdict::Indeterminate : Verdict::Pass;
}

AdequacyReport adequacy_audit(const Language& lang, const PreservingIso& iso, BijectionPtr phi,
                              const Polynomial& poly, std::uint64_t n_lo, std::uint64_t n_hi,
                              std::uint64_t window, const Tolerances& tol, std::uint64_t cap) {
  if (lang.alphabet.size() % 2 == 0)
    throw NotApplicableError("adequacy audit applies to odd alphabets only");
  if (iso.src != lang.alphabet)
    throw AlphabetMismatchError("isomorphism must start on the language alphabet");

  AdequacyReport report;
  PullbackProfile profile = build_pullback_profile(&lang, iso, *phi, window);

  for (const auto& [jm, cell] : profile.by_jm) {
    auto [j, m] = jm;
    if (!profile.src_class_complete(j)) continue;
    const auto& whole = profile.by_j.at(j);
    SplitRow row;
    row.j = j;
    row.m = m;
    row.size = cell.total;
    row.piece_fraction = Rational(cell.members, cell.total);
    row.class_fraction = Rational(whole.members, whole.total);
    Rational dev = row.piece_fraction - row.class_fraction;
    row.deviation = dev < 0 ? -dev : dev;
    row.pass = row.deviation <= tol.split;
    report.splits.push_back(std::move(row));
  }
  report.split_ok = !report.splits.empty() &&
                    std::all_of(report.splits.begin(), report.splits.end(),
                                [](const SplitRow& r) { return r.pass; });

  Interval lambda = lambda_for(lang.alphabet);
  bool deriv_fail = false, deriv_indet = false;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    DerivativeRow row = derivative_condition(poly, lambda, n);
    if (row.verdict == Verdict::Fail) deriv_fail = true;
    if (row.verdict == Verdict::Indeterminate) deriv_indet = true;
    report.derivative.push_back(std::move(row));
  }
  report.derivative_ok =
      deriv_fail ? Verdict::Fail : (deriv_indet ? Verdict::Indeterminate : Verdict::Pass);
  report.scaled_decay = scaled_decay_nonincreasing(poly, lambda, n_lo, n_hi);

  std::function<HeuristicOutcome(const Word&)> through_iso = [&iso](const Word& v) {
    return heuristic_outcome(iso.forward(v));
  };
  report.alt_balance = balance_audit(lang, *phi, through_iso, poly, n_lo,
                                     std::min<std::uint64_t>(n_hi, 12), cap);

  report.pass = report.split_ok && report.derivative_ok == Verdict::Pass &&
                report.scaled_decay == Verdict::Pass && report.alt_balance.pass;
  return report;
}

BigInt density(const Language& lang, std::uint64_t n, std::uint64_t cap) {
  Rank total = length_class_start(lang.alphabet, n + 1);
  if (total > cap) {
    std::ostringstream os;
    os << "density scan of " << total << " words exceeds cap " << cap;
    throw ResourceLimitError(os.str());
  }
  BigInt count = 0;
  WordEnumerator e(lang.alphabet);
  for (Rank r = 0; r < total; ++r) {
    if (lang.decide(e.current())) ++count;
    e.advance();
  }
  return count;
}

SparsityReport sparsity_probe(const Language& lang, const Polynomial& poly_s, std::uint64_t n_hi,
                              std::uint64_t cap) {
  Rank total = length_class_start(lang.alphabet, n_hi + 1);
  if (total > cap) {
    std::ostringstream os;
    os << "sparsity scan of " << total << " words exceeds cap " << cap;
    throw ResourceLimitError(os.str());
  }
  SparsityReport report;
  report.n_hi = n_hi;
  report.density_by_n.assign(n_hi + 1, BigInt(0));
  BigInt running = 0;
  WordEnumerator e(lang.alphabet);
  std::uint64_t len = 0;
  Rank next_boundary = 1;  // rank where length len+1 starts
  for (Rank r = 0; r < total; ++r) {
    while (r >= next_boundary) {
      report.density_by_n[len] = running;
      ++len;
      next_boundary = length_class_start(lang.alphabet, len + 1);
    }
    if (lang.decide(e.current())) ++running;
    e.advance();
  }
  for (std::uint64_t m = len; m <= n_hi; ++m) report.density_by_n[m] = running;
  for (std::uint64_t n = 0; n <= n_hi; ++n) {
    Rational bound = poly_s(Rational(n));
    if (Rational(report.density_by_n[n]) > bound) {
      report.exceeded = true;
      report.at_n = n;
      report.density_at = report.density_by_n[n];
      report.bound_at = bound;
      break;
    }
  }
  return report;
}

namespace {

std::string render_value(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v);
    return os.str();
  }
  return to_fraction_string(v);
}

}  // namespace

std::string render_curve_csv(const CurveReport& report) {
  std::ostringstream os;
  os << "value,total,accepted,undecided,fraction\n";
  for (const auto& s : report.slices) {
    os << render_value(s.value) << "," << s.total << "," << s.accepted << "," << s.undecided
       << "," << to_fraction_string(s.fraction()) << "\n";
  }
  return os.str();
}

}  // namespace phaselab
