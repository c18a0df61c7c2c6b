#include "phaselab/cli.hpp"

#include "phaselab/phase.hpp"
#include "phaselab/protocol.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace phaselab {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t effective_cap() {
  if (const char* env = std::getenv("PHASELAB_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("PHASELAB_CAP is not a count: ") + env);
    }
  }
  return kDefaultEnumerationCap;
}

void write_file_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open for writing: " + tmp);
    f << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ConfigError("cannot move output into place: " + path);
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << content;
  else
    write_file_atomically(out_path, content);
}

Json json_rational(const Rational& q) {
  return Json{{"fraction", to_fraction_string(q)}, {"decimal", to_decimal_string(q)}};
}

Json json_interval(const Interval& v) {
  return Json{{"lo", to_decimal_string(v.lo, 15)}, {"hi", to_decimal_string(v.hi, 15)}};
}

Json verdicts_to_json(const TransitionVerdicts& v) {
  auto one = [](const ConditionReport& c) {
    return Json{{"verdict", verdict_name(c.verdict)}, {"diagnostic", c.diagnostic}};
  };
  return Json{{"rises_to_one", one(v.rises_to_one)},
              {"falls_to_zero", one(v.falls_to_zero)},
              {"mass_grows", one(v.mass_grows)}};
}

Json balance_to_json(const BalanceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"size", row.size},
                        {"accepted_correct", row.accepted_correct},
                        {"rejected_correct", row.rejected_correct},
                        {"accepted_fraction", json_rational(row.accepted_fraction)},
                        {"rejected_fraction", json_rational(row.rejected_fraction)},
                        {"floor_bound", json_rational(row.floor_bound)},
                        {"pass", row.pass}});
  }
  return Json{{"rows", rows},
              {"fractions_ok", r.fractions_ok},
              {"decay_ok", r.decay_ok},
              {"pass", r.pass}};
}

Json adequacy_to_json(const AdequacyReport& r) {
  Json splits = Json::array();
  for (const auto& s : r.splits) {
    splits.push_back(Json{{"src_class", s.j},
                          {"dst_class", s.m},
                          {"size", s.size},
                          {"piece_fraction", json_rational(s.piece_fraction)},
                          {"class_fraction", json_rational(s.class_fraction)},
                          {"deviation", json_rational(s.deviation)},
                          {"pass", s.pass}});
  }
  Json deriv = Json::array();
  for (const auto& d : r.derivative) {
    deriv.push_back(Json{{"n", d.n},
                         {"lhs", json_interval(d.lhs)},
                         {"rhs", json_interval(d.rhs)},
                         {"verdict", verdict_name(d.verdict)}});
  }
  return Json{{"splits", splits},
              {"split_ok", r.split_ok},
              {"derivative", deriv},
              {"derivative_ok", verdict_name(r.derivative_ok)},
              {"scaled_decay", verdict_name(r.scaled_decay)},
              {"alt_balance", balance_to_json(r.alt_balance)},
              {"pass", r.pass}};
}

Json span_to_json(const SpanBounds& s) {
  return Json{{"n", s.n},
              {"empty", s.empty},
              {"complete", s.complete},
              {"low", s.low},
              {"upp", s.upp},
              {"bound", json_interval(s.bound)},
              {"bound_ok", verdict_name(s.bound_ok)},
              {"interior_filled", s.interior_filled},
              {"boundary_nonempty", s.boundary_nonempty},
              {"union_covers", s.union_covers}};
}

Json sparsity_to_json(const SparsityReport& r) {
  Json densities = Json::array();
  for (std::size_t n = 0; n < r.density_by_n.size(); ++n)
    densities.push_back(Json{{"n", n}, {"density", r.density_by_n[n].str()}});
  Json j{{"exceeded", r.exceeded}, {"n_hi", r.n_hi}, {"density_by_n", densities}};
  if (r.exceeded) {
    j["at_n"] = r.at_n;
    j["density_at"] = r.density_at.str();
    j["bound_at"] = json_rational(r.bound_at);
  }
  return j;
}

Json verification_to_json(const ScenarioResult& r) {
  Json records = Json::array();
  for (const auto& rec : r.report.records) {
    Json jr{{"word", rec.word}, {"skipped", rec.skipped}};
    if (!rec.skipped) {
      jr["predicted"] = std::string(1, rec.predicted ? 'A' : 'R');
      jr["confidence"] = json_rational(rec.confidence);
      jr["mismatch"] = rec.mismatch;
    }
    jr["device"] = std::string(1, rec.device ? 'A' : 'R');
    records.push_back(jr);
  }
  return Json{{"language", r.scenario.language_token},
              {"parameter", r.scenario.parameter_token},
              {"target", r.scenario.target_text},
              {"seed", r.scenario.seed},
              {"flip_probability", to_fraction_string(r.scenario.flip_probability)},
              {"target_output", std::string(1, r.report.target_output ? 'A' : 'R')},
              {"overall_confidence", json_rational(r.report.overall_confidence)},
              {"mismatches", r.report.mismatches},
              {"skipped", r.report.skipped},
              {"records", records}};
}

// ---- subcommand bodies ----

int cmd_transcode(std::uint32_t k, bool down, const std::string& in_path,
                  const std::string& out_path, std::istream& stdin_stream, std::ostream& out,
                  std::ostream& err) {
  Alphabet src(k);
  Alphabet dst(down ? k - 1 : k + 1);
  if (down && k < 3) throw ConfigError("--down needs k >= 3");

  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (!in_path.empty()) {
    file.open(in_path);
    if (!file) throw ConfigError("cannot read: " + in_path);
    in = &file;
  }
  std::ostringstream result;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      result << render_word(transcode(parse_word(line, src), dst)) << "\n";
    } catch (const InvalidWordError& e) {
      err << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
  }
  emit(result.str(), out_path, out);
  return 0;
}

int cmd_conjugate(const std::string& lang_token, const std::string& in_path,
                  const std::string& out_path, std::istream& stdin_stream, std::ostream& out,
                  std::ostream& err) {
  Language lang = builtin_language(lang_token);
  PreservingIso iso = build_step_up_iso(lang.alphabet);
  Language conj = conjugate_language(lang, iso);

  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (!in_path.empty()) {
    file.open(in_path);
    if (!file) throw ConfigError("cannot read: " + in_path);
    in = &file;
  }
  std::ostringstream result;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Word image = iso.forward(parse_word(line, lang.alphabet));
      result << render_word(image) << "\t" << (conj.decide(image) ? 'A' : 'R') << "\n";
    } catch (const InvalidWordError& e) {
      err << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
  }
  emit(result.str(), out_path, out);
  return 0;
}

int cmd_curve(const std::string& lang_token, const std::string& param_token,
              const std::string& max_rank_text, const std::string& out_path,
              const Tolerances& tol, std::ostream& out) {
  Rank max_rank(max_rank_text);
  if (max_rank < 0) throw ConfigError("max_rank must be nonnegative");
  Language lang = builtin_language(lang_token);
  Parameter g = parameter_by_token(param_token, lang);
  CurveReport report = build_curve(lang, g, max_rank, effective_cap());
  emit(render_curve_csv(report), out_path, out);

  Json summary{{"language", report.language},
               {"parameter", report.parameter},
               {"corpus_size", report.corpus_size},
               {"slices", report.slices.size()}};
  if (report.threshold) summary["threshold"] = json_rational(*report.threshold);
  try {
    summary["verdicts"] = verdicts_to_json(assess_transition(report, tol));
  } catch (const InsufficientDataError& e) {
    summary["verdicts"] = Json{{"error", e.what()}};
  }
  out << summary.dump(2) << "\n";
  return 0;
}

int cmd_audit(const std::string& lang_token, const std::string& poly_text, std::uint64_t n_lo,
              std::uint64_t n_hi, std::uint64_t window, const std::string& out_path,
              const Tolerances& tol, std::ostream& out) {
  Language lang = builtin_language(lang_token);
  Polynomial poly = Polynomial::parse(poly_text);
  std::uint64_t cap = effective_cap();

  HeuristicTarget target = make_heuristic_target(lang);
  BijectionPtr phi =
      build_rank_matching_bijection(lang, target.target, Rank(window) - 1);

  Json j{{"language", lang.name}, {"poly", poly.to_string()}, {"window", window}};
  std::uint64_t balance_hi = n_hi;
  while (boost::multiprecision::pow(Rank(lang.alphabet.size()),
                                    static_cast<unsigned>(balance_hi)) > Rank(window))
    --balance_hi;
  j["balance"] = balance_to_json(
      balance_audit(lang, *phi, target, poly, n_lo, balance_hi, cap));
  j["sparsity_n3"] = sparsity_to_json(
      sparsity_probe(lang, Polynomial({Rational(0), Rational(0), Rational(0), Rational(1)}),
                     std::min<std::uint64_t>(n_hi + 2, 8), cap));

  if (lang.alphabet.size() % 2 == 1) {
    PreservingIso iso = build_step_up_iso(lang.alphabet);
    AdequacyReport adequacy =
        adequacy_audit(lang, iso, phi, poly, n_lo, std::max<std::uint64_t>(n_hi, 40), window,
                       tol, cap);
    j["adequacy"] = adequacy_to_json(adequacy);
    PullbackProfile profile = build_pullback_profile(nullptr, iso, *phi, window);
    Json spans = Json::array();
    for (std::uint64_t n = 0; n <= n_hi; ++n) spans.push_back(span_to_json(span_bounds(profile, n)));
    j["pullback_spans"] = spans;
  } else {
    j["adequacy"] = Json{{"skipped", "alphabet size is even"}};
  }
  emit(j.dump(2) + "\n", out_path, out);
  return 0;
}

int cmd_verify(const std::string& config_path, const std::string& out_path,
               std::optional<std::uint64_t> seed_override, std::ostream& out) {
  std::ifstream f(config_path);
  if (!f) throw ConfigError("cannot read scenario: " + config_path);
  Scenario s = parse_scenario(f);
  if (seed_override) s.seed = *seed_override;
  ScenarioResult result = run_scenario(s, effective_cap());
  emit(verification_to_json(result).dump(2) + "\n", out_path, out);
  return 0;
}

// ---- lemma suite ----

struct SuiteCheck {
  std::string name;
  std::function<bool(std::string&)> run;  // fills a short detail string
};

bool slices_equal(const CurveReport& a, const CurveReport& b) {
  if (a.slices.size() != b.slices.size()) return false;
  for (std::size_t i = 0; i < a.slices.size(); ++i) {
    const auto& x = a.slices[i];
    const auto& y = b.slices[i];
    if (x.value != y.value || x.total != y.total || x.accepted != y.accepted) return false;
  }
  return true;
}

std::vector<SuiteCheck> build_suite() {
  std::vector<SuiteCheck> suite;

  suite.push_back({"codec-round-trip", [](std::string& detail) {
    for (std::uint32_t k : {2u, 3u, 4u, 5u}) {
      Alphabet a(k);
      WordEnumerator e(a);
      for (Rank r = 0; r <= 2000; ++r) {
        if (rank_of(e.current()) != r) return false;
        if (word_at(r, a) != e.current()) return false;
        e.advance();
      }
    }
    detail = "rank/word inverses, k in {2,3,4,5}, ranks <= 2000";
    return true;
  }});

  suite.push_back({"transcode-preservation", [](std::string& detail) {
    PreservingIso iso = build_step_up_iso(Alphabet(3));
    std::vector<Language> langs;
    for (Builtin b : {Builtin::FirstSymbol, Builtin::KernelMajority, Builtin::SumParity})
      langs.push_back(builtin_language(b, Alphabet(3)));
    WordEnumerator e(Alphabet(3));
    for (Rank r = 0; r <= 10000; ++r) {
      Word v = iso.forward(e.current());
      if (rank_of(v) != r) return false;
      if (iso.backward(v) != e.current()) return false;
      for (const Language& lang : langs) {
        Language conj = conjugate_language(lang, iso);
        if (conj.decide(v) != lang.decide(e.current())) return false;
      }
      e.advance();
    }
    detail = "rank preserved and membership carried, k=3->4, ranks <= 10^4";
    return true;
  }});

  suite.push_back({"inverse-preservation", [](std::string& detail) {
    PreservingIso iso = build_step_up_iso(Alphabet(3));
    Language lang = builtin_language(Builtin::SumParity, Alphabet(3));
    Language conj = conjugate_language(lang, iso);
    WordEnumerator e(Alphabet(4));
    for (Rank r = 0; r <= 10000; ++r) {
      if (lang.decide(iso.backward(e.current())) != conj.decide(e.current())) return false;
      e.advance();
    }
    detail = "backward direction preserves membership, ranks <= 10^4";
    return true;
  }});

  suite.push_back({"padding-transfer", [](std::string& detail) {
    Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
    PreservingIso iso = build_step_up_iso(Alphabet(3));
    Language conj = conjugate_language(lang, iso);
    std::vector<Word> words = enumerate_words(Alphabet(4), 200);
    for (const Word& y : words)
      for (const Word& z : words) {
        Word padded = pad(conj, y, z);
        if (dec(conj, padded) != z) return false;
        if (conj.decide(padded) != conj.decide(y)) return false;
      }
    detail = "transferred pad/dec round trips and preserves membership, ranks <= 200";
    return true;
  }});

  suite.push_back({"pad-second-argument-injective", [](std::string& detail) {
    Language lang = builtin_language(Builtin::FirstSymbol, Alphabet(3));
    Word x = parse_word("23", lang.alphabet);
    std::vector<Word> images;
    for (const Word& y : enumerate_words(lang.alphabet, 1000)) images.push_back(pad(lang, x, y));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    detail = "pad(x, .) injective over ranks <= 10^3";
    return true;
  }});

  suite.push_back({"pad-image-count", [](std::string& detail) {
    for (std::uint32_t k : {2u, 3u}) {
      Language lang = builtin_language(Builtin::SumParity, Alphabet(k));
      Word x = word_at(5, lang.alphabet);
      for (std::uint64_t n = 0; n <= 3; ++n) {
        Rank expect = length_class_start(lang.alphabet, n + 1);
        std::vector<Word> images;
        for (const Word& y : enumerate_words(lang.alphabet, expect - 1))
          images.push_back(pad(lang, x, y));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        if (Rank(images.size()) != expect) return false;
      }
    }
    detail = "distinct padded words per payload length match (k^(n+1)-1)/(k-1)";
    return true;
  }});

  suite.push_back({"curve-transfer", [](std::string& detail) {
    Language lang = builtin_language(Builtin::SignedLengthDemo, Alphabet(3));
    PreservingIso iso = build_step_up_iso(Alphabet(3));
    Language conj = conjugate_language(lang, iso);
    Parameter g = signed_length_parameter(conj);
    Parameter gp = pull_back_parameter(g, iso);
    Rank max_rank = length_class_start(Alphabet(3), 7) - 1;
    CurveReport src = build_curve(lang, gp, max_rank);
    CurveReport dst = build_curve(conj, g, max_rank);
    if (!slices_equal(src, dst)) return false;
    detail = "pullback parameter yields slice-identical curves, lengths <= 6";
    return true;
  }});

  suite.push_back({"pullback-span", [](std::string& detail) {
    Language lang = builtin_language(Builtin::SumParity, Alphabet(3));
    HeuristicTarget t = make_heuristic_target(lang);
    PreservingIso iso = build_step_up_iso(Alphabet(3));
    BijectionPtr phi = build_rank_matching_bijection(lang, t.target, Rank(3) * 3 * 3 * 3 * 3 * 3 * 3 * 3);
    PullbackProfile profile = build_pullback_profile(nullptr, iso, *phi, 6561);
    SpanBounds base = span_bounds(profile, 0);
    if (base.empty || base.low != 0 || base.upp != 0) return false;
    for (std::uint64_t n = 0; n <= 5; ++n) {
      SpanBounds s = span_bounds(profile, n);
      if (s.empty || s.bound_ok == Verdict::Fail) return false;
      if (s.complete && (!s.interior_filled || !s.boundary_nonempty || !s.union_covers))
        return false;
    }
    detail = "span bounds, base case and filling relation, k=3, n <= 5";
    return true;
  }});

  suite.push_back({"undecided-transport", [](std::string& detail) {
    PreservingIso iso = build_step_up_iso(Alphabet(3));
    WordEnumerator e(Alphabet(4));
    for (Rank r = 0; r <= 3000; ++r) {
      bool image_undecided = heuristic_outcome(e.current()) == HeuristicOutcome::Undecided;
      bool pulled = heuristic_outcome(iso.forward(iso.backward(e.current()))) ==
                    HeuristicOutcome::Undecided;
      if (image_undecided != pulled) return false;
      e.advance();
    }
    detail = "undecided set transports through the isomorphism, ranks <= 3000";
    return true;
  }});

  suite.push_back({"poly-monotonicity", [](std::string& detail) {
    Interval lambda = lambda_for(Alphabet(3));
    Polynomial good({Rational(8), Rational(1)});
    for (std::uint64_t n = 0; n <= 40; ++n)
      if (derivative_condition(good, lambda, n).verdict != Verdict::Pass) return false;
    if (scaled_decay_nonincreasing(good, lambda, 0, 40) != Verdict::Pass) return false;
    if (!poly_decay_nonincreasing(Polynomial({Rational(4), Rational(1)}), 0, 40)) return false;
    detail = "derivative condition implies scaled decay (coeffs 8,1), n in [0,40]";
    return true;
  }});

  suite.push_back({"padding-defeats-sparsity", [](std::string& detail) {
    Polynomial cubic({Rational(0), Rational(0), Rational(0), Rational(1)});
    for (Builtin b : {Builtin::FirstSymbol, Builtin::KernelMajority, Builtin::SumParity,
                      Builtin::SignedLengthDemo}) {
      Language lang = builtin_language(b, Alphabet(3));
      if (!sparsity_probe(lang, cubic, 8).exceeded) return false;
    }
    detail = "every built-in outgrows n^3 within n <= 8 at k=3";
    return true;
  }});

  return suite;
}

int cmd_lemma_suite(std::ostream& out) {
  std::vector<std::string> failed;
  for (const SuiteCheck& check : build_suite()) {
    std::string detail;
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    out << (ok ? "PASS" : "FAIL") << "  " << check.name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    if (!ok) failed.push_back(check.name);
  }
  if (!failed.empty()) {
    out << "failed checks:";
    for (const auto& name : failed) out << " \"" << name << "\"";
    out << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"phase-transition experiments over finite-alphabet languages"};
  app.require_subcommand(1);

  std::string lang_token, param_token = "signed-length", out_path, in_path;
  std::string max_rank_text = "0", poly_text = "8,1", config_path;
  std::uint32_t k = 2;
  bool down = false;
  std::uint64_t n_lo = 0, n_hi = 6, window = 20000;
  std::optional<std::uint64_t> seed_override;
  Tolerances tol;
  std::string tol_mono, tol_limit, tol_r2, tol_split;

  auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--tol-mono", tol_mono, "monotone envelope tolerance (rational)");
    cmd->add_option("--tol-limit", tol_limit, "edge distance tolerance (rational)");
    cmd->add_option("--tol-r2", tol_r2, "minimum fit quality (rational)");
    cmd->add_option("--tol-split", tol_split, "proportional split tolerance (rational)");
  };
  auto apply_tolerances = [&]() {
    if (!tol_mono.empty()) tol.mono = parse_rational(tol_mono);
    if (!tol_limit.empty()) tol.limit = parse_rational(tol_limit);
    if (!tol_r2.empty()) tol.r2 = parse_rational(tol_r2);
    if (!tol_split.empty()) tol.split = parse_rational(tol_split);
  };

  CLI::App* transcode_cmd = app.add_subcommand("transcode", "re-encode words over k as words over k+1");
  transcode_cmd->add_option("--k", k, "source alphabet size")->required();
  transcode_cmd->add_flag("--down", down, "step down to k-1 instead");
  transcode_cmd->add_option("--in", in_path, "input file (default: stdin)");
  transcode_cmd->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* conjugate_cmd = app.add_subcommand("conjugate", "map words into the conjugated language");
  conjugate_cmd->add_option("--lang", lang_token, "language token, e.g. first-symbol@k=3")->required();
  conjugate_cmd->add_option("--in", in_path, "input file (default: stdin)");
  conjugate_cmd->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* curve_cmd = app.add_subcommand("curve", "accepting-fraction curve and transition verdicts");
  curve_cmd->add_option("--lang", lang_token, "language token")->required();
  curve_cmd->add_option("--param", param_token, "parameter name");
  curve_cmd->add_option("--max-rank", max_rank_text, "corpus bound (inclusive rank)")->required();
  curve_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");
  add_tolerances(curve_cmd);

  CLI::App* audit_cmd = app.add_subcommand("audit", "balance, adequacy, span and sparsity audits");
  audit_cmd->add_option("--lang", lang_token, "language token")->required();
  audit_cmd->add_option("--poly", poly_text, "polynomial coefficients, constant first");
  audit_cmd->add_option("--n-lo", n_lo, "first audited index");
  audit_cmd->add_option("--n-hi", n_hi, "last audited index");
  audit_cmd->add_option("--window", window, "source rank window for the bijection");
  audit_cmd->add_option("--out", out_path, "JSON output file (default: stdout)");
  add_tolerances(audit_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "curve-backed device verification");
  verify_cmd->add_option("--config", config_path, "scenario file (key=value lines)")->required();
  std::uint64_t seed_value = 0;
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed_value, "override the scenario seed");
  verify_cmd->add_option("--out", out_path, "JSON output file (default: stdout)");

  CLI::App* suite_cmd = app.add_subcommand("lemma-suite", "run every structural check and report a matrix");
  (void)suite_cmd;

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    apply_tolerances();
    if (seed_opt->count() > 0) seed_override = seed_value;
    if (transcode_cmd->parsed()) return cmd_transcode(k, down, in_path, out_path, in, out, err);
    if (conjugate_cmd->parsed()) return cmd_conjugate(lang_token, in_path, out_path, in, out, err);
    if (curve_cmd->parsed())
      return cmd_curve(lang_token, param_token, max_rank_text, out_path, tol, out);
    if (audit_cmd->parsed())
      return cmd_audit(lang_token, poly_text, n_lo, n_hi, window, out_path, tol, out);
    if (verify_cmd->parsed()) return cmd_verify(config_path, out_path, seed_override, out);
    if (suite_cmd->parsed()) return cmd_lemma_suite(out);
    err << "no subcommand\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    err << "configuration: " << e.what() << "\n";
    return 2;
  } catch (const InvalidWordError& e) {
    err << "input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace phaselab
