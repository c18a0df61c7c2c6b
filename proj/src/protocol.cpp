#include "phaselab/protocol.hpp"

#include <istream>
#include <random>
#include <sstream>

namespace phaselab {

CohortPolicy cohort_policy_by_token(const std::string& token) {
  if (token == "same-length") return CohortPolicy::SameLength;
  throw ConfigError("unknown cohort policy: " + token);
}

std::vector<Word> build_cohort(const Word& target, std::uint64_t size, CohortPolicy policy) {
  if (size < 1) throw ConfigError("cohort size must be at least 1");
  if (policy != CohortPolicy::SameLength) throw ConfigError("unsupported cohort policy");
  Alphabet a = target.alphabet();
  Rank lo = length_class_start(a, target.length());
  Rank hi = length_class_start(a, target.length() + 1);
  Rank class_size = hi - lo;
  if (Rank(size) > class_size) {
    std::ostringstream os;
    os << "cohort of " << size << " exceeds the " << class_size << " words of length "
       << target.length();
    throw ConfigError(os.str());
  }
  std::vector<Word> cohort;
  cohort.reserve(size);
  cohort.push_back(target);
  Rank r = rank_of(target);
  for (std::uint64_t i = 1; i < size; ++i) {
    Rank next = lo + (r - lo + i) % class_size;
    cohort.push_back(word_at(next, a));
  }
  return cohort;
}

Prediction predict_from_curve(const CurveReport& report, const Word& w, const Parameter& g) {
  Rational value = g.eval(w);
  for (const auto& s : report.slices) {
    if (s.value == value) {
      Rational a = s.fraction();
      Prediction p;
      p.accept = a >= Rational(1, 2);
      p.confidence = p.accept ? a : Rational(1) - a;
      return p;
    }
  }
  throw NoPredictionError("no slice at parameter value " + to_fraction_string(value));
}

Predictor make_curve_predictor(const CurveReport& report, const Parameter& g) {
  return [report, g](const Word& w) { return predict_from_curve(report, w, g); };
}

VerificationReport run_verification(const NoisyDevice& device, const std::vector<Word>& cohort,
                                    const Predictor& predict) {
  if (cohort.empty()) throw ConfigError("cohort must not be empty");
  if (device.flip_probability < 0 || device.flip_probability > 1)
    throw ConfigError("flip probability must lie in [0, 1]");

  VerificationReport out;
  std::mt19937_64 rng(device.seed);
  // flip iff draw/2^64 < p, decided exactly
  const BigInt num = boost::multiprecision::numerator(device.flip_probability);
  const BigInt den = boost::multiprecision::denominator(device.flip_probability);
  const BigInt two64 = BigInt(1) << 64;

  for (std::size_t i = 0; i < cohort.size(); ++i) {
    const Word& w = cohort[i];
    InstanceRecord rec;
    rec.word = render_word(w);
    bool truth = device.truth.decide(w);
    BigInt draw(rng());
    bool flip = draw * den < num * two64;
    rec.device = flip ? !truth : truth;
    if (i == 0) out.target_output = rec.device;
    try {
      Prediction p = predict(w);
      rec.predicted = p.accept;
      rec.confidence = p.confidence;
      rec.mismatch = rec.device != rec.predicted;
      if (rec.mismatch) {
        ++out.mismatches;
        out.overall_confidence *= Rational(1) - rec.confidence;
      }
    } catch (const NoPredictionError&) {
      rec.skipped = true;
      ++out.skipped;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  bool have_lang = false, have_target = false;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("scenario line " + std::to_string(line_no) + " is not key=value: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    try {
      if (key == "lang") {
        s.language_token = value;
        have_lang = true;
      } else if (key == "param") {
        s.parameter_token = value;
      } else if (key == "max_rank") {
        s.max_rank = Rank(value);
      } else if (key == "target") {
        s.target_text = value;
        have_target = true;
      } else if (key == "cohort_size") {
        s.cohort_size = std::stoull(value);
      } else if (key == "cohort_policy") {
        s.cohort_policy = cohort_policy_by_token(value);
      } else if (key == "flip_probability") {
        s.flip_probability = parse_rational(value);
      } else if (key == "seed") {
        s.seed = std::stoull(value);
      } else {
        throw ConfigError("unknown scenario key: " + key);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("scenario line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_lang) throw ConfigError("scenario needs lang=<token>");
  if (!have_target) throw ConfigError("scenario needs target=<word>");
  return s;
}

ScenarioResult run_scenario(const Scenario& s, std::uint64_t cap) {
  Language lang = builtin_language(s.language_token);
  Parameter g = parameter_by_token(s.parameter_token, lang);
  Word target = parse_word(s.target_text, lang.alphabet);
  CurveReport curve = build_curve(lang, g, s.max_rank, cap);
  std::vector<Word> cohort = build_cohort(target, s.cohort_size, s.cohort_policy);
  NoisyDevice device{lang, s.flip_probability, s.seed};
  VerificationReport report = run_verification(device, cohort, make_curve_predictor(curve, g));
  return ScenarioResult{s, std::move(curve), std::move(report)};
}

}  // namespace phaselab
