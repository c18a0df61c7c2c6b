#pragma once

#include "phaselab/phase.hpp"

#include <iosfwd>

namespace phaselab {

// Ground truth plus a seeded per-instance flipper standing in for a noisy
// decision device. Outputs are a pure function of (seed, query order).
struct NoisyDevice {
  Language truth;
  Rational flip_probability;  // in [0, 1]
  std::uint64_t seed = 0;
};

enum class CohortPolicy { SameLength };

CohortPolicy cohort_policy_by_token(const std::string& token);  // "same-length"

// `size` distinct instances expected to behave like the target; the target
// itself is element 0, the rest cycle deterministically through the ranks
// of its length class.
std::vector<Word> build_cohort(const Word& target, std::uint64_t size, CohortPolicy policy);

struct Prediction {
  bool accept = false;
  Rational confidence{0};
};

// Reads the slice fraction a at g(w): accept when a >= 1/2, with
// confidence max(a, 1-a). Missing slice -> NoPredictionError.
Prediction predict_from_curve(const CurveReport& report, const Word& w, const Parameter& g);

using Predictor = std::function<Prediction(const Word&)>;

Predictor make_curve_predictor(const CurveReport& report, const Parameter& g);

struct InstanceRecord {
  std::string word;
  bool skipped = false;      // no prediction was available
  bool predicted = false;    // predicted ACCEPT?
  Rational confidence{0};
  bool device = false;       // device said ACCEPT?
  bool mismatch = false;
};

struct VerificationReport {
  bool target_output = false;  // device answer for cohort element 0
  Rational overall_confidence{1};
  std::uint64_t mismatches = 0;
  std::uint64_t skipped = 0;
  std::vector<InstanceRecord> records;
};

// Queries the device on every cohort element in order and multiplies
// (1 - confidence) into the overall confidence at each mismatch.
VerificationReport run_verification(const NoisyDevice& device, const std::vector<Word>& cohort,
                                    const Predictor& predict);

// Line-based key=value scenario description; unknown keys are rejected.
struct Scenario {
  std::string language_token;
  std::string parameter_token = "signed-length";
  Rank max_rank{0};
  std::string target_text;
  std::uint64_t cohort_size = 1;
  CohortPolicy cohort_policy = CohortPolicy::SameLength;
  Rational flip_probability{0};
  std::uint64_t seed = 0;
};

Scenario parse_scenario(std::istream& in);

struct ScenarioResult {
  Scenario scenario;
  CurveReport curve;
  VerificationReport report;
};

ScenarioResult run_scenario(const Scenario& s, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace phaselab
