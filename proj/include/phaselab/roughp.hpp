#pragma once

#include "phaselab/iso.hpp"
#include "phaselab/langs.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace phaselab {

enum class HeuristicOutcome { Accept, Reject, Undecided };

char outcome_char(HeuristicOutcome o);  // 'A', 'R', '_'

bool is_square(const Word& w);            // w = xx for some x
std::optional<Word> square_root(const Word& w);

// The decision rule itself needs no language: odd symbol sum -> Accept,
// square -> Undecided (squares always have an even symbol sum),
// anything else -> Reject.
HeuristicOutcome heuristic_outcome(const Word& w);

// Target language for the errorless heuristic over the same alphabet:
// squares of members plus every word with odd symbol sum.
struct HeuristicTarget {
  Language base;
  Language target;
};

HeuristicTarget make_heuristic_target(const Language& base);

// Never contradicts t.target: Accept implies membership, Reject implies
// non-membership, Undecided happens only on squares.
HeuristicOutcome errorless_heuristic(const HeuristicTarget& t, const Word& w);

// A bijection on the words of one alphabet, possibly defined only on a
// finite rank window. Rank-level entry points exist so that bulk scans
// avoid materializing words.
class Bijection {
public:
  virtual ~Bijection() = default;

  virtual Alphabet alphabet() const = 0;
  virtual Word forward(const Word& w) const;
  virtual Word backward(const Word& v) const;
  virtual Rank forward_rank(const Rank& r) const = 0;
  virtual Rank backward_rank(const Rank& s) const = 0;

  // Source ranks [0, coverage) are guaranteed defined; nullopt = total.
  virtual std::optional<Rank> coverage() const { return std::nullopt; }
};

using BijectionPtr = std::shared_ptr<const Bijection>;

BijectionPtr identity_bijection(Alphabet a);

// Exact desk-scale bijection for a language pair (L, H) over one alphabet:
// the i-th member of L (by rank) maps to the i-th member of H, and the
// same for non-members. Defined on source ranks below `max_rank`+1; the
// image streams are scanned as far as needed (bounded by `dst_scan_cap`,
// 0 = automatic).
struct MatchReport {
  std::uint64_t source_members = 0;
  std::uint64_t source_non_members = 0;
  std::uint64_t matched_members = 0;
  std::uint64_t matched_non_members = 0;
  std::uint64_t unmatched_remainder() const {
    return (source_members - matched_members) + (source_non_members - matched_non_members);
  }
};

class RankMatchingBijection;

BijectionPtr build_rank_matching_bijection(const Language& from, const Language& to,
                                           const Rank& max_rank,
                                           std::uint64_t dst_scan_cap = 0);
MatchReport match_report(const Bijection& phi);

// One leg of a back-and-forth construction: an injection together with a
// partial inverse that answers "is this in the image, and of what".
struct Injection {
  std::function<Word(const Word&)> apply;
  std::function<std::optional<Word>(const Word&)> invert;
};

// x -> xx. Fixed point: the empty word.
Injection doubling_injection(Alphabet a);

// Class-preserving injection from the heuristic target back into the base
// language, built from the padder: words with odd symbol sum are padded
// onto the member witness, squares onto their half, everything else onto
// the non-member witness. Payload tags keep the cases disjoint and make
// the whole map strictly length-increasing.
Injection target_to_base_injection(const Language& base);

// Back-and-forth bijection from two injections: each word is sent through
// `f` or pulled back through `g` depending on which side its preimage
// chain bottoms out on (cycles go with `f`). Chains are guaranteed to
// terminate when both injections increase length outside finitely many
// fixed points; the step budget turns a violation into an error.
BijectionPtr build_chain_bijection(Injection f, Injection g, Alphabet a,
                                   std::uint64_t step_budget = 1'000'000);

// Chain bijection between L and its heuristic target with the default
// injection pair.
BijectionPtr build_default_chain_bijection(const Language& base,
                                           std::uint64_t step_budget = 1'000'000);

// Preimage of the length-n word class under phi: all w with
// |phi.forward(w)| = n, computed as backward images of the k^n words of
// length n. Sorted by rank.
std::vector<Word> preimage_of_length(const Bijection& phi, std::uint64_t n,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// Fraction of the length-n preimage on which the heuristic is undecided.
Rational undecided_fraction(const HeuristicTarget& t, const Bijection& phi, std::uint64_t n,
                            std::uint64_t cap = kDefaultEnumerationCap);

// View of phi through a step-up isomorphism: forward(v) =
// iso.forward(phi.forward(iso.backward(v))). Ranks map exactly as in phi.
BijectionPtr conjugate_bijection(BijectionPtr phi, const PreservingIso& iso);

}  // namespace phaselab
