#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "braidqp/garside.hpp"

namespace braidqp {

/// One band generator: conjugator * sigma_generator * conjugator^{-1}.
struct Band {
  SignedWord conjugator;
  int generator = 1;

  friend bool operator==(const Band&, const Band&) = default;
};

/// Certificate of quasipositivity: the band product equals the input
/// braid, and the number of bands equals its exponent sum.
struct Witness {
  int n = 1;
  std::vector<Band> bands;

  int k() const { return static_cast<int>(bands.size()); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// One candidate fraction of a normal form delta^{-r} b_1...b_s: the
/// input braid conjugated by `tail` equals denominator^{-1} * numerator,
/// and length(numerator) == length(denominator) + k.
struct FractionPair {
  int j = 0;
  PositiveWord numerator;    // b_{j+1} ... b_{s-r+j}
  PositiveWord denominator;  // solves b_1..b_j * N * b_{s-r+j+1}..b_s = delta^r
  PositiveWord tail;         // b_{s-r+j+1} ... b_s
};

enum class Quasipositivity { yes, no, unknown };

struct Verdict {
  Quasipositivity result = Quasipositivity::no;
  int k = 0;
  std::optional<Witness> witness;
  /// Distinct reduced fractions the search visited, per level.
  long long states_explored = 0;
};

struct DecideConfig {
  /// Bounds the raw search nodes (pair spellings); past it the verdict
  /// becomes `unknown`.
  long long state_cap = 1'000'000;
  bool positive_conjugators = false;
};

/// The r+1 candidate fractions of a normal form with delta_power = -r,
/// r >= 1.  Throws InternalError if a denominator fails positivity.
std::vector<FractionPair> fraction_split(const NormalForm& nf);

/// Cancels the left gcd: returns (A, B) with denominator^{-1} * numerator
/// == A^{-1} * B and lgcd(A, B) trivial.  Words come back canonical.
std::pair<PositiveWord, PositiveWord> reduce_fraction(const PositiveWord& denominator,
                                                      const PositiveWord& numerator);

/// Rebuilds the band certificate from a successful front-deletion path:
/// band m conjugates generators[m] by tail^{-1} * (current denominator)^{-1}.
/// Throws InternalError if the path does not empty the fraction.
Witness extract_witness(const FractionPair& pair, const std::vector<int>& generators);

/// True iff the band product equals b.
bool verify_witness(const Witness& w, const SignedWord& b);

/// Rewrites every conjugator as a positive word by multiplying with a
/// central power delta^{2t}; the band product is unchanged.
Witness make_positive_conjugators(const Witness& w);

/// Decides quasipositivity.  Exponent sum < 0 is an immediate no; 0
/// reduces to the word problem; a nonnegative delta power yields the
/// letter-by-letter witness.  Otherwise searches for a one-shot band
/// decomposition of the fraction delta^{-r} * positive part: per level,
/// cancel any common left divisor of the pair (every divisor is a
/// branch; restricting to normal-form prefixes or to the full lgcd loses
/// solutions), then delete one leading generator of the numerator.
/// Failed pairs are memoized per remaining depth.  Exceeding the state
/// cap gives verdict `unknown`, never a false negative.  Deterministic:
/// the first success in (shortest divisor, ascending generator) order
/// wins, and its bands conjugate by the running denominator.
Verdict decide(const SignedWord& b, const DecideConfig& config = {});

}  // namespace braidqp
