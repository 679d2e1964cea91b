#pragma once

#include <optional>
#include <vector>

#include "braidqp/garside.hpp"
#include "braidqp/quasipositivity.hpp"

namespace braidqp::oracle {

/// Brute-force ground truth for small instances, built on the rewriting
/// closure of positive words rather than the permutation lattice.  The
/// two routes check each other; only canonical spellings are shared.
struct OracleConfig {
  int max_word_length = 14;                  // closure inputs above this are refused
  long long max_search_states = 5'000'000;   // minimal_tail state guard
};

/// All words reachable from the representative by single applications of
/// the positive relations (adjacent swap for |i-j| >= 2, triple rewrite
/// for |i-j| = 1), at any position.
struct PositiveClass {
  PositiveWord representative;
  std::vector<PositiveWord> members;  // sorted lexicographically
};

PositiveClass positive_class(const PositiveWord& w, const OracleConfig& cfg = {});

/// Canonical spellings of u*v over all factorizations u*sigma*v of all
/// members of the class of w: everything reachable by deleting one
/// generator.  Sorted and duplicate-free.
std::vector<PositiveWord> one_step_targets(const PositiveWord& w,
                                           const OracleConfig& cfg = {});

/// True iff Y is produced by k successive one-generator deletions from X.
/// pre: length(X) == length(Y) + k, k >= 0.
bool reachable(const PositiveWord& X, const PositiveWord& Y, int k,
               const OracleConfig& cfg = {});

/// Shortest positive tail (breadth-first by length, smallest appended
/// index first) such that sigma * w * tail == w * tail * residual for a
/// single residual generator.  The tail is minimal for left divisibility
/// and comes back spelled canonically.
struct MinimalTail {
  PositiveWord tail;
  int residual_generator = 1;
};

MinimalTail minimal_tail(const PositiveWord& w, int sigma, const OracleConfig& cfg = {});

/// One concrete deletion: `word` spells the current element and
/// `position` indexes the deleted letter.
struct DeletionStep {
  PositiveWord word;
  int position = 0;
};

/// Tails d_1..d_k and residual generators turning a deletion path into
/// the one-shot equation X d_1..d_k == Y d_1 s_1 d_2 s_2 ... d_k s_k.
struct SequenceCertificate {
  std::vector<PositiveWord> tails;
  std::vector<int> residuals;
};

/// Builds the certificate for a concrete k-step deletion path from X to
/// Y and verifies the equation; nullopt if the verification fails.
/// Throws std::invalid_argument when the path is not a deletion path
/// from X to Y.
std::optional<SequenceCertificate> condition3_check(const PositiveWord& X,
                                                    const PositiveWord& Y,
                                                    const std::vector<DeletionStep>& path,
                                                    const OracleConfig& cfg = {});

/// Independent quasipositivity verdict: the exponent-sum and positivity
/// shortcuts, then reachability of some candidate fraction.
bool quasipositive_by_reachability(const SignedWord& b, const OracleConfig& cfg = {});

}  // namespace braidqp::oracle
