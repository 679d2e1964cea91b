#pragma once

#include <string>
#include <vector>

#include "braidqp/errors.hpp"

namespace braidqp {

/// Braid word over the Artin generators of B_{n+1}.  A letter +i stands
/// for sigma_i, -i for its inverse; indices run from 1 to n.  The empty
/// word is the identity.
struct SignedWord {
  int n = 1;
  std::vector<int> letters;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// Word in the positive braid monoid B+_{n+1}: generator indices only.
/// Word length equals the monoid length of the element it represents.
struct PositiveWord {
  int n = 1;
  std::vector<int> letters;

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
};

/// Validating constructors.  Throw RangeError on n < 1, a zero letter, or
/// an index outside [1, n].
SignedWord make_signed_word(int n, std::vector<int> letters);
PositiveWord make_positive_word(int n, std::vector<int> letters);

/// Parses a word from text.  Tokens are separated by whitespace or '.'.
/// For n <= 9 a multi-digit token is read digit by digit ("2321" is
/// sigma_2 sigma_3 sigma_2 sigma_1), so the compact display style pastes
/// directly; a negative token must then be a single letter.  For n >= 10
/// every token is one full index.
SignedWord parse_word(const std::string& text, int n);

/// Space-separated signed indices; round-trips through parse_word.
std::string render_word(const SignedWord& w);
std::string render_word(const PositiveWord& w);

/// Sum of letter signs (the algebraic length); invariant under the braid
/// relations and free cancellation.
int exponent_sum(const SignedWord& w);

SignedWord to_signed(const PositiveWord& w);
PositiveWord to_positive(const SignedWord& w);  // pre: all letters positive
SignedWord inverse(const SignedWord& w);
SignedWord concat(const SignedWord& a, const SignedWord& b);
PositiveWord concat(const PositiveWord& a, const PositiveWord& b);

}  // namespace braidqp
