#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidqp/words.hpp"

namespace braidqp {

/// A simple element of B_{n+1}: a positive braid dividing the half twist,
/// stored as the permutation it induces on the n+1 strands (0-based image
/// table).  The braid product a*b maps to "apply a's permutation, then
/// b's"; under this convention sigma_i left-divides a simple element
/// exactly when its one-line image descends at position i.
class SimpleFactor {
 public:
  static SimpleFactor identity(int n);
  static SimpleFactor delta(int n);  // the half twist
  static SimpleFactor generator(int n, int index);
  /// Builds a factor from a 1-based one-line image, validating that it is
  /// a permutation of {1..n+1}.
  static SimpleFactor from_one_line(const std::vector<int>& image);

  int n() const { return static_cast<int>(img_.size()) - 1; }
  int points() const { return static_cast<int>(img_.size()); }

  /// Inversion count of the permutation == monoid length of the element.
  int length() const;
  bool is_identity() const;
  bool is_delta() const;

  /// sigma_index divides this element on the left / right.
  bool has_left_divisor(int index) const;
  bool has_right_divisor(int index) const;
  std::vector<int> left_divisor_generators() const;

  SimpleFactor inverse() const;
  int image(int x) const { return img_[x]; }  // 0-based
  std::vector<int> one_line() const;          // 1-based images

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;

  /// Permutation of the braid product a*b (apply a, then b).  The result
  /// is a simple element only when the lengths add up.
  friend SimpleFactor compose(const SimpleFactor& a, const SimpleFactor& b);

 private:
  explicit SimpleFactor(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// Permutation of a positive word; throws NotSimpleError unless the word
/// length equals the inversion count (i.e. the word is square-free).
SimpleFactor simple_from_word(const PositiveWord& w);

/// Canonical reduced word: repeatedly emit the smallest generator index
/// that left-divides the remainder.
PositiveWord word_from_simple(const SimpleFactor& s);

/// Greatest common left divisor within the simple lattice.
SimpleFactor meet(const SimpleFactor& a, const SimpleFactor& b);

/// The a with s*a = delta (resp. a*s = delta).
SimpleFactor right_complement(const SimpleFactor& s);
SimpleFactor left_complement(const SimpleFactor& s);

/// Conjugation by delta; sends sigma_k to sigma_{n+1-k}.  An involution.
SimpleFactor bar(const SimpleFactor& s);

/// Left normal form delta^p b_1 ... b_s: no factor is trivial or delta,
/// p is maximal, and every adjacent pair is left-weighted (the first
/// factor of b_i b_{i+1} absorbs all it can, i.e. meet with delta of the
/// pair product equals b_i).
struct NormalForm {
  int n = 1;
  int delta_power = 0;
  std::vector<SimpleFactor> factors;

  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const SignedWord& w);
NormalForm normal_form(const PositiveWord& w);
NormalForm normal_form_of_simple(const SimpleFactor& s);

NormalForm multiply(const NormalForm& a, const NormalForm& b);
NormalForm invert(const NormalForm& a);

/// Word problem: true iff the normal forms coincide.
bool equals(const SignedWord& a, const SignedWord& b);

int exponent_sum(const NormalForm& nf);

/// A positive word representing the normal form; requires delta_power >= 0.
PositiveWord to_positive_word(const NormalForm& nf);
SignedWord to_signed_word(const NormalForm& nf);

/// The same element, spelled canonically (delta words then factor words).
PositiveWord canonical_positive_word(const PositiveWord& w);

/// The standard word for delta: (1 2 .. n)(1 2 .. n-1)...(1 2)(1).
PositiveWord delta_word(int n);

/// Left greatest common divisor in the positive monoid, computed by
/// iterated meets of normal-form heads.
PositiveWord lgcd_positive(const PositiveWord& a, const PositiveWord& b);
NormalForm lgcd_positive(const NormalForm& a, const NormalForm& b);

/// c^{-1} * w when c left-divides w, otherwise nullopt.
std::optional<PositiveWord> left_quotient(const PositiveWord& c, const PositiveWord& w);
bool left_divides(const PositiveWord& c, const PositiveWord& w);

/// Every left divisor of w, as canonical words, ordered by length and
/// lexicographically within a length (the identity comes first).
std::vector<PositiveWord> left_divisors(const PositiveWord& w);

/// Generators left-dividing the element (ascending).
std::vector<int> starting_set(const PositiveWord& w);
std::vector<int> starting_set(const NormalForm& nf);

/// Compact byte key identifying an element; equal keys iff equal elements.
std::string normal_form_key(const NormalForm& nf);

}  // namespace braidqp
