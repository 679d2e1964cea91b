#include "braidqp/quasipositivity.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace braidqp {

namespace {

PositiveWord factor_range_word(const NormalForm& nf, int first, int last) {
  // concatenated canonical words of factors [first, last), 0-based
  PositiveWord out{nf.n, {}};
  for (int i = first; i < last; ++i)
    out = concat(out, word_from_simple(nf.factors[i]));
  return out;
}

}  // namespace

std::vector<FractionPair> fraction_split(const NormalForm& nf) {
  if (nf.delta_power >= 0)
    throw InternalError("fraction_split needs a negative delta power");
  int r = -nf.delta_power;
  int s = static_cast<int>(nf.factors.size());
  if (s < r) throw InternalError("fewer factors than delta powers; exponent sum must be >= 1");

  PositiveWord dw = delta_word(nf.n);
  std::vector<FractionPair> out;
  out.reserve(r + 1);
  for (int j = 0; j <= r; ++j) {
    FractionPair pair;
    pair.j = j;
    pair.numerator = factor_range_word(nf, j, s - r + j);
    pair.tail = factor_range_word(nf, s - r + j, s);
    PositiveWord prefix = factor_range_word(nf, 0, j);

    // denominator = prefix^{-1} * delta^r * tail^{-1}
    SignedWord d{nf.n, {}};
    d = concat(d, inverse(to_signed(prefix)));
    for (int i = 0; i < r; ++i) d = concat(d, to_signed(dw));
    d = concat(d, inverse(to_signed(pair.tail)));
    NormalForm dn = normal_form(d);
    if (dn.delta_power < 0)
      throw InternalError("fraction denominator is not positive");
    pair.denominator = to_positive_word(dn);
    out.push_back(std::move(pair));
  }
  return out;
}

std::pair<PositiveWord, PositiveWord> reduce_fraction(const PositiveWord& denominator,
                                                      const PositiveWord& numerator) {
  PositiveWord c = lgcd_positive(denominator, numerator);
  if (c.letters.empty())
    return {canonical_positive_word(denominator), canonical_positive_word(numerator)};
  auto a = left_quotient(c, denominator);
  auto b = left_quotient(c, numerator);
  if (!a || !b) throw InternalError("lgcd does not divide its arguments");
  return {*a, *b};
}

namespace {

/// Depth-first completion of a generator path: after stripping sigma the
/// cancelled amount is any divisor of the running lgcd (the structured
/// decomposition does not always cancel all of it), tried shortest
/// first.  Bands record the denominator at strip time.
bool complete_path(const PositiveWord& den, const PositiveWord& num,
                   const std::vector<int>& generators, size_t m,
                   const SignedWord& tail_inv, std::vector<Band>& bands) {
  if (m == generators.size())
    return den.letters.empty() && num.letters.empty();
  int sigma = generators[m];
  auto stripped = left_quotient(PositiveWord{num.n, {sigma}}, num);
  if (!stripped) return false;
  bands.push_back(Band{concat(tail_inv, inverse(to_signed(den))), sigma});
  PositiveWord g = lgcd_positive(den, *stripped);
  for (const PositiveWord& d : left_divisors(g)) {
    auto den1 = left_quotient(d, den);
    auto num1 = left_quotient(d, *stripped);
    if (!den1 || !num1) continue;
    if (complete_path(*den1, *num1, generators, m + 1, tail_inv, bands)) return true;
  }
  bands.pop_back();
  return false;
}

}  // namespace

Witness extract_witness(const FractionPair& pair, const std::vector<int>& generators) {
  int n = pair.numerator.n;
  // the path starts at the raw fraction; cancellation happens after each strip
  PositiveWord den = canonical_positive_word(pair.denominator);
  PositiveWord num = canonical_positive_word(pair.numerator);
  SignedWord tail_inv = inverse(to_signed(pair.tail));

  Witness w{n, {}};
  if (!complete_path(den, num, generators, 0, tail_inv, w.bands))
    throw InternalError("generator path does not empty the fraction");
  return w;
}

bool verify_witness(const Witness& w, const SignedWord& b) {
  if (w.n != b.n) return false;
  SignedWord prod{b.n, {}};
  for (const Band& band : w.bands) {
    if (band.generator < 1 || band.generator > b.n) return false;
    prod = concat(prod, band.conjugator);
    prod = concat(prod, SignedWord{b.n, {band.generator}});
    prod = concat(prod, inverse(band.conjugator));
  }
  return equals(prod, b);
}

Witness make_positive_conjugators(const Witness& w) {
  Witness out{w.n, {}};
  PositiveWord dw = delta_word(w.n);
  for (const Band& band : w.bands) {
    NormalForm nf = normal_form(band.conjugator);
    if (nf.delta_power < 0) {
      // delta^2 is central, so delta^{2t} w conjugates the same way
      int t = (-nf.delta_power + 1) / 2;
      SignedWord lifted{w.n, {}};
      for (int i = 0; i < 2 * t; ++i) lifted = concat(lifted, to_signed(dw));
      nf = normal_form(concat(lifted, band.conjugator));
    }
    out.bands.push_back(Band{to_signed(to_positive_word(nf)), band.generator});
  }
  return out;
}

namespace {

Witness trivial_positive_witness(int n, const PositiveWord& word) {
  Witness w{n, {}};
  for (int letter : word.letters) w.bands.push_back(Band{SignedWord{n, {}}, letter});
  return w;
}

// Depth-first search for a one-shot band decomposition of the fraction
// denominator^{-1} * numerator.  Two kinds of moves: delete one leading
// generator of the numerator (consuming a band), or cancel one leading
// generator common to both sides (rewriting the fraction; chains of
// cancellations reach every common-divisor quotient).  The pair matters,
// not only its fraction element — cancelling changes which generators
// sit at the front — so failed pairs are memoized per remaining depth.
// A positive fraction ends the search: its letters are the missing
// bands.
struct BandSearch {
  int n = 1;
  long long node_cap = 1;
  long long nodes = 0;               // every pair visited; bounds the work
  long long fractions_explored = 0;  // distinct reduced fractions per level
  bool capped = false;
  std::unordered_set<std::string> failed;
  std::unordered_set<std::string> fractions_seen;
  std::vector<Band> bands;
  std::vector<NormalForm> gen_inv_nf;  // 1-based

  void init(int n_, long long cap) {
    n = n_;
    node_cap = cap;
    gen_inv_nf.resize(n + 1, NormalForm{n, 0, {}});
    for (int i = 1; i <= n; ++i)
      gen_inv_nf[i] = invert(NormalForm{n, 0, {SimpleFactor::generator(n, i)}});
  }

  static std::string pair_key(int depth, const NormalForm& den, const NormalForm& num) {
    std::string key;
    key.push_back(static_cast<char>(depth));
    key += normal_form_key(den);
    key.push_back('\x7f');
    key += normal_form_key(num);
    return key;
  }

  bool run(const NormalForm& den, const NormalForm& num, int depth) {
    std::string key = pair_key(depth, den, num);
    if (failed.count(key)) return false;

    // a positive fraction yields the rest of the bands letter by letter
    NormalForm q = multiply(invert(den), num);
    if (q.delta_power >= 0) {
      PositiveWord rest = to_positive_word(q);
      if (static_cast<int>(rest.letters.size()) != depth)
        throw InternalError("positive remainder does not match the remaining depth");
      for (int letter : rest.letters)
        bands.push_back(Band{SignedWord{n, {}}, letter});
      return true;
    }
    if (depth == 0) return false;

    if (++nodes > node_cap) {
      capped = true;
      return false;
    }
    std::string fkey;
    fkey.push_back(static_cast<char>(depth));
    fkey += normal_form_key(q);
    if (fractions_seen.insert(std::move(fkey)).second) ++fractions_explored;

    size_t bands_before = bands.size();
    std::vector<int> num_begin = starting_set(num);
    for (int sigma : num_begin) {
      NormalForm num1 = multiply(gen_inv_nf[sigma], num);
      if (num1.delta_power < 0)
        throw InternalError("starting set produced a non-divisor");
      bands.push_back(Band{inverse(to_signed_word(den)), sigma});
      if (run(den, num1, depth - 1)) return true;
      bands.resize(bands_before);
      if (capped) return false;
    }
    for (int sigma : starting_set(den)) {
      if (std::find(num_begin.begin(), num_begin.end(), sigma) == num_begin.end())
        continue;
      NormalForm den1 = multiply(gen_inv_nf[sigma], den);
      NormalForm num1 = multiply(gen_inv_nf[sigma], num);
      if (den1.delta_power < 0 || num1.delta_power < 0)
        throw InternalError("common generator failed to divide");
      if (run(den1, num1, depth)) return true;
      if (capped) return false;
    }
    failed.insert(std::move(key));
    return false;
  }
};

}  // namespace

Verdict decide(const SignedWord& b, const DecideConfig& config) {
  int k = exponent_sum(b);
  if (k < 0) return Verdict{Quasipositivity::no, k, std::nullopt, 0};

  NormalForm nf = normal_form(b);
  if (k == 0) {
    if (nf.is_identity())
      return Verdict{Quasipositivity::yes, 0, Witness{b.n, {}}, 0};
    return Verdict{Quasipositivity::no, 0, std::nullopt, 0};
  }
  if (nf.delta_power >= 0) {
    Witness w = trivial_positive_witness(b.n, to_positive_word(nf));
    if (!verify_witness(w, b)) throw InternalError("positive witness failed to verify");
    return Verdict{Quasipositivity::yes, k, std::move(w), 0};
  }

  // fraction to decompose: delta^r = left side, positive part = right,
  // so denominator^{-1} * numerator is b itself and the bands multiply
  // straight back to the input
  NormalForm den0{b.n, -nf.delta_power, {}};
  NormalForm num0{b.n, 0, nf.factors};

  BandSearch search;
  search.init(b.n, config.state_cap);
  bool found = search.run(den0, num0, k);
  if (search.capped)
    return Verdict{Quasipositivity::unknown, k, std::nullopt, search.fractions_explored};
  if (!found)
    return Verdict{Quasipositivity::no, k, std::nullopt, search.fractions_explored};

  Witness w{b.n, std::move(search.bands)};
  if (config.positive_conjugators) w = make_positive_conjugators(w);
  if (!verify_witness(w, b)) throw InternalError("extracted witness failed to verify");
  return Verdict{Quasipositivity::yes, k, std::move(w), search.fractions_explored};
}

}  // namespace braidqp
