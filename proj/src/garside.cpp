#include "braidqp/garside.hpp"

#include <algorithm>
#include <numeric>

namespace braidqp {

namespace {

void check_same_n(int a, int b) {
  if (a != b) throw InternalError("operands live in different braid groups");
}

}  // namespace

SimpleFactor SimpleFactor::identity(int n) {
  if (n < 1) throw RangeError("strand parameter n must be at least 1");
  std::vector<int> img(n + 1);
  std::iota(img.begin(), img.end(), 0);
  return SimpleFactor(std::move(img));
}

SimpleFactor SimpleFactor::delta(int n) {
  if (n < 1) throw RangeError("strand parameter n must be at least 1");
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) img[i] = n - i;
  return SimpleFactor(std::move(img));
}

SimpleFactor SimpleFactor::generator(int n, int index) {
  if (index < 1 || index > n) throw RangeError("generator index out of range");
  SimpleFactor s = identity(n);
  std::swap(s.img_[index - 1], s.img_[index]);
  return s;
}

SimpleFactor SimpleFactor::from_one_line(const std::vector<int>& image) {
  if (image.size() < 2) throw RangeError("a permutation needs at least 2 points");
  std::vector<int> img(image.size());
  std::vector<bool> seen(image.size(), false);
  for (size_t i = 0; i < image.size(); ++i) {
    int v = image[i];
    if (v < 1 || v > static_cast<int>(image.size()) || seen[v - 1])
      throw RangeError("image table is not a permutation");
    seen[v - 1] = true;
    img[i] = v - 1;
  }
  return SimpleFactor(std::move(img));
}

int SimpleFactor::length() const {
  int count = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

bool SimpleFactor::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

bool SimpleFactor::is_delta() const {
  int m = static_cast<int>(img_.size()) - 1;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != m - static_cast<int>(i)) return false;
  return true;
}

bool SimpleFactor::has_left_divisor(int index) const {
  return img_[index - 1] > img_[index];
}

bool SimpleFactor::has_right_divisor(int index) const {
  // x = y * sigma_index drops the length iff index appears after index+1
  // in the image, i.e. the inverse permutation descends at index.
  SimpleFactor inv = inverse();
  return inv.img_[index - 1] > inv.img_[index];
}

std::vector<int> SimpleFactor::left_divisor_generators() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i)
    if (has_left_divisor(i)) out.push_back(i);
  return out;
}

SimpleFactor SimpleFactor::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
  return SimpleFactor(std::move(img));
}

std::vector<int> SimpleFactor::one_line() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

SimpleFactor compose(const SimpleFactor& a, const SimpleFactor& b) {
  check_same_n(a.n(), b.n());
  std::vector<int> img(a.img_.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = b.img_[a.img_[i]];
  return SimpleFactor(std::move(img));
}

SimpleFactor simple_from_word(const PositiveWord& w) {
  SimpleFactor s = SimpleFactor::identity(w.n);
  for (int l : w.letters) s = compose(s, SimpleFactor::generator(w.n, l));
  if (s.length() != static_cast<int>(w.letters.size()))
    throw NotSimpleError("word '" + render_word(w) + "' does not divide delta");
  return s;
}

PositiveWord word_from_simple(const SimpleFactor& s) {
  std::vector<int> letters;
  SimpleFactor rest = s;
  for (;;) {
    int i = 1;
    for (; i <= s.n(); ++i)
      if (rest.has_left_divisor(i)) break;
    if (i > s.n()) break;
    letters.push_back(i);
    rest = compose(SimpleFactor::generator(s.n(), i), rest);  // peel from the left
  }
  return PositiveWord{s.n(), std::move(letters)};
}

SimpleFactor meet(const SimpleFactor& a, const SimpleFactor& b) {
  check_same_n(a.n(), b.n());
  int n = a.n();
  SimpleFactor x = a, y = b, out = SimpleFactor::identity(n);
  for (;;) {
    int i = 1;
    for (; i <= n; ++i)
      if (x.has_left_divisor(i) && y.has_left_divisor(i)) break;
    if (i > n) return out;
    SimpleFactor g = SimpleFactor::generator(n, i);
    out = compose(out, g);
    x = compose(g, x);
    y = compose(g, y);
  }
}

SimpleFactor right_complement(const SimpleFactor& s) {
  return compose(s.inverse(), SimpleFactor::delta(s.n()));
}

SimpleFactor left_complement(const SimpleFactor& s) {
  return compose(SimpleFactor::delta(s.n()), s.inverse());
}

SimpleFactor bar(const SimpleFactor& s) {
  SimpleFactor d = SimpleFactor::delta(s.n());
  return compose(compose(d, s), d);
}

namespace {

void bar_all(std::vector<SimpleFactor>& factors) {
  for (auto& f : factors) f = bar(f);
}

/// Turns an arbitrary list of simple factors, prefixed by delta^p, into
/// the left normal form: slide left until every pair is left-weighted,
/// then strip trivial factors and surface delta powers.
NormalForm normalize(int n, int delta_power, std::vector<SimpleFactor> factors) {
  for (;;) {
    bool changed = false;
    auto removed = std::remove_if(factors.begin(), factors.end(),
                                  [](const SimpleFactor& f) { return f.is_identity(); });
    if (removed != factors.end()) {
      factors.erase(removed, factors.end());
      changed = true;
    }
    while (!factors.empty() && factors.front().is_delta()) {
      factors.erase(factors.begin());
      ++delta_power;
      changed = true;
    }
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i) {
      if (factors[i + 1].is_identity()) continue;
      SimpleFactor t = meet(right_complement(factors[i]), factors[i + 1]);
      if (!t.is_identity()) {
        factors[i] = compose(factors[i], t);
        factors[i + 1] = compose(t.inverse(), factors[i + 1]);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return NormalForm{n, delta_power, std::move(factors)};
}

struct Accumulator {
  int n;
  int delta = 0;
  std::vector<SimpleFactor> factors;

  explicit Accumulator(int n_) : n(n_) {}

  void push_simple(const SimpleFactor& s) {
    if (!s.is_identity()) factors.push_back(s);
  }

  void push_delta_power(int e) {
    if (e == 0) return;
    delta += e;
    if (e % 2 != 0) bar_all(factors);
  }

  void push_letter(int letter) {
    if (letter > 0) {
      push_simple(SimpleFactor::generator(n, letter));
    } else {
      // sigma_i^{-1} = delta^{-1} * (delta sigma_i^{-1})
      push_delta_power(-1);
      push_simple(left_complement(SimpleFactor::generator(n, -letter)));
    }
  }

  NormalForm finish() { return normalize(n, delta, std::move(factors)); }
};

}  // namespace

NormalForm normal_form(const SignedWord& w) {
  Accumulator acc(w.n);
  for (int l : w.letters) acc.push_letter(l);
  return acc.finish();
}

NormalForm normal_form(const PositiveWord& w) { return normal_form(to_signed(w)); }

NormalForm normal_form_of_simple(const SimpleFactor& s) {
  if (s.is_identity()) return NormalForm{s.n(), 0, {}};
  if (s.is_delta()) return NormalForm{s.n(), 1, {}};
  return NormalForm{s.n(), 0, {s}};
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  check_same_n(a.n, b.n);
  std::vector<SimpleFactor> factors = a.factors;
  if (b.delta_power % 2 != 0) bar_all(factors);
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  return normalize(a.n, a.delta_power + b.delta_power, std::move(factors));
}

NormalForm invert(const NormalForm& a) {
  // (delta^p f_1...f_s)^{-1} = f_s^{-1} ... f_1^{-1} delta^{-p}, with
  // f^{-1} = delta^{-1} * left_complement(f).
  int delta = 0;
  std::vector<SimpleFactor> factors;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
    --delta;
    bar_all(factors);
    factors.push_back(left_complement(*it));
  }
  if (a.delta_power % 2 != 0) bar_all(factors);
  delta -= a.delta_power;
  return normalize(a.n, delta, std::move(factors));
}

bool equals(const SignedWord& a, const SignedWord& b) {
  check_same_n(a.n, b.n);
  return normal_form(a) == normal_form(b);
}

int exponent_sum(const NormalForm& nf) {
  int sum = nf.delta_power * (nf.n * (nf.n + 1) / 2);
  for (const auto& f : nf.factors) sum += f.length();
  return sum;
}

PositiveWord delta_word(int n) {
  std::vector<int> letters;
  for (int row = n; row >= 1; --row)
    for (int i = 1; i <= row; ++i) letters.push_back(i);
  return PositiveWord{n, std::move(letters)};
}

PositiveWord to_positive_word(const NormalForm& nf) {
  if (nf.delta_power < 0)
    throw InternalError("element with negative delta power is not positive");
  std::vector<int> letters;
  PositiveWord dw = delta_word(nf.n);
  for (int i = 0; i < nf.delta_power; ++i)
    letters.insert(letters.end(), dw.letters.begin(), dw.letters.end());
  for (const auto& f : nf.factors) {
    PositiveWord fw = word_from_simple(f);
    letters.insert(letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return PositiveWord{nf.n, std::move(letters)};
}

SignedWord to_signed_word(const NormalForm& nf) {
  if (nf.delta_power >= 0) return to_signed(to_positive_word(nf));
  std::vector<int> letters;
  SignedWord dw_inv = inverse(to_signed(delta_word(nf.n)));
  for (int i = 0; i < -nf.delta_power; ++i)
    letters.insert(letters.end(), dw_inv.letters.begin(), dw_inv.letters.end());
  for (const auto& f : nf.factors) {
    PositiveWord fw = word_from_simple(f);
    letters.insert(letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return SignedWord{nf.n, std::move(letters)};
}

PositiveWord canonical_positive_word(const PositiveWord& w) {
  return to_positive_word(normal_form(w));
}

namespace {

SimpleFactor head(const NormalForm& nf) {
  if (nf.delta_power >= 1) return SimpleFactor::delta(nf.n);
  if (nf.factors.empty()) return SimpleFactor::identity(nf.n);
  return nf.factors.front();
}

}  // namespace

NormalForm lgcd_positive(const NormalForm& a, const NormalForm& b) {
  check_same_n(a.n, b.n);
  if (a.delta_power < 0 || b.delta_power < 0)
    throw InternalError("lgcd is defined on positive elements");
  NormalForm x = a;
  NormalForm y = b;
  std::vector<SimpleFactor> gathered;
  for (;;) {
    SimpleFactor t = meet(head(x), head(y));
    if (t.is_identity()) break;
    gathered.push_back(t);
    NormalForm t_inv = invert(normal_form_of_simple(t));
    x = multiply(t_inv, x);
    y = multiply(t_inv, y);
    if (x.delta_power < 0 || y.delta_power < 0)
      throw InternalError("lgcd peeled a non-divisor");
  }
  return normalize(a.n, 0, std::move(gathered));
}

PositiveWord lgcd_positive(const PositiveWord& a, const PositiveWord& b) {
  check_same_n(a.n, b.n);
  return to_positive_word(lgcd_positive(normal_form(a), normal_form(b)));
}

std::optional<PositiveWord> left_quotient(const PositiveWord& c, const PositiveWord& w) {
  check_same_n(c.n, w.n);
  NormalForm q = multiply(invert(normal_form(c)), normal_form(w));
  if (q.delta_power < 0) return std::nullopt;
  return to_positive_word(q);
}

bool left_divides(const PositiveWord& c, const PositiveWord& w) {
  return left_quotient(c, w).has_value();
}

std::vector<PositiveWord> left_divisors(const PositiveWord& w) {
  std::vector<PositiveWord> out{PositiveWord{w.n, {}}};
  std::vector<std::vector<int>> seen{{}};
  size_t level_begin = 0;
  while (level_begin < out.size()) {
    size_t level_end = out.size();
    std::vector<std::vector<int>> next;
    for (size_t i = level_begin; i < level_end; ++i) {
      for (int g = 1; g <= w.n; ++g) {
        PositiveWord cand = out[i];
        cand.letters.push_back(g);
        if (!left_divides(cand, w)) continue;
        next.push_back(canonical_positive_word(cand).letters);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto& letters : next) out.push_back(PositiveWord{w.n, std::move(letters)});
    level_begin = level_end;
  }
  return out;
}

std::vector<int> starting_set(const NormalForm& nf) {
  if (nf.delta_power < 0)
    throw InternalError("starting set is defined for positive elements");
  if (nf.delta_power >= 1) {
    std::vector<int> all(nf.n);
    std::iota(all.begin(), all.end(), 1);
    return all;
  }
  if (nf.factors.empty()) return {};
  return nf.factors.front().left_divisor_generators();
}

std::vector<int> starting_set(const PositiveWord& w) {
  return starting_set(normal_form(w));
}

std::string normal_form_key(const NormalForm& nf) {
  std::string key;
  key.reserve(4 + nf.factors.size() * (nf.n + 2));
  key.push_back(static_cast<char>(nf.n));
  int p = nf.delta_power;
  key.push_back(static_cast<char>(p & 0xff));
  key.push_back(static_cast<char>((p >> 8) & 0xff));
  for (const auto& f : nf.factors) {
    key.push_back('|');
    for (int x = 0; x < f.points(); ++x)
      key.push_back(static_cast<char>(f.image(x)));
  }
  return key;
}

}  // namespace braidqp
