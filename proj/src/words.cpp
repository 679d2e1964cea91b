#include "braidqp/words.hpp"

#include <cctype>
#include <sstream>

namespace braidqp {

namespace {

void check_n(int n) {
  if (n < 1) throw RangeError("strand parameter n must be at least 1");
}

void check_letter(int letter, int n, bool allow_negative) {
  if (letter == 0) throw RangeError("generator index 0 is not allowed");
  if (letter < 0 && !allow_negative)
    throw RangeError("negative letter in a positive word");
  int idx = letter < 0 ? -letter : letter;
  if (idx > n) {
    std::ostringstream os;
    os << "generator index " << idx << " exceeds n = " << n;
    throw RangeError(os.str());
  }
}

}  // namespace

SignedWord make_signed_word(int n, std::vector<int> letters) {
  check_n(n);
  for (int l : letters) check_letter(l, n, true);
  return SignedWord{n, std::move(letters)};
}

PositiveWord make_positive_word(int n, std::vector<int> letters) {
  check_n(n);
  for (int l : letters) check_letter(l, n, false);
  return PositiveWord{n, std::move(letters)};
}

SignedWord parse_word(const std::string& text, int n) {
  check_n(n);
  std::vector<int> letters;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
      ++i;
      continue;
    }
    bool negative = false;
    if (c == '-') {
      negative = true;
      ++i;
    }
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start)
      throw SyntaxError("expected a generator index, got '" +
                        text.substr(start > 0 ? start - 1 : 0, 1) + "'");
    std::string digits = text.substr(start, i - start);
    if (n <= 9) {
      // Compact style: each digit is one letter.
      if (negative && digits.size() > 1)
        throw SyntaxError("ambiguous negative token '-" + digits +
                          "'; write inverse letters one by one");
      for (char d : digits) {
        int idx = d - '0';
        check_letter(idx == 0 ? 0 : (negative ? -idx : idx), n, true);
        letters.push_back(negative ? -idx : idx);
      }
    } else {
      int idx = std::stoi(digits);
      check_letter(idx == 0 ? 0 : (negative ? -idx : idx), n, true);
      letters.push_back(negative ? -idx : idx);
    }
  }
  return SignedWord{n, std::move(letters)};
}

std::string render_word(const SignedWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i];
  }
  return os.str();
}

std::string render_word(const PositiveWord& w) {
  return render_word(to_signed(w));
}

int exponent_sum(const SignedWord& w) {
  int sum = 0;
  for (int l : w.letters) sum += l > 0 ? 1 : -1;
  return sum;
}

SignedWord to_signed(const PositiveWord& w) { return SignedWord{w.n, w.letters}; }

PositiveWord to_positive(const SignedWord& w) {
  for (int l : w.letters)
    if (l < 0) throw InternalError("to_positive on a word with inverse letters");
  return PositiveWord{w.n, w.letters};
}

SignedWord inverse(const SignedWord& w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.push_back(-*it);
  return SignedWord{w.n, std::move(out)};
}

SignedWord concat(const SignedWord& a, const SignedWord& b) {
  if (a.n != b.n) throw InternalError("concat of words over different groups");
  SignedWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
  if (a.n != b.n) throw InternalError("concat of words over different monoids");
  PositiveWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

}  // namespace braidqp
