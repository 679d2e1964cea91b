// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria.  Criterion 3 sweeps every signed word of length
// <= 6 in B_3 and <= 5 in B_4 against the reachability oracle; criteria
// 4 and 8 piggyback on the same sweep.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidqp/oracle.hpp"
#include "braidqp/quasipositivity.hpp"

using namespace braidqp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  bool pass;
  std::string detail;
  double elapsed;
};

std::vector<Criterion> results;

void report(int number, bool pass, const std::string& detail, double elapsed) {
  results.push_back({number, pass, detail, elapsed});
  std::printf("criterion %d: %s — %s (%.2f s)\n", number, pass ? "PASS" : "FAIL",
              detail.c_str(), elapsed);
  std::fflush(stdout);
}

std::vector<SimpleFactor> all_simples(int n) {
  std::vector<int> image(n + 1);
  std::iota(image.begin(), image.end(), 1);
  std::vector<SimpleFactor> out;
  do {
    out.push_back(SimpleFactor::from_one_line(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

bool simple_divides(const SimpleFactor& d, const SimpleFactor& x) {
  return d.length() + compose(d.inverse(), x).length() == x.length();
}

SignedWord band_product(int n, const std::vector<Band>& bands) {
  SignedWord prod{n, {}};
  for (const Band& band : bands) {
    prod = concat(prod, band.conjugator);
    prod = concat(prod, SignedWord{n, {band.generator}});
    prod = concat(prod, inverse(band.conjugator));
  }
  return prod;
}

// ---- criterion 1: the three worked verdicts --------------------------------

void criterion1() {
  auto start = Clock::now();
  struct Case {
    std::vector<int> letters;
    bool qp;
    int k;
  };
  std::vector<Case> cases{{{2, 1, -2, -2, 3, 2}, true, 2},
                          {{1, 2, -3}, false, 1},
                          {{2, 2, 1, -2, -2, -2, -2, 3, 2, 2}, true, 2}};
  bool pass = true;
  for (const Case& c : cases) {
    auto t0 = Clock::now();
    Verdict v = decide(SignedWord{3, c.letters});
    double dt = seconds_since(t0);
    bool ok = (v.result == (c.qp ? Quasipositivity::yes : Quasipositivity::no)) &&
              v.k == c.k && dt < 1.0;
    if (c.qp) ok = ok && v.witness && verify_witness(*v.witness, SignedWord{3, c.letters});
    pass = pass && ok;
  }
  report(1, pass, "worked verdicts match (qp k=2, not qp, qp k=2), each under 1 s",
         seconds_since(start));
}

// ---- criterion 2: the worked 2-sequence ------------------------------------

void criterion2() {
  auto start = Clock::now();
  bool pass = oracle::reachable(PositiveWord{3, {2, 1, 3, 2}}, PositiveWord{3, {1, 1}}, 2);
  double dt = seconds_since(start);
  pass = pass && dt < 1.0;
  report(2, pass, "2132 reduces to 11 in two deletions under 1 s", dt);
}

// ---- criteria 3, 4 (first half), 8: the sweep ------------------------------

struct SweepOutcome {
  long long instances = 0;
  long long disagreements = 0;
  long long unknown = 0;
  long long unverified_witnesses = 0;
  long long bound_violations = 0;
  double elapsed = 0;
};

void sweep_words(int n, int max_len, SweepOutcome& out) {
  std::vector<int> alphabet;
  for (int i = 1; i <= n; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  for (int len = 0; len <= max_len; ++len) {
    std::vector<size_t> digits(len, 0);
    for (;;) {
      std::vector<int> word;
      word.reserve(len);
      for (size_t d : digits) word.push_back(alphabet[d]);
      SignedWord b{n, std::move(word)};
      ++out.instances;

      Verdict v = decide(b);
      if (v.result == Quasipositivity::unknown) {
        ++out.unknown;
      } else {
        bool got = v.result == Quasipositivity::yes;
        if (got != oracle::quasipositive_by_reachability(b)) ++out.disagreements;
        if (got && (!v.witness || !verify_witness(*v.witness, b)))
          ++out.unverified_witnesses;
      }
      int k = exponent_sum(b);
      if (k >= 1) {
        NormalForm nf = normal_form(b);
        if (nf.delta_power < 0) {
          long long bound = -nf.delta_power + 1;
          for (int i = 0; i < k; ++i) bound *= n;
          if (v.states_explored > bound) ++out.bound_violations;
        } else if (v.states_explored != 0) {
          ++out.bound_violations;
        }
      } else if (v.states_explored != 0) {
        ++out.bound_violations;
      }

      // odometer step
      size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
}

SweepOutcome run_sweep() {
  SweepOutcome out;
  auto start = Clock::now();
  sweep_words(2, 6, out);
  sweep_words(3, 5, out);
  out.elapsed = seconds_since(start);
  return out;
}

void criterion3(const SweepOutcome& sweep) {
  std::ostringstream detail;
  detail << sweep.instances << " instances, " << sweep.disagreements << " disagreements, "
         << sweep.unknown << " unknown";
  bool pass = sweep.disagreements == 0 && sweep.unknown == 0 && sweep.elapsed <= 900.0;
  report(3, pass, detail.str(), sweep.elapsed);
}

void criterion4(const SweepOutcome& sweep) {
  auto start = Clock::now();
  std::mt19937 rng(20240501);
  std::uniform_int_distribution<int> nbands(1, 3), gen(1, 3), conj_len(0, 4), sign(0, 1);
  long long failures = sweep.unverified_witnesses;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Band> bands;
    int m = nbands(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<int> letters;
      int l = conj_len(rng);
      for (int j = 0; j < l; ++j) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
      bands.push_back(Band{SignedWord{3, letters}, gen(rng)});
    }
    SignedWord b = band_product(3, bands);
    Verdict v = decide(b);
    bool ok = v.result == Quasipositivity::yes && v.k == m && v.witness &&
              verify_witness(*v.witness, b);
    if (!ok) ++failures;
  }
  std::ostringstream detail;
  detail << "sweep witnesses all verified plus 200 random band products, " << failures
         << " failure(s)";
  report(4, failures == 0, detail.str(), seconds_since(start));
}

void criterion8(const SweepOutcome& sweep) {
  std::ostringstream detail;
  detail << "state counts within (r+1)*n^k on the sweep, " << sweep.bound_violations
         << " violation(s)";
  report(8, sweep.bound_violations == 0, detail.str(), 0.0);
}

// ---- criterion 5: the simple lattice of B_4 --------------------------------

void criterion5() {
  auto start = Clock::now();
  auto simples = all_simples(3);
  SimpleFactor d = SimpleFactor::delta(3);
  bool pass = simples.size() == 24;
  for (const SimpleFactor& a : simples) {
    if (!(compose(a, right_complement(a)) == d)) pass = false;
    if (!(bar(bar(a)) == a)) pass = false;
    for (const SimpleFactor& b : simples) {
      SimpleFactor m = meet(a, b);
      if (!simple_divides(m, a) || !simple_divides(m, b)) pass = false;
      for (const SimpleFactor& c : simples)
        if (simple_divides(c, a) && simple_divides(c, b) && !simple_divides(c, m))
          pass = false;
    }
  }
  double dt = seconds_since(start);
  pass = pass && dt < 1.0;
  report(5, pass, "24 simples: meet = maximal common divisor, s*rc(s) = delta, bar^2 = id",
         dt);
}

// ---- criterion 6: lgcd distributivity --------------------------------------

void criterion6() {
  auto start = Clock::now();
  std::mt19937 rng(20240502);
  std::uniform_int_distribution<int> len(0, 6), gen(1, 3);
  auto rand_word = [&] {
    std::vector<int> letters;
    int l = len(rng);
    for (int i = 0; i < l; ++i) letters.push_back(gen(rng));
    return PositiveWord{3, letters};
  };
  long long failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    PositiveWord r = rand_word(), a = rand_word(), b = rand_word();
    PositiveWord lhs = lgcd_positive(concat(r, a), concat(r, b));
    PositiveWord rhs = concat(r, lgcd_positive(a, b));
    if (!equals(to_signed(lhs), to_signed(rhs))) ++failures;
  }
  std::ostringstream detail;
  detail << "1000 random triples: lgcd(RA,RB) == R lgcd(A,B), " << failures
         << " failure(s)";
  report(6, failures == 0, detail.str(), seconds_since(start));
}

// ---- criterion 7: minimal tails over all simples ---------------------------

void criterion7() {
  auto start = Clock::now();
  std::vector<PositiveWord> tails{PositiveWord{3, {}}};
  for (size_t qi = 0; qi < tails.size(); ++qi) {
    if (tails[qi].letters.size() == 4) continue;
    for (int j = 1; j <= 3; ++j) {
      PositiveWord t = tails[qi];
      t.letters.push_back(j);
      tails.push_back(std::move(t));
    }
  }
  long long failures = 0;
  for (const SimpleFactor& s : all_simples(3)) {
    PositiveWord w = word_from_simple(s);
    for (int sigma = 1; sigma <= 3; ++sigma) {
      oracle::MinimalTail d = oracle::minimal_tail(w, sigma);
      // (w d)^{-1} sigma (w d) is a single generator
      SignedWord wd = concat(to_signed(w), to_signed(d.tail));
      if (!equals(concat(SignedWord{3, {sigma}}, wd),
                  concat(wd, SignedWord{3, {d.residual_generator}})))
        ++failures;
      // d divides every member of D_w(sigma) up to length 4
      for (const PositiveWord& x : tails) {
        SignedWord wx = concat(to_signed(w), to_signed(x));
        bool member = false;
        for (int res = 1; res <= 3 && !member; ++res)
          member = equals(concat(SignedWord{3, {sigma}}, wx),
                          concat(wx, SignedWord{3, {res}}));
        if (member && !left_divides(d.tail, x)) ++failures;
      }
    }
  }
  std::ostringstream detail;
  detail << "all 24 simples x 3 generators: residual is a generator and the tail is "
            "minimal, "
         << failures << " failure(s)";
  report(7, failures == 0, detail.str(), seconds_since(start));
}

// ---- criterion 9: normal-form uniqueness -----------------------------------

void criterion9() {
  auto start = Clock::now();
  std::mt19937 rng(20240503);
  std::uniform_int_distribution<int> len(0, 10), gen(1, 3), sign(0, 1), ops(0, 5);
  long long failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> letters;
    int l = len(rng);
    for (int i = 0; i < l; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    SignedWord w{3, letters};
    SignedWord mutated = w;
    int steps = ops(rng);
    for (int s = 0; s < steps; ++s) {
      auto& L = mutated.letters;
      struct Move {
        int kind;
        size_t pos;
      };
      std::vector<Move> moves;
      for (size_t i = 0; i + 1 < L.size(); ++i) {
        int a = std::abs(L[i]), b = std::abs(L[i + 1]);
        if (a != b && std::abs(a - b) >= 2) moves.push_back({0, i});
      }
      for (size_t i = 0; i + 2 < L.size(); ++i) {
        bool all_pos = L[i] > 0 && L[i + 1] > 0 && L[i + 2] > 0;
        bool all_neg = L[i] < 0 && L[i + 1] < 0 && L[i + 2] < 0;
        if ((all_pos || all_neg) && L[i] == L[i + 2] &&
            std::abs(std::abs(L[i]) - std::abs(L[i + 1])) == 1)
          moves.push_back({1, i});
      }
      for (size_t i = 0; i <= L.size(); ++i) moves.push_back({2, i});
      std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
      Move m = moves[pick(rng)];
      if (m.kind == 0) {
        std::swap(L[m.pos], L[m.pos + 1]);
      } else if (m.kind == 1) {
        std::swap(L[m.pos], L[m.pos + 1]);
        L[m.pos + 2] = L[m.pos];
      } else {
        int g = gen(rng);
        int first = sign(rng) ? g : -g;
        L.insert(L.begin() + m.pos, {first, -first});
      }
    }
    if (!(normal_form(w) == normal_form(mutated))) ++failures;
  }
  std::ostringstream detail;
  detail << "1000 mutated words share their normal form, " << failures << " failure(s)";
  report(9, failures == 0, detail.str(), seconds_since(start));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  SweepOutcome sweep = run_sweep();
  criterion3(sweep);
  criterion4(sweep);
  criterion5();
  criterion6();
  criterion7();
  criterion8(sweep);
  criterion9();

  int failures = 0;
  for (const Criterion& c : results)
    if (!c.pass) ++failures;
  std::printf("%d/%d criteria passed\n", static_cast<int>(results.size()) - failures,
              static_cast<int>(results.size()));
  return failures;
}
