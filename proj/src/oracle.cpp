#include "braidqp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace braidqp::oracle {

namespace {

// Words travel internally as byte strings (one letter per byte) prefixed
// by the strand parameter, so equal strings mean equal words of the same
// group.  Canonical strings are interned to small ids; all caches speak
// ids and stay cheap even across a long sweep.

std::string letters_to_bytes(int n, const std::vector<int>& letters) {
  std::string s;
  s.reserve(letters.size() + 1);
  s.push_back(static_cast<char>(n));
  for (int l : letters) s.push_back(static_cast<char>(l));
  return s;
}

PositiveWord bytes_to_word(const std::string& bytes) {
  std::vector<int> letters;
  letters.reserve(bytes.size() - 1);
  for (size_t i = 1; i < bytes.size(); ++i) letters.push_back(bytes[i]);
  return PositiveWord{bytes[0], std::move(letters)};
}

struct Caches {
  std::mutex mu;
  std::unordered_map<std::string, uint32_t> ids;
  std::vector<std::string> interned;
  std::unordered_map<std::string, uint32_t> canon_cache;  // raw word -> canon id
  std::unordered_map<uint32_t, std::vector<uint32_t>> one_step;
  std::unordered_map<std::string, bool> reach;

  static constexpr size_t kCanonCacheCap = 8'000'000;

  uint32_t intern_locked(const std::string& canon_bytes) {
    auto it = ids.find(canon_bytes);
    if (it != ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(interned.size());
    interned.push_back(canon_bytes);
    ids.emplace(canon_bytes, id);
    return id;
  }
};

Caches& caches() {
  static Caches c;
  return c;
}

uint32_t canon_id(const std::string& raw_bytes) {
  Caches& c = caches();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.canon_cache.find(raw_bytes);
    if (it != c.canon_cache.end()) return it->second;
  }
  PositiveWord canon = canonical_positive_word(bytes_to_word(raw_bytes));
  std::string canon_bytes = letters_to_bytes(canon.n, canon.letters);
  std::lock_guard<std::mutex> lock(c.mu);
  uint32_t id = c.intern_locked(canon_bytes);
  if (c.canon_cache.size() < Caches::kCanonCacheCap) c.canon_cache.emplace(raw_bytes, id);
  return id;
}

uint32_t canon_id(const PositiveWord& w) {
  return canon_id(letters_to_bytes(w.n, w.letters));
}

std::string interned_bytes(uint32_t id) {
  Caches& c = caches();
  std::lock_guard<std::mutex> lock(c.mu);
  return c.interned[id];
}

void check_closure_length(const PositiveWord& w, const OracleConfig& cfg) {
  if (static_cast<int>(w.letters.size()) > cfg.max_word_length)
    throw ResourceLimitError("word of length " + std::to_string(w.letters.size()) +
                             " exceeds the closure cap " +
                             std::to_string(cfg.max_word_length));
}

/// Closure of one word under single positive relation applications.
std::vector<std::string> closure(const std::string& start) {
  std::unordered_set<std::string> seen{start};
  std::vector<std::string> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const std::string w = queue[qi];
    auto push = [&](std::string cand) {
      if (seen.insert(cand).second) queue.push_back(std::move(cand));
    };
    for (size_t i = 1; i + 1 < w.size(); ++i) {
      int a = w[i], b = w[i + 1];
      if (a != b && std::abs(a - b) >= 2) {
        std::string cand = w;
        std::swap(cand[i], cand[i + 1]);
        push(std::move(cand));
      }
      if (i + 2 < w.size() && w[i + 2] == a && std::abs(a - b) == 1) {
        std::string cand = w;
        cand[i] = static_cast<char>(b);
        cand[i + 1] = static_cast<char>(a);
        cand[i + 2] = static_cast<char>(b);
        push(std::move(cand));
      }
    }
  }
  return queue;
}

/// Memoized: canonical ids of every one-generator deletion of the class.
std::vector<uint32_t> one_step_ids(uint32_t id) {
  Caches& c = caches();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.one_step.find(id);
    if (it != c.one_step.end()) return it->second;
  }
  std::string w = interned_bytes(id);
  std::vector<std::string> members = closure(w);
  std::unordered_set<std::string> deletions;
  for (const std::string& m : members) {
    for (size_t i = 1; i < m.size(); ++i) {
      std::string d = m;
      d.erase(i, 1);
      deletions.insert(std::move(d));
    }
  }
  std::unordered_set<uint32_t> targets;
  for (const std::string& d : deletions) targets.insert(canon_id(d));
  std::vector<uint32_t> out(targets.begin(), targets.end());
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(c.mu);
  c.one_step.emplace(id, out);
  return out;
}

}  // namespace

PositiveClass positive_class(const PositiveWord& w, const OracleConfig& cfg) {
  check_closure_length(w, cfg);
  std::vector<std::string> members = closure(letters_to_bytes(w.n, w.letters));
  std::sort(members.begin(), members.end());
  PositiveClass out{w, {}};
  out.members.reserve(members.size());
  for (const std::string& m : members) out.members.push_back(bytes_to_word(m));
  return out;
}

std::vector<PositiveWord> one_step_targets(const PositiveWord& w, const OracleConfig& cfg) {
  check_closure_length(w, cfg);
  if (w.letters.empty())
    throw std::invalid_argument("one_step_targets needs a nonempty word");
  std::vector<uint32_t> ids = one_step_ids(canon_id(w));
  std::vector<PositiveWord> out;
  out.reserve(ids.size());
  for (uint32_t id : ids) out.push_back(bytes_to_word(interned_bytes(id)));
  std::sort(out.begin(), out.end(),
            [](const PositiveWord& a, const PositiveWord& b) { return a.letters < b.letters; });
  return out;
}

bool reachable(const PositiveWord& X, const PositiveWord& Y, int k, const OracleConfig& cfg) {
  if (X.n != Y.n) throw std::invalid_argument("reachable across different groups");
  if (k < 0 || X.letters.size() != Y.letters.size() + static_cast<size_t>(k))
    throw std::invalid_argument("reachable needs length(X) == length(Y) + k, k >= 0");
  check_closure_length(X, cfg);

  uint32_t x = canon_id(X);
  uint32_t y = canon_id(Y);
  if (k == 0) return x == y;

  Caches& c = caches();
  std::string memo_key;
  memo_key.reserve(12);
  memo_key.append(reinterpret_cast<const char*>(&x), 4);
  memo_key.append(reinterpret_cast<const char*>(&y), 4);
  memo_key.push_back(static_cast<char>(k));
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.reach.find(memo_key);
    if (it != c.reach.end()) return it->second;
  }

  std::unordered_set<uint32_t> level{x};
  for (int t = 0; t < k; ++t) {
    std::unordered_set<uint32_t> next;
    for (uint32_t u : level)
      for (uint32_t v : one_step_ids(u)) next.insert(v);
    level = std::move(next);
  }
  bool found = level.count(y) > 0;
  std::lock_guard<std::mutex> lock(c.mu);
  c.reach.emplace(std::move(memo_key), found);
  return found;
}

MinimalTail minimal_tail(const PositiveWord& w, int sigma, const OracleConfig& cfg) {
  if (sigma < 1 || sigma > w.n) throw RangeError("generator index out of range");

  // Depth bound from the explicit solution a_s bar(a_{s-1}) ... : with
  // w = delta^p f_1..f_s the tail taking w to a delta power has length
  // s*|delta| - sum length(f_i), and the minimal tail divides it.
  NormalForm wnf = normal_form(w);
  int delta_len = w.n * (w.n + 1) / 2;
  int proper_len = 0;
  for (const auto& f : wnf.factors) proper_len += f.length();
  int depth_bound = static_cast<int>(wnf.factors.size()) * delta_len - proper_len;

  struct Node {
    std::vector<int> tail;
    NormalForm elem;  // w * tail
  };
  auto residual_of = [&](const NormalForm& elem) -> int {
    NormalForm lhs = multiply(normal_form(PositiveWord{w.n, {sigma}}), elem);
    for (int j = 1; j <= w.n; ++j)
      if (lhs == multiply(elem, normal_form(PositiveWord{w.n, {j}}))) return j;
    return 0;
  };

  long long states = 0;
  std::unordered_set<std::string> seen;
  std::vector<Node> frontier{Node{{}, wnf}};
  seen.insert(normal_form_key(wnf));
  for (int depth = 0; depth <= depth_bound; ++depth) {
    for (const Node& node : frontier) {
      if (int res = residual_of(node.elem); res != 0)
        return MinimalTail{canonical_positive_word(PositiveWord{w.n, node.tail}), res};
    }
    if (depth == depth_bound) break;
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int j = 1; j <= w.n; ++j) {
        NormalForm child = multiply(node.elem, normal_form(PositiveWord{w.n, {j}}));
        if (!seen.insert(normal_form_key(child)).second) continue;
        if (++states > cfg.max_search_states)
          throw ResourceLimitError("minimal_tail exceeded the state cap");
        Node c{node.tail, std::move(child)};
        c.tail.push_back(j);
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  throw ResourceLimitError("minimal_tail found no residual within the depth bound");
}

std::optional<SequenceCertificate> condition3_check(const PositiveWord& X,
                                                    const PositiveWord& Y,
                                                    const std::vector<DeletionStep>& path,
                                                    const OracleConfig& cfg) {
  if (X.n != Y.n) throw std::invalid_argument("condition3_check across different groups");
  int k = static_cast<int>(path.size());
  if (X.letters.size() != Y.letters.size() + static_cast<size_t>(k))
    throw std::invalid_argument("path length does not match the word lengths");

  // Validate that the path is a genuine deletion path from X to Y.
  PositiveWord current = X;
  for (const DeletionStep& step : path) {
    if (step.word.n != X.n || step.word.letters.size() != current.letters.size() ||
        step.position < 0 || step.position >= static_cast<int>(step.word.letters.size()) ||
        !equals(to_signed(step.word), to_signed(current)))
      throw std::invalid_argument("step does not spell the current element");
    std::vector<int> rest = step.word.letters;
    rest.erase(rest.begin() + step.position);
    current = PositiveWord{X.n, std::move(rest)};
  }
  if (!equals(to_signed(current), to_signed(Y)))
    throw std::invalid_argument("path does not end at Y");
  if (k == 0) return SequenceCertificate{{}, {}};

  // Tails are built from the last deletion backwards: tail j answers the
  // letter deleted at application step k-j+1, pushed through the suffix
  // of that step's word and the tails already placed.
  SequenceCertificate cert;
  cert.tails.reserve(k);
  cert.residuals.reserve(k);
  std::vector<int> placed;  // letters of d_1 d_2 ... so far
  for (int j = 1; j <= k; ++j) {
    const DeletionStep& step = path[k - j];
    int deleted = step.word.letters[step.position];
    std::vector<int> base(step.word.letters.begin() + step.position + 1,
                          step.word.letters.end());
    base.insert(base.end(), placed.begin(), placed.end());
    MinimalTail t = minimal_tail(PositiveWord{X.n, std::move(base)}, deleted, cfg);
    placed.insert(placed.end(), t.tail.letters.begin(), t.tail.letters.end());
    cert.tails.push_back(t.tail);
    cert.residuals.push_back(t.residual_generator);
  }

  // X d_1..d_k == Y d_1 s_1 d_2 s_2 ... d_k s_k
  SignedWord lhs = to_signed(X);
  for (const PositiveWord& d : cert.tails) lhs = concat(lhs, to_signed(d));
  SignedWord rhs = to_signed(Y);
  for (int j = 0; j < k; ++j) {
    rhs = concat(rhs, to_signed(cert.tails[j]));
    rhs = concat(rhs, SignedWord{X.n, {cert.residuals[j]}});
  }
  if (!equals(lhs, rhs)) return std::nullopt;
  return cert;
}

bool quasipositive_by_reachability(const SignedWord& b, const OracleConfig& cfg) {
  int k = exponent_sum(b);
  if (k < 0) return false;
  NormalForm nf = normal_form(b);
  if (k == 0) return nf.is_identity();
  if (nf.delta_power >= 0) return true;  // delete the positive letters one by one
  for (const FractionPair& pair : fraction_split(nf))
    if (reachable(pair.numerator, pair.denominator, k, cfg)) return true;
  return false;
}

}  // namespace braidqp::oracle
