#pragma once

// Integer partitions with the diagram queries (arm/leg lengths, hook
// products, generalized Pochhammer symbols) that index Jack polynomials.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts) : parts_(parts) { normalize(); }
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) { normalize(); }

  const std::vector<long>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  long part(int i) const { return i < num_parts() ? parts_[i] : 0; }

  long weight() const {
    long w = 0;
    for (long p : parts_) w += p;
    return w;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<long> c(parts_[0], 0);
    for (long p : parts_)
      for (long j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  // Arm length of cell (i,j) (0-based row i, column j): cells strictly right.
  long arm(int i, int j) const { return parts_[i] - j - 1; }
  // Leg length: cells strictly below in the same column.
  long leg(int i, int j) const {
    long l = 0;
    for (int r = i + 1; r < num_parts(); ++r)
      if (parts_[r] > j) ++l;
    return l;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  void normalize() {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (long p : parts_)
      if (p < 0) throw std::invalid_argument("Partition: negative part");
  }

  std::vector<long> parts_;
};

// Dominance order on equal-weight partitions: mu <= lambda iff all partial
// sums of mu are bounded by those of lambda.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw std::invalid_argument("dominance_leq: unequal weights");
  long sm = 0, sl = 0;
  int k = std::max(mu.num_parts(), lambda.num_parts());
  for (int i = 0; i < k; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

// Hook products c_lambda(gamma) = prod (a + l*gamma + gamma) and
// c'_lambda(gamma) = prod (a + l*gamma + 1) over the cells of lambda.
struct HookProducts {
  Rational c;
  Rational cprime;
};

inline HookProducts hook_products(const Partition& lambda, const Rational& gamma) {
  HookProducts h{Rational(1), Rational(1)};
  for (int i = 0; i < lambda.num_parts(); ++i)
    for (long j = 0; j < lambda.parts()[i]; ++j) {
      Rational a(lambda.arm(i, static_cast<int>(j)));
      Rational l(lambda.leg(i, static_cast<int>(j)));
      h.c *= a + l * gamma + gamma;
      h.cprime *= a + l * gamma + Rational(1);
    }
  return h;
}

// Generalized Pochhammer [b]_lambda^{(gamma)} = prod_i (b + (1-i) gamma)_{lambda_i}.
inline Rational gen_pochhammer(const Rational& b, const Partition& lambda,
                               const Rational& gamma) {
  Rational r(1);
  for (int i = 0; i < lambda.num_parts(); ++i)
    r *= pochhammer(b - Rational(i) * gamma, lambda.parts()[i]);
  return r;
}

// All partitions of weight w with at most max_parts parts, in descending
// lexicographic order (a linear extension of reverse dominance: lex-larger
// partitions dominate or are incomparable, never dominated).
inline std::vector<Partition> partitions_of(long w, int max_parts) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rem, long maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_parts) return;
    for (long p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

inline std::vector<Partition> partitions_up_to_weight(long wmax, int max_parts) {
  std::vector<Partition> out;
  for (long w = 0; w <= wmax; ++w) {
    auto pw = partitions_of(w, max_parts);
    out.insert(out.end(), pw.begin(), pw.end());
  }
  return out;
}

}  // namespace selberg
