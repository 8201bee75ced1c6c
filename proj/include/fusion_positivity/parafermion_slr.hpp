#pragma once

// The abelian subring S_r(k) of the K(sl_{r+1}, k) fusion ring: modules are
// residue tuples (a_1, ..., a_r) mod k and fusion is componentwise addition.

#include "fusion_positivity/errors.hpp"
#include "fusion_positivity/fusion_core.hpp"
#include "fusion_positivity/fusion_ring.hpp"
#include "fusion_positivity/label_syntax.hpp"
#include "fusion_positivity/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fpos {

struct SlrLabel {
  int r = 1;
  int k = 1;
  std::vector<int> a;
  friend auto operator<=>(const SlrLabel&, const SlrLabel&) = default;
};

inline std::string to_string(const SlrLabel& l) {
  std::string s = "S[";
  for (std::size_t i = 0; i < l.a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(l.a[i]);
  }
  return s + "]@" + std::to_string(l.r) + "," + std::to_string(l.k);
}
inline std::ostream& operator<<(std::ostream& os, const SlrLabel& l) { return os << to_string(l); }

inline void validate(const SlrLabel& l) {
  if (l.r < 1 || l.k < 1) throw DomainError("rank and level must be >= 1 in " + to_string(l));
  if (static_cast<int>(l.a.size()) != l.r) throw LabelError("expected " + std::to_string(l.r) + " entries in " + to_string(l));
  for (int x : l.a) {
    if (x < 0 || x >= l.k) throw LabelError("entry out of [0,k-1] in " + to_string(l));
  }
}

/// Builds a label reducing each entry mod k.
inline SlrLabel make_slr_label(int r, int k, std::vector<long long> entries) {
  if (r < 1 || k < 1) throw DomainError("rank and level must be >= 1");
  if (static_cast<int>(entries.size()) != r) throw LabelError("expected " + std::to_string(r) + " entries");
  SlrLabel l{r, k, {}};
  for (long long x : entries) l.a.push_back(static_cast<int>(((x % k) + k) % k));
  return l;
}

inline SlrLabel slr_vacuum(int r, int k) { return SlrLabel{r, k, std::vector<int>(static_cast<std::size_t>(r), 0)}; }

inline SlrLabel dual(const SlrLabel& l) {
  SlrLabel d = l;
  for (int& x : d.a) x = (l.k - x) % l.k;
  return d;
}

/// max_i a_i - (sum a_i^2 - sum_{i<j} a_i a_j) / k
inline Rational cw_slr(const SlrLabel& l) {
  long long squares = 0, cross = 0, top = 0;
  for (std::size_t i = 0; i < l.a.size(); ++i) {
    squares += static_cast<long long>(l.a[i]) * l.a[i];
    top = std::max<long long>(top, l.a[i]);
    for (std::size_t j = i + 1; j < l.a.size(); ++j) cross += static_cast<long long>(l.a[i]) * l.a[j];
  }
  return Rational(top) - Rational(squares - cross, l.k);
}

inline Rational slr_central_charge(int r, int k) {
  return Rational(static_cast<long long>(k) * r * (r + 2), k + r + 1) - r;
}

inline SlrLabel parse_slr_label(std::string_view text) {
  const LabelText t = parse_label_text(text);
  if (t.prefix != 'S' || t.params.size() != 2) {
    throw LabelError("expected S[a1,...,ar]@r,k, got '" + std::string(text) + "'");
  }
  const long long r = t.params[0], k = t.params[1];
  if (r < 1 || k < 1 || r > 64 || k > 100000) throw DomainError("rank or level out of range in '" + std::string(text) + "'");
  if (static_cast<long long>(t.body.size()) != r) {
    throw LabelError("label '" + std::string(text) + "' needs exactly " + std::to_string(r) + " entries");
  }
  for (long long x : t.body) {
    if (x < 0 || x >= k) throw LabelError("entry out of [0,k-1] in '" + std::string(text) + "'");
  }
  return make_slr_label(static_cast<int>(r), static_cast<int>(k), t.body);
}

/// Fusion datum on all k^r residue tuples, indexed in mixed radix with the
/// first entry most significant. Products are computed on demand.
class SlrParafermion {
 public:
  using label_type = SlrLabel;
  static constexpr std::uint64_t max_labels = std::uint64_t{1} << 22;

  SlrParafermion(int r, int k) : r_(r), k_(k), central_charge_(0) {
    if (r < 1 || k < 1) throw DomainError("S_r(k) needs r, k >= 1");
    std::uint64_t n = 1;
    for (int i = 0; i < r; ++i) {
      n *= static_cast<std::uint64_t>(k);
      if (n > max_labels) throw DomainError("S_r(k) with k^r above " + std::to_string(max_labels) + " labels");
    }
    size_ = static_cast<std::size_t>(n);
    central_charge_ = slr_central_charge(r, k);
    dual_.resize(size_);
    cw_.reserve(size_);
    for (std::size_t x = 0; x < size_; ++x) {
      const SlrLabel l = label(static_cast<Index>(x));
      dual_[x] = encode(fpos::dual(l).a);
      cw_.push_back(cw_slr(l));
    }
  }

  int rank() const { return r_; }
  int level() const { return k_; }
  std::size_t size() const { return size_; }

  SlrLabel label(Index x) const {
    SlrLabel l{r_, k_, std::vector<int>(static_cast<std::size_t>(r_))};
    for (int i = r_ - 1; i >= 0; --i) {
      l.a[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<Index>(k_));
      x /= static_cast<Index>(k_);
    }
    return l;
  }

  Index index_of(const SlrLabel& l) const {
    if (l.r != r_ || l.k != k_) throw LabelError(to_string(l) + " does not belong to S_" + std::to_string(r_) + "(" + std::to_string(k_) + ")");
    validate(l);
    return encode(l.a);
  }

  Index unit() const { return 0; }
  Index dual(Index x) const { return dual_[x]; }
  const Rational& cw(Index x) const { return cw_[x]; }
  const Rational& central_charge() const { return central_charge_; }

  std::array<Term, 1> fuse(Index a, Index b) const {
    Index out = 0, scale = 1;
    const auto k = static_cast<Index>(k_);
    for (int i = 0; i < r_; ++i) {
      out += ((a % k + b % k) % k) * scale;
      a /= k;
      b /= k;
      scale *= k;
    }
    return {Term{out, 1}};
  }

 private:
  Index encode(const std::vector<int>& a) const {
    Index x = 0;
    for (int v : a) x = x * static_cast<Index>(k_) + static_cast<Index>(v);
    return x;
  }

  int r_;
  int k_;
  std::size_t size_ = 0;
  std::vector<Index> dual_;
  std::vector<Rational> cw_;
  Rational central_charge_;
};

inline SlrParafermion datum_slr(int r, int k) { return SlrParafermion(r, k); }

/// Four-point rank: 1 iff the entries sum to 0 componentwise mod k.
inline Multiplicity rank4_slr(const std::array<SlrLabel, 4>& labels) {
  const int r = labels[0].r, k = labels[0].k;
  for (const auto& l : labels) {
    if (l.r != r || l.k != k) throw DomainError("rank4_slr needs labels of equal (r, k)");
    validate(l);
  }
  for (int i = 0; i < r; ++i) {
    long long s = 0;
    for (const auto& l : labels) s += l.a[static_cast<std::size_t>(i)];
    if (s % k != 0) return 0;
  }
  return 1;
}

/// (k+1) k^r binom(k+r, r-1) / (r(r+1)); throws if the quotient is not integral.
inline BigInt count_simple_modules(int r, int k) {
  if (r < 1 || k < 1) throw DomainError("count_simple_modules needs r, k >= 1");
  BigInt binom = 1;
  for (int i = 0; i < r - 1; ++i) binom = binom * (k + r - i) / (i + 1);
  BigInt num = BigInt(k + 1) * boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(r)) * binom;
  const BigInt den = BigInt(r) * (r + 1);
  if (num % den != 0) {
    throw Error("module count is not integral for r = " + std::to_string(r) + ", k = " + std::to_string(k));
  }
  return num / den;
}

struct MaxCwModule {
  SlrLabel label;
  Rational cw{0};
  bool lower_bound_holds = true;  // every nonunit cw >= (k-1)/k
  bool upper_bound_holds = true;  // r = 2 only: every cw <= k/3
};

/// Brute-force maximum of cw over S_r(k). Ties go to the colexicographically
/// least tuple (last entry compared first).
inline MaxCwModule max_cw_module(int r, int k) {
  const SlrParafermion ring(r, k);
  MaxCwModule out;
  out.label = slr_vacuum(r, k);
  const Rational lower(k - 1, k), upper(k, 3);
  auto colex_less = [](const SlrLabel& x, const SlrLabel& y) {
    return std::lexicographical_compare(x.a.rbegin(), x.a.rend(), y.a.rbegin(), y.a.rend());
  };
  for (Index x = 0; x < ring.size(); ++x) {
    const Rational& w = ring.cw(x);
    if (x != ring.unit() && w < lower) out.lower_bound_holds = false;
    if (r == 2 && w > upper) out.upper_bound_holds = false;
    if (w > out.cw || (w == out.cw && colex_less(ring.label(x), out.label))) {
      out.cw = w;
      out.label = ring.label(x);
    }
  }
  return out;
}

/// Closed form 1/2 (k - 2(2 + eps)) (r - 1)(r - 2) for the symmetric all-ones
/// divisor against F_{1,1,eps}.
inline Rational negative_witness(int r, int k, int epsilon) {
  if (r < 2 || k < 3) throw DomainError("negative_witness needs r >= 2 and k >= 3");
  if (epsilon < 1 || epsilon > k - 3) {
    throw DomainError("epsilon must lie in [1, k-3], got " + std::to_string(epsilon));
  }
  return Rational(static_cast<long long>(k - 2 * (2 + epsilon)) * (r - 1) * (r - 2), 2);
}

/// Engine value of the same intersection: the all-ones module on k points
/// against the F-curve with blocks of sizes (1, 1, eps, k - 2 - eps).
inline Rational negative_witness_engine(int r, int k, int epsilon) {
  negative_witness(r, k, epsilon);  // domain checks
  const SlrParafermion ring(r, k);
  const SlrLabel ones{r, k, std::vector<int>(static_cast<std::size_t>(r), 1)};
  const auto n = static_cast<std::size_t>(k);
  std::vector<PointSet> blocks{{0}, {1}, {}, {}};
  for (std::size_t p = 2; p < n; ++p) blocks[p < 2 + static_cast<std::size_t>(epsilon) ? 2 : 3].push_back(p);
  return fcurve_intersect(ring, std::vector<SlrLabel>(n, ones), FCurve(n, std::move(blocks)));
}

/// Symmetric divisor of a^{n} against F_{1,1,i}: in an abelian ring each block
/// fuses to a single label, so this is one four-point degree.
inline Rational symmetric_intersection(int r, int k, const SlrLabel& a, int n, int i) {
  validate(a);
  if (a.r != r || a.k != k) throw DomainError("label does not match (r, k)");
  if (n < 4 || i < 1 || i > n - 3) throw DomainError("need n >= 4 and 1 <= i <= n-3");
  const SlrParafermion ring(r, k);
  auto multiple = [&](long long m) {
    std::vector<long long> e;
    for (int x : a.a) e.push_back(m * x);
    return make_slr_label(r, k, e);
  };
  return degree_04(ring, {a, a, multiple(i), multiple(n - 2 - i)});
}

/// The same intersection computed through the generic F-curve machinery.
inline Rational symmetric_intersection_engine(int r, int k, const SlrLabel& a, int n, int i) {
  if (n < 4 || i < 1 || i > n - 3) throw DomainError("need n >= 4 and 1 <= i <= n-3");
  const SlrParafermion ring(r, k);
  std::vector<PointSet> blocks{{0}, {1}, {}, {}};
  for (int p = 2; p < n; ++p) blocks[p < 2 + i ? 2 : 3].push_back(static_cast<std::size_t>(p));
  return fcurve_intersect(ring, std::vector<SlrLabel>(static_cast<std::size_t>(n), a),
                          FCurve(static_cast<std::size_t>(n), std::move(blocks)));
}

}  // namespace fpos
