#pragma once

// Simple modules M^{i,j} of the sl2 parafermion algebra K(sl2, k), their fusion
// ring, closed forms for four-point ranks and degrees, and the two distinguished
// subrings T(k) = <M^{2a,a}> and S1(k) = <M^{k,a}>.

#include "fusion_positivity/errors.hpp"
#include "fusion_positivity/fusion_core.hpp"
#include "fusion_positivity/fusion_ring.hpp"
#include "fusion_positivity/label_syntax.hpp"
#include "fusion_positivity/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpos {

/// Canonical parafermion label: 0 <= j < i <= k, vacuum (k, 0).
struct Sl2Label {
  int k = 1;
  int i = 1;
  int j = 0;
  friend auto operator<=>(const Sl2Label&, const Sl2Label&) = default;
};

inline std::string to_string(const Sl2Label& l) {
  return "M[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]@" + std::to_string(l.k);
}
inline std::ostream& operator<<(std::ostream& os, const Sl2Label& l) { return os << to_string(l); }

namespace detail {
inline int mod(long long a, int k) {
  const long long r = a % k;
  return static_cast<int>(r < 0 ? r + k : r);
}
inline void require_level(int k) {
  if (k < 1) throw DomainError("level must be >= 1, got " + std::to_string(k));
}
}  // namespace detail

/// Representative of M^{i,j} under M^{i,j} = M^{k-i, j-i}; j is read mod k.
inline Sl2Label canonicalize(int k, int i, long long j) {
  detail::require_level(k);
  if (i < 0 || i > k) {
    throw DomainError("first index " + std::to_string(i) + " outside [0," + std::to_string(k) + "]");
  }
  const int jr = detail::mod(j, k);
  if (jr < i) return {k, i, jr};
  return {k, k - i, detail::mod(static_cast<long long>(jr) - i, k)};
}

inline Sl2Label sl2_vacuum(int k) { return canonicalize(k, k, 0); }

inline Sl2Label dual(const Sl2Label& l) { return canonicalize(l.k, l.i, l.i - l.j); }

inline Rational conformal_weight(const Sl2Label& l) {
  const long long k = l.k, i = l.i, j = l.j;
  return Rational(k * (i + 2 * i * j - 2 * j * j) - (i - 2 * j) * (i - 2 * j), 2 * k * (k + 2));
}

inline FusionExpansion<Sl2Label> fuse(const Sl2Label& a, const Sl2Label& b) {
  if (a.k != b.k) {
    throw DomainError("level mismatch: " + to_string(a) + " and " + to_string(b));
  }
  const int k = a.k;
  FusionExpansion<Sl2Label> out;
  const int lo = std::abs(a.i - b.i);
  const int hi = std::min(a.i + b.i, 2 * k - a.i - b.i);
  for (int l = lo; l <= hi; l += 2) {
    const long long twice = 2LL * a.j - a.i + 2LL * b.j - b.i + l;  // always even
    out.emplace_back(canonicalize(k, l, twice / 2), 1);
  }
  std::ranges::sort(out);
  return out;
}

/// All k(k+1)/2 canonical labels, ordered by (i, j).
inline std::vector<Sl2Label> sl2_labels(int k) {
  detail::require_level(k);
  std::vector<Sl2Label> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < i; ++j) out.push_back({k, i, j});
  }
  return out;
}

inline Sl2Label parse_sl2_label(std::string_view text) {
  const LabelText t = parse_label_text(text);
  if (t.prefix != 'M' || t.body.size() != 2 || t.params.size() != 1) {
    throw LabelError("expected M[i,j]@k, got '" + std::string(text) + "'");
  }
  const long long k = t.params[0];
  if (k < 1 || k > 100000) throw DomainError("level out of range in '" + std::string(text) + "'");
  const long long i = t.body[0];
  if (i < 0 || i > k) throw DomainError("first index out of [0,k] in '" + std::string(text) + "'");
  return canonicalize(static_cast<int>(k), static_cast<int>(i), t.body[1]);
}

class Sl2Parafermion : public TableRing<Sl2Label> {
 public:
  explicit Sl2Parafermion(int k)
      : TableRing<Sl2Label>(
            sl2_labels(k), sl2_vacuum(k), [](const Sl2Label& l) { return fpos::dual(l); },
            [](const Sl2Label& a, const Sl2Label& b) { return fpos::fuse(a, b); },
            [](const Sl2Label& l) { return conformal_weight(l); }, Rational(3 * k, k + 2) - 1),
        k_(k) {}

  int level() const { return k_; }

 private:
  int k_;
};

inline Sl2Parafermion datum_sl2(int k) { return Sl2Parafermion(k); }

/// {M^{2a,a} : 0 <= a <= k/2}
inline std::vector<Sl2Label> subring_T(int k) {
  detail::require_level(k);
  std::vector<Sl2Label> out;
  for (int a = 0; 2 * a <= k; ++a) out.push_back(canonicalize(k, 2 * a, a));
  return out;
}

/// {M^{k,a} : 0 <= a < k}
inline std::vector<Sl2Label> subring_S1(int k) {
  detail::require_level(k);
  std::vector<Sl2Label> out;
  for (int a = 0; a < k; ++a) out.push_back(canonicalize(k, k, a));
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace detail {
inline int require_common_level(std::span<const Sl2Label> labels) {
  const int k = labels.front().k;
  for (const auto& l : labels) {
    if (l.k != k) throw DomainError("level mismatch among labels");
    if (l != canonicalize(l.k, l.i, l.j)) throw LabelError(to_string(l) + " is not canonical");
  }
  return k;
}
inline long long count_same_parity(long long lo, long long hi, long long parity_ref) {
  long long n = 0;
  for (long long t = lo; t <= hi; ++t) {
    if (((t - parity_ref) % 2 + 2) % 2 == 0) ++n;
  }
  return n;
}
}  // namespace detail

/// Four-point rank from the two congruence branches. The labels are sorted
/// internally so the first components satisfy a <= b <= c <= d, which the
/// interval bounds assume.
inline Multiplicity rank4_closed(std::array<Sl2Label, 4> labels) {
  const int k = detail::require_common_level(labels);
  std::ranges::sort(labels);
  const auto& [A, B, C, D] = labels;
  const long long a = A.i, b = B.i, c = C.i, d = D.i;
  const long long s = a + b + c + d;
  const long long sp = A.j + B.j + C.j + D.j;
  const bool direct = s % 2 == 0 && detail::mod(s / 2 - sp, k) == 0;
  const bool twisted = (s - k) % 2 == 0 && detail::mod((s - k) / 2 - sp, k) == 0;
  if (direct) {
    return detail::count_same_parity(std::max(b - a, d - c), std::min(a + b, 2 * k - c - d), a + b);
  }
  if (twisted) {
    return detail::count_same_parity(std::max(b - a, std::abs(k - c - d)),
                                      std::min({a + b, 2 * k - a - b, k - d + c}), a + b);
  }
  return 0;
}

/// Degree of the bundle on (base, dual(x) for x in dualized), written in terms
/// of the rank mu, the weight sum c_sum and the channel weights Lambda. Both
/// congruence channels contribute: the direct one and its image under
/// M^{t,t'} = M^{k-t,t'-t}.
inline Rational degree04_closed(const Sl2Label& base, const std::array<Sl2Label, 3>& dualized) {
  const std::array<Sl2Label, 4> all{base, dualized[0], dualized[1], dualized[2]};
  const int k = detail::require_common_level(all);
  for (std::size_t p = 0; p + 1 < all.size(); ++p) {
    if (all[p].i > all[p + 1].i) {
      throw PreconditionError("degree04_closed expects first components sorted a <= b <= c <= d");
    }
  }
  const long long a = base.i, ap = base.j;
  const Multiplicity mu = rank4_closed({base, dual(dualized[0]), dual(dualized[1]), dual(dualized[2])});
  Rational c_sum = 0;
  for (const auto& l : all) c_sum += conformal_weight(l);

  long long s = -a, sp = -ap;
  for (const auto& l : dualized) {
    s += l.i;
    sp += l.j;
  }
  const bool direct = s % 2 == 0 && detail::mod(s / 2 - sp, k) == 0;
  const bool twisted = (s - k) % 2 == 0 && detail::mod((s - k) / 2 - sp, k) == 0;

  Rational lambda = 0;
  for (std::size_t p = 0; p < 3; ++p) {
    const long long i = dualized[p].i, ip = dualized[p].j;
    const long long alpha = dualized[(p + 1) % 3].i, beta = dualized[(p + 2) % 3].i;
    auto channel_sum = [&](long long lo, long long hi) {
      Rational sum = 0;
      for (long long t = lo; t <= hi; ++t) {
        if (((t - a - i) % 2 + 2) % 2 != 0) continue;
        sum += conformal_weight(canonicalize(k, static_cast<int>(t), ap - ip + (t - a + i) / 2));
      }
      return sum;
    };
    if (direct) {
      lambda += channel_sum(std::max(std::abs(i - a), std::abs(alpha - beta)),
                            std::min({a + i, alpha + beta, 2 * k - a - i, 2 * k - alpha - beta}));
    }
    if (twisted) {
      lambda += channel_sum(std::max(std::abs(i - a), std::abs(k - alpha - beta)),
                            std::min({a + i, 2 * k - a - i, k - std::abs(alpha - beta)}));
    }
  }
  return c_sum * mu - lambda;
}

struct ClosedDegree {
  Multiplicity mu = 0;
  Rational degree{0};
};

/// Rank and degree for four modules M^{2t,t} under sum(t) >= k and
/// t2 + t3 <= t1 + t4 (after sorting).
inline ClosedDegree closed_degree_T(int k, std::array<int, 4> t) {
  detail::require_level(k);
  for (int x : t) {
    if (x < 0 || 2 * x > k) throw PreconditionError("each t must satisfy 0 <= t <= k/2");
  }
  std::ranges::sort(t);
  const int sum = t[0] + t[1] + t[2] + t[3];
  if (sum < k) throw PreconditionError("hypothesis sum(t) >= k fails");
  if (t[1] + t[2] > t[0] + t[3]) throw PreconditionError("hypothesis t2 + t3 <= t1 + t4 fails");
  ClosedDegree out;
  out.mu = static_cast<Multiplicity>(std::max(0, 1 + k - 2 * t[3]));
  out.degree = Rational(static_cast<long long>(out.mu) * (sum - k));
  return out;
}

/// Degree of four M^{2b,b} modules in the rescaled normalization, given the rank.
inline Rational rescaled_degree_T(int k, const std::array<int, 4>& b, Multiplicity mu) {
  const int sum = b[0] + b[1] + b[2] + b[3];
  return Rational(static_cast<long long>(mu) * (sum - k), 2LL * (k + 2));
}

/// Degree of four M^{k,a} modules in the rescaled normalization, with the
/// branch selection as stated: a/(k+1) when b + c <= a + d, else (k-d)/(k+1);
/// zero unless every entry is nonzero and the entries sum to 2k.
inline Rational rescaled_degree_S1(int k, std::array<int, 4> v) {
  std::ranges::sort(v);
  const auto [a, b, c, d] = v;
  if (a < 1 || a + b + c + d != 2 * k) return Rational(0);
  return (b + c <= a + d) ? Rational(a, k + 1) : Rational(k - d, k + 1);
}

/// Nonvanishing criterion for sum_i M^{2a_i, a_i}: sum a_i > k.
inline bool nontrivial_T(int k, std::span<const int> a) {
  detail::require_level(k);
  long long sum = 0;
  for (int x : a) {
    if (x < 0 || 2 * x > k) throw PreconditionError("each a_i must satisfy 0 <= a_i <= k/2");
    sum += x;
  }
  return sum > k;
}

/// Nonvanishing criterion for sum_i M^{k, a_i}: some split of the points into
/// four blocks has all block residues nonzero with residues summing to 2k.
/// Explores block-residue states rather than raw assignments; `cap` bounds n.
inline bool nontrivial_S1(int k, std::span<const int> a, std::size_t cap = 14) {
  detail::require_level(k);
  if (a.size() > cap) {
    throw ResourceError("nontrivial_S1 is capped at n = " + std::to_string(cap) + ", got " +
                        std::to_string(a.size()));
  }
  for (int x : a) {
    if (x < 0 || x >= k) throw PreconditionError("each a_i must lie in [0, k-1]");
  }
  using State = std::array<int, 4>;  // sorted block residues
  std::set<State> states{{0, 0, 0, 0}};
  for (int x : a) {
    std::set<State> next;
    for (const State& s : states) {
      for (std::size_t p = 0; p < 4; ++p) {
        State t = s;
        t[p] = (t[p] + x) % k;
        std::ranges::sort(t);
        next.insert(t);
      }
    }
    states = std::move(next);
  }
  return std::ranges::any_of(states, [k](const State& s) {
    return s[0] != 0 && s[0] + s[1] + s[2] + s[3] == 2 * k;
  });
}

/// Interval criterion for rank(M^{2a,a} x t, M^{2x,x}) != 0, split on a <= k/4.
inline bool symmetric_rank_support(int k, int a, int t, int x) {
  detail::require_level(k);
  if (a < 1 || 2 * a > k) throw PreconditionError("symmetric_rank_support needs 1 <= a <= k/2");
  if (t < 1) throw PreconditionError("symmetric_rank_support needs t >= 1");
  if (x < 0 || 2 * x > k) return false;
  const bool odd = t % 2 == 1;
  if (4 * a <= k) {
    const long long eta = odd ? k - 2 * a : 2 * a;
    return eta - static_cast<long long>(a) * t <= x && x <= static_cast<long long>(a) * t + 2 * a - eta;
  }
  const Rational xi = odd ? Rational(k, 2) : Rational(2 * a);
  const Rational spread = Rational(k, 2) - a;
  return xi - spread * t <= x && x <= 2 * a - xi + spread * t;
}

}  // namespace fpos
