#pragma once

// Affine sl2 at level k and the cyclic Z/m fusion ring (sl_m at level one), in
// the standard conformal-weight normalization, together with a checker for
// proportional pairings between fusion subrings.

#include "fusion_positivity/errors.hpp"
#include "fusion_positivity/fusion_core.hpp"
#include "fusion_positivity/fusion_ring.hpp"
#include "fusion_positivity/label_syntax.hpp"
#include "fusion_positivity/parafermion_sl2.hpp"
#include "fusion_positivity/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fpos {

struct AffineLabel {
  int k = 1;
  int lambda = 0;
  friend auto operator<=>(const AffineLabel&, const AffineLabel&) = default;
};

struct CyclicLabel {
  int m = 1;
  int a = 0;
  friend auto operator<=>(const CyclicLabel&, const CyclicLabel&) = default;
};

inline std::string to_string(const AffineLabel& l) {
  return "A[" + std::to_string(l.lambda) + "]@" + std::to_string(l.k);
}
inline std::string to_string(const CyclicLabel& l) {
  return "Z[" + std::to_string(l.a) + "]@" + std::to_string(l.m);
}
inline std::ostream& operator<<(std::ostream& os, const AffineLabel& l) { return os << to_string(l); }
inline std::ostream& operator<<(std::ostream& os, const CyclicLabel& l) { return os << to_string(l); }

inline AffineLabel parse_affine_label(std::string_view text) {
  const LabelText t = parse_label_text(text);
  if (t.prefix != 'A' || t.body.size() != 1 || t.params.size() != 1) {
    throw LabelError("expected A[lambda]@k, got '" + std::string(text) + "'");
  }
  const long long k = t.params[0], lambda = t.body[0];
  if (k < 1 || k > 100000) throw DomainError("level out of range in '" + std::string(text) + "'");
  if (lambda < 0 || lambda > k) throw LabelError("weight outside [0,k] in '" + std::string(text) + "'");
  return {static_cast<int>(k), static_cast<int>(lambda)};
}

inline CyclicLabel parse_cyclic_label(std::string_view text) {
  const LabelText t = parse_label_text(text);
  if (t.prefix != 'Z' || t.body.size() != 1 || t.params.size() != 1) {
    throw LabelError("expected Z[a]@m, got '" + std::string(text) + "'");
  }
  const long long m = t.params[0], a = t.body[0];
  if (m < 1 || m > 100000) throw DomainError("modulus out of range in '" + std::string(text) + "'");
  if (a < 0 || a >= m) throw LabelError("residue outside [0,m-1] in '" + std::string(text) + "'");
  return {static_cast<int>(m), static_cast<int>(a)};
}

// ---------------------------------------------------------------------------
// Affine sl2, level k
// ---------------------------------------------------------------------------

inline Rational affine_cw(const AffineLabel& l) {
  return Rational(static_cast<long long>(l.lambda) * (l.lambda + 2), 4LL * (l.k + 2));
}

/// Truncated Clebsch-Gordan rule.
inline FusionExpansion<AffineLabel> affine_fuse(const AffineLabel& a, const AffineLabel& b) {
  if (a.k != b.k) throw DomainError("level mismatch: " + to_string(a) + " and " + to_string(b));
  FusionExpansion<AffineLabel> out;
  const int hi = std::min(a.lambda + b.lambda, 2 * a.k - a.lambda - b.lambda);
  for (int c = std::abs(a.lambda - b.lambda); c <= hi; c += 2) out.emplace_back(AffineLabel{a.k, c}, 1);
  return out;
}

class AffineSl2 : public TableRing<AffineLabel> {
 public:
  explicit AffineSl2(int k)
      : TableRing<AffineLabel>(
            make_labels(k), AffineLabel{k, 0}, [](const AffineLabel& l) { return l; },
            [](const AffineLabel& a, const AffineLabel& b) { return affine_fuse(a, b); },
            [](const AffineLabel& l) { return affine_cw(l); }, Rational(3 * k, k + 2)),
        k_(k) {}

  int level() const { return k_; }

 private:
  static std::vector<AffineLabel> make_labels(int k) {
    if (k < 1) throw DomainError("affine level must be >= 1");
    std::vector<AffineLabel> out;
    for (int lambda = 0; lambda <= k; ++lambda) out.push_back({k, lambda});
    return out;
  }
  int k_;
};

inline AffineSl2 datum_affine_sl2(int k) { return AffineSl2(k); }

// ---------------------------------------------------------------------------
// Cyclic Z/m
// ---------------------------------------------------------------------------

inline Rational cyclic_cw(const CyclicLabel& l) {
  return Rational(static_cast<long long>(l.a) * (l.m - l.a), 2LL * l.m);
}

class CyclicRing : public TableRing<CyclicLabel> {
 public:
  explicit CyclicRing(int m)
      : TableRing<CyclicLabel>(
            make_labels(m), CyclicLabel{m, 0},
            [](const CyclicLabel& l) { return CyclicLabel{l.m, (l.m - l.a) % l.m}; },
            [](const CyclicLabel& x, const CyclicLabel& y) {
              if (x.m != y.m) throw DomainError("modulus mismatch");
              return FusionExpansion<CyclicLabel>{{CyclicLabel{x.m, (x.a + y.a) % x.m}, 1}};
            },
            [](const CyclicLabel& l) { return cyclic_cw(l); }, Rational(m - 1)),
        m_(m) {}

  int modulus() const { return m_; }

 private:
  static std::vector<CyclicLabel> make_labels(int m) {
    if (m < 1) throw DomainError("cyclic modulus must be >= 1");
    std::vector<CyclicLabel> out;
    for (int a = 0; a < m; ++a) out.push_back({m, a});
    return out;
  }
  int m_;
};

inline CyclicRing datum_cyclic(int m) { return CyclicRing(m); }

// ---------------------------------------------------------------------------
// Proportional pairings
// ---------------------------------------------------------------------------

template <class Label>
struct PairingFailure {
  Label first;
  Label second;
  std::string description;
};

template <class Label>
struct PairingReport {
  bool is_fusion_injection = false;
  std::optional<Rational> eta;
  std::optional<PairingFailure<Label>> failure_witness;
  std::size_t nonunit_simples = 0;
};

template <class Source, class Target>
using LabelMap = std::map<label_t<Source>, label_t<Target>>;

namespace detail {
template <FusionRing R>
std::string describe(const R& ring, const Expansion& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ring.label(e[i].label));
    if (e[i].mult != 1) s += " x" + std::to_string(e[i].mult);
  }
  return s + "}";
}
}  // namespace detail

/// Checks that f embeds the source subring into the target fusion ring (unit,
/// duals and every pairwise product preserved) and that cw(f(M)) / cw(M) is a
/// single positive constant eta over the nonunit simples.
template <FusionRing Source, FusionRing Target>
PairingReport<label_t<Source>> verify_pairing(const Source& source, const std::vector<label_t<Source>>& subring,
                                              const Target& target, const LabelMap<Source, Target>& f) {
  using SLabel = label_t<Source>;
  PairingReport<SLabel> report;
  indexed::validate_subring(source, indices_of(source, subring));

  std::map<Index, Index> image;
  std::set<Index> used;
  bool injective = true;
  for (const SLabel& s : subring) {
    auto it = f.find(s);
    if (it == f.end()) throw ConfigurationError("pairing map is undefined on " + to_string(s));
    Index t = 0;
    try {
      t = target.index_of(it->second);
    } catch (const LabelError& e) {
      throw ConfigurationError(std::string("pairing image invalid: ") + e.what());
    }
    image[source.index_of(s)] = t;
    if (!used.insert(t).second && injective) {
      injective = false;
      report.failure_witness = PairingFailure<SLabel>{s, s, "image " + to_string(it->second) + " is hit twice"};
    }
  }
  auto fail = [&](const SLabel& a, const SLabel& b, std::string why) {
    if (!report.failure_witness) report.failure_witness = PairingFailure<SLabel>{a, b, std::move(why)};
    injective = false;
  };

  const SLabel unit = source.label(source.unit());
  if (image.contains(source.unit()) && image.at(source.unit()) != target.unit()) {
    fail(unit, unit, "unit is not sent to the unit");
  }
  for (const auto& [s, t] : image) {
    if (!image.contains(source.dual(s)) || image.at(source.dual(s)) != target.dual(t)) {
      fail(source.label(s), source.label(source.dual(s)), "duality is not preserved");
    }
  }
  for (const auto& [a, fa] : image) {
    for (const auto& [b, fb] : image) {
      Expansion mapped;
      for (const Term& x : source.fuse(a, b)) mapped.push_back({image.at(x.label), x.mult});
      std::ranges::sort(mapped);
      Expansion expected(std::ranges::begin(target.fuse(fa, fb)), std::ranges::end(target.fuse(fa, fb)));
      std::ranges::sort(expected);
      if (mapped != expected) {
        fail(source.label(a), source.label(b),
             "source product maps to " + detail::describe(target, mapped) + " but the target product is " +
                 detail::describe(target, expected));
      }
    }
  }
  report.is_fusion_injection = injective;

  std::optional<Rational> ratio;
  bool constant = true;
  for (const auto& [s, t] : image) {
    if (s == source.unit()) continue;
    ++report.nonunit_simples;
    if (source.cw(s) == 0) {
      constant = false;
      continue;
    }
    const Rational q = target.cw(t) / source.cw(s);
    if (!ratio) {
      ratio = q;
    } else if (*ratio != q) {
      constant = false;
    }
  }
  if (injective && constant && ratio && *ratio > 0) report.eta = ratio;
  return report;
}

/// Compares degree_04 over every 4-multiset of the subring with `scale` times
/// the degree of the image tuple. Returns the first mismatch, if any.
template <FusionRing Source, FusionRing Target>
std::optional<std::string> degree_transport_mismatch(const Source& source,
                                                     const std::vector<label_t<Source>>& subring,
                                                     const Target& target, const LabelMap<Source, Target>& f,
                                                     const Rational& scale) {
  Engine<Source> src(source);
  Engine<Target> tgt(target);
  const auto idx = indices_of(source, subring);
  const std::size_t s = idx.size();
  auto image = [&](Index x) { return target.index_of(f.at(source.label(x))); };
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a; b < s; ++b)
      for (std::size_t c = b; c < s; ++c)
        for (std::size_t d = c; d < s; ++d) {
          const std::array<Index, 4> t{idx[a], idx[b], idx[c], idx[d]};
          const Rational lhs = src.degree04(t);
          const Rational rhs = scale * tgt.degree04({image(t[0]), image(t[1]), image(t[2]), image(t[3])});
          if (lhs != rhs) {
            return "degree " + to_string(lhs) + " vs scaled image " + to_string(rhs) + " at (" +
                   to_string(source.label(t[0])) + ", " + to_string(source.label(t[1])) + ", " +
                   to_string(source.label(t[2])) + ", " + to_string(source.label(t[3])) + ")";
          }
        }
  return std::nullopt;
}

/// M^{2a,a} -> lambda = 2a
inline LabelMap<Sl2Parafermion, AffineSl2> pairing_T_to_affine(int k) {
  LabelMap<Sl2Parafermion, AffineSl2> f;
  for (int a = 0; 2 * a <= k; ++a) f.emplace(canonicalize(k, 2 * a, a), AffineLabel{k, 2 * a});
  return f;
}

/// M^{k,a} -> a in Z/k
inline LabelMap<Sl2Parafermion, CyclicRing> pairing_S1_to_cyclic(int k) {
  LabelMap<Sl2Parafermion, CyclicRing> f;
  for (int a = 0; a < k; ++a) f.emplace(canonicalize(k, k, a), CyclicLabel{k, a});
  return f;
}

}  // namespace fpos
