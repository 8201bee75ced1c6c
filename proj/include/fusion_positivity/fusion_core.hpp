#pragma once

// Generic coinvariant-divisor engine over any FusionRing: n-point ranks by
// factorization, genus-zero divisor classes, degrees on M_{0,4}, F-curve
// intersections, triviality, positivity scans and certificates, and the
// lambda-twist threshold.

#include "fusion_positivity/errors.hpp"
#include "fusion_positivity/fusion_ring.hpp"
#include "fusion_positivity/rational.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fpos {

// ---------------------------------------------------------------------------
// Marked-point subsets and F-curves
// ---------------------------------------------------------------------------

/// Sorted subset of the marked points {0, ..., n-1}.
using PointSet = std::vector<std::size_t>;

/// Orders point sets by size, then lexicographically.
struct PointSetOrder {
  bool operator()(const PointSet& a, const PointSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Complement of `s` inside {0, ..., n-1}.
inline PointSet complement(const PointSet& s, std::size_t n) {
  PointSet out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < s.size() && s[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

/// Canonical boundary indices {I, I^c}: 2 <= |I| <= n/2, with the block holding
/// point 0 chosen when both halves have equal size.
inline std::vector<PointSet> boundary_subsets(std::size_t n) {
  std::vector<PointSet> out;
  if (n < 4) return out;
  for (std::size_t size = 2; size <= n / 2; ++size) {
    PointSet s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = i;
    while (true) {
      if (2 * size < n || s.front() == 0) out.push_back(s);
      // advance to the next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && s[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return out;
}

/// A partition of the marked points into four nonempty blocks, stored in
/// canonical order (blocks sorted internally, then by size and lexicographically).
class FCurve {
 public:
  FCurve(std::size_t n, std::vector<PointSet> blocks) : n_(n) {
    if (blocks.size() != 4) {
      throw PartitionError("an F-curve needs exactly 4 blocks, got " + std::to_string(blocks.size()));
    }
    std::vector<bool> seen(n, false);
    for (std::size_t p = 0; p < 4; ++p) {
      PointSet& b = blocks[p];
      if (b.empty()) throw PartitionError("F-curve block " + std::to_string(p + 1) + " is empty");
      std::ranges::sort(b);
      for (std::size_t x : b) {
        if (x >= n) throw PartitionError("point " + std::to_string(x + 1) + " exceeds n = " + std::to_string(n));
        if (seen[x]) throw PartitionError("point " + std::to_string(x + 1) + " appears in two blocks");
        seen[x] = true;
      }
    }
    if (std::ranges::find(seen, false) != seen.end()) {
      throw PartitionError("F-curve blocks do not cover all " + std::to_string(n) + " points");
    }
    std::ranges::sort(blocks, PointSetOrder{});
    std::ranges::move(blocks, blocks_.begin());
  }

  std::size_t n() const { return n_; }
  const std::array<PointSet, 4>& blocks() const { return blocks_; }

  friend bool operator==(const FCurve&, const FCurve&) = default;

  /// Every partition of {0, ..., n-1} into four nonempty blocks.
  static std::vector<FCurve> all(std::size_t n) {
    std::vector<FCurve> out;
    if (n < 4) return out;
    // restricted growth strings with exactly four symbols
    std::vector<std::size_t> code(n, 0);
    auto emit = [&] {
      std::vector<PointSet> blocks(4);
      for (std::size_t i = 0; i < n; ++i) blocks[code[i]].push_back(i);
      out.emplace_back(n, std::move(blocks));
    };
    auto recurse = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
      if (n - pos < 4 - used) return;
      if (pos == n) {
        emit();
        return;
      }
      const std::size_t limit = std::min<std::size_t>(used + 1, 4);
      for (std::size_t b = 0; b < limit; ++b) {
        code[pos] = b;
        self(self, pos + 1, std::max(used, b + 1));
      }
    };
    code[0] = 0;
    recurse(recurse, 1, 1);
    return out;
  }

 private:
  std::size_t n_;
  std::array<PointSet, 4> blocks_;
};

// ---------------------------------------------------------------------------
// Result types
// ---------------------------------------------------------------------------

/// Genus-zero coinvariant divisor in the psi / boundary basis.
struct DivisorClass {
  std::size_t n = 0;
  Multiplicity mu = 0;
  std::vector<Rational> psi_coeffs;
  std::map<PointSet, Rational, PointSetOrder> boundary_coeffs;
};

template <class Label>
struct ScanReport {
  std::uint64_t tuples_examined = 0;
  Rational min_degree{0};
  std::vector<std::pair<std::array<Label, 4>, Rational>> counterexamples;
  std::chrono::duration<double, std::milli> elapsed{0};

  friend bool operator==(const ScanReport& a, const ScanReport& b) {
    return a.tuples_examined == b.tuples_examined && a.min_degree == b.min_degree &&
           a.counterexamples == b.counterexamples;
  }
};

enum class CertificateStatus {
  issued,        // interval [f_max/2, f_min] is nonempty
  refused,       // abelian with nonnegative weights, but f_max > 2 f_min
  inapplicable,  // non-abelian subring or a negative conformal weight
};

struct PositivityCertificate {
  Rational f_min{0};
  Rational f_max{0};
  std::optional<std::pair<Rational, Rational>> c_interval;
  bool abelian = false;
  bool nonnegative_weights = false;
  CertificateStatus status = CertificateStatus::inapplicable;
};

inline const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::issued: return "issued";
    case CertificateStatus::refused: return "refused";
    case CertificateStatus::inapplicable: return "inapplicable";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Index-level engine
// ---------------------------------------------------------------------------

namespace detail {

inline Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
  Multiplicity r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("fusion multiplicity overflow");
  return r;
}

inline Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("fusion multiplicity overflow");
  return r;
}

/// Multiplicity of x in a sorted expansion.
inline Multiplicity lookup(const Expansion& e, Index x) {
  auto it = std::ranges::lower_bound(e, x, {}, &Term::label);
  return (it != e.end() && it->label == x) ? it->mult : 0;
}

/// (sum of terms of p) ⊠ m, sorted and merged.
template <FusionRing R>
Expansion fold(const R& ring, const Expansion& p, Index m) {
  Expansion acc;
  for (const Term& x : p) {
    for (const Term& y : ring.fuse(x.label, m)) {
      acc.push_back({y.label, checked_mul(x.mult, y.mult)});
    }
  }
  std::ranges::sort(acc, {}, &Term::label);
  Expansion out;
  for (const Term& t : acc) {
    if (!out.empty() && out.back().label == t.label) {
      out.back().mult = checked_add(out.back().mult, t.mult);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

/// Degree on M_{0,4} given the already known rank `mu` of the four modules.
template <FusionRing R>
Rational degree04_given_rank(const R& ring, const std::array<Index, 4>& m, Multiplicity mu) {
  if (mu == 0) return Rational(0);
  Rational total = 0;
  for (Index x : m) total += ring.cw(x);
  total *= mu;
  static constexpr std::array<std::array<int, 3>, 3> channels{{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};
  for (const auto& [p, q, r] : channels) {
    // W runs over labels with rank3(M1, Mp, W) > 0, i.e. W = dual(X) for X in M1 ⊠ Mp.
    for (const Term& x : ring.fuse(m[0], m[p])) {
      const Multiplicity other = rank3(ring, m[q], m[r], x.label);
      if (other != 0) total -= ring.cw(ring.dual(x.label)) * checked_mul(x.mult, other);
    }
  }
  return total;
}

}  // namespace detail

/// Index-level engine holding a memo of block products keyed by sorted label
/// multisets. Not thread-safe; give each worker its own instance.
template <FusionRing R>
class Engine {
 public:
  explicit Engine(const R& ring) : ring_(&ring), unit_expansion_{{ring.unit(), 1}} {}

  const R& ring() const { return *ring_; }

  /// Fusion product of all modules in `modules` (order irrelevant).
  const Expansion& product(std::vector<Index> modules) {
    std::ranges::sort(modules);
    return sorted_product(modules);
  }

  /// Rank of the n-pointed coinvariant bundle, n >= 2.
  Multiplicity rank(std::span<const Index> modules) {
    if (modules.size() < 2) {
      throw ArityError("rank needs at least 2 modules, got " + std::to_string(modules.size()));
    }
    std::vector<Index> sorted(modules.begin(), modules.end());
    std::ranges::sort(sorted);
    const Index last = sorted.back();
    sorted.pop_back();
    return detail::lookup(sorted_product(sorted), ring_->dual(last));
  }

  Rational degree04(const std::array<Index, 4>& modules) {
    return detail::degree04_given_rank(*ring_, modules, rank(modules));
  }

  DivisorClass divisor_class(std::span<const Index> modules) {
    const std::size_t n = modules.size();
    if (n < 4) throw ArityError("a divisor class needs n >= 4 modules, got " + std::to_string(n));
    DivisorClass out;
    out.n = n;
    out.mu = rank(modules);
    for (Index m : modules) out.psi_coeffs.push_back(ring_->cw(m) * out.mu);
    for (const PointSet& block : boundary_subsets(n)) {
      const Expansion& inside = product(pick(modules, block));
      const Expansion& outside = product(pick(modules, complement(block, n)));
      Rational b = 0;
      // W attaches on the I side: rank(M^I, W) = mult of dual(W) in prod(I).
      for (const Term& x : inside) {
        const Index w = ring_->dual(x.label);
        const Multiplicity other = detail::lookup(outside, w);
        if (other != 0) b += ring_->cw(w) * detail::checked_mul(x.mult, other);
      }
      out.boundary_coeffs.emplace(block, std::move(b));
    }
    return out;
  }

  /// Intersection with the F-curve: the spine carries the terms W^p of each
  /// block product, weighted by their multiplicities rank(M^{I_p}, dual W^p).
  Rational fcurve(std::span<const Index> modules, const FCurve& curve) {
    if (curve.n() != modules.size()) {
      throw PartitionError("F-curve is on " + std::to_string(curve.n()) + " points but " +
                           std::to_string(modules.size()) + " modules were given");
    }
    std::array<Expansion, 4> legs;
    for (std::size_t p = 0; p < 4; ++p) legs[p] = product(pick(modules, curve.blocks()[p]));
    Rational total = 0;
    for (const Term& w0 : legs[0]) {
      for (const Term& w1 : legs[1]) {
        for (const Term& w2 : legs[2]) {
          for (const Term& w3 : legs[3]) {
            const Rational d = degree04({w0.label, w1.label, w2.label, w3.label});
            if (d == 0) continue;
            Multiplicity weight = detail::checked_mul(detail::checked_mul(w0.mult, w1.mult),
                                                      detail::checked_mul(w2.mult, w3.mult));
            total += d * weight;
          }
        }
      }
    }
    return total;
  }

  /// True iff the divisor meets every F-curve trivially (F-curves span the
  /// curve classes of M_{0,n}, so this decides numerical triviality).
  bool is_trivial(std::span<const Index> modules) {
    const std::size_t n = modules.size();
    if (n < 4) throw ArityError("triviality needs n >= 4 modules, got " + std::to_string(n));
    for (const FCurve& curve : FCurve::all(n)) {
      if (fcurve(modules, curve) != 0) return false;
    }
    return true;
  }

  Rational degree11(Index w) const {
    const R& ring = *ring_;
    const Rational base = ring.central_charge() / 2 + ring.cw(w);
    Rational total = 0;
    for (Index x = 0; x < ring.size(); ++x) {
      // rank3(w, X, dual X) = multiplicity of X in w ⊠ X
      const Multiplicity r = multiplicity(ring.fuse(w, x), x);
      if (r != 0) total += (base - 12 * ring.cw(x)) * r;
    }
    return total;
  }

  std::size_t cache_size() const { return products_.size(); }

 private:
  static std::vector<Index> pick(std::span<const Index> modules, const PointSet& positions) {
    std::vector<Index> out;
    out.reserve(positions.size());
    for (std::size_t p : positions) out.push_back(modules[p]);
    return out;
  }

  const Expansion& sorted_product(const std::vector<Index>& key) {
    if (key.empty()) return unit_expansion_;
    if (auto it = products_.find(key); it != products_.end()) return it->second;
    Expansion value;
    if (key.size() == 1) {
      value = {{key.front(), 1}};
    } else {
      std::vector<Index> prefix(key.begin(), key.end() - 1);
      value = detail::fold(*ring_, sorted_product(prefix), key.back());
    }
    return products_.emplace(key, std::move(value)).first->second;
  }

  const R* ring_;
  Expansion unit_expansion_;
  std::unordered_map<std::vector<Index>, Expansion, boost::hash<std::vector<Index>>> products_;
};

// ---------------------------------------------------------------------------
// Subring operations at the index level
// ---------------------------------------------------------------------------

namespace indexed {

/// Throws ClosureError unless `subring` is closed under dual and fusion.
template <FusionRing R>
void validate_subring(const R& ring, const std::vector<Index>& subring) {
  std::vector<bool> member(ring.size(), false);
  for (Index x : subring) {
    if (x >= ring.size()) throw LabelError("subring index out of range");
    member[x] = true;
  }
  if (subring.empty()) throw ClosureError("empty label subset");
  for (Index a : subring) {
    if (!member[ring.dual(a)]) {
      throw ClosureError("subset is not closed under duals: dual of " + to_string(ring.label(a)) + " is missing");
    }
    for (Index b : subring) {
      for (const Term& t : ring.fuse(a, b)) {
        if (!member[t.label]) {
          throw ClosureError("subset is not closed under fusion: " + to_string(ring.label(a)) + " x " +
                             to_string(ring.label(b)) + " contains " + to_string(ring.label(t.label)));
        }
      }
    }
  }
}

struct ScanOptions {
  unsigned jobs = 1;
};

/// Degree of every rank > 0 unordered 4-multiset drawn from the subring.
template <FusionRing R>
ScanReport<Index> scan_f_positivity(const R& ring, std::vector<Index> subring, ScanOptions options = {}) {
  const auto start = std::chrono::steady_clock::now();
  validate_subring(ring, subring);
  std::ranges::sort(subring);
  subring.erase(std::unique(subring.begin(), subring.end()), subring.end());

  const std::size_t s = subring.size();
  std::vector<std::size_t> position(ring.size(), s);
  for (std::size_t i = 0; i < s; ++i) position[subring[i]] = i;

  struct Slot {
    std::uint64_t examined = 0;
    std::optional<Rational> min_degree;
    std::vector<std::pair<std::array<std::size_t, 4>, Rational>> negatives;
  };
  std::vector<Slot> slots(s);

  // Rows are indexed by the smallest member; each row is independent work.
  auto scan_row = [&](std::size_t ia) {
    Slot& slot = slots[ia];
    const Index a = subring[ia];
    for (std::size_t ib = ia; ib < s; ++ib) {
      const Expansion ab = detail::fold(ring, Expansion{{a, 1}}, subring[ib]);
      for (std::size_t ic = ib; ic < s; ++ic) {
        const Index c = subring[ic];
        // rank(a, b, c, d) = multiplicity of dual(d) in a ⊠ b ⊠ c
        for (const Term& x : detail::fold(ring, ab, c)) {
          const std::size_t id = position[ring.dual(x.label)];
          if (id < ic || id == s) continue;
          ++slot.examined;
          const std::array<Index, 4> tuple{a, subring[ib], c, subring[id]};
          Rational d = detail::degree04_given_rank(ring, tuple, x.mult);
          if (!slot.min_degree || d < *slot.min_degree) slot.min_degree = d;
          if (d < 0) slot.negatives.push_back({{ia, ib, ic, id}, std::move(d)});
        }
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || s < 2) {
    for (std::size_t ia = 0; ia < s; ++ia) scan_row(ia);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    std::vector<std::exception_ptr> failures(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t ia = next++; ia < s; ia = next++) scan_row(ia);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    workers.clear();  // joins
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  ScanReport<Index> report;
  std::vector<std::pair<std::array<std::size_t, 4>, Rational>> negatives;
  bool any = false;
  for (Slot& slot : slots) {
    report.tuples_examined += slot.examined;
    if (slot.min_degree && (!any || *slot.min_degree < report.min_degree)) {
      report.min_degree = *slot.min_degree;
      any = true;
    }
    std::ranges::move(slot.negatives, std::back_inserter(negatives));
  }
  std::ranges::sort(negatives, {}, &std::pair<std::array<std::size_t, 4>, Rational>::first);
  for (auto& [pos, d] : negatives) {
    report.counterexamples.push_back(
        {{subring[pos[0]], subring[pos[1]], subring[pos[2]], subring[pos[3]]}, std::move(d)});
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

template <FusionRing R>
PositivityCertificate positivity_certificate(const R& ring, const std::vector<Index>& subring) {
  validate_subring(ring, subring);
  PositivityCertificate cert;
  cert.abelian = true;
  cert.nonnegative_weights = true;
  bool first = true;
  for (Index a : subring) {
    const Rational& w = ring.cw(a);
    if (w < 0) cert.nonnegative_weights = false;
    if (a != ring.unit()) {
      if (first || w < cert.f_min) cert.f_min = w;
      if (first || w > cert.f_max) cert.f_max = w;
      first = false;
    }
    for (Index b : subring) {
      const auto& terms = ring.fuse(a, b);
      auto it = std::ranges::begin(terms);
      const bool simple = it != std::ranges::end(terms) && it->mult == 1 && ++it == std::ranges::end(terms);
      if (!simple) cert.abelian = false;
    }
  }
  if (!cert.abelian || !cert.nonnegative_weights) {
    cert.status = CertificateStatus::inapplicable;
  } else if (cert.f_max <= 2 * cert.f_min) {
    cert.status = CertificateStatus::issued;
    cert.c_interval = std::pair{cert.f_max / 2, cert.f_min};
  } else {
    cert.status = CertificateStatus::refused;
  }
  return cert;
}

template <FusionRing R>
Rational lambda_threshold(const R& ring, const std::vector<Index>& subring) {
  validate_subring(ring, subring);
  const Rational half_c = ring.central_charge() / 2;
  Rational best = 0;
  for (Index w : subring) {
    for (Index x = 0; x < ring.size(); ++x) {
      if (multiplicity(ring.fuse(w, x), x) == 0) continue;
      Rational need = 12 * ring.cw(x) - half_c - ring.cw(w);
      if (need > best) best = std::move(need);
    }
  }
  return best;
}

}  // namespace indexed

// ---------------------------------------------------------------------------
// Label-level API
// ---------------------------------------------------------------------------

template <FusionRing R>
Multiplicity rank_n(const R& ring, const std::vector<label_t<R>>& modules) {
  Engine<R> engine(ring);
  const auto idx = indices_of(ring, modules);
  return engine.rank(idx);
}

template <FusionRing R>
Rational degree_04(const R& ring, const std::vector<label_t<R>>& modules) {
  if (modules.size() != 4) throw ArityError("degree_04 needs exactly 4 modules, got " + std::to_string(modules.size()));
  Engine<R> engine(ring);
  const auto idx = indices_of(ring, modules);
  return engine.degree04({idx[0], idx[1], idx[2], idx[3]});
}

template <FusionRing R>
DivisorClass divisor_class(const R& ring, const std::vector<label_t<R>>& modules) {
  Engine<R> engine(ring);
  const auto idx = indices_of(ring, modules);
  return engine.divisor_class(idx);
}

template <FusionRing R>
Rational fcurve_intersect(const R& ring, const std::vector<label_t<R>>& modules, const FCurve& curve) {
  Engine<R> engine(ring);
  const auto idx = indices_of(ring, modules);
  return engine.fcurve(idx, curve);
}

template <FusionRing R>
bool is_trivial(const R& ring, const std::vector<label_t<R>>& modules) {
  Engine<R> engine(ring);
  const auto idx = indices_of(ring, modules);
  return engine.is_trivial(idx);
}

template <FusionRing R>
ScanReport<label_t<R>> scan_f_positivity(const R& ring, const std::vector<label_t<R>>& subring,
                                         indexed::ScanOptions options = {}) {
  const ScanReport<Index> raw = indexed::scan_f_positivity(ring, indices_of(ring, subring), options);
  ScanReport<label_t<R>> out;
  out.tuples_examined = raw.tuples_examined;
  out.min_degree = raw.min_degree;
  out.elapsed = raw.elapsed;
  for (const auto& [t, d] : raw.counterexamples) {
    out.counterexamples.push_back(
        {{ring.label(t[0]), ring.label(t[1]), ring.label(t[2]), ring.label(t[3])}, d});
  }
  return out;
}

template <FusionRing R>
PositivityCertificate positivity_certificate(const R& ring, const std::vector<label_t<R>>& subring) {
  return indexed::positivity_certificate(ring, indices_of(ring, subring));
}

template <FusionRing R>
Rational degree_11(const R& ring, const label_t<R>& w) {
  return Engine<R>(ring).degree11(ring.index_of(w));
}

template <FusionRing R>
Rational lambda_threshold(const R& ring, const std::vector<label_t<R>>& subring) {
  return indexed::lambda_threshold(ring, indices_of(ring, subring));
}

}  // namespace fpos
