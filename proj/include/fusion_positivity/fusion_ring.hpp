#pragma once

#include "fusion_positivity/errors.hpp"
#include "fusion_positivity/rational.hpp"

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

namespace fpos {

/// Position of a simple module in a ring's label list.
using Index = std::uint32_t;
using Multiplicity = std::uint64_t;

struct Term {
  Index label;
  Multiplicity mult;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Sparse fusion expansion over label indices: sorted by index, no zero entries.
using Expansion = std::vector<Term>;

template <class T>
concept TermRange = std::ranges::forward_range<T> &&
                    std::same_as<std::ranges::range_value_t<T>, Term>;

/// A fusion datum exposed through dense label indices. Instances either store
/// their fusion table or compute products on demand (large abelian rings).
template <class R>
concept FusionRing = requires(const R& r, Index a, Index b, const typename R::label_type& l) {
  typename R::label_type;
  { r.size() } -> std::convertible_to<std::size_t>;
  { r.label(a) } -> std::convertible_to<typename R::label_type>;
  { r.index_of(l) } -> std::same_as<Index>;
  { r.unit() } -> std::same_as<Index>;
  { r.dual(a) } -> std::same_as<Index>;
  { r.cw(a) } -> std::convertible_to<const Rational&>;
  { r.central_charge() } -> std::convertible_to<const Rational&>;
  { r.fuse(a, b) } -> TermRange;
};

template <class R>
using label_t = typename R::label_type;

/// Label-level view of a fusion product, ordered by label index.
template <class Label>
using FusionExpansion = std::vector<std::pair<Label, Multiplicity>>;

template <TermRange Range>
Multiplicity multiplicity(const Range& terms, Index x) {
  for (const Term& t : terms) {
    if (t.label == x) return t.mult;
  }
  return 0;
}

/// Three-point rank: multiplicity of dual(c) in a ⊠ b.
template <FusionRing R>
Multiplicity rank3(const R& ring, Index a, Index b, Index c) {
  return multiplicity(ring.fuse(a, b), ring.dual(c));
}

template <FusionRing R>
FusionExpansion<label_t<R>> expand_fusion(const R& ring, const label_t<R>& a, const label_t<R>& b) {
  FusionExpansion<label_t<R>> out;
  for (const Term& t : ring.fuse(ring.index_of(a), ring.index_of(b))) {
    out.emplace_back(ring.label(t.label), t.mult);
  }
  return out;
}

template <FusionRing R>
std::vector<Index> indices_of(const R& ring, const std::vector<label_t<R>>& labels) {
  std::vector<Index> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(ring.index_of(l));
  return out;
}

template <FusionRing R>
std::vector<Index> all_indices(const R& ring) {
  std::vector<Index> out(ring.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Index>(i);
  return out;
}

/// Fusion datum with a precomputed multiplication table. Suitable whenever the
/// square of the label count fits comfortably in memory.
template <class Label>
class TableRing {
 public:
  using label_type = Label;

  template <class DualFn, class FuseFn, class CwFn>
  TableRing(std::vector<Label> labels, const Label& unit, DualFn&& dual_of, FuseFn&& fuse_of,
            CwFn&& cw_of, Rational central_charge)
      : labels_(std::move(labels)), central_charge_(std::move(central_charge)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!lookup_.emplace(labels_[i], static_cast<Index>(i)).second) {
        throw LabelError("duplicate label " + to_string(labels_[i]));
      }
    }
    unit_ = index_of(unit);
    const std::size_t n = labels_.size();
    dual_.reserve(n);
    cw_.reserve(n);
    for (const Label& l : labels_) {
      dual_.push_back(index_of(dual_of(l)));
      cw_.push_back(cw_of(l));
    }
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Expansion e;
        for (const auto& [l, m] : fuse_of(labels_[a], labels_[b])) {
          if (m != 0) e.push_back({index_of(l), static_cast<Multiplicity>(m)});
        }
        std::ranges::sort(e);
        table_[a * n + b] = std::move(e);
      }
    }
  }

  std::size_t size() const { return labels_.size(); }
  const Label& label(Index i) const { return labels_.at(i); }
  const std::vector<Label>& labels() const { return labels_; }

  Index index_of(const Label& l) const {
    auto it = lookup_.find(l);
    if (it == lookup_.end()) throw LabelError("label " + to_string(l) + " is not in this datum");
    return it->second;
  }
  bool contains(const Label& l) const { return lookup_.contains(l); }

  Index unit() const { return unit_; }
  Index dual(Index i) const { return dual_[i]; }
  const Rational& cw(Index i) const { return cw_[i]; }
  const Rational& central_charge() const { return central_charge_; }
  const Expansion& fuse(Index a, Index b) const { return table_[a * labels_.size() + b]; }

 private:
  std::vector<Label> labels_;
  std::map<Label, Index> lookup_;
  Index unit_ = 0;
  std::vector<Index> dual_;
  std::vector<Rational> cw_;
  std::vector<Expansion> table_;
  Rational central_charge_;
};

/// Lists every violated fusion-datum axiom (unit, duality, cw, three-point rank
/// symmetry). Cubic in the label count, so intended for small instances.
template <FusionRing R>
std::vector<std::string> datum_axiom_violations(const R& ring) {
  std::vector<std::string> out;
  const auto n = static_cast<Index>(ring.size());
  const Index u = ring.unit();
  auto name = [&](Index i) { return to_string(ring.label(i)); };

  if (ring.dual(u) != u) out.push_back("unit is not self-dual");
  if (ring.cw(u) != 0) out.push_back("cw(unit) = " + to_string(ring.cw(u)));
  for (Index a = 0; a < n; ++a) {
    if (ring.dual(ring.dual(a)) != a) out.push_back("dual not involutive at " + name(a));
    if (ring.cw(ring.dual(a)) != ring.cw(a)) {
      out.push_back("cw(dual) != cw at " + name(a) + ": " + to_string(ring.cw(a)) + " vs " +
                    to_string(ring.cw(ring.dual(a))));
    }
    for (Index b = 0; b < n; ++b) {
      const Multiplicity expected = (b == ring.dual(a)) ? 1 : 0;
      if (rank3(ring, u, a, b) != expected) out.push_back("unit law fails at " + name(a) + ", " + name(b));
      if (std::ranges::empty(ring.fuse(a, b))) out.push_back("empty product " + name(a) + " x " + name(b));
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      for (Index c = b; c < n; ++c) {
        const Multiplicity r = rank3(ring, a, b, c);
        const bool symmetric = rank3(ring, a, c, b) == r && rank3(ring, b, a, c) == r &&
                               rank3(ring, b, c, a) == r && rank3(ring, c, a, b) == r &&
                               rank3(ring, c, b, a) == r;
        if (!symmetric) out.push_back("rank3 not symmetric at " + name(a) + ", " + name(b) + ", " + name(c));
      }
    }
  }
  return out;
}

}  // namespace fpos
