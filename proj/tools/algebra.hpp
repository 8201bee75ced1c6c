#pragma once

// Selection of the fusion datum named on the command line.

#include "fusion_positivity/affine_instances.hpp"
#include "fusion_positivity/errors.hpp"
#include "fusion_positivity/parafermion_sl2.hpp"
#include "fusion_positivity/parafermion_slr.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace fpos::cli {

using AnyRing = std::variant<Sl2Parafermion, SlrParafermion, AffineSl2, CyclicRing>;

inline Sl2Label parse_label(const Sl2Parafermion&, std::string_view s) { return parse_sl2_label(s); }
inline SlrLabel parse_label(const SlrParafermion&, std::string_view s) { return parse_slr_label(s); }
inline AffineLabel parse_label(const AffineSl2&, std::string_view s) { return parse_affine_label(s); }
inline CyclicLabel parse_label(const CyclicRing&, std::string_view s) { return parse_cyclic_label(s); }

struct AlgebraSpec {
  std::string name;  // sl2, slr, affine, cyclic
  int level = 0;
  int rank = 0;
};

/// Fills in whatever the flags left open from the first module label.
inline AlgebraSpec resolve_algebra(std::optional<std::string> algebra, std::optional<int> level,
                                   std::optional<int> rank, const std::vector<std::string>& modules) {
  AlgebraSpec spec;
  std::optional<LabelText> first;
  if (!modules.empty()) first = parse_label_text(modules.front());
  if (!algebra && first) {
    switch (first->prefix) {
      case 'M': algebra = "sl2"; break;
      case 'S': algebra = "slr"; break;
      case 'A': algebra = "affine"; break;
      case 'Z': algebra = "cyclic"; break;
      default: throw LabelError("cannot infer the algebra from '" + modules.front() + "'");
    }
  }
  if (!algebra) throw DomainError("--algebra is required when no module labels are given");
  spec.name = *algebra;
  if (spec.name != "sl2" && spec.name != "slr" && spec.name != "affine" && spec.name != "cyclic") {
    throw DomainError("unknown algebra '" + spec.name + "' (expected sl2, slr, affine or cyclic)");
  }
  if (!level && first && !first->params.empty()) level = static_cast<int>(first->params.back());
  if (!rank && first && spec.name == "slr" && first->params.size() == 2) rank = static_cast<int>(first->params.front());
  if (!level) throw DomainError("--level is required");
  spec.level = *level;
  if (spec.name == "slr") {
    if (!rank) throw DomainError("--rank is required for --algebra slr");
    spec.rank = *rank;
  }
  return spec;
}

inline AnyRing make_ring(const AlgebraSpec& spec) {
  if (spec.level < 1) throw DomainError("level must be >= 1");
  if (spec.name == "sl2") {
    if (spec.level > 60) throw DomainError("sl2 parafermion level is limited to 60");
    return Sl2Parafermion(spec.level);
  }
  if (spec.name == "slr") return SlrParafermion(spec.rank, spec.level);
  if (spec.name == "affine") {
    if (spec.level > 500) throw DomainError("affine level is limited to 500");
    return AffineSl2(spec.level);
  }
  if (spec.level > 5000) throw DomainError("cyclic modulus is limited to 5000");
  return CyclicRing(spec.level);
}

/// Labels of the requested subring: full, T or S1 (the last two for sl2 only).
template <class Ring>
std::vector<label_t<Ring>> subring_labels(const Ring& ring, const std::string& which) {
  if (which == "full") {
    std::vector<label_t<Ring>> out;
    for (Index i = 0; i < ring.size(); ++i) out.push_back(ring.label(i));
    return out;
  }
  if constexpr (std::is_same_v<Ring, Sl2Parafermion>) {
    if (which == "T") return subring_T(ring.level());
    if (which == "S1") return subring_S1(ring.level());
  }
  throw DomainError("subring '" + which + "' is not available for this algebra (T and S1 need --algebra sl2)");
}

}  // namespace fpos::cli
