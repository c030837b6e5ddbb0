#pragma once

// Isomorphism-invariant fingerprint of a Lie algebra. Equal signatures are
// necessary, not sufficient, for isomorphism.

#include <compare>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lieq/cohomology.hpp"
#include "lieq/liealg.hpp"

namespace lieq {

struct InvariantSignature {
  std::size_t dim = 0;
  std::vector<std::size_t> lcs;
  std::vector<std::size_t> ucs;
  std::vector<std::size_t> derived;
  std::size_t center = 0;
  std::size_t der = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::optional<std::size_t> nilpotent_class;
  std::optional<std::size_t> solvable_length;
  bool abelian = false;
  /// Filled only by the extended signature: dim H^k(g, C) for k = 0..dim.
  std::vector<std::size_t> betti_trivial;

  auto operator<=>(const InvariantSignature&) const = default;

  std::string to_string() const {
    auto list = [](const std::vector<std::size_t>& v) {
      std::string s = "(";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
      return s + ")";
    };
    auto opt = [](const std::optional<std::size_t>& v) {
      return v ? std::to_string(*v) : std::string("no");
    };
    std::ostringstream os;
    os << "dim=" << dim << " lcs=" << list(lcs) << " ucs=" << list(ucs)
       << " derived=" << list(derived) << " Z=" << center << " Der=" << der << " H1=" << h1
       << " H2=" << h2 << " class=" << opt(nilpotent_class)
       << " solvable=" << opt(solvable_length) << " abelian=" << (abelian ? "yes" : "no");
    if (!betti_trivial.empty()) os << " betti=" << list(betti_trivial);
    return os.str();
  }
};

inline InvariantSignature invariant_signature(const LieAlgebra& g, bool extended = false) {
  InvariantSignature s;
  s.dim = g.dim();
  s.lcs = series_dims(g.lower_central_series());
  s.ucs = series_dims(g.upper_central_series());
  s.derived = series_dims(g.derived_series());
  s.center = g.center().dim();
  s.abelian = g.is_abelian();
  s.nilpotent_class = g.nilpotency_class();
  s.solvable_length = g.solvable_length();
  if (g.dim() > 0) {
    DerivationAlgebra der = derivation_algebra(g);
    s.der = der.derivations.dim();
    s.h1 = der.outer_dim();
    s.h2 = schur_multiplier_dim(g);
  }
  if (extended) s.betti_trivial = betti_numbers(trivial_rep(g));
  return s;
}

}  // namespace lieq
