#pragma once

// The twelve acceptance checks as Reports. Randomized parts draw from one
// mt19937_64 seeded by the caller so runs are reproducible.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lieq/catalog.hpp"
#include "lieq/cohomology.hpp"
#include "lieq/deform.hpp"
#include "lieq/extend.hpp"
#include "lieq/fock.hpp"
#include "lieq/qheis.hpp"
#include "lieq/report.hpp"
#include "lieq/serialize.hpp"
#include "lieq/signature.hpp"

namespace lieq {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Oracle-frozen invariants; when null, criterion 2 checks only separation.
  const json* golden = nullptr;
};

namespace detail {

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void add_budget(Report& r, const Stopwatch& w, std::int64_t limit_ms) {
  const auto ms = w.ms();
  r.timing_ms = ms;
  r.add("runtime", "< " + std::to_string(limit_ms) + " ms", std::to_string(ms) + " ms",
        ms < limit_ms);
}

inline void add_flag(Report& r, const std::string& name, bool ok) {
  r.add(name, "holds", ok ? "holds" : "fails", ok);
}

inline GaussRat random_rational(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return GaussRat::fraction(num(rng), den(rng));
}

inline GaussRat random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return GaussRat::fraction(num(rng), den(rng));
}

inline SparseMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    SparseMatrix t(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) t.set(r, c, random_rational(rng, 3, 3));
    }
    if (try_inverse(t)) return t;
  }
}

/// Random sparse k-cochain on g with values in C^m, roughly `density` filled.
inline Cochain random_cochain(std::mt19937_64& rng, const LieAlgebra& g, std::size_t k,
                              std::size_t m, double density = 0.4) {
  Cochain c(g, k, m);
  const std::size_t total = cochain_space_dim(g.dim(), k, m);
  std::bernoulli_distribution keep(density);
  Vec coords(total);
  for (auto& x : coords) {
    if (keep(rng)) x = random_rational(rng, 3, 2);
  }
  return Cochain::from_coordinates(g, k, m, coords);
}

inline std::string tick(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// 1. Jacobi for every entry, the coincidences and the direct-sum identities.
inline Report criterion_catalog() {
  detail::Stopwatch w;
  Report r = catalog::verify_all();
  r.command = "catalog integrity";
  detail::add_budget(r, w, 2000);
  return r;
}

/// 2. The nine dimension-5 nilpotent entries have pairwise distinct signatures,
/// and each signature matches the frozen oracle values.
inline Report criterion_dim5_signatures(const VerifyOptions& opt) {
  Report r;
  r.command = "dim-5 signatures";
  ScopedTimer timer(r);
  const auto names = catalog::dim5_nilpotent();
  std::vector<InvariantSignature> sigs;
  for (const auto& name : names) {
    const LieAlgebra g = catalog::get(name).algebra;
    sigs.push_back(invariant_signature(g, true));
    const InvariantSignature& s = sigs.back();
    if (!opt.golden) continue;
    const json& gold = opt.golden->at("signatures").at(name);
    auto cmp = [&](const std::string& field, const json& actual) {
      r.add(name + ": " + field, gold.at(field).dump(), actual.dump(), gold.at(field) == actual);
    };
    cmp("lcs", s.lcs);
    cmp("ucs", s.ucs);
    cmp("derived", s.derived);
    cmp("center", s.center);
    cmp("der", s.der);
    cmp("h1", s.h1);
    cmp("nilpotent_class", s.nilpotent_class ? json(*s.nilpotent_class) : json(nullptr));
    cmp("solvable_length", s.solvable_length ? json(*s.solvable_length) : json(nullptr));
    cmp("betti_trivial", s.betti_trivial);
    cmp("h2", cohomology_dim(2, adjoint_rep(g)));
  }
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      const bool distinct = !(sigs[a] == sigs[b]);
      r.add(names[a] + " vs " + names[b], "distinct", distinct ? "distinct" : "collide", distinct);
    }
  }
  return r;
}

/// 3. sl2: Der = Inn = 3, no outer derivations, M(g) = H2(ad) = 0, orbit
/// tangent 6 = dim B2 and both rigidity flags.
inline Report criterion_sl2() {
  detail::Stopwatch w;
  Report r;
  r.command = "sl2 cohomology";
  const LieAlgebra g = catalog::sl2();
  const DerivationAlgebra der = derivation_algebra(g);
  r.check("dim Der", "3", std::to_string(der.derivations.dim()));
  r.check("dim Inn", "3", std::to_string(der.inner.dim()));
  r.check("dim H1(ad)", "0", std::to_string(cohomology_dim(1, adjoint_rep(g))));
  r.check("dim H2(ad)", "0", std::to_string(cohomology_dim(2, adjoint_rep(g))));
  r.check("dim M(g)", "0", std::to_string(schur_multiplier_dim(g)));
  r.check("dim H2(C)", "0", std::to_string(cohomology_dim(2, trivial_rep(g))));
  const RigidityReport rig = rigidity_report(g);
  r.check("orbit tangent dim", "6", std::to_string(rig.tangent));
  r.check("dim B2(ad)", "6", std::to_string(rig.b2));
  r.check("H2(ad) = 0 rigid", "yes", detail::tick(rig.nr_rigid));
  r.check("tangent = B2", "yes", detail::tick(rig.tangent_equals_b2));
  detail::add_budget(r, w, 1000);
  return r;
}

/// 4. d o d = 0 in every degree, adjoint and trivial coefficients.
inline Report criterion_d_squared() {
  Report r;
  r.command = "d^2 = 0";
  ScopedTimer timer(r);
  for (const auto& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    for (const auto& rho : {adjoint_rep(g), trivial_rep(g)}) {
      bool ok = true;
      for (std::size_t k = 0; k <= g.dim(); ++k) ok = ok && d_squared_check(rho, k);
      detail::add_flag(r, name + " " + to_string(rho.kind()), ok);
    }
  }
  return r;
}

/// 5. g/Z(g) with its induced cocycle rebuilds g up to signature, and 20
/// random coboundary shifts per algebra intertwine the brackets.
inline Report criterion_round_trip(const VerifyOptions& opt) {
  detail::Stopwatch w;
  Report r;
  r.command = "central extension round trip";
  std::mt19937_64 rng(opt.seed ^ 0x5u);
  for (const auto& name : catalog::list()) {
    const CatalogEntry e = catalog::get(name);
    if (!e.algebra.is_nilpotent() || e.algebra.center().is_zero()) continue;
    const InducedCocycle ic = induced_cocycle(e.algebra);
    const LieAlgebra rebuilt = central_extension(ic.quotient.algebra, ic.theta);
    const bool same = invariant_signature(rebuilt) == invariant_signature(e.algebra);
    r.add(name + ": signature preserved", "equal", same ? "equal" : "different", same);
    const LieAlgebra& base = ic.quotient.algebra;
    if (base.dim() == 0) continue;  // abelian: no 1-cochains on the zero quotient
    bool all = true;
    for (int trial = 0; trial < 20; ++trial) {
      Cochain c = detail::random_cochain(rng, base, 1, ic.theta.target_dim(), 0.6);
      all = all && coboundary_shift_iso(base, ic.theta, c).intertwines;
    }
    detail::add_flag(r, name + ": 20 random shifts intertwine", all);
  }
  detail::add_budget(r, w, 5000);
  return r;
}

/// The trivial-coefficient cycle holds but mu_t fails Jacobi at order 2.
inline DeformedBracket deformation_counterexample() {
  const LieAlgebra g = catalog::abelian(3);
  Cochain phi(g, 2, 3);
  phi.set({0, 1}, unit_vec(3, 0));
  phi.set({1, 2}, unit_vec(3, 1));
  return make_linear_deformation(g, phi);
}

/// 6. (a) the zero bracket deformed by any catalog bracket is Lie, (b) the
/// graded polynomial at t0 equals the direct Jacobi residual on 50 random
/// cases, (c) the counterexample is rejected.
inline Report criterion_deformation(const VerifyOptions& opt) {
  Report r;
  r.command = "deformation engine";
  ScopedTimer timer(r);
  for (const auto& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    if (g.dim() < 2) continue;  // no 2-cochains
    const LieAlgebra zero = catalog::abelian(g.dim());
    const auto wit = deformation_is_lie(make_linear_deformation(zero, bracket_as_cochain(zero, g)));
    r.add("(a) 0 + t*" + name, "lie", wit ? "not lie" : "lie", !wit);
  }
  std::mt19937_64 rng(opt.seed ^ 0x6u);
  const auto names = catalog::list();
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> order(1, 2);
  bool graded = true;
  std::string first_bad;
  for (int trial = 0; trial < 50; ++trial) {
    LieAlgebra g = catalog::get(names[pick(rng)]).algebra;
    while (g.dim() < 3 || g.dim() > 5) g = catalog::get(names[pick(rng)]).algebra;
    std::vector<Cochain> phis;
    for (int k = order(rng); k > 0; --k) phis.push_back(detail::random_cochain(rng, g, 2, g.dim(), 0.15));
    const DeformedBracket d(g, phis);
    const GaussRat t0 = detail::random_rational(rng);
    const bool ok = jacobi_polynomial_at(jacobi_polynomial(d), t0) ==
                    direct_jacobi_residuals(evaluate_at(d, t0, true));
    if (!ok && first_bad.empty()) first_bad = "trial " + std::to_string(trial);
    graded = graded && ok;
  }
  r.add("(b) graded vs direct residual, 50 random cases", "agree",
        graded ? "agree" : "differ at " + first_bad, graded);
  const DeformedBracket bad = deformation_counterexample();
  const bool cycle = is_two_cocycle_trivial_coeffs(bad.perturbations().front());
  r.check("(c) counterexample: trivial-coefficient cycle", "yes", detail::tick(cycle));
  const auto wit = deformation_is_lie(bad);
  r.check("(c) counterexample: first failing t-degree", "2",
          wit ? std::to_string(wit->degree) : "none");
  bool rejected = false;
  try {
    (void)evaluate_at(bad, GaussRat(1));
  } catch (const NotLieAtParameter&) {
    rejected = true;
  }
  r.check("(c) counterexample: evaluate_at(1) rejected", "yes", detail::tick(rejected));
  return r;
}

/// 7. Every q-identity family.
inline Report criterion_qidentities() {
  detail::Stopwatch w;
  Report r = qheis_identity_suite(12);
  r.command = "q-identity suite";
  detail::add_budget(r, w, 10000);
  return r;
}

/// 8. Defect contract and number-operator spectrum on the monomial basis.
inline Report criterion_fock() {
  detail::Stopwatch w;
  Report r;
  r.command = "fock interior exactness";
  for (const auto& q0 : {GaussRat(-1), GaussRat::fraction(-1, 2), GaussRat(0),
                         GaussRat::fraction(1, 3), GaussRat(1)}) {
    for (std::size_t N : {8u, 32u, 64u}) {
      const std::string tag = "q=" + q0.to_string() + " N=" + std::to_string(N) + ": ";
      const MonomialPair p = monomial_rep(q0, N);
      const SparseMatrix D = qccr_defect(p.A, p.B, q0);
      r.add(tag + "defect", "corner " + (-q_integer(static_cast<unsigned>(N)).eval(q0)).to_string(),
            "corner " + D.at(N - 1, N - 1).to_string() + (D.nonzeros() > 1 ? " + off-corner" : ""),
            defect_matches_contract(D, q0));
      const auto spec = number_operator_spectrum(p.A, p.B);
      const bool ok = spec && *spec == closed_form_spectrum(q0, N);
      r.add(tag + "spectrum", "closed form", ok ? "closed form" : "differs", ok);
    }
  }
  detail::add_budget(r, w, 3000);
  return r;
}

/// 9. Biorthogonal pairs from random positive weights.
inline Report criterion_biorthogonal(const VerifyOptions& opt) {
  Report r;
  r.command = "biorthogonality";
  ScopedTimer timer(r);
  std::mt19937_64 rng(opt.seed ^ 0x9u);
  std::uniform_int_distribution<std::size_t> size(2, 32);
  for (const auto& q0 : {GaussRat(1), GaussRat::fraction(1, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<GaussRat> t(size(rng));
      for (auto& x : t) x = detail::random_positive(rng);
      const BiorthogonalSystem s = biorthogonal_pair(t, q0);
      const std::string tag = "q=" + q0.to_string() + " #" + std::to_string(trial) +
                              " N=" + std::to_string(t.size()) + ": ";
      detail::add_flag(r, tag + "pairing = I", s.pairing_is_identity());
      detail::add_flag(r, tag + "squared ladder = {n+1}_q", s.ladder_matches());
      detail::add_flag(r, tag + "vacuum", s.vacuum_annihilated);
    }
  }
  return r;
}

/// 10. The shifted pair at alpha = 1, beta = i, N = 8 yields a_sh.
inline Report criterion_shifted_pair() {
  Report r;
  r.command = "shifted pair";
  ScopedTimer timer(r);
  const std::size_t N = 8;
  const ShiftedPair sp = shifted_pair(GaussRat(1), GaussRat::i(), N);
  const LieAlgebra want = catalog::a_sh();
  const std::vector<std::string> names{"A", "B", "B+", "A+"};
  for (const auto& [key, c] : sp.commutators) {
    const auto [i, j] = key;
    GaussRat expected;
    for (const auto& [k, v] : want.basis_bracket(i, j)) {
      if (k == 4) expected = v;
    }
    const SparseMatrix inner = leading_block(c, N - 1);
    const bool ok = inner == SparseMatrix::scalar(N - 1, expected);
    r.add("[" + names[i] + "," + names[j] + "] on interior", expected.to_string() + " I",
          ok ? expected.to_string() + " I" : "differs", ok);
  }
  const bool eq = sp.extracted && *sp.extracted == want;
  r.add("extracted constants = a_sh", "equal", eq ? "equal" : "different", eq);
  r.check("alpha = beta warning", "no", detail::tick(sp.alpha_equals_beta));
  return r;
}

/// 11. Similarity transport: exact CAR case and truncated defect conjugation.
inline Report criterion_similarity(const VerifyOptions& opt) {
  Report r;
  r.command = "similarity transport";
  ScopedTimer timer(r);
  std::mt19937_64 rng(opt.seed ^ 0xbu);
  const auto [C, Cdag] = car_pair();
  bool exact = true;
  bool conj = true;
  for (int trial = 0; trial < 25; ++trial) {
    const SparseMatrix T = detail::random_invertible(rng, 2);
    const SimilarityResult s = similarity_transport({C}, {Cdag}, T, GaussRat(-1));
    exact = exact && s.relations_exact;
    conj = conj && s.defect_conjugates;
  }
  detail::add_flag(r, "CAR q=-1: V V+ + V+ V = I for 25 random T", exact);
  detail::add_flag(r, "CAR q=-1: D_V = T D_U T^-1 for 25 random T", conj);
  for (const auto& q0 : {GaussRat(0), GaussRat::fraction(1, 3), GaussRat(1)}) {
    const std::size_t N = 8;
    const MonomialPair p = monomial_rep(q0, N);
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      const SparseMatrix T = detail::random_invertible(rng, N);
      ok = ok && similarity_transport({p.A}, {p.B}, T, q0).defect_conjugates;
    }
    detail::add_flag(r, "truncated q=" + q0.to_string() + " N=8: D_V = T D_U T^-1", ok);
  }
  return r;
}

/// 12. Cuntz-Toeplitz relations below the top degree.
inline Report criterion_cuntz() {
  detail::Stopwatch w;
  Report r;
  r.command = "cuntz-toeplitz";
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t L = 1; L <= 4; ++L) {
      const CuntzToeplitz ct = cuntz_toeplitz(d, L);
      bool ok = true;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) ok = ok && cuntz_relations_hold(ct, i, j);
      }
      detail::add_flag(r, "d=" + std::to_string(d) + " L=" + std::to_string(L) + " (dim " +
                              std::to_string(ct.dim()) + ")",
                       ok);
    }
  }
  // One mode is the q = 0 truncated pair.
  const CuntzToeplitz one = cuntz_toeplitz(1, 7);
  const MonomialPair p = monomial_rep(GaussRat(0), 8);
  detail::add_flag(r, "d=1 matches q=0 ladder", one.creators[0] == p.B && one.annihilator(0) == p.A);
  detail::add_budget(r, w, 5000);
  return r;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Report(const VerifyOptions&)> run;
};

inline std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "catalog integrity", [](const VerifyOptions&) { return criterion_catalog(); }},
      {2, "dim-5 signatures", criterion_dim5_signatures},
      {3, "sl2 cohomology", [](const VerifyOptions&) { return criterion_sl2(); }},
      {4, "d^2 = 0", [](const VerifyOptions&) { return criterion_d_squared(); }},
      {5, "central extension round trip", criterion_round_trip},
      {6, "deformation engine", criterion_deformation},
      {7, "q-identity suite", [](const VerifyOptions&) { return criterion_qidentities(); }},
      {8, "fock interior exactness", [](const VerifyOptions&) { return criterion_fock(); }},
      {9, "biorthogonality", criterion_biorthogonal},
      {10, "shifted pair", [](const VerifyOptions&) { return criterion_shifted_pair(); }},
      {11, "similarity transport", criterion_similarity},
      {12, "cuntz-toeplitz", [](const VerifyOptions&) { return criterion_cuntz(); }},
  };
}

}  // namespace lieq
