#pragma once

// Built-in algebras: abelian(n), Heisenberg h(m), the nilpotent algebras of
// dimension 3-5 in their standard presentations, sl2 and the shifted
// harmonic oscillator algebra a_sh.

#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/liealg.hpp"
#include "lieq/report.hpp"
#include "lieq/signature.hpp"

namespace lieq {

/// Values readable directly from a presentation; unset fields are not checked.
struct ExpectedSignature {
  std::optional<std::vector<std::size_t>> lcs;
  std::optional<std::size_t> center;
  bool nilpotent = true;
  std::optional<std::size_t> h2;
};

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  ExpectedSignature expected;
  std::string notes;
};

namespace catalog {

inline LieAlgebra relabel(const LieAlgebra& g, std::vector<std::string> labels = {}) {
  return LieAlgebra(g.dim(), std::move(labels), g.brackets(), true);
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra::abelian(n); }

/// h(m): [v_{2i-1}, v_{2i}] = v for i = 1..m.
inline LieAlgebra heisenberg(std::size_t m) {
  const std::size_t n = 2 * m + 1;
  std::vector<Relation> rels;
  for (std::size_t i = 1; i <= m; ++i) rels.push_back({2 * i - 1, 2 * i, {{n, GaussRat(1)}}});
  std::vector<std::string> labels = LieAlgebra::default_labels(2 * m);
  labels.push_back("v");
  return from_relations(n, rels, labels);
}

inline LieAlgebra n_4_3() {
  return from_relations(4, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}});
}

/// Basis (e, f, h) with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline LieAlgebra sl2() {
  return from_relations(3, {{1, 2, {{3, 1}}}, {3, 1, {{1, 2}}}, {3, 2, {{2, -2}}}},
                        {"e", "f", "h"});
}

/// v1 = A, v2 = B, v3 = B^dag, v4 = A^dag, v = I:
/// [v1,v2] = [v3,v4] = [v1,v4] = [v3,v2] = v, all other brackets zero.
inline LieAlgebra a_sh() {
  return from_relations(5,
                        {{1, 2, {{5, 1}}}, {3, 4, {{5, 1}}}, {1, 4, {{5, 1}}}, {3, 2, {{5, 1}}}},
                        {"v1", "v2", "v3", "v4", "v"});
}

inline CatalogEntry make(std::string name, LieAlgebra g, ExpectedSignature e, std::string notes) {
  return {std::move(name), std::move(g), std::move(e), std::move(notes)};
}

inline std::vector<std::size_t> dims(std::initializer_list<std::size_t> d) { return d; }

inline std::optional<CatalogEntry> parametric(const std::string& name) {
  static const std::regex family(R"((abelian|h)(?:_(\d+)|\((\d+)\)))");
  std::smatch m;
  if (!std::regex_match(name, m, family)) return std::nullopt;
  const std::size_t k = std::stoul(m[2].matched ? m[2].str() : m[3].str());
  if (m[1] == "abelian") {
    if (k == 0) throw UnknownName("abelian(0) is the zero algebra; use dimension >= 1");
    return make("abelian_" + std::to_string(k), abelian(k), {dims({k, 0}), k, true, {}},
                "zero bracket");
  }
  if (k == 0) throw UnknownName("h(0) is not defined; use m >= 1");
  return make("h_" + std::to_string(k), heisenberg(k), {dims({2 * k + 1, 1, 0}), 1, true, {}},
              "[v_{2i-1}, v_{2i}] = v");
}

inline CatalogEntry get(const std::string& name) {
  if (auto p = parametric(name)) return *p;
  const LieAlgebra i1 = abelian(1);
  if (name == "n_3_1") return make(name, abelian(3), {dims({3, 0}), 3, true, {}}, "abelian");
  if (name == "n_3_2") {
    return make(name, relabel(heisenberg(1)), {dims({3, 1, 0}), 1, true, {}}, "= h(1)");
  }
  if (name == "n_4_1") {
    return make(name, relabel(direct_sum(abelian(3), i1)), {dims({4, 0}), 4, true, {}},
                "n_3_1 + i");
  }
  if (name == "n_4_2") {
    return make(name, relabel(direct_sum(get("n_3_2").algebra, i1)),
                {dims({4, 1, 0}), 2, true, {}}, "n_3_2 + i");
  }
  if (name == "n_4_3") {
    return make(name, n_4_3(), {dims({4, 2, 1, 0}), 1, true, {}}, "[v1,v2]=v3, [v1,v3]=v4");
  }
  if (name == "n_5_1") {
    return make(name, relabel(direct_sum(get("n_4_1").algebra, i1)), {dims({5, 0}), 5, true, {}},
                "n_4_1 + i");
  }
  if (name == "n_5_2") {
    return make(name, relabel(direct_sum(get("n_4_2").algebra, i1)),
                {dims({5, 1, 0}), 3, true, {}}, "n_4_2 + i = h(1) + i + i");
  }
  if (name == "n_5_3") {
    return make(name, relabel(direct_sum(n_4_3(), i1)), {dims({5, 2, 1, 0}), 2, true, {}},
                "n_4_3 + i");
  }
  if (name == "n_5_4") {
    return make(name, from_relations(5, {{1, 2, {{5, 1}}}, {3, 4, {{5, 1}}}}),
                {dims({5, 1, 0}), 1, true, {}}, "[v1,v2]=[v3,v4]=v5, = h(2)");
  }
  if (name == "n_5_5") {
    return make(name, from_relations(5, {{1, 2, {{3, 1}}}, {1, 3, {{5, 1}}}, {2, 4, {{5, 1}}}}),
                {dims({5, 2, 1, 0}), 1, true, {}}, "[v1,v2]=v3, [v1,v3]=[v2,v4]=v5");
  }
  if (name == "n_5_6") {
    return make(name,
                from_relations(5, {{1, 2, {{3, 1}}},
                                   {1, 3, {{4, 1}}},
                                   {1, 4, {{5, 1}}},
                                   {2, 3, {{5, 1}}}}),
                {dims({5, 3, 2, 1, 0}), 1, true, {}},
                "[v1,v2]=v3, [v1,v3]=v4, [v1,v4]=[v2,v3]=v5");
  }
  if (name == "n_5_7") {
    return make(name,
                from_relations(5, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {1, 4, {{5, 1}}}}),
                {dims({5, 3, 2, 1, 0}), 1, true, {}}, "[v1,v2]=v3, [v1,v3]=v4, [v1,v4]=v5");
  }
  if (name == "n_5_8") {
    return make(name, from_relations(5, {{1, 2, {{4, 1}}}, {1, 3, {{5, 1}}}}),
                {dims({5, 2, 0}), 2, true, {}}, "[v1,v2]=v4, [v1,v3]=v5");
  }
  if (name == "n_5_9") {
    return make(name,
                from_relations(5, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {2, 3, {{5, 1}}}}),
                {dims({5, 3, 2, 0}), 2, true, {}}, "[v1,v2]=v3, [v1,v3]=v4, [v2,v3]=v5");
  }
  if (name == "sl2") {
    return make(name, sl2(), {dims({3}), 0, false, 0}, "[e,f]=h, [h,e]=2e, [h,f]=-2f");
  }
  if (name == "a_sh") {
    return make(name, a_sh(), {dims({5, 1, 0}), 3, true, {}},
                "[v1,v2]=[v3,v4]=[v1,v4]=[v3,v2]=v; isomorphic to n_5_2");
  }
  throw UnknownName("no catalog entry named '" + name + "'");
}

inline std::vector<std::string> list() {
  std::vector<std::string> out;
  for (int n = 1; n <= 7; ++n) out.push_back("abelian_" + std::to_string(n));
  for (int m = 1; m <= 4; ++m) out.push_back("h_" + std::to_string(m));
  for (const char* s : {"n_3_1", "n_3_2", "n_4_1", "n_4_2", "n_4_3", "n_5_1", "n_5_2", "n_5_3",
                        "n_5_4", "n_5_5", "n_5_6", "n_5_7", "n_5_8", "n_5_9", "sl2", "a_sh"}) {
    out.emplace_back(s);
  }
  return out;
}

inline std::vector<std::string> dim5_nilpotent() {
  return {"n_5_1", "n_5_2", "n_5_3", "n_5_4", "n_5_5", "n_5_6", "n_5_7", "n_5_8", "n_5_9"};
}

inline std::string dims_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

/// Jacobi and expected-field checks for one entry.
inline Report verify_entry(const CatalogEntry& e, const InvariantSignature& sig) {
  Report r;
  r.command = "catalog verify " + e.name;
  auto w = e.algebra.check_jacobi();
  r.add(e.name + ": jacobi", "ok", w ? "fails" : "ok", !w);
  if (e.expected.lcs) {
    r.check(e.name + ": lcs", dims_string(*e.expected.lcs), dims_string(sig.lcs));
  }
  if (e.expected.center) {
    r.check(e.name + ": dim Z", std::to_string(*e.expected.center), std::to_string(sig.center));
  }
  r.check(e.name + ": nilpotent", e.expected.nilpotent ? "yes" : "no",
          sig.nilpotent_class ? "yes" : "no");
  if (e.expected.h2) {
    r.check(e.name + ": dim H2", std::to_string(*e.expected.h2), std::to_string(sig.h2));
  }
  return r;
}

/// Full catalog verification: per-entry checks, the isomorphic coincidences,
/// the direct-sum identities and pairwise distinct dimension-5 signatures.
inline Report verify_all() {
  Report r;
  r.command = "catalog verify-all";
  ScopedTimer timer(r);
  std::map<std::string, InvariantSignature> sigs;
  for (const auto& name : list()) {
    CatalogEntry e = get(name);
    sigs[name] = invariant_signature(e.algebra);
    r.append(verify_entry(e, sigs[name]));
  }
  auto same = [&](const std::string& label, const InvariantSignature& a,
                  const InvariantSignature& b, bool want_equal) {
    r.add(label, want_equal ? "equal" : "different", a == b ? "equal" : "different",
          (a == b) == want_equal);
  };
  same("n_3_2 ~ h(1)", sigs["n_3_2"], sigs["h_1"], true);
  same("n_5_4 ~ h(2)", sigs["n_5_4"], sigs["h_2"], true);
  const LieAlgebra h1ii = direct_sum(direct_sum(heisenberg(1), abelian(1)), abelian(1));
  same("n_5_2 ~ h(1)+i+i", sigs["n_5_2"], invariant_signature(h1ii), true);
  same("a_sh ~ n_5_2", sigs["a_sh"], sigs["n_5_2"], true);
  same("a_sh vs h(2)", sigs["a_sh"], sigs["h_2"], false);
  auto constants = [&](const std::string& label, const LieAlgebra& a, const LieAlgebra& b) {
    r.add(label, "equal constants", a == b ? "equal constants" : "different", a == b);
  };
  constants("n_4_2 = n_3_2 + i", get("n_4_2").algebra,
            direct_sum(get("n_3_2").algebra, abelian(1)));
  constants("n_5_2 = n_4_2 + i", get("n_5_2").algebra,
            direct_sum(get("n_4_2").algebra, abelian(1)));
  constants("n_5_3 = n_4_3 + i", get("n_5_3").algebra, direct_sum(n_4_3(), abelian(1)));
  constants("n_5_1 = n_4_1 + i", get("n_5_1").algebra,
            direct_sum(get("n_4_1").algebra, abelian(1)));
  const auto five = dim5_nilpotent();
  for (std::size_t a = 0; a < five.size(); ++a) {
    for (std::size_t b = a + 1; b < five.size(); ++b) {
      same(five[a] + " vs " + five[b], sigs[five[a]], sigs[five[b]], false);
    }
  }
  return r;
}

}  // namespace catalog
}  // namespace lieq
