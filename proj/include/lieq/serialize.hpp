#pragma once

// JSON documents, all stamped with "format": "lieq-1". Scalars are strings,
// algebra and cochain indices are 1-based, matrix triplets are 0-based.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lieq/cohomology.hpp"
#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"
#include "lieq/extend.hpp"
#include "lieq/fock.hpp"
#include "lieq/liealg.hpp"
#include "lieq/linalg.hpp"
#include "lieq/qheis.hpp"
#include "lieq/report.hpp"
#include "lieq/signature.hpp"

namespace lieq {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "lieq-1";

namespace detail {

inline void check_format(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("format") && j.at("format") != kFormat) {
    throw ParseError("unsupported format " + j.at("format").dump());
  }
}

inline std::size_t one_based(const json& v, std::size_t dim, const char* what) {
  long long k = 0;
  if (v.is_number_integer()) {
    k = v.get<long long>();
  } else if (v.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = v.get<std::string>();
      k = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError(std::string("bad ") + what + " index " + v.dump());
    }
  } else {
    throw ParseError(std::string("bad ") + what + " index " + v.dump());
  }
  if (k < 1 || static_cast<std::size_t>(k) > dim) {
    throw ParseError(std::string(what) + " index " + std::to_string(k) + " outside 1.." +
                     std::to_string(dim));
  }
  return static_cast<std::size_t>(k - 1);
}

}  // namespace detail

inline json to_json(const GaussRat& x) { return x.to_string(); }

inline GaussRat scalar_from_json(const json& j) {
  if (j.is_string()) return GaussRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  throw ParseError("scalar must be a string, got " + j.dump());
}

inline json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Vec vec_from_json(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    throw ParseError("expected a vector of length " + std::to_string(expected));
  }
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

inline json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.to_string();
  return out;
}

inline LaurentPoly poly_from_json(const json& j, char var = 'q') {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be an exponent map");
  LaurentPoly p(var);
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      e = std::stoi(k);
    } catch (const std::exception&) {
      throw ParseError("bad exponent '" + k + "'");
    }
    p.add_term(e, scalar_from_json(v));
  }
  return p;
}

// ---- algebras ----------------------------------------------------------------

inline json to_json(const LieAlgebra& g) {
  json j;
  j["format"] = kFormat;
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  json br = json::array();
  for (const auto& [key, value] : g.brackets()) {
    json out = json::object();
    for (const auto& [k, c] : value) out[std::to_string(k + 1)] = c.to_string();
    br.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"out", out}});
  }
  j["brackets"] = br;
  return j;
}

/// Jacobi is verified; a failure surfaces as NotLie.
inline LieAlgebra algebra_from_json(const json& j) {
  detail::check_format(j);
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned()) {
    throw ParseError("algebra needs a non-negative integer \"dim\"");
  }
  const auto n = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::map<std::pair<std::size_t, std::size_t>, Vec> dense;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      std::size_t i = detail::one_based(b.at("i"), n, "bracket");
      std::size_t jj = detail::one_based(b.at("j"), n, "bracket");
      Vec v(n);
      for (const auto& [k, c] : b.at("out").items()) {
        v[detail::one_based(json(k), n, "output")] += scalar_from_json(c);
      }
      if (i == jj) {
        if (!lieq::is_zero(v)) throw NotLie("[e_i, e_i] must vanish");
        continue;
      }
      auto [slot, fresh] = dense.try_emplace({std::min(i, jj), std::max(i, jj)}, Vec(n));
      axpy(slot->second, GaussRat(i < jj ? 1 : -1), v);
    }
  }
  LieAlgebra::BracketTable table;
  for (const auto& [key, v] : dense) {
    SparseVec s = to_sparse(v);
    if (!s.empty()) table[key] = std::move(s);
  }
  return LieAlgebra(n, labels, table, true);
}

// ---- cochains ----------------------------------------------------------------

inline std::string tuple_key(const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (a) s += ",";
    s += std::to_string(t[a] + 1);
  }
  return s;
}

inline json to_json(const Cochain& c) {
  json j;
  j["format"] = kFormat;
  j["degree"] = c.degree();
  j["module_dim"] = c.module_dim();
  json coords = json::object();
  for (const auto& [t, v] : c.coords()) coords[tuple_key(t)] = to_json(v);
  j["coords"] = coords;
  return j;
}

inline Cochain cochain_from_json(const json& j, const LieAlgebra& g) {
  detail::check_format(j);
  const auto k = j.at("degree").get<std::size_t>();
  const auto m = j.at("module_dim").get<std::size_t>();
  Cochain c(g, k, m);
  if (!j.contains("coords")) return c;
  for (const auto& [key, v] : j.at("coords").items()) {
    std::vector<std::size_t> tuple;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      tuple.push_back(detail::one_based(json(part), g.dim(), "cochain"));
    }
    if (tuple.size() != k) throw ParseError("cochain key '" + key + "' has the wrong arity");
    Vec value = vec_from_json(v, m);
    // Accumulate so that "1,2" and "2,1" combine rather than overwrite.
    Vec prior = c.value(tuple);
    c.set(tuple, prior + value);
  }
  return c;
}

inline json to_json(const CentralCocycle& theta) { return to_json(theta.to_cochain()); }

inline CentralCocycle cocycle_from_json(const json& j, const LieAlgebra& g) {
  Cochain c = cochain_from_json(j, g);
  if (c.degree() != 2) throw ParseError("a central cocycle is a 2-cochain");
  return CentralCocycle::from_cochain(c);
}

// ---- matrices ----------------------------------------------------------------

inline json to_json(const SparseMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) entries.push_back({r, c, v.to_string()});
  }
  j["entries"] = entries;
  return j;
}

inline SparseMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  SparseMatrix m(rows, cols);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [row, col, value]");
    const auto r = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (r >= rows || c >= cols) throw ParseError("matrix entry out of range");
    m.add_to(r, c, scalar_from_json(e.at(2)));
  }
  return m;
}

inline json to_json(const FloatMatrix& m) {
  json j;
  j["rows"] = m.n;
  j["cols"] = m.n;
  json entries = json::array();
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      if (m(r, c) != 0.0) entries.push_back({r, c, m(r, c)});
    }
  }
  j["entries"] = entries;
  return j;
}

// ---- everything else ------------------------------------------------------------

inline json to_json(const NormalForm& nf) {
  json terms = json::array();
  for (const auto& [mn, c] : nf.coeffs()) {
    terms.push_back({{"B", mn.first}, {"A", mn.second}, {"coeff", to_json(c)}});
  }
  return {{"format", kFormat}, {"normal_form", nf.to_string()}, {"terms", terms}};
}

inline json to_json(const InvariantSignature& s) {
  json j;
  j["dim"] = s.dim;
  j["lcs"] = s.lcs;
  j["ucs"] = s.ucs;
  j["derived"] = s.derived;
  j["center"] = s.center;
  j["der"] = s.der;
  j["h1"] = s.h1;
  j["h2"] = s.h2;
  j["nilpotent_class"] = s.nilpotent_class ? json(*s.nilpotent_class) : json(nullptr);
  j["solvable_length"] = s.solvable_length ? json(*s.solvable_length) : json(nullptr);
  j["abelian"] = s.abelian;
  if (!s.betti_trivial.empty()) j["betti_trivial"] = s.betti_trivial;
  return j;
}

inline json to_json(const Report& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    items.push_back({{"name", it.name},
                     {"expected", it.expected},
                     {"actual", it.actual},
                     {"verdict", it.pass ? "pass" : "fail"}});
  }
  return {{"format", kFormat},
          {"command", r.command},
          {"status", to_string(r.status())},
          {"items", items},
          {"timing_ms", r.timing_ms}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace lieq
