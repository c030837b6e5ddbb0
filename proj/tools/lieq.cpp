// lieq command-line driver. Exit status: 0 pass, 1 fail, 2 usage or input error.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieq/catalog.hpp"
#include "lieq/cohomology.hpp"
#include "lieq/deform.hpp"
#include "lieq/extend.hpp"
#include "lieq/fock.hpp"
#include "lieq/qheis.hpp"
#include "lieq/serialize.hpp"
#include "lieq/signature.hpp"
#include "lieq/verify.hpp"

#ifndef LIEQ_GOLDEN_FILE
#define LIEQ_GOLDEN_FILE ""
#endif

namespace {

using namespace lieq;

struct Globals {
  bool json_out = false;
  std::uint64_t seed = VerifyOptions{}.seed;
};

/// A file path if one exists, otherwise a catalog name.
LieAlgebra resolve_algebra(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return algebra_from_json(load_json_file(spec));
  return catalog::get(spec).algebra;
}

std::string bracket_text(const LieAlgebra& g) {
  std::ostringstream os;
  const auto& L = g.labels();
  for (const auto& [key, value] : g.brackets()) {
    os << "[" << L[key.first] << "," << L[key.second] << "] = ";
    bool first = true;
    for (const auto& [k, c] : value) {
      std::string cs = c.to_string();
      if (!first) os << (cs.front() == '-' ? " - " : " + ");
      if (!first && cs.front() == '-') cs.erase(0, 1);
      if (cs != "1") os << (cs == "-1" ? "-" : (c.is_real() ? cs : "(" + cs + ")") + "*");
      os << L[k];
      first = false;
    }
    os << "\n";
  }
  if (g.brackets().empty()) os << "(abelian)\n";
  return os.str();
}

int emit(const Globals& G, const Report& r) {
  if (G.json_out) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << r.to_text();
  }
  return r.ok() ? 0 : 1;
}

int emit_json_or(const Globals& G, const json& j, const std::string& text) {
  if (G.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

std::string signature_text(const InvariantSignature& s) { return "signature " + s.to_string() + "\n"; }

GaussRat parse_q(const std::string& s) { return GaussRat::parse(s); }

double to_double(const GaussRat& q) {
  if (!q.is_real()) throw UsageError("float mode needs a real q");
  return q.re().get_d();
}

}  // namespace

int main(int argc, char** argv) {
  Globals G;
  CLI::App app{"lieq: exact Lie algebra cohomology, deformations, central extensions and q-oscillators"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", G.json_out, "Machine-readable output");
  app.add_option("--seed", G.seed, "Seed for randomized checks");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog names");
  std::string show_name;
  auto* cat_show = cat->add_subcommand("show", "Structure constants of a catalog entry");
  cat_show->add_option("name", show_name)->required();

  std::string alg_spec;
  auto* alg = app.add_subcommand("algebra", "Load an algebra and print its invariants");
  alg->add_option("--algebra", alg_spec, "JSON file or catalog name")->required();

  std::optional<std::size_t> coh_k;
  std::string coeffs = "adjoint";
  auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
  coh->add_option("--algebra", alg_spec, "JSON file or catalog name")->required();
  coh->add_option("--k", coh_k, "Degree; all degrees when omitted");
  coh->add_option("--coeffs", coeffs, "adjoint or trivial")
      ->check(CLI::IsMember({"adjoint", "trivial"}));

  auto* deform = app.add_subcommand("deform", "Bracket deformations");
  deform->require_subcommand(1);
  std::string phi_file;
  std::string phi2_file;
  auto* deform_check = deform->add_subcommand("check", "Graded Jacobi check of mu + t phi (+ t^2 phi2)");
  deform_check->add_option("--algebra", alg_spec, "JSON file or catalog name")->required();
  deform_check->add_option("--phi", phi_file, "2-cochain JSON")->required();
  deform_check->add_option("--phi2", phi2_file, "second-order 2-cochain JSON");

  auto* rig = app.add_subcommand("rigidity", "Rigidity numbers");
  rig->add_option("--algebra", alg_spec, "JSON file or catalog name")->required();

  std::string cocycle_file;
  auto* ext = app.add_subcommand("extend", "Central extension by a cocycle");
  ext->add_option("--algebra", alg_spec, "JSON file or catalog name")->required();
  ext->add_option("--cocycle", cocycle_file, "2-cocycle JSON")->required();

  auto* rec = app.add_subcommand("reconstruct", "g/Z(g), induced cocycle and round trip");
  rec->add_option("--algebra", alg_spec, "JSON file or catalog name")->required();

  auto* qh = app.add_subcommand("qheis", "q-deformed Heisenberg algebra");
  qh->require_subcommand(1);
  std::string expr;
  auto* qh_norm = qh->add_subcommand("normalize", "Normal order B^m A^n");
  qh_norm->add_option("expr", expr)->required();
  std::string suite = "all";
  unsigned max_n = 12;
  auto* qh_ver = qh->add_subcommand("verify", "Identity suite");
  qh_ver->add_option("--suite", suite)->check(CLI::IsMember({"all"}));
  qh_ver->add_option("--max-n", max_n)->check(CLI::Range(1u, 20u));

  auto* fock = app.add_subcommand("fock", "Truncated ladder operators");
  fock->require_subcommand(1);
  std::string q_text = "1";
  std::size_t n = 8;
  std::string mode = "exact";
  auto* fock_build = fock->add_subcommand("build", "Emit A and B (or C, C+ in float mode)");
  fock_build->add_option("--q", q_text);
  fock_build->add_option("--n", n)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  fock_build->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  auto* fock_ver = fock->add_subcommand("verify", "Defect, spectrum, adjoint and biorthogonality");
  fock_ver->add_option("--q", q_text);
  fock_ver->add_option("--n", n)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  std::size_t d = 2;
  std::size_t depth = 3;
  auto* fock_cuntz = fock->add_subcommand("cuntz", "Cuntz-Toeplitz creators on words");
  fock_cuntz->add_option("--d", d)->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  fock_cuntz->add_option("--depth", depth);

  std::string golden = LIEQ_GOLDEN_FILE;
  auto* all = app.add_subcommand("verify-all", "Run the acceptance checks");
  all->add_option("--golden", golden, "Frozen signature file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cat_list) {
      json j = {{"format", kFormat}, {"names", catalog::list()}};
      std::string text;
      for (const auto& name : catalog::list()) text += name + "\n";
      return emit_json_or(G, j, text);
    }
    if (*cat_show) {
      const CatalogEntry e = catalog::get(show_name);
      json j = to_json(e.algebra);
      j["name"] = e.name;
      j["notes"] = e.notes;
      return emit_json_or(G, j,
                          e.name + " (dim " + std::to_string(e.algebra.dim()) + ")  " + e.notes +
                              "\n" + bracket_text(e.algebra) +
                              signature_text(invariant_signature(e.algebra)));
    }
    if (*alg) {
      const LieAlgebra g = resolve_algebra(alg_spec);
      const InvariantSignature s = invariant_signature(g, true);
      json j = to_json(g);
      j["signature"] = to_json(s);
      return emit_json_or(G, j, bracket_text(g) + signature_text(s));
    }
    if (*coh) {
      const LieAlgebra g = resolve_algebra(alg_spec);
      const Representation rho = coeffs == "adjoint" ? adjoint_rep(g) : trivial_rep(g);
      if (coh_k) {
        if (*coh_k > g.dim()) throw UsageError("--k exceeds the dimension");
        const std::size_t h = cohomology_dim(*coh_k, rho);
        json j = {{"format", kFormat}, {"coeffs", coeffs}, {"k", *coh_k}, {"dim_H", h}};
        return emit_json_or(G, j, "dim H^" + std::to_string(*coh_k) + "(g, " + coeffs +
                                      ") = " + std::to_string(h) + "\n");
      }
      const auto betti = betti_numbers(rho);
      std::ostringstream os;
      os << "k   dim H^k (" << coeffs << ")\n";
      for (std::size_t k = 0; k < betti.size(); ++k) {
        os << std::left << std::setw(4) << k << betti[k] << "\n";
      }
      json j = {{"format", kFormat}, {"coeffs", coeffs}, {"betti", betti}};
      return emit_json_or(G, j, os.str());
    }
    if (*deform_check) {
      const LieAlgebra g = resolve_algebra(alg_spec);
      std::vector<Cochain> phis{cochain_from_json(load_json_file(phi_file), g)};
      if (!phi2_file.empty()) phis.push_back(cochain_from_json(load_json_file(phi2_file), g));
      const DeformedBracket db(g, phis);
      Report r;
      r.command = "deform check";
      {
        ScopedTimer timer(r);
        const auto wit = deformation_is_lie(db);
        std::string actual = "lie";
        if (wit) {
          actual = "fails at t^" + std::to_string(wit->degree) + " on (" +
                   std::to_string(wit->triple[0] + 1) + "," + std::to_string(wit->triple[1] + 1) +
                   "," + std::to_string(wit->triple[2] + 1) + ")";
        }
        r.add("mu_t satisfies Jacobi identically in t", "lie", actual, !wit);
        const bool cycle = is_two_cocycle_trivial_coeffs(phis.front());
        r.add("phi_1 trivial-coefficient cycle (informational)", detail::tick(cycle),
              detail::tick(cycle), true);
        const bool adj = cocycle_space(2, adjoint_rep(g))
                             .contains(phis.front().to_coordinates());
        r.add("phi_1 in Z2(g, g) (informational)", detail::tick(adj), detail::tick(adj), true);
      }
      return emit(G, r);
    }
    if (*rig) {
      const LieAlgebra g = resolve_algebra(alg_spec);
      const RigidityReport rr = rigidity_report(g);
      json j = {{"format", kFormat}, {"n", rr.n},          {"der", rr.der},
                {"tangent", rr.tangent}, {"b2", rr.b2},    {"h2", rr.h2},
                {"nr_rigid", rr.nr_rigid}, {"tangent_equals_b2", rr.tangent_equals_b2},
                {"characteristically_nilpotent", characteristically_nilpotent(g)}};
      std::ostringstream os;
      os << "dim Der          " << rr.der << "\norbit tangent    " << rr.tangent
         << "\ndim B2(ad)       " << rr.b2 << "\ndim H2(ad)       " << rr.h2
         << "\nH2(ad) = 0       " << detail::tick(rr.nr_rigid) << "\ntangent = B2     "
         << detail::tick(rr.tangent_equals_b2) << "\nchar. nilpotent  "
         << detail::tick(characteristically_nilpotent(g)) << "\n";
      return emit_json_or(G, j, os.str());
    }
    if (*ext) {
      const LieAlgebra g = resolve_algebra(alg_spec);
      const CentralCocycle theta = cocycle_from_json(load_json_file(cocycle_file), g);
      const LieAlgebra e = central_extension(g, theta);
      return emit_json_or(G, to_json(e), bracket_text(e) + signature_text(invariant_signature(e)));
    }
    if (*rec) {
      const LieAlgebra g = resolve_algebra(alg_spec);
      const InducedCocycle ic = induced_cocycle(g);
      const LieAlgebra back = central_extension(ic.quotient.algebra, ic.theta);
      Report r = short_exact_sequence_check(ic.quotient.algebra, ic.theta);
      r.command = "reconstruct";
      const bool same = invariant_signature(back) == invariant_signature(g);
      r.add("signature of g_theta = signature of g", "equal", same ? "equal" : "different", same);
      if (G.json_out) {
        json j = to_json(r);
        j["quotient"] = to_json(ic.quotient.algebra);
        j["cocycle"] = to_json(ic.theta);
        j["extension"] = to_json(back);
        std::cout << j.dump(2) << "\n";
        return r.ok() ? 0 : 1;
      }
      std::cout << "g/Z(g):\n" << bracket_text(ic.quotient.algebra) << "cocycle:\n";
      for (const auto& [key, v] : ic.theta.values()) {
        std::cout << "  theta(" << key.first + 1 << "," << key.second + 1 << ") = ";
        for (std::size_t a = 0; a < v.size(); ++a) std::cout << (a ? " " : "") << v[a];
        std::cout << "\n";
      }
      std::cout << r.to_text();
      return r.ok() ? 0 : 1;
    }
    if (*qh_norm) {
      const NormalForm nf = normal_order(parse_expression(expr));
      return emit_json_or(G, to_json(nf), nf.to_string() + "\n");
    }
    if (*qh_ver) return emit(G, qheis_identity_suite(max_n));
    if (*fock_build) {
      const GaussRat q0 = parse_q(q_text);
      json j = {{"format", kFormat}, {"q", q0.to_string()}, {"n", n}, {"mode", mode}};
      if (mode == "float") {
        const FloatRep fr = orthonormal_rep_float(to_double(q0), n);
        j["C"] = to_json(fr.C);
        j["Cdag"] = to_json(fr.Cdag);
        j["residual_off_corner"] = fr.residual_off_corner;
        j["corner"] = fr.corner;
        const bool ok = fr.residual_off_corner <= 1e-12 * static_cast<double>(n);
        std::ostringstream os;
        os << "float C (N=" << n << ", q=" << q0 << "): max residual off corner "
           << fr.residual_off_corner << ", corner " << fr.corner << "\n";
        std::cout << (G.json_out ? j.dump(2) + "\n" : os.str());
        return ok ? 0 : 1;
      }
      const MonomialPair p = monomial_rep(q0, n);
      j["A"] = to_json(p.A);
      j["B"] = to_json(p.B);
      std::ostringstream os;
      os << "A e_m = {m}_q e_(m-1), B e_m = e_(m+1), N=" << n << ", q=" << q0 << "\nA superdiagonal:";
      for (std::size_t m = 1; m < n; ++m) os << " " << p.A.at(m - 1, m);
      os << "\n";
      return emit_json_or(G, j, os.str());
    }
    if (*fock_ver) return emit(G, fock_verify_report(parse_q(q_text), n));
    if (*fock_cuntz) {
      const CuntzToeplitz ct = cuntz_toeplitz(d, depth);
      Report r;
      r.command = "fock cuntz d=" + std::to_string(d) + " L=" + std::to_string(depth);
      {
        ScopedTimer timer(r);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            detail::add_flag(r, "l" + std::to_string(i + 1) + "+ l" + std::to_string(j + 1) +
                                    " = delta I below top degree",
                             cuntz_relations_hold(ct, i, j));
          }
        }
      }
      if (G.json_out) {
        json j = to_json(r);
        j["dim"] = ct.dim();
        json ls = json::array();
        for (const auto& l : ct.creators) ls.push_back(to_json(l));
        j["creators"] = ls;
        std::cout << j.dump(2) << "\n";
        return r.ok() ? 0 : 1;
      }
      std::cout << "dim " << ct.dim() << "\n" << r.to_text();
      return r.ok() ? 0 : 1;
    }
    if (*all) {
      VerifyOptions opt;
      opt.seed = G.seed;
      json gold;
      if (!golden.empty() && std::filesystem::is_regular_file(golden)) {
        gold = load_json_file(golden);
        opt.golden = &gold;
      }
      Report total;
      total.command = "verify-all";
      json parts = json::array();
      {
        ScopedTimer timer(total);
        for (const auto& c : acceptance_criteria()) {
          const Report r = c.run(opt);
          total.add(std::to_string(c.id) + ". " + c.title,
                    std::to_string(r.items.size()) + "/" + std::to_string(r.items.size()),
                    std::to_string(r.passed()) + "/" + std::to_string(r.items.size()), r.ok());
          parts.push_back(to_json(r));
          if (!r.ok() && !G.json_out) std::cerr << r.to_text();
        }
      }
      if (G.json_out) {
        json j = to_json(total);
        j["criteria"] = parts;
        std::cout << j.dump(2) << "\n";
        return total.ok() ? 0 : 1;
      }
      return emit(G, total);
    }
  } catch (const Error& e) {
    std::cerr << "lieq: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "lieq: malformed JSON: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
