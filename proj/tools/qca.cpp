// qca: command-line front end for the quantum cluster algebra library.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qca/qca.hpp"

using namespace qca;

namespace {

struct Options {
  std::string quiver;
  std::string module;
  std::string m_file, n_file, x_file, y_file, p_file;
  std::vector<std::string> shift;
  std::vector<int> seq;
  std::string format = "text";
  long long q = 2;
  int vertex = 0;
  int exhaustive = 0;
  int samples = 1000;
  unsigned seed = 1;
  int bound = 2;
  bool check = false;
  bool formal = false;
  bool expand = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

fp_t field_size(const Options& o) {
  if (o.q < 2 || o.q > 65521 || !is_prime(o.q)) throw InvalidInput("--q must be a prime below 65536");
  return static_cast<fp_t>(o.q);
}

FqRep load_module(const std::string& path, const LatticeData& lat, const Options& o) {
  FqRep m = module_from_file(path, lat);
  if (m.p != field_size(o)) throw ContextMismatch(path + " is over F_" + std::to_string(m.p) + ", not F_" + std::to_string(o.q));
  return m;
}

// "i:mult,..." with 1-based vertices.
std::vector<int> parse_shift(const std::vector<std::string>& items, int m) {
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("shift entries look like vertex:multiplicity");
    int v = 0, k = 0;
    try {
      v = std::stoi(item.substr(0, colon));
      k = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidInput("bad shift entry '" + item + "'");
    }
    if (v < 1 || v > m || k < 0) throw InvalidInput("shift entry '" + item + "' out of range");
    out[static_cast<std::size_t>(v - 1)] += k;
  }
  return out;
}

// matrices ---------------------------------------------------------------------

int run_matrices(const Options& o) {
  const auto f = quiver_from_json(read_json_file(o.quiver));
  const auto mats = matrices_from_quiver(f.quiver);
  if (json_out(o)) {
    json j{{"btilde", mats.btilde.to_rows()},
           {"rtilde", mats.rtilde.to_rows()},
           {"itilde", mats.itilde.to_rows()},
           {"euler", mats.euler.to_rows()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "B~    = " << mats.btilde.to_string() << "\n"
              << "R~    = " << mats.rtilde.to_string() << "\n"
              << "I~    = " << mats.itilde.to_string() << "\n"
              << "I - R = " << mats.euler.to_string() << "\n";
  }
  return 0;
}

// lambda -----------------------------------------------------------------------

int run_lambda(const Options& o) {
  const auto f = quiver_from_json(read_json_file(o.quiver));
  const auto mats = matrices_from_quiver(f.quiver);
  if (o.check) {
    if (!f.lambda) throw InvalidInput("--check needs a lambda field in the quiver file");
    const auto r = check_compatible(*f.lambda, mats.btilde);
    const bool unit = r.ok && std::all_of(r.d.begin(), r.d.end(), [](int x) { return x == 1; });
    if (json_out(o))
      std::cout << json{{"compatible", r.ok}, {"d", r.d}, {"diagnostic", r.diagnostic}}.dump(2) << "\n";
    else
      std::cout << (r.ok ? "compatible, " : "not compatible: ") << r.diagnostic << "\n";
    return unit ? 0 : 1;
  }
  const auto lambda = solve_lambda(mats.btilde, mats.itilde);
  if (!lambda) {
    std::cout << "no integer Lambda with Lambda(-B~) = I~\n";
    return 1;
  }
  const auto r = check_compatible(*lambda, mats.btilde);
  if (json_out(o))
    std::cout << json{{"lambda", lambda->to_rows()}, {"diagnostic", r.diagnostic}}.dump(2) << "\n";
  else
    std::cout << "Lambda = " << lambda->to_string() << "\n" << r.diagnostic << "\n";
  return 0;
}

// mutate -----------------------------------------------------------------------

template <class Ring>
int dump_seed(const LatticeData& lat, const Ring& ring, const Options& o) {
  const auto seed = mutate_sequence(initial_seed(lat, ring), o.seq);
  if (json_out(o)) {
    json j{{"sequence", o.seq}, {"lambda", seed.lambda.to_rows()}, {"btilde", seed.btilde.to_rows()}, {"vars", json::array()}};
    for (const auto& x : seed.vars) j["vars"].push_back(torus_to_json(x));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "sequence " << vec_to_string(o.seq) << "\n"
            << "Lambda = " << seed.lambda.to_string() << "\n"
            << "B~     = " << seed.btilde.to_string() << "\n";
  for (std::size_t i = 0; i < seed.vars.size(); ++i) std::cout << "x" << i + 1 << " = " << seed.vars[i] << "\n";
  return 0;
}

int run_mutate(const Options& o) {
  const auto lat = lattice_from_file(o.quiver);
  if (o.formal) return dump_seed(lat, LaurentRing{}, o);
  return dump_seed(lat, SqrtField(field_size(o)), o);
}

// ccmap ------------------------------------------------------------------------

int run_ccmap(const Options& o) {
  const auto lat = lattice_from_file(o.quiver);
  const auto rq = rep_quiver(lat.quiver);
  const FqRep m = o.module.empty() ? zero_rep(field_size(o), rq) : load_module(o.module, lat, o);
  const CCObject obj{m, parse_shift(o.shift, lat.m())};
  const auto x = cc(obj, lat);
  if (json_out(o)) {
    json j{{"object", describe(obj)}, {"value", torus_to_json(x)}, {"terms", cc_report_json(obj, lat)},
           {"lambda_vector", lambda_vector(obj, lat)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "X = " << x << "\n";
  }
  return 0;
}

// verify -----------------------------------------------------------------------

struct Tally {
  int pass = 0, fail = 0, inapplicable = 0;
  json reports = json::array();
};

void emit(Tally& t, const VerificationReport& r, const Options& o) {
  if (r.status == Status::Pass) ++t.pass;
  if (r.status == Status::Fail) ++t.fail;
  if (r.status == Status::Inapplicable) ++t.inapplicable;
  if (json_out(o)) {
    t.reports.push_back({{"identity", r.identity},
                         {"inputs", r.inputs},
                         {"status", to_string(r.status)},
                         {"note", r.note},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"diff", r.diff}});
    return;
  }
  std::cout << to_string(r.status) << " " << r.identity;
  for (const auto& in : r.inputs) std::cout << " | " << in;
  if (!r.note.empty()) std::cout << " | " << r.note;
  std::cout << "\n";
  if (r.failed()) {
    std::cout << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
    for (const auto& d : r.diff) std::cout << "  diff " << d << "\n";
  }
}

int finish(const Tally& t, const std::string& identity, const Options& o) {
  if (json_out(o)) {
    std::cout << json{{"identity", identity}, {"pass", t.pass}, {"fail", t.fail}, {"inapplicable", t.inapplicable},
                      {"reports", t.reports}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << identity << ": " << t.pass << " pass, " << t.fail << " fail, " << t.inapplicable << " inapplicable\n";
  }
  return t.fail ? 1 : 0;
}

std::vector<FqRep> catalog(const LatticeData& lat, fp_t p, int bound) {
  std::vector<FqRep> out;
  for (auto& m : enumerate_modules(p, rep_quiver(lat.quiver), principal_vertices(lat.n()), bound))
    if (!m.is_zero()) out.push_back(std::move(m));
  return out;
}

// Ordered pairs of nonzero modules with dim M + dim N <= bound.
template <class F>
void for_each_pair(const LatticeData& lat, fp_t p, int bound, F visit) {
  const auto mods = catalog(lat, p, bound);
  for (const auto& m : mods)
    for (const auto& n : mods)
      if (m.total_dim() + n.total_dim() <= bound) visit(m, n);
}

int run_verify(const std::string& which, const Options& o) {
  const auto lat = lattice_from_file(o.quiver);
  const fp_t p = field_size(o);
  Tally t;
  auto need = [&](const std::string& file, const char* flag) {
    if (file.empty()) throw InvalidInput(std::string("verify ") + which + " needs " + flag + " or --exhaustive");
    return load_module(file, lat, o);
  };
  if (which == "lemma31" || which == "cor32") {
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> coord(0, 3);
    auto draw = [&] {
      IntVec v(static_cast<std::size_t>(lat.n()));
      for (auto& x : v) x = coord(rng);
      return v;
    };
    for (int s = 0; s < o.samples; ++s) {
      const IntVec e = draw(), f = draw(), m = draw(), l = draw();
      const auto r = which == "lemma31" ? verify_lemma31(lat, e, f, m) : verify_cor32(lat, e, f, m, l);
      if (r.failed() || json_out(o)) emit(t, r, o);
      else ++t.pass;
    }
    return finish(t, which, o);
  }
  if (which == "hall" || which == "onedim" || which == "qin") {
    auto one = [&](const FqRep& m, const FqRep& n) {
      if (which == "hall") return verify_hall_multi(m, n, lat);
      if (which == "onedim") return verify_onedim(m, n, lat);
      return verify_qin(m, n, lat);
    };
    if (o.exhaustive > 0)
      for_each_pair(lat, p, o.exhaustive, [&](const FqRep& m, const FqRep& n) { emit(t, one(m, n), o); });
    else
      emit(t, one(need(o.m_file, "--M"), need(o.n_file, "--N")), o);
    return finish(t, which, o);
  }
  if (which == "green") {
    if (o.exhaustive > 0) {
      // Quadruples (M, N, E/Y, Y) with E an extension middle and Y a submodule of E.
      for_each_pair(lat, p, o.exhaustive, [&](const FqRep& m, const FqRep& n) {
        for (const auto& cls : ext_middles(m, n)) {
          const FqRep& e = cls.representative;
          std::vector<int> dims(e.dims.size(), 0);
          while (true) {
            for (const auto& sq : submodules_with_dim(e, dims)) emit(t, verify_green(m, n, sq.quotient, sq.sub), o);
            std::size_t v = 0;
            while (v < dims.size() && ++dims[v] > e.dims[v]) dims[v++] = 0;
            if (v == dims.size()) break;
          }
        }
      });
    } else {
      emit(t, verify_green(need(o.m_file, "--M"), need(o.n_file, "--N"), need(o.x_file, "--X"), need(o.y_file, "--Y")), o);
    }
    return finish(t, which, o);
  }
  if (which == "exchange") {
    const auto rq = rep_quiver(lat.quiver);
    if (o.exhaustive > 0) {
      for (const auto& m : catalog(lat, p, o.exhaustive))
        for (int v = 0; v < lat.m(); ++v) emit(t, verify_exchange(m, projective(p, rq, v), lat), o);
    } else {
      FqRep proj = zero_rep(p, rq);
      if (!o.p_file.empty()) proj = load_module(o.p_file, lat, o);
      else if (o.vertex >= 1 && o.vertex <= lat.m()) proj = projective(p, rq, o.vertex - 1);
      else throw InvalidInput("verify exchange needs --P or --vertex");
      emit(t, verify_exchange(need(o.m_file, "--M"), proj, lat), o);
    }
    return finish(t, which, o);
  }
  if (which == "reflection") {
    if (o.vertex < 1) throw InvalidInput("verify reflection needs --vertex");
    if (o.exhaustive > 0) {
      // Rigid objects only; see the README for non-rigid objects.
      auto mods = catalog(lat, p, o.exhaustive);
      mods.insert(mods.begin(), zero_rep(p, rep_quiver(lat.quiver)));
      for (const auto& m : mods)
        for (int v = -1; v < lat.n(); ++v) {
          CCObject obj = module_object(m);
          if (v >= 0) obj.shift[static_cast<std::size_t>(v)] = 1;
          if (is_rigid_object(obj)) emit(t, verify_reflection(o.vertex, obj, lat), o);
        }
    } else {
      const FqRep m = o.m_file.empty() ? zero_rep(p, rep_quiver(lat.quiver)) : load_module(o.m_file, lat, o);
      emit(t, verify_reflection(o.vertex, CCObject{m, parse_shift(o.shift, lat.m())}, lat), o);
    }
    return finish(t, which, o);
  }
  throw InvalidInput("unknown identity '" + which + "'");
}

// basis ------------------------------------------------------------------------

int run_basis(const std::string& which, const Options& o) {
  const auto lat = lattice_from_file(o.quiver);
  const fp_t p = field_size(o);
  std::vector<BasisElement> elements;
  if (which == "monomials") {
    IntVec d(static_cast<std::size_t>(lat.n()), -o.bound);
    while (true) {
      elements.push_back({"d " + vec_to_string(d), d, std::nullopt, standard_monomial(d, lat, p)});
      std::size_t i = d.size();
      while (i > 0 && ++d[i - 1] > o.bound) d[--i] = -o.bound;
      if (i == 0) break;
    }
  } else if (which == "finite") {
    elements = finite_type_basis(lat, p, o.bound);
  } else if (which == "kronecker") {
    elements = kronecker_basis(lat, p, o.bound);
  } else {
    throw InvalidInput("unknown basis '" + which + "'");
  }
  const auto grading = find_grading(lat);
  std::optional<TriangularityReport> tri;
  if (grading) tri = triangularity_check(elements, lat, *grading);
  auto leading_of = [&](const std::string& label) -> const LeadingTerm* {
    if (!tri) return nullptr;
    for (const auto& l : tri->leading)
      if (l.label == label) return &l;
    return nullptr;
  };
  if (json_out(o)) {
    json j{{"basis", which}, {"elements", json::array()}};
    for (const auto& el : elements) {
      json e{{"label", el.label}};
      if (const auto* l = leading_of(el.label)) {
        e["extremal_exponent"] = l->exponent;
        e["extremal_coefficient"] = l->coefficient.to_string();
      }
      if (o.expand) e["value"] = torus_to_json(el.value);
      j["elements"].push_back(e);
    }
    if (grading) j["grading"] = *grading;
    if (tri) j["triangular"] = tri->ok, j["problems"] = tri->problems;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& el : elements) {
      std::cout << el.label;
      if (const auto* l = leading_of(el.label)) std::cout << " | " << vec_to_string(l->exponent) << " | " << l->coefficient;
      if (o.expand) std::cout << " | " << el.value;
      std::cout << "\n";
    }
    if (!grading) {
      std::cout << "no grading found; triangularity not checked\n";
    } else {
      std::cout << "grading " << vec_to_string(*grading) << ": " << (tri->ok ? "triangular" : "NOT triangular") << "\n";
      for (const auto& pr : tri->problems) std::cout << "  " << pr << "\n";
    }
  }
  return tri && !tri->ok ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cluster algebras of acyclic ice quivers over finite fields"};
  app.require_subcommand(1);
  Options o;
  auto add_quiver = [&](CLI::App* sub) { sub->add_option("--quiver", o.quiver, "quiver JSON file")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* matrices = app.add_subcommand("matrices", "print B~, R~, I~ and the Euler matrix");
  add_quiver(matrices);
  add_format(matrices);

  auto* lambda = app.add_subcommand("lambda", "solve for Lambda, or check the file's Lambda");
  add_quiver(lambda);
  add_format(lambda);
  lambda->add_flag("--check", o.check, "validate the lambda field instead of solving");

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate the initial seed along a sequence");
  add_quiver(mutate_cmd);
  add_format(mutate_cmd);
  mutate_cmd->add_option("--seq", o.seq, "comma-separated 1-based vertices")->delimiter(',');
  mutate_cmd->add_flag("--formal", o.formal, "coefficients in Z[v, v^-1]");
  mutate_cmd->add_option("--q", o.q, "field size for specialized coefficients");

  auto* ccmap = app.add_subcommand("ccmap", "quantum Caldero-Chapoton value of M (+) P[1]");
  add_quiver(ccmap);
  add_format(ccmap);
  ccmap->add_option("--module", o.module, "module JSON file");
  ccmap->add_option("--q", o.q, "field size")->required();
  ccmap->add_option("--shift", o.shift, "shifted projectives as vertex:multiplicity")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "check an identity");
  std::string identity;
  verify->add_option("identity", identity, "lemma31, cor32, green, hall, onedim, qin, exchange or reflection")
      ->required()
      ->check(CLI::IsMember({"lemma31", "cor32", "green", "hall", "onedim", "qin", "exchange", "reflection"}));
  add_quiver(verify);
  add_format(verify);
  verify->add_option("--q", o.q, "field size");
  verify->add_option("--M", o.m_file, "module M");
  verify->add_option("--N", o.n_file, "module N");
  verify->add_option("--X", o.x_file, "module X (green)");
  verify->add_option("--Y", o.y_file, "module Y (green)");
  verify->add_option("--P", o.p_file, "projective module P (exchange)");
  verify->add_option("--vertex", o.vertex, "reflection vertex, or indecomposable projective for exchange");
  verify->add_option("--shift", o.shift, "shifted projectives as vertex:multiplicity (reflection)")->delimiter(',');
  verify->add_option("--exhaustive", o.exhaustive, "run over all modules up to this total dimension");
  verify->add_option("--samples", o.samples, "random samples (lemma31, cor32)");
  verify->add_option("--seed", o.seed, "random seed (lemma31, cor32)");

  auto* basis = app.add_subcommand("basis", "list a basis with leading terms");
  std::string basis_kind;
  basis->add_option("kind", basis_kind, "monomials, finite or kronecker")
      ->required()
      ->check(CLI::IsMember({"monomials", "finite", "kronecker"}));
  add_quiver(basis);
  add_format(basis);
  basis->add_option("--q", o.q, "field size");
  basis->add_option("--bound", o.bound, "box or dimension bound");
  basis->add_flag("--expand", o.expand, "print full expansions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*matrices) return run_matrices(o);
    if (*lambda) return run_lambda(o);
    if (*mutate_cmd) return run_mutate(o);
    if (*ccmap) return run_ccmap(o);
    if (*verify) return run_verify(identity, o);
    if (*basis) return run_basis(basis_kind, o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContextMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise QCA_BUDGET)\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
