#pragma once

// JSON files for quivers, modules and torus elements.
//
// Quiver: {"m":4, "n":2, "arrows":[[1,2],[1,2],[1,3],[2,4]], "lambda":[[...],...]}
// Module: {"p":2, "dims":[1,1,0,0], "maps":[{"arrow":0, "matrix":[[1]]}, ...]}
//   Arrow indices follow the quiver file. The matrix of arrow s -> t maps the
//   space at t to the space at s, so its rows are coordinates at s. Arrows
//   without an entry get the zero map.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qca/ccmap.hpp"
#include "qca/error.hpp"
#include "qca/finrep.hpp"
#include "qca/int_matrix.hpp"
#include "qca/lattice.hpp"
#include "qca/qtorus.hpp"

namespace qca {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

struct QuiverFile {
  IceQuiver quiver;
  std::optional<IntMatrix> lambda;
};

inline QuiverFile quiver_from_json(const json& j) {
  QuiverFile out;
  out.quiver.m = detail::field<int>(j, "m");
  out.quiver.n = detail::field<int>(j, "n");
  for (const auto& pair : detail::field<std::vector<std::vector<int>>>(j, "arrows")) {
    if (pair.size() != 2) throw InvalidInput("each arrow must be a [source, target] pair");
    out.quiver.arrows.push_back({pair[0], pair[1]});
  }
  out.quiver.validate();
  if (j.contains("lambda")) {
    const auto rows = detail::field<std::vector<std::vector<int>>>(j, "lambda");
    out.lambda = IntMatrix::from_rows(rows);
    if (out.lambda->rows() != out.quiver.m || out.lambda->cols() != out.quiver.m)
      throw InvalidInput("lambda must be m x m");
  }
  return out;
}

inline json quiver_to_json(const IceQuiver& q, const std::optional<IntMatrix>& lambda = std::nullopt) {
  json j;
  j["m"] = q.m;
  j["n"] = q.n;
  j["arrows"] = json::array();
  for (const auto& a : q.arrows) j["arrows"].push_back({a.source, a.target});
  if (lambda) j["lambda"] = lambda->to_rows();
  return j;
}

inline LatticeData lattice_from_file(const std::string& path) {
  const auto f = quiver_from_json(read_json_file(path));
  return make_lattice(f.quiver, f.lambda);
}

inline FqRep module_from_json(const json& j, QuiverPtr q) {
  const auto p = detail::field<long long>(j, "p");
  if (p < 2 || p > 65521 || !is_prime(p)) throw InvalidInput("p must be a prime below 65536");
  FqRep out = rep_with_dims(static_cast<fp_t>(p), q, detail::field<std::vector<int>>(j, "dims"));
  if (j.contains("maps")) {
    for (const auto& entry : j.at("maps")) {
      const int a = detail::field<int>(entry, "arrow");
      if (a < 0 || a >= q->arrow_count()) throw InvalidInput("arrow index " + std::to_string(a) + " out of range");
      const auto rows = detail::field<std::vector<std::vector<long long>>>(entry, "matrix");
      const int cols = out.dim(q->tail(a));
      const int expected_rows = out.dim(q->head(a));
      if (static_cast<int>(rows.size()) != expected_rows)
        throw InvalidInput("arrow " + std::to_string(a) + ": expected " + std::to_string(expected_rows) + " rows");
      out.maps[static_cast<std::size_t>(a)] = FpMat::from_rows(rows, cols, out.p);
    }
  }
  out.validate();
  return out;
}

inline json module_to_json(const FqRep& m) {
  json j;
  j["p"] = m.p;
  j["dims"] = m.dims;
  j["maps"] = json::array();
  for (int a = 0; a < m.quiver->arrow_count(); ++a)
    if (!m.map(a).is_zero()) j["maps"].push_back({{"arrow", a}, {"matrix", m.map(a).to_rows()}});
  return j;
}

inline FqRep module_from_file(const std::string& path, const LatticeData& lat) {
  return module_from_json(read_json_file(path), rep_quiver(lat.quiver));
}

template <class Ring>
json torus_to_json(const TorusElement<Ring>& x) {
  json j;
  j["text"] = x.to_string();
  j["terms"] = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    j["terms"].push_back({{"exponent", it->first}, {"coefficient", to_string(it->second)}});
  return j;
}

inline json cc_report_json(const CCObject& obj, const LatticeData& lat) {
  json j = json::array();
  const SqrtField f(obj.module.p);
  for (const auto& t : cc_terms(obj, lat)) {
    const auto coeff = f.from_integer(mpz_class(static_cast<unsigned long>(t.count))) * f.v_power(t.v_power);
    j.push_back({{"e", t.e}, {"count", t.count}, {"exponent", t.exponent}, {"coefficient", coeff.to_string()}});
  }
  return j;
}

}  // namespace qca
