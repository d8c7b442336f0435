#pragma once

/**
 * @file io.hpp
 * @brief JSON interchange for algebras and builder parameters.
 *
 * Algebra file:
 *   { "field": "Q" | "F<p>", "dim": n, "kind": "evolution", "matrix": [[...], ...] }
 *   { "field": ..., "dim": n, "kind": "tensor", "tensor": [{"i":1,"j":2,"k":3,"c":"1/2"}, ...] }
 * Indices in files are 1-based; tensor records need i <= j. Scalars are
 * written as strings ("a/b" or "a" over Q, the residue over F_p) and read
 * from strings or integers.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "evokit/constructions.hpp"

namespace evokit {

using nlohmann::json;

template <ExactField F>
struct Algebra {
  StructureTensor<F> tensor;
  std::optional<EvolutionMatrix<F>> evolution;  // set when the basis is natural

  explicit Algebra(const EvolutionMatrix<F>& a) : tensor(evolution_to_tensor(a)), evolution(a) {}
  explicit Algebra(StructureTensor<F> t) : tensor(std::move(t)), evolution(tensor_to_evolution(tensor)) {}

  const F& field() const { return tensor.field(); }
  std::size_t dim() const { return tensor.dim(); }
};

using AnyAlgebra = std::variant<Algebra<Rationals>, Algebra<PrimeField>>;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t size_field(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

template <ExactField F>
Scalar_t<F> scalar_from_json(const F& f, const json& v) {
  if (v.is_string()) return f.parse(v.get<std::string>());
  if (v.is_number_integer()) return f.from_int(v.get<long long>());
  parse_fail("scalar must be a string or an integer, got " + v.dump());
}

template <ExactField F>
std::vector<Scalar_t<F>> vector_from_json(const F& f, const json& v) {
  if (!v.is_array()) parse_fail("expected an array of scalars, got " + v.dump());
  std::vector<Scalar_t<F>> out;
  for (const auto& x : v) out.push_back(scalar_from_json(f, x));
  return out;
}

template <ExactField F>
std::vector<std::vector<Scalar_t<F>>> matrix_from_json(const F& f, const json& v) {
  if (!v.is_array()) parse_fail("expected an array of rows, got " + v.dump());
  std::vector<std::vector<Scalar_t<F>>> out;
  for (const auto& row : v) out.push_back(vector_from_json(f, row));
  return out;
}

template <class T>
json vector_to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <ExactField F>
std::vector<TableEntry<F>> entries_from_json(const F& f, const json& v) {
  if (!v.is_array()) parse_fail("alpha must be an array of {i, j, c} records");
  std::vector<TableEntry<F>> out;
  for (const auto& e : v) {
    auto i = size_field(e, "i"), j = size_field(e, "j");
    if (i == 0 || j == 0) parse_fail("table indices are 1-based");
    out.push_back({i - 1, j - 1, scalar_from_json(f, require(e, "c"))});
  }
  return out;
}

template <ExactField F>
json entries_to_json(const std::vector<TableEntry<F>>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"c", e.value.str()}});
  return out;
}

}  // namespace detail

template <ExactField F>
json to_json(const Algebra<F>& a) {
  json out;
  out["field"] = a.field().spec().str();
  out["dim"] = a.dim();
  const std::size_t n = a.dim();
  if (a.evolution) {
    out["kind"] = "evolution";
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back((*a.evolution)(i, j).str());
      rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
  } else {
    out["kind"] = "tensor";
    json records = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        auto prod = a.tensor.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (!prod[k].is_zero()) records.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", prod[k].str()}});
        }
      }
    }
    out["tensor"] = std::move(records);
  }
  return out;
}

inline json to_json(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return to_json(alg); }, a);
}

template <ExactField F>
Algebra<F> algebra_from_json(const F& f, const json& j) {
  const std::size_t n = detail::size_field(j, "dim");
  if (n == 0) detail::parse_fail("dim must be at least 1");
  const auto& kind = detail::require(j, "kind");
  if (kind == "evolution") {
    auto rows = detail::matrix_from_json(f, detail::require(j, "matrix"));
    if (rows.size() != n) detail::parse_fail("matrix must have dim rows");
    EvolutionMatrix<F> a(f, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) detail::parse_fail("matrix row " + std::to_string(r + 1) + " must have dim entries");
      for (std::size_t c = 0; c < n; ++c) a(r, c) = rows[r][c];
    }
    return Algebra<F>(a);
  }
  if (kind == "tensor") {
    const auto& records = detail::require(j, "tensor");
    if (!records.is_array()) detail::parse_fail("tensor must be an array of records");
    StructureTensor<F> t(f, n);
    for (const auto& rec : records) {
      auto i = detail::size_field(rec, "i"), jj = detail::size_field(rec, "j"), k = detail::size_field(rec, "k");
      if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n) detail::parse_fail("tensor index out of range 1..dim");
      if (i > jj) detail::parse_fail("tensor records need i <= j");
      t.set(i - 1, jj - 1, k - 1, detail::scalar_from_json(f, detail::require(rec, "c")));
    }
    return Algebra<F>(std::move(t));
  }
  detail::parse_fail("kind must be \"evolution\" or \"tensor\"");
}

inline AnyAlgebra parse_algebra(const json& j) {
  const auto& field = detail::require(j, "field");
  if (!field.is_string()) detail::parse_fail("field must be a string");
  auto spec = FieldSpec::parse(field.get<std::string>());
  return std::visit([&](const auto& f) -> AnyAlgebra { return algebra_from_json(f, j); }, make_field(spec));
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyAlgebra read_algebra_file(const std::string& path) { return parse_algebra(parse_json_text(read_file(path))); }

inline FieldSpec field_of(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return alg.field().spec(); }, a);
}

// Builder parameters. Keys mirror the parameter structs.

template <ExactField F>
TypeOnesParams<F> type_ones_params_from_json(const F& f, const json& j) {
  TypeOnesParams<F> p;
  p.n = detail::size_field(j, "n");
  p.k = detail::size_field(j, "k");
  p.gram = detail::vector_from_json(f, detail::require(j, "gram"));
  if (j.contains("eigen")) p.eigen = detail::matrix_from_json(f, j.at("eigen"));
  return p;
}

template <ExactField F>
json to_json(const TypeOnesParams<F>& p) {
  json eigen = json::array();
  for (const auto& row : p.eigen) eigen.push_back(detail::vector_to_json(row));
  return {{"n", p.n}, {"k", p.k}, {"gram", detail::vector_to_json(p.gram)}, {"eigen", eigen}};
}

template <ExactField F>
ElrParams<F> elr_params_from_json(const F& f, const json& j) {
  ElrParams<F> p;
  p.l = detail::size_field(j, "l");
  p.n = detail::size_field(j, "n");
  p.r = detail::size_field(j, "r");
  p.gram = detail::vector_from_json(f, detail::require(j, "gram"));
  p.u_coords = detail::vector_from_json(f, detail::require(j, "u_coords"));
  return p;
}

template <ExactField F>
json to_json(const ElrParams<F>& p) {
  return {{"l", p.l}, {"n", p.n}, {"r", p.r}, {"gram", detail::vector_to_json(p.gram)},
          {"u_coords", detail::vector_to_json(p.u_coords)}};
}

template <ExactField F>
ChainParams<F> chain_params_from_json(const F& f, const json& j) {
  ChainParams<F> p;
  const auto& dims = detail::require(j, "dims");
  if (!dims.is_array()) detail::parse_fail("dims must be an array");
  for (const auto& d : dims) {
    if (!d.is_number_integer() || d.get<long long>() < 0) detail::parse_fail("dims entries must be non-negative integers");
    p.dims.push_back(d.get<std::size_t>());
  }
  if (j.contains("k") && detail::size_field(j, "k") != p.dims.size()) detail::parse_fail("k must equal the length of dims");
  const auto& squares = detail::require(j, "squares");
  if (!squares.is_array()) detail::parse_fail("squares must be an array of levels");
  for (const auto& level : squares) p.squares.push_back(detail::matrix_from_json(f, level));
  return p;
}

template <ExactField F>
json to_json(const ChainParams<F>& p) {
  json squares = json::array();
  for (const auto& level : p.squares) {
    json rows = json::array();
    for (const auto& sq : level) rows.push_back(detail::vector_to_json(sq));
    squares.push_back(rows);
  }
  return {{"k", p.dims.size()}, {"dims", p.dims}, {"squares", squares}};
}

template <ExactField F>
Ma1Params<F> ma1_params_from_json(const F& f, const json& j) {
  return {detail::size_field(j, "l"), detail::size_field(j, "n"), detail::size_field(j, "r"),
          j.contains("alpha") ? detail::entries_from_json(f, j.at("alpha")) : std::vector<TableEntry<F>>{}};
}

template <ExactField F>
Ma2Params<F> ma2_params_from_json(const F& f, const json& j) {
  const auto l = detail::size_field(j, "l"), n = detail::size_field(j, "n"), r = detail::size_field(j, "r");
  auto c = detail::scalar_from_json(f, detail::require(j, "c"));
  if (!j.contains("alpha")) return ma2_minimal(f, l, n, r, c);
  return {l, n, r, c, detail::entries_from_json(f, j.at("alpha"))};
}

template <ExactField F>
json to_json(const Ma2Params<F>& p) {
  return {{"l", p.l}, {"n", p.n}, {"r", p.r}, {"c", p.c.str()}, {"alpha", detail::entries_to_json(p.alpha)}};
}

template <ExactField F>
Ma12Params<F> ma12_params_from_json(const F& f, const json& j) {
  Ma12Params<F> p;
  p.l = detail::size_field(j, "l");
  p.n = detail::size_field(j, "n");
  p.r = detail::size_field(j, "r");
  p.alpha = detail::matrix_from_json(f, detail::require(j, "alpha"));
  return p;
}

/// Families accepted by `evokit build`.
inline const std::vector<std::string>& builder_families() {
  static const std::vector<std::string> names{"type_ones", "bnk", "elr", "ma1", "ma2", "ma12", "eub", "chain"};
  return names;
}

template <ExactField F>
EvolutionMatrix<F> build_from_json(const F& f, const std::string& family, const json& params) {
  try {
    if (family == "type_ones") return build_type_ones(f, type_ones_params_from_json(f, params));
    if (family == "bnk") return build_bnk(f, detail::size_field(params, "n"), detail::size_field(params, "k"));
    if (family == "elr") return build_elr(f, elr_params_from_json(f, params));
    if (family == "ma1") return build_ma1(f, ma1_params_from_json(f, params));
    if (family == "ma2") return build_ma2(f, ma2_params_from_json(f, params));
    if (family == "ma12") return build_ma12(f, ma12_params_from_json(f, params));
    if (family == "eub") {
      return build_eub(f, detail::size_field(params, "n"), detail::vector_from_json(f, detail::require(params, "gram")));
    }
    if (family == "chain") return build_chain(f, chain_params_from_json(f, params));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
}

}  // namespace evokit
