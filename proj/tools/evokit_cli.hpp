#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// with in-memory streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evokit/evokit.hpp"

namespace evokit::cli {

enum ExitCode : int { Ok = 0, Negative = 1, UsageError = 2 };

namespace detail {

inline json load_json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return parse_json_text(text);
  return parse_json_text(read_file(text));
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  f << text;
}

inline void require_field(const AnyAlgebra& a, const std::string& field) {
  if (field.empty()) return;
  const auto want = FieldSpec::parse(field);
  const auto have = field_of(a);
  if (want.str() != have.str()) {
    throw Error(ErrorCode::FieldMismatch, "file is over " + have.str() + " but --field is " + want.str());
  }
}

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json one_based(const std::vector<std::size_t>& order) {
  json out = json::array();
  for (auto v : order) out.push_back(v + 1);
  return out;
}

template <ExactField F>
json analyze_json(const Algebra<F>& a) {
  json out;
  out["field"] = a.field().spec().str();
  out["dim"] = a.dim();
  auto nil = is_nilpotent(a.tensor);
  out["nilpotent"] = nil.nilpotent;
  out["ann_dims"] = nil.ann.dims();
  out["power_dims"] = nil.powers.dims();
  if (nil.nilpotent) {
    out["type"] = type_from_chain(nil.ann).parts;
    out["nilpotency_index"] = nil.index ? json(*nil.index) : json(nullptr);
  } else {
    out["type"] = "NotNilpotent";
  }
  if (a.evolution) {
    auto order = triangular_witness(*a.evolution);
    out["triangular_witness"] = order ? one_based(*order) : json(nullptr);
  } else {
    out["triangular_witness"] = nullptr;
  }
  return out;
}

inline json fingerprint_json(const Fingerprint& fp) {
  return {{"field", fp.field.str()},
          {"dim", fp.dim},
          {"nilpotent", fp.nilpotent},
          {"power_dims", fp.power_dims},
          {"ann_dims", fp.ann_dims},
          {"type", fp.type},
          {"square_of_square_dim", fp.square_of_square_dim},
          {"square_self_ann_dim", fp.square_self_ann_dim}};
}

inline std::vector<FamilyMember<PrimeField>> family_members(const PrimeField& f, const std::string& family,
                                                            const json& grid) {
  std::vector<FamilyMember<PrimeField>> out;
  auto size = [&](const char* key) {
    if (!grid.contains(key) || !grid[key].is_number_unsigned()) {
      throw Error(ErrorCode::ParseError, std::string("params-grid needs a positive integer '") + key + "'");
    }
    return grid[key].get<std::size_t>();
  };
  if (family == "type_ones") {
    for (const auto& p : enumerate_type_ones(f, size("n"), size("k"))) {
      out.push_back({to_json(p).dump(), evolution_to_tensor(build_type_ones(f, p))});
    }
  } else if (family == "elr") {
    for (const auto& p : enumerate_elr(f, size("l"), size("n"), size("r"))) {
      out.push_back({to_json(p).dump(), evolution_to_tensor(build_elr(f, p))});
    }
  } else if (family == "eub") {
    const auto n = size("n");
    for (const auto& g : enumerate_gram(f, n)) {
      json label{{"n", n}, {"gram", json::array()}};
      for (const auto& x : g) label["gram"].push_back(x.str());
      out.push_back({label.dump(), evolution_to_tensor(build_eub(f, n, g))});
    }
  } else {
    throw Error(ErrorCode::ParseError, "family must be type_ones, elr or eub");
  }
  return out;
}

inline const Algebra<PrimeField>& finite_algebra(const AnyAlgebra& a) {
  if (const auto* p = std::get_if<Algebra<PrimeField>>(&a)) return *p;
  throw Error(ErrorCode::InfiniteFieldUnsupported, "isomorphism search needs a finite field");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolution algebra toolkit", "evokit"};
  app.require_subcommand(1);

  std::string build_field = "Q";
  std::string field, out_path, params, file, dot_path, src, dst, family, grid;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;
  bool count_all = false, no_rebase = false, full = false;

  auto* build = app.add_subcommand("build", "Build an algebra from a named construction");
  build->add_option("family", family, "Construction name")->required()->check(CLI::IsMember(builder_families()));
  build->add_option("--params", params, "Parameters as JSON text or a JSON file")->required();
  build->add_option("--field", build_field, "Q or F<p>")->capture_default_str();
  build->add_option("--out", out_path, "Write the algebra here instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Nilpotency, series and type of an algebra");
  analyze->add_option("file", file)->required();
  analyze->add_option("--field", field);

  auto* graph = app.add_subcommand("graph", "Attached graph in DOT format");
  graph->add_option("file", file)->required();
  graph->add_option("--dot", dot_path, "Write DOT here instead of stdout");

  auto* fp = app.add_subcommand("fingerprint", "Basis-free invariants");
  fp->add_option("file", file)->required();
  fp->add_option("--field", field);

  auto* iso = app.add_subcommand("iso", "Exhaustive isomorphism search over a prime field");
  iso->add_option("--src", src)->required();
  iso->add_option("--dst", dst)->required();
  iso->add_option("--field", field);
  iso->add_flag("--count-all", count_all, "Enumerate every witness");
  iso->add_option("--budget", budget, "Maximum number of candidate maps");
  iso->add_option("--threads", threads, "Worker threads (0: all cores)");
  iso->add_flag("--no-rebase", no_rebase, "Fail instead of re-basing non-coordinate series");
  iso->add_flag("--full", full, "Search all of GL(n) instead of the filtration pattern");

  auto* fam = app.add_subcommand("noniso-family", "Search an algebra against a whole family");
  fam->add_option("--src", src)->required();
  fam->add_option("--family", family)->required();
  fam->add_option("--params-grid", grid, "Family shape as JSON text or a JSON file")->required();
  fam->add_option("--field", field);
  fam->add_option("--budget", budget);
  fam->add_option("--threads", threads);

  auto* verify = app.add_subcommand("verify", "Run the acceptance experiments");
  verify->alias("verify-paper");
  verify->add_option("--budget", budget);
  verify->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    if (*build) {
      const auto p = detail::load_json_arg(params);
      const auto text = std::visit(
          [&](const auto& f) { return to_json(Algebra(build_from_json(f, family, p))).dump(2) + "\n"; },
          make_field(FieldSpec::parse(build_field)));
      if (out_path.empty()) {
        out << text;
      } else {
        detail::write_text(out_path, text);
      }
      return Ok;
    }
    if (*analyze) {
      const auto a = read_algebra_file(file);
      detail::require_field(a, field);
      const auto report = std::visit([](const auto& alg) { return detail::analyze_json(alg); }, a);
      out << report.dump(2) << "\n";
      return report["nilpotent"].get<bool>() ? Ok : Negative;
    }
    if (*graph) {
      const auto a = read_algebra_file(file);
      const auto text = std::visit(
          [](const auto& alg) {
            if (!alg.evolution) throw Error(ErrorCode::BadShape, "algebra is not given in a natural basis");
            return to_dot(graph_of(*alg.evolution));
          },
          a);
      if (dot_path.empty()) {
        out << text;
      } else {
        detail::write_text(dot_path, text);
      }
      return Ok;
    }
    if (*fp) {
      const auto a = read_algebra_file(file);
      detail::require_field(a, field);
      out << detail::fingerprint_json(std::visit([](const auto& alg) { return fingerprint(alg.tensor); }, a)).dump(2)
          << "\n";
      return Ok;
    }
    if (*iso) {
      const auto sa = read_algebra_file(src);
      const auto da = read_algebra_file(dst);
      detail::require_field(sa, field);
      detail::require_field(da, field);
      if (field_of(sa).str() != field_of(da).str()) throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
      const auto& s = detail::finite_algebra(sa);
      const auto& d = detail::finite_algebra(da);
      IsoOptions opt;
      opt.search.mode = count_all ? SearchMode::CountAll : SearchMode::FirstWitness;
      opt.search.budget = budget;
      opt.search.threads = threads;
      opt.rebase = !no_rebase;
      opt.full_pattern = full;
      const auto rep = find_isomorphisms(s.tensor, d.tensor, opt);
      json report;
      report["compatible"] = rep.compatible;
      report["free_entries"] = rep.free_entries;
      report["candidates"] = rep.search.candidates;
      report["visited"] = rep.search.visited;
      report["witness_count"] = rep.search.witness_count;
      report["witnesses"] = json::array();
      for (const auto& w : rep.search.witnesses) report["witnesses"].push_back(detail::matrix_json(w));
      report["verdict"] = rep.isomorphic() ? "ISOMORPHIC" : "NOT_FOUND";
      out << report.dump(2) << "\n";
      return rep.isomorphic() ? Ok : Negative;
    }
    if (*fam) {
      const auto sa = read_algebra_file(src);
      detail::require_field(sa, field);
      const auto& s = detail::finite_algebra(sa);
      const auto members = detail::family_members(s.field(), family, detail::load_json_arg(grid));
      IsoOptions opt;
      opt.search = {SearchMode::FirstWitness, budget, threads, 1};
      const auto rep = family_noniso_report(s.tensor, members, opt);
      json report;
      report["family"] = family;
      report["members"] = json::array();
      for (const auto& e : rep.entries) {
        report["members"].push_back({{"params", json::parse(e.label)},
                                     {"fingerprint_match", e.fingerprint_match},
                                     {"searched", e.searched},
                                     {"visited", e.visited},
                                     {"isomorphic", e.witness_count > 0}});
      }
      report["witnesses"] = json::array();
      for (const auto& [label, phi] : rep.witnesses) {
        report["witnesses"].push_back({{"params", json::parse(label)}, {"map", detail::matrix_json(phi)}});
      }
      report["verdict"] = rep.verdict();
      out << report.dump(2) << "\n";
      return rep.none_isomorphic() ? Ok : Negative;
    }
    if (*verify) {
      CheckOptions opt;
      opt.budget = budget;
      opt.threads = threads;
      bool all_pass = true;
      run_all_checks(opt, [&](const CheckResult& r) {
        out << format_result(r) << std::endl;
        all_pass = all_pass && r.verdict == Verdict::Pass;
      });
      return all_pass ? Ok : Negative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::NotNilpotent ? Negative : UsageError;
  }
  return UsageError;
}

}  // namespace evokit::cli
