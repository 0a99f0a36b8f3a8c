// Copyright 2026 The chandist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chandist/io.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace chandist::io {

namespace {

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string& path, const std::string& k) {
  return path.empty() ? k : path + "." + k;
}

const Json& member(const Json& j, const std::string& path, const std::string& k) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(k);
  if (it == j.end()) throw SchemaError(key(path, k), "missing field");
  return *it;
}

int positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1 << 20) {
    throw SchemaError(path, "expected a positive integer");
  }
  return j.get<int>();
}

double finite_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw SchemaError(path, "number is not finite");
  return x;
}

void require_finite(const Json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    throw Error("refusing to serialize a non-finite number");
  }
  if (j.is_structured()) {
    for (const auto& child : j) require_finite(child);
  }
}

}  // namespace

SchemaError::SchemaError(const std::string& path, const std::string& what)
    : Error(path + ": " + what), path_(path) {}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {finite_number(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw SchemaError(path, "expected a [re, im] pair");
  }
  return {finite_number(j[0], at(path, 0)), finite_number(j[1], at(path, 1))};
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path, int rows,
                               int cols) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError(path, "expected a non-empty array of rows");
  }
  if (rows >= 0 && static_cast<int>(j.size()) != rows) {
    throw SchemaError(path, "expected " + std::to_string(rows) + " rows, got " +
                                std::to_string(j.size()));
  }
  const std::size_t width = j[0].is_array() ? j[0].size() : 0;
  if (width == 0) throw SchemaError(at(path, 0), "expected a non-empty row");
  if (cols >= 0 && static_cast<int>(width) != cols) {
    throw SchemaError(at(path, 0), "expected " + std::to_string(cols) +
                                       " entries, got " + std::to_string(width));
  }
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != width) {
      throw SchemaError(at(path, i), "expected a row of " + std::to_string(width) + " entries");
    }
    for (std::size_t c = 0; c < width; ++c) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          complex_from_json(row[c], at(at(path, i), c));
    }
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], at(path, i));
  }
  return v;
}

Representation parse_representation(const std::string& name) {
  if (name == "kraus") return Representation::kraus;
  if (name == "choi") return Representation::choi;
  if (name == "stinespring") return Representation::stinespring;
  throw DomainError("unknown representation '" + name +
                    "' (expected kraus, choi or stinespring)");
}

std::string representation_name(Representation r) {
  switch (r) {
    case Representation::kraus:
      return "kraus";
    case Representation::choi:
      return "choi";
    case Representation::stinespring:
      return "stinespring";
  }
  return "kraus";
}

Json channel_to_json(const SuperOp& phi, Representation repr) {
  Json out;
  out["repr"] = representation_name(repr);
  out["dim_in"] = phi.dim_in();
  out["dim_out"] = phi.dim_out();
  switch (repr) {
    case Representation::kraus: {
      const KrausRep& k = phi.kraus();
      Json data = Json::array();
      for (const auto& p : k.pairs()) {
        if (k.cp_symmetric()) {
          data.push_back(matrix_to_json(p.left));
        } else {
          data.push_back({{"A", matrix_to_json(p.left)}, {"B", matrix_to_json(p.right)}});
        }
      }
      out["data"] = std::move(data);
      break;
    }
    case Representation::choi:
      out["data"] = matrix_to_json(phi.choi().matrix());
      break;
    case Representation::stinespring: {
      const StinespringRep& s = phi.stinespring();
      out["dim_env"] = s.dim_env();
      if (s.dim_env() == 0) {
        out["data"] = {{"A", Json::array()}, {"B", Json::array()}};
      } else {
        out["data"] = {{"A", matrix_to_json(s.left())}, {"B", matrix_to_json(s.right())}};
      }
      break;
    }
  }
  return out;
}

SuperOp channel_from_json(const Json& j, const std::string& path) {
  const Json& repr_j = member(j, path, "repr");
  if (!repr_j.is_string()) throw SchemaError(key(path, "repr"), "expected a string");
  Representation repr;
  try {
    repr = parse_representation(repr_j.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(key(path, "repr"), e.what());
  }
  const int n = positive_int(member(j, path, "dim_in"), key(path, "dim_in"));
  const int m = positive_int(member(j, path, "dim_out"), key(path, "dim_out"));
  const Json& data = member(j, path, "data");
  const std::string dpath = key(path, "data");

  switch (repr) {
    case Representation::kraus: {
      if (!data.is_array()) throw SchemaError(dpath, "expected an array of Kraus operators");
      std::vector<KrausPair> pairs;
      for (std::size_t i = 0; i < data.size(); ++i) {
        const std::string p = at(dpath, i);
        if (data[i].is_object()) {
          ComplexMatrix a = matrix_from_json(member(data[i], p, "A"), key(p, "A"), m, n);
          ComplexMatrix b = data[i].contains("B")
                                ? matrix_from_json(data[i]["B"], key(p, "B"), m, n)
                                : a;
          pairs.push_back({std::move(a), std::move(b)});
        } else {
          ComplexMatrix k = matrix_from_json(data[i], p, m, n);
          pairs.push_back({k, k});
        }
      }
      return SuperOp(KrausRep(n, m, std::move(pairs)));
    }
    case Representation::choi:
      return SuperOp(ChoiRep(n, m, matrix_from_json(data, dpath, n * m, n * m)));
    case Representation::stinespring: {
      const int env = positive_int(member(j, path, "dim_env"), key(path, "dim_env"));
      ComplexMatrix a = matrix_from_json(member(data, dpath, "A"), key(dpath, "A"), m * env, n);
      ComplexMatrix b = data.contains("B")
                            ? matrix_from_json(data["B"], key(dpath, "B"), m * env, n)
                            : a;
      return SuperOp(StinespringRep(n, m, env, std::move(a), std::move(b)));
    }
  }
  throw SchemaError(key(path, "repr"), "unsupported representation");
}

DensityMatrix density_from_json(const Json& j, const std::string& path) {
  const ComplexMatrix m = matrix_from_json(j, path.empty() ? "<root>" : path);
  if (m.rows() != m.cols()) throw SchemaError(path, "density matrix must be square");
  try {
    return DensityMatrix(m);
  } catch (const Error& e) {
    throw SchemaError(path.empty() ? "<root>" : path, e.what());
  }
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"rank_before", s.rank_before}, {"step", s.step}, {"residual", s.residual}});
  }
  return steps;
}

Json to_json(const VerificationReport& r) {
  return {{"passed", r.passed},
          {"value_residual", r.value_residual},
          {"success_residual", r.success_residual},
          {"measurement_residual", r.measurement_residual},
          {"bound_residual", r.bound_residual},
          {"failures", r.failures}};
}

Json to_json(const DiscriminationResult& r, bool verbose) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["choi_rank"] = r.choi_rank_k;
  out["ancilla_dim"] = r.ancilla_dim;
  out["achieved_value"] = r.achieved_value;
  out["dnorm"] = r.dnorm_value;
  out["dnorm_upper_bound"] = r.dnorm_upper_bound;
  out["success_probability"] = r.measurement.success_probability;
  out["input_vector"] = vector_to_json(r.input_vector.vector());
  out["measurement"] = {{"projector", matrix_to_json(r.measurement.projector.matrix())},
                        {"success_probability", r.measurement.success_probability}};
  const auto& d = r.diagnostics;
  Json diag = {{"fidelity_route_value", d.fidelity_route_value},
               {"trace_norm_route_value", d.trace_norm_route_value},
               {"discrepancy", d.discrepancy},
               {"solver_converged", d.solver_converged},
               {"rank_a", d.rank_a},
               {"rank_b", d.rank_b}};
  if (verbose) {
    diag["solver_iterations"] = d.solver_iterations;
    diag["rank_a_before"] = d.rank_a_before;
    diag["rank_b_before"] = d.rank_b_before;
    diag["reduction_a"] = to_json(d.reduction_a);
    diag["reduction_b"] = to_json(d.reduction_b);
  }
  out["diagnostics"] = std::move(diag);
  return out;
}

Json to_json(const examples::ExampleReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"dnorm_ref", r.dnorm_ref},
          {"ancilla_value", r.ancilla_value_computed},
          {"upper_bound", r.upper_bound},
          {"success_probability", r.success_probability}};
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(source, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) {
  require_finite(j);
  return j.dump();
}

}  // namespace chandist::io
