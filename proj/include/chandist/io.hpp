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

#pragma once

#include <string>

#include <json.hpp>

#include "chandist/channel.hpp"
#include "chandist/discriminate.hpp"
#include "chandist/examples.hpp"
#include "chandist/rankred.hpp"

// JSON interchange.
//
//   complex   [re, im]  (a bare number is read as a real value)
//   matrix    array of rows
//   channel   {"repr": "kraus" | "choi" | "stinespring",
//              "dim_in": n, "dim_out": m, "data": ...}
//     kraus        data = [K_0, K_1, ...] for X -> Σ K X K^*, or
//                  data = [{"A": A_0, "B": B_0}, ...] for X -> Σ A X B^*
//     choi         data = J (output factor first)
//     stinespring  data = {"A": A, "B": B}, plus "dim_env"; B defaults to A
//
// Parse errors carry the JSON path of the offending value, for example
// "data[0][1]: expected a [re, im] pair".

namespace chandist::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const ComplexMatrix& m);
/// rows/cols of -1 accept any shape.
ComplexMatrix matrix_from_json(const Json& j, const std::string& path,
                               int rows = -1, int cols = -1);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j, const std::string& path);

Json channel_to_json(const SuperOp& phi, Representation repr);
SuperOp channel_from_json(const Json& j, const std::string& path = "");
Representation parse_representation(const std::string& name);
std::string representation_name(Representation r);

DensityMatrix density_from_json(const Json& j, const std::string& path = "");

Json to_json(const ReductionTrace& trace);
Json to_json(const DiscriminationResult& r, bool verbose);
Json to_json(const VerificationReport& r);
Json to_json(const examples::ExampleReport& r);

/// Parses text, turning syntax errors into SchemaError with line information.
Json parse(const std::string& text, const std::string& source);

/// Compact serialization; doubles use the shortest form that reads back to
/// the same value. Rejects non-finite numbers.
std::string dump(const Json& j);

}  // namespace chandist::io
