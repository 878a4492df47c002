// Copyright 2026 The bosonbound Authors
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

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bosonbound/experiment.hpp"
#include "bosonbound/fock.hpp"
#include "bosonbound/interferometer.hpp"
#include "bosonbound/lift.hpp"
#include "bosonbound/linalg.hpp"
#include "bosonbound/metrics.hpp"
#include "bosonbound/noise.hpp"

namespace bosonbound {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "entries": [[re, im], ...]}, row-major.
Json matrix_to_json(const ComplexMatrix& m);

/// Inverse of matrix_to_json. Throws FormatError on missing fields, wrong
/// entry count, or non-finite values.
ComplexMatrix matrix_from_json(const Json& j);

/// Parses JSON text. Throws FormatError on malformed input.
Json parse_json(std::string_view text);
Json parse_json(std::istream& in);

/// Matrix JSON plus {"m": m, "n": n, "ordering": "lex"}.
Json lifted_to_json(const LiftedOperator& op);

Json network_to_json(const InterferometerNetwork& net);

/// Throws FormatError on malformed JSON, StructureError on an invalid mesh.
InterferometerNetwork network_from_json(const Json& j);

/// {"model": "...", "epsilon": e, "seed": s}
Json noise_spec_to_json(const NoiseSpec& spec);
NoiseSpec noise_spec_from_json(const Json& j);

/// Shortest text that reads back to the same double (17 significant digits).
std::string format_double(double x);

/// `outcome,probability` then one row per basis state.
void write_distribution_csv(std::ostream& out, const OutcomeDistribution& dist);
Json distribution_to_json(const OutcomeDistribution& dist);

inline constexpr std::string_view kReportCsvHeader =
    "n,m,model,epsilon,seed,l1,tv,trace,euclid,op_lifted,op_base,bound_rhs,chain_ok,l1_paper_ok";

inline constexpr std::string_view kSweepCsvHeader =
    "n,m,model,epsilon,seed,depth,l1,tv,trace,euclid,op_lifted,op_base,bound_rhs,ratio,chain_ok,l1_paper_ok";

/// One DistanceReport CSV row (no header, no newline).
std::string report_csv_row(int m, std::string_view model, double epsilon, std::uint64_t seed,
                           const DistanceReport& report);

/// Header line and one line per row.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// {"columns": [...], "rows": [{...}, ...]} with the CSV's fields; NaN
/// values and unchecked flags become null.
Json sweep_to_json(const SweepResult& result);

}  // namespace bosonbound
