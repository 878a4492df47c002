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

#include <gtest/gtest.h>

#include <sstream>

#include "bosonbound/random.hpp"
#include "bosonbound/serialize.hpp"

namespace bosonbound {
namespace {

TEST(MatrixJson, RoundTripIsExact) {
    const ComplexMatrix m = haar_random_unitary(4, 9).matrix();
    const Json j = matrix_to_json(m);
    EXPECT_EQ(j.at("rows"), 4);
    EXPECT_EQ(j.at("cols"), 4);
    EXPECT_EQ(j.at("entries").size(), 16u);
    EXPECT_EQ(matrix_from_json(parse_json(j.dump())), m);
}

TEST(MatrixJson, RowMajorEntries) {
    ComplexMatrix m(2, 3);
    m << 1, 2, 3, Complex(4, -1), 5, 6;
    const Json j = matrix_to_json(m);
    EXPECT_EQ(j.at("entries")[1][0], 2.0);
    EXPECT_EQ(j.at("entries")[3][1], -1.0);
}

TEST(MatrixJson, Rejections) {
    EXPECT_THROW(matrix_from_json(parse_json(R"({"rows":1,"cols":1})")), FormatError);
    EXPECT_THROW(matrix_from_json(parse_json(R"({"rows":1,"cols":2,"entries":[[1,0]]})")), FormatError);
    EXPECT_THROW(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"entries":[[1]]})")), FormatError);
    EXPECT_THROW(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"entries":[["a",0]]})")), FormatError);
    EXPECT_THROW(matrix_from_json(parse_json(R"({"rows":"x","cols":1,"entries":[[1,0]]})")), FormatError);
    EXPECT_THROW(parse_json("{not json"), FormatError);
    EXPECT_THROW(parse_json(R"({"rows":1,"cols":1,"entries":[[NaN,0]]})"), FormatError);
}

TEST(MatrixJson, RejectsNonFinite) {
    Json j = matrix_to_json(ComplexMatrix::Identity(1, 1));
    j["entries"][0][0] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(matrix_from_json(j), FormatError);
}

TEST(LiftedJson, CarriesShapeHeader) {
    const Json j = lifted_to_json(lift(haar_random_unitary(3, 1), 2));
    EXPECT_EQ(j.at("m"), 3);
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("ordering"), "lex");
    EXPECT_EQ(j.at("rows"), 6);
    EXPECT_EQ(matrix_from_json(j).rows(), 6);
}

TEST(NetworkJson, RoundTrip) {
    const auto net = decompose(haar_random_unitary(5, 2));
    const Json j = network_to_json(net);
    EXPECT_EQ(j.at("m"), 5);
    EXPECT_EQ(j.at("layers")[0][0].at("type"), "bs");
    const auto back = network_from_json(parse_json(j.dump()));
    EXPECT_EQ(compose(back).matrix(), compose(net).matrix());
}

TEST(NetworkJson, PhaseshifterAndErrors) {
    const auto net = network_from_json(
        parse_json(R"({"m":3,"layers":[[{"type":"ps","mode":1,"phase":0.5}]],"output_phases":[0,0,0]})"));
    EXPECT_EQ(std::get<Phaseshifter>(net.layers[0][0]).phase, 0.5);
    EXPECT_THROW(network_from_json(parse_json(R"({"m":3,"layers":[[{"type":"xx"}]]})")), FormatError);
    EXPECT_THROW(network_from_json(parse_json(R"({"m":3,"layers":[[{"type":"bs","modes":[0,2],"theta":0,"phi":0}]]})")),
                 StructureError);
    EXPECT_THROW(network_from_json(parse_json(
                     R"({"m":3,"layers":[[{"type":"bs","modes":[0,1],"theta":0,"phi":0},{"type":"ps","mode":1,"phase":0}]]})")),
                 StructureError);
    EXPECT_THROW(network_from_json(parse_json(R"({"m":3})")), FormatError);
}

TEST(NoiseSpecJson, RoundTrip) {
    const NoiseSpec spec{NoiseModel::gaussian, 0.25, 18446744073709551615ULL};
    const Json j = noise_spec_to_json(spec);
    EXPECT_EQ(j.at("model"), "gaussian");
    const NoiseSpec back = noise_spec_from_json(parse_json(j.dump()));
    EXPECT_EQ(back.model, spec.model);
    EXPECT_EQ(back.epsilon, spec.epsilon);
    EXPECT_EQ(back.seed, spec.seed);
    EXPECT_THROW(noise_spec_from_json(parse_json(R"({"model":"thermal","epsilon":0.1,"seed":1})")), FormatError);
    EXPECT_THROW(noise_spec_from_json(parse_json(R"({"model":"rotation","epsilon":3,"seed":1})")), ParameterError);
}

TEST(FormatDouble, RoundTripsAndSpecials) {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5, 0.0}) EXPECT_EQ(std::stod(format_double(x)), x);
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(DistributionCsv, HongOuMandelRows) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix bs(2, 2);
    bs << r, r, r, -r;
    std::ostringstream out;
    write_distribution_csv(out, output_distribution(UnitaryMatrix(bs), 2));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "outcome,probability");
    std::vector<std::string> outcomes;
    std::vector<double> probs;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        outcomes.push_back(line.substr(0, comma));
        probs.push_back(std::stod(line.substr(comma + 1)));
    }
    EXPECT_EQ(outcomes, (std::vector<std::string>{"2|0", "1|1", "0|2"}));
    EXPECT_NEAR(probs[0], 0.5, 1e-12);
    EXPECT_NEAR(probs[1], 0.0, 1e-12);
    EXPECT_NEAR(probs[2], 0.5, 1e-12);
}

TEST(ReportCsv, RowFields) {
    DistanceReport r;
    r.n = 2;
    r.l1 = 0.5;
    r.tv = 0.25;
    r.trace_dist = 0.3;
    r.state_euclid = 0.4;
    r.op_dist_lifted = 0.5;
    r.op_dist_base = 0.25;
    EXPECT_EQ(kReportCsvHeader, "n,m,model,epsilon,seed,l1,tv,trace,euclid,op_lifted,op_base,bound_rhs,chain_ok,l1_paper_ok");
    EXPECT_EQ(report_csv_row(3, "rotation", 0.25, 7, r), "2,3,rotation,0.25,7,0.5,0.25,0.3,0.4,0.5,0.25,0.5,true,true");
}

TEST(SweepCsv, HeaderIsExactAndRowsAlign) {
    SweepConfig cfg;
    cfg.n_values = {2};
    cfg.m_values = {3};
    cfg.eps_values = {0.1};
    cfg.trials_per_cell = 2;
    std::ostringstream out;
    write_sweep_csv(out, run_bound_sweep(cfg));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n,m,model,epsilon,seed,depth,l1,tv,trace,euclid,op_lifted,op_base,bound_rhs,ratio,chain_ok,l1_paper_ok");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 15);
        EXPECT_EQ(line.rfind("2,3,rotation,0.1,", 0), 0u);
    }
    EXPECT_EQ(rows, 2);
}

TEST(SweepJson, MirrorsCsvColumns) {
    SweepConfig cfg;
    cfg.n_values = {1};
    cfg.m_values = {2};
    cfg.eps_values = {0.05};
    cfg.noise_model = NoiseModel::gaussian;
    const auto result = run_bound_sweep(cfg);
    const Json j = sweep_to_json(result);
    EXPECT_EQ(j.at("columns").size(), 16u);
    EXPECT_EQ(j.at("columns")[13], "ratio");
    const Json& row = j.at("rows")[0];
    for (const auto& col : j.at("columns")) EXPECT_TRUE(row.contains(col.get<std::string>()));
    EXPECT_TRUE(row.at("l1").is_null());
    EXPECT_TRUE(row.at("chain_ok").is_null());
    EXPECT_EQ(row.at("model"), "gaussian-raw");
    EXPECT_EQ(row.at("op_base"), result.rows[0].report.op_dist_base);
}

}  // namespace
}  // namespace bosonbound
