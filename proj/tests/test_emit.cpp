#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "supra/emit.hpp"
#include "supra/format.hpp"
#include "support/oracles.hpp"

using namespace supra;

namespace {

CentralityResult small_result() {
    Vector v(4);
    v << 0.1, 0.2, 0.3, 0.4;
    return extract(v, 2.5, 2, 2, 42, 1e-13);
}

const std::vector<std::string> kNodes{"a", "b"};
const std::vector<LayerKey> kLayers{1990, 1991};

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("format_double17 round-trips binary64") {
    for (double x : {1.0 / 3.0, 0.1, 2.5e-300, 1.7976931348623157e308, 6.02214076e23,
                     -0.0072973525693}) {
        const std::string s = format_double17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("csv: joint table layout") {
    const auto csv = emit_csv(OutputKind::Joint, small_result(), kNodes, kLayers);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 5); // header + 4 data rows
    CHECK(lines[0] == "node,layer,value");
    CHECK(lines[1].rfind("a,1990,", 0) == 0);
    CHECK(lines[2].rfind("b,1990,", 0) == 0);
    CHECK(lines[3].rfind("a,1991,", 0) == 0);
    CHECK(std::strtod(lines[1].substr(7).c_str(), nullptr) == doctest::Approx(0.1));
}

TEST_CASE("csv: mlc sums to one after reparsing") {
    const auto csv = emit_csv(OutputKind::Mlc, small_result(), kNodes, kLayers);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 3);
    double sum = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        sum += std::strtod(lines[i].substr(lines[i].find(',') + 1).c_str(), nullptr);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("csv: eigenvalue table carries solver diagnostics") {
    const auto csv = emit_csv(OutputKind::Eigenvalue, small_result(), kNodes, kLayers);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "lambda_max,iterations,residual");
    CHECK(lines[1].rfind("2.5,42,", 0) == 0);
}

TEST_CASE("csv: node subset filters node-keyed rows") {
    const std::vector<Index> subset{1};
    const auto joint = emit_csv(OutputKind::Joint, small_result(), kNodes, kLayers, subset);
    CHECK(lines_of(joint).size() == 3);
    const auto mnc = emit_csv(OutputKind::Mnc, small_result(), kNodes, kLayers, subset);
    const auto lines = lines_of(mnc);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("b,", 0) == 0);
    // layer-keyed tables ignore the node filter
    CHECK(lines_of(emit_csv(OutputKind::Mlc, small_result(), kNodes, kLayers, subset)).size() == 3);
}

TEST_CASE("json: reparsed values equal the in-memory result exactly") {
    const auto r = small_result();
    const auto j = emit_json(OutputKind::Joint, r, kNodes, kLayers);
    const auto back = nlohmann::json::parse(j.dump());
    for (Index i = 0; i < 2; ++i) {
        for (Index t = 0; t < 2; ++t) {
            CHECK(back["joint"][static_cast<std::size_t>(i)][static_cast<std::size_t>(t)]
                      .get<double>() == r.joint(i, t));
        }
    }
    CHECK(back["layers"][0].get<LayerKey>() == 1990);

    const auto je = emit_json(OutputKind::Eigenvalue, r, kNodes, kLayers);
    const auto back_e = nlohmann::json::parse(je.dump());
    CHECK(back_e["lambda_max"].get<double>() == r.lambda_max);
    CHECK(back_e["iterations"].get<long>() == 42);
    CHECK(back_e["residual"].get<double>() == 1e-13);
}

TEST_CASE("emit is deterministic") {
    const auto r = small_result();
    CHECK(emit_csv(OutputKind::CondNode, r, kNodes, kLayers) ==
          emit_csv(OutputKind::CondNode, r, kNodes, kLayers));
    CHECK(emit_json(OutputKind::Mnc, r, kNodes, kLayers).dump() ==
          emit_json(OutputKind::Mnc, r, kNodes, kLayers).dump());
}
