#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fermatlab/verify/report.hpp"

using namespace fermatlab;
using namespace fermatlab::verify;

TEST_CASE("numbers are written with 17 significant digits") {
    Json j{{"third", 1.0 / 3.0}, {"int", 7}, {"nan", NAN}, {"inf", INFINITY}, {"s", "a\"b"}};
    const std::string text = dumpJson(j);
    CHECK(text.find("0.33333333333333331") != std::string::npos);
    CHECK(text.find("\"int\": 7") != std::string::npos);
    CHECK(text.find("\"nan\": null") != std::string::npos);
    CHECK(text.find("\"inf\": null") != std::string::npos);
    CHECK(text.find("a\\\"b") != std::string::npos);
    // Round trip through the parser keeps every double exactly.
    const auto back = Json::parse(text);
    CHECK(back["third"].get<double>() == 1.0 / 3.0);
    CHECK(dumpJson(Json::array()) == "[]");
}

TEST_CASE("report schema and CSV columns") {
    const auto report = residualScan(families::buildCaseIII(0), parseWindow("-1,1,-1,1"), 1e-8);
    const Json j = reportJson(report);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> expected{"tool_version", "command",        "family",          "params",
                                            "window",       "grid",           "tolerance",       "points_total",
                                            "points_excluded", "max_residual", "p95_residual",   "verdict",
                                            "failures"};
    CHECK(keys == expected);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["grid"]["columns"] == 41);
    CHECK(j["points_total"] == 41 * 41);

    const std::string csv = pointsCsv(report);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "z_re,z_im,residual_abs,residual_rel,excluded");
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == report.pointsTotal);
}

TEST_CASE("reports are reproducible byte for byte") {
    const auto fam = families::buildCubic(parseNumber("0.3+0.2i"));
    const auto a = dumpJson(reportJson(residualScan(fam, ScanWindow{}, 1e-8)));
    const auto b = dumpJson(reportJson(residualScan(fam, ScanWindow{}, 1e-8)));
    CHECK(a == b);
}

TEST_CASE("verdict JSON carries the residual coefficients") {
    const auto v = families::adjudicate(families::buildCaseIV(1, 0));
    const Json j = verdictJson(v);
    CHECK(j["verdict"] == "NONZERO");
    const Json& even = j["residual"]["even"];
    CHECK(even["degrees"] == Json::array({4, 3, 2, 1, 0}));
    CHECK(even["coefficients"] == Json::array({"44/3", "-4", "0", "1/36", "1/12"}));
}
