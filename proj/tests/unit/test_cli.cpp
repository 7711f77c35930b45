#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "fermatlab/verify/report.hpp"

using fermatlab::verify::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = fermatlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tempPath(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("fermatlab_test_" + name)).string();
}

}  // namespace

TEST_CASE("wp-eval") {
    const auto two = cli({"wp-eval", "--case", "II", "--z", "0.4+0.3i"});
    REQUIRE(two.code == 0);
    CHECK(two.json()["odeResidual"].get<double>() < 1e-9);

    const auto tau = cli({"wp-eval", "--tau", "0", "--z", "0.2"});
    REQUIRE(tau.code == 0);
    CHECK(tau.json()["invariants"]["g2_exact"] == "0");
    CHECK(tau.json()["invariants"]["g3_exact"] == "432");

    CHECK(cli({"wp-eval", "--g2", "0", "--g3", "0", "--z", "0.2"}).code == 2);
    CHECK(cli({"wp-eval", "--case", "II", "--tau", "0", "--z", "0.2"}).code == 2);
    CHECK(cli({"wp-eval", "--case", "II"}).code == 2);
    CHECK(cli({"wp-eval", "--case", "II", "--z", "0"}).code == 1);
}

TEST_CASE("adjudicate") {
    CHECK(cli({"adjudicate", "--family", "case3"}).code == 0);
    const auto four = cli({"adjudicate", "--family", "case4", "--variant", "1"});
    CHECK(four.code == 1);
    const Json even = four.json()["result"]["residual"]["even"];
    CHECK(even["degrees"] == Json::array({4, 3, 2, 1, 0}));
    CHECK(even["coefficients"] == Json::array({"44/3", "-4", "0", "1/36", "1/12"}));
    CHECK(cli({"adjudicate", "--family", "quadratic", "--rho", "5/4", "--sign", "plus"}).code == 0);
    CHECK(cli({"adjudicate", "--family", "quadratic", "--rho", "5/4", "--sign", "minus"}).code == 1);
    CHECK(cli({"adjudicate", "--family", "quadratic", "--rho", "1"}).code == 2);
    CHECK(cli({"adjudicate", "--family", "cubic", "--tau", "-1"}).code == 2);
    CHECK(cli({"adjudicate", "--family", "nope"}).code == 2);
    CHECK(cli({"adjudicate", "--family", "case2", "--order", "5"}).code == 2);
}

TEST_CASE("verify writes report files") {
    const std::string json = tempPath("report.json");
    const std::string csv = tempPath("points.csv");
    const auto pass = cli({"verify", "--family", "cubic", "--tau", "0.3+0.2i", "--out", json, "--csv", csv});
    CHECK(pass.code == 0);
    std::ifstream in(json);
    const Json report = Json::parse(in);
    CHECK(report["verdict"] == "PASS");
    CHECK(report["command"] == "verify");
    std::ifstream points(csv);
    std::string header;
    std::getline(points, header);
    CHECK(header == "z_re,z_im,residual_abs,residual_rel,excluded");
    std::remove(json.c_str());
    std::remove(csv.c_str());

    CHECK(cli({"verify", "--family", "case4", "--variant", "2"}).code == 1);
    CHECK(cli({"verify", "--family", "case2", "--window", "-0.02,0.02,-0.02,0.02"}).code == 3);
    CHECK(cli({"verify", "--family", "case2", "--derivative"}).code == 0);
    CHECK(cli({"verify", "--family", "case2", "--tol", "-1"}).code == 2);
    CHECK(cli({"verify", "--family", "case2", "--window", "1,0,0,1"}).code == 2);
}

TEST_CASE("zeros") {
    const auto r = cli({"zeros", "--family", "exp-pair", "--expr", "f'", "--compare", "g'", "--relation", "subset",
                        "--mode", "counting", "--window", "-1,1,-7,7"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["comparison"]["holds"] == true);
    const auto strict = cli({"zeros", "--family", "exp-pair", "--expr", "f'", "--compare", "g'", "--relation",
                             "strict-subset", "--window", "-1,1,-7,7"});
    CHECK(strict.code == 0);
    bool sawPi = false;
    const Json witnesses = strict.json()["comparison"]["witnesses"];
    for (const auto& w : witnesses) {
        sawPi = sawPi || std::abs(w["im"].get<double>() - 3.141592653589793) < 1e-8;
    }
    CHECK(sawPi);
    CHECK(cli({"zeros", "--family", "unit-unit", "--expr", "f", "--compare", "g", "--relation", "equal", "--mode",
               "ignoring"})
              .code == 0);
    const auto c1 = cli({"zeros", "--family", "case1", "--expr", "f", "--compare", "g", "--relation", "equal",
                         "--mode", "ignoring"});
    CHECK(c1.code == 1);
    CHECK_FALSE(c1.json()["comparison"]["witnesses"].empty());
    CHECK(cli({"zeros", "--family", "case1", "--expr", "f", "--window=-1,1,-1,1"}).code == 0);
    CHECK(cli({"zeros", "--family", "case1", "--expr", "q"}).code == 2);
}

TEST_CASE("discriminant") {
    const auto zero = cli({"discriminant", "--tau", "0"});
    REQUIRE(zero.code == 0);
    CHECK(zero.json()["delta_brace_form_exact"] == "-5038848");
    CHECK(zero.json()["delta_factored_exact"] == "-5038848");
    CHECK(zero.json()["difference_exact"] == "0");
    CHECK(cli({"discriminant", "--tau", "-1"}).json()["delta_factored_exact"] == "0");
    CHECK(cli({"discriminant", "--tau", "2/3"}).json()["difference_exact"] == "0");
    CHECK(cli({"discriminant"}).code == 2);
}

TEST_CASE("suite, catalog, attain, diagnose") {
    const auto one = cli({"suite", "--criterion", "5", "--json"});
    CHECK(one.code == 0);
    CHECK(one.json()["all_passed"] == true);
    // The ODE oracle holds for any invariants; the family verdicts do not.
    CHECK(cli({"suite", "--criterion", "1", "--mutate"}).code == 0);
    const auto mutated = cli({"suite", "--criterion", "3", "--mutate"});
    CHECK(mutated.code == 1);
    CHECK(mutated.out.find("FAIL") != std::string::npos);

    const std::string a1 = tempPath("artifacts1.json");
    const std::string a2 = tempPath("artifacts2.json");
    CHECK(cli({"suite", "--criterion", "4", "--artifacts", a1}).code == 0);
    CHECK(cli({"suite", "--criterion", "4", "--artifacts", a2}).code == 0);
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(a1).size() > 1000);
    CHECK(slurp(a1) == slurp(a2));
    std::remove(a1.c_str());
    std::remove(a2.c_str());

    const std::string md = tempPath("catalog.md");
    CHECK(cli({"catalog", "--out", md}).code == 0);
    CHECK(std::filesystem::file_size(md) > 1000);
    std::remove(md.c_str());

    const auto at = cli({"attain", "--family", "unit-unit", "--expr", "f", "--targets", "0,1"});
    CHECK(at.code == 0);
    CHECK(at.json()["targets"].size() == 2);

    const auto dg = cli({"diagnose", "--kind", "H2", "--tau", "0.3+0.2i"});
    CHECK(dg.code == 0);
    CHECK(dg.json()["report"]["limit"]["error"].get<double>() < 1e-2);
    CHECK(cli({"diagnose", "--kind", "H7"}).code == 2);
}

TEST_CASE("config file supplies defaults, flags override") {
    const std::string cfg = tempPath("config.ini");
    {
        std::ofstream out(cfg);
        out << "[verify]\nfamily=case4\nvariant=2\nwindow=-1,1,-1,1\n";
    }
    CHECK(cli({"--config", cfg, "verify"}).code == 1);
    const auto over = cli({"--config", cfg, "verify", "--family", "case3"});
    CHECK(over.code == 0);
    CHECK(over.json()["window"]["re_min"] == -1.0);
    std::remove(cfg.c_str());
}

TEST_CASE("usage errors and help") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    const auto help = cli({"verify", "--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("--window") != std::string::npos);
    CHECK(cli({"--version"}).code == 0);
}
