#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "persuade/densities.hpp"
#include "persuade/error.hpp"
#include "persuade/io/density_spec.hpp"
#include "persuade/io/serialize.hpp"

using namespace persuade;
using doctest::Approx;
using nlohmann::json;

namespace {

GridDensity1D beta_grid(double a, double b, std::size_t n = kDefaultGridNodes) {
    return ParametricDensity1D::beta(a, b).tabulate(n);
}

double max_gap(const GridDensity1D& a, const GridDensity1D& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.value(i) - b.value(i)));
    return worst;
}

}  // namespace

TEST_SUITE("number formatting") {
    TEST_CASE("twelve significant digits") {
        CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
        CHECK(io::format_number(0.5625) == "0.5625");
        CHECK(io::format_number(0.0) == "0");
        CHECK(io::round12(1.0 / 3.0) == 0.333333333333);
        CHECK(io::round12(2.0 / 3.0) == 0.666666666667);
    }
}

TEST_SUITE("csv round trips") {
    TEST_CASE("density") {
        const auto d = beta_grid(2.5, 4, 101);
        const auto text = io::density_csv(d);
        CHECK(text.rfind("x,value\n", 0) == 0);
        const auto back = io::parse_density_csv(text);
        REQUIRE(back.size() == d.size());
        CHECK(max_gap(back, d) < 1e-11);
        CHECK(io::density_csv(back) == text);
    }

    TEST_CASE("value table") {
        const auto vt = value_table_from_virtual_density(beta_grid(2, 2, 201));
        const auto text = io::value_table_csv(vt);
        CHECK(text.rfind("mu,v,h\n", 0) == 0);
        const auto back = io::parse_value_table_csv(text);
        REQUIRE(back.size() == vt.size());
        for (std::size_t i = 0; i < vt.size(); ++i) {
            CHECK(back.v()[i] == Approx(vt.v()[i]).epsilon(1e-11));
            CHECK(back.h()[i] == Approx(vt.h()[i]).epsilon(1e-11));
        }
        CHECK(io::value_table_csv(back) == text);
    }

    TEST_CASE("partition") {
        const Policy pol{0.2, 0.9};
        const auto part = partition(pol, 51);
        const auto text = io::partition_csv(part);
        CHECK(text.rfind("c,p_lo,p_hi\n", 0) == 0);
        const auto back = io::parse_partition_csv(text, pol);
        REQUIRE(back.size() == part.size());
        for (std::size_t i = 0; i < part.size(); ++i) {
            CHECK(back.lower[i] == Approx(part.lower[i]).epsilon(1e-11));
            CHECK(back.upper[i] == Approx(part.upper[i]).epsilon(1e-11));
        }
    }

    TEST_CASE("sweep") {
        const auto sweep = polarization_sweep(beta_grid(2, 2), {0.5, 1, 2}, Prior(0.3));
        const auto text = io::sweep_csv(sweep);
        CHECK(text.rfind("param,mu_hat,sigma0,sigma1,value,shape\n", 0) == 0);
        const auto back = io::parse_sweep_csv(text);
        REQUIRE(back.size() == 3);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(back[k].param == sweep.records[k].param);
            CHECK(*back[k].threshold == Approx(*sweep.records[k].threshold).epsilon(1e-11));
            CHECK(back[k].policy.good_if_bad == Approx(sweep.records[k].policy.good_if_bad).epsilon(1e-11));
            CHECK(back[k].value == Approx(sweep.records[k].value).epsilon(1e-11));
            CHECK(back[k].shape.tag == sweep.records[k].shape.tag);
        }
    }

    TEST_CASE("sweep without a threshold leaves the column empty") {
        SweepResult sweep;
        sweep.records.push_back({1.0, std::nullopt, Policy{0.0, 0.4}, 0.5, {ShapeTag::Neither, {}}});
        const auto text = io::sweep_csv(sweep);
        CHECK(text.find("\n1,,0,0.4,0.5,") != std::string::npos);
        CHECK_FALSE(io::parse_sweep_csv(text)[0].threshold.has_value());
    }

    TEST_CASE("malformed tables") {
        CHECK_THROWS_AS(io::parse_density_csv("x,y\n0,1\n1,1\n"), ValidationError);
        CHECK_THROWS_AS(io::parse_density_csv("x,value\n0,1\n0.3,1\n1,1\n"), ValidationError);
        CHECK_THROWS_AS(io::parse_density_csv("x,value\n0,1\n0.5,abc\n1,1\n"), ValidationError);
        CHECK_THROWS_AS(io::parse_value_table_csv("mu,v,h\n0,0,1\n1,1,1\n"), ValidationError);
        CHECK_THROWS_AS(io::parse_sweep_csv("param,mu_hat\n1,2\n"), ValidationError);
    }
}

TEST_SUITE("json output") {
    TEST_CASE("solution fields") {
        const auto sol = solve(value_table_from_virtual_density(beta_grid(2, 2)), Prior(0.5));
        const auto j = io::solution_json(sol);
        CHECK(j["method"] == "ClosedFormPeaked");
        CHECK(j["mu_hat"].get<double>() == Approx(0.75).epsilon(1e-6));
        CHECK(j["sigma0"].get<double>() == Approx(1.0 / 3.0).epsilon(1e-5));
        CHECK(j["sigma1"].get<double>() == 1.0);
        CHECK(j["value"].get<double>() == Approx(0.5625).epsilon(1e-6));
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items()) keys.push_back(k);
        const std::vector<std::string> leading{"method", "mu_hat", "mu_lo", "mu_hi", "weight_hi", "sigma0", "sigma1", "value"};
        REQUIRE(keys.size() >= leading.size());
        CHECK(std::equal(leading.begin(), leading.end(), keys.begin()));
    }

    TEST_CASE("payoff, verdict and condition") {
        const auto p = io::payoff_json(Policy{0.2, 0.9}, 0.5, {0.25, 0.5, 0.25});
        CHECK(p["measures"]["compliers"] == 0.5);
        CHECK(p["sigma0"] == 0.2);

        SweepResult sweep;
        sweep.violations = {2};
        sweep.warnings = {"w"};
        const auto v = io::verdict_json(sweep);
        CHECK(v["monotone"] == false);
        CHECK(v["violations"] == json::array({2}));

        const auto c = io::condition_json({ConditionKind::Dippedness, 1.0, 3.0, 0.0, true});
        CHECK(c["condition"] == "dippedness");
        CHECK(c.contains("lhs_inf"));
        CHECK(c["satisfied"] == true);
        const auto c2 = io::condition_json({ConditionKind::Peakedness, 1.0, -3.0, 0.0, true});
        CHECK(c2.contains("lhs_sup"));
    }
}

TEST_SUITE("density specs") {
    TEST_CASE("families match direct construction") {
        const std::size_t n = 501;
        CHECK(max_gap(io::density_from_json(json::parse(R"({"family":"beta","a":2,"b":5})"), n), beta_grid(2, 5, n)) < 1e-12);
        const auto tn = ParametricDensity1D::truncated_normal(0.4, 0.03).tabulate(n);
        CHECK(max_gap(io::density_from_json(json::parse(R"({"family":"truncnormal","mean":0.4,"var":0.03})"), n), tn) < 1e-12);
        CHECK(max_gap(io::density_from_json(json::parse(R"({"family":"truncnormal","mean":0.4,"variance":0.03})"), n), tn) < 1e-12);
        CHECK(max_gap(io::density_from_json(json::parse(R"({"family":"uniform"})"), n), GridDensity1D::uniform(n)) < 1e-12);
        const auto tri = io::density_from_json(json::parse(R"({"family":"piecewise","knots":[[0,0],[0.5,2],[1,0]]})"), n);
        CHECK(tri(0.25) == Approx(1.0));
        CHECK(tri.is_normalized());
    }

    TEST_CASE("grid values are resampled and normalized") {
        const auto d = io::density_from_json(json::parse(R"({"family":"grid","values":[1,2,3]})"), 101);
        CHECK(d.size() == 101);
        CHECK(d.is_normalized());
        CHECK(d(0.0) == Approx(0.5));
        CHECK(d(1.0) == Approx(1.5));
    }

    TEST_CASE("mixtures and polarized densities") {
        const auto mix = io::density_from_json(
            json::parse(R"({"family":"mixture","components":[{"weight":0.25,"family":"beta","a":2,"b":8},{"weight":0.75,"family":"beta","a":8,"b":2}]})"),
            501);
        CHECK(mix.is_normalized());
        CHECK(mix(0.5) == Approx(0.25 * oracle::beta_pdf(2, 8, 0.5) + 0.75 * oracle::beta_pdf(8, 2, 0.5)).epsilon(1e-4));
        const auto pol = io::density_from_json(
            json::parse(R"({"family":"polarized","alpha":2,"base":{"family":"beta","a":2,"b":2}})"), 501);
        CHECK(pol(0.5) == Approx(1.875).epsilon(1e-4));
    }

    TEST_CASE("marginals and joints") {
        const auto point = io::marginal_from_json(json::parse(R"({"family":"point","at":0.3})"), 201);
        REQUIRE(std::holds_alternative<PointMass>(point));
        CHECK(std::get<PointMass>(point).at == 0.3);
        const auto prod = io::joint_from_json(
            json::parse(R"({"type":"product","cost":{"family":"beta","a":2,"b":2},"prior":{"family":"point","at":0.5}})"), 201);
        CHECK(prod.is_product());
        const auto grid = io::joint_from_json(json::parse(R"({"type":"grid","n":3,"values":[1,1,1,1,1,1,1,1,1]})"), 201);
        CHECK(grid.is_normalized());
        CHECK(grid.grid_size() == 3);
        const auto raw = io::joint_from_json(
            json::parse(R"({"type":"grid","n":3,"values":[2,2,2,2,2,2,2,2,2],"normalize":false})"), 201);
        CHECK_FALSE(raw.is_normalized());
    }

    TEST_CASE("malformed specs") {
        const char* bad[] = {
            R"({"family":"gamma","a":1})",
            R"({"family":"beta","a":2})",
            R"({"family":"beta","a":-1,"b":2})",
            R"({"family":"truncnormal","mean":0.5})",
            R"({"family":"piecewise","knots":[[0.5,1]]})",
            R"({"family":"grid","values":[]})",
            R"({"family":"mixture","components":[]})",
            R"({"family":"polarized","alpha":-1,"base":{"family":"uniform"}})",
            R"({"a":2,"b":2})",
            R"([1,2])",
        };
        for (const char* text : bad) {
            const std::string shown = text;
            CAPTURE(shown);
            CHECK_THROWS_AS(io::density_from_json(json::parse(text), 101), ValidationError);
        }
        CHECK_THROWS_AS(io::marginal_from_json(json::parse(R"({"family":"point","at":2})"), 101), ValidationError);
        CHECK_THROWS_AS(io::joint_from_json(json::parse(R"({"type":"grid","n":3,"values":[1,1]})"), 101), ValidationError);
        CHECK_THROWS_AS(io::joint_from_json(json::parse(R"({"type":"copula"})"), 101), ValidationError);
    }
}

TEST_SUITE("files") {
    TEST_CASE("atomic write replaces the target") {
        const auto dir = std::filesystem::temp_directory_path() / "persuade_io_test";
        std::filesystem::create_directories(dir);
        const auto path = dir / "out.txt";
        io::write_file_atomic(path, "first");
        io::write_file_atomic(path, "second");
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == "second");
        CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
        std::filesystem::remove_all(dir);
    }
}
