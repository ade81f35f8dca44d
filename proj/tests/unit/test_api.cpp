#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/json_schema.hpp"
#include "gratuity/breakeven.hpp"
#include "gratuity/error.hpp"
#include "gratuity/json.hpp"
#include "gratuity/loan.hpp"
#include "gratuity/scenario.hpp"
#include "gratuity/service/api.hpp"

using gratuity::CompoundingMode;
using gratuity::GratuityTerms;
using gratuity::LoanTerms;
using gratuity::SavingsOffer;
using gratuity::Scenario;
using gratuity::TaxPolicy;
using gratuity::ValidationError;
namespace service = gratuity::service;
using nlohmann::json;
using service::handle;
using service::Request;

namespace {

const service::ApiConfig kConfig{};

const schema::Validator& validator() {
    static const schema::Validator v(schema::load(GRATUITY_SCHEMA_PATH));
    return v;
}

service::Response post(const std::string& path, const json& body) {
    return handle(Request{"POST", path, {}, body.dump()}, kConfig);
}

} // namespace

TEST_CASE("health") {
    const auto a = handle({"GET", "/api/v1/health", {}, {}}, kConfig);
    CHECK(a.status == 200);
    CHECK(json::parse(a.body) == json{{"status", "ok"}});
    CHECK(handle({"GET", "/api/v1/health", {}, {}}, kConfig).body == a.body);
}

TEST_CASE("breakeven endpoint") {
    auto r = post("/api/v1/breakeven", {{"q", 0.3333333333}, {"delta", 0.25}, {"n", 12}, {"mode", "simple"}});
    CHECK(r.status == 200);
    auto doc = json::parse(r.body);
    CHECK(validator().validate(doc, "breakeven_result").empty());
    CHECK(doc.at("rate").get<double>() == doctest::Approx(0.205128).epsilon(1e-6));

    r = post("/api/v1/breakeven", {{"q", 0}, {"delta", 0.25}, {"n", 1}, {"mode", "continuous"}});
    CHECK(json::parse(r.body).at("rate").get<double>() == 0.0);

    r = post("/api/v1/breakeven", {{"q", 0.3333333333}, {"delta", 0.25}, {"n", 12}, {"mode", "continuous"}});
    CHECK(json::parse(r.body).at("rate").get<double>() == doctest::Approx(0.1917).epsilon(1e-3));
}

TEST_CASE("loan decision endpoint") {
    json body = {{"L", 100000}, {"m", 20}, {"n", 12}, {"r_c", 0.12}, {"G", 12000}, {"q", 0.3333333333}, {"delta", 0.25}};
    auto doc = json::parse(post("/api/v1/loan/decision", body).body);
    CHECK(validator().validate(doc, "loan_decision").empty());
    CHECK(doc.at("verdict") == "WaitYearEnd");
    CHECK(doc.at("threshold").get<double>() == doctest::Approx(0.2274).epsilon(1e-3));

    body["G"] = 0;
    CHECK(json::parse(post("/api/v1/loan/decision", body).body).at("margin").get<double>() == 0.0);
    body["G"] = 12000;
    body["r_c"] = 0.30;
    CHECK(json::parse(post("/api/v1/loan/decision", body).body).at("verdict") == "TakeInstallments");
}

TEST_CASE("curve endpoint") {
    auto r = handle({"GET", "/api/v1/curve", {{"q", "0.3333333333"}, {"delta", "0.25"}, {"n", "12"}, {"min", "0"},
                                               {"max", "0.5"}, {"samples", "201"}}, {}},
                    kConfig);
    REQUIRE(r.status == 200);
    auto doc = json::parse(r.body);
    CHECK(validator().validate(doc, "curve_series").empty());
    const auto& points = doc.at("points");
    REQUIRE(points.size() == 201);
    int changes = 0;
    for (std::size_t k = 1; k < points.size(); ++k)
        changes += (points[k].at("phi").get<double>() < 0) != (points[k - 1].at("phi").get<double>() < 0);
    CHECK(changes == 1);

    r = handle({"GET", "/api/v1/curve", {{"samples", "2"}, {"min", "0"}, {"max", "0.5"}}, {}}, kConfig);
    CHECK(json::parse(r.body).at("points").size() == 2);

    r = handle({"GET", "/api/v1/curve", {{"q", "0"}}, {}}, kConfig);
    for (const auto& p : json::parse(r.body).at("points")) CHECK(p.at("phi").get<double>() <= 0.0);

    r = handle({"GET", "/api/v1/curve", {{"min", "0.4"}, {"max", "0.1"}}, {}}, kConfig);
    CHECK(r.status == 400);
    CHECK(json::parse(r.body).at("field") == "max");
    r = handle({"GET", "/api/v1/curve", {{"samples", "many"}}, {}}, kConfig);
    CHECK(r.status == 400);
    CHECK(json::parse(r.body).at("field") == "samples");
}

TEST_CASE("compare endpoint") {
    const json body = {{"policy", {{"q", 0.3333333333}, {"delta", 0.25}}},
                       {"gratuity", {{"G", 12000}, {"n", 12}}},
                       {"savings", {{"rate", 0.05}, {"mode", "simple"}}}};
    const auto r = post("/api/v1/compare", body);
    REQUIRE(r.status == 200);
    const auto doc = json::parse(r.body);
    CHECK(validator().validate(doc, "decision_report").empty());
    CHECK_FALSE(doc.contains("loan_verdict"));
}

TEST_CASE("errors: 400 names the field, 404, 405, 413") {
    auto field_of = [](const service::Response& r) {
        CHECK(r.status == 400);
        const auto doc = json::parse(r.body);
        CHECK(validator().validate(doc, "error").empty());
        return doc.value("field", std::string());
    };
    CHECK(field_of(post("/api/v1/breakeven", {{"q", 1.5}, {"delta", 0.25}, {"n", 12}, {"mode", "simple"}})) == "q");
    CHECK(field_of(post("/api/v1/breakeven", {{"q", 0.3}, {"n", 12}, {"mode", "simple"}})) == "delta");
    CHECK(field_of(post("/api/v1/breakeven", {{"q", 0.3}, {"delta", 0.2}, {"n", 0}, {"mode", "simple"}})) == "n");
    CHECK(field_of(post("/api/v1/breakeven", {{"q", 0.3}, {"delta", 0.2}, {"n", 12}, {"mode", "daily"}})) == "mode");
    CHECK(field_of(post("/api/v1/breakeven", {{"q", "0.3"}, {"delta", 0.2}, {"n", 12}, {"mode", "simple"}})) == "q");
    CHECK(field_of(post("/api/v1/loan/decision",
                        {{"L", 1000}, {"m", 1}, {"n", 12}, {"r_c", -0.1}, {"G", 1}, {"q", 0.3}, {"delta", 0.2}})) ==
          "r_c");
    CHECK(field_of(post("/api/v1/loan/decision",
                        {{"L", 1000}, {"m", 1}, {"n", 12}, {"r_c", 0.1}, {"G", -1}, {"q", 0.3}, {"delta", 0.2}})) ==
          "G");
    CHECK(field_of(handle({"POST", "/api/v1/breakeven", {}, "{oops"}, kConfig)) == "body");

    CHECK(handle({"GET", "/api/v2/health", {}, {}}, kConfig).status == 404);
    CHECK(handle({"GET", "/api/v1/nothing", {}, {}}, kConfig).status == 404);
    CHECK(json::parse(handle({"GET", "/nope", {}, {}}, kConfig).body).contains("error"));
    CHECK(handle({"GET", "/api/v1/breakeven", {}, {}}, kConfig).status == 405);

    service::ApiConfig small;
    small.request_size_limit = 16;
    CHECK(handle({"POST", "/api/v1/breakeven", {}, std::string(17, ' ')}, small).status == 413);
}

TEST_CASE("parity: 100 randomized scenarios equal direct library results exactly") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> frac(0.0, 0.9), rate(0.0, 0.6), amount(1.0, 1e6);
    std::uniform_int_distribution<int> count(1, 52), years(1, 30);
    for (int i = 0; i < 100; ++i) {
        const double q = frac(rng), delta = frac(rng), G = amount(rng), L = amount(rng), r_c = rate(rng);
        const int n = count(rng), m = years(rng);
        const TaxPolicy policy(q, delta);
        const auto mode = i % 2 ? CompoundingMode::Simple : CompoundingMode::Continuous;

        const auto be = json::parse(
            post("/api/v1/breakeven", {{"q", q}, {"delta", delta}, {"n", n}, {"mode", gratuity::to_string(mode)}}).body);
        const auto lib_be = gratuity::breakeven_installments(n, mode, policy);
        CHECK(be.at("rate").get<double>() == lib_be.rate);
        CHECK(be.at("residual").get<double>() == lib_be.residual);

        const auto ld = json::parse(post("/api/v1/loan/decision",
                                         {{"L", L}, {"m", m}, {"n", n}, {"r_c", r_c}, {"G", G}, {"q", q}, {"delta", delta}})
                                        .body);
        const auto lib_ld = gratuity::decide_loan(LoanTerms(L, m, n, r_c), G, policy);
        CHECK(ld.at("phi").get<double>() == lib_ld.phi_value);
        CHECK(ld.at("margin").get<double>() == lib_ld.margin);
        CHECK(ld.at("total_repayment").get<double>() == lib_ld.total_repayment);
        CHECK(ld.at("verdict") == gratuity::to_string(lib_ld.verdict));
        CHECK(ld.contains("threshold") == lib_ld.threshold.has_value());
        if (lib_ld.threshold) CHECK(ld.at("threshold").get<double>() == *lib_ld.threshold);

        const Scenario scenario{policy, GratuityTerms(G, n), SavingsOffer{rate(rng), mode}, LoanTerms(L, m, n, r_c)};
        const auto cmp = post("/api/v1/compare", gratuity::json::to_json(scenario));
        CHECK(json::parse(cmp.body) == gratuity::json::to_json(gratuity::compare(scenario)));
    }
}

TEST_CASE("stateless: permuted request order gives identical responses") {
    std::vector<Request> requests = {
        {"GET", "/api/v1/health", {}, {}},
        {"POST", "/api/v1/breakeven", {}, R"({"q":0.3,"delta":0.2,"n":12,"mode":"continuous"})"},
        {"POST", "/api/v1/loan/decision", {}, R"({"L":5000,"m":3,"n":12,"r_c":0.2,"G":3000,"q":0.3,"delta":0.25})"},
        {"GET", "/api/v1/curve", {{"samples", "11"}}, {}},
        {"POST", "/api/v1/breakeven", {}, R"({"q":2,"delta":0.2,"n":12,"mode":"simple"})"},
    };
    std::map<std::string, std::string> first;
    for (const auto& r : requests) first[r.path + r.body] = handle(r, kConfig).body;
    std::mt19937 rng(5);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(requests.begin(), requests.end(), rng);
        for (const auto& r : requests) CHECK(handle(r, kConfig).body == first[r.path + r.body]);
    }
}

TEST_CASE("bind address parsing") {
    CHECK(service::split_bind_address("127.0.0.1:8080") == std::pair<std::string, int>{"127.0.0.1", 8080});
    CHECK_THROWS_AS(service::split_bind_address("localhost"), ValidationError);
    CHECK_THROWS_AS(service::split_bind_address("host:99999"), ValidationError);
}
