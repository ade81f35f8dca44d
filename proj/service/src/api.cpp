#include "gratuity/service/api.hpp"

#include <charconv>
#include <cstdlib>

#include "gratuity/breakeven.hpp"
#include "gratuity/error.hpp"
#include "gratuity/json.hpp"
#include "gratuity/loan.hpp"
#include "gratuity/scenario.hpp"

namespace gratuity::service {

using nlohmann::json;
namespace gj = gratuity::json;

namespace {

constexpr std::string_view kPrefix = "/api/v1";

json error_body(std::string_view message, std::string_view field = {}) {
    json out = {{"error", message}};
    if (!field.empty()) out["field"] = field;
    return out;
}

Response reply(int status, const json& body) { return {status, body.dump()}; }

double query_number(const std::map<std::string, std::string>& query, const char* key, double fallback) {
    const auto it = query.find(key);
    if (it == query.end()) return fallback;
    const std::string& text = it->second;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw ValidationError(key, "expected a number, got \"" + text + "\"");
    return value;
}

int query_integer(const std::map<std::string, std::string>& query, const char* key, int fallback) {
    const auto it = query.find(key);
    if (it == query.end()) return fallback;
    const std::string& text = it->second;
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw ValidationError(key, "expected an integer, got \"" + text + "\"");
    return value;
}

TaxPolicy policy_fields(const json& body) {
    const double q = gj::number_field(body, "q");
    const double delta = gj::number_field(body, "delta");
    return {q, delta};
}

} // namespace

ApiConfig config_from_environment(ApiConfig base) {
    if (const char* bind = std::getenv("GRATUITY_BIND")) base.bind_address = bind;
    if (const char* origin = std::getenv("GRATUITY_CORS_ORIGIN")) base.cors_allowed_origin = origin;
    return base;
}

std::pair<std::string, int> split_bind_address(const std::string& address) {
    const auto colon = address.rfind(':');
    if (colon == std::string::npos || colon == 0)
        throw ValidationError("bind_address", "expected host:port, got \"" + address + "\"");
    const std::string port_text = address.substr(colon + 1);
    int port = -1;
    const auto [end, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
    if (ec != std::errc{} || end != port_text.data() + port_text.size() || port < 0 || port > 65535)
        throw ValidationError("bind_address", "invalid port \"" + port_text + "\"");
    return {address.substr(0, colon), port};
}

json breakeven_endpoint(const json& body) {
    const TaxPolicy policy = policy_fields(body);
    const int n = gj::integer_field(body, "n");
    const CompoundingMode mode = parse_compounding_mode(gj::string_field(body, "mode"));
    return gj::to_json(breakeven_installments(n, mode, policy));
}

json loan_decision_endpoint(const json& body) {
    const TaxPolicy policy = policy_fields(body);
    const LoanTerms loan(gj::number_field(body, "L"), gj::integer_field(body, "m"),
                         gj::integer_field(body, "n"), gj::number_field(body, "r_c"));
    return gj::to_json(decide_loan(loan, gj::number_field(body, "G"), policy));
}

json curve_endpoint(const std::map<std::string, std::string>& query) {
    const TaxPolicy policy(query_number(query, "q", 1.0 / 3.0), query_number(query, "delta", 0.25));
    const int n = query_integer(query, "n", 12);
    if (n < 1) throw ValidationError("n", "must be at least 1");
    return gj::to_json(phi_curve(n, policy, query_number(query, "min", 0.0),
                                   query_number(query, "max", 0.5), query_integer(query, "samples", 201)));
}

json compare_endpoint(const json& body) {
    return gj::to_json(compare(gj::scenario_from_json(body)));
}

Response handle(const Request& request, const ApiConfig& config) {
    if (request.body.size() > config.request_size_limit)
        return reply(413, error_body("request body exceeds " + std::to_string(config.request_size_limit) + " bytes"));

    const std::string_view path = request.path;
    if (!path.starts_with(kPrefix)) return reply(404, error_body("not found: " + request.path));
    const std::string_view route = path.substr(kPrefix.size());

    struct Route {
        std::string_view path;
        std::string_view method;
    };
    static constexpr Route routes[] = {
        {"/health", "GET"}, {"/breakeven", "POST"}, {"/loan/decision", "POST"}, {"/curve", "GET"}, {"/compare", "POST"},
    };
    const Route* match = nullptr;
    for (const auto& r : routes)
        if (r.path == route) match = &r;
    if (!match) return reply(404, error_body("not found: " + request.path));
    if (match->method != request.method)
        return reply(405, error_body("method " + request.method + " not allowed on " + request.path));

    try {
        if (route == "/health") return reply(200, {{"status", "ok"}});
        if (route == "/curve") return reply(200, curve_endpoint(request.query));

        const json body = gj::parse(request.body);
        if (route == "/breakeven") return reply(200, breakeven_endpoint(body));
        if (route == "/loan/decision") return reply(200, loan_decision_endpoint(body));
        return reply(200, compare_endpoint(body));
    } catch (const DomainError& e) {
        return reply(400, error_body(e.message(), e.field()));
    } catch (const SolverError& e) {
        return reply(500, error_body(std::string("solver failure: ") + e.what()));
    } catch (const std::exception& e) {
        return reply(500, error_body(std::string("internal error: ") + e.what()));
    }
}

} // namespace gratuity::service
