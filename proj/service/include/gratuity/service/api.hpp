#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace gratuity::service {

struct ApiConfig {
    std::string bind_address = "127.0.0.1:8080";
    std::string cors_allowed_origin = "http://localhost:5173";
    std::size_t request_size_limit = 64 * 1024;
};

/// Overrides `base` with GRATUITY_BIND and GRATUITY_CORS_ORIGIN when set.
ApiConfig config_from_environment(ApiConfig base = {});

/// Splits "host:port"; throws ValidationError("bind_address", ...) if malformed.
std::pair<std::string, int> split_bind_address(const std::string& address);

struct Request {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    std::string body;
};

/// Transport-independent router for /api/v1. Every response body is JSON;
/// errors are {"error": ..., "field": ...}.
Response handle(const Request& request, const ApiConfig& config);

// Endpoint bodies, exposed for parity tests. They throw DomainError /
// ValidationError on bad input; handle() maps those to 400.
nlohmann::json breakeven_endpoint(const nlohmann::json& body);
nlohmann::json loan_decision_endpoint(const nlohmann::json& body);
nlohmann::json curve_endpoint(const std::map<std::string, std::string>& query);
nlohmann::json compare_endpoint(const nlohmann::json& body);

} // namespace gratuity::service
