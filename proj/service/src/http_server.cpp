#include "gratuity/service/http_server.hpp"

#include <httplib.h>

namespace gratuity::service {

struct HttpServer::Impl {
    ApiConfig config;
    httplib::Server server;

    void add_cors(httplib::Response& res) const {
        res.set_header("Access-Control-Allow-Origin", config.cors_allowed_origin);
        res.set_header("Vary", "Origin");
    }

    void dispatch(const httplib::Request& req, httplib::Response& res) const {
        Request request{req.method, req.path, {}, req.body};
        for (const auto& [key, value] : req.params) request.query.emplace(key, value);
        const Response response = handle(request, config);
        res.status = response.status;
        res.set_content(response.body, "application/json");
        add_cors(res);
    }
};

HttpServer::HttpServer(ApiConfig config) : impl_(std::make_unique<Impl>()) {
    impl_->config = std::move(config);
    auto& server = impl_->server;
    const Impl* impl = impl_.get();

    server.set_payload_max_length(impl->config.request_size_limit);
    auto route = [impl](const httplib::Request& req, httplib::Response& res) { impl->dispatch(req, res); };
    server.Get(".*", route);
    server.Post(".*", route);
    server.Put(".*", route);
    server.Delete(".*", route);
    server.Options(".*", [impl](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        impl->add_cors(res);
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    // httplib answers oversized bodies itself; give them the JSON error shape.
    server.set_error_handler([impl](const httplib::Request&, httplib::Response& res) {
        if (res.status == 413) {
            res.set_content(R"({"error":"request body too large"})", "application/json");
            impl->add_cors(res);
        }
    });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
    const auto [host, port] = split_bind_address(impl_->config.bind_address);
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::is_running() const { return impl_->server.is_running(); }

} // namespace gratuity::service
