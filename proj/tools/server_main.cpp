#include <csignal>
#include <iostream>

#include <CLI11.hpp>

#include "gratuity/error.hpp"
#include "gratuity/service/http_server.hpp"

namespace {
gratuity::service::HttpServer* g_server = nullptr;
void on_signal(int) {
    if (g_server) g_server->stop();
}
} // namespace

int main(int argc, char** argv) {
    auto config = gratuity::service::config_from_environment();
    CLI::App app{"HTTP/JSON service for gratuity break-even and loan decisions", "gratuity_server"};
    app.add_option("--bind", config.bind_address, "host:port to listen on (env GRATUITY_BIND)");
    app.add_option("--cors-origin", config.cors_allowed_origin, "Allowed browser origin (env GRATUITY_CORS_ORIGIN)");
    app.add_option("--max-body", config.request_size_limit, "Largest accepted request body in bytes");
    CLI11_PARSE(app, argc, argv);

    try {
        gratuity::service::HttpServer server(config);
        const int port = server.bind();
        if (port < 0) {
            std::cerr << "cannot bind " << config.bind_address << '\n';
            return 1;
        }
        g_server = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        std::cerr << "listening on port " << port << '\n';
        return server.listen_after_bind() ? 0 : 1;
    } catch (const gratuity::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
