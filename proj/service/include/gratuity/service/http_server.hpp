#pragma once

#include <memory>

#include "gratuity/service/api.hpp"

namespace gratuity::service {

/// cpp-httplib front end for handle(). Handlers are stateless; the server can
/// take concurrent requests.
class HttpServer {
public:
    explicit HttpServer(ApiConfig config);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds to the configured address; port 0 picks a free port. Returns the bound port.
    int bind();
    /// Blocks serving requests until stop(). Call bind() first.
    bool listen_after_bind();
    void stop();
    [[nodiscard]] bool is_running() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace gratuity::service
