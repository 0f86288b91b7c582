#pragma once

#include "sidon/service.hpp"

#include <memory>
#include <string>

namespace sidon {

/// cpp-httplib front end for SessionService. JSON in, JSON out; the status
/// code is the one SessionService chose.
class HttpServer {
public:
    explicit HttpServer(SessionService& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds without serving; port 0 picks a free port. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen_after_bind();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace sidon
