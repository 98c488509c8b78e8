#pragma once

// Stateless HTTP front end over the engine. Handlers are plain functions of
// the request body so they can be exercised without a socket.

#include <memory>
#include <string>
#include <string_view>

namespace todim::service {

inline constexpr int kDefaultPort = 8080;
inline constexpr std::string_view kVersion = "1.0.0";

struct Response {
    int status = 200;
    std::string body;
};

Response handle_health();
Response handle_evaluate(std::string_view body);
Response handle_sensitivity_lambda(std::string_view body);
Response handle_sensitivity_weight(std::string_view body);

struct ServerOptions {
    std::string host = "0.0.0.0";
    /// 0 binds an ephemeral port.
    int port = kDefaultPort;
    /// Directory of the console's built assets, mounted at "/" when set.
    std::string static_dir;
};

class Server {
public:
    explicit Server(ServerOptions options);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// False when the port cannot be bound (e.g. already in use).
    bool bind();
    /// Port actually bound; valid after a successful bind().
    int port() const noexcept;
    /// Blocks serving requests until stop() is called.
    void run();
    void stop();
    /// Blocks until the listener is accepting connections.
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace todim::service
