#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "colorlab/transforms.hpp"

namespace colorlab::tools {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::uint64_t seed = 1;
  std::filesystem::path session_dir = ".";
  ConversionOptions conversion;
};

/// Session directory from COLORLAB_SESSION_DIR, or `fallback` when unset.
std::filesystem::path session_dir_from_env(const std::filesystem::path& fallback = ".");

struct HttpResult {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// JSON endpoints backing the browser color picker. Handlers are plain
/// functions of the request body so they can be exercised without a socket;
/// PickerServer binds them to HTTP routes.
class PickerService {
 public:
  explicit PickerService(ServiceConfig config);

  HttpResult models() const;
  HttpResult convert(const std::string& body) const;
  HttpResult target(const std::string& body);
  HttpResult trial(const std::string& body);
  HttpResult export_sessions() const;

  std::filesystem::path session_file() const;
  const ServiceConfig& config() const { return config_; }

 private:
  ServiceConfig config_;
  mutable std::mutex mutex_;  // guards rng_, next_trial_, open_trials_ and the session file
  std::mt19937_64 rng_;
  std::uint64_t next_trial_ = 1;
  std::map<std::string, std::string> open_trials_;  // trial_id -> target hex
};

/// HTTP front end. listen() blocks until stop() is called from another thread.
class PickerServer {
 public:
  explicit PickerServer(ServiceConfig config);
  ~PickerServer();

  PickerServer(const PickerServer&) = delete;
  PickerServer& operator=(const PickerServer&) = delete;

  /// Binds the configured host and port (port 0 picks a free one); returns the bound port or -1.
  int bind();
  /// Serves requests on the bound socket.
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

  PickerService& service() { return service_; }

 private:
  struct Impl;
  PickerService service_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace colorlab::tools
