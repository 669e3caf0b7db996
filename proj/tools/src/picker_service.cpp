#include "colorlab/tools/picker_service.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "colorlab/analysis.hpp"
#include "colorlab/types.hpp"

namespace colorlab::tools {

namespace {

using nlohmann::json;

constexpr ComponentRange kRgbComponents[] = {
    {"R", 0.0, 255.0, 1.0, true},
    {"G", 0.0, 255.0, 1.0, true},
    {"B", 0.0, 255.0, 1.0, true},
};

HttpResult error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, extra.dump(), "application/json"};
}

json component_json(const ComponentRange& c) {
  return {{"name", c.name}, {"min", c.min},         {"max", c.max},
          {"step", c.step}, {"bounded", c.bounded}, {"circular", c.circular}};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// A parsed model name from a request: nullopt model means RGB.
struct RequestModel {
  std::optional<ColorModel> model;
  std::span<const ComponentRange> ranges;
};

std::optional<RequestModel> request_model(const std::string& name) {
  if (analysis::model_label(name) == "RGB") return RequestModel{std::nullopt, kRgbComponents};
  const auto m = parse_model(name);
  if (!m) return std::nullopt;
  return RequestModel{m, components(*m)};
}

// Validates the components array. Returns an error result or nullopt.
std::optional<HttpResult> check_components(const json& body, const RequestModel& rm, std::vector<double>& out) {
  if (!body.contains("components") || !body["components"].is_array()) {
    return error(400, "'components' must be an array of numbers");
  }
  const auto& arr = body["components"];
  if (arr.size() != rm.ranges.size()) {
    return error(400, "expected " + std::to_string(rm.ranges.size()) + " components, got " +
                          std::to_string(arr.size()));
  }
  out.clear();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) return error(400, "component " + std::to_string(i) + " is not a number");
    const double v = arr[i].get<double>();
    if (!std::isfinite(v)) return error(400, "component " + std::to_string(i) + " is not finite");
    const auto& r = rm.ranges[i];
    if (r.bounded && (v < r.min || v > r.max)) {
      return error(422, std::string(r.name) + " is out of range",
                   {{"component", r.name}, {"index", i}, {"value", v}, {"min", r.min}, {"max", r.max}});
    }
    out.push_back(v);
  }
  return std::nullopt;
}

std::optional<json> parse_body(const std::string& body, HttpResult& err) {
  try {
    auto j = json::parse(body);
    if (!j.is_object()) {
      err = error(400, "request body must be a JSON object");
      return std::nullopt;
    }
    return j;
  } catch (const json::parse_error&) {
    err = error(400, "request body is not valid JSON");
    return std::nullopt;
  }
}

}  // namespace

std::filesystem::path session_dir_from_env(const std::filesystem::path& fallback) {
  if (const char* dir = std::getenv("COLORLAB_SESSION_DIR"); dir && *dir) return dir;
  return fallback;
}

PickerService::PickerService(ServiceConfig config) : config_(std::move(config)), rng_(config_.seed) {}

std::filesystem::path PickerService::session_file() const { return config_.session_dir / "sessions.csv"; }

HttpResult PickerService::models() const {
  json list = json::array();
  json rgb = {{"name", "rgb"}, {"label", "RGB"}, {"components", json::array()}};
  for (const auto& c : kRgbComponents) rgb["components"].push_back(component_json(c));
  list.push_back(rgb);
  for (ColorModel m : kAllModels) {
    json entry = {{"name", to_string(m)}, {"label", display_name(m)}, {"components", json::array()}};
    for (const auto& c : components(m)) entry["components"].push_back(component_json(c));
    list.push_back(entry);
  }
  return {200, json{{"models", list}}.dump(), "application/json"};
}

HttpResult PickerService::convert(const std::string& body) const {
  HttpResult err;
  const auto j = parse_body(body, err);
  if (!j) return err;
  if (!j->contains("model") || !(*j)["model"].is_string()) return error(400, "'model' must be a string");
  const auto rm = request_model((*j)["model"].get<std::string>());
  if (!rm) return error(400, "unknown model; valid models: rgb," + model_list());

  std::vector<double> values;
  if (auto bad = check_components(*j, *rm, values)) return *bad;

  Rgb8 rgb;
  if (!rm->model) {
    rgb = {quantize_channel(values[0] / 255.0), quantize_channel(values[1] / 255.0),
           quantize_channel(values[2] / 255.0)};
  } else {
    try {
      rgb = to_rgb8(make_coord(*rm->model, values), config_.conversion);
    } catch (const std::exception& e) {
      return error(422, e.what());
    }
  }
  return {200, json{{"rgb_hex", to_hex(rgb)}}.dump(), "application/json"};
}

HttpResult PickerService::target(const std::string& body) {
  if (!body.empty()) {
    HttpResult err;
    if (!parse_body(body, err)) return err;
  }
  std::lock_guard lock(mutex_);
  const auto bits = rng_();
  const Rgb8 t{static_cast<std::uint8_t>(bits), static_cast<std::uint8_t>(bits >> 8),
               static_cast<std::uint8_t>(bits >> 16)};
  char id[24];
  std::snprintf(id, sizeof id, "t%06llu", static_cast<unsigned long long>(next_trial_++));
  const std::string hex = to_hex(t);
  open_trials_[id] = hex;
  return {200, json{{"trial_id", id}, {"rgb_hex", hex}}.dump(), "application/json"};
}

HttpResult PickerService::trial(const std::string& body) {
  HttpResult err;
  const auto j = parse_body(body, err);
  if (!j) return err;
  for (const char* key : {"trial_id", "participant_id", "model"}) {
    if (!j->contains(key) || !(*j)[key].is_string()) return error(400, std::string("'") + key + "' must be a string");
  }
  if (!j->contains("elapsed_s") || !(*j)["elapsed_s"].is_number()) return error(400, "'elapsed_s' must be a number");

  const auto rm = request_model((*j)["model"].get<std::string>());
  if (!rm) return error(400, "unknown model; valid models: rgb," + model_list());
  std::vector<double> values;
  if (auto bad = check_components(*j, *rm, values)) return *bad;

  analysis::SessionRecord record;
  record.participant_id = (*j)["participant_id"].get<std::string>();
  record.model = analysis::model_label((*j)["model"].get<std::string>());
  record.components = values;
  record.elapsed_s = (*j)["elapsed_s"].get<double>();
  record.timestamp = utc_timestamp();
  const auto trial_id = (*j)["trial_id"].get<std::string>();

  std::lock_guard lock(mutex_);
  const auto it = open_trials_.find(trial_id);
  if (it == open_trials_.end()) return error(400, "unknown or already recorded trial_id '" + trial_id + "'");
  record.target = *parse_hex(it->second);

  std::string row;
  try {
    row = analysis::to_csv_row(record);
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  }

  std::error_code ec;
  std::filesystem::create_directories(config_.session_dir, ec);
  const auto path = session_file();
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) return error(500, "cannot open session file");
  if (fresh) out << analysis::kSessionHeader << '\n';
  out << row << '\n';
  out.flush();
  if (!out) return error(500, "cannot write session file");
  open_trials_.erase(it);
  return {201, json{{"ok", true}, {"trial_id", trial_id}}.dump(), "application/json"};
}

HttpResult PickerService::export_sessions() const {
  std::lock_guard lock(mutex_);
  std::ifstream in(session_file());
  if (!in) return {200, std::string(analysis::kSessionHeader) + '\n', "text/csv"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return {200, ss.str(), "text/csv"};
}

struct PickerServer::Impl {
  httplib::Server server;
  std::string host;
  int port = 0;
};

PickerServer::PickerServer(ServiceConfig config) : service_(config), impl_(std::make_unique<Impl>()) {
  impl_->host = config.host;
  impl_->port = config.port;
  auto& svr = impl_->server;
  svr.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  auto reply = [](httplib::Response& res, const HttpResult& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  svr.Get("/models", [this, reply](const httplib::Request&, httplib::Response& res) { reply(res, service_.models()); });
  svr.Post("/convert", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.convert(req.body));
  });
  svr.Post("/target", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.target(req.body));
  });
  svr.Post("/trial", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.trial(req.body));
  });
  svr.Get("/export", [this, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, service_.export_sessions());
  });
  svr.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

PickerServer::~PickerServer() { stop(); }

int PickerServer::bind() {
  if (impl_->port == 0) return impl_->port = impl_->server.bind_to_any_port(impl_->host);
  return impl_->server.bind_to_port(impl_->host, impl_->port) ? impl_->port : -1;
}

bool PickerServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void PickerServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void PickerServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace colorlab::tools
