#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "colorlab/analysis.hpp"
#include "colorlab/tools/picker_service.hpp"
#include "colorlab/transforms.hpp"

namespace colorlab::tools {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class PickerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("colorlab_picker_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    config_.session_dir = dir_;
    config_.seed = 42;
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string convert_hex(const PickerService& svc, const json& body) {
    const auto r = svc.convert(body.dump());
    EXPECT_EQ(r.status, 200) << r.body;
    return json::parse(r.body).value("rgb_hex", "");
  }

  fs::path dir_;
  ServiceConfig config_;
};

TEST_F(PickerTest, ModelsListsRgbFirstWithRanges) {
  const PickerService svc(config_);
  const auto j = json::parse(svc.models().body)["models"];
  ASSERT_EQ(j.size(), 12u);
  EXPECT_EQ(j[0]["name"], "rgb");
  ASSERT_EQ(j[0]["components"].size(), 3u);
  EXPECT_EQ(j[0]["components"][0]["name"], "R");
  EXPECT_EQ(j[0]["components"][0]["max"], 255.0);
  for (const auto& m : j) {
    if (m["name"] == "cmyk") EXPECT_EQ(m["components"].size(), 4u);
    if (m["name"] == "hsv") EXPECT_TRUE(m["components"][0]["circular"].get<bool>());
  }
}

TEST_F(PickerTest, ConvertExamples) {
  const PickerService svc(config_);
  EXPECT_EQ(convert_hex(svc, {{"model", "hsv"}, {"components", {0, 1, 1}}}), "#FF0000");
  EXPECT_EQ(convert_hex(svc, {{"model", "hsl"}, {"components", {120, 1, 0.5}}}), "#00FF00");
  EXPECT_EQ(convert_hex(svc, {{"model", "rgb"}, {"components", {255, 128, 0}}}), "#FF8000");
  EXPECT_EQ(convert_hex(svc, {{"model", "hsv"}, {"components", {200, 0, 0.4}}}), "#666666");
}

TEST_F(PickerTest, ConvertAgreesWithLibraryInverse) {
  const PickerService svc(config_);
  const std::vector<std::pair<ColorModel, std::vector<double>>> cases = {
      {ColorModel::Lab, {52.0, 30.0, -40.0}}, {ColorModel::Cmyk, {0.1, 0.5, 0.2, 0.3}},
      {ColorModel::Yiq, {0.5, 0.1, -0.1}},    {ColorModel::YCbCr, {90, 140, 100}},
      {ColorModel::Hsi, {300, 0.4, 0.5}},     {ColorModel::Luv, {60, -20, 35}},
  };
  for (const auto& [m, v] : cases) {
    const auto expected = to_hex(to_rgb8(make_coord(m, v)));
    EXPECT_EQ(convert_hex(svc, {{"model", to_string(m)}, {"components", v}}), expected) << to_string(m);
  }
}

TEST_F(PickerTest, ConvertValidation) {
  const PickerService svc(config_);
  EXPECT_EQ(svc.convert("not json").status, 400);
  EXPECT_EQ(svc.convert("[1,2]").status, 400);
  EXPECT_EQ(svc.convert(json{{"components", {0, 0, 0}}}.dump()).status, 400);
  EXPECT_EQ(svc.convert(json{{"model", "foo"}, {"components", {0, 0, 0}}}.dump()).status, 400);
  EXPECT_EQ(svc.convert(json{{"model", "hsv"}, {"components", {0, 0}}}.dump()).status, 400);
  EXPECT_EQ(svc.convert(json{{"model", "hsv"}, {"components", {0, "x", 0}}}.dump()).status, 400);

  const auto range = svc.convert(json{{"model", "hsv"}, {"components", {0, 1.5, 1}}}.dump());
  EXPECT_EQ(range.status, 422);
  const auto j = json::parse(range.body);
  EXPECT_EQ(j["component"], "S");
  EXPECT_EQ(j["index"], 1);
  EXPECT_EQ(j["max"], 1.0);
  EXPECT_EQ(svc.convert(json{{"model", "rgb"}, {"components", {0, 256, 0}}}.dump()).status, 422);
}

TEST_F(PickerTest, TargetsAreSeeded) {
  PickerService a(config_), b(config_);
  for (int i = 0; i < 5; ++i) {
    const auto ja = json::parse(a.target("").body);
    EXPECT_EQ(ja, json::parse(b.target("{}").body));
    EXPECT_TRUE(parse_hex(ja["rgb_hex"].get<std::string>()));
  }
  EXPECT_EQ(json::parse(a.target("").body)["trial_id"], "t000006");
  EXPECT_EQ(a.target("garbage").status, 400);
}

TEST_F(PickerTest, TrialThenExportIngestsCleanly) {
  PickerService svc(config_);
  EXPECT_EQ(svc.export_sessions().body, std::string(analysis::kSessionHeader) + "\n");

  const auto t1 = json::parse(svc.target("").body);
  const auto t2 = json::parse(svc.target("").body);
  const json trial1 = {{"trial_id", t1["trial_id"]}, {"participant_id", "p7"}, {"model", "hsv"},
                       {"components", {10, 0.5, 0.5}}, {"elapsed_s", 12.3}};
  const json trial2 = {{"trial_id", t2["trial_id"]}, {"participant_id", "p7"}, {"model", "rgb"},
                       {"components", {1, 2, 3}}, {"elapsed_s", 8.0}};
  EXPECT_EQ(svc.trial(trial1.dump()).status, 201);
  EXPECT_EQ(svc.trial(trial2.dump()).status, 201);
  EXPECT_EQ(svc.trial(trial1.dump()).status, 400);  // already recorded

  const auto exported = svc.export_sessions();
  EXPECT_EQ(exported.content_type, "text/csv");
  const auto ingested = analysis::ingest_sessions(exported.body);
  EXPECT_TRUE(ingested.rejected.empty());
  ASSERT_EQ(ingested.records.size(), 2u);
  EXPECT_EQ(ingested.records[0].model, "HSV");
  EXPECT_EQ(ingested.records[0].elapsed_s, 12.3);
  EXPECT_EQ(to_hex(ingested.records[0].target), t1["rgb_hex"]);
  EXPECT_EQ(ingested.records[1].model, "RGB");
  EXPECT_TRUE(fs::exists(dir_ / "sessions.csv"));
}

TEST_F(PickerTest, TrialValidation) {
  PickerService svc(config_);
  const auto id = json::parse(svc.target("").body)["trial_id"];
  json good = {{"trial_id", id}, {"participant_id", "p"}, {"model", "lab"}, {"components", {50, 0, 0}},
               {"elapsed_s", 3.0}};
  for (const char* key : {"trial_id", "participant_id", "model", "elapsed_s", "components"}) {
    json bad = good;
    bad.erase(key);
    EXPECT_EQ(svc.trial(bad.dump()).status, 400) << key;
  }
  json unknown = good;
  unknown["trial_id"] = "t999999";
  EXPECT_EQ(svc.trial(unknown.dump()).status, 400);
  json comma = good;
  comma["participant_id"] = "a,b";
  EXPECT_EQ(svc.trial(comma.dump()).status, 400);
  json negative = good;
  negative["elapsed_s"] = -2.0;
  EXPECT_EQ(svc.trial(negative.dump()).status, 400);
  json range = good;
  range["components"] = {150, 0, 0};
  EXPECT_EQ(svc.trial(range.dump()).status, 422);
  EXPECT_EQ(svc.trial(good.dump()).status, 201);
}

TEST(SessionDir, ReadsEnvironment) {
  ::unsetenv("COLORLAB_SESSION_DIR");
  EXPECT_EQ(session_dir_from_env("/fallback"), fs::path("/fallback"));
  ::setenv("COLORLAB_SESSION_DIR", "/tmp/picker-sessions", 1);
  EXPECT_EQ(session_dir_from_env("/fallback"), fs::path("/tmp/picker-sessions"));
  ::unsetenv("COLORLAB_SESSION_DIR");
}

TEST_F(PickerTest, ServesOverHttp) {
  config_.port = 0;
  PickerServer server(config_);
  const int port = server.bind();
  ASSERT_GT(port, 0);
  std::thread loop([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const auto models = client.Get("/models");
  ASSERT_TRUE(models);
  EXPECT_EQ(models->status, 200);
  EXPECT_EQ(models->get_header_value("Access-Control-Allow-Origin"), "*");

  const auto conv = client.Post("/convert", R"({"model":"hsv","components":[0,1,1]})", "application/json");
  ASSERT_TRUE(conv);
  EXPECT_EQ(json::parse(conv->body)["rgb_hex"], "#FF0000");

  const auto bad = client.Post("/convert", R"({"model":"hsv","components":[0,2,1]})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 422);

  for (int i = 0; i < 2; ++i) {
    const auto t = client.Post("/target", "", "application/json");
    ASSERT_TRUE(t);
    const auto id = json::parse(t->body)["trial_id"];
    const json trial = {{"trial_id", id}, {"participant_id", "web"}, {"model", "yuv"},
                        {"components", {0.5, 0.0, 0.0}}, {"elapsed_s", 5.5 + i}};
    const auto posted = client.Post("/trial", trial.dump(), "application/json");
    ASSERT_TRUE(posted);
    EXPECT_EQ(posted->status, 201);
  }

  const auto exported = client.Get("/export");
  ASSERT_TRUE(exported);
  EXPECT_EQ(exported->status, 200);
  const auto ingested = analysis::ingest_sessions(exported->body);
  EXPECT_EQ(ingested.records.size(), 2u);
  EXPECT_TRUE(ingested.rejected.empty());

  const auto preflight = client.Options("/trial");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);

  server.stop();
  loop.join();
}

}  // namespace
}  // namespace colorlab::tools
