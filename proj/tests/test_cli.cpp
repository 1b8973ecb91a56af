// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#ifdef SPIKECRYPT_HAVE_CLI

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace spikecrypt::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "spikecrypt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spikecrypt_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                ->current_test_info()
                                                ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, HelpForEverySubcommand) {
  for (std::vector<std::string> cmd :
       {std::vector<std::string>{}, {"keygen"}, {"encrypt"}, {"decrypt"}, {"pipeline"},
        {"pipeline", "run"}, {"train"}, {"simulate"}, {"metrics"}, {"metrics", "vp"},
        {"metrics", "vr"}, {"metrics", "confusion"}, {"metrics", "vp-matrix"}, {"bench"}}) {
    cmd.push_back("--help");
    const auto r = invoke(cmd);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("Usage"), std::string::npos);
  }
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
  const auto r = invoke({"keygen", "--algo", "sdes", "--frobnicate"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(invoke({"keygen", "--algo", "des"}).code, kExitValidation);
  EXPECT_EQ(invoke({}).code, kExitValidation);
}

TEST_F(CliTest, KeygenEncryptDecryptRoundtrip) {
  for (const char* algo : {"sdes", "aes", "rsa"}) {
    const std::string key = path(std::string(algo) + ".json");
    std::vector<std::string> kg = {"keygen", "--algo", algo, "--out", key, "--seed", "3"};
    if (std::string(algo) == "rsa") {
      kg.push_back("--bits");
      kg.push_back("1024");
    }
    ASSERT_EQ(invoke(kg).code, kExitOk);
    EXPECT_TRUE(fs::exists(key + ".manifest.json"));
    const auto enc = invoke({"encrypt", "--algo", algo, "--key", key, "--message", "attack at dawn"});
    ASSERT_EQ(enc.code, kExitOk) << enc.err;
    std::string hex = enc.out;
    hex.pop_back();
    const auto dec = invoke({"decrypt", "--algo", algo, "--key", key, "--hex", hex});
    ASSERT_EQ(dec.code, kExitOk) << dec.err;
    EXPECT_EQ(dec.out, "attack at dawn\n");
  }
}

TEST_F(CliTest, KeyAlgorithmMismatch) {
  const std::string key = path("k.json");
  ASSERT_EQ(invoke({"keygen", "--algo", "sdes", "--out", key}).code, kExitOk);
  const auto r = invoke({"encrypt", "--algo", "aes", "--key", key, "--message", "x"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("sdes"), std::string::npos);
}

TEST_F(CliTest, BadHexAndTamperedCiphertext) {
  const std::string key = path("k.json");
  ASSERT_EQ(invoke({"keygen", "--algo", "aes", "--out", key}).code, kExitOk);
  EXPECT_EQ(invoke({"decrypt", "--algo", "aes", "--key", key, "--hex", "zz"}).code,
            kExitValidation);
  EXPECT_EQ(invoke({"decrypt", "--algo", "aes", "--key", key, "--hex", "00"}).code,
            kExitValidation);
}

TEST_F(CliTest, SeedParsing) {
  EXPECT_EQ(invoke({"keygen", "--algo", "sdes", "--seed", "abc"}).code, kExitValidation);
  EXPECT_EQ(invoke({"keygen", "--algo", "sdes", "--seed", "random"}).code, kExitOk);
  const auto a = invoke({"keygen", "--algo", "aes", "--seed", "9"});
  const auto b = invoke({"keygen", "--algo", "aes", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, PipelineRecoversSampleMessage) {
  const std::string msg(kSampleMessage);
  const auto r = invoke({"pipeline", "run", "--algo", "sdes", "--message", msg, "--noise",
                         "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, msg + "\n");
}

TEST_F(CliTest, PipelineManifestAndReproducibility) {
  const std::string out1 = path("p1.txt"), out2 = path("p2.txt");
  const std::string spikes = path("s.csv");
  for (const auto& o : {out1, out2}) {
    const auto r = invoke({"pipeline", "run", "--algo", "aes", "--message", "hello spikes",
                           "--seed", "11", "--out", o, "--spikes", spikes});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_EQ(slurp(out1), "hello spikes");
  const auto m1 = nlohmann::json::parse(slurp(out1 + ".manifest.json"));
  const auto m2 = nlohmann::json::parse(slurp(out2 + ".manifest.json"));
  EXPECT_EQ(m1["seed"], 11);
  EXPECT_EQ(m1["ciphertext_hex"], m2["ciphertext_hex"]);
  EXPECT_EQ(m1["spike_counts"], m2["spike_counts"]);
  EXPECT_TRUE(m1["ciphertext_intact"].get<bool>());
  EXPECT_TRUE(m1.contains("timestamp"));
  EXPECT_TRUE(m1["l1_l3_fidelity"].contains("n0"));
  EXPECT_TRUE(m1["l1_l3_fidelity"]["n1"].contains("vp"));
  EXPECT_TRUE(m1["config"].contains("noise_rate_hz"));
  EXPECT_TRUE(fs::exists(spikes));
}

TEST_F(CliTest, PipelineConfigFile) {
  const std::string cfg = path("cfg.json");
  std::ofstream(cfg) << R"({"noise_rate_hz": 0})";
  const auto r = invoke({"pipeline", "run", "--algo", "sdes", "--message", "cfg", "--config", cfg,
                         "--manifest", path("m.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto m = nlohmann::json::parse(slurp(path("m.json")));
  EXPECT_EQ(m["config"]["noise_rate_hz"], 0.0);
  EXPECT_EQ(m["config_path"], cfg);
  std::ofstream(cfg) << R"({"nope": 0})";
  EXPECT_EQ(invoke({"pipeline", "run", "--algo", "sdes", "--message", "cfg", "--config", cfg})
                .code,
            kExitValidation);
}

TEST_F(CliTest, MetricsOnFiles) {
  const std::string empty = path("empty.csv"), a = path("a.csv"), b = path("b.csv");
  std::ofstream(empty) << "neuron_id,time_ms\n";
  std::ofstream(a) << "neuron_id,time_ms\n0,0\n";
  std::ofstream(b) << "neuron_id,time_ms\n0,1\n";
  auto r = invoke({"metrics", "vp", "--a", empty, "--b", empty});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0\n");
  r = invoke({"metrics", "vp", "--a", a, "--b", b, "--q", "0.5"});
  EXPECT_EQ(r.out, "0.5\n");
  r = invoke({"metrics", "vr", "--a", a, "--b", empty});
  EXPECT_EQ(r.out, "0.5\n");
  std::ofstream(path("bad.csv")) << "id,t\n";
  EXPECT_EQ(invoke({"metrics", "vp", "--a", path("bad.csv"), "--b", empty}).code,
            kExitValidation);
}

TEST_F(CliTest, ConfusionUndefinedMarker) {
  auto r = invoke({"metrics", "confusion", "--tp", "0", "--tn", "5", "--fp", "0", "--fn", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("precision undefined"), std::string::npos);
  r = invoke({"metrics", "confusion", "--tp", "96", "--tn", "98", "--fp", "2", "--fn", "4",
              "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["recall"].get<double>(), 0.96, 1e-12);
  EXPECT_EQ(invoke({"metrics", "confusion", "--tp", "0", "--tn", "0", "--fp", "0", "--fn", "0"})
                .code,
            kExitValidation);
}

TEST_F(CliTest, VpMatrixExport) {
  const std::string spikes = path("s.csv");
  std::ofstream(spikes) << "neuron_id,time_ms\n1,1\n1,5\n2,2\n3,9\n";
  const auto r = invoke({"metrics", "vp-matrix", "--spikes", spikes, "--out", path("d.csv"),
                         "--rank", path("r.csv"), "--reindex", "--window", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(path("d.csv")).substr(0, 16), "neuron_id,1,2,3\n");
  EXPECT_EQ(slurp(path("r.csv")).substr(0, 16), "neuron_id,1,2,3\n");
}

TEST_F(CliTest, SimulateRasterSvg) {
  const std::string svg = path("out.svg");
  const auto r = invoke({"simulate", "--window", "220", "--raster", svg});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string body = slurp(svg);
  for (const char* id : {"panel-L1", "panel-L2", "panel-L3", "panel-noise"})
    EXPECT_NE(body.find(id), std::string::npos);
  EXPECT_TRUE(fs::exists(svg + ".manifest.json"));
  EXPECT_EQ(invoke({"simulate", "--window", "300"}).code, kExitValidation);
  EXPECT_EQ(invoke({"simulate", "--raster", path("x.png")}).code, kExitValidation);
}

TEST_F(CliTest, TrainReportsNonConvergence) {
  const std::string w = path("w.json"), curve = path("c.csv");
  const auto r = invoke({"train", "--toy", "170", "--epochs", "2", "--threshold", "0",
                         "--out", w, "--curve", curve});
  EXPECT_EQ(r.code, kExitInternal);
  EXPECT_NE(r.err.find("did not converge"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(w));
  EXPECT_EQ(j["synapses"].size(), 8u);
  EXPECT_EQ(j["synapses"][0]["pre"], 8);
  EXPECT_EQ(j["synapses"][0]["post"], 16);
  EXPECT_EQ(slurp(curve).rfind("epoch,mean_vp_distance\n", 0), 0u);

  // Trained weights load back into a matching one-byte pipeline.
  const auto p = invoke({"pipeline", "run", "--algo", "sdes", "--message", "Z", "--weights", w});
  EXPECT_EQ(p.code, kExitOk) << p.err;
  const auto bad = invoke({"pipeline", "run", "--algo", "sdes", "--message", "ZZ", "--weights", w});
  EXPECT_EQ(bad.code, kExitValidation);
}

TEST_F(CliTest, TrainFromDataset) {
  const std::string data = path("d.json");
  std::ofstream(data) << R"({"window_ms": 100, "key_hex": "00", "examples": [
      {"message_hex": "80", "targets": [[5.0, 20.0], [], [], [], [], [], [], []]}]})";
  const auto r = invoke({"train", "--dataset", data, "--epochs", "2", "--out", path("w.json")});
  EXPECT_TRUE(r.code == kExitOk || r.code == kExitInternal) << r.err;
  EXPECT_TRUE(fs::exists(path("w.json")));
  std::ofstream(data) << R"({"examples": []})";
  EXPECT_EQ(invoke({"train", "--dataset", data}).code, kExitValidation);
  EXPECT_EQ(invoke({"train"}).code, kExitValidation);
}

TEST_F(CliTest, BenchFormats) {
  const auto r = invoke({"bench", "--iterations", "30", "--warmup", "1", "--bits", "1024",
                         "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("Algorithm,Library / Method,Average Time (s)", 0), 0u);
  const auto j = invoke({"bench", "--iterations", "30", "--warmup", "1", "--bits", "1024",
                         "--json", "--out", path("b.json")});
  ASSERT_EQ(j.code, kExitOk) << j.err;
  EXPECT_NO_THROW(nlohmann::json::parse(slurp(path("b.json"))));
  EXPECT_EQ(invoke({"bench", "--iterations", "5"}).code, kExitValidation);
  EXPECT_EQ(invoke({"bench", "--baseline", "DES"}).code, kExitValidation);
}

}  // namespace
}  // namespace spikecrypt::cli

#endif
