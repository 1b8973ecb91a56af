// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "spikecrypt/error.hpp"
#include "spikecrypt/network.hpp"
#include "spikecrypt/raster.hpp"

namespace spikecrypt::snn {
namespace {

constexpr double kWindow = 200.0;

SimulationResult run_bytes(const Bytes& data, RunOptions ro = {}, std::uint64_t seed = 42,
                           const NetworkConfig& cfg = {}) {
  const auto net = build_network(data.size(), cfg, seed);
  const auto plan = codec::encode_bytes(data, codec::kDefaultObfuscationKey, kWindow, cfg.i_on_pa);
  return run(net, plan, kWindow, ro);
}

double earliest(const std::vector<SpikeTrain>& trains) {
  double t = 1e300;
  for (const auto& tr : trains)
    if (!tr.empty()) t = std::min(t, tr.times().front());
  return t;
}

TEST(Build, LayerSizes) {
  const auto net = build_network(1, {}, 1);
  const auto& topo = net.topology();
  EXPECT_EQ(topo.size(Layer::kInput), 8u);
  EXPECT_EQ(topo.size(Layer::kHidden), 8u);
  EXPECT_EQ(topo.size(Layer::kOutput), 8u);
  EXPECT_EQ(topo.size(Layer::kInhibition), 8u);
  EXPECT_EQ(topo.size(Layer::kNoise), 8u);
  EXPECT_EQ(topo.size(Layer::kTeaching), 8u);
  EXPECT_EQ(topo.total_neurons(), 48u);
  // Contiguous global ids in layer order.
  std::size_t next = 0;
  for (Layer l : kAllLayers) {
    EXPECT_EQ(topo.range(l).first, next);
    next += topo.size(l);
  }
}

TEST(Build, HiddenOverride) {
  NetworkConfig cfg;
  cfg.hidden_size = 24;
  cfg.noise_neurons = 5;
  const auto topo = build_network(2, cfg, 1).topology();
  EXPECT_EQ(topo.size(Layer::kHidden), 24u);
  EXPECT_EQ(topo.size(Layer::kNoise), 5u);
  cfg.hidden_size = 8;
  EXPECT_THROW(build_network(2, cfg, 1), ConfigError);
}

TEST(Build, DefaultWeights) {
  const auto topo = build_network(1, {}, 1).topology();
  std::map<std::pair<Layer, Layer>, const Projection*> by_pair;
  for (const auto& p : topo.projections) by_pair[{p.pre, p.post}] = &p;
  EXPECT_EQ(by_pair.at({Layer::kInput, Layer::kHidden})->weights, std::vector<double>{1200.0});
  EXPECT_EQ(by_pair.at({Layer::kInhibition, Layer::kHidden})->weights, std::vector<double>{-100.0});
  EXPECT_EQ(by_pair.at({Layer::kOutput, Layer::kInhibition})->weights, std::vector<double>{350.0});
  EXPECT_EQ(by_pair.at({Layer::kNoise, Layer::kHidden})->weights, std::vector<double>{500.0});
  const auto* l2l3 = by_pair.at({Layer::kHidden, Layer::kOutput});
  EXPECT_EQ(l2l3->kind, SynapseKind::kStdp);
  EXPECT_EQ(l2l3->weights, std::vector<double>(8, 420.0));
  for (const auto& s : topo.synapses()) {
    EXPECT_GT(s.delay_ms, 0.0);
    if (s.kind == SynapseKind::kStdp) {
      EXPECT_GE(s.weight, 400.0);
      EXPECT_LE(s.weight, 900.0);
    }
  }
}

TEST(Build, AllToAllL2L3) {
  NetworkConfig cfg;
  cfg.l2l3 = Connectivity::kAllToAll;
  const auto net = build_network(1, cfg, 1);
  EXPECT_EQ(net.l2l3().weights.size(), 64u);
  std::size_t plastic = 0;
  for (const auto& s : net.topology().synapses()) plastic += s.kind == SynapseKind::kStdp;
  EXPECT_EQ(plastic, 64u);
}

TEST(Build, EmptyMessage) {
  const auto net = build_network(0, {}, 1);
  EXPECT_EQ(net.topology().total_neurons(), 0u);
  const auto r = run(net, codec::encode_bytes(Bytes{}, Bytes{1}, kWindow), kWindow);
  for (Layer l : kAllLayers) EXPECT_EQ(r.spike_count(l), 0u);
}

TEST(Build, WeightReplacementClampsAndChecksShape) {
  const auto net = build_network(1, {}, 1);
  const auto w = net.with_l2l3_weights({0, 1000, 500, 500, 500, 500, 500, 500}).l2l3().weights;
  EXPECT_EQ(w[0], 400.0);
  EXPECT_EQ(w[1], 900.0);
  EXPECT_EQ(w[2], 500.0);
  EXPECT_THROW(net.with_l2l3_weights({500.0}), ShapeError);
}

TEST(Config, JsonRoundtripAndErrors) {
  NetworkConfig cfg;
  cfg.noise_rate_hz = 20.0;
  cfg.weight_l2l3_min = 410.0;
  const auto back = config_from_json(config_to_json(cfg));
  EXPECT_EQ(back.noise_rate_hz, 20.0);
  EXPECT_EQ(back.weight_l2l3_min, 410.0);
  EXPECT_EQ(back.stdp.w_min, 410.0);
  EXPECT_EQ(config_from_json(R"({"V_th": -50})").neuron.v_th, -50.0);
  EXPECT_THROW(config_from_json(R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"V_reset": 70})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"hidden_size": -3})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"delay_ms": 0.01})"), ConfigError);
  EXPECT_THROW(config_from_json(R"({"l2l3_connectivity": "round_robin"})"), ConfigError);
  EXPECT_THROW(config_from_json("[1]"), ConfigError);
  EXPECT_THROW(config_from_json("{"), ConfigError);
}

TEST(Poisson, BasicContract) {
  EXPECT_TRUE(poisson_train(0.0, 1000.0, 1).empty());
  EXPECT_THROW(poisson_train(-1.0, 1000.0, 1), ValidationError);
  EXPECT_THROW(poisson_train(10.0, 0.0, 1), ValidationError);
  EXPECT_EQ(poisson_train(10.0, 1000.0, 5), poisson_train(10.0, 1000.0, 5));
  EXPECT_NE(poisson_train(10.0, 1000.0, 5), poisson_train(10.0, 1000.0, 6));
}

// Chi-square goodness of fit of counts against Poisson(10).
TEST(Poisson, CountDistribution) {
  constexpr int kTrials = 10000;
  std::vector<int> counts(64, 0);
  double total = 0;
  for (int s = 0; s < kTrials; ++s) {
    const auto n = poisson_train(10.0, 1000.0, 1000 + s).size();
    ++counts[std::min<std::size_t>(n, 63)];
    total += static_cast<double>(n);
  }
  EXPECT_NEAR(total / kTrials, 10.0, 0.15);
  boost::math::poisson_distribution<> pois(10.0);
  // Bins: <=4, 5..17 individually, >=18.
  std::vector<std::pair<double, double>> bins;
  double o = 0, e = 0;
  for (int k = 0; k <= 4; ++k) o += counts[k];
  e = boost::math::cdf(pois, 4) * kTrials;
  bins.emplace_back(o, e);
  for (int k = 5; k <= 17; ++k) bins.emplace_back(counts[k], boost::math::pdf(pois, k) * kTrials);
  o = 0;
  for (int k = 18; k < 64; ++k) o += counts[k];
  bins.emplace_back(o, boost::math::cdf(boost::math::complement(pois, 17)) * kTrials);
  double chi2 = 0;
  for (auto [obs, exp] : bins) chi2 += (obs - exp) * (obs - exp) / exp;
  boost::math::chi_squared_distribution<> ref(static_cast<double>(bins.size() - 1));
  EXPECT_LT(chi2, boost::math::quantile(ref, 0.99));
}

TEST(Run, ZeroStimulusSilent) {
  RunOptions ro;
  ro.noise = false;
  const auto r = run_bytes(Bytes(4, 0x00), ro, 1, {});
  // The obfuscation key is nonzero, so XOR a message equal to the key to get silence.
  const auto silent = run_bytes(codec::kDefaultObfuscationKey, ro);
  for (Layer l : kAllLayers) EXPECT_EQ(silent.spike_count(l), 0u) << layer_name(l);
  EXPECT_GT(r.spike_count(Layer::kInput), 0u);
}

TEST(Run, SingleActiveInputReachesOutput) {
  RunOptions ro;
  ro.noise = false;
  for (std::size_t bit = 0; bit < 8; ++bit) {
    const auto net = build_network(1, {}, 1);
    codec::StimulusPlan plan;
    plan.window_ms = kWindow;
    plan.amplitude_pa.assign(8, 0.0);
    plan.amplitude_pa[bit] = codec::kDefaultOnCurrentPa;
    const auto r = run(net, plan, kWindow, ro);
    const auto& l3 = r.layer(Layer::kOutput);
    for (std::size_t n = 0; n < 8; ++n) {
      if (n == bit) {
        EXPECT_GE(l3[n].size(), 1u);
      } else {
        EXPECT_EQ(l3[n].size(), 0u);
      }
    }
  }
}

TEST(Run, ShapeMismatch) {
  const auto net = build_network(2, {}, 1);
  EXPECT_THROW(run(net, codec::encode_bytes(Bytes{1}, Bytes{0}, kWindow), kWindow), ShapeError);
  RunOptions ro;
  ro.teaching.assign(3, SpikeTrain::empty(kWindow));
  EXPECT_THROW(run(net, codec::encode_bytes(Bytes{1, 2}, Bytes{0}, kWindow), kWindow, ro),
               ShapeError);
}

TEST(Run, Deterministic) {
  const Bytes msg = to_bytes("determinism");
  const auto a = run_bytes(msg);
  const auto b = run_bytes(msg);
  for (Layer l : kAllLayers) EXPECT_EQ(a.layer(l), b.layer(l));
  EXPECT_EQ(a.final_l2l3_weights, b.final_l2l3_weights);
  const auto c = run_bytes(msg, {}, 43);
  EXPECT_NE(a.layer(Layer::kNoise), c.layer(Layer::kNoise));
}

TEST(Run, RefractoryAndBoundsRespected) {
  const auto r = run_bytes(to_bytes("refractory check"));
  for (Layer l : {Layer::kInput, Layer::kHidden, Layer::kOutput, Layer::kInhibition}) {
    for (const auto& tr : r.layer(l)) {
      const auto& t = tr.times();
      for (std::size_t k = 1; k < t.size(); ++k) ASSERT_GE(t[k] - t[k - 1], 2.0 - 1e-9);
    }
  }
  for (double w : r.final_l2l3_weights) {
    EXPECT_GE(w, 400.0);
    EXPECT_LE(w, 900.0);
  }
}

TEST(Run, Causality) {
  std::mt19937 gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    Bytes msg(1 + gen() % 8);
    for (auto& b : msg) b = static_cast<std::uint8_t>(gen());
    const auto r = run_bytes(msg, {}, 100 + trial);
    const double delay = 1.0;
    const double first_l2_source =
        std::min(earliest(r.layer(Layer::kInput)), earliest(r.layer(Layer::kNoise)));
    EXPECT_GE(earliest(r.layer(Layer::kHidden)), first_l2_source + delay - 1e-9);
    EXPECT_GE(earliest(r.layer(Layer::kOutput)), earliest(r.layer(Layer::kHidden)) + delay - 1e-9);
    EXPECT_GE(earliest(r.layer(Layer::kInhibition)),
              earliest(r.layer(Layer::kOutput)) + delay - 1e-9);
  }
}

TEST(Run, InhibitionNeverIncreasesHiddenActivity) {
  std::mt19937 gen(77);
  for (int trial = 0; trial < 20; ++trial) {
    Bytes msg(1 + gen() % 16);
    for (auto& b : msg) b = static_cast<std::uint8_t>(gen());
    RunOptions with, without;
    without.lateral_inhibition = false;
    const auto a = run_bytes(msg, with, 500 + trial);
    const auto b = run_bytes(msg, without, 500 + trial);
    EXPECT_LE(a.spike_count(Layer::kHidden), b.spike_count(Layer::kHidden));
  }
}

TEST(Run, ReportCorrectionShiftsEarlier) {
  RunOptions plain, corrected;
  corrected.apply_report_correction = true;
  const Bytes msg = to_bytes("shift");
  const auto a = run_bytes(msg, plain);
  const auto b = run_bytes(msg, corrected);
  const auto& l3a = a.layer(Layer::kOutput);
  const auto& l3b = b.layer(Layer::kOutput);
  for (std::size_t n = 0; n < l3a.size(); ++n) EXPECT_EQ(l3a[n].shifted_earlier(13.0), l3b[n]);
}

TEST(Run, EveryByteSurvivesDefaultNetwork) {
  for (int v = 0; v < 256; ++v) {
    const Bytes data{static_cast<std::uint8_t>(v)};
    const auto r = run_bytes(data, {}, 9000 + v);
    ASSERT_EQ(codec::decode_spikes(r.layer(Layer::kOutput), codec::kDefaultObfuscationKey), data)
        << v;
  }
}

TEST(Run, NoiseRobustnessSample) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Bytes msg(1 + gen() % 64);
    for (auto& b : msg) b = static_cast<std::uint8_t>(gen());
    const auto r = run_bytes(msg, {}, gen());
    ASSERT_EQ(codec::decode_spikes(r.layer(Layer::kOutput), codec::kDefaultObfuscationKey), msg);
  }
}

TEST(Raster, CsvUsesGlobalIds) {
  const auto net = build_network(1, {}, 1);
  const auto r = run(net, codec::encode_bytes(Bytes{0xff}, Bytes{0}, kWindow), kWindow);
  std::stringstream ss;
  const std::array<Layer, 1> l3 = {Layer::kOutput};
  write_raster_csv(ss, net.topology(), r, l3);
  const auto table = read_spikes_csv(ss);
  ASSERT_FALSE(table.by_neuron.empty());
  for (const auto& [id, t] : table.by_neuron) {
    EXPECT_GE(id, 16u);
    EXPECT_LT(id, 24u);
  }
}

TEST(Raster, SvgHasFourPanels) {
  const Bytes msg = to_bytes("initializers.initFileServer.initFileServer");
  const auto net = build_network(msg.size(), {}, 42);
  const auto r = run(net, codec::encode_bytes(msg, codec::kDefaultObfuscationKey, 220.0), 220.0);
  std::stringstream ss;
  write_raster_svg(ss, r, kRasterPanels, "a < b & c");
  const std::string svg = ss.str();
  for (const char* id : {"panel-L1", "panel-L2", "panel-L3", "panel-noise"})
    EXPECT_NE(svg.find(id), std::string::npos) << id;
  EXPECT_EQ(svg.find("panel-LI"), std::string::npos);
  EXPECT_NE(svg.find("a &lt; b &amp; c"), std::string::npos);
  std::size_t panels = 0;
  for (auto p = svg.find("class=\"panel\""); p != std::string::npos;
       p = svg.find("class=\"panel\"", p + 1))
    ++panels;
  EXPECT_EQ(panels, 4u);
}

}  // namespace
}  // namespace spikecrypt::snn
