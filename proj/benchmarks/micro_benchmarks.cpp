// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "spikecrypt/cipher/keys.hpp"
#include "spikecrypt/lif.hpp"
#include "spikecrypt/metrics.hpp"
#include "spikecrypt/network.hpp"
#include "spikecrypt/pipeline.hpp"

namespace sc = spikecrypt;

namespace {

const sc::Bytes& sample() {
  static const sc::Bytes s = sc::to_bytes("initializers.initFileServer.initFileServer");
  return s;
}

void cycle(benchmark::State& state, sc::cipher::Algorithm algo) {
  sc::SeededRandom rng(1);
  const auto key = sc::cipher::generate_key({algo, 2048, false}, rng);
  for (auto _ : state) {
    auto ct = sc::cipher::encrypt(sample(), key, rng);
    benchmark::DoNotOptimize(sc::cipher::decrypt(ct, key));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * sample().size()));
}

void BM_SDesCycle(benchmark::State& s) { cycle(s, sc::cipher::Algorithm::kSDes); }
void BM_AesCycle(benchmark::State& s) { cycle(s, sc::cipher::Algorithm::kAes128); }
void BM_RsaCycle(benchmark::State& s) { cycle(s, sc::cipher::Algorithm::kRsa); }
BENCHMARK(BM_SDesCycle);
BENCHMARK(BM_AesCycle);
BENCHMARK(BM_RsaCycle)->Unit(benchmark::kMillisecond);

void BM_AesBlock(benchmark::State& state) {
  const sc::cipher::Aes128 aes(sc::cipher::Aes128Key(sc::Bytes(16, 7)));
  sc::cipher::Block b{};
  for (auto _ : state) {
    b = aes.encrypt_block(b);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_AesBlock);

void BM_LifNeuron(benchmark::State& state) {
  const sc::lif::LifParams p;
  for (auto _ : state) benchmark::DoNotOptimize(sc::lif::simulate_neuron(p, 1500.0, 200.0, 0.1));
}
BENCHMARK(BM_LifNeuron);

void BM_NetworkRun(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  sc::Bytes msg(len, 0x5a);
  const auto net = sc::snn::build_network(len, {}, 42);
  const auto plan = sc::codec::encode_bytes(msg, sc::codec::kDefaultObfuscationKey, 200.0);
  for (auto _ : state) benchmark::DoNotOptimize(sc::snn::run(net, plan, 200.0));
  state.SetLabel(std::to_string(len) + " bytes");
}
BENCHMARK(BM_NetworkRun)->Arg(1)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  sc::SeededRandom rng(3);
  const auto key = sc::cipher::generate_key({sc::cipher::Algorithm::kAes128, 2048, false}, rng);
  const sc::PipelineOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(sc::run_pipeline(sample(), key, opts, rng));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

void BM_VictorPurpura(benchmark::State& state) {
  std::vector<double> a, b;
  for (int k = 0; k < state.range(0); ++k) {
    a.push_back(k * 2.0);
    b.push_back(k * 2.0 + 0.3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(sc::metrics::vp_distance(a, b, 1.0));
}
BENCHMARK(BM_VictorPurpura)->Arg(10)->Arg(100);

void BM_VanRossum(benchmark::State& state) {
  std::vector<double> a, b;
  for (int k = 0; k < state.range(0); ++k) {
    a.push_back(k * 2.0);
    b.push_back(k * 2.0 + 0.3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(sc::metrics::vr_distance(a, b, 1.0));
}
BENCHMARK(BM_VanRossum)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
