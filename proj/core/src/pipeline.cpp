// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/pipeline.hpp"

#include "spikecrypt/codec.hpp"

namespace spikecrypt {

PipelineResult transmit(std::span<const std::uint8_t> ciphertext, const PipelineOptions& options) {
  PipelineResult out;
  out.ciphertext.assign(ciphertext.begin(), ciphertext.end());
  snn::Network net = snn::build_network(ciphertext.size(), options.config, options.seed);
  if (!options.l2l3_weights.empty()) net = net.with_l2l3_weights(options.l2l3_weights);
  const auto plan =
      codec::encode_bytes(ciphertext, options.obfuscation_key, options.window_ms, options.config.i_on_pa);
  snn::RunOptions ro;
  ro.noise = options.noise;
  ro.stdp = options.stdp;
  out.simulation = snn::run(net, plan, options.window_ms, ro);
  out.decoded_ciphertext = codec::decode_spikes(out.simulation.layer(snn::Layer::kOutput),
                                                options.obfuscation_key, options.theta_spk);
  out.ciphertext_intact = out.decoded_ciphertext == out.ciphertext;
  return out;
}

PipelineResult run_pipeline(std::span<const std::uint8_t> plaintext, const cipher::CipherKey& key,
                            const PipelineOptions& options, RandomSource& rng) {
  const Bytes ct = cipher::encrypt(plaintext, key, rng);
  PipelineResult out = transmit(ct, options);
  out.recovered = cipher::decrypt(out.decoded_ciphertext, key);
  return out;
}

}  // namespace spikecrypt
