// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "spikecrypt/codec.hpp"
#include "spikecrypt/error.hpp"

namespace spikecrypt::codec {
namespace {

SpikeTrain train_with(std::size_t count, double window = 200.0) {
  std::vector<double> t;
  for (std::size_t k = 0; k < count; ++k) t.push_back(10.0 + 5.0 * static_cast<double>(k));
  return SpikeTrain(t, window);
}

TEST(Xor, BasicIdentities) {
  const Bytes zero{0x00};
  EXPECT_EQ(xor_bytes(Bytes{0x4D}, zero), Bytes{0x4D});
  EXPECT_EQ(xor_bytes(Bytes{0x5a}, Bytes{0x5a}), Bytes{0x00});
  EXPECT_THROW(xor_bytes(Bytes{1}, Bytes{}), ValidationError);
  EXPECT_EQ(xor_bytes(Bytes{1, 2, 3}, Bytes{1, 2}), (Bytes{0, 0, 2}));
}

TEST(Xor, Involution) {
  std::mt19937 gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    Bytes d(gen() % 40), k(1 + gen() % 7);
    for (auto& b : d) b = static_cast<std::uint8_t>(gen());
    for (auto& b : k) b = static_cast<std::uint8_t>(gen());
    ASSERT_EQ(xor_bytes(xor_bytes(d, k), k), d);
  }
}

TEST(Encode, AsciiSeventySeven) {
  const auto plan = encode_bytes(Bytes{77}, Bytes{0x00}, 200.0);
  EXPECT_EQ(plan.neuron_count(), 8u);
  EXPECT_EQ(plan.active_neurons(), (std::vector<std::size_t>{1, 4, 5, 7}));
  for (std::size_t n : {1, 4, 5, 7}) EXPECT_EQ(plan.amplitude_pa[n], kDefaultOnCurrentPa);
  EXPECT_EQ(plan.amplitude_pa[0], 0.0);
}

TEST(Encode, AllSilentAndAllDriven) {
  EXPECT_TRUE(encode_bytes(Bytes{0x00}, Bytes{0x00}, 200.0).active_neurons().empty());
  EXPECT_EQ(encode_bytes(Bytes{0xff}, Bytes{0x00}, 200.0).active_neurons().size(), 8u);
}

TEST(Encode, InjectivePerKey) {
  const Bytes key{0x3c};
  std::set<std::vector<std::size_t>> seen;
  for (int b = 0; b < 256; ++b)
    seen.insert(encode_bytes(Bytes{static_cast<std::uint8_t>(b)}, key, 200.0).active_neurons());
  EXPECT_EQ(seen.size(), 256u);
}

TEST(Encode, AmplitudesAreBinary) {
  const auto plan = encode_bytes(to_bytes("hello"), kDefaultObfuscationKey, 200.0, 900.0);
  EXPECT_EQ(plan.neuron_count(), 40u);
  for (double a : plan.amplitude_pa) EXPECT_TRUE(a == 0.0 || a == 900.0);
}

TEST(Decode, CountsToByte) {
  std::vector<SpikeTrain> trains;
  for (std::size_t c : {0, 5, 0, 0, 6, 4, 0, 7}) trains.push_back(train_with(c));
  EXPECT_EQ(decode_spikes(trains, Bytes{0x00}, 1), Bytes{0x4D});
}

TEST(Decode, EmptyTrainsGiveZero) {
  std::vector<SpikeTrain> trains(8, SpikeTrain::empty(200.0));
  EXPECT_EQ(decode_spikes(trains, Bytes{0x00}), Bytes{0x00});
}

TEST(Decode, ShapeChecked) {
  std::vector<SpikeTrain> trains(7, SpikeTrain::empty(200.0));
  EXPECT_THROW(decode_spikes(trains, Bytes{0x00}), ShapeError);
}

TEST(Decode, MonotoneInThreshold) {
  std::mt19937 gen(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SpikeTrain> trains;
    for (int n = 0; n < 16; ++n) trains.push_back(train_with(gen() % 6));
    for (std::size_t theta = 1; theta < 6; ++theta) {
      const Bytes lo = decode_spikes(trains, Bytes{0x00}, theta);
      const Bytes hi = decode_spikes(trains, Bytes{0x00}, theta + 1);
      for (std::size_t i = 0; i < lo.size(); ++i) ASSERT_EQ(hi[i] & ~lo[i], 0);
    }
  }
}

// An identity-behaving channel: every driven neuron yields a spike.
TEST(Codec, IdentityChannelRoundtrip) {
  std::mt19937 gen(9);
  for (int trial = 0; trial < 100; ++trial) {
    Bytes data(gen() % 20), key(1 + gen() % 4);
    for (auto& b : data) b = static_cast<std::uint8_t>(gen());
    for (auto& b : key) b = static_cast<std::uint8_t>(gen());
    const auto plan = encode_bytes(data, key, 200.0);
    std::vector<SpikeTrain> trains;
    for (double a : plan.amplitude_pa) trains.push_back(train_with(a > 0 ? 3 : 0));
    ASSERT_EQ(decode_spikes(trains, key), data);
  }
}

TEST(SpikeTrainType, Invariants) {
  EXPECT_THROW(SpikeTrain({2.0, 1.0}, 10.0), ValidationError);
  EXPECT_THROW(SpikeTrain({1.0, 1.0}, 10.0), ValidationError);
  EXPECT_THROW(SpikeTrain({10.0}, 10.0), ValidationError);
  EXPECT_THROW(SpikeTrain({-0.1}, 10.0), ValidationError);
  const SpikeTrain t({1.0, 5.0}, 200.0);
  EXPECT_DOUBLE_EQ(t.rate_hz(), 10.0);
  EXPECT_EQ(t.shifted_earlier(2.0).times(), std::vector<double>{3.0});
}

TEST(SpikeCsv, Roundtrip) {
  std::vector<SpikeTrain> trains = {SpikeTrain({0.1, 2.5}, 20.0), SpikeTrain::empty(20.0),
                                    SpikeTrain({19.9}, 20.0)};
  std::stringstream ss;
  write_spikes_csv(ss, trains, 10);
  EXPECT_EQ(ss.str(), "neuron_id,time_ms\n10,0.1\n10,2.5\n12,19.9\n");
  const SpikeTable table = read_spikes_csv(ss);
  EXPECT_EQ(table.by_neuron.size(), 2u);
  EXPECT_EQ(table.by_neuron.at(10), (std::vector<double>{0.1, 2.5}));
  EXPECT_EQ(table.train(12, 20.0), trains[2]);
  EXPECT_EQ(table.train(11, 20.0), trains[1]);
  EXPECT_EQ(table.merged(), (std::vector<double>{0.1, 2.5, 19.9}));
}

TEST(SpikeCsv, MalformedRejected) {
  for (const char* text : {"id,time\n1,2\n", "neuron_id,time_ms\n1\n",
                           "neuron_id,time_ms\nx,2\n", "neuron_id,time_ms\n1,abc\n"}) {
    std::stringstream ss(text);
    EXPECT_THROW(read_spikes_csv(ss), ValidationError) << text;
  }
  std::stringstream header_only("neuron_id,time_ms\n"), empty("");
  EXPECT_TRUE(read_spikes_csv(header_only).by_neuron.empty());
  EXPECT_TRUE(read_spikes_csv(empty).by_neuron.empty());
}

}  // namespace
}  // namespace spikecrypt::codec
