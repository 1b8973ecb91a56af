// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <functional>
#include <map>
#include <type_traits>

#include <json.hpp>

#include "spikecrypt/error.hpp"
#include "spikecrypt/network.hpp"

namespace spikecrypt::snn {

std::string_view layer_name(Layer l) {
  switch (l) {
    case Layer::kInput: return "L1";
    case Layer::kHidden: return "L2";
    case Layer::kOutput: return "L3";
    case Layer::kInhibition: return "LI";
    case Layer::kNoise: return "noise";
    case Layer::kTeaching: return "teaching";
  }
  return "?";
}

std::string_view connectivity_name(Connectivity c) {
  switch (c) {
    case Connectivity::kOneToOne: return "one_to_one";
    case Connectivity::kAllToAll: return "all_to_all";
    case Connectivity::kRoundRobin: return "round_robin";
  }
  return "?";
}

Connectivity parse_connectivity(std::string_view name) {
  if (name == "one_to_one") return Connectivity::kOneToOne;
  if (name == "all_to_all") return Connectivity::kAllToAll;
  if (name == "round_robin") return Connectivity::kRoundRobin;
  throw ConfigError("unknown connectivity '" + std::string(name) + "'");
}

void NetworkConfig::validate() const {
  neuron.validate();
  stdp.validate();
  if (!(dt_ms > 0.0)) throw ConfigError("dt_ms must be positive");
  if (!(delay_ms >= dt_ms)) throw ConfigError("delay_ms must be at least one time step");
  if (!(weight_l2l3_min < weight_l2l3_max)) {
    throw ConfigError("weight_l2l3_min must be below weight_l2l3_max");
  }
  if (!(weight_l2l3_init >= weight_l2l3_min && weight_l2l3_init <= weight_l2l3_max)) {
    throw ConfigError("weight_l2l3_init must lie within [weight_l2l3_min, weight_l2l3_max]");
  }
  if (!(noise_rate_hz >= 0.0)) throw ConfigError("noise_rate_hz must be non-negative");
  if (!(report_delay_correction_ms >= 0.0)) {
    throw ConfigError("report_delay_correction_ms must be non-negative");
  }
  if (!(i_on_pa >= 0.0)) throw ConfigError("i_on_pa must be non-negative");
  if (!(teaching_pulse_pa > 0.0)) throw ConfigError("teaching_pulse_pa must be positive");
  if (l2l3 == Connectivity::kRoundRobin) {
    throw ConfigError("l2l3_connectivity must be one_to_one or all_to_all");
  }
  for (double w : {weight_l1l2, weight_lil2, weight_l3li, weight_noise}) {
    if (!std::isfinite(w)) throw ConfigError("weights must be finite");
  }
}

namespace {

using nlohmann::json;

struct Field {
  std::function<json(const NetworkConfig&)> get;
  std::function<void(NetworkConfig&, const json&)> set;
};

template <typename T>
Field member(T NetworkConfig::*m) {
  return {[m](const NetworkConfig& c) { return json(c.*m); },
          [m](NetworkConfig& c, const json& v) {
            if constexpr (std::is_unsigned_v<T>) {
              if (!v.is_number_unsigned()) throw ConfigError("expected a non-negative integer");
            } else {
              if (!v.is_number()) throw ConfigError("expected a number");
            }
            c.*m = v.get<T>();
          }};
}

template <typename S, typename T>
Field nested(S NetworkConfig::*outer, T S::*inner) {
  return {[=](const NetworkConfig& c) { return json((c.*outer).*inner); },
          [=](NetworkConfig& c, const json& v) {
            if (!v.is_number()) throw ConfigError("expected a number");
            (c.*outer).*inner = v.get<T>();
          }};
}

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = {
      {"t_ref", nested(&NetworkConfig::neuron, &lif::LifParams::t_ref)},
      {"V_th", nested(&NetworkConfig::neuron, &lif::LifParams::v_th)},
      {"C_m", nested(&NetworkConfig::neuron, &lif::LifParams::c_m)},
      {"tau_m", nested(&NetworkConfig::neuron, &lif::LifParams::tau_m)},
      {"tau_syn", nested(&NetworkConfig::neuron, &lif::LifParams::tau_syn)},
      {"E_L", nested(&NetworkConfig::neuron, &lif::LifParams::v_leak)},
      {"V_reset", nested(&NetworkConfig::neuron, &lif::LifParams::v_reset)},
      {"weight_l1l2", member(&NetworkConfig::weight_l1l2)},
      {"weight_l2l3_min", member(&NetworkConfig::weight_l2l3_min)},
      {"weight_l2l3_max", member(&NetworkConfig::weight_l2l3_max)},
      {"weight_l2l3_init", member(&NetworkConfig::weight_l2l3_init)},
      {"weight_lil2", member(&NetworkConfig::weight_lil2)},
      {"weight_l3li", member(&NetworkConfig::weight_l3li)},
      {"weight_noise", member(&NetworkConfig::weight_noise)},
      {"noise_rate_hz", member(&NetworkConfig::noise_rate_hz)},
      {"delay_ms", member(&NetworkConfig::delay_ms)},
      {"report_delay_correction_ms", member(&NetworkConfig::report_delay_correction_ms)},
      {"dt_ms", member(&NetworkConfig::dt_ms)},
      {"i_on_pa", member(&NetworkConfig::i_on_pa)},
      {"teaching_pulse_pa", member(&NetworkConfig::teaching_pulse_pa)},
      {"hidden_size", member(&NetworkConfig::hidden_size)},
      {"noise_neurons", member(&NetworkConfig::noise_neurons)},
      {"l2l3_connectivity",
       {[](const NetworkConfig& c) { return json(std::string(connectivity_name(c.l2l3))); },
        [](NetworkConfig& c, const json& v) { c.l2l3 = parse_connectivity(v.get<std::string>()); }}},
      {"stdp_a_plus", nested(&NetworkConfig::stdp, &plasticity::StdpParams::a_plus)},
      {"stdp_a_minus", nested(&NetworkConfig::stdp, &plasticity::StdpParams::a_minus)},
      {"stdp_tau_plus", nested(&NetworkConfig::stdp, &plasticity::StdpParams::tau_plus)},
      {"stdp_tau_minus", nested(&NetworkConfig::stdp, &plasticity::StdpParams::tau_minus)},
  };
  return table;
}

}  // namespace

NetworkConfig config_from_json(std::string_view text, const NetworkConfig& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("network config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("network config must be a JSON object");
  NetworkConfig cfg = base;
  for (const auto& [key, value] : doc.items()) {
    auto it = fields().find(key);
    if (it == fields().end()) throw ConfigError("unknown network config key '" + key + "'");
    try {
      it->second.set(cfg, value);
    } catch (const json::exception& e) {
      throw ConfigError("bad value for '" + key + "': " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("bad value for '" + key + "': " + e.what());
    }
  }
  cfg.stdp.w_min = cfg.weight_l2l3_min;
  cfg.stdp.w_max = cfg.weight_l2l3_max;
  cfg.validate();
  return cfg;
}

std::string config_to_json(const NetworkConfig& cfg) {
  json doc = json::object();
  for (const auto& [key, field] : fields()) doc[key] = field.get(cfg);
  return doc.dump(2);
}

}  // namespace spikecrypt::snn
