// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spikecrypt/bench.hpp"
#include "spikecrypt/cipher/keys.hpp"
#include "spikecrypt/error.hpp"
#include "spikecrypt/metrics.hpp"
#include "spikecrypt/pipeline.hpp"
#include "spikecrypt/random.hpp"
#include "spikecrypt/raster.hpp"
#include "spikecrypt/training.hpp"

namespace spikecrypt::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;

// Raised when training ends without meeting its threshold.
class TrainingFailure : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw ValidationError("failed writing '" + path + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

std::string lowercase_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

// Options shared by every command.
struct Common {
  std::string seed_text = std::to_string(kDefaultSeed);
  std::string config_path;
  std::string manifest_path;
};

void add_common(CLI::App* app, Common& c, bool with_config) {
  app->add_option("--seed", c.seed_text, "Seed as an unsigned integer, or 'random'")
      ->capture_default_str();
  if (with_config) {
    app->add_option("--config", c.config_path, "Network configuration JSON")
        ->check(CLI::ExistingFile);
  }
  app->add_option("--manifest", c.manifest_path, "Where to write the run manifest JSON");
}

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "random") return SystemRandom().next_u64();
  std::uint64_t v = 0;
  const char* b = text.data();
  auto r = std::from_chars(b, b + text.size(), v);
  if (text.empty() || r.ec != std::errc{} || r.ptr != b + text.size()) {
    throw ValidationError("--seed must be an unsigned integer or 'random', got '" + text + "'");
  }
  return v;
}

// Collects the reproducibility record of one invocation.
class Manifest {
 public:
  Manifest(std::string command, const Common& c, std::uint64_t seed) : common_(c) {
    doc_["command"] = std::move(command);
    doc_["seed"] = seed;
    doc_["config_path"] = c.config_path.empty() ? json(nullptr) : json(c.config_path);
    doc_["inputs"] = json::array();
    doc_["outputs"] = json::array();
    doc_["version"] = "0.1.0";
  }

  void input(const std::string& path) {
    if (!path.empty()) doc_["inputs"].push_back(path);
  }
  void output(const std::string& path) {
    if (path.empty()) return;
    doc_["outputs"].push_back(path);
    if (primary_.empty()) primary_ = path;
  }
  json& operator[](const char* key) { return doc_[key]; }

  void write() {
    std::string path = common_.manifest_path;
    if (path.empty() && !primary_.empty()) path = primary_ + ".manifest.json";
    if (path.empty()) return;
    doc_["timestamp"] = utc_timestamp();
    write_file(path, doc_.dump(2) + "\n");
  }

 private:
  const Common& common_;
  json doc_;
  std::string primary_;
};

snn::NetworkConfig load_config(const Common& c) {
  snn::NetworkConfig cfg;
  if (!c.config_path.empty()) cfg = snn::config_from_json(read_file(c.config_path), cfg);
  return cfg;
}

json layer_ranges(const snn::NetworkTopology& topo) {
  json j = json::object();
  for (snn::Layer l : snn::kAllLayers) {
    const auto& r = topo.range(l);
    j[std::string(snn::layer_name(l))] = {{"first", r.first}, {"size", r.size}};
  }
  return j;
}

json spike_counts(const snn::SimulationResult& sim) {
  json j = json::object();
  for (snn::Layer l : snn::kAllLayers) j[std::string(snn::layer_name(l))] = sim.spike_count(l);
  return j;
}

cipher::CipherKey load_key(const std::string& path, const std::string& algo) {
  cipher::CipherKey key = cipher::key_from_json(read_file(path));
  if (cipher::algorithm_of(key) != cipher::parse_algorithm(algo)) {
    throw ValidationError("key file holds a " +
                          std::string(cipher::algorithm_name(cipher::algorithm_of(key))) +
                          " key but --algo is " + algo);
  }
  return key;
}

// L2 -> L3 weights serialized as explicit (pre, post) synapses.
std::string weights_to_json(const snn::Network& net, const std::vector<double>& weights,
                            const plasticity::TrainResult* result) {
  const auto& topo = net.topology();
  const auto l2 = topo.range(snn::Layer::kHidden);
  const auto l3 = topo.range(snn::Layer::kOutput);
  const bool one = net.l2l3().pattern == snn::Connectivity::kOneToOne;
  json doc;
  doc["connectivity"] = std::string(snn::connectivity_name(net.l2l3().pattern));
  doc["message_len"] = net.message_len();
  json syn = json::array();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const std::size_t pre = one ? k : k / l3.size;
    const std::size_t post = one ? k : k % l3.size;
    syn.push_back({{"pre", l2.first + pre}, {"post", l3.first + post}, {"weight", weights[k]}});
  }
  doc["synapses"] = std::move(syn);
  if (result != nullptr) {
    doc["converged"] = result->converged;
    doc["epochs_run"] = result->epochs_run;
    doc["final_distance"] = result->final_distance;
    doc["epoch_distance"] = result->epoch_distance;
  }
  return doc.dump(2) + "\n";
}

std::vector<double> weights_from_json(const snn::Network& net, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("weights file is not valid JSON: ") + e.what());
  }
  const auto& topo = net.topology();
  const auto l2 = topo.range(snn::Layer::kHidden);
  const auto l3 = topo.range(snn::Layer::kOutput);
  const bool one = net.l2l3().pattern == snn::Connectivity::kOneToOne;
  std::vector<double> w = net.l2l3().weights;
  std::vector<bool> seen(w.size(), false);
  if (!doc.contains("synapses") || !doc["synapses"].is_array()) {
    throw ValidationError("weights file needs a 'synapses' array");
  }
  try {
    for (const auto& s : doc["synapses"]) {
      const auto pre = s.at("pre").get<std::size_t>();
      const auto post = s.at("post").get<std::size_t>();
      const double value = s.at("weight").get<double>();
      if (pre < l2.first || pre >= l2.first + l2.size || post < l3.first ||
          post >= l3.first + l3.size) {
        throw ShapeError("synapse (" + std::to_string(pre) + ", " + std::to_string(post) +
                         ") is not an L2 -> L3 synapse of this network");
      }
      std::size_t k = 0;
      if (one) {
        if (pre - l2.first != post - l3.first) {
          throw ShapeError("one-to-one network has no synapse (" + std::to_string(pre) + ", " +
                           std::to_string(post) + ")");
        }
        k = post - l3.first;
      } else {
        k = (pre - l2.first) * l3.size + (post - l3.first);
      }
      w[k] = value;
      seen[k] = true;
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed synapse entry: ") + e.what());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ShapeError("weights file does not cover every L2 -> L3 synapse");
  }
  return w;
}

std::vector<double> train_times(const SpikeTable& table, std::optional<std::size_t> neuron) {
  if (!neuron) return table.merged();
  auto it = table.by_neuron.find(*neuron);
  return it == table.by_neuron.end() ? std::vector<double>{} : it->second;
}

SpikeTable load_spikes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  return read_spikes_csv(in);
}

std::string fmt_metric(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("undefined");
}

// --- commands -------------------------------------------------------------

struct KeygenArgs {
  std::string algo;
  unsigned bits = 2048;
  std::string out_path;
};

void cmd_keygen(const KeygenArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  SeededRandom rng(seed);
  cipher::KeygenRequest req;
  req.algorithm = cipher::parse_algorithm(a.algo);
  req.rsa_bits = a.bits;
  const std::string text = cipher::key_to_json(cipher::generate_key(req, rng)) + "\n";
  Manifest m("keygen", c, seed);
  m["algorithm"] = a.algo;
  if (req.algorithm == cipher::Algorithm::kRsa) m["rsa_bits"] = a.bits;
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
    m.output(a.out_path);
  }
  m.write();
}

struct CipherArgs {
  std::string algo;
  std::string key_path;
  std::string message;
  std::string in_path;
  std::string hex;
  std::string out_path;
};

void cmd_encrypt(const CipherArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const auto key = load_key(a.key_path, a.algo);
  const Bytes plain = a.in_path.empty() ? to_bytes(a.message) : to_bytes(read_file(a.in_path));
  SeededRandom rng(seed);
  const std::string hex = to_hex(cipher::encrypt(plain, key, rng)) + "\n";
  Manifest m("encrypt", c, seed);
  m["algorithm"] = a.algo;
  m.input(a.key_path);
  m.input(a.in_path);
  if (a.out_path.empty()) {
    out << hex;
  } else {
    write_file(a.out_path, hex);
    m.output(a.out_path);
  }
  m.write();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

void cmd_decrypt(const CipherArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const auto key = load_key(a.key_path, a.algo);
  const std::string hex = a.in_path.empty() ? a.hex : trim(read_file(a.in_path));
  const Bytes plain = cipher::decrypt(from_hex(hex), key);
  Manifest m("decrypt", c, seed);
  m["algorithm"] = a.algo;
  m.input(a.key_path);
  m.input(a.in_path);
  if (a.out_path.empty()) {
    out << to_string(plain) << "\n";
  } else {
    write_file(a.out_path, to_string(plain));
    m.output(a.out_path);
  }
  m.write();
}

struct PipelineArgs {
  std::string algo;
  std::string message;
  std::string in_path;
  std::string key_path;
  unsigned bits = 2048;
  bool noise = true;
  bool stdp = true;
  double window = 200.0;
  std::size_t theta = 1;
  std::string weights_path;
  std::string spikes_path;
  std::string out_path;
  std::optional<double> noise_rate;
};

void cmd_pipeline(const PipelineArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  PipelineOptions opts;
  opts.config = load_config(c);
  if (a.noise_rate) opts.config.noise_rate_hz = *a.noise_rate;
  opts.config.validate();
  opts.window_ms = a.window;
  opts.theta_spk = a.theta;
  opts.noise = a.noise;
  opts.stdp = a.stdp;
  opts.seed = seed;

  SeededRandom rng(seed);
  const cipher::CipherKey key = [&] {
    if (!a.key_path.empty()) return load_key(a.key_path, a.algo);
    cipher::KeygenRequest req;
    req.algorithm = cipher::parse_algorithm(a.algo);
    req.rsa_bits = a.bits;
    return cipher::generate_key(req, rng);
  }();
  const Bytes plain = a.in_path.empty() ? to_bytes(a.message) : to_bytes(read_file(a.in_path));

  // The network shape follows the ciphertext length, so weights are checked after encryption.
  const Bytes ct = cipher::encrypt(plain, key, rng);
  const auto net = snn::build_network(ct.size(), opts.config, seed);
  if (!a.weights_path.empty()) opts.l2l3_weights = weights_from_json(net, read_file(a.weights_path));
  PipelineResult r = transmit(ct, opts);
  r.recovered = cipher::decrypt(r.decoded_ciphertext, key);

  Manifest m("pipeline run", c, seed);
  m["algorithm"] = a.algo;
  m["config"] = json::parse(snn::config_to_json(opts.config));
  m["window_ms"] = a.window;
  m["noise"] = a.noise;
  m["stdp"] = a.stdp;
  m["theta_spk"] = a.theta;
  m["ciphertext_hex"] = to_hex(r.ciphertext);
  m["ciphertext_intact"] = r.ciphertext_intact;
  m["plaintext_recovered"] = r.recovered == plain;
  m["layers"] = layer_ranges(net.topology());
  m["spike_counts"] = spike_counts(r.simulation);
  m.input(a.key_path);
  m.input(a.in_path);
  m.input(a.weights_path);

  // Own fidelity figures for input/output neurons 0 and 1.
  json fidelity = json::object();
  fidelity["vp_q_per_ms"] = 1.0;
  fidelity["vr_tau_ms"] = 1.0;
  const auto& l1 = r.simulation.layer(snn::Layer::kInput);
  const auto& l3 = r.simulation.layer(snn::Layer::kOutput);
  for (std::size_t n = 0; n < 2 && n < l1.size(); ++n) {
    fidelity["n" + std::to_string(n)] = {{"vp", metrics::vp_distance(l1[n], l3[n], 1.0)},
                                         {"vr", metrics::vr_distance(l1[n], l3[n], 1.0)},
                                         {"l1_spikes", l1[n].size()},
                                         {"l3_spikes", l3[n].size()}};
  }
  m["l1_l3_fidelity"] = std::move(fidelity);

  if (!a.spikes_path.empty()) {
    std::ostringstream csv;
    const std::array<snn::Layer, 3> layers = {snn::Layer::kInput, snn::Layer::kHidden,
                                              snn::Layer::kOutput};
    snn::write_raster_csv(csv, net.topology(), r.simulation, layers);
    write_file(a.spikes_path, csv.str());
  }
  if (a.out_path.empty()) {
    out << to_string(r.recovered) << "\n";
  } else {
    write_file(a.out_path, to_string(r.recovered));
    m.output(a.out_path);
  }
  m.output(a.spikes_path);
  m.write();
  if (r.recovered != plain) {
    err << "error: recovered plaintext differs from the input\n";
    throw Error("pipeline did not preserve the plaintext");
  }
}

struct TrainArgs {
  std::string dataset_path;
  std::optional<int> toy_byte;
  std::size_t epochs = 60;
  double threshold = 1.0;
  double learning_rate = 4.0;
  double window = 200.0;
  std::string out_path;
  std::string curve_path;
};

std::vector<plasticity::TrainingExample> load_dataset(const std::string& path,
                                                      const snn::NetworkConfig& cfg,
                                                      double& window, std::size_t& message_len) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("dataset is not valid JSON: ") + e.what());
  }
  std::vector<plasticity::TrainingExample> out;
  try {
    window = doc.value("window_ms", window);
    const Bytes key = from_hex(doc.value("key_hex", std::string("00")));
    const auto& examples = doc.at("examples");
    if (!examples.is_array() || examples.empty()) {
      throw ValidationError("dataset needs a non-empty 'examples' array");
    }
    for (const auto& ex : examples) {
      const Bytes msg = from_hex(ex.at("message_hex").get<std::string>());
      if (out.empty()) {
        message_len = msg.size();
      } else if (msg.size() != message_len) {
        throw ShapeError("every example must have the same message length");
      }
      plasticity::TrainingExample te;
      te.stimulus = codec::encode_bytes(msg, key, window, cfg.i_on_pa);
      for (const auto& times : ex.at("targets")) {
        te.targets.emplace_back(times.get<std::vector<double>>(), window);
      }
      out.push_back(std::move(te));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed dataset: ") + e.what());
  }
  return out;
}

void cmd_train(const TrainArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const snn::NetworkConfig cfg = load_config(c);
  plasticity::TrainOptions opts;
  opts.resume.epochs = a.epochs;
  opts.resume.learning_rate = a.learning_rate;
  opts.resume.offset = 0.05 * a.learning_rate;
  opts.convergence_threshold = a.threshold;
  opts.window_ms = a.window;

  Manifest m("train", c, seed);
  std::optional<snn::Network> net;
  std::vector<plasticity::TrainingExample> dataset;
  if (a.toy_byte) {
    if (*a.toy_byte < 0 || *a.toy_byte > 255) throw ValidationError("--toy expects a byte value");
    auto task = plasticity::make_toy_task(static_cast<std::uint8_t>(*a.toy_byte), cfg, seed, a.window);
    net = task.student;
    dataset = std::move(task.dataset);
    m["toy_byte"] = *a.toy_byte;
    m["teacher_weights"] = task.teacher_weights;
  } else {
    double window = a.window;
    std::size_t len = 0;
    dataset = load_dataset(a.dataset_path, cfg, window, len);
    opts.window_ms = window;
    net = snn::build_network(len, cfg, seed);
    m.input(a.dataset_path);
  }

  const auto result = plasticity::train(*net, dataset, opts);
  out << result.report << "\n";
  m["config"] = json::parse(snn::config_to_json(net->config()));
  m["converged"] = result.converged;
  m["epochs_run"] = result.epochs_run;
  m["epoch_distance"] = result.epoch_distance;
  m["final_distance"] = result.final_distance;
  m["layers"] = layer_ranges(net->topology());

  if (!a.out_path.empty()) {
    write_file(a.out_path, weights_to_json(*net, result.weights, &result));
    m.output(a.out_path);
  } else {
    out << weights_to_json(*net, result.weights, &result);
  }
  if (!a.curve_path.empty()) {
    std::ostringstream csv;
    csv << "epoch,mean_vp_distance\n";
    for (std::size_t e = 0; e < result.epoch_distance.size(); ++e)
      csv << e + 1 << ',' << format_double(result.epoch_distance[e]) << '\n';
    write_file(a.curve_path, csv.str());
    m.output(a.curve_path);
  }
  m.write();
  if (!result.converged) throw TrainingFailure(result.report);
}

struct SimulateArgs {
  double window = 200.0;
  std::string message = std::string(kSampleMessage);
  std::string raster_path;
  bool noise = true;
  bool stdp = true;
  bool correction = false;
  std::string title;
};

void cmd_simulate(const SimulateArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const snn::NetworkConfig cfg = load_config(c);
  const Bytes data = to_bytes(a.message);
  const auto net = snn::build_network(data.size(), cfg, seed);
  const auto plan = codec::encode_bytes(data, codec::kDefaultObfuscationKey, a.window, cfg.i_on_pa);
  snn::RunOptions ro;
  ro.noise = a.noise;
  ro.stdp = a.stdp;
  ro.apply_report_correction = a.correction;
  const auto sim = snn::run(net, plan, a.window, ro);

  Manifest m("simulate", c, seed);
  m["window_ms"] = a.window;
  m["message_len"] = data.size();
  m["noise"] = a.noise;
  m["stdp"] = a.stdp;
  m["report_correction"] = a.correction;
  m["config"] = json::parse(snn::config_to_json(cfg));
  m["layers"] = layer_ranges(net.topology());
  m["spike_counts"] = spike_counts(sim);

  if (!a.raster_path.empty()) {
    const std::string ext = lowercase_extension(a.raster_path);
    std::ostringstream body;
    if (ext == ".csv") {
      snn::write_raster_csv(body, net.topology(), sim);
    } else if (ext == ".svg") {
      const std::string title =
          a.title.empty() ? "Raster over " + format_double(a.window) + " ms" : a.title;
      snn::write_raster_svg(body, sim, snn::kRasterPanels, title);
    } else {
      throw ValidationError("--raster must end in .csv or .svg");
    }
    write_file(a.raster_path, body.str());
    m.output(a.raster_path);
  }
  for (snn::Layer l : snn::kAllLayers)
    out << snn::layer_name(l) << ' ' << sim.spike_count(l) << '\n';
  m.write();
}

struct MetricArgs {
  std::string a_path;
  std::string b_path;
  std::optional<std::size_t> neuron_a;
  std::optional<std::size_t> neuron_b;
  double q = 1.0;
  double tau = 1.0;
  bool sqrt = false;
  std::uint64_t tp = 0, tn = 0, fp = 0, fn = 0;
  bool json_out = false;
  std::string spikes_path;
  double window = 200.0;
  std::string out_path;
  std::string rank_path;
  bool reindex = false;
};

void cmd_metric_pair(const MetricArgs& a, const Common& c, std::ostream& out, bool vp) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const auto ta = train_times(load_spikes(a.a_path), a.neuron_a);
  const auto tb = train_times(load_spikes(a.b_path), a.neuron_b);
  const double d = vp ? metrics::vp_distance(ta, tb, a.q)
                      : metrics::vr_distance(ta, tb, a.tau,
                                             a.sqrt ? metrics::VrReport::kRoot
                                                    : metrics::VrReport::kIntegral);
  out << format_double(d) << "\n";
  Manifest m(vp ? "metrics vp" : "metrics vr", c, seed);
  m.input(a.a_path);
  m.input(a.b_path);
  m[vp ? "q" : "tau"] = vp ? a.q : a.tau;
  m["value"] = d;
  m.write();
}

void cmd_confusion(const MetricArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const auto r = metrics::confusion_metrics({a.tp, a.tn, a.fp, a.fn});
  const std::vector<std::pair<const char*, std::optional<double>>> rows = {
      {"accuracy", r.accuracy}, {"precision", r.precision}, {"recall", r.recall},
      {"specificity", r.specificity}, {"f1", r.f1}, {"fpr", r.fpr},
      {"fnr", r.fnr}, {"wcr", r.wcr}, {"ccr", r.ccr}};
  json j = json::object();
  for (const auto& [name, v] : rows) j[name] = v ? json(*v) : json("undefined");
  if (a.json_out) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : rows) out << name << ' ' << fmt_metric(v) << '\n';
  }
  Manifest m("metrics confusion", c, seed);
  m["counts"] = {{"tp", a.tp}, {"tn", a.tn}, {"fp", a.fp}, {"fn", a.fn}};
  m["metrics"] = j;
  m.write();
}

void cmd_vp_matrix(const MetricArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const SpikeTable table = load_spikes(a.spikes_path);
  std::vector<SpikeTrain> trains;
  std::vector<std::size_t> labels;
  std::vector<double> rates;
  for (const auto& [id, times] : table.by_neuron) {
    trains.emplace_back(times, a.window);
    labels.push_back(id);
    rates.push_back(trains.back().rate_hz());
  }
  const auto d = metrics::vp_distance_matrix(trains, a.q, labels);
  std::vector<double> values(d.size() * d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) values[i * d.size() + j] = d.at(i, j);

  std::ostringstream body;
  metrics::write_matrix_csv(body, d.labels(), values);
  Manifest m("metrics vp-matrix", c, seed);
  m.input(a.spikes_path);
  m["q"] = a.q;
  m["neurons"] = labels.size();
  if (a.out_path.empty()) {
    out << body.str();
  } else {
    write_file(a.out_path, body.str());
    m.output(a.out_path);
  }
  if (!a.rank_path.empty()) {
    auto rank = metrics::rank_order_matrix(d);
    if (a.reindex) rank = metrics::reindex_by_firing_rate(rank, rates);
    std::ostringstream rb;
    metrics::write_matrix_csv(rb, rank.labels, rank.values);
    write_file(a.rank_path, rb.str());
    m.output(a.rank_path);
  }
  m.write();
}

struct BenchArgs {
  std::string payload = std::string(kSampleMessage);
  std::size_t iterations = bench::kDefaultIterations;
  std::size_t warmup = bench::kDefaultWarmup;
  std::string format = "text";
  std::string out_path;
  std::string baseline = "AES-128";
  unsigned bits = 2048;
  bool snn = false;
};

void cmd_bench(const BenchArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed_text);
  const snn::NetworkConfig cfg = load_config(c);
  SeededRandom keyrng(seed);
  auto make_key = [&](cipher::Algorithm alg) {
    cipher::KeygenRequest req;
    req.algorithm = alg;
    req.rsa_bits = a.bits;
    return cipher::generate_key(req, keyrng);
  };
  const auto sdes = make_key(cipher::Algorithm::kSDes);
  const auto aes = make_key(cipher::Algorithm::kAes128);
  const auto rsa = make_key(cipher::Algorithm::kRsa);
  auto enc_rng = std::make_shared<SeededRandom>(seed ^ 0x5eedULL);

  auto spec_for = [&](std::string name, std::string variant, std::string key_size,
                      std::string rounds, const cipher::CipherKey& key) {
    bench::AlgorithmSpec s;
    s.name = std::move(name);
    s.variant = std::move(variant);
    s.key_size = std::move(key_size);
    s.rounds = std::move(rounds);
    s.encrypt = [&key, enc_rng](std::span<const std::uint8_t> p) {
      return cipher::encrypt(p, key, *enc_rng);
    };
    s.decrypt = [&key](std::span<const std::uint8_t> ct) { return cipher::decrypt(ct, key); };
    return s;
  };
  std::vector<bench::AlgorithmSpec> algos;
  algos.push_back(spec_for("S-DES", "spikecrypt", "10 bits", "2", sdes));
  algos.push_back(spec_for("AES-128", "spikecrypt ECB/PKCS#7", "128 bits", "10", aes));
  algos.push_back(spec_for("RSA-" + std::to_string(a.bits), "spikecrypt OAEP-SHA256",
                           std::to_string(a.bits) + " bits", "1", rsa));
  if (a.snn) {
    PipelineOptions po;
    po.config = cfg;
    po.seed = seed;
    bench::AlgorithmSpec s;
    s.name = "SNN transport";
    s.variant = "S-DES + six-layer network";
    s.key_size = "10 bits + synaptic weights";
    s.rounds = "spike cycles (" + format_double(po.window_ms) + " ms window)";
    s.encrypt = [&sdes, enc_rng, po](std::span<const std::uint8_t> p) {
      return transmit(cipher::encrypt(p, sdes, *enc_rng), po).decoded_ciphertext;
    };
    s.decrypt = [&sdes](std::span<const std::uint8_t> ct) { return cipher::decrypt(ct, sdes); };
    algos.insert(algos.begin(), std::move(s));
  }
  std::size_t baseline = algos.size();
  for (std::size_t k = 0; k < algos.size(); ++k)
    if (algos[k].name == a.baseline) baseline = k;
  if (baseline == algos.size()) throw ValidationError("unknown baseline '" + a.baseline + "'");

  const Bytes payload = to_bytes(a.payload);
  const auto table = bench::compare(algos, payload, a.iterations, a.warmup, baseline);
  std::ostringstream body;
  if (a.format == "csv") {
    bench::write_table_csv(body, table);
  } else if (a.format == "json") {
    body << bench::table_to_json(table) << "\n";
  } else {
    bench::write_table_text(body, table);
  }
  Manifest m("bench", c, seed);
  m["iterations"] = a.iterations;
  m["warmup"] = a.warmup;
  m["payload_bytes"] = payload.size();
  m["baseline"] = a.baseline;
  if (a.out_path.empty()) {
    out << body.str();
  } else {
    write_file(a.out_path, body.str());
    m.output(a.out_path);
  }
  m.write();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"spikecrypt: classical ciphers carried over a spiking neural network"};
  app.name("spikecrypt");
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  std::function<void()> action;
  const std::vector<std::string> algos = {"sdes", "aes", "rsa"};

  // keygen
  Common kc;
  KeygenArgs ka;
  auto* keygen = app.add_subcommand("keygen", "Generate a cipher key as JSON");
  keygen->add_option("--algo", ka.algo, "Cipher")->required()->check(CLI::IsMember(algos));
  keygen->add_option("--bits", ka.bits, "RSA modulus size")->capture_default_str();
  keygen->add_option("--out", ka.out_path, "Key file (stdout if omitted)");
  add_common(keygen, kc, false);
  keygen->callback([&] { action = [&] { cmd_keygen(ka, kc, out); }; });

  // encrypt / decrypt
  Common ec, dc;
  CipherArgs ea, da;
  auto* enc = app.add_subcommand("encrypt", "Encrypt a message; prints hex ciphertext");
  enc->add_option("--algo", ea.algo, "Cipher")->required()->check(CLI::IsMember(algos));
  enc->add_option("--key", ea.key_path, "Key JSON")->required()->check(CLI::ExistingFile);
  auto* enc_msg = enc->add_option("--message", ea.message, "Plaintext");
  auto* enc_in = enc->add_option("--in", ea.in_path, "Plaintext file")->check(CLI::ExistingFile);
  enc_msg->excludes(enc_in);
  enc->add_option("--out", ea.out_path, "Ciphertext hex file");
  add_common(enc, ec, false);
  enc->callback([&] {
    if (enc_msg->count() + enc_in->count() == 0) throw CLI::RequiredError("--message or --in");
    action = [&] { cmd_encrypt(ea, ec, out); };
  });

  auto* dec = app.add_subcommand("decrypt", "Decrypt hex ciphertext");
  dec->add_option("--algo", da.algo, "Cipher")->required()->check(CLI::IsMember(algos));
  dec->add_option("--key", da.key_path, "Key JSON")->required()->check(CLI::ExistingFile);
  auto* dec_hex = dec->add_option("--hex", da.hex, "Ciphertext as hex");
  auto* dec_in = dec->add_option("--in", da.in_path, "File holding hex ciphertext")
                     ->check(CLI::ExistingFile);
  dec_hex->excludes(dec_in);
  dec->add_option("--out", da.out_path, "Plaintext file");
  add_common(dec, dc, false);
  dec->callback([&] {
    if (dec_hex->count() + dec_in->count() == 0) throw CLI::RequiredError("--hex or --in");
    action = [&] { cmd_decrypt(da, dc, out); };
  });

  // pipeline run
  Common pc;
  PipelineArgs pa;
  auto* pipeline = app.add_subcommand("pipeline", "Cipher -> spikes -> network -> decipher");
  pipeline->require_subcommand(1);
  auto* prun = pipeline->add_subcommand("run", "Run the full cycle and print the recovered text");
  prun->add_option("--algo", pa.algo, "Cipher")->required()->check(CLI::IsMember(algos));
  auto* p_msg = prun->add_option("--message", pa.message, "Plaintext");
  auto* p_in = prun->add_option("--in", pa.in_path, "Plaintext file")->check(CLI::ExistingFile);
  p_msg->excludes(p_in);
  prun->add_option("--key", pa.key_path, "Key JSON (generated from the seed if omitted)")
      ->check(CLI::ExistingFile);
  prun->add_option("--bits", pa.bits, "RSA modulus size for generated keys")->capture_default_str();
  prun->add_flag("--noise,!--no-noise", pa.noise, "Poisson noise layer (default on)");
  prun->add_flag("--stdp,!--no-stdp", pa.stdp, "Online STDP on L2 -> L3 (default on)");
  prun->add_option("--noise-rate", pa.noise_rate, "Override noise rate (Hz)");
  prun->add_option("--window", pa.window, "Simulation window (ms)")->capture_default_str();
  prun->add_option("--theta", pa.theta, "Spike-count threshold per bit")->capture_default_str();
  prun->add_option("--weights", pa.weights_path, "Trained L2 -> L3 weights JSON")
      ->check(CLI::ExistingFile);
  prun->add_option("--spikes", pa.spikes_path, "Write L1-L3 spikes as CSV");
  prun->add_option("--out", pa.out_path, "Write recovered plaintext to a file");
  add_common(prun, pc, true);
  prun->callback([&] {
    if (p_msg->count() + p_in->count() == 0) throw CLI::RequiredError("--message or --in");
    action = [&] { cmd_pipeline(pa, pc, out, err); };
  });

  // train
  Common tc;
  TrainArgs ta;
  auto* train = app.add_subcommand("train", "ReSuMe training of the L2 -> L3 weights");
  auto* t_data = train->add_option("--dataset", ta.dataset_path, "Dataset JSON")
                     ->check(CLI::ExistingFile);
  auto* t_toy = train->add_option("--toy", ta.toy_byte, "Single-byte teacher/student task");
  t_data->excludes(t_toy);
  train->add_option("--epochs", ta.epochs, "Maximum epochs")->capture_default_str();
  train->add_option("--threshold", ta.threshold, "Mean VP distance that counts as converged")
      ->capture_default_str();
  train->add_option("--learning-rate", ta.learning_rate, "ReSuMe learning rate (pA)")
      ->capture_default_str();
  train->add_option("--window", ta.window, "Window per example (ms)")->capture_default_str();
  train->add_option("--out", ta.out_path, "Weights JSON");
  train->add_option("--curve", ta.curve_path, "Per-epoch distance CSV");
  add_common(train, tc, true);
  train->callback([&] {
    if (t_data->count() + t_toy->count() == 0) throw CLI::RequiredError("--dataset or --toy");
    action = [&] { cmd_train(ta, tc, out); };
  });

  // simulate
  Common sc;
  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Run the network on a message and export a raster");
  sim->add_option("--window", sa.window, "Window preset (ms)")
      ->check(CLI::IsMember({200.0, 220.0, 1000.0}))
      ->capture_default_str();
  sim->add_option("--message", sa.message, "Bytes that drive the input layer");
  sim->add_option("--raster", sa.raster_path, "Raster output (.csv or .svg)");
  sim->add_option("--title", sa.title, "SVG title");
  sim->add_flag("--noise,!--no-noise", sa.noise, "Poisson noise layer (default on)");
  sim->add_flag("--stdp,!--no-stdp", sa.stdp, "Online STDP (default on)");
  sim->add_flag("--report-correction", sa.correction, "Shift reported spikes by the delay constant");
  add_common(sim, sc, true);
  sim->callback([&] { action = [&] { cmd_simulate(sa, sc, out); }; });

  // metrics
  auto* met = app.add_subcommand("metrics", "Spike-train and classification metrics");
  met->require_subcommand(1);
  Common mc;
  MetricArgs ma;
  auto add_pair = [&](CLI::App* s) {
    s->add_option("--a", ma.a_path, "Spike CSV")->required()->check(CLI::ExistingFile);
    s->add_option("--b", ma.b_path, "Spike CSV")->required()->check(CLI::ExistingFile);
    s->add_option("--neuron-a", ma.neuron_a, "Neuron id in --a (all spikes if omitted)");
    s->add_option("--neuron-b", ma.neuron_b, "Neuron id in --b (all spikes if omitted)");
    add_common(s, mc, false);
  };
  auto* vp = met->add_subcommand("vp", "Victor-Purpura distance");
  add_pair(vp);
  vp->add_option("--q", ma.q, "Shift cost per ms")->capture_default_str();
  vp->callback([&] { action = [&] { cmd_metric_pair(ma, mc, out, true); }; });
  auto* vr = met->add_subcommand("vr", "Van Rossum distance");
  add_pair(vr);
  vr->add_option("--tau", ma.tau, "Kernel time constant (ms)")->capture_default_str();
  vr->add_flag("--sqrt", ma.sqrt, "Report the square root");
  vr->callback([&] { action = [&] { cmd_metric_pair(ma, mc, out, false); }; });
  auto* conf = met->add_subcommand("confusion", "Confusion-matrix metrics");
  conf->add_option("--tp", ma.tp)->required();
  conf->add_option("--tn", ma.tn)->required();
  conf->add_option("--fp", ma.fp)->required();
  conf->add_option("--fn", ma.fn)->required();
  conf->add_flag("--json", ma.json_out, "Emit JSON");
  add_common(conf, mc, false);
  conf->callback([&] { action = [&] { cmd_confusion(ma, mc, out); }; });
  auto* mat = met->add_subcommand("vp-matrix", "Pairwise Victor-Purpura and rank matrices");
  mat->add_option("--spikes", ma.spikes_path, "Spike CSV")->required()->check(CLI::ExistingFile);
  mat->add_option("--q", ma.q, "Shift cost per ms")->capture_default_str();
  mat->add_option("--window", ma.window, "Window used for firing rates (ms)")->capture_default_str();
  mat->add_option("--out", ma.out_path, "Distance matrix CSV");
  mat->add_option("--rank", ma.rank_path, "Rank matrix CSV");
  mat->add_flag("--reindex", ma.reindex, "Order the rank matrix by descending firing rate");
  add_common(mat, mc, false);
  mat->callback([&] { action = [&] { cmd_vp_matrix(ma, mc, out); }; });

  // bench
  Common bc;
  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Encryption-decryption cycle benchmarks");
  bench_cmd->add_option("--payload", ba.payload, "Payload text");
  bench_cmd->add_option("--iterations", ba.iterations, "Timed cycles")->capture_default_str();
  bench_cmd->add_option("--warmup", ba.warmup, "Untimed warmup cycles")->capture_default_str();
  bench_cmd->add_option("--format", ba.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  bench_cmd->add_flag("--json", [&](std::int64_t) { ba.format = "json"; }, "Same as --format json");
  bench_cmd->add_option("--out", ba.out_path, "Write the table to a file");
  bench_cmd->add_option("--baseline", ba.baseline, "Row used for the performance factor")
      ->capture_default_str();
  bench_cmd->add_option("--bits", ba.bits, "RSA modulus size")->capture_default_str();
  bench_cmd->add_flag("--snn", ba.snn, "Include the spiking-network transport row");
  add_common(bench_cmd, bc, true);
  bench_cmd->callback([&] { action = [&] { cmd_bench(ba, bc, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const TrainingFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DecryptionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace spikecrypt::cli
