#include "nlgs/synthetic.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include <json.hpp>

#include "nlgs/rng.hpp"

namespace nlgs {

namespace {

constexpr int kHidden = 100;
constexpr int kOutput = 5;

std::string fnv1a_hex(const std::vector<double>& values) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (double v : values) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001B3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace

double elu(double z) { return z >= 0.0 ? z : std::expm1(z); }

FrozenMlp::FrozenMlp(int input_dim, std::uint64_t seed) : input_dim_(input_dim) {
  if (input_dim < 1) throw std::invalid_argument("FrozenMlp: input_dim must be >= 1");
  const int widths[] = {input_dim, kHidden, kHidden, kHidden, kOutput};
  SplitMix64 rng(seed);
  for (std::size_t l = 0; l + 1 < std::size(widths); ++l) {
    Layer layer;
    layer.in = widths[l];
    layer.out = widths[l + 1];
    const double bound = 1.0 / std::sqrt(static_cast<double>(layer.in));
    layer.w.resize(static_cast<std::size_t>(layer.out) * layer.in);
    layer.b.resize(static_cast<std::size_t>(layer.out));
    for (double& w : layer.w) w = bound * (2.0 * rng.next_double() - 1.0);
    for (double& b : layer.b) b = bound * (2.0 * rng.next_double() - 1.0);
    layers_.push_back(std::move(layer));
  }
}

Vec FrozenMlp::forward(const Vec& x) const {
  if (x.size() != static_cast<std::size_t>(input_dim_))
    throw std::invalid_argument("FrozenMlp::forward: input length mismatch");
  Vec cur = x;
  for (const Layer& layer : layers_) {
    Vec next(static_cast<std::size_t>(layer.out));
    for (int o = 0; o < layer.out; ++o) {
      double z = layer.b[static_cast<std::size_t>(o)];
      const double* row = layer.w.data() + static_cast<std::size_t>(o) * layer.in;
      for (int i = 0; i < layer.in; ++i) z += row[i] * cur[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(o)] = elu(z);
    }
    cur = std::move(next);
  }
  return cur;
}

std::optional<double> ObjectiveTable::find(const std::string& signature) const {
  build_index();
  const auto it = index_.find(signature);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double ObjectiveTable::value_of(const std::string& signature) const {
  const auto v = find(signature);
  if (!v) throw std::invalid_argument("objective table has no entry for " + signature);
  return *v;
}

void ObjectiveTable::build_index() const {
  if (!index_.empty() || values.empty()) return;
  for (const auto& [name, value] : values) index_[name] = value;
}

ObjectiveTable generate_objective(const Signature& truth,
                                  const std::vector<Signature>& candidates,
                                  std::uint64_t seed) {
  const Signature truth_c = canonicalize(truth);
  const std::string truth_name = signature_to_string(truth_c);
  const std::size_t n_factors = truth_c.size();

  bool truth_present = false;
  for (const Signature& cand : candidates) {
    if (cand.size() != n_factors)
      throw std::invalid_argument("generate_objective: candidate factor count differs "
                                  "from the truth");
    if (same_signature(cand, truth_c)) truth_present = true;
  }
  if (!truth_present)
    throw std::invalid_argument("generate_objective: truth not among the candidates");

  SplitMix64 rng(seed);
  std::vector<double> latent(2 * n_factors);
  for (double& v : latent) v = rng.next_normal();
  const FrozenMlp net(static_cast<int>(3 * n_factors), rng.next());

  const Vec truth_out = net.forward(flatten(truth_c, project(truth_c, latent), true));

  ObjectiveTable table;
  table.truth = truth_name;
  table.seed = seed;
  table.padded = true;
  table.latent_digest = fnv1a_hex(latent);
  table.values.reserve(candidates.size());
  for (const Signature& cand : candidates) {
    const Signature c = canonicalize(cand);
    const Vec out = net.forward(flatten(c, project(c, latent), true));
    double mse = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double d = out[i] - truth_out[i];
      mse += d * d;
    }
    mse /= static_cast<double>(out.size());
    const std::string name = signature_to_string(c);
    table.values.emplace_back(name, mse);
    if (name != truth_name && mse <= 1e-12) table.near_zero.push_back(name);
  }
  return table;
}

std::string objective_to_json(const ObjectiveTable& table) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["truth"] = table.truth;
  j["seed"] = table.seed;
  j["pad"] = table.padded;
  j["latent_digest"] = table.latent_digest;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [name, value] : table.values) values[name] = value;
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

ObjectiveTable objective_from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  ObjectiveTable table;
  if (j.contains("truth")) table.truth = j["truth"].get<std::string>();
  if (j.contains("seed")) table.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("pad")) table.padded = j["pad"].get<bool>();
  if (j.contains("latent_digest"))
    table.latent_digest = j["latent_digest"].get<std::string>();
  for (const auto& [name, value] : j.at("values").items())
    table.values.emplace_back(name, value.get<double>());
  return table;
}

}  // namespace nlgs
