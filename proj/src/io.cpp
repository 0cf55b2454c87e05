#include "monolab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "monolab/errors.hpp"

namespace monolab {

namespace {

using nlohmann::ordered_json;

ordered_json complex_pairs(const Complex* data, std::int64_t n) {
  ordered_json arr = ordered_json::array();
  for (std::int64_t i = 0; i < n; ++i)
    arr.push_back({data[i].real(), data[i].imag()});
  return arr;
}

Complex pair_to_complex(const ordered_json& entry, std::int64_t index) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number())
    throw DomainError("state file: data entry " + std::to_string(index) +
                      " is not a [re, im] pair");
  return Complex(entry[0].get<double>(), entry[1].get<double>());
}

const char* kind_name(RandomSpec::Kind kind) {
  return kind == RandomSpec::Kind::haar_pure ? "haar_pure" : "induced_mixed";
}

RandomSpec::Kind kind_from_name(const std::string& name) {
  if (name == "haar_pure") return RandomSpec::Kind::haar_pure;
  if (name == "induced_mixed") return RandomSpec::Kind::induced_mixed;
  throw DomainError("state file: unknown draw kind '" + name + "'");
}

}  // namespace

nlohmann::ordered_json state_to_json(
    const QuantumState& state, const std::string& label,
    const std::optional<RandomSpec>& provenance) {
  ordered_json j;
  j["dims"] = state.dims().dims();
  j["type"] = state.is_pure() ? "pure" : "mixed";
  if (state.is_pure()) {
    j["data"] = complex_pairs(state.vector().data(), state.vector().size());
  } else {
    const Mat& rho = state.matrix();
    // Row-major on disk; Eigen stores column-major, so walk rows explicitly.
    ordered_json arr = ordered_json::array();
    for (std::int64_t r = 0; r < rho.rows(); ++r)
      for (std::int64_t c = 0; c < rho.cols(); ++c)
        arr.push_back({rho(r, c).real(), rho(r, c).imag()});
    j["data"] = std::move(arr);
  }
  if (!label.empty()) j["label"] = label;
  if (provenance) {
    j["provenance"] = {{"master_seed", provenance->master_seed},
                       {"sample_index", provenance->sample_index},
                       {"kind", kind_name(provenance->kind)},
                       {"rank", provenance->rank}};
  }
  return j;
}

StateFileData state_file_from_json(const nlohmann::ordered_json& j) {
  try {
    if (!j.is_object()) throw DomainError("state file: root is not an object");
    if (!j.contains("dims") || !j["dims"].is_array())
      throw DomainError("state file: missing integer list 'dims'");
    std::vector<int> dims;
    for (const auto& d : j["dims"]) {
      if (!d.is_number_integer())
        throw DomainError("state file: 'dims' entries must be integers");
      dims.push_back(d.get<int>());
    }
    SystemDims sys(dims);

    const std::string type = j.value("type", "");
    if (type != "pure" && type != "mixed")
      throw DomainError("state file: 'type' must be \"pure\" or \"mixed\"");
    if (!j.contains("data") || !j["data"].is_array())
      throw DomainError("state file: missing 'data' array");
    const auto& data = j["data"];

    std::string label;
    if (j.contains("label")) {
      if (!j["label"].is_string())
        throw DomainError("state file: 'label' must be a string");
      label = j["label"].get<std::string>();
    }
    std::optional<RandomSpec> provenance;
    if (j.contains("provenance")) {
      const auto& p = j["provenance"];
      if (!p.is_object())
        throw DomainError("state file: 'provenance' must be an object");
      RandomSpec spec;
      spec.master_seed = p.at("master_seed").get<std::uint64_t>();
      spec.sample_index = p.at("sample_index").get<std::uint64_t>();
      spec.kind = kind_from_name(p.at("kind").get<std::string>());
      spec.rank = p.at("rank").get<int>();
      provenance = spec;
    }

    const std::int64_t d = sys.total();
    if (type == "pure") {
      if (static_cast<std::int64_t>(data.size()) != d)
        throw DomainError("state file: pure data length " +
                          std::to_string(data.size()) + " != product(dims) " +
                          std::to_string(d));
      Vec v(d);
      for (std::int64_t i = 0; i < d; ++i) v(i) = pair_to_complex(data[i], i);
      return StateFileData{QuantumState::pure(sys, v), std::move(label),
                           provenance};
    }
    if (static_cast<std::int64_t>(data.size()) != d * d)
      throw DomainError("state file: mixed data length " +
                        std::to_string(data.size()) + " != product(dims)^2 " +
                        std::to_string(d * d));
    Mat rho(d, d);
    for (std::int64_t r = 0; r < d; ++r)
      for (std::int64_t c = 0; c < d; ++c)
        rho(r, c) = pair_to_complex(data[r * d + c], r * d + c);
    return StateFileData{QuantumState::mixed(sys, rho), std::move(label),
                         provenance};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("state file: malformed JSON value: ") +
                      e.what());
  }
}

QuantumState state_from_json(const nlohmann::ordered_json& j) {
  return state_file_from_json(j).state;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw IoError("read failed on '" + path + "'");
  return out.str();
}

void write_text_file_atomic(const std::string& path,
                            const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed on '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

QuantumState load_state_file(const std::string& path) {
  const std::string text = read_text_file(path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("state file '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

void save_state_file(const std::string& path, const QuantumState& state,
                     const std::string& label,
                     const std::optional<RandomSpec>& provenance) {
  write_text_file_atomic(path,
                         state_to_json(state, label, provenance).dump(2) + "\n");
}

}  // namespace monolab
