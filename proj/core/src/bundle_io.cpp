#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "caloss/datasets.hpp"

namespace caloss {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "caloss-bundle";
constexpr int kVersion = 1;

std::string regime_csv_name(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "regime_%02zu.csv", k);
  return buf;
}

void write_csv(const std::filesystem::path& path, const SampleBatch& batch,
               const std::vector<std::string>& names) {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (!f) throw std::runtime_error("cannot open for write: " + path.string());
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::fprintf(f, "%s%s", i ? "," : "", names[i].c_str());
  }
  std::fprintf(f, "\n");
  for (int r = 0; r < batch.rows(); ++r) {
    for (int c = 0; c < batch.dims(); ++c) {
      // %.17g round-trips doubles exactly.
      std::fprintf(f, "%s%.17g", c ? "," : "", batch.values(r, c));
    }
    std::fprintf(f, "\n");
  }
  if (std::fclose(f) != 0) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

Eigen::MatrixXd read_csv(const std::filesystem::path& path,
                         const std::vector<std::string>& expected_names) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error("empty csv: " + path.string());
  }
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= header.size()) {
    const std::size_t comma = header.find(',', start);
    names.push_back(header.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (names != expected_names) {
    throw std::runtime_error("csv header does not match bundle variables: " +
                             path.string());
  }

  std::vector<double> data;
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const char* p = line.c_str();
    char* end = nullptr;
    for (std::size_t c = 0; c < names.size(); ++c) {
      data.push_back(std::strtod(p, &end));
      if (end == p) throw std::runtime_error("bad csv row in " + path.string());
      p = (*end == ',') ? end + 1 : end;
    }
    ++rows;
  }
  Eigen::MatrixXd values(rows, names.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      values(r, c) = data[r * names.size() + c];
    }
  }
  return values;
}

}  // namespace

void write_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  json meta;
  meta["format"] = kFormat;
  meta["version"] = kVersion;
  meta["dataset"] = to_string(bundle.spec.name);
  meta["samples_per_regime"] = bundle.spec.samples_per_regime;
  meta["seed"] = bundle.seed;
  meta["split_seed"] = bundle.split_seed;
  meta["fingerprint"] = bundle.fingerprint;
  meta["variables"] = bundle.spec.variables;
  meta["targets"] = bundle.spec.targets;
  meta["conditionals"] = bundle.spec.conditionals;

  json regimes = json::array();
  for (std::size_t k = 0; k < bundle.regimes.size(); ++k) {
    const RegimeData& rd = bundle.regimes[k];
    json jr;
    if (rd.batch.regime.target) {
      jr["target"] = *rd.batch.regime.target;
      jr["binary"] = rd.batch.regime.binary;
      jr["lo"] = rd.batch.regime.lo;
      jr["hi"] = rd.batch.regime.hi;
    } else {
      jr["target"] = nullptr;
    }
    jr["adjacency"] = rd.batch.adjacency;
    jr["csv"] = regime_csv_name(k);
    jr["test_rows"] = rd.test_rows;
    regimes.push_back(std::move(jr));
  }
  meta["regimes"] = std::move(regimes);

  std::ofstream out(dir / "meta.json");
  if (!out) throw std::runtime_error("cannot write meta.json in " + dir.string());
  out << meta.dump(2) << "\n";
  out.close();
  if (!out) throw std::runtime_error("meta.json write failed");

  for (std::size_t k = 0; k < bundle.regimes.size(); ++k) {
    write_csv(dir / regime_csv_name(k), bundle.regimes[k].batch,
              bundle.spec.variables);
  }
}

DatasetBundle read_bundle(const std::filesystem::path& dir) {
  std::ifstream in(dir / "meta.json");
  if (!in) throw std::runtime_error("no meta.json in " + dir.string());
  json meta;
  try {
    in >> meta;
  } catch (const json::exception& e) {
    throw std::runtime_error("meta.json is not valid JSON: " +
                             std::string(e.what()));
  }
  if (!meta.contains("format") || meta["format"] != kFormat) {
    throw std::runtime_error("not a caloss bundle: " + dir.string());
  }
  if (!meta.contains("version") || meta["version"].get<int>() != kVersion) {
    throw std::runtime_error("unsupported bundle schema version");
  }

  DatasetBundle bundle;
  bundle.spec = make_dataset_spec(
      dataset_from_string(meta.at("dataset").get<std::string>()),
      meta.at("samples_per_regime").get<int>());
  if (bundle.spec.variables !=
      meta.at("variables").get<std::vector<std::string>>()) {
    throw std::runtime_error("bundle variable list does not match dataset");
  }
  bundle.seed = meta.at("seed").get<std::uint64_t>();
  bundle.split_seed = meta.at("split_seed").get<std::uint64_t>();
  bundle.fingerprint = meta.at("fingerprint").get<std::string>();

  for (const auto& jr : meta.at("regimes")) {
    RegimeData rd;
    if (jr.at("target").is_null()) {
      rd.batch.regime = InterventionRegime::observational();
    } else if (jr.at("binary").get<bool>()) {
      rd.batch.regime =
          InterventionRegime::binary_do(jr.at("target").get<std::string>());
    } else {
      rd.batch.regime = InterventionRegime::uniform_do(
          jr.at("target").get<std::string>(), jr.at("lo").get<double>(),
          jr.at("hi").get<double>());
    }
    rd.batch.adjacency = jr.at("adjacency").get<std::vector<std::uint8_t>>();
    rd.test_rows = jr.at("test_rows").get<std::vector<int>>();
    rd.batch.values =
        read_csv(dir / jr.at("csv").get<std::string>(), bundle.spec.variables);
    bundle.regimes.push_back(std::move(rd));
  }
  return bundle;
}

}  // namespace caloss
