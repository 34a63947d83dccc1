#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hslab {

// 17 significant digits: enough to round-trip any double, and stable across
// runs so output files can be compared byte for byte.
std::string fmt17(double x);

std::uint64_t fnv1a64(const std::string& s);
std::string fnv1a64_hex(const std::string& s);

// "key=value\n" lines in key order; the run id hashes this.
std::string canonical_config(const std::map<std::string, std::string>& config);

struct RunOutput {
    std::filesystem::path dir;
    std::string runid;
    std::filesystem::path csv_path, json_path, meta_path;
};

// <outdir>/<subcommand>/<runid>.{csv,json,meta.json}; creates directories.
// The id depends only on the canonical config, never on time or location.
RunOutput prepare_run(const std::string& outdir, const std::string& subcommand,
                      const std::map<std::string, std::string>& config);

void write_text(const std::filesystem::path& path, const std::string& content);

// Serialized with sorted keys and two-space indent; store doubles through
// json_num so files stay deterministic.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

nlohmann::json json_num(double x);
nlohmann::json json_num_array(const std::vector<double>& xs);

// Sidecar with the config and a timestamp; the timestamp lives only here.
void write_meta(const RunOutput& out,
                const std::map<std::string, std::string>& config);

std::string csv_line(const std::vector<std::string>& fields);

}  // namespace hslab
