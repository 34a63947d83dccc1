#include "hslab/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>

#include "hslab/errors.hpp"

namespace hslab {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

std::string canonical_config(const std::map<std::string, std::string>& config) {
    std::string out;
    for (const auto& [k, v] : config) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

RunOutput prepare_run(const std::string& outdir, const std::string& subcommand,
                      const std::map<std::string, std::string>& config) {
    RunOutput r;
    r.dir = std::filesystem::path(outdir) / subcommand;
    std::filesystem::create_directories(r.dir);
    r.runid = fnv1a64_hex(canonical_config(config));
    r.csv_path = r.dir / (r.runid + ".csv");
    r.json_path = r.dir / (r.runid + ".json");
    r.meta_path = r.dir / (r.runid + ".meta.json");
    return r;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open for writing: " + path.string());
    f << content;
    if (!f.good()) throw Error("write failed: " + path.string());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

nlohmann::json json_num(double x) { return nlohmann::json(fmt17(x)); }

nlohmann::json json_num_array(const std::vector<double>& xs) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : xs) a.push_back(json_num(x));
    return a;
}

void write_meta(const RunOutput& out,
                const std::map<std::string, std::string>& config) {
    nlohmann::json j;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ",
                  std::gmtime(&now));
    j["created"] = stamp;
    j["runid"] = out.runid;
    nlohmann::json c;
    for (const auto& [k, v] : config) c[k] = v;
    j["config"] = c;
    write_json(out.meta_path, j);
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") != std::string::npos) {
            out += '"';
            for (char c : f) {
                if (c == '"') out += '"';
                out += c;
            }
            out += '"';
        } else {
            out += f;
        }
    }
    out += '\n';
    return out;
}

}  // namespace hslab
