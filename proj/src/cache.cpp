#include "prmforge/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "prmforge/error.hpp"

namespace prmforge {

std::string CacheKey::canonical() const {
    return command + "|q=" + std::to_string(q) + "|d=" + std::to_string(d) + "|m=" + std::to_string(m) +
           "|r=" + std::to_string(r) + "|mode=" + mode + "|seed=" + std::to_string(seed) +
           "|v=" + std::to_string(schema_version);
}

nlohmann::json RunRecord::to_json() const {
    nlohmann::json j{
        {"schema_version", schema_version},
        {"command", command},
        {"parameters", parameters},
        {"result", result},
        {"elapsed_sec", elapsed_sec},
    };
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return j;
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
    RunRecord rec;
    rec.schema_version = j.at("schema_version").get<int>();
    rec.command = j.at("command").get<std::string>();
    rec.parameters = j.at("parameters");
    rec.result = j.at("result");
    rec.elapsed_sec = j.at("elapsed_sec").get<double>();
    if (j.contains("seed") && !j.at("seed").is_null()) rec.seed = j.at("seed").get<std::uint64_t>();
    return rec;
}

ResultCache::ResultCache(std::filesystem::path dir, WarningSink warn) : warn_(std::move(warn)) {
    std::filesystem::create_directories(dir);
    file_ = dir / "results.jsonl";
}

std::optional<RunRecord> ResultCache::get(const CacheKey& key) const {
    std::ifstream in(file_);
    if (!in) return std::nullopt;
    const std::string wanted = key.canonical();
    std::optional<RunRecord> found;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            if (j.at("schema_version").get<int>() != key.schema_version) continue;
            if (j.at("key").get<std::string>() != wanted) continue;
            found = RunRecord::from_json(j.at("record"));
        } catch (const nlohmann::json::exception& e) {
            if (warn_) {
                warn_(CacheCorrupt(file_.string() + ":" + std::to_string(lineno) + ": " + e.what()).what());
            }
        }
    }
    return found;
}

void ResultCache::put(const CacheKey& key, const RunRecord& record) {
    const nlohmann::json line{
        {"schema_version", key.schema_version},
        {"key", key.canonical()},
        {"record", record.to_json()},
    };
    std::lock_guard lock(write_mutex_);
    std::ofstream out(file_, std::ios::app);
    out << line.dump() << '\n';
}

std::optional<std::filesystem::path> ResultCache::resolve_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv("PRMFORGE_CACHE"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

}  // namespace prmforge
