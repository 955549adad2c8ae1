#ifndef PRMFORGE_CACHE_HPP
#define PRMFORGE_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"

namespace prmforge {

/// Version stamped on every emitted document and cache record.
inline constexpr int kSchemaVersion = 1;

struct CacheKey {
    std::string command;
    std::int64_t q = 0;
    std::int64_t d = 0;
    std::int64_t m = 0;
    std::int64_t r = 0;
    std::string mode;
    std::uint64_t seed = 0;
    int schema_version = kSchemaVersion;

    std::string canonical() const;
};

struct RunRecord {
    int schema_version = kSchemaVersion;
    std::string command;
    nlohmann::json parameters;
    nlohmann::json result;  // the reproducible payload
    double elapsed_sec = 0.0;
    std::optional<std::uint64_t> seed;

    nlohmann::json to_json() const;
    static RunRecord from_json(const nlohmann::json& j);
};

/// Append-only JSON-lines store in `<dir>/results.jsonl`. On read the last
/// record for a key wins; malformed lines are reported through the warning
/// sink and skipped; records from another schema version never match.
class ResultCache {
   public:
    using WarningSink = std::function<void(const std::string&)>;

    explicit ResultCache(std::filesystem::path dir, WarningSink warn = {});

    std::optional<RunRecord> get(const CacheKey& key) const;
    void put(const CacheKey& key, const RunRecord& record);

    const std::filesystem::path& file() const noexcept { return file_; }

    /// The --cache-dir flag if given, else $PRMFORGE_CACHE, else none.
    static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

   private:
    std::filesystem::path file_;
    WarningSink warn_;
    std::mutex write_mutex_;
};

}  // namespace prmforge

#endif
