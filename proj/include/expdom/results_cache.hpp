#pragma once

#include "expdom/hereditary.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace expdom {

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "EXPDOM_CACHE";

/// One cache line: canonical graph6, gamma, gamma_e, gamma_e_star.
struct CacheRecord {
    std::string graph6;
    int gamma = 0;
    int gamma_e = 0;
    int gamma_e_star = 0;
};

/// Tab-separated line without the newline.
std::string format_cache_line(const CacheRecord& record);
/// Parses and validates a line: four fields, integers, the inequality chain,
/// and a graph6 string that is the canonical form of a connected graph.
/// Returns nullopt for anything else.
std::optional<CacheRecord> parse_cache_line(std::string_view line);

/// Append-only parameter cache backing a ParameterTable.
class ResultsCache {
public:
    explicit ResultsCache(std::filesystem::path path);

    /// Value of EXPDOM_CACHE, if set and non-empty.
    static std::optional<std::filesystem::path> default_path();

    const std::filesystem::path& path() const { return path_; }

    /// Preloads every valid line into `table`. Invalid lines are skipped
    /// with a warning on `warn`. A missing file loads nothing.
    std::size_t load(ParameterTable& table, std::ostream& warn);
    /// Routes new table entries to this cache. The cache must outlive the
    /// table's use.
    void attach(ParameterTable& table);
    void append(const CanonicalCode& code, const ParameterTriple& triple);

private:
    std::filesystem::path path_;
    std::mutex mutex_;
    std::ofstream out_;
};

} // namespace expdom
