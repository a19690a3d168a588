#pragma once

// Append-only JSON-lines store of serialized BmReports. A later line with the
// same key replaces an earlier one. Only one process may append at a time.

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>

#include "cmint/bm.hpp"

namespace cmint {

inline constexpr const char* cache_version = "cmint-bm-1";

/// $CMINT_CACHE_DIR, else $XDG_CACHE_HOME/cmint, else ~/.cache/cmint.
std::filesystem::path default_cache_dir();

std::string cache_key(const CMFieldData& field, long m);

class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& file() const { return file_; }

    std::optional<Json> lookup(const std::string& key) const;
    void store(const std::string& key, const Json& value);

    std::size_t size() const { return entries_.size(); }

private:
    void load();

    std::filesystem::path file_;
    std::unordered_map<std::string, Json> entries_;
};

/// Cached bm_report(field, m) as JSON. `cache` may be null.
Json bm_report_json(const CMFieldData& field, long m, Cache* cache);

}  // namespace cmint
