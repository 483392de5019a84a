#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace graphcoh {

/// Append-safe on-disk memo for dimension tables keyed by (kind, canonical
/// code). One text file with a versioned header; unknown or mismatched
/// versions are discarded. Safe for concurrent lookups and idempotent
/// inserts from one process.
class DiskCache {
public:
    DiskCache() : mutex_(std::make_unique<std::mutex>()) {}  // disabled
    explicit DiskCache(std::filesystem::path dir);

    /// Enabled cache with no backing file (memoization within one process).
    static DiskCache memory();

    bool enabled() const { return enabled_; }

    std::optional<std::vector<std::int64_t>> get(const std::string& kind,
                                                 const std::string& code);
    void put(const std::string& kind, const std::string& code,
             const std::vector<std::int64_t>& values);

    std::int64_t hits() const;
    std::int64_t misses() const;

private:
    void load();

    bool enabled_ = false;
    std::filesystem::path file_;
    std::map<std::string, std::vector<std::int64_t>> entries_;
    std::unique_ptr<std::mutex> mutex_;
    std::int64_t hits_ = 0;
    std::int64_t misses_ = 0;
};

}  // namespace graphcoh
