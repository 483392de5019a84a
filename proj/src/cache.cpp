#include "graphcoh/cache.hpp"

#include <fstream>
#include <sstream>

namespace graphcoh {

namespace {
constexpr const char* kHeader = "graphcoh-cache 1";
constexpr const char* kFileName = "tables.cache";
}  // namespace

DiskCache::DiskCache(std::filesystem::path dir) : mutex_(std::make_unique<std::mutex>()) {
    std::filesystem::create_directories(dir);
    file_ = dir / kFileName;
    enabled_ = true;
    load();
}

DiskCache DiskCache::memory() {
    DiskCache c;
    c.enabled_ = true;
    return c;
}

void DiskCache::load() {
    std::ifstream in(file_);
    if (!in) return;
    std::string header;
    std::getline(in, header);
    if (header != kHeader) {
        // format change: discard and restart
        in.close();
        std::ofstream out(file_, std::ios::trunc);
        out << kHeader << "\n";
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string kind, code;
        if (!(ss >> kind >> code)) continue;
        std::vector<std::int64_t> values;
        std::int64_t v;
        while (ss >> v) values.push_back(v);
        entries_[kind + " " + code] = std::move(values);
    }
}

std::optional<std::vector<std::int64_t>> DiskCache::get(const std::string& kind,
                                                        const std::string& code) {
    if (!enabled_) return std::nullopt;
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = entries_.find(kind + " " + code);
    if (it == entries_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void DiskCache::put(const std::string& kind, const std::string& code,
                    const std::vector<std::int64_t>& values) {
    if (!enabled_) return;
    std::lock_guard<std::mutex> lock(*mutex_);
    auto [it, inserted] = entries_.emplace(kind + " " + code, values);
    if (!inserted || file_.empty()) return;  // idempotent; memory-only mode has no file
    bool fresh = !std::filesystem::exists(file_);
    std::ofstream out(file_, std::ios::app);
    if (fresh) out << kHeader << "\n";
    out << kind << " " << code;
    for (auto v : values) out << " " << v;
    out << "\n" << std::flush;
}

std::int64_t DiskCache::hits() const {
    std::lock_guard<std::mutex> lock(*mutex_);
    return hits_;
}

std::int64_t DiskCache::misses() const {
    std::lock_guard<std::mutex> lock(*mutex_);
    return misses_;
}

}  // namespace graphcoh
