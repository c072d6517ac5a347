#include "tilecount/cache.hpp"

#include <cstdio>
#include <fstream>

namespace tilecount {

CountCache::CountCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) return;
    std::ifstream in(file_path());
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        std::string key = line.substr(0, tab);
        std::string val = line.substr(tab + 1);
        try {
            entries_[key] = Count(val);
        } catch (const std::exception&) {
            // ignore malformed lines; the cache is advisory
        }
    }
}

std::string CountCache::file_path() const { return dir_ + "/counts.tsv"; }

std::optional<Count> CountCache::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::put(const std::string& key, const Count& value) {
    auto it = entries_.find(key);
    if (it != entries_.end() && it->second == value) return;
    entries_[key] = value;
    dirty_ = true;
}

void CountCache::flush() {
    if (!enabled() || !dirty_) return;
    std::string tmp = file_path() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw resource_error("CountCache: cannot write " + tmp);
        for (const auto& [k, v] : entries_) out << k << "\t" << v.get_str() << "\n";
    }
    if (std::rename(tmp.c_str(), file_path().c_str()) != 0)
        throw resource_error("CountCache: rename failed for " + file_path());
    dirty_ = false;
}

bool CountCache::should_spot_check(const std::string& key) {
    // FNV-1a; stable across runs so reports stay reproducible
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return (h & 15u) == 0;
}

}  // namespace tilecount
