#ifndef TILECOUNT_CACHE_HPP
#define TILECOUNT_CACHE_HPP

#include <map>
#include <optional>
#include <string>

#include "tilecount/exactnum.hpp"

namespace tilecount {

// On-disk count cache: one "key<TAB>value" line per entry, written atomically
// (temp file + rename). An empty directory disables caching. Hits are
// spot-checked against recomputation by the caller via should_spot_check.
class CountCache {
public:
    explicit CountCache(std::string dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<Count> get(const std::string& key) const;
    void put(const std::string& key, const Count& value);
    void flush();

    // Deterministically selects roughly one key in sixteen for recomputation.
    static bool should_spot_check(const std::string& key);

    std::string file_path() const;

private:
    std::string dir_;
    std::map<std::string, Count> entries_;
    bool dirty_ = false;
};

}  // namespace tilecount

#endif
