#pragma once

#include "tuttelab/counting.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace tuttelab {

// Append-only count cache: one JSON line per CountRecord in counts.jsonl
// under the configured directory. Disabled (every call recomputes) when the
// directory is empty. Roughly one percent of hits, chosen deterministically
// by key, are audited against a fresh recomputation; an audit mismatch means
// the cache file is corrupt and raises std::logic_error.
class CountCache {
public:
    CountCache() = default;
    explicit CountCache(std::string dir);

    bool enabled() const { return !dir_.empty(); }

    static std::string key_of(const std::string& poly_hash, std::optional<long long> spin_q,
                              uint32_t p, uint32_t r);
    static std::string key_of(const CountRecord& rec);

    CountRecord get_or_compute(const std::string& key,
                               const std::function<CountRecord()>& compute);

    // Cached record, if any; never computes.
    std::optional<CountRecord> peek(const std::string& key);
    // Exact bytes of the stored line, for serialization checks.
    std::optional<std::string> raw_line(const std::string& key);

    uint64_t hits = 0;
    uint64_t misses = 0;
    uint64_t audits = 0;

private:
    void load();
    void append(const CountRecord& rec);

    std::string dir_;
    bool loaded_ = false;
    std::map<std::string, std::pair<CountRecord, std::string>> entries_;
};

}  // namespace tuttelab
