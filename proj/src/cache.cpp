#include "tuttelab/cache.hpp"

#include "tuttelab/config.hpp"
#include "tuttelab/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tuttelab {

namespace {
constexpr const char* kFileName = "counts.jsonl";
}

CountCache::CountCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string CountCache::key_of(const std::string& poly_hash, std::optional<long long> spin_q,
                               uint32_t p, uint32_t r) {
    std::ostringstream os;
    os << poly_hash << "|" << (spin_q ? std::to_string(*spin_q) : "-") << "|" << p << "|" << r;
    return os.str();
}

std::string CountCache::key_of(const CountRecord& rec) {
    return key_of(rec.poly_hash, rec.spin_q, rec.p, rec.r);
}

void CountCache::load() {
    if (loaded_ || dir_.empty()) return;
    loaded_ = true;
    std::ifstream in(std::filesystem::path(dir_) / kFileName);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw std::logic_error("cache file holds an unparsable line");
        CountRecord rec = jsonio::record_from_json(j);
        // Later lines win: the file is append-only, so a re-stored key (for
        // example after an audit) shadows the older entry.
        entries_[key_of(rec)] = {rec, line};
    }
}

void CountCache::append(const CountRecord& rec) {
    std::string line = jsonio::record_json(rec).dump();
    std::ofstream out(std::filesystem::path(dir_) / kFileName, std::ios::app);
    if (!out) throw UsageError("cache directory is not writable: " + dir_);
    out << line << "\n";
    entries_[key_of(rec)] = {rec, std::move(line)};
}

std::optional<CountRecord> CountCache::peek(const std::string& key) {
    if (!enabled()) return std::nullopt;
    load();
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.first;
}

std::optional<std::string> CountCache::raw_line(const std::string& key) {
    if (!enabled()) return std::nullopt;
    load();
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.second;
}

CountRecord CountCache::get_or_compute(const std::string& key,
                                       const std::function<CountRecord()>& compute) {
    if (!enabled()) return compute();
    load();
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        ++hits;
        const CountRecord& cached = it->second.first;
        if (fnv1a64(key) % 100 == 0) {
            ++audits;
            CountRecord fresh = compute();
            if (fresh.count != cached.count)
                throw std::logic_error("cache audit mismatch for key " + key + ": stored " +
                                       cached.count.str() + ", recomputed " + fresh.count.str());
        }
        return cached;
    }
    ++misses;
    CountRecord rec = compute();
    if (key_of(rec) != key)
        throw UsageError("computed record does not match the requested cache key");
    append(rec);
    return rec;
}

}  // namespace tuttelab
