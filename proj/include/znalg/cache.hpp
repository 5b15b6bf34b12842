#pragma once

#include "znalg/zn.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace znalg {

using Json = nlohmann::json;

// Canonical JSON: object keys sorted (nlohmann default), rationals as "p/q"
// strings, no floats. Serialization order of polynomial terms is the
// lexicographic key order, so payloads are byte stable.

Json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);

Json eps_to_json(const Eps& x);
Eps eps_from_json(const Json& j);

Json abar_to_json(const Abar& x);
Abar abar_from_json(const Json& j);

Json an_to_json(const AnElement& x);
AnElement an_from_json(const Json& j);

Json syzygy_to_json(const SyzygyMatrix& s);
SyzygyMatrix syzygy_from_json(const Json& j);

/// Convention identifiers recorded in every cache key and header.
Json convention_flags();

Json dn_payload(const DnIdeal& ideal);
Json zn_payload(const ZnIdeal& ideal);

/// Rebuild a Zn ideal from its cached orbit generators (recheck optional).
ZnIdeal zn_from_payload(const Json& payload);

uint64_t fnv1a64(const std::string& s);
std::string content_hash(const Json& payload);

struct CacheEntry {
    std::string key;
    std::string hash;
    Json payload;
};

Json cache_entry_to_json(const CacheEntry& e);
/// Parse and verify the hash; nullopt on mismatch or malformed file.
std::optional<CacheEntry> cache_entry_from_json(const Json& j);

std::string dn_cache_key(int n);
std::string zn_cache_key(int n);

/// Atomic write (temp file + rename).
void write_cache_file(const std::filesystem::path& path, const CacheEntry& entry);
std::optional<CacheEntry> read_cache_file(const std::filesystem::path& path);

/// Load dn_N.json when present and intact, else rebuild and (re)write it.
/// Returns whether the payload came from the cache.
bool load_or_store_dn(const std::filesystem::path& cache_dir, int n, DnCache& cache,
                      bool* rebuilt_payload_matches = nullptr);

}  // namespace znalg
