#include "znalg/cache.hpp"

#include <cstdio>
#include <fstream>

namespace znalg {

Json laurent_to_json(const Laurent& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, rational_to_string(c)}));
    return Json{{"tau", arr}};
}

Laurent laurent_from_json(const Json& j) {
    Laurent p;
    for (const auto& t : j.at("tau"))
        p.add_term(t.at(0).get<int>(), rational_from_string(t.at(1).get<std::string>()));
    return p;
}

Json eps_to_json(const Eps& x) {
    return Json{{"even", laurent_to_json(x.even)}, {"odd", laurent_to_json(x.odd)}};
}

Eps eps_from_json(const Json& j) {
    return Eps(laurent_from_json(j.at("even")), laurent_from_json(j.at("odd")));
}

Json abar_to_json(const Abar& x) {
    Json arr = Json::array();
    for (const auto& [m, c] : x.terms())
        arr.push_back(Json::array({m.a, m.d, eps_to_json(c)}));
    return Json{{"terms", arr}};
}

Abar abar_from_json(const Json& j) {
    Abar x;
    for (const auto& t : j.at("terms"))
        x.add_term({t.at(0).get<int>(), t.at(1).get<int>()}, eps_from_json(t.at(2)));
    return x;
}

Json an_to_json(const AnElement& x) {
    // Deterministic lexicographic term order on (alpha, q, delta_set, eps).
    struct Row {
        std::vector<int> key;
        Json j;
    };
    std::vector<Row> rows;
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> dset;
        for (int i = 1; i <= x.n(); ++i)
            if (m.tset & (1u << (i - 1))) dset.push_back(i);
        std::vector<int> key{m.a, m.b};
        key.insert(key.end(), dset.begin(), dset.end());
        key.push_back(-1);  // separator so shorter sets sort first
        key.push_back(m.e);
        Json jm{{"alpha", m.a}, {"q", m.b}, {"delta_set", dset}, {"eps", m.e}};
        rows.push_back({std::move(key), Json::array({jm, laurent_to_json(c)})});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key < b.key; });
    Json arr = Json::array();
    for (auto& r : rows) arr.push_back(std::move(r.j));
    return Json{{"n", x.n()}, {"terms", arr}};
}

AnElement an_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    AnElement x(n);
    for (const auto& t : j.at("terms")) {
        const Json& k = t.at(0);
        AnMono m;
        m.a = k.at("alpha").get<int>();
        m.b = k.at("q").get<int>();
        m.e = k.at("eps").get<int>();
        for (int i : k.at("delta_set")) m.tset |= 1u << (i - 1);
        x.add_term(m, laurent_from_json(t.at(1)));
    }
    return x;
}

Json syzygy_to_json(const SyzygyMatrix& s) {
    auto mat = [](const std::vector<std::vector<Abar>>& m) {
        Json rows = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(abar_to_json(e));
            rows.push_back(r);
        }
        return rows;
    };
    return Json{{"n", s.n}, {"m", s.m},     {"rows", s.rows},
                {"cols", s.cols}, {"s0", mat(s.s0)}, {"s1", mat(s.s1)}};
}

SyzygyMatrix syzygy_from_json(const Json& j) {
    SyzygyMatrix s;
    s.n = j.at("n").get<int>();
    s.m = j.at("m").get<int>();
    s.rows = j.at("rows").get<std::vector<int>>();
    s.cols = j.at("cols").get<std::vector<int>>();
    auto mat = [](const Json& rows) {
        std::vector<std::vector<Abar>> m;
        for (const auto& row : rows) {
            std::vector<Abar> r;
            for (const auto& e : row) r.push_back(abar_from_json(e));
            m.push_back(std::move(r));
        }
        return m;
    };
    s.s0 = mat(j.at("s0"));
    s.s1 = mat(j.at("s1"));
    return s;
}

Json convention_flags() {
    // delta_sign: generators follow the product-form linear factors; the
    // flipped convention negates delta throughout.
    // minor_sign: minors normalized so the leading coefficient of alpha^m is +1/m!.
    return Json{{"delta_sign", "product_form"}, {"minor_sign", "leading_plus"}, {"schema", 1}};
}

Json dn_payload(const DnIdeal& ideal) {
    Json gens = Json::array(), raw = Json::array(), phi = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(abar_to_json(g));
    for (const auto& g : ideal.gens_raw()) raw.push_back(abar_to_json(g));
    for (const auto& g : ideal.phi_table()) phi.push_back(abar_to_json(g));
    Json bc = Json::array(), bci = Json::array();
    for (const auto& row : ideal.basis_change()) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(rational_to_string(q));
        bc.push_back(r);
    }
    for (const auto& row : ideal.basis_change_inv()) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(rational_to_string(q));
        bci.push_back(r);
    }
    return Json{{"kind", "dn"},
                {"n", ideal.n()},
                {"rank", ideal.rank()},
                {"convention", convention_flags()},
                {"syzygy", syzygy_to_json(ideal.syzygy())},
                {"generators", gens},
                {"generators_raw", raw},
                {"phi_table", phi},
                {"basis_change", bc},
                {"basis_change_inv", bci}};
}

Json zn_payload(const ZnIdeal& ideal) {
    Json reps = Json::array();
    for (const auto& g : ideal.orbit_reps) {
        reps.push_back(Json{{"h", g.eta.h()},
                            {"eta", g.eta.indices()},
                            {"omega", an_to_json(g.omega)},
                            {"lower", an_to_json(g.lower)}});
    }
    return Json{{"kind", "zn"},
                {"n", ideal.n},
                {"unit_ideal", ideal.unit_ideal},
                {"convention", convention_flags()},
                {"orbit_generators", reps}};
}

ZnIdeal zn_from_payload(const Json& payload) {
    ZnIdeal ideal;
    ideal.n = payload.at("n").get<int>();
    ideal.unit_ideal = payload.at("unit_ideal").get<bool>();
    if (ideal.unit_ideal) return ideal;
    int n = ideal.n;
    for (const auto& r : payload.at("orbit_generators")) {
        uint32_t bits = 0;
        for (int i : r.at("eta")) bits |= 1u << (i - 1);
        ZnGenerator g{EtaSubset(n, bits), an_from_json(r.at("omega")), an_from_json(r.at("lower"))};
        ideal.orbit_reps.push_back(std::move(g));
    }
    for (const ZnGenerator& rep : ideal.orbit_reps) {
        int h = rep.eta.h();
        uint32_t full = (1u << n) - 1u;
        for (uint32_t bits = 0; bits <= full; ++bits) {
            if (__builtin_popcount(bits) != h) continue;
            EtaSubset eta(n, bits);
            std::vector<int> perm(n);
            std::vector<int> tgt_in = eta.indices();
            std::vector<int> tgt_out = eta.complement().indices();
            for (int i = 0; i < h; ++i) perm[i] = tgt_in[i];
            for (int i = 0; i < n - h; ++i) perm[h + i] = tgt_out[i];
            ZnGenerator g{eta, rep.omega.permute_indices(perm), rep.lower.permute_indices(perm)};
            ideal.by_eta.emplace(bits, std::move(g));
        }
    }
    return ideal;
}

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string content_hash(const Json& payload) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a64(payload.dump())));
    return buf;
}

Json cache_entry_to_json(const CacheEntry& e) {
    return Json{{"key", e.key}, {"hash", e.hash}, {"payload", e.payload}};
}

std::optional<CacheEntry> cache_entry_from_json(const Json& j) {
    try {
        CacheEntry e;
        e.key = j.at("key").get<std::string>();
        e.hash = j.at("hash").get<std::string>();
        e.payload = j.at("payload");
        if (content_hash(e.payload) != e.hash) return std::nullopt;
        return e;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

std::string dn_cache_key(int n) {
    Json flags = convention_flags();
    return "dn:" + std::to_string(n) + ":schema" + std::to_string(flags["schema"].get<int>()) +
           ":" + flags["delta_sign"].get<std::string>() + ":" +
           flags["minor_sign"].get<std::string>();
}

std::string zn_cache_key(int n) {
    Json flags = convention_flags();
    return "zn:" + std::to_string(n) + ":schema" + std::to_string(flags["schema"].get<int>()) +
           ":" + flags["delta_sign"].get<std::string>() + ":" +
           flags["minor_sign"].get<std::string>();
}

void write_cache_file(const std::filesystem::path& path, const CacheEntry& entry) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw std::runtime_error("cannot write cache file " + tmp.string());
        f << cache_entry_to_json(entry).dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::optional<CacheEntry> read_cache_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    Json j;
    try {
        f >> j;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
    return cache_entry_from_json(j);
}

bool load_or_store_dn(const std::filesystem::path& cache_dir, int n, DnCache& cache,
                      bool* rebuilt_payload_matches) {
    std::filesystem::path path = cache_dir / ("dn_" + std::to_string(n) + ".json");
    auto existing = read_cache_file(path);
    if (!existing && std::filesystem::exists(path))
        std::fprintf(stderr, "warning: cache file %s is corrupt or stale, recomputing\n",
                     path.c_str());
    if (!cache.has(n)) cache.put(DnIdeal::build(n));
    Json payload = dn_payload(cache.get(n));
    if (existing && existing->key == dn_cache_key(n)) {
        if (rebuilt_payload_matches)
            *rebuilt_payload_matches = (existing->payload.dump() == payload.dump());
        return true;
    }
    CacheEntry entry{dn_cache_key(n), content_hash(payload), payload};
    write_cache_file(path, entry);
    if (rebuilt_payload_matches) *rebuilt_payload_matches = true;
    return false;
}

}  // namespace znalg
