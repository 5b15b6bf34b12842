#include "znalg/cache.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace znalg;

TEST_CASE("json roundtrips for the core types") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> numd(-9, 9), expd(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        Laurent p;
        for (int i = 0; i < 3; ++i) p.add_term(expd(rng), make_rational(numd(rng), 1 + (trial % 5)));
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
        Eps e(p, p * Rational(numd(rng)));
        CHECK(eps_from_json(eps_to_json(e)) == e);
        Abar x = Abar::mono(2, 1, e) + Abar::mono(0, 0, Eps(Laurent(Rational(1, 3))));
        CHECK(abar_from_json(abar_to_json(x)) == x);
    }
    AnElement a = AnElement::alpha(5) * AnElement::delta(5, 2) +
                  AnElement::q(5) * Laurent::tau(-3) + AnElement::eps(5);
    CHECK(an_from_json(an_to_json(a)) == a);
}

TEST_CASE("dn payload roundtrips byte-identically") {
    DnIdeal ideal = DnIdeal::build(7);
    Json payload = dn_payload(ideal);
    std::string once = payload.dump();
    Json reparsed = Json::parse(once);
    CHECK(reparsed.dump() == once);
    SyzygyMatrix s = syzygy_from_json(payload["syzygy"]);
    CHECK(syzygy_to_json(s).dump() == payload["syzygy"].dump());
    // recompute-then-serialize gives the same bytes
    CHECK(dn_payload(DnIdeal::build(7)).dump() == once);
}

TEST_CASE("cache entry hash detects corruption") {
    DnIdeal ideal = DnIdeal::build(3);
    Json payload = dn_payload(ideal);
    CacheEntry e{dn_cache_key(3), content_hash(payload), payload};
    Json j = cache_entry_to_json(e);
    CHECK(cache_entry_from_json(j).has_value());
    j["payload"]["n"] = 5;  // corrupt
    CHECK_FALSE(cache_entry_from_json(j).has_value());
}

TEST_CASE("cache files: atomic write, reload, recompute on miss") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "znalg_cache_test";
    fs::remove_all(dir);
    DnCache cache;
    bool matches = false;
    bool from_cache = load_or_store_dn(dir, 5, cache, &matches);
    CHECK_FALSE(from_cache);  // first call computes and writes
    CHECK(matches);
    DnCache cache2;
    from_cache = load_or_store_dn(dir, 5, cache2, &matches);
    CHECK(from_cache);
    CHECK(matches);  // loaded payload is byte-identical to a fresh recompute
    auto entry = read_cache_file(dir / "dn_5.json");
    REQUIRE(entry.has_value());
    CHECK(entry->key == dn_cache_key(5));

    // corrupting the payload invalidates the hash; the loader recomputes
    {
        std::ifstream in(dir / "dn_5.json");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        auto pos = text.find("\"rank\": 6");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 9, "\"rank\": 7");
        std::ofstream out(dir / "dn_5.json");
        out << text;
    }
    CHECK_FALSE(read_cache_file(dir / "dn_5.json").has_value());
    DnCache cache3;
    from_cache = load_or_store_dn(dir, 5, cache3, &matches);
    CHECK_FALSE(from_cache);  // recomputed and rewrote
    CHECK(read_cache_file(dir / "dn_5.json").has_value());
    fs::remove_all(dir);
}

TEST_CASE("zn payload reconstruction") {
    DnCache cache;
    ZnIdeal ideal = zn_ideal(3, cache);
    Json payload = zn_payload(ideal);
    ZnIdeal back = zn_from_payload(payload);
    CHECK(back.n == 3);
    REQUIRE(back.orbit_reps.size() == ideal.orbit_reps.size());
    for (size_t i = 0; i < back.orbit_reps.size(); ++i)
        CHECK(back.orbit_reps[i].omega == ideal.orbit_reps[i].omega);
    CHECK(back.by_eta.size() == ideal.by_eta.size());
    for (const auto& [bits, gen] : ideal.by_eta)
        CHECK(back.by_eta.at(bits).omega == gen.omega);
    CHECK(zn_payload(back).dump() == payload.dump());
}

TEST_CASE("cache keys carry the convention flags") {
    CHECK(dn_cache_key(7).find("product_form") != std::string::npos);
    CHECK(zn_cache_key(7).find("leading_plus") != std::string::npos);
    CHECK(dn_cache_key(7) != zn_cache_key(7));
}
