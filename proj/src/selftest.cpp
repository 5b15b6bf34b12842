#include "znalg/selftest.hpp"

#include "znalg/curvelab.hpp"
#include "znalg/mumford.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>

namespace znalg {

namespace {

using Clock = std::chrono::steady_clock;

void run_one(std::vector<CheckResult>& out, const std::string& name,
             const std::function<bool(std::string&)>& fn) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
        r.pass = fn(r.note);
    } catch (const std::exception& e) {
        r.pass = false;
        r.note = e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
}

bool mumford_routes_agree(int n) {
    int m = (n - 1) / 2;
    for (int k = 0; k <= m; ++k) {
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            if ((__builtin_popcount(bits) - (k + 1)) % 2 != 0) continue;
            EtaSubset eta(n, bits);
            AnElement w = mumford_w(eta, k);
            Rational lambda(n - 2 * k - 2, 4);
            AnElement via_ch = chern_class_from_character(chern_character_series(eta, lambda, k), k);
            if (via_ch != w) return false;
            if (total_chern_series(eta, k) != w) return false;
        }
    }
    return true;
}

}  // namespace

bool run_check_all(int n, std::ostream& os) {
    std::vector<CheckResult> results;
    DnCache cache;

    for (int k = 1; k <= n; k += 2) {
        std::string tag = "n=" + std::to_string(k) + " ";
        ensure_dn_upto(cache, k);
        const DnIdeal& dn = cache.get(k);

        run_one(results, tag + "dn-rank-certified", [&](std::string& note) {
            note = "rank " + std::to_string(dn.rank());
            return dn.certify();
        });
        run_one(results, tag + "syzygy-identities", [&](std::string&) {
            const SyzygyMatrix& s = dn.syzygy();
            auto g0 = leading_gens(k);
            auto g1 = subleading_gens(k);
            for (size_t r = 0; r < s.rows.size(); ++r) {
                Abar acc;
                for (size_t c = 0; c < s.cols.size(); ++c) {
                    acc += s.s1[r][c] * g0[c];
                    acc += s.s0[r][c] * g1[c];
                }
                if (!acc.is_zero()) return false;
                Abar ann;
                for (size_t c = 0; c < s.cols.size(); ++c)
                    ann += s.entry(r, c) * dn.gens_raw()[c];
                if (!ann.is_zero()) return false;
            }
            SyzygyMatrix solved = s1_matrix_solve(k);
            for (size_t r = 0; r < s.rows.size(); ++r)
                for (size_t c = 0; c < s.cols.size(); ++c)
                    if (solved.s1[r][c] != s.s1[r][c]) return false;
            return true;
        });
        if (k >= 3) {
            run_one(results, tag + "two-generator-certificate", [&](std::string& note) {
                auto cert = two_generator_certificate(dn);
                note = cert.detail;
                return cert.ok;
            });
        }
        run_one(results, tag + "conjugation-symmetry", [&](std::string&) {
            for (const Abar& g : dn.gens_raw())
                if (g.conj_tau_eps() != g) return false;
            return true;
        });
        if (k >= 3) {
            run_one(results, tag + "sigma-yz-degree", [&](std::string&) {
                for (size_t i = 0; i < dn.hs().size(); ++i) {
                    int h = dn.hs()[i];
                    if (h != dn.m() - 1 && h != dn.m() + 1) continue;
                    if (sigma_yz_degree(dn.gens_raw()[i]) != dn.m()) return false;
                }
                return true;
            });
        }
        if (k >= 3 && k <= 9) {
            run_one(results, tag + "mumford-three-routes", [&](std::string&) {
                return mumford_routes_agree(k);
            });
            run_one(results, tag + "mumford-independence", [&](std::string&) {
                return independence_check(k);
            });
        }
        if (k >= 3 && k <= 9) {
            run_one(results, tag + "street-table", [&](std::string&) {
                return street_table_matches(k, street_check(dn));
            });
        }
        if (k >= 3) {
            run_one(results, tag + "rank-and-poincare", [&](std::string&) {
                auto [lhs, rhs] = rank_identity(k);
                if (lhs != rhs) return false;
                return 2 * poincare_at_one(k) == lhs;
            });
        }
        if (k <= 7) {
            run_one(results, tag + "zn-recursion", [&](std::string&) {
                ZnIdeal zn = zn_ideal(k, cache);
                if (k == 1) return zn.unit_ideal;
                for (const auto& rep : zn.orbit_reps) {
                    int m = (k - 1) / 2, h = rep.eta.h();
                    if (graded_part(rep.omega, m) != mumford_w(rep.eta, m)) return false;
                    AnElement w1 = mumford_w(rep.eta.complement(), m - 1) *
                                   Laurent::tau(k - 2 * h);
                    if (graded_part(rep.omega, m - 1) != w1.times_eps()) return false;
                    if (k >= 3 && !finger_check(rep, k, cache)) return false;
                }
                return quotient_rank_zn(zn, k <= 7).agree;
            });
        }
    }

    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(40) << r.name
           << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds
           << "s" << (r.note.empty() ? "" : "  " + r.note) << "\n";
    }
    os << (all ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
    return all;
}

}  // namespace znalg
