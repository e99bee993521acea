// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "simsub/cubic3d.hpp"
#include "simsub/dirichlet.hpp"
#include "simsub/lattice_oracle.hpp"
#include "simsub/quad_ring.hpp"
#include "simsub/quartic_ring.hpp"
#include "simsub/zeta_catalog.hpp"

using namespace simsub;

namespace {

using Terms = std::vector<std::pair<std::int64_t, Integer>>;

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string show(const Terms& t) {
    std::ostringstream os;
    for (std::size_t k = 0; k < t.size(); ++k) os << (k ? " " : "") << t[k].first << ":" << t[k].second;
    return os.str();
}

Terms nonzero_up_to(const CoeffSeries& s, std::int64_t x) {
    Terms out;
    for (const auto& t : s.nonzero_terms())
        if (t.first <= x) out.push_back(t);
    return out;
}

Outcome exact_support(const CoeffSeries& s, std::int64_t x, const Terms& want) {
    const Terms got = nonzero_up_to(s, x);
    if (got == want) return {true, std::to_string(want.size()) + " terms exact"};
    return {false, "got " + show(got)};
}

Outcome report(const VerifyReport& r) {
    std::string d = r.summary();
    for (std::size_t k = 0; k < r.mismatches.size() && k < 5; ++k) {
        const auto& mm = r.mismatches[k];
        d += "; m=" + std::to_string(mm.m) + " oracle " + std::to_string(mm.oracle) + " vs " + mm.expected.get_str();
    }
    return {r.ok(), d};
}

// Criterion 1-4: printed coefficient lists

Outcome qtau_terms() {
    return exact_support(zeta_q_tau(41), 41,
                         {{1, 1}, {4, 1}, {5, 1}, {9, 1}, {11, 2}, {16, 1}, {19, 2},
                          {20, 1}, {25, 1}, {29, 2}, {31, 2}, {36, 1}, {41, 2}});
}

Outcome qitau_terms() {
    const CoeffSeries z = zeta_q_itau(81);
    const Terms printed{{1, 1},  {4, 1},  {5, 2},  {9, 2},  {16, 1}, {20, 2}, {25, 3},
                        {36, 2}, {45, 4}, {49, 2}, {64, 1}, {80, 2}, {81, 3}};
    for (const auto& [m, a] : printed)
        if (z[m] != a) return {false, "a(" + std::to_string(m) + ") = " + z[m].get_str()};
    // the printed list skips the totally split primes below 81
    std::string extra;
    for (const auto& [m, a] : nonzero_up_to(z, 81)) {
        bool listed = false;
        for (const auto& t : printed) listed = listed || t.first == m;
        if (!listed) extra += " " + std::to_string(m) + ":" + a.get_str();
    }
    return {true, "13 printed terms exact; unprinted nonzero terms:" + extra};
}

Outcome zisqrt2_terms() {
    const CoeffSeries z = zeta_zi_sqrt2(68);
    if (z[2] != 0) return {false, "a(2) = " + z[2].get_str()};
    return exact_support(z, 68,
                         {{1, 1},  {4, 2},  {8, 2},  {9, 2},  {16, 2}, {17, 4}, {25, 2},
                          {32, 2}, {36, 4}, {41, 4}, {49, 2}, {64, 2}, {68, 8}});
}

Outcome fcubic_terms() {
    return exact_support(f_cubic(24389), 24389,
                         {{1, 1},     {64, 9},    {125, 7},   {729, 11},   {1331, 26},
                          {4096, 41}, {6859, 42}, {8000, 63}, {15625, 37}, {24389, 62}});
}

// Criterion 5-7: brute-force oracles

Outcome oracle_ztau() { return report(verify_series(Ambient::ZTauAsZ2, 200)); }

Outcome oracle_zitau() { return report(verify_series(Ambient::ZITauAsZ4, 100)); }

Outcome oracle_zisqrt2() {
    Outcome o = report(verify_series(Ambient::ZISqrt2AsZ4, 72));
    bool exhibited = false;
    for (std::int64_t m = 1; m <= 72 && !exhibited; ++m) {
        for (const auto& s : ideals(Ambient::ZISqrt2AsZ4, m)) {
            if (is_principal(s, Ambient::ZISqrt2AsZ4)) continue;
            o.detail += "; non-principal ideal of index " + std::to_string(m) + " " + s.to_string();
            exhibited = true;
            break;
        }
    }
    if (!exhibited) o = {false, o.detail + "; no non-principal ideal found"};
    return o;
}

// Criterion 8-9: rotations and 3D submodules

Outcome rotation_counts() {
    const RotationEnumeration e = enumerate_rotations(9);
    const auto counts = e.counts_by_norm();
    const std::map<std::int64_t, std::int64_t> want{{1, 24}, {4, 192}, {5, 144}, {9, 240}};
    std::string d;
    bool ok = true;
    for (const auto& [m, c] : want) {
        const std::int64_t got = counts.count(m) ? counts.at(m) : 0;
        ok = ok && got == c;
        d += (d.empty() ? "" : ", ") + std::to_string(m) + ":" + std::to_string(got);
    }
    // no other norm up to 9 may occur
    for (const auto& [m, c] : counts) ok = ok && want.count(m);
    return {ok, d + " (" + std::to_string(e.quaternions_scanned) + " quaternions scanned)"};
}

Outcome submodule_counts() {
    const std::vector<std::pair<std::int64_t, std::int64_t>> want{{1, 1}, {64, 9}, {125, 7}, {729, 11}};
    std::string d;
    bool ok = true;
    for (const auto& [m, c] : want) {
        const std::int64_t got = count_submodules_3d(m);
        ok = ok && got == c;
        d += (d.empty() ? "" : ", ") + std::to_string(m) + ":" + std::to_string(got);
    }
    return {ok, d};
}

// Criterion 10: unit groups and the divisor-sum identity

Outcome unit_scans() {
    std::int64_t units = 0;
    for (const QuadRing* R : {&QuadRing::tau(), &QuadRing::sqrt2()})
        for (long a = -50; a <= 50; ++a)
            for (long b = -50; b <= 50; ++b) {
                const QuadInt x(*R, a, b);
                if (!x.is_unit()) continue;
                const UnitForm f = unit_normal_form(x);
                if (QuadInt(*R, f.sign) * fundamental_unit_power(*R, f.exponent) != x)
                    return {false, "quadratic unit " + x.to_string()};
                ++units;
            }
    std::int64_t quartic_units = 0;
    for (const QuarticRing* R : {&QuarticRing::itau(), &QuarticRing::isqrt2()})
        for (long a = -8; a <= 8; ++a)
            for (long b = -8; b <= 8; ++b)
                for (long c = -8; c <= 8; ++c)
                    for (long d = -8; d <= 8; ++d) {
                        const QuarticInt x(*R, {a, b, c, d});
                        if (x.is_zero() || abs_norm(x) != 1) continue;
                        QuarticUnitForm f{};
                        try {
                            f = quartic_unit_normal_form(x);
                        } catch (const UnitCounterexample&) {
                            return {false, "quartic unit " + x.to_string() + " not of the form i^k mu^l"};
                        }
                        QuarticInt y = pow(R->i(), static_cast<unsigned>(f.k));
                        const QuarticInt mu = f.l >= 0 ? R->real_unit() : R->real_unit_inverse();
                        y = y * pow(mu, static_cast<unsigned>(f.l >= 0 ? f.l : -f.l));
                        if (y != x) return {false, "quartic unit " + x.to_string() + " reconstructs wrongly"};
                        ++quartic_units;
                    }
    // index-1 linear similarities of Z[tau]^3
    const RotationEnumeration e = enumerate_rotations(1);
    std::int64_t perms = 0;
    for (const auto& rec : e.rotations) {
        if (!rec.rotation.is_signed_permutation()) return {false, "index-1 rotation is not a signed permutation"};
        ++perms;
    }
    if (perms != 24) return {false, std::to_string(perms) + " index-1 rotations"};
    for (long a = -15; a <= 15; ++a)
        for (long b = -15; b <= 15; ++b) {
            const QuadInt alpha = ztau(a, b);
            if (alpha.is_zero()) continue;
            for (const auto& rec : e.rotations) {
                const bool one = similarity_index(alpha, rec.rotation) == 1;
                if (one != is_unit_similarity(alpha, rec.rotation)) return {false, "unit similarity " + alpha.to_string()};
                if (one && !alpha.is_unit()) return {false, "index-1 scale " + alpha.to_string() + " not a unit"};
            }
        }
    for (std::int64_t m = 1; m <= 60; ++m)
        if (hnf_sublattices(2, m).size() != sigma1(m)) return {false, "sigma1 fails at m=" + std::to_string(m)};
    return {true, std::to_string(units) + " quadratic units (height 50), " + std::to_string(quartic_units) +
                      " quartic units (height 8), 24 signed permutations, index-1 scales at height 15, sigma1 to 60"};
}

// Criterion 11: engine algebra

CoeffSeries random_series(std::mt19937_64& rng, std::int64_t n, bool unit_first) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::vector<Integer> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = d(rng);
    if (unit_first) c[0] = 1;
    return CoeffSeries(n, std::move(c));
}

Outcome engine_properties() {
    std::mt19937_64 rng(1331);
    const std::int64_t n = 48;
    int cases = 0;
    for (int k = 0; k < 1000; ++k, ++cases) {
        const CoeffSeries a = random_series(rng, n, false), b = random_series(rng, n, false),
                          c = random_series(rng, n, false), u = random_series(rng, n, true);
        if (convolve(a, b) != convolve(b, a)) return {false, "commutativity"};
        if (convolve(convolve(a, b), c) != convolve(a, convolve(b, c))) return {false, "associativity"};
        if (convolve(a, CoeffSeries::unit(n)) != a) return {false, "identity"};
        const CoeffSeries ui = dirichlet_inverse(u);
        if (convolve(u, ui) != CoeffSeries::unit(n) || convolve(ui, u) != CoeffSeries::unit(n))
            return {false, "inverse"};
    }
    // an Euler product is the convolution of its one-prime factors
    const std::int64_t big = 1000;
    for (SeriesName name : {SeriesName::ZetaQTau, SeriesName::ZetaQITau, SeriesName::ZetaQXi8}) {
        const CoeffSeries full = catalog_entry(name, big).series;
        CoeffSeries acc = CoeffSeries::unit(big);
        for (std::int64_t p : primes_up_to(big)) {
            CoeffSeries local(big);
            for (std::int64_t pe = 1; pe <= big; pe *= p) local[pe] = full[pe];
            acc = convolve(acc, local);
        }
        if (acc != full) return {false, "Euler product of " + std::string(cli_name(name))};
    }
    for (SeriesName name : all_series()) {
        const CoeffSeries s = catalog_entry(name, 30000).series;
        if (!check_multiplicative(s)) return {false, std::string(cli_name(name)) + " not multiplicative"};
    }
    return {true, std::to_string(cases) + " random cases, Euler products, 7 catalog series multiplicative to 30000"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "zeta Q(tau) printed terms", 1.0, qtau_terms},
        {2, "zeta Q(i tau) printed terms", 1.0, qitau_terms},
        {3, "zeta Z[i,sqrt2] printed terms", 1.0, zisqrt2_terms},
        {4, "cubic generating function printed terms", 5.0, fcubic_terms},
        {5, "Z[tau] oracle, m <= 200", 30.0, oracle_ztau},
        {6, "Z[i tau] oracle, m <= 100", 300.0, oracle_zitau},
        {7, "Z[i,sqrt2] oracle, m <= 72, non-principal ideal", 300.0, oracle_zisqrt2},
        {8, "rotation counts at den norms 1, 4, 5, 9", 600.0, rotation_counts},
        {9, "3D submodule counts at 1, 64, 125, 729", 600.0, submodule_counts},
        {10, "unit groups and divisor-sum identity", 60.0, unit_scans},
        {11, "engine properties and multiplicativity", 10.0, engine_properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s %2d %s | %.3f s (limit %.0f s) | %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limit_seconds, o.detail.c_str(), in_time ? "" : " | too slow");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
