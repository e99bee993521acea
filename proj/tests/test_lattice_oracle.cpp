#include <algorithm>
#include <random>

#include "doctest.h"
#include "simsub/lattice_oracle.hpp"
#include "simsub/quartic_ring.hpp"
#include "simsub/zeta_catalog.hpp"

using namespace simsub;

namespace {

std::vector<std::vector<Integer>> columns(const Submodule& s) {
    std::vector<std::vector<Integer>> cols;
    for (int j = 0; j < s.rank(); ++j) {
        std::vector<Integer> v;
        for (int i = 0; i < s.rank(); ++i) v.push_back(s.at(i, j));
        cols.push_back(v);
    }
    return cols;
}

// Random unimodular mixing of the columns plus one redundant combination
std::vector<std::vector<Integer>> scramble(std::vector<std::vector<Integer>> cols, std::mt19937_64& rng) {
    const int r = static_cast<int>(cols.size());
    std::uniform_int_distribution<int> pick(0, r - 1), coef(-3, 3);
    for (int step = 0; step < 12; ++step) {
        const int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        const int c = coef(rng);
        for (int i = 0; i < r; ++i) cols[a][i] += c * cols[b][i];
        if (step % 4 == 0) std::swap(cols[a], cols[b]);
    }
    std::vector<Integer> extra(r, 0);
    for (const auto& v : cols) {
        const int c = coef(rng);
        for (int i = 0; i < r; ++i) extra[i] += c * v[i];
    }
    cols.push_back(extra);
    return cols;
}

std::vector<Submodule> brute_invariant(int rank, std::int64_t m, const std::vector<MultiplierAction>& acts) {
    std::vector<Submodule> out;
    for (const auto& s : hnf_sublattices(rank, m))
        if (is_invariant(s, acts)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hnf_sublattices examples") {
    CHECK(hnf_sublattices(2, 4).size() == 7);
    for (std::int64_t m : {1, 6, 17}) {
        const auto one = hnf_sublattices(1, m);
        REQUIRE(one.size() == 1);
        CHECK(one[0].at(0, 0) == m);
    }
    for (std::int64_t p : {2, 3, 5, 7, 13}) CHECK(hnf_sublattices(2, p).size() == static_cast<std::size_t>(p + 1));
}

TEST_CASE("rank-2 count is the divisor sum") {
    for (std::int64_t m = 1; m <= 60; ++m) {
        const auto subs = hnf_sublattices(2, m);
        CHECK(subs.size() == sigma1(m));
        CHECK(std::set<Submodule>(subs.begin(), subs.end()).size() == subs.size());
        for (const auto& s : subs) CHECK(s.index() == m);
    }
}

TEST_CASE("predicted candidates equal the enumeration size") {
    for (int r : {1, 2, 4, 6})
        for (std::int64_t m : {1, 2, 4, 6, 9, 12})
            CHECK(predicted_candidates(r, m) == hnf_sublattices(r, m).size());
}

TEST_CASE("canonical HNF is unique per lattice") {
    std::mt19937_64 rng(11);
    for (int r : {2, 4, 6}) {
        for (std::int64_t m : {6, 8, 12}) {
            const auto subs = hnf_sublattices(r, m);
            for (std::size_t k = 0; k < subs.size(); k += std::max<std::size_t>(1, subs.size() / 40)) {
                const Submodule& s = subs[k];
                CHECK(hnf_from_generators(r, scramble(columns(s), rng)) == s);
            }
        }
    }
    CHECK_THROWS_AS(hnf_from_generators(2, {{1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Submodule(2, {2, 3, 0, 1}), std::invalid_argument);
}

TEST_CASE("membership and invariance") {
    const auto tau = ring_actions(Ambient::ZTauAsZ2);
    CHECK(is_invariant(Submodule(2, {2, 0, 0, 2}), tau));
    CHECK_FALSE(is_invariant(Submodule(2, {1, 0, 0, 2}), tau));
    const MultiplierAction identity{"1", 2, {1, 0, 0, 1}};
    for (const auto& s : hnf_sublattices(2, 12)) CHECK(is_invariant(s, {identity}));

    const Submodule s(2, {3, 1, 0, 2});
    CHECK(s.contains({3, 0}));
    CHECK(s.contains({1, 2}));
    CHECK(s.contains({4, 2}));
    CHECK_FALSE(s.contains({1, 0}));
    CHECK_FALSE(s.contains({0, 1}));
}

TEST_CASE("generator actions satisfy their minimal polynomials") {
    auto mul = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, int r) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(r * r), 0);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
        return c;
    };
    for (Ambient a : {Ambient::ZTauAsZ2, Ambient::ZITauAsZ4, Ambient::ZISqrt2AsZ4, Ambient::ZTau3AsZTauModule}) {
        for (const auto& act : ring_actions(a)) {
            const int r = act.rank;
            const auto sq = mul(act.matrix, act.matrix, r);
            std::vector<std::int64_t> want(static_cast<std::size_t>(r * r), 0);
            for (int e = 0; e < r * r; ++e) {
                const std::int64_t id = (e / r == e % r) ? 1 : 0;
                if (act.generator == "i") want[e] = -id;
                else if (act.generator == "sqrt2") want[e] = 2 * id;
                else want[e] = act.matrix[e] + id;  // tau^2 = tau + 1
            }
            CHECK_MESSAGE(sq == want, act.generator);
        }
    }
}

TEST_CASE("pruned invariant enumeration equals the brute-force filter") {
    for (Ambient a : {Ambient::ZTauAsZ2, Ambient::ZITauAsZ4, Ambient::ZISqrt2AsZ4, Ambient::ZTau3AsZTauModule}) {
        const int r = ambient_rank(a);
        const std::int64_t top = r == 2 ? 40 : (r == 4 ? 20 : 8);
        for (std::int64_t m = 1; m <= top; ++m) {
            auto fast = invariant_sublattices(r, m, ring_actions(a));
            std::sort(fast.begin(), fast.end());
            CHECK(fast == brute_invariant(r, m, ring_actions(a)));
        }
    }
}

TEST_CASE("ideal counts") {
    CHECK(count_ideals(Ambient::ZTauAsZ2, 4) == 1);
    CHECK(count_ideals(Ambient::ZTauAsZ2, 11) == 2);
    CHECK(count_ideals(Ambient::ZTauAsZ2, 2) == 0);
    CHECK(count_ideals(Ambient::ZITauAsZ4, 25) == 3);
    for (std::int64_t m = 1; m <= 30; ++m)
        for (const auto& s : ideals(Ambient::ZITauAsZ4, m)) CHECK(is_invariant(s, ring_actions(Ambient::ZITauAsZ4)));
}

TEST_CASE("ideal counts in Z[tau] are multiplicative") {
    std::vector<std::int64_t> c(201);
    for (std::int64_t m = 1; m <= 200; ++m) c[m] = count_ideals(Ambient::ZTauAsZ2, m);
    CHECK(c[1] == 1);
    for (std::int64_t m = 2; m <= 200; ++m)
        for (std::int64_t n = 2; m * n <= 200; ++n)
            if (std::gcd(m, n) == 1) CHECK(c[m * n] == c[m] * c[n]);
}

TEST_CASE("principality") {
    const Submodule two(4, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}, Ambient::ZISqrt2AsZ4);
    CHECK(two.index() == 16);
    CHECK(is_principal(two, Ambient::ZISqrt2AsZ4));

    const auto index_two = ideals(Ambient::ZISqrt2AsZ4, 2);
    REQUIRE(index_two.size() == 1);
    CHECK_FALSE(is_principal(index_two[0], Ambient::ZISqrt2AsZ4));
    CHECK_FALSE(principal_generator(index_two[0], Ambient::ZISqrt2AsZ4).has_value());

    for (std::int64_t m = 1; m <= 30; ++m)
        for (const auto& s : ideals(Ambient::ZITauAsZ4, m)) CHECK(is_principal(s, Ambient::ZITauAsZ4));

    // every generator found has absolute norm equal to the index
    for (Ambient a : {Ambient::ZITauAsZ4, Ambient::ZISqrt2AsZ4}) {
        const QuarticRing& R = a == Ambient::ZITauAsZ4 ? QuarticRing::itau() : QuarticRing::isqrt2();
        for (std::int64_t m = 1; m <= 40; ++m) {
            for (const auto& s : ideals(a, m)) {
                const auto g = principal_generator(s, a);
                if (!g) continue;
                const QuarticInt x(R, {(*g)[0], (*g)[1], (*g)[2], (*g)[3]});
                CHECK(abs_norm(x) == m);
            }
        }
    }
    for (std::int64_t m = 1; m <= 60; ++m)
        for (const auto& s : ideals(Ambient::ZTauAsZ2, m)) {
            const auto g = principal_generator(s, Ambient::ZTauAsZ2);
            REQUIRE(g.has_value());
            CHECK(abs(ztau((*g)[0], (*g)[1]).norm()) == m);
        }
}

TEST_CASE("similarity submodule counts") {
    CHECK(count_similarity_submodules(Ambient::ZISqrt2AsZ4, 4) == 2);
    CHECK(count_similarity_submodules(Ambient::ZISqrt2AsZ4, 68) == 8);
    CHECK(count_similarity_submodules(Ambient::ZITauAsZ4, 16) == 1);
    CHECK(count_similarity_submodules(Ambient::ZISqrt2AsZ4, 2) == 0);
    CHECK(principal_ideals(Ambient::ZISqrt2AsZ4, 68).box.scanned > 0);
}

TEST_CASE("resource guard") {
    CHECK_THROWS_AS(hnf_sublattices(4, 1000, 100), ResourceLimitExceeded);
    CHECK_THROWS_AS(count_ideals(Ambient::ZITauAsZ4, 1000, 100), ResourceLimitExceeded);
    CHECK_NOTHROW(hnf_sublattices(2, 10, 100));
}

TEST_CASE("verify reports") {
    const VerifyReport z = verify_series(Ambient::ZTauAsZ2, 41);
    CHECK(z.ok());
    CHECK(z.summary() == "41/41 match");
    CHECK(verify_series(Ambient::Z, 30).ok());
    CHECK(verify_series(Ambient::ZITauAsZ4, 30).ok());
    const VerifyReport s = verify_series(Ambient::ZISqrt2AsZ4, 68);
    CHECK(s.ok());
    CHECK(s.oracle_counts[67] == 8);
}
