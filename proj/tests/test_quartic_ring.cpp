#include <random>

#include "doctest.h"
#include "simsub/quartic_ring.hpp"

using namespace simsub;

namespace {

QuarticInt q(const QuarticRing& R, long a, long b, long c, long d) { return QuarticInt(R, {a, b, c, d}); }

QuarticInt random_element(const QuarticRing& R, std::mt19937_64& rng, long h) {
    std::uniform_int_distribution<long> d(-h, h);
    return q(R, d(rng), d(rng), d(rng), d(rng));
}

// Laplace expansion; only used on 4x4 matrices
Integer det(const std::vector<Integer>& m, int n) {
    if (n == 1) return m[0];
    Integer total = 0;
    for (int col = 0; col < n; ++col) {
        std::vector<Integer> minor;
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != col) minor.push_back(m[r * n + c]);
        const Integer term = m[col] * det(minor, n - 1);
        total += (col % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

// x + y*i acts on (u + v*i) as [[X, -Y], [Y, X]] where X, Y multiply the real subring
Integer block_norm(const QuadInt& x, const QuadInt& y) {
    auto mult = [](const QuadInt& z) {
        const QuadInt c0 = z * QuadInt(z.ring(), 1), c1 = z * QuadInt(z.ring(), 0, 1);
        return std::array<Integer, 4>{c0.a(), c1.a(), c0.b(), c1.b()};
    };
    const auto X = mult(x), Y = mult(y);
    // basis order of the block matrix: 1, w, i, i*w
    std::vector<Integer> m = {
        X[0], X[1], -Y[0], -Y[1],
        X[2], X[3], -Y[2], -Y[3],
        Y[0], Y[1], X[0], X[1],
        Y[2], Y[3], X[2], X[3],
    };
    return abs(det(m, 4));
}

QuarticInt unit_from_form(const QuarticRing& R, const QuarticUnitForm& f) {
    QuarticInt u = pow(R.i(), static_cast<unsigned>(f.k));
    const QuarticInt mu = f.l >= 0 ? R.real_unit() : R.real_unit_inverse();
    return u * pow(mu, static_cast<unsigned>(f.l >= 0 ? f.l : -f.l));
}

}  // namespace

TEST_CASE("multiplication table") {
    for (const QuarticRing* R : {&QuarticRing::itau(), &QuarticRing::isqrt2()}) {
        const QuarticInt i = R->i();
        CHECK(i * i == q(*R, -1, 0, 0, 0));
        CHECK(R->real_unit() * R->real_unit_inverse() == q(*R, 1, 0, 0, 0));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                QuarticInt::Coeffs ea{0, 0, 0, 0}, eb{0, 0, 0, 0};
                ea[a] = 1;
                eb[b] = 1;
                CHECK(QuarticInt(*R, ea) * QuarticInt(*R, eb) == QuarticInt(*R, eb) * QuarticInt(*R, ea));
            }
    }
    const QuarticInt w = QuarticRing::itau().omega();
    CHECK(w * w == q(QuarticRing::itau(), 1, 0, 1, 0));
    const QuarticInt s = QuarticRing::isqrt2().omega();
    CHECK(s * s == q(QuarticRing::isqrt2(), 2, 0, 0, 0));
}

TEST_CASE("absolute norm examples") {
    const auto& S = QuarticRing::isqrt2();
    const QuarticInt one_plus_i = q(S, 1, 1, 0, 0);
    CHECK(abs_norm(one_plus_i) == 4);
    CHECK(block_norm(zsqrt2(1), zsqrt2(1)) == 4);
    CHECK(abs_norm(q(QuarticRing::itau(), 1, 1, 0, 0)) == 4);
    CHECK(abs_norm(q(QuarticRing::itau(), 2, 0, 0, 0)) == 16);
    CHECK(abs_norm(QuarticRing::itau().real_unit()) == 1);
}

TEST_CASE("unit decomposition examples") {
    const auto& S = QuarticRing::isqrt2();
    const QuarticInt u = S.i() * pow(S.real_unit(), 3);
    const QuarticUnitForm f = quartic_unit_normal_form(u);
    CHECK(f.k == 1);
    CHECK(f.l == 3);
    const auto& T = QuarticRing::itau();
    const QuarticUnitForm g = quartic_unit_normal_form(-pow(T.real_unit_inverse(), 5));
    CHECK(g.k == 2);
    CHECK(g.l == -5);
    CHECK_THROWS_AS(quartic_unit_normal_form(q(T, 1, 1, 0, 0)), std::invalid_argument);
}

TEST_CASE("norm multiplicativity and the relative norm route") {
    std::mt19937_64 rng(4242);
    for (const QuarticRing* R : {&QuarticRing::itau(), &QuarticRing::isqrt2()}) {
        for (int k = 0; k < 1000; ++k) {
            const QuarticInt x = random_element(*R, rng, 60), y = random_element(*R, rng, 60);
            CHECK(abs_norm(x * y) == abs_norm(x) * abs_norm(y));
            const QuadInt re = x.real_part(), im = x.imag_part();
            CHECK(abs_norm(x) == abs((re * re + im * im).norm()));
            CHECK(QuarticInt::from_pair(*R, re, im) == x);
            if (k < 200) CHECK(abs_norm(x) == block_norm(re, im));
        }
    }
}

TEST_CASE("regular representation is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (const QuarticRing* R : {&QuarticRing::itau(), &QuarticRing::isqrt2()}) {
        for (int k = 0; k < 300; ++k) {
            const QuarticInt x = random_element(*R, rng, 30), y = random_element(*R, rng, 30);
            CHECK(regular_rep(x * y) == mat_mul(regular_rep(x), regular_rep(y), 4));
            const auto sum = regular_rep(x + y), rx = regular_rep(x), ry = regular_rep(y);
            for (int e = 0; e < 16; ++e) CHECK(sum[e] == rx[e] + ry[e]);
        }
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937_64 rng(23);
    for (const QuarticRing* R : {&QuarticRing::itau(), &QuarticRing::isqrt2()}) {
        for (int k = 0; k < 300; ++k) {
            const QuarticInt x = random_element(*R, rng, 40), y = random_element(*R, rng, 40),
                             z = random_element(*R, rng, 40);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("exhaustive unit scan at height 8") {
    for (const QuarticRing* R : {&QuarticRing::itau(), &QuarticRing::isqrt2()}) {
        int units = 0;
        for (long a = -8; a <= 8; ++a)
            for (long b = -8; b <= 8; ++b)
                for (long c = -8; c <= 8; ++c)
                    for (long d = -8; d <= 8; ++d) {
                        const QuarticInt x = q(*R, a, b, c, d);
                        if (x.is_zero() || abs_norm(x) != 1) continue;
                        ++units;
                        const QuarticUnitForm f = quartic_unit_normal_form(x);
                        CHECK(unit_from_form(*R, f) == x);
                    }
        // tau^m with -5 <= m <= 6 and lambda^m with |m| <= 3, times four powers of i
        CHECK(units == (R == &QuarticRing::itau() ? 4 * 12 : 4 * 7));
    }
}
