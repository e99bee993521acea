#include "simsub/integer.hpp"

#include <stdexcept>

namespace simsub {

std::int64_t to_int64(const Integer& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q <= n; q += p) composite[q] = true;
    }
    return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t integer_root(std::int64_t n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("integer_root: need n >= 0, k >= 1");
    Integer r;
    mpz_root(r.get_mpz_t(), Integer(static_cast<long>(n)).get_mpz_t(), static_cast<unsigned long>(k));
    return r.get_si();
}

Integer determinant(std::vector<Integer> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("determinant: size mismatch");
    if (n == 0) return 1;
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = v;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

std::vector<Integer> mat_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
    std::vector<Integer> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    return c;
}

}  // namespace simsub
