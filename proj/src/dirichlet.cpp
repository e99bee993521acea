#include "simsub/dirichlet.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace simsub {

namespace {

void require_same_limit(const CoeffSeries& a, const CoeffSeries& b) {
    if (a.limit() != b.limit())
        throw std::invalid_argument("series limits differ: " + std::to_string(a.limit()) + " vs " +
                                    std::to_string(b.limit()));
}

Polynomial poly_mul(const Polynomial& x, const Polynomial& y) {
    Polynomial out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    return out;
}

}  // namespace

CoeffSeries::CoeffSeries(std::int64_t limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("series limit must be positive");
    coeffs_.assign(static_cast<std::size_t>(limit), 0);
}

CoeffSeries::CoeffSeries(std::int64_t limit, std::vector<Integer> coeffs, bool multiplicative)
    : limit_(limit), coeffs_(std::move(coeffs)), multiplicative_(multiplicative) {
    if (limit < 1) throw std::invalid_argument("series limit must be positive");
    if (coeffs_.size() != static_cast<std::size_t>(limit))
        throw std::invalid_argument("coefficient count does not match the series limit");
}

CoeffSeries CoeffSeries::unit(std::int64_t limit) {
    CoeffSeries e(limit);
    e[1] = 1;
    e.multiplicative_ = true;
    return e;
}

std::vector<std::pair<std::int64_t, Integer>> CoeffSeries::nonzero_terms() const {
    std::vector<std::pair<std::int64_t, Integer>> out;
    for (std::int64_t m = 1; m <= limit_; ++m)
        if ((*this)[m] != 0) out.emplace_back(m, (*this)[m]);
    return out;
}

EulerFactor EulerFactor::inverse_power(std::int64_t p, int step, int power) {
    Polynomial base(static_cast<std::size_t>(step) + 1, 0);
    base[0] = 1;
    base[static_cast<std::size_t>(step)] = -1;
    Polynomial den{1};
    for (int k = 0; k < power; ++k) den = poly_mul(den, base);
    return {p, {1}, den};
}

Polynomial EulerFactor::expand(int max_degree) const {
    if (denominator.empty() || denominator[0] != 1)
        throw std::invalid_argument("local factor at p=" + std::to_string(prime) +
                                    " has a denominator with constant term != 1");
    Polynomial out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int n = 0; n <= max_degree; ++n) {
        Integer c = n < static_cast<int>(numerator.size()) ? numerator[n] : Integer(0);
        for (int j = 1; j <= n && j < static_cast<int>(denominator.size()); ++j) c -= denominator[j] * out[n - j];
        out[n] = c;
    }
    return out;
}

CoeffSeries expand_euler(const EulerRule& rule, std::int64_t limit) {
    CoeffSeries out(limit);
    out[1] = 1;
    // smallest prime factor sieve, then a(m) = a(m / p^e) * local_p[e]
    std::vector<std::int64_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<Polynomial> local(static_cast<std::size_t>(limit) + 1);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (spf[p] != 0) continue;
        for (std::int64_t q = p; q <= limit; q += p)
            if (spf[q] == 0) spf[q] = p;
        int max_e = 0;
        for (std::int64_t pe = 1; pe <= limit / p; pe *= p) ++max_e;
        const EulerFactor f = rule(p);
        if (f.prime != p) throw std::invalid_argument("Euler rule returned a factor for the wrong prime");
        local[p] = f.expand(max_e);
    }
    for (std::int64_t m = 2; m <= limit; ++m) {
        const std::int64_t p = spf[m];
        std::int64_t rest = m;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out[m] = out[rest] * local[p][e];
    }
    out.set_multiplicative(true);
    return out;
}

CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b) {
    require_same_limit(a, b);
    const std::int64_t n = a.limit();
    CoeffSeries out(n);
    for (std::int64_t d = 1; d <= n; ++d) {
        if (a[d] == 0) continue;
        for (std::int64_t e = 1; d * e <= n; ++e)
            if (b[e] != 0) out[d * e] += a[d] * b[e];
    }
    out.set_multiplicative(a.multiplicative() && b.multiplicative());
    return out;
}

CoeffSeries dirichlet_inverse(const CoeffSeries& a) {
    if (a[1] != 1) throw std::invalid_argument("dirichlet_inverse requires a(1) = 1");
    const std::int64_t n = a.limit();
    CoeffSeries out(n);
    std::vector<Integer> acc(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t m = 1; m <= n; ++m) {
        out[m] = m == 1 ? Integer(1) : Integer(-acc[m]);
        if (out[m] == 0) continue;
        for (std::int64_t d = 2; d * m <= n; ++d)
            if (a[d] != 0) acc[d * m] += a[d] * out[m];
    }
    out.set_multiplicative(a.multiplicative());
    return out;
}

CoeffSeries scale_argument(const CoeffSeries& a, int k, std::int64_t target_limit) {
    if (k < 1) throw std::invalid_argument("scale_argument: k must be positive");
    const std::int64_t r_max = integer_root(target_limit, k);
    if (r_max > a.limit())
        throw std::invalid_argument("scale_argument: source limit " + std::to_string(a.limit()) +
                                    " too small for target " + std::to_string(target_limit));
    CoeffSeries out(target_limit);
    for (std::int64_t r = 1; r <= r_max; ++r) {
        std::int64_t m = 1;
        for (int j = 0; j < k; ++j) m *= r;
        out[m] = a[r];
    }
    out.set_multiplicative(a.multiplicative());
    return out;
}

CoeffSeries shift(const CoeffSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("shift: k must be non-negative");
    CoeffSeries out = a;
    for (std::int64_t m = 2; m <= a.limit(); ++m) {
        if (a[m] == 0) continue;
        Integer mk;
        mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
        out[m] = a[m] * mk;
    }
    return out;
}

CoeffSeries dirichlet_polynomial(const std::map<std::int64_t, Integer>& terms, std::int64_t limit) {
    CoeffSeries out(limit);
    for (const auto& [m, c] : terms) {
        if (m < 1 || m > limit)
            throw std::invalid_argument("dirichlet_polynomial: index " + std::to_string(m) + " outside 1.." +
                                        std::to_string(limit));
        out[m] = c;
    }
    return out;
}

Integer summatory(const CoeffSeries& a, std::int64_t x) {
    if (x > a.limit())
        throw std::invalid_argument("summatory: x=" + std::to_string(x) + " exceeds limit " + std::to_string(a.limit()));
    Integer s = 0;
    for (std::int64_t m = 1; m <= x; ++m) s += a[m];
    return s;
}

bool check_multiplicative(const CoeffSeries& a) {
    if (a[1] != 1) return false;
    const std::int64_t n = a.limit();
    for (std::int64_t m = 2; m <= n; ++m) {
        for (std::int64_t k = m + 1; m * k <= n; ++k) {
            if (std::gcd(m, k) != 1) continue;
            if (a[m * k] != a[m] * a[k]) return false;
        }
    }
    return true;
}

}  // namespace simsub
