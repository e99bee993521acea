#pragma once

// Dirichlet-series coefficient tables a(1..N) with exact integer entries.
// Every binary operation requires both operands to carry the same limit N.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "simsub/integer.hpp"

namespace simsub {

class CoeffSeries {
public:
    /// All-zero series with limit N >= 1.
    explicit CoeffSeries(std::int64_t limit);
    /// coeffs[m - 1] = a(m); size must equal limit.
    CoeffSeries(std::int64_t limit, std::vector<Integer> coeffs, bool multiplicative = false);

    /// Indicator of m = 1 (identity under convolution).
    static CoeffSeries unit(std::int64_t limit);

    std::int64_t limit() const noexcept { return limit_; }
    const Integer& operator[](std::int64_t m) const { return coeffs_.at(static_cast<std::size_t>(m - 1)); }
    Integer& operator[](std::int64_t m) { return coeffs_.at(static_cast<std::size_t>(m - 1)); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    /// Set when the series was built from multiplicative pieces.
    bool multiplicative() const noexcept { return multiplicative_; }
    void set_multiplicative(bool flag) noexcept { multiplicative_ = flag; }

    /// (m, a(m)) for every nonzero coefficient, ascending m.
    std::vector<std::pair<std::int64_t, Integer>> nonzero_terms() const;

    friend bool operator==(const CoeffSeries& x, const CoeffSeries& y) {
        return x.limit_ == y.limit_ && x.coeffs_ == y.coeffs_;
    }

private:
    std::int64_t limit_;
    std::vector<Integer> coeffs_;
    bool multiplicative_ = false;
};

/// Power series in t = p^-s, lowest degree first.
using Polynomial = std::vector<Integer>;

/// Local factor numerator(t) / denominator(t) at the prime p, with t = p^-s.
struct EulerFactor {
    std::int64_t prime;
    Polynomial numerator{1};
    Polynomial denominator{1};

    /// 1 / (1 - t^step)^power.
    static EulerFactor inverse_power(std::int64_t p, int step, int power);
    /// Coefficients of t^0 .. t^max_degree by long division.
    Polynomial expand(int max_degree) const;
};

using EulerRule = std::function<EulerFactor(std::int64_t p)>;

/// a(m) = product over p^e || m of the t^e coefficient of rule(p).
CoeffSeries expand_euler(const EulerRule& rule, std::int64_t limit);

CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b);
CoeffSeries dirichlet_inverse(const CoeffSeries& a);

/// b(m) = a(r) if m = r^k else 0, with result limit target_limit; requires
/// floor(target_limit^(1/k)) <= a.limit().
CoeffSeries scale_argument(const CoeffSeries& a, int k, std::int64_t target_limit);
inline CoeffSeries scale_argument(const CoeffSeries& a, int k) { return scale_argument(a, k, a.limit()); }

/// b(m) = m^k a(m), i.e. the series evaluated at s - k.
CoeffSeries shift(const CoeffSeries& a, int k);

CoeffSeries dirichlet_polynomial(const std::map<std::int64_t, Integer>& terms, std::int64_t limit);

/// Sum of a(m) for m <= x.
Integer summatory(const CoeffSeries& a, std::int64_t x);

/// a(1) = 1 and a(mn) = a(m) a(n) for all coprime m, n with mn <= N.
bool check_multiplicative(const CoeffSeries& a);

}  // namespace simsub
