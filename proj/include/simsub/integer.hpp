#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace simsub {

using Integer = mpz_class;

/// Checked narrowing; throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& x);

bool is_prime(std::int64_t n);

/// Primes p <= n in increasing order.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Largest r >= 0 with r^k <= n.
std::int64_t integer_root(std::int64_t n, int k);

/// Exact determinant of a square row-major matrix (fraction-free Bareiss).
Integer determinant(std::vector<Integer> a, std::size_t n);

/// Row-major n x n product.
std::vector<Integer> mat_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n);

}  // namespace simsub
