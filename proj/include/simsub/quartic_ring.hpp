#pragma once

// Rank-4 rings Z[i, tau] and Z[i, sqrt2] over the basis {1, i, w, i*w}.
// Multiplication runs through a structure-constant table built once from
// i^2 = -1 and the quadratic relation for w.

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simsub/integer.hpp"
#include "simsub/quad_ring.hpp"

namespace simsub {

enum class QuarticLabel { ITau, ISqrt2 };

class QuarticInt;

class QuarticRing {
public:
    static const QuarticRing& itau();
    static const QuarticRing& isqrt2();
    static const QuarticRing& get(QuarticLabel label);

    QuarticLabel label() const noexcept { return label_; }
    const QuadRing& real_subring() const noexcept { return *quad_; }
    /// e_j * e_k expressed in the basis.
    const std::array<int, 4>& product(int j, int k) const { return table_[j][k]; }

    /// tau (ITau) or lambda = 1 + sqrt2 (ISqrt2).
    QuarticInt real_unit() const;
    QuarticInt real_unit_inverse() const;
    QuarticInt i() const;
    QuarticInt omega() const;

    QuarticRing(const QuarticRing&) = delete;
    QuarticRing& operator=(const QuarticRing&) = delete;

private:
    QuarticRing(QuarticLabel label, const QuadRing& quad);
    QuarticLabel label_;
    const QuadRing* quad_;
    std::array<std::array<std::array<int, 4>, 4>, 4> table_{};
};

class QuarticInt {
public:
    using Coeffs = std::array<Integer, 4>;

    explicit QuarticInt(const QuarticRing& ring, Coeffs c = {0, 0, 0, 0}) : c_(std::move(c)), ring_(&ring) {}
    /// x + y*i with x, y in the real subring.
    static QuarticInt from_pair(const QuarticRing& ring, const QuadInt& x, const QuadInt& y);

    const Coeffs& coeffs() const noexcept { return c_; }
    const Integer& operator[](int k) const { return c_[k]; }
    const QuarticRing& ring() const noexcept { return *ring_; }
    QuadInt real_part() const;
    QuadInt imag_part() const;
    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    QuarticInt operator-() const;
    QuarticInt& operator+=(const QuarticInt& y);
    QuarticInt& operator-=(const QuarticInt& y);
    friend QuarticInt operator+(QuarticInt x, const QuarticInt& y) { return x += y; }
    friend QuarticInt operator-(QuarticInt x, const QuarticInt& y) { return x -= y; }
    friend QuarticInt operator*(const QuarticInt& x, const QuarticInt& y);
    friend bool operator==(const QuarticInt& x, const QuarticInt& y) { return x.ring_ == y.ring_ && x.c_ == y.c_; }
    friend bool operator!=(const QuarticInt& x, const QuarticInt& y) { return !(x == y); }

    /// |value| under the complex embedding with w -> omega(k).
    double embedding_abs(int k) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuarticInt& x) { return os << x.to_string(); }

private:
    Coeffs c_;
    const QuarticRing* ring_;
};

QuarticInt qmul(const QuarticInt& x, const QuarticInt& y);
QuarticInt pow(const QuarticInt& x, unsigned e);

/// Matrix of multiplication by x on the basis, row-major 4x4; column k is x * e_k.
std::vector<Integer> regular_rep(const QuarticInt& x);

/// |det(regular_rep(x))| = [M : xM] for x != 0.
Integer abs_norm(const QuarticInt& x);

/// Raised when a unit does not decompose as i^k * mu^l.
class UnitCounterexample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuarticUnitForm {
    int k;            // power of i, 0..3
    std::int64_t l;   // power of tau or lambda
};

/// u = i^k * mu^l exactly. Throws std::invalid_argument for non-units and
/// UnitCounterexample if the decomposition fails.
QuarticUnitForm quartic_unit_normal_form(const QuarticInt& u);

}  // namespace simsub
