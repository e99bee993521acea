#pragma once

// Exact arithmetic in the real quadratic rings Z[tau] (tau^2 = tau + 1) and
// Z[sqrt2] (sqrt2^2 = 2). Elements are a + b*w over arbitrary-precision
// integers; the ring is fixed by a pointer to one of two static descriptors.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "simsub/integer.hpp"

namespace simsub {

enum class QuadLabel { Tau, Sqrt2 };

enum class SplittingClass { Ramified, Split, Inert };

const char* to_string(SplittingClass c);

class QuadInt;

/// Descriptor for w^2 = c1*w + c0. Only the two static instances exist.
class QuadRing {
public:
    static const QuadRing& tau();
    static const QuadRing& sqrt2();
    static const QuadRing& get(QuadLabel label);

    QuadLabel label() const noexcept { return label_; }
    int c1() const noexcept { return c1_; }
    int c0() const noexcept { return c0_; }
    int discriminant() const noexcept { return c1_ * c1_ + 4 * c0_; }
    const char* symbol() const noexcept { return label_ == QuadLabel::Tau ? "τ" : "√2"; }

    /// tau for Z[tau], lambda = 1 + sqrt2 for Z[sqrt2].
    QuadInt fundamental_unit() const;
    QuadInt fundamental_unit_inverse() const;

    /// Real value of w under embedding k (0: w = (c1 + sqrt D)/2, 1: the conjugate root).
    double omega(int k) const;

    QuadRing(const QuadRing&) = delete;
    QuadRing& operator=(const QuadRing&) = delete;

private:
    QuadRing(QuadLabel label, int c1, int c0) : label_(label), c1_(c1), c0_(c0) {}
    QuadLabel label_;
    int c1_;
    int c0_;
};

class QuadInt {
public:
    QuadInt() : ring_(&QuadRing::tau()) {}
    explicit QuadInt(const QuadRing& ring, Integer a = 0, Integer b = 0)
        : a_(std::move(a)), b_(std::move(b)), ring_(&ring) {}

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const QuadRing& ring() const noexcept { return *ring_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Field norm x * conj(x) = a^2 + c1*a*b - c0*b^2; may be negative.
    Integer norm() const;
    Integer trace() const;
    QuadInt conj() const;
    bool is_unit() const;

    /// Value under real embedding k (0 or 1) as a double.
    double embedding(int k) const;
    /// Exact sign (-1, 0, +1) of the value under embedding k.
    int embedding_sign(int k) const;

    QuadInt operator-() const { return QuadInt(*ring_, -a_, -b_); }
    QuadInt& operator+=(const QuadInt& y);
    QuadInt& operator-=(const QuadInt& y);
    QuadInt& operator*=(const QuadInt& y);

    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }
    /// Lexicographic on (a, b); only for use as a container key.
    friend bool operator<(const QuadInt& x, const QuadInt& y) {
        return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
    }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.to_string(); }

private:
    void require_same_ring(const QuadInt& y) const;

    Integer a_;
    Integer b_;
    const QuadRing* ring_;
};

inline QuadInt ztau(Integer a, Integer b = 0) { return QuadInt(QuadRing::tau(), std::move(a), std::move(b)); }
inline QuadInt zsqrt2(Integer a, Integer b = 0) { return QuadInt(QuadRing::sqrt2(), std::move(a), std::move(b)); }

QuadInt pow(const QuadInt& x, unsigned e);
/// fund^e for any integer e (negative powers use the inverse unit).
QuadInt fundamental_unit_power(const QuadRing& ring, std::int64_t e);

/// x / y if y divides x exactly.
std::optional<QuadInt> exact_divide(const QuadInt& x, const QuadInt& y);
bool divides(const QuadInt& y, const QuadInt& x);

/// Nearest-integer quotient of x by y (coordinates of x/y rounded half up).
QuadInt round_divide(const QuadInt& x, const QuadInt& y);
/// x - round_divide(x, y) * y. Depends only on the coset x + yR.
QuadInt reduce_mod(const QuadInt& x, const QuadInt& y);

/// Associate normalization: unit multiplier (sign * fund^exponent) with
/// canonical = unit * x. The canonical associate has a positive first
/// embedding and |s1/s2| in [1, fund^2).
struct AssociateForm {
    QuadInt canonical;
    int sign;
    std::int64_t exponent;
};
AssociateForm canonical_form(const QuadInt& x);
QuadInt canonical_associate(const QuadInt& x);

struct UnitForm {
    int sign;
    std::int64_t exponent;
};
/// u = sign * fund^exponent; throws std::invalid_argument for non-units.
UnitForm unit_normal_form(const QuadInt& u);

/// Canonical generator of the ideal (x, y).
QuadInt gcd(const QuadInt& x, const QuadInt& y);

struct Bezout {
    QuadInt g;
    QuadInt s;
    QuadInt t;
};
/// s*x + t*y = g, where g is the canonical gcd.
Bezout extended_gcd(const QuadInt& x, const QuadInt& y);

SplittingClass splitting_class(std::int64_t p, const QuadRing& ring);

/// All canonical associates x with |norm(x)| = n.
std::vector<QuadInt> elements_of_norm(const QuadRing& ring, std::int64_t n);

/// Canonical prime elements dividing x (x nonzero).
std::vector<QuadInt> prime_divisors(const QuadInt& x);

}  // namespace simsub
