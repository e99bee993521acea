#include "simsub/quad_ring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace simsub {

const char* to_string(SplittingClass c) {
    switch (c) {
        case SplittingClass::Ramified: return "ramified";
        case SplittingClass::Split: return "split";
        case SplittingClass::Inert: return "inert";
    }
    return "?";
}

const QuadRing& QuadRing::tau() {
    static const QuadRing ring(QuadLabel::Tau, 1, 1);
    return ring;
}

const QuadRing& QuadRing::sqrt2() {
    static const QuadRing ring(QuadLabel::Sqrt2, 0, 2);
    return ring;
}

const QuadRing& QuadRing::get(QuadLabel label) { return label == QuadLabel::Tau ? tau() : sqrt2(); }

QuadInt QuadRing::fundamental_unit() const {
    return label_ == QuadLabel::Tau ? QuadInt(*this, 0, 1) : QuadInt(*this, 1, 1);
}

QuadInt QuadRing::fundamental_unit_inverse() const {
    // tau^-1 = tau - 1, (1 + sqrt2)^-1 = sqrt2 - 1
    return label_ == QuadLabel::Tau ? QuadInt(*this, -1, 1) : QuadInt(*this, -1, 1);
}

double QuadRing::omega(int k) const {
    const double root = std::sqrt(static_cast<double>(discriminant()));
    return (c1_ + (k == 0 ? root : -root)) / 2.0;
}

void QuadInt::require_same_ring(const QuadInt& y) const {
    if (ring_ != y.ring_) throw std::invalid_argument("quadratic integers from different rings");
}

Integer QuadInt::norm() const { return a_ * a_ + ring_->c1() * a_ * b_ - ring_->c0() * b_ * b_; }

Integer QuadInt::trace() const { return 2 * a_ + ring_->c1() * b_; }

QuadInt QuadInt::conj() const { return QuadInt(*ring_, a_ + b_ * ring_->c1(), -b_); }

bool QuadInt::is_unit() const {
    const Integer n = norm();
    return n == 1 || n == -1;
}

double QuadInt::embedding(int k) const { return a_.get_d() + b_.get_d() * ring_->omega(k); }

namespace {

// sign of p + q*sqrt(d), d > 0 not a square
int sign_surd(const Integer& p, const Integer& q, int d) {
    const int sp = sgn(p);
    const int sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    const Integer lhs = p * p;
    const Integer rhs = q * q * d;
    return lhs > rhs ? sp : sq;
}

Integer round_quotient(const Integer& p, const Integer& n) {
    // floor(p/n + 1/2) for n != 0
    Integer num = 2 * p + n;
    Integer den = 2 * n;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// |s1| >= |s2|  <=>  (s1 - s2)(s1 + s2) >= 0  <=>  b * trace >= 0
bool ratio_at_least_one(const QuadInt& x) { return sgn(x.b()) * sgn(x.trace()) >= 0; }

}  // namespace

int QuadInt::embedding_sign(int k) const {
    const Integer q = k == 0 ? b_ : Integer(-b_);
    return sign_surd(trace(), q, ring_->discriminant());
}

QuadInt& QuadInt::operator+=(const QuadInt& y) {
    require_same_ring(y);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& y) {
    require_same_ring(y);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& y) {
    require_same_ring(y);
    // (a + b w)(c + d w) = ac + c0 bd + (ad + bc + c1 bd) w
    const Integer bd = b_ * y.b_;
    Integer na = a_ * y.a_ + ring_->c0() * bd;
    Integer nb = a_ * y.b_ + b_ * y.a_ + ring_->c1() * bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

std::string QuadInt::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else {
        if (a_ != 0) os << a_ << (b_ > 0 ? "+" : "-");
        else if (b_ < 0) os << "-";
        const Integer mag = abs(b_);
        if (mag != 1) os << mag;
        os << ring_->symbol();
    }
    return os.str();
}

QuadInt pow(const QuadInt& x, unsigned e) {
    QuadInt result(x.ring(), 1, 0);
    QuadInt base = x;
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

QuadInt fundamental_unit_power(const QuadRing& ring, std::int64_t e) {
    const QuadInt base = e >= 0 ? ring.fundamental_unit() : ring.fundamental_unit_inverse();
    return pow(base, static_cast<unsigned>(e >= 0 ? e : -e));
}

std::optional<QuadInt> exact_divide(const QuadInt& x, const QuadInt& y) {
    if (y.is_zero()) throw std::invalid_argument("division by zero");
    const QuadInt p = x * y.conj();
    const Integer n = y.norm();
    if (!mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    Integer qa, qb;
    mpz_divexact(qa.get_mpz_t(), p.a().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), p.b().get_mpz_t(), n.get_mpz_t());
    return QuadInt(x.ring(), qa, qb);
}

bool divides(const QuadInt& y, const QuadInt& x) {
    if (y.is_zero()) return x.is_zero();
    return exact_divide(x, y).has_value();
}

QuadInt round_divide(const QuadInt& x, const QuadInt& y) {
    if (y.is_zero()) throw std::invalid_argument("division by zero");
    const QuadInt p = x * y.conj();
    const Integer n = y.norm();
    return QuadInt(x.ring(), round_quotient(p.a(), n), round_quotient(p.b(), n));
}

QuadInt reduce_mod(const QuadInt& x, const QuadInt& y) { return x - round_divide(x, y) * y; }

AssociateForm canonical_form(const QuadInt& x) {
    const QuadRing& ring = x.ring();
    if (x.is_zero()) return {x, 1, 0};
    const QuadInt fund = ring.fundamental_unit();
    const QuadInt fund_inv = ring.fundamental_unit_inverse();

    QuadInt y = x;
    std::int64_t exponent = 0;
    // Coarse step from the embedding magnitudes, then exact correction.
    const double s1 = std::fabs(x.embedding(0));
    const double s2 = std::fabs(x.embedding(1));
    if (std::isfinite(s1) && std::isfinite(s2) && s1 > 0 && s2 > 0) {
        const double log_fund = std::log(std::fabs(fund.embedding(0)));
        const auto k = static_cast<std::int64_t>(std::floor(std::log(s1 / s2) / (2 * log_fund)));
        if (k != 0) {
            y *= fundamental_unit_power(ring, -k);
            exponent -= k;
        }
    }
    while (!ratio_at_least_one(y)) {
        y *= fund;
        ++exponent;
    }
    for (QuadInt down = y * fund_inv; ratio_at_least_one(down); down = y * fund_inv) {
        y = down;
        --exponent;
    }
    int sign = 1;
    if (y.embedding_sign(0) < 0) {
        y = -y;
        sign = -1;
    }
    return {y, sign, exponent};
}

QuadInt canonical_associate(const QuadInt& x) { return canonical_form(x).canonical; }

UnitForm unit_normal_form(const QuadInt& u) {
    if (!u.is_unit()) throw std::invalid_argument("unit_normal_form: " + u.to_string() + " is not a unit");
    const AssociateForm f = canonical_form(u);
    // canonical associate of a unit is 1: 1 = sign * fund^exponent * u
    if (f.canonical != QuadInt(u.ring(), 1, 0))
        throw std::logic_error("unit_normal_form: canonical associate of a unit is not 1");
    return {f.sign, -f.exponent};
}

Bezout extended_gcd(const QuadInt& x, const QuadInt& y) {
    if (x.is_zero() && y.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    const QuadRing& ring = x.ring();
    if (&ring != &y.ring()) throw std::invalid_argument("quadratic integers from different rings");
    QuadInt r0 = x, r1 = y;
    QuadInt s0(ring, 1), s1(ring, 0);
    QuadInt t0(ring, 0), t1(ring, 1);
    while (!r1.is_zero()) {
        const QuadInt q = round_divide(r0, r1);
        QuadInt r2 = r0 - q * r1;
        QuadInt s2 = s0 - q * s1;
        QuadInt t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const AssociateForm f = canonical_form(r0);
    const QuadInt unit = QuadInt(ring, f.sign) * fundamental_unit_power(ring, f.exponent);
    return {f.canonical, unit * s0, unit * t0};
}

QuadInt gcd(const QuadInt& x, const QuadInt& y) { return extended_gcd(x, y).g; }

SplittingClass splitting_class(std::int64_t p, const QuadRing& ring) {
    if (!is_prime(p)) throw std::invalid_argument("splitting_class: " + std::to_string(p) + " is not prime");
    if (ring.label() == QuadLabel::Tau) {
        if (p == 5) return SplittingClass::Ramified;
        const auto r = p % 5;
        return (r == 1 || r == 4) ? SplittingClass::Split : SplittingClass::Inert;
    }
    if (p == 2) return SplittingClass::Ramified;
    const auto r = p % 8;
    return (r == 1 || r == 7) ? SplittingClass::Split : SplittingClass::Inert;
}

std::vector<QuadInt> elements_of_norm(const QuadRing& ring, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("elements_of_norm: n must be positive");
    // canonical: |s2| <= sqrt(n), |s1| < fund * sqrt(n)
    const double root_n = std::sqrt(static_cast<double>(n));
    const double fund = std::fabs(ring.fundamental_unit().embedding(0));
    const double span = (fund + 1.0) * root_n + 1.0;
    const auto b_max = static_cast<std::int64_t>(span / std::sqrt(static_cast<double>(ring.discriminant()))) + 1;
    std::vector<QuadInt> out;
    for (std::int64_t b = -b_max; b <= b_max; ++b) {
        // |2a + c1 b| <= span
        const auto lo = static_cast<std::int64_t>(std::floor((-span - ring.c1() * b) / 2.0)) - 1;
        const auto hi = static_cast<std::int64_t>(std::ceil((span - ring.c1() * b) / 2.0)) + 1;
        for (std::int64_t a = lo; a <= hi; ++a) {
            const QuadInt x(ring, static_cast<long>(a), static_cast<long>(b));
            if (abs(x.norm()) != static_cast<long>(n)) continue;
            if (canonical_associate(x) == x) out.push_back(x);
        }
    }
    return out;
}

std::vector<QuadInt> prime_divisors(const QuadInt& x) {
    if (x.is_zero()) throw std::invalid_argument("prime_divisors: zero");
    std::vector<QuadInt> out;
    const Integer n = abs(x.norm());
    if (n == 1) return out;
    for (const auto& [p, e] : factorize(to_int64(n))) {
        (void)e;
        std::vector<QuadInt> candidates;
        if (splitting_class(p, x.ring()) == SplittingClass::Inert)
            candidates.push_back(QuadInt(x.ring(), static_cast<long>(p)));
        else
            candidates = elements_of_norm(x.ring(), p);
        for (const auto& pi : candidates)
            if (divides(pi, x)) out.push_back(pi);
    }
    return out;
}

}  // namespace simsub
