#include "simsub/quartic_ring.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace simsub {

namespace {

struct Pair {
    QuadInt x;
    QuadInt y;
};

Pair basis_pair(const QuadRing& quad, int k) {
    const QuadInt zero(quad, 0), one(quad, 1), w(quad, 0, 1);
    switch (k) {
        case 0: return {one, zero};
        case 1: return {zero, one};
        case 2: return {w, zero};
        default: return {zero, w};
    }
}

}  // namespace

QuarticRing::QuarticRing(QuarticLabel label, const QuadRing& quad) : label_(label), quad_(&quad) {
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            const Pair p = basis_pair(quad, j);
            const Pair q = basis_pair(quad, k);
            const QuadInt re = p.x * q.x - p.y * q.y;
            const QuadInt im = p.x * q.y + p.y * q.x;
            table_[j][k] = {static_cast<int>(re.a().get_si()), static_cast<int>(im.a().get_si()),
                            static_cast<int>(re.b().get_si()), static_cast<int>(im.b().get_si())};
        }
    }
    auto basis = [&](int k) {
        QuarticInt::Coeffs c{0, 0, 0, 0};
        c[k] = 1;
        return QuarticInt(*this, c);
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (table_[a][b] != table_[b][a]) throw std::logic_error("structure constants are not commutative");
            for (int c = 0; c < 4; ++c)
                if ((basis(a) * basis(b)) * basis(c) != basis(a) * (basis(b) * basis(c)))
                    throw std::logic_error("structure constants are not associative");
        }
}

const QuarticRing& QuarticRing::itau() {
    static const QuarticRing ring(QuarticLabel::ITau, QuadRing::tau());
    return ring;
}

const QuarticRing& QuarticRing::isqrt2() {
    static const QuarticRing ring(QuarticLabel::ISqrt2, QuadRing::sqrt2());
    return ring;
}

const QuarticRing& QuarticRing::get(QuarticLabel label) { return label == QuarticLabel::ITau ? itau() : isqrt2(); }

QuarticInt QuarticRing::real_unit() const {
    return QuarticInt::from_pair(*this, quad_->fundamental_unit(), QuadInt(*quad_));
}

QuarticInt QuarticRing::real_unit_inverse() const {
    return QuarticInt::from_pair(*this, quad_->fundamental_unit_inverse(), QuadInt(*quad_));
}

QuarticInt QuarticRing::i() const { return QuarticInt(*this, {0, 1, 0, 0}); }
QuarticInt QuarticRing::omega() const { return QuarticInt(*this, {0, 0, 1, 0}); }

QuarticInt QuarticInt::from_pair(const QuarticRing& ring, const QuadInt& x, const QuadInt& y) {
    if (&x.ring() != &ring.real_subring() || &y.ring() != &ring.real_subring())
        throw std::invalid_argument("from_pair: components outside the real subring");
    return QuarticInt(ring, {x.a(), y.a(), x.b(), y.b()});
}

QuadInt QuarticInt::real_part() const { return QuadInt(ring_->real_subring(), c_[0], c_[2]); }
QuadInt QuarticInt::imag_part() const { return QuadInt(ring_->real_subring(), c_[1], c_[3]); }

QuarticInt QuarticInt::operator-() const { return QuarticInt(*ring_, {-c_[0], -c_[1], -c_[2], -c_[3]}); }

QuarticInt& QuarticInt::operator+=(const QuarticInt& y) {
    if (ring_ != y.ring_) throw std::invalid_argument("quartic integers from different rings");
    for (int k = 0; k < 4; ++k) c_[k] += y.c_[k];
    return *this;
}

QuarticInt& QuarticInt::operator-=(const QuarticInt& y) {
    if (ring_ != y.ring_) throw std::invalid_argument("quartic integers from different rings");
    for (int k = 0; k < 4; ++k) c_[k] -= y.c_[k];
    return *this;
}

QuarticInt operator*(const QuarticInt& x, const QuarticInt& y) {
    if (x.ring_ != y.ring_) throw std::invalid_argument("quartic integers from different rings");
    QuarticInt::Coeffs out{0, 0, 0, 0};
    for (int j = 0; j < 4; ++j) {
        if (x.c_[j] == 0) continue;
        for (int k = 0; k < 4; ++k) {
            if (y.c_[k] == 0) continue;
            const Integer prod = x.c_[j] * y.c_[k];
            const auto& e = x.ring_->product(j, k);
            for (int t = 0; t < 4; ++t)
                if (e[t] != 0) out[t] += e[t] * prod;
        }
    }
    return QuarticInt(*x.ring_, std::move(out));
}

QuarticInt qmul(const QuarticInt& x, const QuarticInt& y) { return x * y; }

QuarticInt pow(const QuarticInt& x, unsigned e) {
    QuarticInt result(x.ring(), {1, 0, 0, 0});
    QuarticInt base = x;
    while (e) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

double QuarticInt::embedding_abs(int k) const {
    const double w = ring_->real_subring().omega(k);
    const std::complex<double> z(c_[0].get_d() + c_[2].get_d() * w, c_[1].get_d() + c_[3].get_d() * w);
    return std::abs(z);
}

std::string QuarticInt::to_string() const {
    static const char* const names[2][4] = {{"", "i", "τ", "iτ"}, {"", "i", "√2", "i√2"}};
    const int row = ring_->label() == QuarticLabel::ITau ? 0 : 1;
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        const Integer mag = abs(c_[k]);
        if (c_[k] < 0) os << "-";
        else if (!first) os << "+";
        if (k == 0 || mag != 1) os << mag;
        os << names[row][k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Integer> regular_rep(const QuarticInt& x) {
    std::vector<Integer> m(16, 0);
    for (int k = 0; k < 4; ++k) {
        QuarticInt::Coeffs basis{0, 0, 0, 0};
        basis[k] = 1;
        const QuarticInt col = x * QuarticInt(x.ring(), basis);
        for (int r = 0; r < 4; ++r) m[r * 4 + k] = col[r];
    }
    return m;
}

Integer abs_norm(const QuarticInt& x) { return abs(determinant(regular_rep(x), 4)); }

QuarticUnitForm quartic_unit_normal_form(const QuarticInt& u) {
    if (abs_norm(u) != 1) throw std::invalid_argument("quartic_unit_normal_form: " + u.to_string() + " is not a unit");
    const QuarticRing& ring = u.ring();
    const double mu = std::fabs(ring.real_subring().fundamental_unit().embedding(0));
    const auto guess = static_cast<std::int64_t>(std::llround(std::log(u.embedding_abs(0)) / std::log(mu)));
    const QuarticInt i = ring.i();
    for (std::int64_t l : {guess, guess - 1, guess + 1}) {
        const QuarticInt strip =
            l >= 0 ? pow(ring.real_unit_inverse(), static_cast<unsigned>(l)) : pow(ring.real_unit(), static_cast<unsigned>(-l));
        const QuarticInt residual = u * strip;
        QuarticInt ik(ring, {1, 0, 0, 0});
        for (int k = 0; k < 4; ++k) {
            if (residual == ik) return {k, l};
            ik = ik * i;
        }
    }
    throw UnitCounterexample("unit " + u.to_string() + " is not of the form i^k * mu^l");
}

}  // namespace simsub
