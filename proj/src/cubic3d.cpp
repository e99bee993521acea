#include "simsub/cubic3d.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "simsub/parallel.hpp"

namespace simsub {

namespace {

QuadInt divide_exact(const QuadInt& x, const QuadInt& y) {
    auto q = exact_divide(x, y);
    if (!q) throw std::logic_error(y.to_string() + " does not divide " + x.to_string());
    return *q;
}

QuadInt lcm(const QuadInt& x, const QuadInt& y) { return canonical_associate(divide_exact(x * y, gcd(x, y))); }

}  // namespace

// ---------------------------------------------------------------- QuadRat

QuadRat::QuadRat(const QuadInt& num, const QuadInt& den) : num_(num), den_(den) {
    if (&num.ring() != &QuadRing::tau() || &den.ring() != &QuadRing::tau())
        throw std::invalid_argument("QuadRat: entries must lie in Z[tau]");
    if (den_.is_zero()) throw std::invalid_argument("QuadRat: zero denominator");
    if (num_.is_zero()) {
        den_ = ztau(1);
        return;
    }
    const QuadInt g = gcd(num_, den_);
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
    const AssociateForm f = canonical_form(den_);
    den_ = f.canonical;
    num_ *= QuadInt(QuadRing::tau(), f.sign) * fundamental_unit_power(QuadRing::tau(), f.exponent);
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    if (x.den_ == y.den_) return QuadRat(x.num_ + y.num_, x.den_);
    return QuadRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    if (x.is_zero() || y.is_zero()) return QuadRat();
    return QuadRat(x.num_ * y.num_, x.den_ * y.den_);
}

std::string QuadRat::to_string() const {
    if (is_integral()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// -------------------------------------------------------------- Rotation3

namespace {

QuadRat det3(const Rotation3::Entries& e) {
    auto m = [&](int i, int j) -> const QuadRat& { return e[static_cast<std::size_t>(3 * i + j)]; };
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Rotation3::Entries multiply(const Rotation3::Entries& x, const Rotation3::Entries& y) {
    Rotation3::Entries out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QuadRat s;
            for (int k = 0; k < 3; ++k) s = s + x[static_cast<std::size_t>(3 * i + k)] * y[static_cast<std::size_t>(3 * k + j)];
            out[static_cast<std::size_t>(3 * i + j)] = s;
        }
    return out;
}

Rotation3::Entries transposed(const Rotation3::Entries& x) {
    Rotation3::Entries out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(3 * i + j)] = x[static_cast<std::size_t>(3 * j + i)];
    return out;
}

}  // namespace

Rotation3::Rotation3(Entries entries) : entries_(std::move(entries)), det_(0) {
    const Entries gram = multiply(entries_, transposed(entries_));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (gram[static_cast<std::size_t>(3 * i + j)] != QuadRat(ztau(i == j ? 1 : 0)))
                throw std::invalid_argument("Rotation3: matrix is not orthogonal");
    const QuadRat d = det3(entries_);
    if (d == QuadRat(ztau(1))) det_ = 1;
    else if (d == QuadRat(ztau(-1))) det_ = -1;
    else throw std::invalid_argument("Rotation3: determinant is not +-1");
}

Rotation3 Rotation3::identity() {
    Entries e;
    for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(4 * i)] = QuadRat(ztau(1));
    return Rotation3(e);
}

Rotation3 Rotation3::transpose() const { return Rotation3(transposed(entries_)); }

Rotation3 operator*(const Rotation3& x, const Rotation3& y) { return Rotation3(multiply(x.entries_, y.entries_)); }

bool Rotation3::is_signed_permutation() const {
    for (int i = 0; i < 3; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 3; ++j) {
            const QuadRat& e = at(i, j);
            if (e.is_zero()) continue;
            if (e != QuadRat(ztau(1)) && e != QuadRat(ztau(-1))) return false;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

std::vector<Integer> Rotation3::key() const {
    std::vector<Integer> k;
    k.reserve(36);
    for (const auto& e : entries_) {
        k.push_back(e.num().a());
        k.push_back(e.num().b());
        k.push_back(e.den().a());
        k.push_back(e.den().b());
    }
    return k;
}

std::string Rotation3::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- quaternions

QuadInt QuatTau::norm_sq() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

bool QuatTau::is_primitive() const {
    QuadInt g = ztau(0);
    for (const auto& x : c)
        if (!x.is_zero()) g = g.is_zero() ? canonical_associate(x) : gcd(g, x);
    return !g.is_zero() && g.is_unit();
}

namespace {

// Euler-Rodrigues numerator matrix; R = M / |q|^2.
std::array<QuadInt, 9> rodrigues(const QuadInt& a, const QuadInt& b, const QuadInt& c, const QuadInt& d) {
    using T = QuadInt;
    auto twice = [](const T& x) { return x + x; };
    return {a * a + b * b - c * c - d * d, twice(b * c - a * d),         twice(b * d + a * c),
            twice(b * c + a * d),         a * a - b * b + c * c - d * d, twice(c * d - a * b),
            twice(b * d - a * c),         twice(c * d + a * b),         a * a - b * b - c * c + d * d};
}

}  // namespace

Rotation3 quat_to_rotation(const QuatTau& q) {
    const QuadInt n = q.norm_sq();
    if (n.is_zero()) throw std::invalid_argument("quat_to_rotation: zero quaternion");
    if (!q.is_primitive()) throw std::invalid_argument("quat_to_rotation: quaternion is not primitive");
    const auto m = rodrigues(q.c[0], q.c[1], q.c[2], q.c[3]);
    Rotation3::Entries e;
    for (std::size_t k = 0; k < 9; ++k) e[k] = QuadRat(m[k], n);
    Rotation3 r(e);
    if (r.determinant() != 1) throw std::logic_error("quat_to_rotation: determinant is not 1");
    return r;
}

QuadInt den(const Rotation3& r) {
    QuadInt l = ztau(1);
    for (const auto& e : r.entries()) l = lcm(l, e.den());
    return l;
}

Matrix3 integral_part(const Rotation3& r) {
    const QuadInt d = den(r);
    Matrix3 m;
    for (std::size_t k = 0; k < 9; ++k) m[k] = r.entries()[k].num() * divide_exact(d, r.entries()[k].den());
    return m;
}

std::vector<Integer> integer_representation(const Matrix3& m) {
    std::vector<Integer> out(36, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const QuadInt& x = m[static_cast<std::size_t>(3 * i + j)];
            // x*1 = a + b tau, x*tau = b + (a+b) tau
            out[static_cast<std::size_t>((2 * i) * 6 + 2 * j)] = x.a();
            out[static_cast<std::size_t>((2 * i + 1) * 6 + 2 * j)] = x.b();
            out[static_cast<std::size_t>((2 * i) * 6 + 2 * j + 1)] = x.b();
            out[static_cast<std::size_t>((2 * i + 1) * 6 + 2 * j + 1)] = x.a() + x.b();
        }
    return out;
}

Matrix3 mat_mul(const Matrix3& x, const Matrix3& y) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QuadInt s = ztau(0);
            for (int k = 0; k < 3; ++k) s += x[static_cast<std::size_t>(3 * i + k)] * y[static_cast<std::size_t>(3 * k + j)];
            out[static_cast<std::size_t>(3 * i + j)] = s;
        }
    return out;
}

Matrix3 scalar_mul(const QuadInt& a, const Matrix3& m) {
    Matrix3 out;
    for (std::size_t k = 0; k < 9; ++k) out[k] = a * m[k];
    return out;
}

Integer similarity_index(const QuadInt& alpha, const Rotation3& r) {
    if (alpha.is_zero()) throw std::invalid_argument("similarity_index: alpha must be nonzero");
    const QuadInt d = den(r);
    const Integer na = abs(alpha.norm()), nd = abs(d.norm());
    const Integer index = na * na * na * nd * nd * nd;
    const Integer det6 = abs(determinant(integer_representation(scalar_mul(alpha, integral_part(r))), 6));
    if (det6 != index)
        throw std::logic_error("similarity_index: norm formula " + index.get_str() + " disagrees with determinant " +
                               det6.get_str());
    return index;
}

// ---------------------------------------------------------- enumeration

std::map<std::int64_t, std::int64_t> RotationEnumeration::counts_by_norm() const {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& r : rotations) ++out[r.den_norm];
    return out;
}

namespace {

struct Small {
    std::int64_t a, b;
};

Small mul(Small x, Small y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b}; }
Small add(Small x, Small y) { return {x.a + y.a, x.b + y.b}; }
Small sub(Small x, Small y) { return {x.a - y.a, x.b - y.b}; }
std::int64_t norm(Small x) { return x.a * x.a + x.a * x.b - x.b * x.b; }
bool divisible(Small x, std::int64_t k) { return x.a % k == 0 && x.b % k == 0; }
QuadInt big(Small x) { return ztau(static_cast<long>(x.a), static_cast<long>(x.b)); }

struct Part {
    Small value;
    Small square;
    double s0sq, s1sq;
};

}  // namespace

RotationEnumeration enumerate_rotations(std::int64_t bound, std::int64_t max_candidates) {
    if (bound < 1) throw std::invalid_argument("enumerate_rotations: bound must be positive");
    // For primitive q, g = gcd(|q|^2, content of the numerator matrix) divides 4
    // (it divides 4a^2, 4b^2, 4c^2, 4d^2), so den = |q|^2 / g and
    // |N(|q|^2)| <= 16 |N(den)|.
    const std::int64_t quat_bound = 16 * bound;
    const double w0 = QuadRing::tau().omega(0), w1 = QuadRing::tau().omega(1);
    // q -> tau q scales the embedding ratio of |q|^2 by tau^4, so a
    // representative has ratio in [tau^-2, tau^2); each embedding is then at
    // most tau sqrt(quat_bound), enlarged by a safety factor of 2.
    const double embed = 2.0 * w0 * std::sqrt(static_cast<double>(quat_bound));
    const double predicted = std::pow(M_PI, 4) * std::pow(embed, 4) / 100.0;
    if (predicted > static_cast<double>(max_candidates))
        throw ResourceLimitExceeded("quaternion scan for bound " + std::to_string(bound) + " needs about " +
                                    std::to_string(static_cast<long long>(predicted)) + " candidates (ceiling " +
                                    std::to_string(max_candidates) + ")");
    const double radius = std::sqrt(embed);
    std::vector<Part> parts;
    const auto b_max = static_cast<std::int64_t>(2 * radius / (w0 - w1)) + 1;
    for (std::int64_t b = -b_max; b <= b_max; ++b) {
        const auto a_lo = static_cast<std::int64_t>(std::floor(std::max(-radius - b * w0, -radius - b * w1))) - 1;
        const auto a_hi = static_cast<std::int64_t>(std::ceil(std::min(radius - b * w0, radius - b * w1))) + 1;
        for (std::int64_t a = a_lo; a <= a_hi; ++a) {
            const double s0 = a + b * w0, s1 = a + b * w1;
            if (s0 * s0 > embed || s1 * s1 > embed) continue;
            const Small v{a, b};
            parts.push_back({v, mul(v, v), s0 * s0, s1 * s1});
        }
    }

    using Found = std::map<std::vector<Integer>, RotationRecord>;
    std::vector<Found> blocks(parts.size());
    std::vector<std::int64_t> scanned(parts.size(), 0);
    const double slack = embed * (1 + 1e-9);
    parallel_for(parts.size(), [&](std::size_t i0) {
        const Part& p0 = parts[i0];
        for (const Part& p1 : parts) {
            const double e01 = p0.s0sq + p1.s0sq, f01 = p0.s1sq + p1.s1sq;
            if (e01 > slack || f01 > slack) continue;
            for (const Part& p2 : parts) {
                const double e012 = e01 + p2.s0sq, f012 = f01 + p2.s1sq;
                if (e012 > slack || f012 > slack) continue;
                const Small partial = add(add(p0.square, p1.square), p2.square);
                for (const Part& p3 : parts) {
                    if (e012 + p3.s0sq > slack || f012 + p3.s1sq > slack) continue;
                    ++scanned[i0];
                    const Small n = add(partial, p3.square);
                    const std::int64_t nn = norm(n);
                    if (nn <= 0 || nn > quat_bound) continue;
                    const Small a = p0.value, b = p1.value, c = p2.value, d = p3.value;
                    const std::array<Small, 9> num = {
                        sub(add(mul(a, a), mul(b, b)), add(mul(c, c), mul(d, d))),
                        add(sub(mul(b, c), mul(a, d)), sub(mul(b, c), mul(a, d))),
                        add(add(mul(b, d), mul(a, c)), add(mul(b, d), mul(a, c))),
                        add(add(mul(b, c), mul(a, d)), add(mul(b, c), mul(a, d))),
                        sub(add(mul(a, a), mul(c, c)), add(mul(b, b), mul(d, d))),
                        add(sub(mul(c, d), mul(a, b)), sub(mul(c, d), mul(a, b))),
                        add(sub(mul(b, d), mul(a, c)), sub(mul(b, d), mul(a, c))),
                        add(add(mul(c, d), mul(a, b)), add(mul(c, d), mul(a, b))),
                        sub(add(mul(a, a), mul(d, d)), add(mul(b, b), mul(c, c)))};
                    // 2 is prime in Z[tau], so g is 1, 2 or 4 for primitive q
                    int twos = 0;
                    for (std::int64_t unit = 2; twos < 2; unit *= 2, ++twos) {
                        bool all = divisible(n, unit);
                        for (const Small& e : num) all = all && divisible(e, unit);
                        if (!all) break;
                    }
                    const std::int64_t dn = nn >> (2 * twos);
                    if (dn > bound) continue;
                    const QuatTau q{{big(a), big(b), big(c), big(d)}};
                    if (!q.is_primitive()) continue;
                    const QuadInt nq = big(n);
                    const QuadInt d_r = canonical_associate(ztau(static_cast<long>(n.a / (1 << twos)), static_cast<long>(n.b / (1 << twos))));
                    Rotation3::Entries e;
                    for (std::size_t k = 0; k < 9; ++k) e[k] = QuadRat(big(num[k]), nq);
                    Rotation3 r(e);
                    if (r.determinant() != 1) throw std::logic_error("enumerate_rotations: improper rotation");
                    if (den(r) != d_r) throw std::logic_error("enumerate_rotations: denominator mismatch");
                    auto key = r.key();
                    blocks[i0].try_emplace(std::move(key), RotationRecord{std::move(r), d_r, dn});
                }
            }
        }
    });

    Found merged;
    RotationEnumeration out{bound, quat_bound, 0, {}};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        out.quaternions_scanned += scanned[i];
        for (auto& [k, rec] : blocks[i]) merged.try_emplace(k, std::move(rec));
    }
    for (auto& [k, rec] : merged) out.rotations.push_back(std::move(rec));
    std::stable_sort(out.rotations.begin(), out.rotations.end(),
                     [](const RotationRecord& x, const RotationRecord& y) { return x.den_norm < y.den_norm; });
    return out;
}

// ------------------------------------------------------- Z[tau]-module HNF

Integer ZTauSubmodule::index() const {
    Integer p = 1;
    for (int i = 0; i < 3; ++i) p *= abs(at(i, i).norm());
    return p;
}

bool operator<(const ZTauSubmodule& x, const ZTauSubmodule& y) {
    for (std::size_t k = 0; k < 9; ++k) {
        if (x.basis_[k] < y.basis_[k]) return true;
        if (y.basis_[k] < x.basis_[k]) return false;
    }
    return false;
}

std::string ZTauSubmodule::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<Vector3> columns(const Matrix3& m) {
    std::vector<Vector3> out;
    for (int j = 0; j < 3; ++j) out.push_back({m[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(3 + j)], m[static_cast<std::size_t>(6 + j)]});
    return out;
}

ZTauSubmodule hnf_over_ztau(const std::vector<Vector3>& generators) {
    std::vector<Vector3> cols;
    for (const auto& g : generators) {
        for (const auto& e : g)
            if (&e.ring() != &QuadRing::tau()) throw std::invalid_argument("hnf_over_ztau: entries must lie in Z[tau]");
        if (!(g[0].is_zero() && g[1].is_zero() && g[2].is_zero())) cols.push_back(g);
    }
    std::array<Vector3, 3> basis;
    for (int row = 2; row >= 0; --row) {
        std::size_t pivot = cols.size();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c][row].is_zero()) continue;
            if (pivot == cols.size()) {
                pivot = c;
                continue;
            }
            const Bezout bz = extended_gcd(cols[pivot][row], cols[c][row]);
            const QuadInt xp = divide_exact(cols[pivot][row], bz.g);
            const QuadInt xc = divide_exact(cols[c][row], bz.g);
            for (int i = 0; i < 3; ++i) {
                const QuadInt p = cols[pivot][i], q = cols[c][i];
                cols[pivot][i] = bz.s * p + bz.t * q;
                cols[c][i] = xp * q - xc * p;
            }
        }
        if (pivot == cols.size()) throw std::invalid_argument("hnf_over_ztau: generators do not span rank 3");
        basis[row] = cols[pivot];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pivot));
        const AssociateForm f = canonical_form(basis[row][row]);
        const QuadInt unit = ztau(f.sign) * fundamental_unit_power(QuadRing::tau(), f.exponent);
        for (auto& e : basis[row]) e *= unit;
    }
    for (const auto& c : cols)
        for (const auto& e : c)
            if (!e.is_zero()) throw std::logic_error("hnf_over_ztau: residual column is nonzero");
    for (int j = 1; j < 3; ++j)
        for (int i = j - 1; i >= 0; --i) {
            const QuadInt q = round_divide(basis[j][i], basis[i][i]);
            if (q.is_zero()) continue;
            for (int k = 0; k <= i; ++k) basis[j][k] -= q * basis[i][k];
        }
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(3 * i + j)] = basis[j][i];
    return ZTauSubmodule(m);
}

std::int64_t count_submodules_3d(std::int64_t index, std::int64_t max_candidates) {
    if (index < 1) throw std::invalid_argument("count_submodules_3d: index must be positive");
    const std::int64_t n = integer_root(index, 3);
    if (n * n * n != index) return 0;
    return count_submodules_3d(index, enumerate_rotations(n, max_candidates));
}

std::int64_t count_submodules_3d(std::int64_t index, const RotationEnumeration& rots) {
    if (index < 1) throw std::invalid_argument("count_submodules_3d: index must be positive");
    const std::int64_t n = integer_root(index, 3);
    if (n * n * n != index) return 0;
    if (rots.bound < n) throw std::invalid_argument("count_submodules_3d: rotation enumeration bound is too small");
    std::set<ZTauSubmodule> found;
    for (const auto& rec : rots.rotations) {
        if (n % rec.den_norm != 0) continue;
        const Matrix3 base = integral_part(rec.rotation);
        for (const QuadInt& alpha : elements_of_norm(QuadRing::tau(), n / rec.den_norm))
            found.insert(hnf_over_ztau(columns(scalar_mul(alpha, base))));
    }
    return static_cast<std::int64_t>(found.size());
}

bool is_unit_similarity(const QuadInt& alpha, const Rotation3& r) { return alpha.is_unit() && r.is_signed_permutation(); }

// ---------------------------------------------------------------- affine

AffineSimilarity::AffineSimilarity(QuadInt a, Rotation3 r, Vector3 v)
    : alpha(std::move(a)), rotation(std::move(r)), translation(std::move(v)) {
    if (alpha.is_zero()) throw std::invalid_argument("AffineSimilarity: zero scale");
    if (!divides(den(rotation), alpha))
        throw std::invalid_argument("AffineSimilarity: den(R) must divide alpha for the map to preserve Z[tau]^3");
}

AffineSimilarity AffineSimilarity::translation_only(Vector3 v) {
    return AffineSimilarity(ztau(1), Rotation3::identity(), std::move(v));
}

Matrix3 AffineSimilarity::linear() const {
    Matrix3 m;
    for (std::size_t k = 0; k < 9; ++k) {
        const QuadRat& e = rotation.entries()[k];
        m[k] = e.num() * divide_exact(alpha, e.den());
    }
    return m;
}

Vector3 AffineSimilarity::apply(const Vector3& x) const {
    const Matrix3 l = linear();
    Vector3 out = translation;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += l[static_cast<std::size_t>(3 * i + j)] * x[j];
    return out;
}

AffineSimilarity compose_affine(const AffineSimilarity& f, const AffineSimilarity& g) {
    return AffineSimilarity(f.alpha * g.alpha, f.rotation * g.rotation, f.apply(g.translation));
}

}  // namespace simsub
