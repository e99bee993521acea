#pragma once

// Similarities of the cubic module Z[tau]^3: rotations in SO(3, Q(tau)) from
// quaternions over Z[tau], their denominators, the index formula, and a
// counting oracle for similarity submodules.

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "simsub/lattice_oracle.hpp"
#include "simsub/quad_ring.hpp"

namespace simsub {

/// Element of Q(tau) in lowest terms with a canonical-associate denominator.
class QuadRat {
public:
    QuadRat() : num_(ztau(0)), den_(ztau(1)) {}
    QuadRat(const QuadInt& x) : num_(x), den_(ztau(1)) {}  // NOLINT: implicit embedding of Z[tau]
    QuadRat(const QuadInt& num, const QuadInt& den);

    const QuadInt& num() const noexcept { return num_; }
    const QuadInt& den() const noexcept { return den_; }
    bool is_integral() const { return den_ == ztau(1); }
    bool is_zero() const { return num_.is_zero(); }

    QuadRat operator-() const { return QuadRat(-num_, den_); }
    friend QuadRat operator+(const QuadRat& x, const QuadRat& y);
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return x + (-y); }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y);
    friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

    std::string to_string() const;

private:
    QuadInt num_;
    QuadInt den_;
};

using Matrix3 = std::array<QuadInt, 9>;  // row-major, entries in Z[tau]

/// Orthogonal 3x3 matrix over Q(tau), validated exactly on construction.
class Rotation3 {
public:
    using Entries = std::array<QuadRat, 9>;

    explicit Rotation3(Entries entries);
    static Rotation3 identity();

    const QuadRat& at(int i, int j) const { return entries_[static_cast<std::size_t>(3 * i + j)]; }
    const Entries& entries() const noexcept { return entries_; }
    int determinant() const noexcept { return det_; }
    Rotation3 transpose() const;
    bool is_signed_permutation() const;

    friend Rotation3 operator*(const Rotation3& x, const Rotation3& y);
    friend bool operator==(const Rotation3& x, const Rotation3& y) { return x.entries_ == y.entries_; }

    /// Ordering on exact entries, for deduplication.
    std::vector<Integer> key() const;
    std::string to_string() const;

private:
    Entries entries_;
    int det_;
};

struct QuatTau {
    std::array<QuadInt, 4> c;

    QuadInt norm_sq() const;
    bool is_primitive() const;
};

Rotation3 quat_to_rotation(const QuatTau& q);

/// Canonical least common denominator of the entries.
QuadInt den(const Rotation3& r);

/// den(r) * r as a matrix over Z[tau].
Matrix3 integral_part(const Rotation3& r);

/// 6x6 integer matrix of a Z[tau]-linear map on the Z-basis
/// {e1, tau e1, e2, tau e2, e3, tau e3}.
std::vector<Integer> integer_representation(const Matrix3& m);

/// |N(alpha)|^3 |N(den R)|^3 for f = alpha * den(R) * R; asserts agreement
/// with the rank-6 determinant.
Integer similarity_index(const QuadInt& alpha, const Rotation3& r);

struct RotationRecord {
    Rotation3 rotation;
    QuadInt denominator;
    std::int64_t den_norm;  // |N(den)|
};

struct RotationEnumeration {
    std::int64_t bound;           // largest |N(den)| collected
    std::int64_t quat_norm_bound; // |N(|q|^2)| scanned
    std::int64_t quaternions_scanned = 0;
    std::vector<RotationRecord> rotations;  // sorted by den norm, then entries

    std::map<std::int64_t, std::int64_t> counts_by_norm() const;
};

/// All of SO(3, Q(tau)) with |N(den)| <= bound, each once.
RotationEnumeration enumerate_rotations(std::int64_t bound, std::int64_t max_candidates = kDefaultMaxCandidates);

/// Rank-3 Z[tau]-submodule of Z[tau]^3 in canonical HNF (columns are basis
/// vectors; diagonal entries canonical associates; entries above the
/// diagonal reduced modulo it).
class ZTauSubmodule {
public:
    explicit ZTauSubmodule(Matrix3 basis) : basis_(std::move(basis)) {}
    const QuadInt& at(int i, int j) const { return basis_[static_cast<std::size_t>(3 * i + j)]; }
    const Matrix3& basis() const noexcept { return basis_; }
    Integer index() const;

    friend bool operator==(const ZTauSubmodule& x, const ZTauSubmodule& y) { return x.basis_ == y.basis_; }
    friend bool operator<(const ZTauSubmodule& x, const ZTauSubmodule& y);
    std::string to_string() const;

private:
    Matrix3 basis_;
};

using Vector3 = std::array<QuadInt, 3>;

ZTauSubmodule hnf_over_ztau(const std::vector<Vector3>& generators);

/// Columns of m as generators.
std::vector<Vector3> columns(const Matrix3& m);

/// Number of distinct submodules alpha * den(R) * R * Z[tau]^3 of index m.
std::int64_t count_submodules_3d(std::int64_t index, std::int64_t max_candidates = kDefaultMaxCandidates);
/// Same count using a precomputed enumeration with bound >= cbrt(index).
std::int64_t count_submodules_3d(std::int64_t index, const RotationEnumeration& rotations);

bool is_unit_similarity(const QuadInt& alpha, const Rotation3& r);

/// x -> alpha * R x + v with den(R) dividing alpha.
struct AffineSimilarity {
    QuadInt alpha;
    Rotation3 rotation;
    Vector3 translation;

    AffineSimilarity(QuadInt alpha, Rotation3 rotation, Vector3 translation);
    static AffineSimilarity translation_only(Vector3 v);

    Matrix3 linear() const;
    Vector3 apply(const Vector3& x) const;
    friend bool operator==(const AffineSimilarity& f, const AffineSimilarity& g) {
        return f.linear() == g.linear() && f.translation == g.translation;
    }
};

/// (v1, L1) o (v2, L2) = (v1 + L1 v2, L1 L2).
AffineSimilarity compose_affine(const AffineSimilarity& f, const AffineSimilarity& g);

Matrix3 mat_mul(const Matrix3& x, const Matrix3& y);
Matrix3 scalar_mul(const QuadInt& a, const Matrix3& m);

}  // namespace simsub
