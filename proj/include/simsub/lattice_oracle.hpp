#pragma once

// Brute-force ground truth for submodule counts. Full-rank sublattices of
// Z^r are enumerated in Hermite normal form, filtered by invariance under the
// multiplication actions of a ring's generators, and, where needed, by
// principality.
//
// HNF convention: basis vectors are the columns of an upper-triangular
// matrix H with H[i][i] > 0 and 0 <= H[i][j] < H[i][i] for j > i.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simsub/dirichlet.hpp"
#include "simsub/integer.hpp"

namespace simsub {

enum class Ambient { Z, ZTauAsZ2, ZITauAsZ4, ZISqrt2AsZ4, ZTau3AsZTauModule };

std::string_view to_string(Ambient a);
/// Rank of the ambient as a Z-module (Z itself is rank-agnostic; returns 0).
int ambient_rank(Ambient a);

inline constexpr std::int64_t kDefaultMaxCandidates = 10'000'000;

class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Submodule {
public:
    /// basis is row-major r x r and must already be in canonical HNF.
    Submodule(int rank, std::vector<std::int64_t> basis, Ambient ambient = Ambient::Z);

    int rank() const noexcept { return rank_; }
    Ambient ambient() const noexcept { return ambient_; }
    std::int64_t at(int row, int col) const { return basis_[static_cast<std::size_t>(row * rank_ + col)]; }
    const std::vector<std::int64_t>& basis() const noexcept { return basis_; }
    std::int64_t index() const;

    /// Exact membership by back substitution.
    bool contains(const std::vector<std::int64_t>& v) const;

    friend bool operator==(const Submodule& x, const Submodule& y) {
        return x.rank_ == y.rank_ && x.basis_ == y.basis_;
    }
    friend bool operator<(const Submodule& x, const Submodule& y) {
        return x.rank_ != y.rank_ ? x.rank_ < y.rank_ : x.basis_ < y.basis_;
    }

    std::string to_string() const;

private:
    int rank_;
    std::vector<std::int64_t> basis_;
    Ambient ambient_;
};

/// Multiplication by a ring generator on the ambient basis.
struct MultiplierAction {
    std::string generator;
    int rank;
    std::vector<std::int64_t> matrix;  // row-major

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
};

/// Generators of the ring structure on the ambient (empty for Z).
std::vector<MultiplierAction> ring_actions(Ambient ambient);

/// Canonical HNF of the lattice spanned by the given vectors (each of length r).
/// Throws std::invalid_argument unless they span a full-rank lattice.
Submodule hnf_from_generators(int rank, const std::vector<std::vector<Integer>>& generators,
                              Ambient ambient = Ambient::Z);

/// Number of HNF candidates of index m in rank r (the sum over diagonals
/// of prod d_i^(r-1-i)).
Integer predicted_candidates(int rank, std::int64_t index);

/// Every sublattice of Z^r with index m, each once, in deterministic order.
std::vector<Submodule> hnf_sublattices(int rank, std::int64_t index,
                                       std::int64_t max_candidates = kDefaultMaxCandidates,
                                       Ambient ambient = Ambient::Z);

/// Sublattices of index m invariant under every action. Uses column-wise
/// pruning; the result equals filtering hnf_sublattices by is_invariant.
std::vector<Submodule> invariant_sublattices(int rank, std::int64_t index, const std::vector<MultiplierAction>& actions,
                                             std::int64_t max_candidates = kDefaultMaxCandidates,
                                             Ambient ambient = Ambient::Z);

bool is_invariant(const Submodule& s, const std::vector<MultiplierAction>& actions);

/// Ideals of index m (sublattices closed under all ring generators).
std::vector<Submodule> ideals(Ambient ambient, std::int64_t index,
                              std::int64_t max_candidates = kDefaultMaxCandidates);
std::int64_t count_ideals(Ambient ambient, std::int64_t index, std::int64_t max_candidates = kDefaultMaxCandidates);

/// Search region used to look for principal generators.
struct GeneratorBox {
    double bound_first;   // bound on the first embedding magnitude
    double bound_second;  // bound on the second embedding magnitude
    std::int64_t scanned;
};

struct PrincipalIdeals {
    std::set<Submodule> ideals;
    GeneratorBox box;
};

/// All principal ideals aM of index m, found by scanning generators a inside
/// the unit fundamental domain enlarged by a factor of 2 per embedding.
PrincipalIdeals principal_ideals(Ambient ambient, std::int64_t index);

/// A generator a in s with aM = s, if any.
std::optional<std::vector<Integer>> principal_generator(const Submodule& s, Ambient ambient);
bool is_principal(const Submodule& s, Ambient ambient);

/// Ideals for class-number-one ambients, principal ideals for Z[i, sqrt2].
std::int64_t count_similarity_submodules(Ambient ambient, std::int64_t index,
                                         std::int64_t max_candidates = kDefaultMaxCandidates);

/// Generating function the oracle is compared against.
CoeffSeries reference_series(Ambient ambient, std::int64_t limit);

struct Mismatch {
    std::int64_t m;
    std::int64_t oracle;
    Integer expected;
};

struct VerifyReport {
    Ambient ambient;
    std::int64_t limit;
    std::int64_t checked = 0;
    std::int64_t matched = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::int64_t> oracle_counts;  // oracle_counts[m - 1]

    bool ok() const { return mismatches.empty() && checked == limit; }
    std::string summary() const;
};

/// Compares oracle counts with the reference series for every m <= limit.
/// For Ambient::Z the oracle counts all rank-2 sublattices against sigma1.
VerifyReport verify_series(Ambient ambient, std::int64_t limit, std::int64_t max_candidates = kDefaultMaxCandidates);

}  // namespace simsub
