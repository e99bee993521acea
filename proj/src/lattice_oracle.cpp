#include "simsub/lattice_oracle.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "simsub/parallel.hpp"
#include "simsub/quad_ring.hpp"
#include "simsub/quartic_ring.hpp"
#include "simsub/zeta_catalog.hpp"

namespace simsub {

std::string_view to_string(Ambient a) {
    switch (a) {
        case Ambient::Z: return "Z";
        case Ambient::ZTauAsZ2: return "Z[tau] as Z^2";
        case Ambient::ZITauAsZ4: return "Z[i,tau] as Z^4";
        case Ambient::ZISqrt2AsZ4: return "Z[i,sqrt2] as Z^4";
        case Ambient::ZTau3AsZTauModule: return "Z[tau]^3 as Z^6";
    }
    return "?";
}

int ambient_rank(Ambient a) {
    switch (a) {
        case Ambient::Z: return 0;
        case Ambient::ZTauAsZ2: return 2;
        case Ambient::ZITauAsZ4:
        case Ambient::ZISqrt2AsZ4: return 4;
        case Ambient::ZTau3AsZTauModule: return 6;
    }
    return 0;
}

Submodule::Submodule(int rank, std::vector<std::int64_t> basis, Ambient ambient)
    : rank_(rank), basis_(std::move(basis)), ambient_(ambient) {
    if (rank < 1 || basis_.size() != static_cast<std::size_t>(rank * rank))
        throw std::invalid_argument("Submodule: basis must be rank x rank");
    for (int i = 0; i < rank; ++i) {
        if (at(i, i) <= 0) throw std::invalid_argument("Submodule: diagonal must be positive");
        for (int j = 0; j < rank; ++j) {
            if (j < i && at(i, j) != 0) throw std::invalid_argument("Submodule: basis must be upper triangular");
            if (j > i && (at(i, j) < 0 || at(i, j) >= at(i, i)))
                throw std::invalid_argument("Submodule: off-diagonal entries must be reduced");
        }
    }
}

std::int64_t Submodule::index() const {
    std::int64_t p = 1;
    for (int i = 0; i < rank_; ++i) p *= at(i, i);
    return p;
}

bool Submodule::contains(const std::vector<std::int64_t>& v) const {
    if (v.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("contains: dimension mismatch");
    std::vector<std::int64_t> w = v;
    for (int t = rank_ - 1; t >= 0; --t) {
        if (w[t] % at(t, t) != 0) return false;
        const std::int64_t q = w[t] / at(t, t);
        if (q == 0) continue;
        for (int i = 0; i <= t; ++i) w[i] -= q * at(i, t);
    }
    return true;
}

std::string Submodule::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < rank_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<std::int64_t> MultiplierAction::apply(const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) out[i] += matrix[static_cast<std::size_t>(i * rank + j)] * v[j];
    return out;
}

namespace {

MultiplierAction quartic_action(const std::string& name, const QuarticInt& x) {
    MultiplierAction a{name, 4, {}};
    for (const Integer& e : regular_rep(x)) a.matrix.push_back(to_int64(e));
    return a;
}

}  // namespace

std::vector<MultiplierAction> ring_actions(Ambient ambient) {
    switch (ambient) {
        case Ambient::Z: return {};
        case Ambient::ZTauAsZ2:
            // basis {1, tau}: tau*1 = tau, tau*tau = 1 + tau
            return {{"tau", 2, {0, 1, 1, 1}}};
        case Ambient::ZITauAsZ4: {
            const auto& R = QuarticRing::itau();
            return {quartic_action("i", R.i()), quartic_action("tau", R.omega())};
        }
        case Ambient::ZISqrt2AsZ4: {
            const auto& R = QuarticRing::isqrt2();
            return {quartic_action("i", R.i()), quartic_action("sqrt2", R.omega())};
        }
        case Ambient::ZTau3AsZTauModule: {
            // basis {e1, tau e1, e2, tau e2, e3, tau e3}
            MultiplierAction a{"tau", 6, std::vector<std::int64_t>(36, 0)};
            for (int k = 0; k < 3; ++k) {
                a.matrix[static_cast<std::size_t>((2 * k + 1) * 6 + 2 * k)] = 1;
                a.matrix[static_cast<std::size_t>((2 * k) * 6 + 2 * k + 1)] = 1;
                a.matrix[static_cast<std::size_t>((2 * k + 1) * 6 + 2 * k + 1)] = 1;
            }
            return {a};
        }
    }
    return {};
}

Submodule hnf_from_generators(int rank, const std::vector<std::vector<Integer>>& generators, Ambient ambient) {
    const auto r = static_cast<std::size_t>(rank);
    std::vector<std::vector<Integer>> cols;
    for (const auto& g : generators) {
        if (g.size() != r) throw std::invalid_argument("hnf_from_generators: generator has wrong length");
        bool zero = true;
        for (const auto& e : g) zero = zero && e == 0;
        if (!zero) cols.push_back(g);
    }
    std::vector<std::vector<Integer>> basis(r);
    for (int row = rank - 1; row >= 0; --row) {
        // gather one column carrying gcd of this row; the rest get 0 there
        std::size_t pivot = cols.size();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c][row] == 0) continue;
            if (pivot == cols.size()) {
                pivot = c;
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cols[pivot][row].get_mpz_t(),
                       cols[c][row].get_mpz_t());
            const Integer xp = cols[pivot][row] / g;
            const Integer xc = cols[c][row] / g;
            for (std::size_t i = 0; i < r; ++i) {
                const Integer p = cols[pivot][i], q = cols[c][i];
                cols[pivot][i] = s * p + t * q;
                cols[c][i] = xp * q - xc * p;
            }
        }
        if (pivot == cols.size()) throw std::invalid_argument("hnf_from_generators: generators are rank deficient");
        basis[row] = cols[pivot];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pivot));
        if (basis[row][row] < 0)
            for (auto& e : basis[row]) e = -e;
    }
    for (const auto& c : cols)
        for (const auto& e : c)
            if (e != 0) throw std::logic_error("hnf_from_generators: residual column is nonzero");
    for (int j = 1; j < rank; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), basis[j][i].get_mpz_t(), basis[i][i].get_mpz_t());
            if (q == 0) continue;
            for (int k = 0; k <= i; ++k) basis[j][k] -= q * basis[i][k];
        }
    }
    std::vector<std::int64_t> flat(r * r, 0);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i <= j; ++i) flat[i * r + j] = to_int64(basis[j][i]);
    return Submodule(rank, std::move(flat), ambient);
}

namespace {

void diagonal_tuples(int rank, std::int64_t m, std::vector<std::int64_t>& prefix,
                     std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<int>(prefix.size()) == rank - 1) {
        prefix.push_back(m);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        prefix.push_back(d);
        diagonal_tuples(rank, m / d, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<std::int64_t>> diagonal_tuples(int rank, std::int64_t m) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix;
    diagonal_tuples(rank, m, prefix, out);
    return out;
}

// Fills columns from the last to the first. After column j is complete every
// action image of columns >= j has been reduced through rows >= j, and its
// entry at row j-1 must be divisible by d[j-1].
class HnfEnumerator {
public:
    HnfEnumerator(int rank, std::vector<std::int64_t> diag, const std::vector<MultiplierAction>& actions, Ambient ambient,
                  std::vector<Submodule>& out)
        : r_(rank), d_(std::move(diag)), actions_(actions), ambient_(ambient), out_(out),
          h_(static_cast<std::size_t>(rank * rank), 0) {
        for (int i = 0; i < r_; ++i) h_[idx(i, i)] = d_[i];
    }

    void run() { fill_column(r_ - 1); }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * r_ + j); }

    // images of columns c in [from, to) under every action, reduced through
    // columns r-1 .. j; requires divisibility at row j-1 when j >= 1
    bool images_ok(int j, int from, int to) const {
        std::vector<std::int64_t> col(static_cast<std::size_t>(r_)), v;
        for (int c = from; c < to; ++c) {
            for (int i = 0; i < r_; ++i) col[i] = h_[idx(i, c)];
            for (const auto& a : actions_) {
                v = a.apply(col);
                for (int t = r_ - 1; t >= j; --t) {
                    if (v[t] % d_[t] != 0) return false;
                    const std::int64_t q = v[t] / d_[t];
                    if (q != 0)
                        for (int i = 0; i <= t; ++i) v[i] -= q * h_[idx(i, t)];
                }
                if (j >= 1 && v[j - 1] % d_[j - 1] != 0) return false;
            }
        }
        return true;
    }

    void fill_column(int j) {
        if (j < 0) {
            out_.emplace_back(r_, h_, ambient_);
            return;
        }
        fill_entry(j, j - 1);
    }

    // choose H[i][j] for i = j-1 down to 0
    void fill_entry(int j, int i) {
        if (i < 0) {
            if (!actions_.empty() && !images_ok(j, j, j + 1)) return;
            fill_column(j - 1);
            return;
        }
        for (std::int64_t x = 0; x < d_[i]; ++x) {
            h_[idx(i, j)] = x;
            // columns right of j only see row j-1 of column j
            if (i == j - 1 && !actions_.empty() && !images_ok(j, j + 1, r_)) continue;
            fill_entry(j, i - 1);
        }
        h_[idx(i, j)] = 0;
    }

    int r_;
    std::vector<std::int64_t> d_;
    const std::vector<MultiplierAction>& actions_;
    Ambient ambient_;
    std::vector<Submodule>& out_;
    std::vector<std::int64_t> h_;
};

void check_rank(int rank) {
    if (rank < 1 || rank > 6) throw std::invalid_argument("rank must be between 1 and 6");
}

void guard(int rank, std::int64_t index, std::int64_t max_candidates) {
    const Integer predicted = predicted_candidates(rank, index);
    if (predicted > Integer(static_cast<long>(max_candidates)))
        throw ResourceLimitExceeded("enumeration of rank " + std::to_string(rank) + ", index " +
                                    std::to_string(index) + " needs " + predicted.get_str() +
                                    " HNF candidates (ceiling " + std::to_string(max_candidates) + ")");
}

std::vector<Submodule> enumerate(int rank, std::int64_t index, const std::vector<MultiplierAction>& actions,
                                 std::int64_t max_candidates, Ambient ambient) {
    check_rank(rank);
    if (index < 1) throw std::invalid_argument("index must be positive");
    for (const auto& a : actions)
        if (a.rank != rank) throw std::invalid_argument("action dimension does not match the rank");
    guard(rank, index, max_candidates);
    const auto tuples = diagonal_tuples(rank, index);
    std::vector<std::vector<Submodule>> blocks(tuples.size());
    parallel_for(tuples.size(), [&](std::size_t k) { HnfEnumerator(rank, tuples[k], actions, ambient, blocks[k]).run(); });
    std::vector<Submodule> out;
    for (auto& b : blocks)
        for (auto& s : b) out.push_back(std::move(s));
    return out;
}

}  // namespace

Integer predicted_candidates(int rank, std::int64_t index) {
    check_rank(rank);
    Integer total = 0;
    for (const auto& d : diagonal_tuples(rank, index)) {
        Integer prod = 1;
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank - 1 - i; ++k) prod *= static_cast<long>(d[i]);
        total += prod;
    }
    return total;
}

std::vector<Submodule> hnf_sublattices(int rank, std::int64_t index, std::int64_t max_candidates, Ambient ambient) {
    return enumerate(rank, index, {}, max_candidates, ambient);
}

std::vector<Submodule> invariant_sublattices(int rank, std::int64_t index, const std::vector<MultiplierAction>& actions,
                                             std::int64_t max_candidates, Ambient ambient) {
    return enumerate(rank, index, actions, max_candidates, ambient);
}

bool is_invariant(const Submodule& s, const std::vector<MultiplierAction>& actions) {
    std::vector<std::int64_t> col(static_cast<std::size_t>(s.rank()));
    for (const auto& a : actions) {
        if (a.rank != s.rank()) throw std::invalid_argument("is_invariant: dimension mismatch");
        for (int c = 0; c < s.rank(); ++c) {
            for (int i = 0; i < s.rank(); ++i) col[i] = s.at(i, c);
            if (!s.contains(a.apply(col))) return false;
        }
    }
    return true;
}

std::vector<Submodule> ideals(Ambient ambient, std::int64_t index, std::int64_t max_candidates) {
    const int rank = ambient_rank(ambient);
    if (rank == 0) throw std::invalid_argument("ideals: ambient Z has no fixed rank");
    return invariant_sublattices(rank, index, ring_actions(ambient), max_candidates, ambient);
}

std::int64_t count_ideals(Ambient ambient, std::int64_t index, std::int64_t max_candidates) {
    return static_cast<std::int64_t>(ideals(ambient, index, max_candidates).size());
}

namespace {

// Generator coordinates whose embeddings satisfy |s1| <= b0, |s2| <= b1,
// for a + b*w with w real roots w0, w1.
template <typename Fn>
void scan_quadratic_box(double w0, double w1, double b0, double b1, Fn&& fn) {
    const double gap = w0 - w1;
    const auto b_max = static_cast<std::int64_t>(std::floor((b0 + b1) / gap)) + 1;
    for (std::int64_t b = -b_max; b <= b_max; ++b) {
        const double lo = std::max(-b0 - b * w0, -b1 - b * w1);
        const double hi = std::min(b0 - b * w0, b1 - b * w1);
        for (auto a = static_cast<std::int64_t>(std::floor(lo)) - 1; a <= static_cast<std::int64_t>(std::ceil(hi)) + 1;
             ++a)
            fn(a, b);
    }
}

std::vector<std::vector<Integer>> multiplication_columns(Ambient ambient, const std::vector<std::int64_t>& coeffs) {
    std::vector<std::vector<Integer>> cols;
    if (ambient == Ambient::ZTauAsZ2) {
        const QuadInt a = ztau(static_cast<long>(coeffs[0]), static_cast<long>(coeffs[1]));
        for (const QuadInt& e : {ztau(1), ztau(0, 1)}) {
            const QuadInt p = a * e;
            cols.push_back({p.a(), p.b()});
        }
        return cols;
    }
    const QuarticRing& ring =
        ambient == Ambient::ZITauAsZ4 ? QuarticRing::itau() : QuarticRing::isqrt2();
    const QuarticInt a(ring, {static_cast<long>(coeffs[0]), static_cast<long>(coeffs[1]), static_cast<long>(coeffs[2]),
                              static_cast<long>(coeffs[3])});
    const auto rep = regular_rep(a);
    for (int k = 0; k < 4; ++k) cols.push_back({rep[0 * 4 + k], rep[1 * 4 + k], rep[2 * 4 + k], rep[3 * 4 + k]});
    return cols;
}

// Calls fn(coeffs) for every ring element of absolute norm `index` inside the
// enlarged fundamental domain. Returns the box used.
template <typename Fn>
GeneratorBox scan_generators(Ambient ambient, std::int64_t index, Fn&& fn) {
    const double safety = 2.0;
    GeneratorBox box{0, 0, 0};
    if (ambient == Ambient::ZTauAsZ2) {
        const QuadRing& R = QuadRing::tau();
        const double mu = R.omega(0);
        const double root = std::sqrt(static_cast<double>(index));
        box.bound_first = safety * mu * root;
        box.bound_second = safety * root;
        scan_quadratic_box(R.omega(0), R.omega(1), box.bound_first, box.bound_second, [&](std::int64_t a, std::int64_t b) {
            ++box.scanned;
            const std::int64_t n = a * a + a * b - b * b;
            if (n == index || n == -index) fn(std::vector<std::int64_t>{a, b});
        });
        return box;
    }
    if (ambient != Ambient::ZITauAsZ4 && ambient != Ambient::ZISqrt2AsZ4)
        throw std::invalid_argument("principal generator search is not defined for " + std::string(to_string(ambient)));
    const QuadRing& R = ambient == Ambient::ZITauAsZ4 ? QuadRing::tau() : QuadRing::sqrt2();
    const double mu = std::fabs(R.fundamental_unit().embedding(0));
    const double quarter = std::pow(static_cast<double>(index), 0.25);
    box.bound_first = safety * mu * quarter;
    box.bound_second = safety * quarter;
    // x + y i with x = c0 + c2 w, y = c1 + c3 w
    std::vector<std::pair<std::int64_t, std::int64_t>> parts;
    scan_quadratic_box(R.omega(0), R.omega(1), box.bound_first, box.bound_second,
                       [&](std::int64_t a, std::int64_t b) { parts.emplace_back(a, b); });
    const std::int64_t c0 = R.c0(), c1 = R.c1();
    const double b0sq = box.bound_first * box.bound_first, b1sq = box.bound_second * box.bound_second;
    for (const auto& [xa, xb] : parts) {
        const double x0 = xa + xb * R.omega(0), x1 = xa + xb * R.omega(1);
        // x^2 in quad coordinates
        const std::int64_t xsq_a = xa * xa + c0 * xb * xb, xsq_b = 2 * xa * xb + c1 * xb * xb;
        for (const auto& [ya, yb] : parts) {
            const double y0 = ya + yb * R.omega(0), y1 = ya + yb * R.omega(1);
            if (x0 * x0 + y0 * y0 > b0sq * 1.000001 || x1 * x1 + y1 * y1 > b1sq * 1.000001) continue;
            ++box.scanned;
            const std::int64_t pa = xsq_a + ya * ya + c0 * yb * yb;
            const std::int64_t pb = xsq_b + 2 * ya * yb + c1 * yb * yb;
            const std::int64_t n = pa * pa + c1 * pa * pb - c0 * pb * pb;
            if (n == index || n == -index) fn(std::vector<std::int64_t>{xa, ya, xb, yb});
        }
    }
    return box;
}

}  // namespace

PrincipalIdeals principal_ideals(Ambient ambient, std::int64_t index) {
    PrincipalIdeals out;
    const int rank = ambient_rank(ambient);
    out.box = scan_generators(ambient, index, [&](const std::vector<std::int64_t>& coeffs) {
        out.ideals.insert(hnf_from_generators(rank, multiplication_columns(ambient, coeffs), ambient));
    });
    return out;
}

std::optional<std::vector<Integer>> principal_generator(const Submodule& s, Ambient ambient) {
    std::optional<std::vector<Integer>> found;
    scan_generators(ambient, s.index(), [&](const std::vector<std::int64_t>& coeffs) {
        if (found || !s.contains(coeffs)) return;
        if (hnf_from_generators(s.rank(), multiplication_columns(ambient, coeffs), ambient) == s) {
            std::vector<Integer> g;
            for (auto c : coeffs) g.emplace_back(static_cast<long>(c));
            found = std::move(g);
        }
    });
    return found;
}

bool is_principal(const Submodule& s, Ambient ambient) { return principal_generator(s, ambient).has_value(); }

std::int64_t count_similarity_submodules(Ambient ambient, std::int64_t index, std::int64_t max_candidates) {
    switch (ambient) {
        case Ambient::ZTauAsZ2:
        case Ambient::ZITauAsZ4: return count_ideals(ambient, index, max_candidates);
        case Ambient::ZISqrt2AsZ4: {
            const auto found = ideals(ambient, index, max_candidates);
            const auto principal = principal_ideals(ambient, index);
            std::int64_t n = 0;
            for (const auto& s : found) n += principal.ideals.count(s) ? 1 : 0;
            return n;
        }
        default:
            throw std::invalid_argument("count_similarity_submodules: unsupported ambient " +
                                        std::string(to_string(ambient)));
    }
}

CoeffSeries reference_series(Ambient ambient, std::int64_t limit) {
    switch (ambient) {
        case Ambient::Z: {
            CoeffSeries s(limit);
            for (std::int64_t m = 1; m <= limit; ++m) s[m] = sigma1(m);
            s.set_multiplicative(true);
            return s;
        }
        case Ambient::ZTauAsZ2: return zeta_q_tau(limit);
        case Ambient::ZITauAsZ4: return zeta_q_itau(limit);
        case Ambient::ZISqrt2AsZ4: return zeta_zi_sqrt2(limit);
        default: break;
    }
    throw std::invalid_argument("no reference series for " + std::string(to_string(ambient)));
}

std::string VerifyReport::summary() const {
    return std::to_string(matched) + "/" + std::to_string(limit) + " match";
}

VerifyReport verify_series(Ambient ambient, std::int64_t limit, std::int64_t max_candidates) {
    if (limit < 1) throw std::invalid_argument("verify_series: limit must be positive");
    const CoeffSeries expected = reference_series(ambient, limit);
    // fail fast before spending time on the smaller indices
    const int rank = ambient == Ambient::Z ? 2 : ambient_rank(ambient);
    for (std::int64_t m = 1; m <= limit; ++m) guard(rank, m, max_candidates);
    VerifyReport report{ambient, limit, 0, 0, {}, {}};
    for (std::int64_t m = 1; m <= limit; ++m) {
        const std::int64_t count = ambient == Ambient::Z
                                       ? static_cast<std::int64_t>(hnf_sublattices(2, m, max_candidates).size())
                                       : count_similarity_submodules(ambient, m, max_candidates);
        report.oracle_counts.push_back(count);
        ++report.checked;
        if (expected[m] == Integer(static_cast<long>(count)))
            ++report.matched;
        else
            report.mismatches.push_back({m, count, expected[m]});
    }
    return report;
}

}  // namespace simsub
