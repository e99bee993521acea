#include "simsub/cli.hpp"

#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "simsub/cubic3d.hpp"
#include "simsub/lattice_oracle.hpp"
#include "simsub/quartic_ring.hpp"
#include "simsub/zeta_catalog.hpp"

namespace simsub::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

struct Options {
    std::string series;
    std::int64_t limit = 0;
    std::string format = "json";
    std::int64_t max_candidates = kDefaultMaxCandidates;
    std::int64_t step = 1;
    std::string ambient;
    std::int64_t index = 0;
    int rank = 2;
    std::string filter = "all";
    std::string module;
    std::int64_t bound = 0;
    bool list = false;
    std::string ring;
    int height = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SeriesName require_series(const std::string& name) {
    if (auto s = parse_series_name(name)) return *s;
    throw UsageError("unknown series '" + name + "'");
}

Ambient require_ambient(const std::string& name) {
    static const std::map<std::string, Ambient> names{{"z", Ambient::Z},
                                                      {"ztau", Ambient::ZTauAsZ2},
                                                      {"zitau", Ambient::ZITauAsZ4},
                                                      {"zisqrt2", Ambient::ZISqrt2AsZ4}};
    const auto it = names.find(name);
    if (it == names.end()) throw UsageError("unknown ambient '" + name + "'");
    return it->second;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_coeffs(const Options& o, std::ostream& out) {
    const SeriesName name = require_series(o.series);
    const CoeffSeries s = catalog_entry(name, o.limit).series;
    if (o.format == "csv") {
        out << "m,a\n";
        for (const auto& [m, a] : s.nonzero_terms()) out << m << ',' << a << '\n';
        return kExitOk;
    }
    Json coeffs = Json::array();
    for (const auto& [m, a] : s.nonzero_terms()) coeffs.push_back(Json{{"m", m}, {"a", to_json(a)}});
    emit(out, Json{{"series", std::string(cli_name(name))}, {"limit", o.limit}, {"coefficients", coeffs}});
    return kExitOk;
}

int cmd_summatory(const Options& o, std::ostream& out) {
    if (o.step < 1) throw UsageError("--step must be positive");
    const SeriesName name = require_series(o.series);
    const CoeffSeries s = catalog_entry(name, o.limit).series;
    std::vector<std::pair<std::int64_t, Integer>> rows;
    Integer running = 0;
    for (std::int64_t x = 1; x <= o.limit; ++x) {
        running += s[x];
        if (x % o.step == 0 || x == o.limit) rows.emplace_back(x, running);
    }
    if (o.format == "csv") {
        out << "x,sum\n";
        for (const auto& [x, v] : rows) out << x << ',' << v << '\n';
        return kExitOk;
    }
    Json sums = Json::array();
    for (const auto& [x, v] : rows) sums.push_back(Json{{"x", x}, {"sum", to_json(v)}});
    emit(out, Json{{"series", std::string(cli_name(name))}, {"limit", o.limit}, {"partial_sums", sums}});
    return kExitOk;
}

Json basis_json(const Submodule& s) {
    Json rows = Json::array();
    for (int i = 0; i < s.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < s.rank(); ++j) row.push_back(s.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Ambient ambient = require_ambient(o.ambient);
    if (o.index < 1) throw UsageError("--index must be positive");
    std::vector<Submodule> found;
    if (ambient == Ambient::Z || o.filter == "all") {
        const int rank = ambient == Ambient::Z ? o.rank : ambient_rank(ambient);
        if (ambient == Ambient::Z && o.filter != "all") throw UsageError("ambient z only supports --filter all");
        found = hnf_sublattices(rank, o.index, o.max_candidates, ambient);
    } else if (o.filter == "ideals" || o.filter == "similarity") {
        found = ideals(ambient, o.index, o.max_candidates);
        if (o.filter == "similarity" && ambient == Ambient::ZISqrt2AsZ4) {
            const auto principal = principal_ideals(ambient, o.index);
            std::vector<Submodule> kept;
            for (auto& s : found)
                if (principal.ideals.count(s)) kept.push_back(std::move(s));
            found = std::move(kept);
        }
    } else {
        throw UsageError("unknown filter '" + o.filter + "'");
    }
    if (o.format == "csv") {
        out << "index,basis\n";
        for (const auto& s : found) out << s.index() << ",\"" << s.to_string() << "\"\n";
        return kExitOk;
    }
    Json list = Json::array();
    for (const auto& s : found) list.push_back(Json{{"basis", basis_json(s)}});
    emit(out, Json{{"ambient", o.ambient},
                   {"index", o.index},
                   {"filter", o.filter},
                   {"count", found.size()},
                   {"submodules", list}});
    return kExitOk;
}

int cmd_verify_lattice(const Options& o, Ambient ambient, std::ostream& out) {
    const VerifyReport r = verify_series(ambient, o.limit, o.max_candidates);
    const CoeffSeries expected = reference_series(ambient, o.limit);
    if (o.format == "csv") {
        out << "m,oracle,expected\n";
        for (std::int64_t m = 1; m <= o.limit; ++m) out << m << ',' << r.oracle_counts[m - 1] << ',' << expected[m] << '\n';
    } else {
        Json mism = Json::array();
        for (const auto& x : r.mismatches)
            mism.push_back(Json{{"m", x.m}, {"oracle", x.oracle}, {"expected", to_json(x.expected)}});
        emit(out, Json{{"module", o.module},
                       {"limit", o.limit},
                       {"checked", r.checked},
                       {"matched", r.matched},
                       {"summary", r.summary()},
                       {"mismatches", mism}});
    }
    return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_verify_cubic(const Options& o, std::ostream& out) {
    const CoeffSeries f = f_cubic(o.limit);
    const std::int64_t root = integer_root(o.limit, 3);
    const CoeffSeries phi = phi_c(std::max<std::int64_t>(root, 1));
    const RotationEnumeration rots = enumerate_rotations(std::max<std::int64_t>(root, 1), o.max_candidates);
    const auto counts = rots.counts_by_norm();

    Json rot_rows = Json::array();
    bool ok = true;
    for (std::int64_t d = 1; d <= root; ++d) {
        const auto it = counts.find(d);
        const std::int64_t found = it == counts.end() ? 0 : it->second;
        const Integer expected = 24 * phi[d];
        ok = ok && expected == static_cast<long>(found);
        if (found != 0 || expected != 0)
            rot_rows.push_back(Json{{"den_norm", d}, {"found", found}, {"expected", to_json(expected)}});
    }
    std::int64_t checked = 0, matched = 0;
    Json mism = Json::array(), rows = Json::array();
    for (std::int64_t n = 1; n <= root; ++n) {
        const std::int64_t m = n * n * n;
        const std::int64_t c = count_submodules_3d(m, rots);
        ++checked;
        if (f[m] == static_cast<long>(c)) ++matched;
        else mism.push_back(Json{{"m", m}, {"oracle", c}, {"expected", to_json(f[m])}});
        rows.push_back(Json{{"m", m}, {"oracle", c}, {"expected", to_json(f[m])}});
    }
    ok = ok && matched == checked;
    const std::string summary = std::to_string(matched) + "/" + std::to_string(checked) + " match";
    if (o.format == "csv") {
        out << "m,oracle,expected\n";
        for (const auto& r : rows) out << r["m"] << ',' << r["oracle"] << ',' << r["expected"] << '\n';
    } else {
        emit(out, Json{{"module", o.module},
                       {"limit", o.limit},
                       {"checked", checked},
                       {"matched", matched},
                       {"summary", summary},
                       {"mismatches", mism},
                       {"submodule_counts", rows},
                       {"rotation_counts", rot_rows}});
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.limit < 1) throw UsageError("--limit must be positive");
    if (o.module == "sigma1") return cmd_verify_lattice(o, Ambient::Z, out);
    if (o.module == "ztau") return cmd_verify_lattice(o, Ambient::ZTauAsZ2, out);
    if (o.module == "zitau") return cmd_verify_lattice(o, Ambient::ZITauAsZ4, out);
    if (o.module == "zisqrt2") return cmd_verify_lattice(o, Ambient::ZISqrt2AsZ4, out);
    if (o.module == "cubic3") return cmd_verify_cubic(o, out);
    throw UsageError("unknown module '" + o.module + "'");
}

int cmd_rotations(const Options& o, std::ostream& out) {
    if (o.bound < 1) throw UsageError("--bound must be positive");
    const RotationEnumeration rots = enumerate_rotations(o.bound, o.max_candidates);
    const CoeffSeries phi = phi_c(o.bound);
    const auto counts = rots.counts_by_norm();
    bool ok = true;
    Json rows = Json::array();
    for (std::int64_t d = 1; d <= o.bound; ++d) {
        const auto it = counts.find(d);
        const std::int64_t found = it == counts.end() ? 0 : it->second;
        const Integer expected = 24 * phi[d];
        ok = ok && expected == static_cast<long>(found);
        if (found != 0 || expected != 0)
            rows.push_back(Json{{"den_norm", d}, {"found", found}, {"expected", to_json(expected)}});
    }
    if (o.format == "csv") {
        out << "den_norm,found,expected\n";
        for (const auto& r : rows) out << r["den_norm"] << ',' << r["found"] << ',' << r["expected"] << '\n';
        return ok ? kExitOk : kExitMismatch;
    }
    Json j{{"bound", o.bound},
           {"quaternion_norm_bound", rots.quat_norm_bound},
           {"quaternions_scanned", rots.quaternions_scanned},
           {"total", rots.rotations.size()},
           {"counts", rows}};
    if (o.list) {
        Json list = Json::array();
        for (const auto& r : rots.rotations)
            list.push_back(Json{{"den", r.denominator.to_string()}, {"den_norm", r.den_norm}, {"matrix", r.rotation.to_string()}});
        j["rotations"] = list;
    }
    emit(out, j);
    return ok ? kExitOk : kExitMismatch;
}

int cmd_units(const Options& o, std::ostream& out) {
    if (o.height < 0) throw UsageError("--height must be non-negative");
    const long h = o.height;
    std::int64_t found = 0, decomposed = 0;
    Json bad = Json::array();
    if (o.ring == "tau" || o.ring == "sqrt2") {
        const QuadRing& R = o.ring == "tau" ? QuadRing::tau() : QuadRing::sqrt2();
        for (long a = -h; a <= h; ++a)
            for (long b = -h; b <= h; ++b) {
                const QuadInt x(R, a, b);
                if (!x.is_unit()) continue;
                ++found;
                const UnitForm f = unit_normal_form(x);
                if (QuadInt(R, f.sign) * fundamental_unit_power(R, f.exponent) == x) ++decomposed;
                else bad.push_back(x.to_string());
            }
    } else if (o.ring == "itau" || o.ring == "isqrt2") {
        const QuarticRing& R = o.ring == "itau" ? QuarticRing::itau() : QuarticRing::isqrt2();
        for (long a = -h; a <= h; ++a)
            for (long b = -h; b <= h; ++b)
                for (long c = -h; c <= h; ++c)
                    for (long d = -h; d <= h; ++d) {
                        const QuarticInt x(R, {a, b, c, d});
                        if (abs_norm(x) != 1) continue;
                        ++found;
                        try {
                            const QuarticUnitForm f = quartic_unit_normal_form(x);
                            (void)f;
                            ++decomposed;
                        } catch (const UnitCounterexample&) {
                            bad.push_back(x.to_string());
                        }
                    }
    } else {
        throw UsageError("unknown ring '" + o.ring + "'");
    }
    emit(out, Json{{"ring", o.ring},
                   {"height", o.height},
                   {"units_found", found},
                   {"decomposed", decomposed},
                   {"counterexamples", bad}});
    return bad.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Similarity submodules and their Dirichlet series"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-candidates", o.max_candidates, "Resource ceiling on enumeration size")
        ->check(CLI::PositiveNumber);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* coeffs = app.add_subcommand("coeffs", "Print nonzero Dirichlet coefficients of a catalog series");
    coeffs->add_option("--series", o.series, "Series name")->required();
    coeffs->add_option("--limit", o.limit, "Largest index")->required()->check(CLI::PositiveNumber);
    add_format(coeffs);

    auto* summ = app.add_subcommand("summatory", "Partial sums of a catalog series");
    summ->add_option("--series", o.series, "Series name")->required();
    summ->add_option("--limit", o.limit, "Largest index")->required()->check(CLI::PositiveNumber);
    summ->add_option("--step", o.step, "Emit every step-th partial sum");
    add_format(summ);

    auto* en = app.add_subcommand("enumerate", "Enumerate submodules of a given index in HNF");
    en->add_option("--ambient", o.ambient, "z, ztau, zitau or zisqrt2")->required();
    en->add_option("--index", o.index, "Index")->required()->check(CLI::PositiveNumber);
    en->add_option("--rank", o.rank, "Rank for ambient z")->check(CLI::Range(1, 6));
    en->add_option("--filter", o.filter, "all, ideals or similarity");
    add_format(en);

    auto* ver = app.add_subcommand("verify", "Compare oracle counts with the generating functions");
    ver->add_option("--module", o.module, "sigma1, ztau, zitau, zisqrt2 or cubic3")->required();
    ver->add_option("--limit", o.limit, "Largest index")->required()->check(CLI::PositiveNumber);
    add_format(ver);

    auto* rot = app.add_subcommand("rotations", "Enumerate SO(3, Q(tau)) by denominator norm");
    rot->add_option("--bound", o.bound, "Largest |N(den)|")->required()->check(CLI::PositiveNumber);
    rot->add_flag("--list", o.list, "Include every matrix");
    add_format(rot);

    auto* units = app.add_subcommand("units", "Bounded-height scan of unit normal forms");
    units->add_option("--ring", o.ring, "tau, sqrt2, itau or isqrt2")->required();
    units->add_option("--height", o.height, "Coefficient bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(o, out);
        if (summ->parsed()) return cmd_summatory(o, out);
        if (en->parsed()) return cmd_enumerate(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (rot->parsed()) return cmd_rotations(o, out);
        if (units->parsed()) return cmd_units(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace simsub::cli
