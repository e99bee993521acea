#include "simsub/zeta_catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "simsub/integer.hpp"

namespace simsub {

CoeffSeries riemann_zeta(std::int64_t limit) {
    return expand_euler([](std::int64_t p) { return EulerFactor::inverse_power(p, 1, 1); }, limit);
}

CoeffSeries zeta_q_tau(std::int64_t limit) {
    return expand_euler(
        [](std::int64_t p) {
            if (p == 5) return EulerFactor::inverse_power(p, 1, 1);
            const auto r = p % 5;
            if (r == 1 || r == 4) return EulerFactor::inverse_power(p, 1, 2);
            return EulerFactor::inverse_power(p, 2, 1);
        },
        limit);
}

CoeffSeries zeta_q_itau(std::int64_t limit) {
    return expand_euler(
        [](std::int64_t p) {
            if (p == 2) return EulerFactor::inverse_power(p, 2, 1);
            if (p == 5) return EulerFactor::inverse_power(p, 1, 2);
            const auto r = p % 20;
            if (r == 1 || r == 9) return EulerFactor::inverse_power(p, 1, 4);
            return EulerFactor::inverse_power(p, 2, 2);
        },
        limit);
}

CoeffSeries zeta_q_xi8(std::int64_t limit) {
    return expand_euler(
        [](std::int64_t p) {
            if (p == 2) return EulerFactor::inverse_power(p, 1, 1);
            if (p % 8 == 1) return EulerFactor::inverse_power(p, 1, 4);
            return EulerFactor::inverse_power(p, 2, 2);
        },
        limit);
}

CoeffSeries zeta_zi_sqrt2(std::int64_t limit) {
    std::map<std::int64_t, Integer> terms{{1, 1}};
    if (limit >= 2) terms[2] = -1;
    if (limit >= 4) terms[4] = 2;
    CoeffSeries out = convolve(dirichlet_polynomial(terms, limit), zeta_q_xi8(limit));
    // the prefactor is supported on powers of 2 only
    out.set_multiplicative(true);
    return out;
}

CoeffSeries phi_c(std::int64_t limit) {
    std::map<std::int64_t, Integer> num{{1, 1}}, den{{1, 1}};
    if (limit >= 4) {
        num[4] = 4;
        den[4] = 1;
    }
    const CoeffSeries zeta = zeta_q_tau(limit);
    const CoeffSeries zeta_2s = scale_argument(zeta_q_tau(std::max<std::int64_t>(1, integer_root(limit, 2))), 2, limit);
    CoeffSeries out = convolve(dirichlet_polynomial(num, limit), dirichlet_inverse(dirichlet_polynomial(den, limit)));
    out = convolve(out, zeta);
    out = convolve(out, shift(zeta, 1));
    out = convolve(out, dirichlet_inverse(zeta_2s));
    out.set_multiplicative(true);
    return out;
}

CoeffSeries f_cubic(std::int64_t limit) {
    const std::int64_t root = std::max<std::int64_t>(1, integer_root(limit, 3));
    CoeffSeries out = convolve(scale_argument(zeta_q_tau(root), 3, limit), scale_argument(phi_c(root), 3, limit));
    out.set_multiplicative(true);
    return out;
}

Integer sigma1(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("sigma1: m must be positive");
    Integer s = 1;
    for (const auto& [p, e] : factorize(m)) {
        Integer term = 1, pk = 1;
        for (int k = 0; k < e; ++k) {
            pk *= static_cast<long>(p);
            term += pk;
        }
        s *= term;
    }
    return s;
}

std::string_view cli_name(SeriesName name) {
    switch (name) {
        case SeriesName::ZetaQTau: return "zeta-qtau";
        case SeriesName::ZetaQITau: return "zeta-qitau";
        case SeriesName::ZetaZiSqrt2: return "zeta-zisqrt2";
        case SeriesName::ZetaQXi8: return "zeta-qxi8";
        case SeriesName::PhiC: return "phi-c";
        case SeriesName::FCubic: return "f-cubic";
        case SeriesName::RiemannZeta: return "zeta";
    }
    return "?";
}

const std::vector<SeriesName>& all_series() {
    static const std::vector<SeriesName> names{SeriesName::ZetaQTau, SeriesName::ZetaQITau, SeriesName::ZetaZiSqrt2,
                                               SeriesName::ZetaQXi8, SeriesName::PhiC,      SeriesName::FCubic,
                                               SeriesName::RiemannZeta};
    return names;
}

std::optional<SeriesName> parse_series_name(std::string_view name) {
    for (SeriesName s : all_series())
        if (cli_name(s) == name) return s;
    return std::nullopt;
}

CatalogEntry catalog_entry(SeriesName name, std::int64_t limit) {
    switch (name) {
        case SeriesName::ZetaQTau:
            return {name, zeta_q_tau(limit), "Euler product over Z[tau]: 5 ramified, p=+-1 (5) split, p=+-2 (5) inert"};
        case SeriesName::ZetaQITau:
            return {name, zeta_q_itau(limit), "Euler product over Z[i,tau] from residue classes mod 20"};
        case SeriesName::ZetaZiSqrt2:
            return {name, zeta_zi_sqrt2(limit), "(1 - 2^-s + 2*4^-s) times the zeta function of Q(xi8)"};
        case SeriesName::ZetaQXi8:
            return {name, zeta_q_xi8(limit), "Euler product over Z[xi8]: 2 totally ramified, 1 (8) split"};
        case SeriesName::PhiC:
            return {name, phi_c(limit), "(1+4^(1-s))/(1+4^-s) * zeta(s) zeta(s-1) / zeta(2s) over Q(tau)"};
        case SeriesName::FCubic:
            return {name, f_cubic(limit), "zeta_Q(tau)(3s) * phi_c(3s)"};
        case SeriesName::RiemannZeta:
            return {name, riemann_zeta(limit), "Riemann zeta"};
    }
    throw std::invalid_argument("unknown series");
}

}  // namespace simsub
