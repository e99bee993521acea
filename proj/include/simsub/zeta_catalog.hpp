#pragma once

// Named generating functions for similarity-submodule counts.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simsub/dirichlet.hpp"

namespace simsub {

enum class SeriesName { ZetaQTau, ZetaQITau, ZetaZiSqrt2, ZetaQXi8, PhiC, FCubic, RiemannZeta };

struct CatalogEntry {
    SeriesName name;
    CoeffSeries series;
    std::string note;
};

CoeffSeries riemann_zeta(std::int64_t limit);

/// Dedekind zeta of Q(tau): ideals of Z[tau].
CoeffSeries zeta_q_tau(std::int64_t limit);
/// Dedekind zeta of Q(i tau): ideals of Z[i, tau].
CoeffSeries zeta_q_itau(std::int64_t limit);
/// Dedekind zeta of the 8th cyclotomic field.
CoeffSeries zeta_q_xi8(std::int64_t limit);
/// Principal ideals of Z[i, sqrt2]: (1 - 2^-s + 2*4^-s) * zeta_q_xi8.
CoeffSeries zeta_zi_sqrt2(std::int64_t limit);
/// 1/24 of the number of rotations in SO(3, Q(tau)) by |N(den)|.
CoeffSeries phi_c(std::int64_t limit);
/// Similarity submodules of Z[tau]^3: zeta_q_tau(3s) * phi_c(3s).
CoeffSeries f_cubic(std::int64_t limit);

Integer sigma1(std::int64_t m);

std::string_view cli_name(SeriesName name);
std::optional<SeriesName> parse_series_name(std::string_view name);
const std::vector<SeriesName>& all_series();

CatalogEntry catalog_entry(SeriesName name, std::int64_t limit);

}  // namespace simsub
