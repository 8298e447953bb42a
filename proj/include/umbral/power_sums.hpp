#pragma once

#include <optional>

#include "umbral/rational.hpp"

namespace umbral {

enum class PowerSumFamily { plain, alternating, lambda_analogue };
enum class PowerSumAlgorithm { series, enumeration };

/// One exact multiple-power-sum value with its defining indices.
struct PowerSumValue {
    PowerSumFamily family = PowerSumFamily::plain;
    unsigned k = 0;
    unsigned n = 1;
    unsigned m = 1;
    std::optional<Rational> lambda;  // lambda_analogue only, lambda != 0
    Rational value;
};

/**
 * Values for every k = 0..k_max in one pass.
 *
 * Both routes are exact and must agree:
 *  - series: k! [t^k] (sum_{l=1..m} w_l e^{lt})^n with weights 1, (-1)^l,
 *    or lambda^{-l} -- polynomial cost, the default;
 *  - enumeration: the defining sum over compositions of n into m parts,
 *    multinomial times (v_1+2v_2+...+mv_m)^k with the family's weight --
 *    exponential in m, kept as the permanent oracle.
 */
std::vector<Rational> power_sum_table(PowerSumFamily family, unsigned k_max, unsigned n, unsigned m,
                                      const std::optional<Rational>& lambda,
                                      PowerSumAlgorithm algorithm = PowerSumAlgorithm::series);

/// S_k^(n)(m): multinomial-weighted k-th powers of composition weights.
PowerSumValue multiple_power_sum(unsigned k, unsigned n, unsigned m,
                                 PowerSumAlgorithm algorithm = PowerSumAlgorithm::series);

/// T_k^(n)(m): the alternating variant, sign (-1)^{v_1+2v_2+...+mv_m}.
PowerSumValue alternating_power_sum(unsigned k, unsigned n, unsigned m,
                                    PowerSumAlgorithm algorithm = PowerSumAlgorithm::series);

/// S_k^(n)(m | lambda): weight lambda^{-(v_1+2v_2+...+mv_m)}; lambda != 0.
PowerSumValue lambda_power_sum(unsigned k, unsigned n, unsigned m, const Rational& lambda,
                               PowerSumAlgorithm algorithm = PowerSumAlgorithm::series);

}  // namespace umbral
