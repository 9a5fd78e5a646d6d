#pragma once

// Frozen high-precision values (mpmath, 30 digits, rounded to 20).
namespace ref {

inline constexpr double zeta2 = 1.64493406684822643647;
inline constexpr double zeta3 = 1.20205690315959428540;
inline constexpr double zeta6 = 1.01734306198444913971;
inline constexpr double zeta_2_plus_i_re = 1.15035570325490267174;
inline constexpr double zeta_2_plus_i_im = -0.43753086591960788112;
inline constexpr double cf_ones_2_1_re = 0.69933240878100364828;
inline constexpr double cf_ones_2_1_im = -0.26598687129018992858;
// (zeta(3)^2 + zeta(6)) / 2
inline constexpr double H3 = 1.23114193020904168681;

// zeta'(s)/zeta(s) and (log zeta)''(s) for the ones law at real s.
struct OnesMoments {
  double sigma, mean, variance;
};
inline constexpr OnesMoments ones_moments[] = {
    {1.5, -1.50523535578826791942, 3.85496291567603833474},
    {2.0, -0.56996099309453280640, 0.88448183396352388520},
    {3.0, -0.16482268215827724019, 0.17228071150600031688},
    {5.0, -0.02755619219153047054, 0.02212686475202256528},
    {10.0, -0.00069634044528402044, 0.00049082953669759538},
};

inline constexpr double log2_over_5 = 0.13862943611198906188;
// Height of the zero of 1 + 4 * 2^-s on sigma = 2: pi / log 2.
inline constexpr double zero_height = 4.53236014182719380963;

}  // namespace ref
