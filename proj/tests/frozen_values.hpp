// Generated by tests/oracle/gen_expected.py -- do not edit by hand.
#pragma once

namespace frozen {
inline constexpr double g_dev_1000_1em10 = 214.59660262893472396;
inline constexpr double g_dev_100_em2 = 20.000000000000000000;
inline constexpr double hoeffding_1e6_1em3_1em10 = 0.00023885423569646914682;
inline constexpr double hoeffding_1e4_05_1em6 = 0.038576439671252713432;
inline constexpr double mu_lower_1e4_1e6_1em10 = 6606.9297877924441011;
inline constexpr double mu_lower_0_100_05 = -5.8870501125773734551;
inline constexpr double chernoff_b1_delta = 1377.5049360492441342;
inline constexpr double chernoff_b1_delta_hat = 831.12906813455496252;
inline constexpr double serfling_lambda_1e6_1e5_1em10 = 0.010179216291738117178;
inline constexpr double serfling_lambda_1e3_1e3_em2 = 0.0010000000000000000000;
inline constexpr double serfling_upsilon_1e3_1e3_1em10 = 0.075909282668311385672;
inline constexpr double serfling_upsilon_0_1e3_em2 = 0.0010000000000000000000;
inline constexpr double chi_1e4_1e4_1em10 = 0.067864797229540811171;
inline constexpr double chi_1e4_1e8_1em10 = 0.047987658564796622062;
inline constexpr double tau_11_grid = 0.017270237047722501687;
inline constexpr double tau_00_grid = 0.70049545905214923065;
inline constexpr double rescale_1000_05_05_01 = 27182.818284590452354;
inline constexpr double serfling_scale_floor_5000 = 4996.0000000000000000;
inline constexpr double ek1_count_example = 182.00000000000000000;
inline constexpr double lp_mk0_1e4_1em10 = 9321.0000000000000000;
inline constexpr double photon_delta_1e12_1em3_1em10 = 2.1459660262893472396e-7;
inline constexpr double h2_011 = 0.49991595816452799564;
inline constexpr double h2_0015 = 0.11236071009937673024;
inline constexpr double leak_1e6_0015_116 = 130338.42371527700707;
inline constexpr double key_length_example = 36583.000000000000000;
inline constexpr double eps_sec_uniform_1em12_2k = 2.4000000000000000000e-11;
}  // namespace frozen
