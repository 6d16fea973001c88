#pragma once

// Published operating characteristics of the new test and its comparators,
// used by table reproduction to report |empirical - published| per cell.
// Generated from the source tables; do not edit by hand.

#include <array>

namespace refcurve::published {

/// Type I error under H0 (omega = 1), S1 = 0.5, f = 3, r = 100.
struct TypeOneCell {
  double kappa;
  int n;
  double pi;
  double alpha_new;
  double alpha_classical;
};

/// Two-arm comparison, pi = 1, f = 3, r = 100, target power 0.8.
/// Scenario 1 uses the Schoenfeld size n, scenario 2 the size n' of the new
/// test.
struct PowerRow {
  double s1;
  double kappa;
  double omega0;
  int n;
  double alpha_new;
  double alpha_logrank;
  double power_new;
  double power_logrank;
  int n_prime;
  double alpha_new_prime;
  double alpha_logrank_prime;
  double power_new_prime;
  double power_logrank_prime;
};

inline constexpr std::array<TypeOneCell, 162> type_one_table = {{
    {0.1, 100, 2.0, 0.041, 0.262},
    {0.1, 100, 1.0, 0.044, 0.170},
    {0.1, 100, 0.5, 0.047, 0.113},
    {0.1, 100, 0.25, 0.055, 0.084},
    {0.1, 100, 0.125, 0.064, 0.075},
    {0.1, 100, 0.0625, 0.107, 0.071},
    {0.1, 500, 2.0, 0.044, 0.249},
    {0.1, 500, 1.0, 0.047, 0.163},
    {0.1, 500, 0.5, 0.052, 0.112},
    {0.1, 500, 0.25, 0.053, 0.084},
    {0.1, 500, 0.125, 0.050, 0.062},
    {0.1, 500, 0.0625, 0.056, 0.062},
    {0.1, 1000, 2.0, 0.047, 0.257},
    {0.1, 1000, 1.0, 0.046, 0.160},
    {0.1, 1000, 0.5, 0.049, 0.106},
    {0.1, 1000, 0.25, 0.051, 0.079},
    {0.1, 1000, 0.125, 0.054, 0.068},
    {0.1, 1000, 0.0625, 0.051, 0.059},
    {0.25, 100, 2.0, 0.043, 0.267},
    {0.25, 100, 1.0, 0.045, 0.172},
    {0.25, 100, 0.5, 0.047, 0.114},
    {0.25, 100, 0.25, 0.053, 0.086},
    {0.25, 100, 0.125, 0.062, 0.075},
    {0.25, 100, 0.0625, 0.086, 0.070},
    {0.25, 500, 2.0, 0.047, 0.252},
    {0.25, 500, 1.0, 0.049, 0.162},
    {0.25, 500, 0.5, 0.049, 0.111},
    {0.25, 500, 0.25, 0.052, 0.082},
    {0.25, 500, 0.125, 0.050, 0.065},
    {0.25, 500, 0.0625, 0.057, 0.065},
    {0.25, 1000, 2.0, 0.048, 0.259},
    {0.25, 1000, 1.0, 0.048, 0.161},
    {0.25, 1000, 0.5, 0.049, 0.106},
    {0.25, 1000, 0.25, 0.052, 0.081},
    {0.25, 1000, 0.125, 0.051, 0.066},
    {0.25, 1000, 0.0625, 0.053, 0.058},
    {0.5, 100, 2.0, 0.044, 0.278},
    {0.5, 100, 1.0, 0.048, 0.174},
    {0.5, 100, 0.5, 0.049, 0.118},
    {0.5, 100, 0.25, 0.052, 0.090},
    {0.5, 100, 0.125, 0.058, 0.077},
    {0.5, 100, 0.0625, 0.069, 0.078},
    {0.5, 500, 2.0, 0.049, 0.260},
    {0.5, 500, 1.0, 0.050, 0.168},
    {0.5, 500, 0.5, 0.051, 0.112},
    {0.5, 500, 0.25, 0.052, 0.083},
    {0.5, 500, 0.125, 0.056, 0.068},
    {0.5, 500, 0.0625, 0.056, 0.067},
    {0.5, 1000, 2.0, 0.051, 0.263},
    {0.5, 1000, 1.0, 0.052, 0.164},
    {0.5, 1000, 0.5, 0.052, 0.112},
    {0.5, 1000, 0.25, 0.055, 0.083},
    {0.5, 1000, 0.125, 0.053, 0.068},
    {0.5, 1000, 0.0625, 0.055, 0.061},
    {0.75, 100, 2.0, 0.043, 0.289},
    {0.75, 100, 1.0, 0.050, 0.184},
    {0.75, 100, 0.5, 0.049, 0.126},
    {0.75, 100, 0.25, 0.053, 0.093},
    {0.75, 100, 0.125, 0.056, 0.080},
    {0.75, 100, 0.0625, 0.056, 0.082},
    {0.75, 500, 2.0, 0.047, 0.272},
    {0.75, 500, 1.0, 0.051, 0.173},
    {0.75, 500, 0.5, 0.051, 0.116},
    {0.75, 500, 0.25, 0.052, 0.084},
    {0.75, 500, 0.125, 0.058, 0.076},
    {0.75, 500, 0.0625, 0.052, 0.066},
    {0.75, 1000, 2.0, 0.053, 0.269},
    {0.75, 1000, 1.0, 0.053, 0.171},
    {0.75, 1000, 0.5, 0.052, 0.114},
    {0.75, 1000, 0.25, 0.054, 0.084},
    {0.75, 1000, 0.125, 0.050, 0.067},
    {0.75, 1000, 0.0625, 0.051, 0.062},
    {1, 100, 2.0, 0.036, 0.300},
    {1, 100, 1.0, 0.051, 0.194},
    {1, 100, 0.5, 0.049, 0.130},
    {1, 100, 0.25, 0.052, 0.097},
    {1, 100, 0.125, 0.052, 0.082},
    {1, 100, 0.0625, 0.052, 0.085},
    {1, 500, 2.0, 0.047, 0.273},
    {1, 500, 1.0, 0.050, 0.176},
    {1, 500, 0.5, 0.052, 0.116},
    {1, 500, 0.25, 0.052, 0.085},
    {1, 500, 0.125, 0.053, 0.073},
    {1, 500, 0.0625, 0.052, 0.069},
    {1, 1000, 2.0, 0.053, 0.269},
    {1, 1000, 1.0, 0.052, 0.170},
    {1, 1000, 0.5, 0.051, 0.115},
    {1, 1000, 0.25, 0.052, 0.084},
    {1, 1000, 0.125, 0.051, 0.069},
    {1, 1000, 0.0625, 0.050, 0.063},
    {1.25, 100, 2.0, 0.026, 0.293},
    {1.25, 100, 1.0, 0.043, 0.197},
    {1.25, 100, 0.5, 0.043, 0.133},
    {1.25, 100, 0.25, 0.050, 0.097},
    {1.25, 100, 0.125, 0.049, 0.084},
    {1.25, 100, 0.0625, 0.039, 0.087},
    {1.25, 500, 2.0, 0.047, 0.275},
    {1.25, 500, 1.0, 0.051, 0.177},
    {1.25, 500, 0.5, 0.049, 0.116},
    {1.25, 500, 0.25, 0.052, 0.086},
    {1.25, 500, 0.125, 0.050, 0.072},
    {1.25, 500, 0.0625, 0.049, 0.066},
    {1.25, 1000, 2.0, 0.051, 0.270},
    {1.25, 1000, 1.0, 0.051, 0.171},
    {1.25, 1000, 0.5, 0.052, 0.114},
    {1.25, 1000, 0.25, 0.053, 0.085},
    {1.25, 1000, 0.125, 0.049, 0.068},
    {1.25, 1000, 0.0625, 0.050, 0.063},
    {1.5, 100, 2.0, 0.023, 0.270},
    {1.5, 100, 1.0, 0.036, 0.185},
    {1.5, 100, 0.5, 0.037, 0.128},
    {1.5, 100, 0.25, 0.043, 0.097},
    {1.5, 100, 0.125, 0.037, 0.082},
    {1.5, 100, 0.0625, 0.026, 0.085},
    {1.5, 500, 2.0, 0.046, 0.276},
    {1.5, 500, 1.0, 0.052, 0.177},
    {1.5, 500, 0.5, 0.049, 0.116},
    {1.5, 500, 0.25, 0.051, 0.086},
    {1.5, 500, 0.125, 0.050, 0.072},
    {1.5, 500, 0.0625, 0.048, 0.066},
    {1.5, 1000, 2.0, 0.050, 0.271},
    {1.5, 1000, 1.0, 0.051, 0.172},
    {1.5, 1000, 0.5, 0.051, 0.116},
    {1.5, 1000, 0.25, 0.053, 0.084},
    {1.5, 1000, 0.125, 0.048, 0.067},
    {1.5, 1000, 0.0625, 0.048, 0.064},
    {2, 100, 2.0, 0.024, 0.261},
    {2, 100, 1.0, 0.034, 0.174},
    {2, 100, 0.5, 0.032, 0.122},
    {2, 100, 0.25, 0.035, 0.090},
    {2, 100, 0.125, 0.029, 0.077},
    {2, 100, 0.0625, 0.015, 0.082},
    {2, 500, 2.0, 0.045, 0.276},
    {2, 500, 1.0, 0.051, 0.177},
    {2, 500, 0.5, 0.049, 0.116},
    {2, 500, 0.25, 0.050, 0.087},
    {2, 500, 0.125, 0.049, 0.072},
    {2, 500, 0.0625, 0.047, 0.065},
    {2, 1000, 2.0, 0.049, 0.271},
    {2, 1000, 1.0, 0.052, 0.172},
    {2, 1000, 0.5, 0.050, 0.116},
    {2, 1000, 0.25, 0.053, 0.084},
    {2, 1000, 0.125, 0.048, 0.067},
    {2, 1000, 0.0625, 0.048, 0.064},
    {5, 100, 2.0, 0.024, 0.261},
    {5, 100, 1.0, 0.034, 0.173},
    {5, 100, 0.5, 0.032, 0.122},
    {5, 100, 0.25, 0.035, 0.090},
    {5, 100, 0.125, 0.029, 0.077},
    {5, 100, 0.0625, 0.014, 0.082},
    {5, 500, 2.0, 0.045, 0.275},
    {5, 500, 1.0, 0.051, 0.177},
    {5, 500, 0.5, 0.049, 0.116},
    {5, 500, 0.25, 0.050, 0.087},
    {5, 500, 0.125, 0.049, 0.071},
    {5, 500, 0.0625, 0.047, 0.065},
    {5, 1000, 2.0, 0.049, 0.271},
    {5, 1000, 1.0, 0.052, 0.172},
    {5, 1000, 0.5, 0.050, 0.116},
    {5, 1000, 0.25, 0.052, 0.084},
    {5, 1000, 0.125, 0.048, 0.067},
    {5, 1000, 0.0625, 0.048, 0.064},
}};

inline constexpr std::array<PowerRow, 81> power_table = {{
    {0.5, 0.1, 0.50, 150, 0.048, 0.049, 0.802, 0.798, 123, 0.046, 0.050, 0.708, 0.710},
    {0.5, 0.1, 0.67, 402, 0.049, 0.049, 0.805, 0.799, 359, 0.047, 0.048, 0.757, 0.752},
    {0.5, 0.1, 0.80, 1180, 0.045, 0.045, 0.803, 0.798, 1116, 0.044, 0.045, 0.781, 0.776},
    {0.5, 0.25, 0.50, 122, 0.048, 0.051, 0.803, 0.800, 111, 0.045, 0.049, 0.717, 0.720},
    {0.5, 0.25, 0.67, 346, 0.051, 0.050, 0.809, 0.802, 319, 0.050, 0.050, 0.772, 0.764},
    {0.5, 0.25, 0.80, 986, 0.049, 0.048, 0.814, 0.806, 957, 0.049, 0.049, 0.798, 0.790},
    {0.5, 0.5, 0.50, 110, 0.047, 0.051, 0.809, 0.800, 96, 0.045, 0.050, 0.749, 0.743},
    {0.5, 0.5, 0.67, 284, 0.049, 0.050, 0.815, 0.802, 270, 0.051, 0.051, 0.795, 0.780},
    {0.5, 0.5, 0.80, 798, 0.050, 0.050, 0.818, 0.803, 789, 0.051, 0.051, 0.811, 0.797},
    {0.5, 0.75, 0.50, 94, 0.049, 0.051, 0.811, 0.801, 84, 0.049, 0.056, 0.765, 0.756},
    {0.5, 0.75, 0.67, 244, 0.050, 0.051, 0.816, 0.796, 236, 0.050, 0.050, 0.802, 0.782},
    {0.5, 0.75, 0.80, 702, 0.053, 0.050, 0.826, 0.802, 698, 0.053, 0.049, 0.823, 0.799},
    {0.5, 1, 0.50, 82, 0.050, 0.056, 0.810, 0.799, 76, 0.048, 0.056, 0.778, 0.766},
    {0.5, 1, 0.67, 220, 0.051, 0.052, 0.821, 0.798, 216, 0.051, 0.052, 0.815, 0.792},
    {0.5, 1, 0.80, 658, 0.051, 0.050, 0.826, 0.803, 657, 0.050, 0.051, 0.823, 0.801},
    {0.5, 1.25, 0.50, 76, 0.037, 0.059, 0.803, 0.801, 70, 0.036, 0.058, 0.758, 0.768},
    {0.5, 1.25, 0.67, 208, 0.051, 0.054, 0.817, 0.803, 203, 0.047, 0.054, 0.758, 0.768},
    {0.5, 1.25, 0.80, 640, 0.051, 0.052, 0.816, 0.800, 639, 0.050, 0.052, 0.811, 0.800},
    {0.5, 1.5, 0.50, 72, 0.029, 0.059, 0.731, 0.801, 67, 0.024, 0.059, 0.616, 0.764},
    {0.5, 1.5, 0.67, 200, 0.045, 0.055, 0.799, 0.799, 198, 0.045, 0.055, 0.796, 0.792},
    {0.5, 1.5, 0.80, 634, 0.051, 0.053, 0.814, 0.800, 633, 0.050, 0.052, 0.809, 0.792},
    {0.5, 2, 0.50, 68, 0.027, 0.058, 0.496, 0.793, 66, 0.026, 0.059, 0.464, 0.779},
    {0.5, 2, 0.67, 198, 0.042, 0.056, 0.757, 0.797, 196, 0.041, 0.055, 0.748, 0.792},
    {0.5, 2, 0.80, 632, 0.053, 0.052, 0.811, 0.799, 631, 0.050, 0.052, 0.806, 0.798},
    {0.5, 5, 0.50, 66, 0.026, 0.059, 0.402, 0.779, 66, 0.026, 0.059, 0.402, 0.779},
    {0.5, 5, 0.67, 196, 0.041, 0.055, 0.742, 0.792, 195, 0.037, 0.055, 0.724, 0.788},
    {0.5, 5, 0.80, 632, 0.053, 0.052, 0.811, 0.799, 631, 0.050, 0.052, 0.805, 0.798},
    {0.8, 0.1, 0.50, 372, 0.048, 0.049, 0.785, 0.784, 294, 0.048, 0.050, 0.677, 0.675},
    {0.8, 0.1, 0.67, 968, 0.049, 0.049, 0.799, 0.797, 845, 0.049, 0.049, 0.738, 0.737},
    {0.8, 0.1, 0.80, 2736, 0.049, 0.049, 0.799, 0.798, 2554, 0.050, 0.050, 0.771, 0.770},
    {0.8, 0.25, 0.50, 308, 0.049, 0.048, 0.787, 0.785, 253, 0.047, 0.049, 0.696, 0.696},
    {0.8, 0.25, 0.67, 766, 0.047, 0.049, 0.800, 0.798, 693, 0.045, 0.046, 0.756, 0.754},
    {0.8, 0.25, 0.80, 2032, 0.049, 0.050, 0.803, 0.800, 1995, 0.049, 0.049, 0.786, 0.783},
    {0.8, 0.5, 0.50, 232, 0.050, 0.052, 0.796, 0.792, 200, 0.047, 0.048, 0.724, 0.721},
    {0.8, 0.5, 0.67, 554, 0.048, 0.048, 0.806, 0.800, 523, 0.047, 0.048, 0.775, 0.770},
    {0.8, 0.5, 0.80, 1386, 0.045, 0.045, 0.806, 0.800, 1376, 0.045, 0.046, 0.800, 0.795},
    {0.8, 0.75, 0.50, 182, 0.047, 0.048, 0.801, 0.798, 161, 0.047, 0.050, 0.731, 0.732},
    {0.8, 0.75, 0.67, 426, 0.048, 0.049, 0.810, 0.801, 412, 0.048, 0.049, 0.790, 0.781},
    {0.8, 0.75, 0.80, 1048, 0.048, 0.048, 0.814, 0.803, 1054, 0.047, 0.048, 0.817, 0.806},
    {0.8, 1, 0.50, 146, 0.048, 0.051, 0.805, 0.800, 141, 0.046, 0.050, 0.784, 0.782},
    {0.8, 1, 0.67, 344, 0.050, 0.050, 0.814, 0.802, 354, 0.049, 0.048, 0.827, 0.814},
    {0.8, 1, 0.80, 984, 0.053, 0.052, 0.818, 0.801, 892, 0.051, 0.050, 0.837, 0.819},
    {0.8, 1.25, 0.50, 120, 0.047, 0.052, 0.800, 0.794, 110, 0.046, 0.050, 0.760, 0.756},
    {0.8, 1.25, 0.67, 288, 0.050, 0.051, 0.817, 0.800, 283, 0.050, 0.052, 0.806, 0.791},
    {0.8, 1.25, 0.80, 748, 0.052, 0.050, 0.823, 0.801, 792, 0.052, 0.051, 0.826, 0.804},
    {0.8, 1.5, 0.50, 102, 0.047, 0.051, 0.806, 0.799, 94, 0.046, 0.053, 0.766, 0.759},
    {0.8, 1.5, 0.67, 252, 0.049, 0.050, 0.818, 0.798, 246, 0.051, 0.051, 0.809, 0.790},
    {0.8, 1.5, 0.80, 688, 0.051, 0.051, 0.817, 0.799, 691, 0.050, 0.050, 0.814, 0.799},
    {0.8, 2, 0.50, 80, 0.043, 0.057, 0.797, 0.798, 71, 0.036, 0.056, 0.707, 0.735},
    {0.8, 2, 0.67, 212, 0.048, 0.056, 0.803, 0.799, 202, 0.046, 0.054, 0.785, 0.776},
    {0.8, 2, 0.80, 644, 0.051, 0.052, 0.815, 0.802, 631, 0.049, 0.052, 0.800, 0.793},
    {0.8, 5, 0.50, 66, 0.026, 0.059, 0.402, 0.779, 66, 0.026, 0.059, 0.402, 0.779},
    {0.8, 5, 0.67, 196, 0.041, 0.055, 0.742, 0.792, 196, 0.041, 0.055, 0.742, 0.792},
    {0.8, 5, 0.80, 632, 0.053, 0.052, 0.811, 0.799, 631, 0.050, 0.052, 0.805, 0.798},
    {0.2, 0.1, 0.50, 92, 0.051, 0.053, 0.815, 0.804, 79, 0.047, 0.055, 0.736, 0.736},
    {0.2, 0.1, 0.67, 252, 0.049, 0.051, 0.814, 0.799, 235, 0.048, 0.052, 0.782, 0.770},
    {0.2, 0.1, 0.80, 768, 0.051, 0.051, 0.817, 0.804, 743, 0.050, 0.048, 0.802, 0.790},
    {0.2, 0.25, 0.50, 86, 0.052, 0.049, 0.818, 0.801, 75, 0.045, 0.057, 0.745, 0.743},
    {0.2, 0.25, 0.67, 234, 0.052, 0.049, 0.818, 0.801, 222, 0.054, 0.053, 0.803, 0.781},
    {0.2, 0.25, 0.80, 706, 0.055, 0.052, 0.824, 0.806, 694, 0.053, 0.052, 0.815, 0.798},
    {0.2, 0.5, 0.50, 78, 0.040, 0.058, 0.818, 0.808, 71, 0.033, 0.057, 0.748, 0.761},
    {0.2, 0.5, 0.67, 214, 0.055, 0.054, 0.833, 0.805, 207, 0.053, 0.055, 0.821, 0.788},
    {0.2, 0.5, 0.80, 654, 0.053, 0.051, 0.832, 0.803, 650, 0.055, 0.051, 0.830, 0.800},
    {0.2, 0.75, 0.50, 72, 0.030, 0.059, 0.750, 0.799, 68, 0.029, 0.059, 0.709, 0.776},
    {0.2, 0.75, 0.67, 204, 0.051, 0.056, 0.823, 0.801, 200, 0.048, 0.055, 0.816, 0.795},
    {0.2, 0.75, 0.80, 636, 0.052, 0.051, 0.822, 0.799, 635, 0.052, 0.053, 0.817, 0.798},
    {0.2, 1, 0.50, 68, 0.027, 0.059, 0.599, 0.789, 66, 0.026, 0.060, 0.568, 0.775},
    {0.2, 1, 0.67, 198, 0.044, 0.055, 0.784, 0.797, 197, 0.039, 0.054, 0.764, 0.792},
    {0.2, 1, 0.80, 632, 0.053, 0.052, 0.815, 0.798, 632, 0.053, 0.052, 0.815, 0.798},
    {0.2, 1.25, 0.50, 68, 0.027, 0.058, 0.506, 0.793, 66, 0.026, 0.059, 0.476, 0.779},
    {0.2, 1.25, 0.67, 198, 0.042, 0.056, 0.760, 0.798, 196, 0.041, 0.055, 0.751, 0.792},
    {0.2, 1.25, 0.80, 632, 0.053, 0.052, 0.812, 0.799, 631, 0.050, 0.052, 0.808, 0.798},
    {0.2, 1.5, 0.50, 66, 0.026, 0.059, 0.424, 0.779, 66, 0.026, 0.059, 0.424, 0.779},
    {0.2, 1.5, 0.67, 196, 0.041, 0.055, 0.744, 0.792, 196, 0.041, 0.055, 0.744, 0.792},
    {0.2, 1.5, 0.80, 632, 0.053, 0.052, 0.811, 0.799, 631, 0.050, 0.052, 0.805, 0.798},
    {0.2, 2, 0.50, 66, 0.026, 0.059, 0.403, 0.779, 66, 0.026, 0.059, 0.403, 0.779},
    {0.2, 2, 0.67, 196, 0.041, 0.055, 0.742, 0.792, 196, 0.041, 0.055, 0.742, 0.792},
    {0.2, 2, 0.80, 632, 0.053, 0.052, 0.811, 0.799, 630, 0.052, 0.052, 0.809, 0.798},
    {0.2, 5, 0.50, 66, 0.026, 0.059, 0.402, 0.779, 66, 0.026, 0.059, 0.402, 0.779},
    {0.2, 5, 0.67, 196, 0.041, 0.055, 0.742, 0.792, 195, 0.037, 0.055, 0.724, 0.788},
    {0.2, 5, 0.80, 632, 0.053, 0.052, 0.811, 0.799, 631, 0.050, 0.052, 0.805, 0.798},
}};

}  // namespace refcurve::published
