#pragma once

#include "gmprune/types.hpp"

#include <cstdint>

namespace gmprune {

struct GmSolverConfig {
    double epsilon = 1e-8;    // step-norm convergence threshold
    double delta = 1e-10;     // denominator regularizer
    int t_max = 1000;         // iteration cap
    double gamma_gm = 1.0;    // fraction of rows used for the GM, (0, 1]
    std::uint64_t seed = 0;   // sub-sampling seed

    void validate() const;
};

struct GmResult {
    Vector point;
    int iterations = 0;          // update steps performed
    double final_step_norm = 0;  // ||z_{k+1} - z_k|| at the last step
    double objective = 0;        // sum_i ||point - x_i|| over the solved rows
};

/// Column-wise mean of X with compensated summation.
Vector empirical_mean(const EmbeddingMatrix& X);

/// rho(z) = sum_i ||z - x_i||, compensated.
double distance_sum(const EmbeddingMatrix& X, const Vector& z);

/*
 * Geometric median by the regularized Weiszfeld iteration:
 *
 *   z_{k+1} = sum_i x_i / (||x_i - z_k|| + delta)
 *           / sum_i   1 / (||x_i - z_k|| + delta)
 *
 * starting from the arithmetic mean and stopping when the step norm drops
 * below epsilon or t_max updates have been made (reaching t_max is reported
 * via iterations == t_max, not an error). gamma_gm is ignored here.
 */
GmResult weiszfeld_gm(const EmbeddingMatrix& X, const GmSolverConfig& cfg);

/// weiszfeld_gm on a uniform ceil(gamma_gm * n)-subset of rows drawn without
/// replacement using cfg.seed. gamma_gm = 1 uses all rows (no draw).
GmResult subsampled_gm(const EmbeddingMatrix& X, const GmSolverConfig& cfg);

}  // namespace gmprune
