#pragma once

#include "gmprune/selectors.hpp"
#include "gmprune/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gmprune {

/// Selection-quality summary. Serializes with fixed keys: delta_sq, mmd_sq,
/// frechet, corrupt_fraction, slope, wall_times (absent optionals -> null).
struct MetricsReport {
    double delta_sq = 0;
    double mmd_sq = 0;
    std::optional<double> frechet;
    std::optional<double> corrupt_fraction;
    std::optional<double> slope;
    std::map<std::string, double> wall_times;  // phase name -> seconds

    nlohmann::json to_json() const;
};

/// Squared Euclidean distance between a subset mean and a reference mean.
double moment_discrepancy(const Vector& subset_mean, const Vector& reference);

/// Explicit-feature MMD^2: squared distance between the column means of the
/// two matrices (computed through the same compensated mean as
/// empirical_mean, so it is bit-identical to moment_discrepancy of those).
double mmd_sq(const EmbeddingMatrix& subset, const EmbeddingMatrix& reference);

/*
 * Frechet distance between Gaussians:
 *   ||mu1 - mu2||^2 + tr(S1 + S2 - 2 (S1^{1/2} S2 S1^{1/2})^{1/2})
 * Square roots via symmetric eigendecomposition; eigenvalues below -1e-8
 * reject the input as non-PSD, tiny negatives are clamped to zero.
 * Dimension capped at 128.
 */
double frechet_gaussian(const Vector& mu1, const Matrix& sigma1,
                        const Vector& mu2, const Matrix& sigma2);

/// Fraction of selected rows whose mask entry is true. The mask must cover
/// every selected index.
double corrupt_fraction(const SelectionResult& selection, const std::vector<bool>& mask);

/// OLS slope of log(values) against log(ks). Needs >= 3 points, all values
/// and ks positive.
double fit_loglog_slope(const std::vector<double>& ks, const std::vector<double>& values);

/// Row sample covariance (denominator n), used to fit Gaussians for the
/// Frechet metric.
Matrix sample_covariance(const EmbeddingMatrix& X);

}  // namespace gmprune
