#pragma once

#include "gmprune/types.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gmprune {

struct GaussianSpec {
    Vector mean;
    Matrix covariance;  // symmetric PSD
};

struct MixtureParams {
    GaussianSpec clean;
    GaussianSpec adversarial;
};

/// 2-D mixture used throughout the synthetic experiments:
/// clean N((0,0), [[1,-0.5],[-0.5,0.5]]), adversarial N((10,6), [[1,0.5],[0.5,0.5]]).
MixtureParams paper_2d_mixture();

/// Alternate 2-D mixture: shared covariance [[1,0.5],[0.5,1]], adversarial
/// mean (-5,5).
MixtureParams appendix_2d_mixture();

/// Preset lookup by CLI name ("paper-2d-mixture", "appendix-2d-mixture").
MixtureParams mixture_preset(const std::string& name);

enum class CorruptionKind {
    gaussian_mixture,
    additive_gaussian,
    additive_uniform,
    label_flip,
    mean_hijack,
};

struct CorruptionSpec {
    double psi = 0.0;  // corrupted fraction, [0, 0.5)
    CorruptionKind kind = CorruptionKind::gaussian_mixture;
    MixtureParams mixture = paper_2d_mixture();  // gaussian_mixture
    double noise_scale = 1.0;                    // additive_*
    int num_classes = 0;                         // label_flip
    Vector hijack_target;                        // mean_hijack

    void validate() const;
};

/// round(psi * n), the exact number of corrupted rows every generator marks.
Index corruption_count(Index n, double psi);

/// n points, round(psi*n) of them from the adversarial Gaussian, the rest
/// from the clean one, shuffled by seed. corrupt_mask flags the adversarial
/// rows. Covariances are sampled through their symmetric square root.
Dataset make_gmm_dataset(Index n, const CorruptionSpec& spec, std::uint64_t seed);

/*
 * The single-point empirical-mean attack: appends
 *     x_bad = (n + 1) * target - sum_i x_i
 * so the mean of the augmented set equals `target` exactly. Returns the
 * augmented matrix and the crafted row's index (== n).
 */
std::pair<EmbeddingMatrix, Index> hijack_mean(const EmbeddingMatrix& X, const Vector& target);

enum class NoiseKind { gaussian, uniform };

/// Perturbs round(psi*n) seeded rows by N(0, scale^2 I) or U(-scale, scale)^s
/// and marks them in the returned corrupt_mask.
Dataset additive_noise(const EmbeddingMatrix& X, double psi, NoiseKind kind,
                       double scale, std::uint64_t seed);

/// Symmetric label noise: round(psi*n) seeded rows get a uniformly random
/// *different* class in [0, num_classes).
std::vector<int> flip_labels(const std::vector<int>& labels, double psi,
                             int num_classes, std::uint64_t seed);

/// Change in the squared-distance importance score when the centroid shifts
/// by delta_mu: ||delta_mu||^2 - 2 (x - mu_clean)' delta_mu.
double score_deviation(const Vector& x, const Vector& mu_clean, const Vector& delta_mu);

}  // namespace gmprune
