#pragma once

#include "gmprune/robust_mean.hpp"
#include "gmprune/types.hpp"

#include <cstdint>
#include <vector>

namespace gmprune {

/// Which vector a batched selection herds toward.
enum class TargetMode {
    gm_global,       // one sub-sampled GM of the whole pool
    gm_per_batch,    // a fresh GM per batch
    empirical_mean,  // the pool mean (kernel herding)
};

struct SelectionConfig {
    Index k = 1;
    Index batches = 1;
    std::uint64_t seed = 0;
    GmSolverConfig gm{};
    TargetMode target_mode = TargetMode::gm_global;

    void validate(Index n) const;  // 1 <= k <= n, 1 <= batches <= k
};

struct TraceStep {
    double target_alignment = 0;  // <theta_t, chosen row> at pick time
    double theta_norm = 0;        // ||theta_t|| at pick time
};

struct SelectionResult {
    std::vector<Index> indices;   // k distinct row ids, in pick order
    std::vector<TraceStep> trace; // one entry per pick
    // Vector herded toward. For gm_per_batch this holds the first batch's
    // target (there is one per batch); global modes store the global target.
    Vector target;
};

/*
 * Greedy moment matching toward a fixed target:
 *
 *   theta_0 = target
 *   repeat k times:
 *     pick argmax over remaining rows of <theta_t, row>   (ties: lowest id)
 *     theta_{t+1} = theta_t + (target - chosen row)
 *
 * so after T picks theta_T = theta_0 + T*target - sum of chosen rows, and
 * the running mean of the chosen rows approaches the target at O(1/k).
 */
SelectionResult herd_toward(const EmbeddingMatrix& phi, const Vector& target,
                            Index k, bool without_replacement = true);

/// GM Matching: herds each of `batches` seeded row partitions toward the
/// (sub-sampled) geometric median, without replacement.
SelectionResult select_gm_matching(const EmbeddingMatrix& phi, const SelectionConfig& cfg);

/// Kernel herding baseline: select_gm_matching with the empirical mean as
/// target.
SelectionResult select_kernel_herding(const EmbeddingMatrix& phi, const SelectionConfig& cfg);

/// Uniform k-subset without replacement.
SelectionResult select_random(Index n, Index k, std::uint64_t seed);

enum class CentroidMode { easy, hard, moderate };

/// Distance-to-centroid baselines: easy = k closest to the mean, hard = k
/// farthest, moderate = k closest to the median distance. Ties by lowest id.
SelectionResult select_by_centroid(const EmbeddingMatrix& phi, Index k, CentroidMode mode);

/// The deterministic batch partition used by batched selectors: a seeded
/// permutation of 0..n-1 is split into `batches` contiguous chunks (sizes
/// differing by at most one, earliest batches larger) and each chunk is
/// sorted ascending.
std::vector<std::vector<Index>> partition_batches(Index n, Index batches, std::uint64_t seed);

/// Per-batch pick counts: floor(k/batches) or one more, extras to the
/// earliest batches.
std::vector<Index> batch_quotas(Index k, Index batches);

}  // namespace gmprune
