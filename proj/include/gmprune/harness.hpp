#pragma once

#include "gmprune/corruption.hpp"
#include "gmprune/feature_map.hpp"
#include "gmprune/metrics.hpp"
#include "gmprune/selectors.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gmprune {

struct GeneratorSpec {
    std::string preset = "paper-2d-mixture";
    Index n = 1000;
};

struct SelectorSpec {
    std::string name;  // gm-matching | herding | random | easy | hard | moderate
    Index batches = 1;
    double gamma_gm = 1.0;
    TargetMode target_mode = TargetMode::gm_global;
};

/// Reference for the moment discrepancy: the generator's population clean
/// mean (default) or the mean of the clean sample rows.
enum class DeltaReference { population, clean_sample };

struct ExperimentConfig {
    int schema_version = 1;
    std::optional<GeneratorSpec> generator;     // exactly one of generator /
    std::optional<std::string> dataset_file;    // dataset_file must be set
    FeatureMapSpec feature_map{};
    std::vector<SelectorSpec> selectors;
    std::vector<Index> ks;
    std::vector<double> psis;
    std::vector<std::uint64_t> seeds;
    DeltaReference delta_reference = DeltaReference::population;
    GmSolverConfig gm{};
    std::string out_dir;
    bool record_indices = false;

    /// k = {8..256}, psi = {0, 0.1, 0.2, 0.3, 0.4, 0.45}, seeds 0..9,
    /// selectors gm-matching/herding/random on the paper-2d-mixture.
    static ExperimentConfig defaults();

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    void validate() const;
};

/// 64-bit FNV-1a of the canonical (sorted-key) JSON dump, as 16 hex chars.
std::string config_hash(const ExperimentConfig& cfg);

struct RunRecord {
    std::string config_hash;
    std::string selector;
    double psi = 0;
    Index k = 0;
    std::uint64_t seed = 0;
    MetricsReport metrics;
    std::optional<std::vector<Index>> indices;

    nlohmann::json to_json() const;
};

struct SlopeRecord {
    std::string selector;
    double psi = 0;
    double slope = 0;  // log-log slope of seed-averaged sqrt(delta_sq) vs k
};

struct ConvergenceOutput {
    std::vector<RunRecord> records;
    std::vector<SlopeRecord> slopes;
};

using RecordSink = std::function<void(const RunRecord&)>;

/// Full (selector x psi x k x seed) sweep. Each cell generates/corrupts,
/// selects, and scores the subset against the configured clean reference.
/// Records are handed to `sink` as they complete when one is given.
ConvergenceOutput run_convergence(const ExperimentConfig& cfg, const RecordSink& sink = nullptr);

struct BreakdownRecord {
    double psi = 0;
    std::uint64_t seed = 0;
    double mean_err = 0;  // ||empirical mean - mu_clean||
    double gm_err = 0;    // ||GM - mu_clean||
};

/// Robust-mean breakdown sweep over the psi grid (generator datasets only).
std::vector<BreakdownRecord> run_breakdown(const ExperimentConfig& cfg);

struct GmBenchRow {
    Index n = 0;
    Index d = 0;
    double seconds = 0;     // mean wall time over the repetitions
    double iterations = 0;  // mean Weiszfeld iterations
};

/// Times weiszfeld_gm on standard-normal data over an (n, d) grid,
/// averaging >= `reps` repetitions; data generation is outside the clock.
std::vector<GmBenchRow> bench_gm_scaling(const std::vector<Index>& ns,
                                         const std::vector<Index>& ds,
                                         const GmSolverConfig& cfg,
                                         int reps = 5, std::uint64_t seed = 0);

struct BatchBenchRow {
    Index batches = 0;
    double select_seconds = 0;  // herding only; GM target is outside the clock
    double delta_sq = 0;        // subset mean vs the shared GM target
};

/// Selection cost/quality trade-off of the batching scheme at fixed (n, k).
std::vector<BatchBenchRow> bench_batching(Index n, Index k, const std::vector<Index>& batch_counts,
                                          const GmSolverConfig& cfg, Index dim = 16,
                                          std::uint64_t seed = 0);

// CSV emitters. Convergence columns are fixed:
// selector,psi,k,seed,delta_sq,mmd_sq,corrupt_fraction
void write_convergence_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records);
void write_slopes_csv(const std::filesystem::path& path, const std::vector<SlopeRecord>& slopes);
void write_breakdown_csv(const std::filesystem::path& path, const std::vector<BreakdownRecord>& rows);
void write_gm_bench_csv(const std::filesystem::path& path, const std::vector<GmBenchRow>& rows);
void write_batch_bench_csv(const std::filesystem::path& path, const std::vector<BatchBenchRow>& rows);

}  // namespace gmprune
