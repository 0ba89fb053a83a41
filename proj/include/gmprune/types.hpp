#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gmprune {

// Row-major so that a row (one point) is contiguous in memory; this also
// matches the on-disk layouts in io.hpp.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// n x s matrix of embedded points; rows are points. Construction validates
/// that the matrix is nonempty and every entry is finite.
class EmbeddingMatrix {
public:
    explicit EmbeddingMatrix(Matrix values);

    Index rows() const { return values_.rows(); }
    Index cols() const { return values_.cols(); }
    const Matrix& values() const { return values_; }

private:
    Matrix values_;
};

/// A point set plus optional per-row metadata. The corrupt mask is ground
/// truth for evaluation only: selector entry points accept EmbeddingMatrix,
/// never Dataset, so selection code cannot see it.
struct Dataset {
    EmbeddingMatrix embeddings;
    std::optional<std::vector<int>> labels;
    std::optional<std::vector<bool>> corrupt_mask;

    Dataset(EmbeddingMatrix embeddings_,
            std::optional<std::vector<int>> labels_ = std::nullopt,
            std::optional<std::vector<bool>> corrupt_mask_ = std::nullopt);

    Index size() const { return embeddings.rows(); }
};

}  // namespace gmprune
