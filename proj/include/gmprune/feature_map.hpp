#pragma once

#include "gmprune/types.hpp"

#include <cstddef>

namespace gmprune {

enum class FeatureMapKind { identity, polynomial };

/// Explicit feature map turning the polynomial kernel (<x,y> + c)^degree
/// into an inner product of finite feature vectors.
struct FeatureMapSpec {
    FeatureMapKind kind = FeatureMapKind::identity;
    int degree = 1;   // polynomial only, >= 1
    double c = 0.0;   // polynomial only, >= 0

    static FeatureMapSpec identity() { return {}; }
    static FeatureMapSpec polynomial(int degree, double c);

    void validate() const;
};

/// Output dimension of the degree-p polynomial map on d-dimensional input:
/// binomial(d + p, p). Throws std::overflow_error if it does not fit.
std::size_t poly_feature_dim(std::size_t input_dim, std::size_t degree);

/*
 * Applies the feature map row-wise.
 *
 * The polynomial expansion enumerates monomials in graded lexicographic
 * order (constant first, then degree 1, 2, ...; within a degree the exponent
 * tuples are ordered lexicographically descending). Each monomial x^a with
 * |a| = m carries weight sqrt(multinomial(p; p-m, a) * c^(p-m)), so that
 * <phi(x), phi(y)> = (<x,y> + c)^p exactly by the multinomial theorem.
 *
 * Expansions whose total output size n * binomial(d+p, p) exceeds
 * max_output_entries are rejected (std::invalid_argument).
 */
EmbeddingMatrix apply_feature_map(const FeatureMapSpec& spec,
                                  const EmbeddingMatrix& X,
                                  std::size_t max_output_entries = 1'000'000);

}  // namespace gmprune
