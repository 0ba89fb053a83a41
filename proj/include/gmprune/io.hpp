#pragma once

#include "gmprune/types.hpp"

#include <filesystem>
#include <stdexcept>
#include <vector>

namespace gmprune {

/// Malformed input file; the message carries the path and, for text formats,
/// the 1-based line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Embedding file formats:
 *
 *   CSV    header "f0,...,f{s-1}[,label][,corrupt]", one row per point.
 *   binary magic "GMPR", u16 version = 1, u64 n, u64 s, then n*s 32-bit
 *          IEEE-754 floats, row-major, all little-endian. Matrix only.
 *
 * Readers validate that every feature value is finite.
 */
Dataset read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const Dataset& data);

EmbeddingMatrix read_binary(const std::filesystem::path& path);
void write_binary(const std::filesystem::path& path, const EmbeddingMatrix& X);

/// Reads either format, sniffing the GMPR magic.
Dataset read_embeddings(const std::filesystem::path& path);

/// Newline-delimited row indices.
std::vector<Index> read_indices(const std::filesystem::path& path);
void write_indices(const std::filesystem::path& path, const std::vector<Index>& indices);

}  // namespace gmprune
