#pragma once

#include <optional>
#include <vector>

#include "novbi/tensor.hpp"

namespace novbi {

/// Basis of the kernel of an order-2 matrix over Q (rational constants only).
std::vector<Tensor> nullspace(const Tensor& matrix);

/// Rank over the fraction field of the matrix's ring.
std::size_t rank(const Tensor& matrix);

/// A nonzero kernel vector over the matrix's ring, or nothing if the columns
/// are independent. Uses fraction-free elimination, so Q[q] entries stay polynomial.
std::optional<Tensor> kernel_vector(const Tensor& matrix);

/// Inverse of a square map whose entries are rational constants.
/// Throws DegenerateForm when singular.
LinMap inverse(const LinMap& m);

}  // namespace novbi
