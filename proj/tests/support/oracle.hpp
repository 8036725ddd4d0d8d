#pragma once

#include <span>
#include <string>
#include <vector>

#include "novbi/axioms.hpp"

namespace novbi::testing {

/// Element-by-element expansion of a catalog identity on one input tuple.
///
/// Written directly from the displayed formulas with explicit loops over
/// structure constants and Sweedler sums; it shares no code with the
/// expression evaluator. Returns the residual of the given part, with the
/// same legs as the evaluator's output block.
Tensor oracle_residual(const std::string& id, const Env& env, std::span<const std::size_t> tuple, std::size_t part,
                       const Scalar& q);

/// Catalog ids the oracle covers (every multilinear entry).
std::vector<std::string> oracle_ids();

/// The output block of a report's residual at one input tuple.
Tensor residual_block(const AxiomReport& rep, std::size_t part, std::span<const std::size_t> tuple);

/// Nondegeneracy by fraction-field Gaussian elimination (rational forms only).
bool oracle_nondegenerate(const Tensor& form);

}  // namespace novbi::testing
