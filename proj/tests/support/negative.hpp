#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novbi/axioms.hpp"

namespace novbi::testing {

/// A fixture that must fail one catalog identity.
///
/// When `tuple` is set the witness is pinned by hand; otherwise the expected
/// witness is the first tuple where the naive expansion is nonzero.
struct NegativeControl {
  std::string name;
  std::string axiom_id;
  Env env;
  Scalar q = Scalar(1);
  std::optional<std::vector<std::size_t>> tuple;
  std::optional<Tensor> residual;
};

/// Rational environment with every role filled by small asymmetric constants.
Env scrambled_env();

/// Hand-pinned failures plus the scrambled environment for every other id.
std::vector<NegativeControl> negative_controls();

}  // namespace novbi::testing
