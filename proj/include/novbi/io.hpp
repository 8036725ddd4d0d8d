#pragma once

#include <string>
#include <vector>

#include "novbi/axioms.hpp"
#include "novbi/presentation.hpp"

namespace novbi {

/// Parse the presentation text format (see docs/presentation-format.md).
/// Throws ParseError with the offending line number.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

/// Canonical text: sections sorted by kind and name, entries in index order.
std::string emit_presentation(const Presentation& p);

/// A scalar in the file syntax: "3", "-1/2", "2+6*q".
Scalar parse_scalar(const std::string& text, Ring ring);

/// "2*e1 (x) e2 - 1/2*e3 (x) e1" for a tensor whose legs all use `names`; "0" when zero.
std::string render_tensor(const Tensor& t, const std::vector<std::string>& names);

/// "(e1, e2, e2)".
std::string render_tuple(const std::vector<std::size_t>& tuple, const std::vector<std::string>& names);

}  // namespace novbi
