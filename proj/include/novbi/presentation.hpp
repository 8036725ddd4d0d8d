#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novbi/tensor.hpp"

namespace novbi {

/// Basis names of a finite-dimensional space.
struct Space {
  std::vector<std::string> names;

  std::size_t dim() const { return names.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws Error when names repeat or the space is empty.
  void validate() const;
  friend bool operator==(const Space&, const Space&) = default;
};

/// A finite-dimensional structure given by structure constants.
///
/// Components are stored by kind and name. Products and coproducts are on the
/// carrier itself; forms and r-elements are order-2 tensors on the carrier.
struct Presentation {
  Space space;
  Ring ring = Ring::Rational;
  std::map<std::string, Bilinear> products;
  std::map<std::string, Coproduct> coproducts;
  std::map<std::string, LinMap> maps;
  std::map<std::string, Tensor> forms;
  std::map<std::string, Tensor> relements;

  std::size_t dim() const { return space.dim(); }

  const Bilinear& product(const std::string& name) const;
  const Coproduct& coproduct(const std::string& name) const;
  const LinMap& map(const std::string& name) const;
  const Tensor& form(const std::string& name) const;
  const Tensor& relement(const std::string& name) const;

  /// Checks the space, dimensions, and that every component is over `ring`.
  void validate() const;
  Presentation in_ring(Ring r) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Evaluate every component at q = q0.
Presentation specialize(const Presentation& p, const Rational& q0);

/// Basis names e1 ... en.
Space numbered_space(std::size_t n, const std::string& prefix = "e");

/// Basis names of the dual space: each name followed by a prime.
std::vector<std::string> dual_names(const Space& s);

/// Products become coproducts with transposed constants and vice versa; maps
/// are transposed; forms and r-elements keep their matrices. Involutive.
Presentation dualize(const Presentation& p);

}  // namespace novbi
