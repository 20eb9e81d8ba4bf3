#pragma once

#include <stdexcept>
#include <string>

namespace ckgeo {

/// Generator, site or involution index outside its admissible range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Point outside a chart, a domain guard, or a conformal-factor singularity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Metric determinant too small for the inverse metric to be formed.
class DegenerateMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ambient pullback requested at kappa1 == 0.
class FlatCaseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dynamics requested on a space with lambda2^2 == 0.
class DegenerateSignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ckgeo
