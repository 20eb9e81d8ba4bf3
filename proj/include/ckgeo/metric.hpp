#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>

namespace ckgeo {

using Point = Eigen::VectorXd;

/// A symmetric-matrix-valued field on a coordinate chart. Immutable; the
/// callables must be reentrant.
class MetricField {
 public:
  using Evaluator = std::function<Eigen::MatrixXd(const Point&)>;
  using Guard = std::function<bool(const Point&)>;

  MetricField(int dimension, Evaluator evaluate, Guard domain_guard = {}, bool degenerate = false,
              std::string description = {})
      : dimension_(dimension),
        evaluate_(std::move(evaluate)),
        guard_(std::move(domain_guard)),
        degenerate_(degenerate),
        description_(std::move(description)) {}

  int dimension() const { return dimension_; }

  Eigen::MatrixXd operator()(const Point& x) const { return evaluate_(x); }

  /// True when x avoids every coordinate singularity the producer knows of.
  bool in_domain(const Point& x) const { return !guard_ || guard_(x); }

  /// Set by producers whose metric is degenerate everywhere (kappa2 == 0).
  bool degenerate() const { return degenerate_; }

  const std::string& description() const { return description_; }

 private:
  int dimension_;
  Evaluator evaluate_;
  Guard guard_;
  bool degenerate_;
  std::string description_;
};

}  // namespace ckgeo
