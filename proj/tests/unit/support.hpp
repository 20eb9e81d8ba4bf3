#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>

namespace testing {

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(20240611 + salt); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::VectorXd uniform_vector(std::mt19937_64& rng, int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

/// Plain Taylor series of the matrix exponential; adequate for moderate norms.
inline Eigen::MatrixXd taylor_exp(const Eigen::MatrixXd& a, int terms = 60) {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * a / k;
    sum += term;
  }
  return sum;
}

}  // namespace testing
