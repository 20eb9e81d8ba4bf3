#pragma once

// Cayley-Klein orthogonal algebras so_kappa(N+1): structure constants,
// grading involutions, Inonu-Wigner contractions, Cartan-like decompositions
// and the (N+1)-dimensional vector representation.
//
// Generators J_ab (0 <= a < b <= N) are always enumerated in lexicographic
// order of (a,b). A kappa entry may be any real number, including zero.

#include <Eigen/Dense>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ckgeo {

/// N together with the contraction coefficients kappa_1..kappa_N.
class CKSignature {
 public:
  explicit CKSignature(std::vector<double> kappa);
  CKSignature(int n, std::vector<double> kappa);

  int n() const { return static_cast<int>(kappa_.size()); }
  const std::vector<double>& kappa() const { return kappa_; }
  /// kappa_m, 1-based as in the algebra's notation.
  double kappa_at(int m) const;

  /// Number of generators, N(N+1)/2.
  int dimension() const { return n() * (n() + 1) / 2; }

  /// Copy with kappa_m replaced.
  CKSignature with_kappa(int m, double value) const;

  /// Each nonzero kappa replaced by its sign. Rescaling generators maps the
  /// original algebra onto this one.
  CKSignature normalized_signs() const;

  bool is_integral() const;

 private:
  std::vector<double> kappa_;
};

struct GeneratorIndex {
  int a = 0;
  int b = 1;

  auto operator<=>(const GeneratorIndex&) const = default;
};

struct BracketTerm {
  double coef = 0.0;
  GeneratorIndex target;

  bool operator==(const BracketTerm&) const = default;
};

/// Sparse antisymmetric bracket table. Only pairs x < y are stored; the
/// other orientation is produced on access.
class StructureConstants {
 public:
  using Key = std::pair<GeneratorIndex, GeneratorIndex>;
  using Table = std::map<Key, std::vector<BracketTerm>>;

  /// Validates indices and key ordering; terms with zero coefficient are dropped.
  StructureConstants(int n, std::vector<double> kappa, Table table);

  int n() const { return n_; }
  const std::vector<double>& kappa() const { return kappa_; }
  int dimension() const { return n_ * (n_ + 1) / 2; }
  const Table& table() const { return table_; }

  std::vector<GeneratorIndex> generators() const;
  int index_of(GeneratorIndex g) const;

  /// [x, y] expanded on the basis; empty when the bracket vanishes.
  std::vector<BracketTerm> bracket(GeneratorIndex x, GeneratorIndex y) const;

  /// Dense bracket of two coordinate vectors over the lexicographic basis.
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Largest absolute coefficient difference over all stored pairs.
  double distance(const StructureConstants& other) const;

  bool operator==(const StructureConstants& other) const;

 private:
  int n_;
  std::vector<double> kappa_;
  Table table_;
};

/// kappa_{a+1} kappa_{a+2} ... kappa_b.
double two_index_kappa(const CKSignature& sig, int a, int b);

StructureConstants build_structure_constants(const CKSignature& sig);

/// max over generator triples of the sup-norm of the Jacobi cyclic sum.
double jacobi_residual(const StructureConstants& sc);

/// +1 when J_ab is invariant under Theta^(m), -1 when a < m <= b.
int involution_theta(const CKSignature& sig, int m, GeneratorIndex g);
int involution_theta(int n, int m, GeneratorIndex g);

/// Bracket table in the basis J_ab -> eps J_ab (a < m <= b). Finite at eps = 0,
/// where it equals the algebra with kappa_m set to zero. The kappa field of
/// the result carries eps^2 kappa_m.
StructureConstants contract_gamma(const StructureConstants& sc, int m, double eps);

struct CartanDecomposition {
  int m = 1;
  std::vector<GeneratorIndex> p_generators;
  std::vector<GeneratorIndex> h_generators;
  /// (kappa_1..kappa_{m-1}) of so(m) and (kappa_{m+1}..kappa_N) of so(N+1-m).
  std::vector<double> h_left_kappa;
  std::vector<double> h_right_kappa;
};

CartanDecomposition cartan_decompose(const CKSignature& sig, int m);

struct SpaceReport {
  int m = 1;
  int dimension = 0;
  int rank = 0;
  double curvature_coefficient = 0.0;
  /// Name of the isotropy subalgebra h^(m).
  std::string isotropy;
};

SpaceReport space_report(const CKSignature& sig, int m);

struct MatrixRep {
  std::map<GeneratorIndex, Eigen::MatrixXd> matrices;
  Eigen::MatrixXd ik_matrix;
};

/// J_ab = -kappa_ab e_ab + e_ba, and I_kappa = diag(kappa_00, kappa_01, ..., kappa_0N).
MatrixRep vector_representation(const CKSignature& sig);

/// max over generators of |X^T I + I X|.
double invariance_residual(const MatrixRep& rep);

/// max over pairs of |[X_x, X_y] - sum coef X_target| using the table.
double representation_residual(const MatrixRep& rep, const StructureConstants& sc);

/// exp(t J_ab) in the vector representation (closed form in kappa_ab trigonometry).
Eigen::MatrixXd one_parameter_subgroup(const CKSignature& sig, GeneratorIndex g, double t);

/// so(p,q), iso(p,q), iiso(p,q), t_d⊙(...) or "flag", from the zero and sign pattern of kappa.
std::string classify_algebra(const CKSignature& sig);

/// Name of so_{kappa...}(k) for a run of nonzero coefficients, e.g. "so(2,1)".
std::string pseudo_orthogonal_name(const std::vector<double>& kappa);

/// All 3^n signatures with entries in {-1, 0, 1}, enumerated in base-3 order
/// (digit 0 -> -1, 1 -> 0, 2 -> +1; kappa_1 least significant).
std::vector<CKSignature> sign_sweep(int n);

}  // namespace ckgeo
