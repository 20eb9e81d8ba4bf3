#include "ckgeo/ck_algebra.hpp"

#include "ckgeo/errors.hpp"
#include "ckgeo/kappa_trig.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ckgeo {

namespace {

void check_m(int n, int m) {
  if (m < 1 || m > n) {
    throw IndexError("involution index m=" + std::to_string(m) + " outside [1," + std::to_string(n) +
                     "]");
  }
}

bool valid_generator(int n, GeneratorIndex g) { return g.a >= 0 && g.a < g.b && g.b <= n; }

std::string format_index(GeneratorIndex g) {
  return "J" + std::to_string(g.a) + std::to_string(g.b);
}

// 1 when J_ab lies in the anti-invariant part of Theta^(m).
int grade(int m, GeneratorIndex g) { return (g.a < m && m <= g.b) ? 1 : 0; }

}  // namespace

CKSignature::CKSignature(std::vector<double> kappa) : kappa_(std::move(kappa)) {
  if (kappa_.empty()) throw std::invalid_argument("CKSignature requires n >= 1");
}

CKSignature::CKSignature(int n, std::vector<double> kappa) : CKSignature(std::move(kappa)) {
  if (n != static_cast<int>(kappa_.size())) {
    throw std::invalid_argument("CKSignature: kappa has " + std::to_string(kappa_.size()) +
                                " entries, expected " + std::to_string(n));
  }
}

double CKSignature::kappa_at(int m) const {
  check_m(n(), m);
  return kappa_[m - 1];
}

CKSignature CKSignature::with_kappa(int m, double value) const {
  check_m(n(), m);
  auto k = kappa_;
  k[m - 1] = value;
  return CKSignature(std::move(k));
}

CKSignature CKSignature::normalized_signs() const {
  auto k = kappa_;
  for (auto& v : k) v = (v > 0) ? 1.0 : (v < 0 ? -1.0 : 0.0);
  return CKSignature(std::move(k));
}

bool CKSignature::is_integral() const {
  return std::all_of(kappa_.begin(), kappa_.end(), [](double v) { return v == std::round(v); });
}

// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(int n, std::vector<double> kappa, Table table)
    : n_(n), kappa_(std::move(kappa)) {
  if (n_ < 1) throw std::invalid_argument("StructureConstants requires n >= 1");
  for (auto& [key, terms] : table) {
    const auto& [x, y] = key;
    if (!valid_generator(n_, x) || !valid_generator(n_, y)) {
      throw IndexError("bracket key " + format_index(x) + "," + format_index(y) + " out of range");
    }
    if (!(x < y)) throw std::invalid_argument("bracket keys must satisfy x < y");
    std::vector<BracketTerm> kept;
    for (const auto& t : terms) {
      if (!valid_generator(n_, t.target)) {
        throw IndexError("bracket target " + format_index(t.target) + " out of range");
      }
      if (t.coef != 0.0) kept.push_back(t);
    }
    if (!kept.empty()) table_.emplace(key, std::move(kept));
  }
}

std::vector<GeneratorIndex> StructureConstants::generators() const {
  std::vector<GeneratorIndex> out;
  out.reserve(dimension());
  for (int a = 0; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b) out.push_back({a, b});
  return out;
}

int StructureConstants::index_of(GeneratorIndex g) const {
  if (!valid_generator(n_, g)) throw IndexError("generator " + format_index(g) + " out of range");
  // Row a of the lexicographic triangle starts after sum_{i<a} (n - i) entries.
  return g.a * n_ - g.a * (g.a - 1) / 2 + (g.b - g.a - 1);
}

std::vector<BracketTerm> StructureConstants::bracket(GeneratorIndex x, GeneratorIndex y) const {
  if (x == y) return {};
  const bool flipped = y < x;
  const Key key = flipped ? Key{y, x} : Key{x, y};
  auto it = table_.find(key);
  if (it == table_.end()) return {};
  auto terms = it->second;
  if (flipped)
    for (auto& t : terms) t.coef = -t.coef;
  return terms;
}

Eigen::VectorXd StructureConstants::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dimension());
  for (const auto& [key, terms] : table_) {
    const int i = index_of(key.first);
    const int j = index_of(key.second);
    const double w = x[i] * y[j] - x[j] * y[i];
    if (w == 0.0) continue;
    for (const auto& t : terms) out[index_of(t.target)] += w * t.coef;
  }
  return out;
}

double StructureConstants::distance(const StructureConstants& other) const {
  if (n_ != other.n_) throw std::invalid_argument("distance between algebras of different N");
  double worst = 0.0;
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Eigen::VectorXd lhs = Eigen::VectorXd::Zero(dimension());
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dimension());
      for (const auto& t : bracket(gens[i], gens[j])) lhs[index_of(t.target)] += t.coef;
      for (const auto& t : other.bracket(gens[i], gens[j])) rhs[index_of(t.target)] += t.coef;
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

bool StructureConstants::operator==(const StructureConstants& other) const {
  return n_ == other.n_ && table_ == other.table_;
}

// ---------------------------------------------------------------------------

double two_index_kappa(const CKSignature& sig, int a, int b) {
  if (a < 0 || a >= b || b > sig.n()) {
    throw IndexError("two_index_kappa requires 0 <= a < b <= N, got a=" + std::to_string(a) +
                     " b=" + std::to_string(b));
  }
  double product = 1.0;
  for (int m = a + 1; m <= b; ++m) product *= sig.kappa()[m - 1];
  return product;
}

StructureConstants build_structure_constants(const CKSignature& sig) {
  const int n = sig.n();
  StructureConstants::Table table;
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        const GeneratorIndex ab{a, b}, ac{a, c}, bc{b, c};
        table[{ab, ac}].push_back({two_index_kappa(sig, a, b), bc});
        table[{ab, bc}].push_back({-1.0, ac});
        table[{ac, bc}].push_back({two_index_kappa(sig, b, c), ab});
      }
    }
  }
  return StructureConstants(n, sig.kappa(), std::move(table));
}

double jacobi_residual(const StructureConstants& sc) {
  const int d = sc.dimension();
  auto unit = [d](int i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e[i] = 1.0;
    return e;
  };
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    const auto x = unit(i);
    for (int j = i + 1; j < d; ++j) {
      const auto y = unit(j);
      const auto xy = sc.bracket(x, y);
      for (int k = j + 1; k < d; ++k) {
        const auto z = unit(k);
        const Eigen::VectorXd cyclic =
            sc.bracket(xy, z) + sc.bracket(sc.bracket(y, z), x) + sc.bracket(sc.bracket(z, x), y);
        worst = std::max(worst, cyclic.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

int involution_theta(int n, int m, GeneratorIndex g) {
  check_m(n, m);
  if (!valid_generator(n, g)) throw IndexError("generator " + format_index(g) + " out of range");
  return grade(m, g) ? -1 : 1;
}

int involution_theta(const CKSignature& sig, int m, GeneratorIndex g) {
  return involution_theta(sig.n(), m, g);
}

StructureConstants contract_gamma(const StructureConstants& sc, int m, double eps) {
  if (eps < 0) throw std::invalid_argument("contract_gamma requires eps >= 0");
  check_m(sc.n(), m);
  StructureConstants::Table table;
  for (const auto& [key, terms] : sc.table()) {
    auto& out = table[key];
    const int source = grade(m, key.first) + grade(m, key.second);
    for (const auto& t : terms) {
      const int power = source - grade(m, t.target);
      // Z2 grading: the exponent is 0 or 2, never negative.
      if (power != 0 && power != 2) {
        throw std::logic_error("bracket table is not graded by Theta^(" + std::to_string(m) + ")");
      }
      out.push_back({power == 0 ? t.coef : t.coef * eps * eps, t.target});
    }
  }
  auto kappa = sc.kappa();
  if (static_cast<int>(kappa.size()) == sc.n()) kappa[m - 1] *= eps * eps;
  return StructureConstants(sc.n(), std::move(kappa), std::move(table));
}

CartanDecomposition cartan_decompose(const CKSignature& sig, int m) {
  check_m(sig.n(), m);
  CartanDecomposition out;
  out.m = m;
  for (int a = 0; a <= sig.n(); ++a) {
    for (int b = a + 1; b <= sig.n(); ++b) {
      const GeneratorIndex g{a, b};
      (grade(m, g) ? out.p_generators : out.h_generators).push_back(g);
    }
  }
  const auto& k = sig.kappa();
  out.h_left_kappa.assign(k.begin(), k.begin() + (m - 1));
  out.h_right_kappa.assign(k.begin() + m, k.end());
  return out;
}

SpaceReport space_report(const CKSignature& sig, int m) {
  check_m(sig.n(), m);
  const int n = sig.n();
  SpaceReport r;
  r.m = m;
  r.dimension = m * (n + 1 - m);
  r.rank = std::min(m, n + 1 - m);
  r.curvature_coefficient = sig.kappa_at(m);

  const auto cd = cartan_decompose(sig, m);
  std::vector<std::string> parts;
  for (const auto* block : {&cd.h_left_kappa, &cd.h_right_kappa}) {
    if (!block->empty()) parts.push_back(classify_algebra(CKSignature(*block)));
  }
  if (parts.empty()) {
    r.isotropy = "0";
  } else {
    r.isotropy = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) r.isotropy += "⊕" + parts[i];
  }
  return r;
}

MatrixRep vector_representation(const CKSignature& sig) {
  const int n = sig.n();
  MatrixRep rep;
  rep.ik_matrix = Eigen::MatrixXd::Zero(n + 1, n + 1);
  rep.ik_matrix(0, 0) = 1.0;
  for (int a = 1; a <= n; ++a) rep.ik_matrix(a, a) = two_index_kappa(sig, 0, a);
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n + 1, n + 1);
      x(a, b) = -two_index_kappa(sig, a, b);
      x(b, a) = 1.0;
      rep.matrices.emplace(GeneratorIndex{a, b}, std::move(x));
    }
  }
  return rep;
}

double invariance_residual(const MatrixRep& rep) {
  double worst = 0.0;
  for (const auto& [g, x] : rep.matrices) {
    worst = std::max(worst, (x.transpose() * rep.ik_matrix + rep.ik_matrix * x).cwiseAbs().maxCoeff());
  }
  return worst;
}

double representation_residual(const MatrixRep& rep, const StructureConstants& sc) {
  double worst = 0.0;
  for (const auto& [gx, x] : rep.matrices) {
    for (const auto& [gy, y] : rep.matrices) {
      if (!(gx < gy)) continue;
      Eigen::MatrixXd diff = x * y - y * x;
      for (const auto& t : sc.bracket(gx, gy)) diff -= t.coef * rep.matrices.at(t.target);
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Eigen::MatrixXd one_parameter_subgroup(const CKSignature& sig, GeneratorIndex g, double t) {
  const int n = sig.n();
  if (!valid_generator(n, g)) throw IndexError("generator " + format_index(g) + " out of range");
  const double k = two_index_kappa(sig, g.a, g.b);
  // J^2 = -k (e_aa + e_bb), hence exp(tJ) = 1 + (C_k(t) - 1) P + S_k(t) J.
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n + 1, n + 1);
  const double c = ck_cos(k, t);
  const double s = ck_sin(k, t);
  out(g.a, g.a) = c;
  out(g.b, g.b) = c;
  out(g.a, g.b) = -k * s;
  out(g.b, g.a) = s;
  return out;
}

std::string pseudo_orthogonal_name(const std::vector<double>& kappa) {
  int p = 1, q = 0;
  double running = 1.0;
  for (double k : kappa) {
    running *= k;
    if (running > 0) ++p;
    else if (running < 0) ++q;
  }
  if (q > p) std::swap(p, q);
  std::ostringstream os;
  os << "so(" << p;
  if (q > 0) os << "," << q;
  os << ")";
  return os.str();
}

std::string classify_algebra(const CKSignature& sig) {
  const int n = sig.n();
  const auto& k = sig.kappa();
  std::vector<int> zeros;
  for (int m = 1; m <= n; ++m)
    if (k[m - 1] == 0.0) zeros.push_back(m);

  if (zeros.empty()) return pseudo_orthogonal_name(k);
  if (static_cast<int>(zeros.size()) == n) return "flag";

  // Maximal runs of nonzero coefficients between zeros.
  std::vector<std::vector<double>> blocks(1);
  for (double v : k) {
    if (v == 0.0) blocks.emplace_back();
    else blocks.back().push_back(v);
  }

  auto block_between = [&](int first, int last) {
    return std::vector<double>(k.begin() + (first - 1), k.begin() + last);
  };

  if (zeros.size() == 1) {
    if (zeros[0] == 1) return "i" + pseudo_orthogonal_name(block_between(2, n));
    if (zeros[0] == n) return "i" + pseudo_orthogonal_name(block_between(1, n - 1));
  }
  if (zeros.size() == 2) {
    if (zeros[0] == 1 && zeros[1] == 2) return "ii" + pseudo_orthogonal_name(block_between(3, n));
    if (zeros[0] == n - 1 && zeros[1] == n) return "ii" + pseudo_orthogonal_name(block_between(1, n - 2));
    if (zeros[0] == 1 && zeros[1] == n) return "ii" + pseudo_orthogonal_name(block_between(2, n - 1));
  }

  int semisimple_dim = 0;
  std::vector<std::string> names;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    const int size = static_cast<int>(block.size()) + 1;
    semisimple_dim += size * (size - 1) / 2;
    names.push_back(pseudo_orthogonal_name(block));
  }
  std::string out = "t" + std::to_string(sig.dimension() - semisimple_dim) + "⊙(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "⊕" : "") + names[i];
  return out + ")";
}

std::vector<CKSignature> sign_sweep(int n) {
  if (n < 1) throw std::invalid_argument("sign_sweep requires n >= 1");
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<CKSignature> out;
  out.reserve(total);
  for (int code = 0; code < total; ++code) {
    std::vector<double> k(n);
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) k[i] = static_cast<double>(c % 3 - 1);
    out.emplace_back(std::move(k));
  }
  return out;
}

}  // namespace ckgeo
