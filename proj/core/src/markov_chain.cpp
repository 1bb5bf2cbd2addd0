#include "bandit_lab/markov_chain.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "bandit_lab/error.hpp"

namespace bandit_lab {
namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix support(const Eigen::MatrixXd& matrix) {
  const auto n = static_cast<std::size_t>(matrix.rows());
  BoolMatrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > 0.0;
  return out;
}

BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) out[i][j] = true;
  return out;
}

void require_square(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    throw Error(ErrorCode::InvalidArgument, "transition matrix must be square and non-empty");
}

}  // namespace

bool is_irreducible(const Eigen::MatrixXd& matrix) {
  require_square(matrix);
  // Warshall transitive closure.
  BoolMatrix reach = support(matrix);
  const std::size_t n = reach.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !reach[i][j]) return false;
  return true;
}

std::size_t chain_period(const Eigen::MatrixXd& matrix) {
  require_square(matrix);
  // Every simple cycle has length <= n, so the gcd of closed-walk lengths up
  // to n already equals the gcd over all cycles.
  const BoolMatrix step = support(matrix);
  const std::size_t n = step.size();
  BoolMatrix walk = step;
  std::size_t period = 0;
  for (std::size_t length = 1; length <= n; ++length) {
    for (std::size_t i = 0; i < n; ++i) {
      if (walk[i][i]) {
        period = std::gcd(period, length);
        break;
      }
    }
    if (period == 1) return 1;
    if (length < n) walk = boolean_product(walk, step);
  }
  return period;
}

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  require_square(entries_);
  if (static_cast<std::size_t>(entries_.rows()) > kMaxStates)
    throw Error(ErrorCode::InvalidArgument,
                "chain has " + std::to_string(entries_.rows()) + " states; the limit is " +
                    std::to_string(kMaxStates));
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const double p = entries_(i, j);
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        std::ostringstream msg;
        msg << "entry (" << i << ", " << j << ") = " << p << " is not a probability";
        throw Error(ErrorCode::NotStochastic, msg.str());
      }
    }
    const double sum = entries_.row(i).sum();
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "row " << i << " sums to " << sum;
      throw Error(ErrorCode::NotStochastic, msg.str());
    }
  }
  if (!is_irreducible(entries_))
    throw Error(ErrorCode::Reducible, "chain has more than one communicating class");
  if (const std::size_t period = chain_period(entries_); period != 1)
    throw Error(ErrorCode::Periodic, "chain has period " + std::to_string(period));
}

TransitionMatrix validate_chain(const Eigen::MatrixXd& entries) {
  return TransitionMatrix(entries);
}

Eigen::VectorXd stationary_distribution(const TransitionMatrix& transition) {
  const Eigen::MatrixXd& p = transition.matrix();
  const Eigen::Index n = p.rows();
  Eigen::MatrixXd system = p.transpose() - Eigen::MatrixXd::Identity(n, n);
  system.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularSystem, "stationary system is singular");
  Eigen::VectorXd pi = lu.solve(rhs);

  const double residual = (pi.transpose() * p - pi.transpose()).cwiseAbs().maxCoeff();
  if (!(residual <= kStationaryResidualTolerance) || !(pi.minCoeff() > 0.0))
    throw Error(ErrorCode::SingularSystem, "stationary solve is numerically degenerate");
  return pi;
}

Eigen::MatrixXd multiplicative_symmetrization(const TransitionMatrix& transition,
                                              const Eigen::VectorXd& stationary) {
  const Eigen::MatrixXd& p = transition.matrix();
  const Eigen::Index n = p.rows();
  Eigen::MatrixXd adjoint(n, n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      adjoint(x, y) = stationary(y) * p(y, x) / stationary(x);
  Eigen::MatrixXd symmetrized = adjoint * p;
  if (!is_irreducible(symmetrized))
    throw Error(ErrorCode::IrreducibilityViolated,
                "multiplicative symmetrization is reducible");
  return symmetrized;
}

Eigen::VectorXd conjugated_spectrum(const Eigen::MatrixXd& matrix,
                                    const Eigen::VectorXd& stationary) {
  const Eigen::VectorXd root = stationary.cwiseSqrt();
  const Eigen::VectorXd inv_root = root.cwiseInverse();
  const Eigen::MatrixXd conjugate = root.asDiagonal() * matrix * inv_root.asDiagonal();
  const double asymmetry = (conjugate - conjugate.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > kSymmetryTolerance)
    throw Error(ErrorCode::ComplexSpectrum,
                "matrix is not self-adjoint on l2(pi); use the symmetrized convention");
  const Eigen::MatrixXd symmetric = 0.5 * (conjugate + conjugate.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric,
                                                              Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::SingularSystem, "symmetric eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

double eigenvalue_gap(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& stationary) {
  const Eigen::VectorXd spectrum = conjugated_spectrum(matrix, stationary);
  if (spectrum.size() == 1) return 1.0;
  return 1.0 - spectrum(1);
}

Eigen::MatrixXd mean_hitting_times(const TransitionMatrix& transition) {
  const Eigen::MatrixXd& p = transition.matrix();
  const Eigen::Index n = p.rows();
  Eigen::MatrixXd hitting = Eigen::MatrixXd::Zero(n, n);
  if (n == 1) return hitting;

  for (Eigen::Index target = 0; target < n; ++target) {
    // Unknowns are M(x, target) for x != target:
    //   M(x) - sum_{z != target} p(x, z) M(z) = 1.
    std::vector<Eigen::Index> others;
    for (Eigen::Index x = 0; x < n; ++x)
      if (x != target) others.push_back(x);
    const auto m = static_cast<Eigen::Index>(others.size());
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) system(a, b) -= p(others[a], others[b]);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);

    const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    if (!lu.isInvertible())
      throw Error(ErrorCode::SingularSystem, "hitting-time system is singular");
    const Eigen::VectorXd solution = lu.solve(ones);
    const double residual = (system * solution - ones).cwiseAbs().maxCoeff();
    if (!(residual <= kHittingResidualTolerance * std::max(1.0, solution.cwiseAbs().maxCoeff())))
      throw Error(ErrorCode::SingularSystem, "hitting-time solve is numerically degenerate");
    for (Eigen::Index a = 0; a < m; ++a) hitting(others[a], target) = solution(a);
  }
  return hitting;
}

}  // namespace bandit_lab
