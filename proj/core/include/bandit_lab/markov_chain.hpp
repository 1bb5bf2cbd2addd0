#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace bandit_lab {

inline constexpr std::size_t kMaxStates = 64;
inline constexpr double kStochasticTolerance = 1e-12;
inline constexpr double kStationaryResidualTolerance = 1e-10;
inline constexpr double kHittingResidualTolerance = 1e-9;
inline constexpr double kSymmetryTolerance = 1e-9;

// Row-stochastic, irreducible, aperiodic transition matrix. The constructor
// validates and throws bandit_lab::Error (NotStochastic, Reducible, Periodic,
// InvalidArgument) on violation, so every instance is a valid chain.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(Eigen::MatrixXd entries);

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
  double operator()(std::size_t from, std::size_t to) const {
    return entries_(static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to));
  }

 private:
  Eigen::MatrixXd entries_;
};

TransitionMatrix validate_chain(const Eigen::MatrixXd& entries);

// Graph-level checks on the support of a nonnegative square matrix.
bool is_irreducible(const Eigen::MatrixXd& matrix);

// gcd of the lengths k <= n for which some state can return to itself in
// exactly k steps. Equals the period for an irreducible chain.
std::size_t chain_period(const Eigen::MatrixXd& matrix);

// Unique pi with pi P = pi, sum(pi) = 1. Solves (P^T - I) pi = 0 with the
// last equation replaced by the normalization row. Throws SingularSystem.
Eigen::VectorXd stationary_distribution(const TransitionMatrix& transition);

// P_hat = P' P with P'_{xy} = pi_y p_{yx} / pi_x (time reversal under pi).
// Throws IrreducibilityViolated when P_hat is reducible.
Eigen::MatrixXd multiplicative_symmetrization(const TransitionMatrix& transition,
                                              const Eigen::VectorXd& stationary);

// 1 - lambda_2 of a row-stochastic matrix that is self-adjoint on l2(pi).
// Computed from the symmetric conjugate D^{1/2} M D^{-1/2}; throws
// ComplexSpectrum when that conjugate is not symmetric within 1e-9.
double eigenvalue_gap(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& stationary);

// Eigenvalues of the symmetric conjugate, descending. Same preconditions as
// eigenvalue_gap.
Eigen::VectorXd conjugated_spectrum(const Eigen::MatrixXd& matrix,
                                    const Eigen::VectorXd& stationary);

// M(x, y): expected slots to first reach y from x, with M(y, y) = 0.
Eigen::MatrixXd mean_hitting_times(const TransitionMatrix& transition);

}  // namespace bandit_lab
