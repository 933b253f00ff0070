#pragma once

#include <memory>
#include <mutex>

#include "disrupt/graph.hpp"

namespace disrupt {

// M = (I + L)^{-1} for a fixed graph, plus the two quadratic forms that turn
// the objectives into functions of the innate opinions:
//   disagreement  D(s) = s^T A_D s,  A_D = M L M = M - M^2
//   polarization  P(s) = s^T A_P s,  A_P = M C M = M^2 - (1/n) 1 1^T
// where C = I - (1/n) 1 1^T. Both identities follow from M (I + L) = I and
// M 1 = 1. The forms are built on first use; the object is safe to share
// read-only across threads.
class InfluenceMatrix {
 public:
  explicit InfluenceMatrix(const WeightedGraph& g);

  Index size() const { return static_cast<Index>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Scalar operator()(Index i, Index j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  auto column(Index j) const { return m_.col(static_cast<Eigen::Index>(j)); }

  const Matrix& disagreement_form() const;
  const Matrix& polarization_form() const;

 private:
  struct Forms {
    std::once_flag once;
    Matrix disagreement;
    Matrix polarization;
  };
  void build_forms() const;

  Matrix m_;
  std::unique_ptr<Forms> forms_;
};

InfluenceMatrix influence(const WeightedGraph& g);

// Cholesky factorization of I + L for repeated equilibrium solves when the
// explicit inverse is not needed.
class EquilibriumSolver {
 public:
  explicit EquilibriumSolver(const WeightedGraph& g);
  OpinionVector solve(const OpinionVector& s) const;
  Index size() const { return n_; }

 private:
  Index n_;
  Eigen::LLT<Matrix> llt_;
};

// z = M s. Throws std::invalid_argument on length mismatch.
OpinionVector equilibrium(const InfluenceMatrix& inf, const OpinionVector& s);

struct DynamicsResult {
  OpinionVector z;
  Index steps = 0;
  bool converged = false;
};

inline Index default_max_steps(Index n) { return 10 * n + 1000; }
inline constexpr Scalar kDefaultDynamicsTol = 1e-10;

// Synchronous Friedkin-Johnsen updates
//   z_i <- (s_i + sum_j w_ij z_j) / (1 + sum_j w_ij)
// from z = s until the max-norm change of one step drops below tol. When
// max_steps is hit first the last iterate is returned with converged = false.
DynamicsResult iterate_dynamics(const WeightedGraph& g, const OpinionVector& s,
                                Scalar tol = kDefaultDynamicsTol,
                                Index max_steps = 0);

// Equilibrium after shifting innate opinion j by delta: z + delta * M[:, j].
// s is the innate vector z was computed from; s_j + delta must stay in [0, 1].
OpinionVector apply_single_change(const InfluenceMatrix& inf,
                                  const OpinionVector& s,
                                  const OpinionVector& z, Index j,
                                  Scalar delta);

}  // namespace disrupt
