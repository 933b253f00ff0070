#include "disrupt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace disrupt {
namespace {

Matrix identity_plus_laplacian(const WeightedGraph& g) {
  Matrix a = laplacian(g);
  a.diagonal().array() += 1.0;
  return a;
}

void require_length(const OpinionVector& s, Index n, const char* what) {
  if (static_cast<Index>(s.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": vector length " +
                                std::to_string(s.size()) + " != node count " +
                                std::to_string(n));
  }
}

}  // namespace

InfluenceMatrix::InfluenceMatrix(const WeightedGraph& g)
    : forms_(std::make_unique<Forms>()) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::LLT<Matrix> llt(identity_plus_laplacian(g));
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("influence: Cholesky factorization of I + L failed");
  }
  m_ = llt.solve(Matrix::Identity(n, n));
  if (!m_.allFinite()) {
    throw std::runtime_error("influence: non-finite entries in (I + L)^{-1}");
  }
  // The solve leaves O(eps) asymmetry; M is symmetric in exact arithmetic.
  m_ = (0.5 * (m_ + m_.transpose())).eval();
}

void InfluenceMatrix::build_forms() const {
  std::call_once(forms_->once, [this] {
    const auto n = m_.rows();
    Matrix squared = m_ * m_;
    squared = (0.5 * (squared + squared.transpose())).eval();
    forms_->disagreement = m_ - squared;
    forms_->polarization = squared;
    if (n > 0) {
      forms_->polarization.array() -= 1.0 / static_cast<double>(n);
    }
  });
}

const Matrix& InfluenceMatrix::disagreement_form() const {
  build_forms();
  return forms_->disagreement;
}

const Matrix& InfluenceMatrix::polarization_form() const {
  build_forms();
  return forms_->polarization;
}

InfluenceMatrix influence(const WeightedGraph& g) { return InfluenceMatrix(g); }

EquilibriumSolver::EquilibriumSolver(const WeightedGraph& g)
    : n_(g.num_nodes()), llt_(identity_plus_laplacian(g)) {
  if (llt_.info() != Eigen::Success) {
    throw std::runtime_error("EquilibriumSolver: factorization of I + L failed");
  }
}

OpinionVector EquilibriumSolver::solve(const OpinionVector& s) const {
  require_length(s, n_, "EquilibriumSolver::solve");
  return llt_.solve(s);
}

OpinionVector equilibrium(const InfluenceMatrix& inf, const OpinionVector& s) {
  require_length(s, inf.size(), "equilibrium");
  return inf.matrix() * s;
}

DynamicsResult iterate_dynamics(const WeightedGraph& g, const OpinionVector& s,
                                Scalar tol, Index max_steps) {
  require_length(s, g.num_nodes(), "iterate_dynamics");
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_dynamics: tol must be > 0");
  if (max_steps == 0) max_steps = default_max_steps(g.num_nodes());

  const auto n = static_cast<Index>(s.size());
  DynamicsResult result;
  result.z = s;
  OpinionVector next(s.size());
  while (result.steps < max_steps) {
    Scalar change = 0.0;
    for (Index i = 0; i < n; ++i) {
      Scalar acc = s[static_cast<Eigen::Index>(i)];
      for (const Neighbor& nb : g.neighbors(i)) {
        acc += nb.w * result.z[static_cast<Eigen::Index>(nb.node)];
      }
      const Scalar zi = acc / (1.0 + g.weighted_degree(i));
      change = std::max(change,
                        std::abs(zi - result.z[static_cast<Eigen::Index>(i)]));
      next[static_cast<Eigen::Index>(i)] = zi;
    }
    result.z.swap(next);
    ++result.steps;
    if (change < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

OpinionVector apply_single_change(const InfluenceMatrix& inf,
                                  const OpinionVector& s,
                                  const OpinionVector& z, Index j,
                                  Scalar delta) {
  require_length(s, inf.size(), "apply_single_change");
  require_length(z, inf.size(), "apply_single_change");
  if (j >= inf.size()) {
    throw std::invalid_argument("apply_single_change: node " + std::to_string(j) +
                                " out of range");
  }
  const Scalar shifted = s[static_cast<Eigen::Index>(j)] + delta;
  if (!(shifted >= 0.0 && shifted <= 1.0)) {
    throw std::invalid_argument("apply_single_change: s_j + delta = " +
                                std::to_string(shifted) + " outside [0, 1]");
  }
  if (delta == 0.0) return z;
  return z + delta * inf.column(j);
}

}  // namespace disrupt
