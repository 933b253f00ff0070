#pragma once

#include <string>
#include <string_view>

#include "disrupt/dynamics.hpp"

namespace disrupt {

enum class ObjectiveKind { Disagreement, Polarization, WeightedSum };

std::string_view to_string(ObjectiveKind kind);
ObjectiveKind parse_objective(std::string_view name);

inline constexpr Scalar kDefaultLambda = 1.0;

// An objective bound to a graph: WeightedSum is P + lambda * (n / m) * D, and
// the n / m factor is fixed by bind().
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::Disagreement;
  Scalar lambda = kDefaultLambda;
  Scalar scale = 0.0;  // n / m; only meaningful for WeightedSum

  static ObjectiveSpec bind(ObjectiveKind kind, const WeightedGraph& g,
                            Scalar lambda = kDefaultLambda);

  // Weights on (P, D) in the conical combination.
  Scalar polarization_coef() const;
  Scalar disagreement_coef() const;
};

// Sum over edges of w_uv (z_u - z_v)^2, each unordered edge once.
Scalar disagreement(const WeightedGraph& g, const OpinionVector& z);

// Sum over nodes of (z_v - mean)^2.
Scalar polarization(const OpinionVector& z);

Scalar weighted_sum(const WeightedGraph& g, const OpinionVector& z,
                    Scalar lambda = kDefaultLambda);

Scalar evaluate(const WeightedGraph& g, const OpinionVector& z,
                const ObjectiveSpec& spec);

// f(s) through the equilibrium z = M s.
Scalar objective_of_innate(const InfluenceMatrix& inf, const WeightedGraph& g,
                           const OpinionVector& s, const ObjectiveSpec& spec);

// f(s) = s^T A s with A = cP * A_P + cD * A_D, evaluated without forming A.
// Used by the adversary for O(1) evaluation of a single-coordinate change:
//   f(s + delta e_j) = f(s) + delta * (2 (A s)_j + delta * A_jj)
class QuadraticObjective {
 public:
  QuadraticObjective(const InfluenceMatrix& inf, const ObjectiveSpec& spec);

  Scalar value(const OpinionVector& s) const;
  Vector gradient(const OpinionVector& s) const;  // A s
  Scalar diagonal(Index j) const;
  Scalar entry(Index i, Index j) const;
  // Gain of moving s_j by delta given gradient g = A s.
  Scalar gain(const Vector& g, Index j, Scalar delta) const {
    return delta * (2.0 * g[static_cast<Eigen::Index>(j)] + delta * diagonal(j));
  }
  // g += delta * A[:, j]
  void update_gradient(Vector& g, Index j, Scalar delta) const;

 private:
  const Matrix* polarization_ = nullptr;
  const Matrix* disagreement_ = nullptr;
  Scalar p_coef_;
  Scalar d_coef_;
};

}  // namespace disrupt
