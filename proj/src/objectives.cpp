#include "disrupt/objectives.hpp"

#include <stdexcept>
#include <string>

namespace disrupt {

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::Disagreement: return "disagreement";
    case ObjectiveKind::Polarization: return "polarization";
    case ObjectiveKind::WeightedSum: return "weighted-sum";
  }
  return "unknown";
}

ObjectiveKind parse_objective(std::string_view name) {
  if (name == "disagreement" || name == "D") return ObjectiveKind::Disagreement;
  if (name == "polarization" || name == "P") return ObjectiveKind::Polarization;
  if (name == "weighted-sum" || name == "WS") return ObjectiveKind::WeightedSum;
  throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

ObjectiveSpec ObjectiveSpec::bind(ObjectiveKind kind, const WeightedGraph& g,
                                  Scalar lambda) {
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("objective: lambda must be >= 0");
  }
  ObjectiveSpec spec;
  spec.kind = kind;
  spec.lambda = lambda;
  if (kind == ObjectiveKind::WeightedSum) {
    if (g.num_edges() == 0) {
      throw std::invalid_argument("weighted-sum objective needs m > 0");
    }
    spec.scale = static_cast<Scalar>(g.num_nodes()) /
                 static_cast<Scalar>(g.num_edges());
  }
  return spec;
}

Scalar ObjectiveSpec::polarization_coef() const {
  return kind == ObjectiveKind::Disagreement ? 0.0 : 1.0;
}

Scalar ObjectiveSpec::disagreement_coef() const {
  switch (kind) {
    case ObjectiveKind::Disagreement: return 1.0;
    case ObjectiveKind::Polarization: return 0.0;
    case ObjectiveKind::WeightedSum: return lambda * scale;
  }
  return 0.0;
}

Scalar disagreement(const WeightedGraph& g, const OpinionVector& z) {
  if (static_cast<Index>(z.size()) != g.num_nodes()) {
    throw std::invalid_argument("disagreement: vector length " +
                                std::to_string(z.size()) + " != node count " +
                                std::to_string(g.num_nodes()));
  }
  Scalar total = 0.0;
  for (const Edge& e : g.edges()) {
    const Scalar diff = z[static_cast<Eigen::Index>(e.u)] -
                        z[static_cast<Eigen::Index>(e.v)];
    total += e.w * diff * diff;
  }
  return total;
}

Scalar polarization(const OpinionVector& z) {
  if (z.size() == 0) return 0.0;
  const Scalar mean = z.mean();
  return (z.array() - mean).square().sum();
}

Scalar weighted_sum(const WeightedGraph& g, const OpinionVector& z,
                    Scalar lambda) {
  return evaluate(g, z, ObjectiveSpec::bind(ObjectiveKind::WeightedSum, g, lambda));
}

Scalar evaluate(const WeightedGraph& g, const OpinionVector& z,
                const ObjectiveSpec& spec) {
  switch (spec.kind) {
    case ObjectiveKind::Disagreement: return disagreement(g, z);
    case ObjectiveKind::Polarization: return polarization(z);
    case ObjectiveKind::WeightedSum:
      return polarization(z) + spec.lambda * spec.scale * disagreement(g, z);
  }
  return 0.0;
}

Scalar objective_of_innate(const InfluenceMatrix& inf, const WeightedGraph& g,
                           const OpinionVector& s, const ObjectiveSpec& spec) {
  return evaluate(g, equilibrium(inf, s), spec);
}

QuadraticObjective::QuadraticObjective(const InfluenceMatrix& inf,
                                       const ObjectiveSpec& spec)
    : p_coef_(spec.polarization_coef()), d_coef_(spec.disagreement_coef()) {
  if (p_coef_ != 0.0) polarization_ = &inf.polarization_form();
  if (d_coef_ != 0.0) disagreement_ = &inf.disagreement_form();
}

Vector QuadraticObjective::gradient(const OpinionVector& s) const {
  Vector g = Vector::Zero(s.size());
  if (polarization_) g.noalias() += p_coef_ * (*polarization_ * s);
  if (disagreement_) g.noalias() += d_coef_ * (*disagreement_ * s);
  return g;
}

Scalar QuadraticObjective::value(const OpinionVector& s) const {
  return s.dot(gradient(s));
}

Scalar QuadraticObjective::diagonal(Index j) const {
  const auto jj = static_cast<Eigen::Index>(j);
  Scalar d = 0.0;
  if (polarization_) d += p_coef_ * (*polarization_)(jj, jj);
  if (disagreement_) d += d_coef_ * (*disagreement_)(jj, jj);
  return d;
}

Scalar QuadraticObjective::entry(Index i, Index j) const {
  const auto ii = static_cast<Eigen::Index>(i);
  const auto jj = static_cast<Eigen::Index>(j);
  Scalar a = 0.0;
  if (polarization_) a += p_coef_ * (*polarization_)(ii, jj);
  if (disagreement_) a += d_coef_ * (*disagreement_)(ii, jj);
  return a;
}

void QuadraticObjective::update_gradient(Vector& g, Index j, Scalar delta) const {
  const auto jj = static_cast<Eigen::Index>(j);
  if (polarization_) g.noalias() += (delta * p_coef_) * polarization_->col(jj);
  if (disagreement_) g.noalias() += (delta * d_coef_) * disagreement_->col(jj);
}

}  // namespace disrupt
