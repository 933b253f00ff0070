#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace disrupt {

using Index = std::size_t;
using Scalar = double;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Innate (s, s') or equilibrium (z, z') opinions, one entry per node in [0, 1].
using OpinionVector = Eigen::VectorXd;

// Throws std::invalid_argument unless every entry lies in [0, 1].
void require_opinion_range(const OpinionVector& s, const char* what);

}  // namespace disrupt
