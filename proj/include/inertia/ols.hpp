#pragma once

#include "inertia/features.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace inertia {

struct LsqSolution {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd residuals;     // y - X beta, one per fitted row
    Eigen::Index rank = 0;
    std::vector<std::string> column_names;

    Eigen::VectorXd fitted(const Eigen::MatrixXd& X) const { return X * coefficients; }
};

/// Minimizes ||y - X beta||^2 via a rank-revealing orthogonal decomposition.
/// Rank-deficient systems yield the minimum-norm solution; singular values
/// below 1e-10 times the largest are treated as zero.
/// Throws EmptyDesignError on zero rows and NumericError on non-finite input.
LsqSolution solve_lsq(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                      std::vector<std::string> column_names = {});

LsqSolution solve_lsq(const DesignMatrix& dm);

} // namespace inertia
