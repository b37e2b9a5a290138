#include "inertia/ols.hpp"

#include "inertia/errors.hpp"

namespace inertia {

LsqSolution solve_lsq(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                      std::vector<std::string> column_names) {
    if (X.rows() == 0)
        throw EmptyDesignError("cannot solve a zero-row system");
    if (X.rows() != y.size())
        throw NumericError("design and target row counts differ");
    if (!X.allFinite() || !y.allFinite())
        throw NumericError("non-finite entries in the least-squares system");

    // Complete orthogonal decomposition: rank-revealing and minimum-norm on
    // rank deficiency.
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(X.rows(), X.cols());
    cod.setThreshold(1e-10);
    cod.compute(X);

    LsqSolution sol;
    sol.coefficients = cod.solve(y);
    sol.residuals = y - X * sol.coefficients;
    sol.rank = cod.rank();
    sol.column_names = std::move(column_names);
    if (sol.column_names.empty())
        for (Eigen::Index j = 0; j < X.cols(); ++j)
            sol.column_names.push_back("x" + std::to_string(j));
    return sol;
}

LsqSolution solve_lsq(const DesignMatrix& dm) {
    return solve_lsq(dm.X, dm.y, dm.column_names);
}

} // namespace inertia
