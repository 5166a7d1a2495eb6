#include "tlab/geometry.hpp"

#include <Eigen/Dense>

namespace tlab {

double sym_min_eigenvalue(const std::vector<double>& values, int n) {
    if (n == 1) return values[0];
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = values[static_cast<size_t>(i) * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace tlab
