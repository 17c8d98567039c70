#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "qtough/graph.hpp"

namespace qtough {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigensolve did not meet its residual contract.
class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr double kDefaultEquitableTol = 1e-9;
inline constexpr double kDefaultPerronTol = 1e-12;

Matrix adjacency_matrix(const Graph& g);

/// Q(G) = D(G) + A(G); every row sums to twice the vertex degree.
Matrix signless_laplacian(const Graph& g);

struct EigenPair {
    double value;
    Vector vector;
};

/// Largest eigenvalue of a symmetric matrix together with a unit eigenvector.
/// The residual max-norm |Mv - lv| must not exceed tol * max(1, |M|_inf),
/// otherwise a SolveError is thrown.
EigenPair largest_eigenpair(const Matrix& m, double tol = kDefaultEigenTol);
double largest_eigenvalue(const Matrix& m, double tol = kDefaultEigenTol);

/// All eigenvalues of a symmetric matrix, ascending.
Vector symmetric_spectrum(const Matrix& m, double tol = kDefaultEigenTol);

double q_index(const Graph& g, double tol = kDefaultEigenTol);
double adjacency_spectral_radius(const Graph& g, double tol = kDefaultEigenTol);

/// Ordered partition of {0,...,n-1} into disjoint nonempty classes.
class Partition {
public:
    Partition(int ground_size, std::vector<std::vector<int>> classes);

    static Partition singletons(int n);

    /// Consecutive blocks of the given sizes (zero sizes are skipped).
    static Partition contiguous(const std::vector<int>& sizes);

    int ground_size() const { return ground_size_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }

private:
    int ground_size_;
    std::vector<std::vector<int>> classes_;
};

struct QuotientMatrix {
    Matrix entries;
    std::vector<int> class_sizes;

    int order() const { return static_cast<int>(entries.rows()); }
};

/// Entry (i,j) is the average row sum of block (i,j) of m.
QuotientMatrix quotient_matrix(const Matrix& m, const Partition& p);

/// True iff within every block each row sum deviates from the block average
/// by at most tol.
bool is_equitable(const Matrix& m, const Partition& p, double tol = kDefaultEquitableTol);

/// Spectral radius of a nonnegative irreducible matrix, bracketed by
/// [min row sum, max row sum] and refined by bisection to absolute tol.
double perron_root(const QuotientMatrix& qm, double tol = kDefaultPerronTol);

/// All eigenvalues of a quotient of a symmetric matrix, recovered via the
/// class-size symmetrization D^{1/2} B D^{-1/2}; ascending.
Vector quotient_spectrum(const QuotientMatrix& qm);

/// Edge-count upper bound 2e(G)/(n-1) + n - 2 on the Q-index; needs n >= 2.
double das_feng_yu_bound(const Graph& g);

}  // namespace qtough
