#include "qtough/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace qtough {

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Matrix a = Matrix::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : set_members(g.neighbors(u))) a(u, v) = 1.0;
    return a;
}

Matrix signless_laplacian(const Graph& g) {
    Matrix q = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) q(v, v) = g.degree(v);
    return q;
}

namespace {

void require_square_symmetric(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigensolver: matrix not square");
    if (m.rows() == 0) throw std::invalid_argument("eigensolver: empty matrix");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eigensolver: matrix not symmetric");
}

void check_residual(const Matrix& m, double value, const Vector& vec, double tol) {
    const double norm = std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
    const double residual = (m * vec - value * vec).cwiseAbs().maxCoeff();
    if (!(residual <= tol * norm))
        throw SolveError("eigensolver: residual " + std::to_string(residual) +
                         " exceeds tolerance");
}

}  // namespace

EigenPair largest_eigenpair(const Matrix& m, double tol) {
    require_square_symmetric(m);
    if (!(tol > 0)) throw std::invalid_argument("eigensolver: tolerance must be positive");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw SolveError("eigensolver: iteration did not converge");
    const Eigen::Index last = m.rows() - 1;
    EigenPair pair{solver.eigenvalues()(last), solver.eigenvectors().col(last)};
    check_residual(m, pair.value, pair.vector, tol);
    return pair;
}

double largest_eigenvalue(const Matrix& m, double tol) { return largest_eigenpair(m, tol).value; }

Vector symmetric_spectrum(const Matrix& m, double tol) {
    require_square_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw SolveError("eigensolver: iteration did not converge");
    const Eigen::Index last = m.rows() - 1;
    check_residual(m, solver.eigenvalues()(last), solver.eigenvectors().col(last), tol);
    return solver.eigenvalues();
}

double q_index(const Graph& g, double tol) {
    if (g.order() < 1) throw std::invalid_argument("q_index: graph must have a vertex");
    return largest_eigenvalue(signless_laplacian(g), tol);
}

double adjacency_spectral_radius(const Graph& g, double tol) {
    if (g.order() < 1)
        throw std::invalid_argument("spectral radius: graph must have a vertex");
    return largest_eigenvalue(adjacency_matrix(g), tol);
}

Partition::Partition(int ground_size, std::vector<std::vector<int>> classes)
    : ground_size_(ground_size), classes_(std::move(classes)) {
    if (ground_size < 0) throw std::invalid_argument("partition: negative ground size");
    std::vector<bool> seen(static_cast<std::size_t>(ground_size), false);
    int covered = 0;
    for (const auto& cls : classes_) {
        if (cls.empty()) throw std::invalid_argument("partition: empty class");
        for (int v : cls) {
            if (v < 0 || v >= ground_size)
                throw std::invalid_argument("partition: index out of range");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("partition: classes are not disjoint");
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != ground_size)
        throw std::invalid_argument("partition: classes do not cover the ground set");
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> classes;
    classes.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) classes.push_back({v});
    return Partition(n, std::move(classes));
}

Partition Partition::contiguous(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> classes;
    int next = 0;
    for (int size : sizes) {
        if (size < 0) throw std::invalid_argument("partition: negative class size");
        if (size == 0) continue;
        std::vector<int> cls(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) cls[static_cast<std::size_t>(i)] = next + i;
        next += size;
        classes.push_back(std::move(cls));
    }
    return Partition(next, std::move(classes));
}

QuotientMatrix quotient_matrix(const Matrix& m, const Partition& p) {
    if (m.rows() != m.cols() || m.rows() != p.ground_size())
        throw std::invalid_argument("quotient: partition does not match the matrix order");
    const int r = p.class_count();
    QuotientMatrix qm;
    qm.entries = Matrix::Zero(r, r);
    qm.class_sizes.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const auto& ci = p.classes()[static_cast<std::size_t>(i)];
        qm.class_sizes[static_cast<std::size_t>(i)] = static_cast<int>(ci.size());
        for (int j = 0; j < r; ++j) {
            const auto& cj = p.classes()[static_cast<std::size_t>(j)];
            double sum = 0.0;
            for (int u : ci)
                for (int v : cj) sum += m(u, v);
            qm.entries(i, j) = sum / static_cast<double>(ci.size());
        }
    }
    return qm;
}

bool is_equitable(const Matrix& m, const Partition& p, double tol) {
    if (m.rows() != m.cols() || m.rows() != p.ground_size())
        throw std::invalid_argument("is_equitable: partition does not match the matrix order");
    const int r = p.class_count();
    for (int i = 0; i < r; ++i) {
        const auto& ci = p.classes()[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) {
            const auto& cj = p.classes()[static_cast<std::size_t>(j)];
            double total = 0.0;
            std::vector<double> rows;
            rows.reserve(ci.size());
            for (int u : ci) {
                double row = 0.0;
                for (int v : cj) row += m(u, v);
                rows.push_back(row);
                total += row;
            }
            const double avg = total / static_cast<double>(ci.size());
            for (double row : rows)
                if (std::abs(row - avg) > tol) return false;
        }
    }
    return true;
}

namespace {

// Strong connectivity of the positive-entry digraph.
bool is_irreducible(const Matrix& b) {
    const int r = static_cast<int>(b.rows());
    if (r == 1) return true;
    auto reachable = [&](bool transpose) {
        std::vector<bool> seen(static_cast<std::size_t>(r), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < r; ++v) {
                const double w = transpose ? b(v, u) : b(u, v);
                if (w > 0.0 && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == r;
    };
    return reachable(false) && reachable(true);
}

// For a Z-matrix A = xI - B (B >= 0), positivity of all leading principal
// minors is equivalent to x > spectral_radius(B). Gaussian elimination
// without pivoting surfaces the minors as pivots.
bool shift_dominates(const Matrix& b, double x) {
    const int r = static_cast<int>(b.rows());
    Matrix a = x * Matrix::Identity(r, r) - b;
    for (int k = 0; k < r; ++k) {
        if (!(a(k, k) > 0.0)) return false;
        for (int i = k + 1; i < r; ++i) {
            const double f = a(i, k) / a(k, k);
            a.row(i).tail(r - k) -= f * a.row(k).tail(r - k);
        }
    }
    return true;
}

}  // namespace

double perron_root(const QuotientMatrix& qm, double tol) {
    const Matrix& b = qm.entries;
    if (b.rows() != b.cols() || b.rows() == 0)
        throw std::invalid_argument("perron_root: matrix must be square and nonempty");
    if (!(tol > 0)) throw std::invalid_argument("perron_root: tolerance must be positive");
    if ((b.array() < 0.0).any())
        throw std::invalid_argument("perron_root: matrix has negative entries");
    if (!is_irreducible(b)) throw std::invalid_argument("perron_root: matrix is reducible");

    const Vector row_sums = b.rowwise().sum();
    double lo = row_sums.minCoeff();
    double hi = row_sums.maxCoeff();
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    // Perron root is strictly inside (lo, hi) for non-constant row sums, and
    // shift_dominates is monotone in x with values false at lo, true at hi.
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (shift_dominates(b, mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

Vector quotient_spectrum(const QuotientMatrix& qm) {
    const int r = qm.order();
    if (r == 0) throw std::invalid_argument("quotient_spectrum: empty matrix");
    Matrix sym(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            sym(i, j) = qm.entries(i, j) *
                        std::sqrt(static_cast<double>(qm.class_sizes[static_cast<std::size_t>(i)]) /
                                  static_cast<double>(qm.class_sizes[static_cast<std::size_t>(j)]));
    const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
    if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw std::invalid_argument(
            "quotient_spectrum: quotient is not a symmetric-source quotient");
    sym = 0.5 * (sym + sym.transpose().eval());
    return symmetric_spectrum(sym);
}

double das_feng_yu_bound(const Graph& g) {
    if (g.order() <= 1)
        throw std::invalid_argument("das_feng_yu_bound: order must be at least 2");
    const double n = g.order();
    return 2.0 * g.edge_count() / (n - 1.0) + n - 2.0;
}

}  // namespace qtough
