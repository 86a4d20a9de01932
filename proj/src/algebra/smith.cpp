#include "delcoh/algebra/smith.hpp"

#include <stdexcept>

namespace delcoh {

namespace {

struct SmithState {
    IntMatrix D, U, U_inv, V;

    void swap_rows(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
        U_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        D.add_row(dst, src, k);
        U.add_row(dst, src, k);
        U_inv.add_col(src, dst, -k);
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        D.add_col(dst, src, k);
        V.add_col(dst, src, k);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
        for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, r) = -U_inv(i, r);
    }
};

}  // namespace

IntVector SmithDecomposition::diagonal() const {
    std::size_t k = std::min(D.rows(), D.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = D(i, i);
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    SmithState s{A, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& D = s.D;

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Global pivot for this step.
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D(i, j) == 0) continue;
                Integer a = abs(D(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = floor_div(D(i, t), D(t, t));
                s.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = floor_div(D(t, j), D(t, t));
                s.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Move the smallest remainder in row/column t to the pivot.
                Integer a = abs(D(t, t));
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D(i, t) != 0 && abs(D(i, t)) < a) {
                        a = abs(D(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(t, j) != 0 && abs(D(t, j)) < a) {
                        a = abs(D(t, j));
                        bi = t;
                        bj = j;
                    }
                s.swap_rows(t, bi);
                s.swap_cols(t, bj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    Integer r = D(i, j) % D(t, t);
                    if (r != 0) {
                        s.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
        if (D(t, t) < 0) s.negate_row(t);
    }
    return SmithDecomposition{std::move(s.U), std::move(s.U_inv), std::move(s.V), std::move(s.D), t};
}

std::string NoIntegerSolution::describe() const {
    if (divisor == 0)
        return "Smith row " + std::to_string(index) + " lies outside the image but carries " + value.get_str();
    return "Smith row " + std::to_string(index) + ": " + value.get_str() + " is not divisible by " + divisor.get_str();
}

IntegerSolver::IntegerSolver(const IntMatrix& A) : rows_(A.rows()), cols_(A.cols()), snf_(smith_normal_form(A)) {}

IntegerSolveResult IntegerSolver::solve(const IntVector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve_integer: right-hand side has wrong length");
    IntVector ub = snf_.U * b;
    IntVector y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < snf_.rank) {
            const Integer& d = snf_.D(i, i);
            if (ub[i] % d != 0) return {std::nullopt, NoIntegerSolution{i, ub[i], d}};
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return {std::nullopt, NoIntegerSolution{i, ub[i], 0}};
        }
    }
    return {snf_.V * y, std::nullopt};
}

IntegerSolveResult solve_integer(const IntMatrix& A, const IntVector& b) { return IntegerSolver(A).solve(b); }

IntMatrix integer_kernel_basis(const IntMatrix& A) {
    SmithDecomposition snf = smith_normal_form(A);
    std::size_t n = A.cols();
    return snf.V.block(0, snf.rank, n, n - snf.rank);
}

bool integral_on_sublattice(const RatVector& t, const IntMatrix& L) {
    if (t.size() != L.rows()) throw std::invalid_argument("integral_on_sublattice: dimension mismatch");
    for (std::size_t j = 0; j < L.cols(); ++j)
        if (!is_integer(dot(t, L.col(j)))) return false;
    return true;
}

}  // namespace delcoh
