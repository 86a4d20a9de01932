#include "delcoh/algebra/mixed.hpp"

#include <stdexcept>

namespace delcoh {

namespace {

IntMatrix integer_rows(const RatMatrix& columns) {
    IntMatrix P(columns.cols(), columns.rows());
    for (std::size_t j = 0; j < columns.cols(); ++j)
        for (std::size_t i = 0; i < columns.rows(); ++i) P(j, i) = columns(i, j).get_num();
    return P;
}

}  // namespace

MixedSolver::MixedSolver(const RatMatrix& A, const RatMatrix& M)
    : n_(A.cols()),
      A_(A),
      M_(M),
      N_(nullspace_basis(A)),
      G_(M * N_),
      a_solver_(A),
      g_solver_(G_) {
    if (M.cols() != n_) throw std::invalid_argument("MixedSolver: A and M disagree on the number of unknowns");
    const std::size_t k = M.rows();

    // nullspace_basis returns primitive integer columns.
    P_ = integer_rows(nullspace_basis(G_.transpose()));
    IntMatrix lattice = P_.rows() == 0 ? IntMatrix::identity(k) : integer_kernel_basis(P_);
    if (P_.rows() > 0) p_solver_.emplace(P_);

    for (std::size_t j = 0; j < lattice.cols(); ++j) {
        auto s = g_solver_.solve(to_rational(lattice.col(j)));
        if (!s) throw std::logic_error("MixedSolver: lattice vector outside the image of G");
        lattice_gens_.push_back(N_ * *s);
    }
    RatMatrix kg = nullspace_basis(G_);
    for (std::size_t j = 0; j < kg.cols(); ++j) subspace_gens_.push_back(N_ * kg.col(j));
}

MixedSolveResult MixedSolver::solve(const RatVector& b, const RatVector& h) const {
    if (b.size() != A_.rows() || h.size() != M_.rows())
        throw std::invalid_argument("MixedSolver::solve: right-hand side has wrong length");
    auto y0 = a_solver_.solve(b);
    if (!y0) return {std::nullopt, "linear equations are inconsistent"};
    RatVector w = sub(h, M_ * *y0);
    IntVector z(M_.rows());
    if (p_solver_) {
        RatVector rhs = scale(to_rational(P_) * w, -1);
        for (std::size_t i = 0; i < rhs.size(); ++i)
            if (!is_integer(rhs[i]))
                return {std::nullopt, "congruences force a non-integral value (" + to_string(rhs[i]) +
                                          ") on combination " + std::to_string(i)};
        auto zs = p_solver_->solve(to_integer(rhs));
        if (!zs) return {std::nullopt, "congruences have no common integer solution: " + zs.certificate->describe()};
        z = *zs.solution;
    }
    RatVector v = add(w, to_rational(z));
    auto s = g_solver_.solve(v);
    if (!s) throw std::logic_error("MixedSolver: congruence right-hand side outside the image of G");
    RatVector y = add(*y0, N_ * *s);
    if (!satisfies(y, b, h)) throw std::logic_error("MixedSolver: solution failed verification");
    return {y, {}};
}

bool MixedSolver::satisfies(const RatVector& y, const RatVector& b, const RatVector& h) const {
    if (y.size() != n_) return false;
    if (A_ * y != b) return false;
    return is_integral(sub(M_ * y, h));
}

RatVector MixedSolver::sample(Rng& rng) const {
    RatVector y(n_);
    for (const auto& g : subspace_gens_) {
        Rational a = rng.small_rational();
        if (a != 0) y = add(y, scale(g, a));
    }
    for (const auto& g : lattice_gens_) {
        Integer b = rng.small_integer();
        if (b != 0) y = add(y, scale(g, Rational(b)));
    }
    return y;
}

MixedSolveResult solve_mixed(const RatMatrix& A, const RatVector& b, const RatMatrix& M, const RatVector& h) {
    return MixedSolver(A, M).solve(b, h);
}

}  // namespace delcoh
