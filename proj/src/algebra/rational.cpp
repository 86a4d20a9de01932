#include "delcoh/algebra/rational.hpp"

#include <stdexcept>

namespace delcoh {

RowEchelon row_reduce(const RatMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    RowEchelon out{A, RatMatrix::identity(m), {}};
    RatMatrix& R = out.R;
    RatMatrix& E = out.E;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && R(p, c) == 0) ++p;
        if (p == m) continue;
        R.swap_rows(r, p);
        E.swap_rows(r, p);
        Rational inv = 1 / R(r, c);
        for (std::size_t j = 0; j < n; ++j)
            if (R(r, j) != 0) R(r, j) *= inv;
        for (std::size_t j = 0; j < m; ++j)
            if (E(r, j) != 0) E(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || R(i, c) == 0) continue;
            Rational k = -R(i, c);
            R.add_row(i, r, k);
            E.add_row(i, r, k);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const RatMatrix& A) { return row_reduce(A).rank(); }

RatVector primitive_integer_multiple(const RatVector& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    Integer g = 0;
    for (const auto& q : v) {
        Rational scaled = q * l;
        Integer num = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) return v;
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * l;
        out[i] = Rational(Integer(scaled.get_num() / g));
    }
    return out;
}

RatMatrix nullspace_basis(const RatMatrix& A) {
    RowEchelon ech = row_reduce(A);
    const std::size_t n = A.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.R(i, f);
        basis.push_back(primitive_integer_multiple(v));
    }
    RatMatrix N(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) N.set_col(j, basis[j]);
    return N;
}

RationalSolver::RationalSolver(const RatMatrix& A) : rows_(A.rows()), cols_(A.cols()), ech_(row_reduce(A)) {}

std::optional<RatVector> RationalSolver::solve(const RatVector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve_rational: right-hand side has wrong length");
    RatVector eb = ech_.E * b;
    for (std::size_t i = ech_.rank(); i < rows_; ++i)
        if (eb[i] != 0) return std::nullopt;
    RatVector x(cols_);
    for (std::size_t i = 0; i < ech_.rank(); ++i) x[ech_.pivots[i]] = eb[i];
    return x;
}

std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b) { return RationalSolver(A).solve(b); }

}  // namespace delcoh
