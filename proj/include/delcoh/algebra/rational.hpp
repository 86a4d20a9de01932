#pragma once

#include "delcoh/algebra/matrix.hpp"

#include <optional>
#include <vector>

namespace delcoh {

// Reduced row echelon form R = E * A over Q.
struct RowEchelon {
    RatMatrix R;
    RatMatrix E;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(const RatMatrix& A);

std::size_t rank(const RatMatrix& A);

// Columns form a basis of { x : A x = 0 }; each column is a primitive integer vector.
RatMatrix nullspace_basis(const RatMatrix& A);

// Reusable exact solver for A x = b over Q.
class RationalSolver {
public:
    explicit RationalSolver(const RatMatrix& A);
    // Particular solution with free variables set to zero, or nullopt.
    std::optional<RatVector> solve(const RatVector& b) const;
    const RowEchelon& echelon() const { return ech_; }

private:
    std::size_t rows_, cols_;
    RowEchelon ech_;
};

std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b);

// Scales v by a positive rational so that it becomes a primitive integer vector.
RatVector primitive_integer_multiple(const RatVector& v);

}  // namespace delcoh
