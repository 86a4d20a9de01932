#pragma once

#include "delcoh/algebra/matrix.hpp"

#include <optional>
#include <string>

namespace delcoh {

// U * A * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ... nonnegative,
// nonzero entries first. U_inv is kept so cokernel generators can be read off.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix U_inv;
    IntMatrix V;
    IntMatrix D;
    std::size_t rank = 0;

    // The min(rows, cols) diagonal entries of D.
    IntVector diagonal() const;
};

// Deterministic pivoting: smallest nonzero |entry| in the active block,
// ties broken by lowest row then lowest column.
SmithDecomposition smith_normal_form(const IntMatrix& A);

// Evidence that A x = b has no integer solution: in Smith coordinates
// (U b)_index must be divisible by `divisor` (zero when the row is outside the image).
struct NoIntegerSolution {
    std::size_t index = 0;
    Integer value;
    Integer divisor;
    std::string describe() const;
};

struct IntegerSolveResult {
    std::optional<IntVector> solution;
    std::optional<NoIntegerSolution> certificate;
    explicit operator bool() const { return solution.has_value(); }
};

// Reusable integer solver for a fixed matrix.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntMatrix& A);
    IntegerSolveResult solve(const IntVector& b) const;
    const SmithDecomposition& smith() const { return snf_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    SmithDecomposition snf_;
};

IntegerSolveResult solve_integer(const IntMatrix& A, const IntVector& b);

// Columns form a Z-basis of { x in Z^n : A x = 0 }.
IntMatrix integer_kernel_basis(const IntMatrix& A);

// True iff <t, column> is an integer for every column of L.
bool integral_on_sublattice(const RatVector& t, const IntMatrix& L);

}  // namespace delcoh
