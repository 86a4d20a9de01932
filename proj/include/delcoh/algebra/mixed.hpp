#pragma once

#include "delcoh/algebra/matrix.hpp"
#include "delcoh/algebra/random.hpp"
#include "delcoh/algebra/rational.hpp"
#include "delcoh/algebra/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delcoh {

struct MixedSolveResult {
    std::optional<RatVector> solution;
    std::string obstruction;  // set when there is no solution
    explicit operator bool() const { return solution.has_value(); }
};

// Solves { y in Q^n : A y = b,  M y - h in Z^k } exactly.
//
// With y = y0 + N s (N a kernel basis of A) the congruence becomes G s = w + z,
// G = M N, w = h - M y0, z in Z^k. Such z exist iff P z = -P w has an integer
// solution, where the rows of P span the left null space of G.
//
// The homogeneous solution set is a group: a Q-subspace plus a lattice. Both
// generating sets are exposed; integer unknowns are expressed by congruence rows.
class MixedSolver {
public:
    MixedSolver(const RatMatrix& A, const RatMatrix& M);

    std::size_t unknowns() const { return n_; }
    MixedSolveResult solve(const RatVector& b, const RatVector& h) const;
    // Homogeneous problem (b = 0, h = 0) is always solvable; this checks membership.
    bool satisfies(const RatVector& y, const RatVector& b, const RatVector& h) const;

    const std::vector<RatVector>& subspace_generators() const { return subspace_gens_; }
    const std::vector<RatVector>& lattice_generators() const { return lattice_gens_; }
    // Random element of the homogeneous solution group.
    RatVector sample(Rng& rng) const;

private:
    std::size_t n_;
    RatMatrix A_, M_, N_, G_;
    RationalSolver a_solver_;
    RationalSolver g_solver_;
    IntMatrix P_;
    std::optional<IntegerSolver> p_solver_;
    std::vector<RatVector> subspace_gens_;
    std::vector<RatVector> lattice_gens_;
};

// Convenience wrapper for a single problem.
MixedSolveResult solve_mixed(const RatMatrix& A, const RatVector& b, const RatMatrix& M, const RatVector& h);

}  // namespace delcoh
