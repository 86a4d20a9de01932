#pragma once

#include "delcoh/algebra/matrix.hpp"
#include "delcoh/algebra/mixed.hpp"

#include <utility>
#include <vector>

namespace delcoh {

// Builds the (A, M) pair of a MixedSolver from named blocks of unknowns.
// Integral blocks get identity congruence rows automatically.
//
//   BlockSystem sys;
//   auto t = sys.unknown(3);
//   auto u = sys.unknown(2, true);
//   auto eq = sys.equations(4, {{t, Mt}, {u, Mu}});
//   MixedSolver solver = sys.solver();
//   auto y = solver.solve(sys.rhs({{eq, b}}), sys.congruence_rhs({}));
class BlockSystem {
public:
    using Term = std::pair<std::size_t, RatMatrix>;

    std::size_t unknown(std::size_t size, bool integral = false);
    // Adds `rows` equations sum_k terms[k].second * y[terms[k].first] = rhs; returns the group id.
    std::size_t equations(std::size_t rows, const std::vector<Term>& terms);
    // Adds `rows` congruences sum_k ... ≡ h (mod 1); returns the group id.
    std::size_t congruences(std::size_t rows, const std::vector<Term>& terms);

    std::size_t unknown_count() const { return offsets_.empty() ? 0 : offsets_.back() + sizes_.back(); }
    RatMatrix A() const;
    RatMatrix M() const;
    MixedSolver solver() const { return MixedSolver(A(), M()); }

    // Right-hand sides; groups not mentioned are zero.
    RatVector rhs(const std::vector<std::pair<std::size_t, RatVector>>& parts) const;
    RatVector congruence_rhs(const std::vector<std::pair<std::size_t, RatVector>>& parts) const;

    RatVector block(const RatVector& y, std::size_t id) const;
    RatVector assemble(const std::vector<std::pair<std::size_t, RatVector>>& parts) const;

private:
    struct Group {
        std::size_t rows;
        std::vector<Term> terms;
    };
    RatMatrix build(const std::vector<Group>& groups, bool with_integrality) const;
    RatVector stack(const std::vector<Group>& groups, const std::vector<std::pair<std::size_t, RatVector>>& parts,
                    bool with_integrality) const;

    std::vector<std::size_t> offsets_, sizes_;
    std::vector<bool> integral_;
    std::vector<Group> eqs_, congs_;
};

RatMatrix rat(const IntMatrix& m);
// Rectangular identity-like selector of shape rows x cols placing I_k at (r0, c0).
RatMatrix embed(std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0, std::size_t k, const Rational& s = 1);

}  // namespace delcoh
