#pragma once

#include "delcoh/algebra/matrix.hpp"
#include "delcoh/report.hpp"
#include "delcoh/simplicial/cochain_complex.hpp"
#include "delcoh/simplicial/complex.hpp"
#include "delcoh/simplicial/fundamental.hpp"

#include <string>
#include <utility>

namespace delcoh::cone {

using simplicial::Coefficients;
using simplicial::CochainComplex;
using simplicial::SimplicialMap;

// Mapping cone of f^# : C^*(X) -> C^*(Y) for f : Y -> X.
// Cone^n = C^n(X) ⊕ C^{n-1}(Y),  D(a, b) = (δa, f^# a - δb).
// Cone cohomology is relative cohomology H^n(X, Y, f).
class ConeComplex {
public:
    explicit ConeComplex(SimplicialMap f);

    const SimplicialMap& map() const { return f_; }
    const CochainComplex& x() const { return x_; }
    const CochainComplex& y() const { return y_; }
    const CochainComplex& complex() const { return cone_; }
    // f^# : C^n(X) -> C^n(Y)
    const IntMatrix& pullback(int n) const;

    std::size_t dim(int n) const { return cone_.dim(n); }
    // Split a degree-n cone vector into its X part (degree n) and Y part (degree n-1).
    template <typename V>
    std::pair<V, V> split(const V& v, int n) const {
        std::size_t a = x_.dim(n);
        return {V(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a)),
                V(v.begin() + static_cast<std::ptrdiff_t>(a), v.end())};
    }
    template <typename V>
    V join(const V& a, const V& b) const {
        V out(a);
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }

    // Relative chain (C, C') as a vector in the dual chain group of degree p.
    IntVector chain_vector(const simplicial::RelativeCycle& z) const;
    // Z-basis of the relative p-cycles Z_p(f), one per column.
    IntMatrix relative_cycle_basis(int p) const;

    // FNV-1a hash of the map, for reports.
    std::string fixture_hash() const;

private:
    SimplicialMap f_;
    CochainComplex x_, y_, cone_;
    std::vector<IntMatrix> pullbacks_;
    IntMatrix empty_;
};

IntMatrix cone_differential(const ConeComplex& cone, int n);

// H^n(X, Y, f; coeff). Throws std::out_of_range for n < 0.
simplicial::CohomologyGroup relative_cohomology(const SimplicialMap& f, int n, Coefficients coeff);

// H^{n-1}(Y) -> H^n(X, Y, f), e ↦ [(0, e)], in Smith-adapted generators
// (rows: generators of H^n(X,Y), columns: generators of H^{n-1}(Y)). For Q
// only the free generators are used.
IntMatrix connecting_hom(const SimplicialMap& f, int n, Coefficients coeff = Coefficients::Z);

// Subquotient node ker(d_out) / im(d_in) with a label, used by the
// finitely generated exactness check.
struct FGNode {
    std::string label;
    IntMatrix d_in;
    IntMatrix d_out;
};

// Exactness of prev -A-> node -B-> next, where A and B are cochain-level
// integer matrices. Over Z: composite zero on all generators, kernel and
// image have equal invariants, and every kernel generator has a preimage.
// Over Q: composite zero and rank(kernel) = rank(image).
CheckReport check_fg_exactness(const FGNode& prev, const FGNode& node, const FGNode& next, const IntMatrix& A,
                               const IntMatrix& B, Coefficients coeff = Coefficients::Z);

// Long exact sequence ... -> H^n(X,Y) -> H^n(X) -> H^n(Y) -> H^{n+1}(X,Y) -> ...
// checked at every node with degree in [lo, hi]. R/Z coefficients are checked
// on the dual integral homology sequence.
VerificationReport verify_les(const SimplicialMap& f, Coefficients coeff, int lo, int hi);
VerificationReport verify_les(const SimplicialMap& f, Coefficients coeff);

}  // namespace delcoh::cone
