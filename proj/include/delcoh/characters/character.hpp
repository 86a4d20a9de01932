#pragma once

#include "delcoh/algebra/matrix.hpp"
#include "delcoh/simplicial/cochain_complex.hpp"
#include "delcoh/simplicial/complex.hpp"

#include <functional>
#include <optional>
#include <string>

namespace delcoh::characters {

using simplicial::CochainComplex;

// Degree-p differential character on a cochain complex K, represented by a
// rational p-cochain T and an integral (p+1)-cocycle c (its Chern data).
// Curvature ω = δT + c; holonomy on an integral p-cycle z is <T, z> mod 1.
// (T, c) and (T + δS + u, c - δu) represent the same character for rational S
// and integral u.
struct CharacterRep {
    int p = 0;
    RatVector T;
    IntVector c;
};

// Why a character is or is not trivial. Trivial: x = gauge(0, S, u).
// Nontrivial: nonzero curvature on a (p+1)-simplex, or nonintegral holonomy
// on a column of the p-cycle basis.
struct TrivialityCertificate {
    bool trivial = false;
    RatVector S;
    IntVector u;
    std::optional<std::size_t> curvature_simplex;
    std::optional<std::size_t> cycle;
    Rational value;  // the curvature or the holonomy in the nontrivial case
};

class CharacterSpace {
public:
    // `describe(n, i)` names the i-th basis element in degree n for error messages.
    using Describer = std::function<std::string(int, std::size_t)>;

    CharacterSpace(CochainComplex K, int p, Describer describe = {});

    int degree() const { return p_; }
    const CochainComplex& complex() const { return K_; }
    std::size_t t_size() const { return K_.dim(p_); }
    std::size_t c_size() const { return K_.dim(p_ + 1); }

    // Throws ValidationError on shape mismatch or when δc ≠ 0 (naming the simplex).
    CharacterRep make(RatVector T, IntVector c) const;
    RatVector curvature(const CharacterRep& x) const;
    bool is_flat(const CharacterRep& x) const { return is_zero(curvature(x)); }
    // Validates that z is an integral p-cycle; result in [0, 1).
    Rational holonomy(const CharacterRep& x, const IntVector& z) const;
    // Same curvature and integral T-difference on a basis of p-cycles.
    bool equal(const CharacterRep& x, const CharacterRep& y) const;
    bool is_trivial(const CharacterRep& x) const { return equal(x, zero()); }
    // Constructive version of is_trivial; every witness is re-checked.
    TrivialityCertificate certify_triviality(const CharacterRep& x) const;

    CharacterRep zero() const;
    CharacterRep add(const CharacterRep& x, const CharacterRep& y) const;
    CharacterRep sub(const CharacterRep& x, const CharacterRep& y) const;
    CharacterRep negate(const CharacterRep& x) const;
    CharacterRep gauge(const CharacterRep& x, const RatVector& S, const IntVector& u) const;

    // Z-basis of the p-cycles, one per column.
    const IntMatrix& cycle_basis() const { return cycles_; }
    std::string describe(int n, std::size_t i) const;

private:
    CochainComplex K_;
    int p_;
    Describer describe_;
    IntMatrix cycles_;
};

// Characters of a simplicial complex; errors name simplices.
CharacterSpace character_space(const simplicial::SimplicialComplex& K, int p);

CharacterRep make_character(const simplicial::SimplicialComplex& K, int p, RatVector T, IntVector c);
bool characters_equal(const simplicial::SimplicialComplex& K, const CharacterRep& x, const CharacterRep& y);
Rational holonomy(const simplicial::SimplicialComplex& K, const CharacterRep& x, const simplicial::Chain& z);

// Holonomy as "a/b" in [0, 1); zero prints as "0/1".
std::string holonomy_string(const Rational& h);

}  // namespace delcoh::characters
