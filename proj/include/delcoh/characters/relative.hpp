#pragma once

#include "delcoh/algebra/block_system.hpp"
#include "delcoh/characters/character.hpp"
#include "delcoh/cone/cone.hpp"
#include "delcoh/simplicial/fundamental.hpp"

#include <memory>
#include <optional>
#include <string>

namespace delcoh::characters {

using simplicial::RelativeCycle;
using simplicial::SimplicialMap;

// I: geometric trivialization (ρ = 0). II: strong topological trivialization.
// II': ρ closed with integral periods. III / IV tags mark representatives of
// orbits and cosets; the data is the same as for II.
enum class RelType { I, II, IIprime, IIIOrbit, IVCoset };

std::string to_string(RelType t);
RelType parse_rel_type(const std::string& text);

// Relative character of degree p for f: Y -> X:
// T_X ∈ C^p(X;Q), T_Y ∈ C^{p-1}(Y;Q), c_X ∈ C^{p+1}(X;Z), c_Y ∈ C^p(Y;Z)
// with δc_X = 0 and f^#c_X = δc_Y. Then
//   ω = δT_X + c_X,   ρ = f^#T_X - δT_Y + c_Y,
// and the holonomy on a relative cycle (C, C') is <T_X, C> + <T_Y, C'> mod 1.
struct RelCharacterRep {
    int p = 0;
    RatVector T_X, T_Y;
    IntVector c_X, c_Y;
    RelType type = RelType::II;
};

enum class Trivialization { Geometric, StrongTopological };

struct TrivializationKind {
    Trivialization kind = Trivialization::StrongTopological;
    RatVector rho;
    bool rho_integral = false;  // closed with integral periods on Y
};

struct TypeIIIComparison {
    bool same = false;
    std::optional<CharacterRep> witness;  // (ξ, η) on Y with r2 ~ r1 + β(ξ, η)
};

struct TypeIVComparison {
    bool same = false;
    std::optional<RatVector> rho_tilde;  // r1 - r2 ~ φ_f(ρ̃)
};

// All relative-character operations for a fixed map and degree. Precomputes
// the exact solvers it needs; immutable after construction.
class RelativeCharacterSpace {
public:
    RelativeCharacterSpace(SimplicialMap f, int p);

    int degree() const { return p_; }
    const cone::ConeComplex& cone() const { return cone_; }
    const SimplicialMap& map() const { return cone_.map(); }
    const CharacterSpace& cone_characters() const { return cone_chars_; }
    const CharacterSpace& x_characters() const { return x_chars_; }
    const CharacterSpace& y_characters() const { return y_chars_; }
    const CharacterSpace& x_lower() const { return x_lower_; }  // degree p-1 on X
    const CharacterSpace& y_lower() const { return y_lower_; }  // degree p-1 on Y

    // Validates shapes, the cone cocycle condition and the claimed type.
    RelCharacterRep make_relative(RatVector T_X, RatVector T_Y, IntVector c_X, IntVector c_Y,
                                  RelType claimed = RelType::II) const;
    RelCharacterRep zero(RelType type = RelType::I) const;

    RatVector omega(const RelCharacterRep& r) const;
    RatVector rho(const RelCharacterRep& r) const;
    Rational rel_holonomy(const RelCharacterRep& r, const RelativeCycle& z) const;
    bool equal_II(const RelCharacterRep& a, const RelCharacterRep& b) const;

    TrivializationKind trivialization_kind(const RelCharacterRep& r) const;
    // Closed with integral periods on a Z-basis of p-cycles of Y.
    bool is_integral_form_on_y(const RatVector& rho) const;
    // Pre: δρ = f^#ω. True iff <ω, C> + <ρ, C'> ∈ Z for every relative (p+1)-cycle.
    bool in_lambda_omega(const RatVector& omega, const RatVector& rho) const;

    RelCharacterRep embed_I_to_II(const RelCharacterRep& r) const;
    // β(ξ): the relative character (0, -T_ξ, 0, c_ξ) of a degree p-1 character on Y.
    RelCharacterRep bockstein(const CharacterRep& xi) const;
    // r + β(ξ); holonomy changes by -ξ(C').
    RelCharacterRep act_on_II(const CharacterRep& xi, const RelCharacterRep& r) const;
    TypeIIIComparison same_type_III(const RelCharacterRep& a, const RelCharacterRep& b) const;

    // Pre: δρ̃ = 0 and ρ̃ has integral periods on X. Returns (ρ̃, 0, 0, 0) of type II'.
    RelCharacterRep phi_f(const RatVector& rho_tilde) const;
    // Pre: both of type II'. Same class in II' / φ_f(Ω_int(X)).
    TypeIVComparison same_type_IV(const RelCharacterRep& a, const RelCharacterRep& b) const;
    // The pullback of the X-part to Y is trivial.
    bool hbar_numerator_member(const RelCharacterRep& r) const;
    // Pre: numerator member. If r is equivalent to the Bockstein of the
    // restriction of a degree p-1 character (s, e) on X, returns ρ̃ = δs + e.
    std::optional<RatVector> hbar_denominator_member(const RelCharacterRep& r) const;

    // A type II rep with the given ρ, when ρ lies in Ω_f(Y).
    std::optional<RelCharacterRep> complete_to_type_II(const RatVector& rho) const;

    // Conversions between relative reps and cone characters of degree p.
    CharacterRep to_cone(const RelCharacterRep& r) const;
    RelCharacterRep from_cone(const CharacterRep& x, RelType type = RelType::II) const;
    CharacterRep project_to_x(const RelCharacterRep& r) const;
    // f^* of a character on X of the given degree (p or p-1).
    CharacterRep restrict_to_y(const CharacterRep& x) const;
    bool is_integral_form_on_x(const RatVector& rho_tilde) const;

    std::string describe_x(int n, std::size_t i) const;
    std::string describe_y(int n, std::size_t i) const;

private:
    void check_type(const RelCharacterRep& r, RelType t) const;

    int p_;
    cone::ConeComplex cone_;
    CharacterSpace cone_chars_, x_chars_, y_chars_, x_lower_, y_lower_;
    IntMatrix y_cycles_, x_cycles_, rel_cycles_next_;

    struct Solver {
        BlockSystem sys;
        std::unique_ptr<MixedSolver> solver;
        std::size_t eq_T = 0, eq_c = 0;
        std::size_t var_a = 0, var_b = 0;
    };
    Solver type_iii_, type_iv_, denominator_, completion_;
};

}  // namespace delcoh::characters
