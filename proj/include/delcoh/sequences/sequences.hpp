#pragma once

#include "delcoh/characters/relative.hpp"
#include "delcoh/report.hpp"
#include "delcoh/sequences/group_model.hpp"

#include <cstdint>
#include <string>

namespace delcoh::sequences {

using characters::RelativeCharacterSpace;
using simplicial::SimplicialMap;

enum class SequenceTag { LES1, LES2, LES3, LES4, Diagram };

std::string to_string(SequenceTag t);
SequenceTag parse_sequence_tag(const std::string& text);

struct VerifyOptions {
    std::size_t samples = 20;
    std::uint64_t seed = 0;
};

// Group models for a map f: Y -> X in degree p (p >= 1). Element layouts:
//   cone characters  [T_X; T_Y; c_X; c_Y] (the relative representative),
//   Ω-type nodes     [ρ; w] with w a relative representative witnessing ρ.
class ModelFactory {
public:
    ModelFactory(const RelativeCharacterSpace& space);

    const RelativeCharacterSpace& space() const { return s_; }
    int degree() const { return s_.degree(); }

    GroupModel hat_x(int n) const;   // Ĥ^n(X)
    GroupModel hat_y(int n) const;   // Ĥ^n(Y)
    GroupModel flat_x(int n) const;  // H^n(X; R/Z)
    GroupModel flat_y(int n) const;
    GroupModel flat_rel(int n) const;
    GroupModel int_x(int n) const;  // H^n(X; Z)
    GroupModel int_y(int n) const;
    GroupModel int_rel(int n) const;

    GroupModel type_II() const;
    GroupModel type_I() const;
    GroupModel type_IIprime() const;
    GroupModel type_III() const;    // modulo the full action of Ĥ^{p-1}(Y)
    GroupModel type_III_D() const;  // modulo topologically trivial Y-characters only
    GroupModel hbar() const;        // numerator / denominator
    GroupModel y_mod_flat_x() const;  // Ĥ^{p-1}(Y) / f^* H^{p-1}(X; R/Z)
    GroupModel omega_f() const;
    GroupModel omega_f_mod_int() const;

    // Maps; n is the degree of the source.
    Hom restrict_hat(int n) const;      // Ĥ^n(X) -> Ĥ^n(Y)
    Hom bockstein_hat() const;          // Ĥ^{p-1}(Y) -> II
    Hom bockstein_flat(int n) const;    // H^n(Y; R/Z) -> H^{n+1}(X,Y; R/Z), or -> I when n = p-1
    Hom project_flat_rel(int n) const;  // H^n(X,Y; R/Z) -> H^n(X; R/Z)
    Hom restrict_flat(int n) const;     // H^n(X; R/Z) -> H^n(Y; R/Z)
    Hom project_II() const;             // II (or I, II', III_D, H̄) -> Ĥ^p(X)
    Hom chern_y_of_x() const;           // Ĥ^p(X) -> H^{p+1}(Y; Z), f^# c
    Hom chern_rel_of_y() const;         // Ĥ^p(Y) -> H^{p+2}(X,Y; Z), c ↦ (0, c)
    Hom int_connecting(int n) const;    // H^n(Y; Z) -> H^{n+1}(X,Y; Z)
    Hom int_project(int n) const;       // H^n(X,Y; Z) -> H^n(X; Z)
    Hom int_restrict(int n) const;      // H^n(X; Z) -> H^n(Y; Z)
    Hom bockstein_x_to_int_y() const;   // H^{p-1}(X; R/Z) -> H^p(Y; Z), f^# c
    Hom int_y_into_II() const;          // H^p(Y; Z) -> III_D, e ↦ (0, 0, 0, e)
    Hom restrict_flat_to_hat() const;   // H^{p-1}(X; R/Z) -> Ĥ^{p-1}(Y)
    Hom identity(std::size_t n, const std::string& label) const;
    Hom rho_map() const;  // II -> Ω-type node, w ↦ (ρ(w), w)

    std::size_t rel_dim() const;

private:
    const RelativeCharacterSpace& s_;
    RatMatrix rho_rows() const;
};

// Exactness of the mixed long exact sequences at every interior node, with
// character nodes checked element-wise on generators and seeded samples.
VerificationReport verify_mixed_les(const SimplicialMap& f, int p, SequenceTag tag, const VerifyOptions& opt);
VerificationReport verify_les4(const SimplicialMap& f, int p, const VerifyOptions& opt);
// Three short exact rows, the vertical maps and the four squares.
VerificationReport verify_diagram(const SimplicialMap& f, int p, const VerifyOptions& opt);
VerificationReport verify(const SimplicialMap& f, int p, SequenceTag tag, const VerifyOptions& opt);

enum class SampleKind { AbsoluteX, AbsoluteY, I, II, IIprime };
std::string to_string(SampleKind k);
SampleKind parse_sample_kind(const std::string& text);

struct SampledCharacter {
    SampleKind kind;
    characters::CharacterRep absolute;        // for AbsoluteX / AbsoluteY
    characters::RelCharacterRep relative;     // for I / II / II'
    std::string to_json() const;
};

// Pseudo-random valid representative with small coefficients; deterministic per seed.
SampledCharacter sample_character(const SimplicialMap& f, int p, SampleKind kind, std::uint64_t seed);

}  // namespace delcoh::sequences
