#include "delcoh/characters/character.hpp"

#include "delcoh/algebra/block_system.hpp"
#include "delcoh/algebra/smith.hpp"
#include "delcoh/errors.hpp"

#include <stdexcept>

namespace delcoh::characters {

CharacterSpace::CharacterSpace(CochainComplex K, int p, Describer describe)
    : K_(std::move(K)), p_(p), describe_(std::move(describe)), cycles_(K_.cycle_basis(p)) {
    if (p < 0) throw ValidationError("character degree must be nonnegative");
}

std::string CharacterSpace::describe(int n, std::size_t i) const {
    if (describe_) return describe_(n, i);
    return "basis element " + std::to_string(i) + " in degree " + std::to_string(n);
}

CharacterRep CharacterSpace::make(RatVector T, IntVector c) const {
    if (T.size() != t_size())
        throw ValidationError("T needs " + std::to_string(t_size()) + " values, got " + std::to_string(T.size()));
    if (c.size() != c_size())
        throw ValidationError("c needs " + std::to_string(c_size()) + " values, got " + std::to_string(c.size()));
    IntVector dc = K_.coboundary(p_ + 1) * c;
    for (std::size_t i = 0; i < dc.size(); ++i)
        if (dc[i] != 0) throw ValidationError("c is not a cocycle: δc ≠ 0 on " + describe(p_ + 2, i));
    return CharacterRep{p_, std::move(T), std::move(c)};
}

RatVector CharacterSpace::curvature(const CharacterRep& x) const {
    return delcoh::add(K_.coboundary(p_) * x.T, to_rational(x.c));
}

Rational CharacterSpace::holonomy(const CharacterRep& x, const IntVector& z) const {
    if (z.size() != t_size()) throw ValidationError("cycle has the wrong number of coefficients");
    IntVector b = K_.boundary(p_) * z;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) throw PreconditionError("chain is not a cycle: boundary is nonzero on " + describe(p_ - 1, i));
    return frac(dot(x.T, z));
}

bool CharacterSpace::equal(const CharacterRep& x, const CharacterRep& y) const {
    if (curvature(x) != curvature(y)) return false;
    return integral_on_sublattice(delcoh::sub(x.T, y.T), cycles_);
}

TrivialityCertificate CharacterSpace::certify_triviality(const CharacterRep& x) const {
    TrivialityCertificate out;
    RatVector om = curvature(x);
    for (std::size_t i = 0; i < om.size(); ++i)
        if (om[i] != 0) {
            out.curvature_simplex = i;
            out.value = om[i];
            return out;
        }
    for (std::size_t j = 0; j < cycles_.cols(); ++j) {
        Rational h = frac(dot(x.T, cycles_.col(j)));
        if (h != 0) {
            out.cycle = j;
            out.value = h;
            return out;
        }
    }
    // T = δS + u, c = -δu
    BlockSystem sys;
    auto S = sys.unknown(p_ >= 1 ? K_.dim(p_ - 1) : 0);
    auto u = sys.unknown(t_size(), true);
    auto eq_T = sys.equations(t_size(), {{S, rat(K_.coboundary(p_ - 1))}, {u, RatMatrix::identity(t_size())}});
    auto eq_c = sys.equations(c_size(), {{u, rat(K_.coboundary(p_))}});
    auto res = sys.solver().solve(sys.rhs({{eq_T, x.T}, {eq_c, scale(to_rational(x.c), -1)}}), sys.congruence_rhs({}));
    if (!res) throw std::logic_error("flat character with integral holonomy has no gauge witness");
    out.S = sys.block(*res.solution, S);
    out.u = to_integer(sys.block(*res.solution, u));
    CharacterRep g = gauge(zero(), out.S, out.u);
    if (g.T != x.T || g.c != x.c) throw std::logic_error("gauge witness failed verification");
    out.trivial = true;
    return out;
}

CharacterRep CharacterSpace::zero() const { return CharacterRep{p_, RatVector(t_size()), IntVector(c_size())}; }

CharacterRep CharacterSpace::add(const CharacterRep& x, const CharacterRep& y) const {
    return CharacterRep{p_, delcoh::add(x.T, y.T), delcoh::add(x.c, y.c)};
}

CharacterRep CharacterSpace::sub(const CharacterRep& x, const CharacterRep& y) const {
    return CharacterRep{p_, delcoh::sub(x.T, y.T), delcoh::sub(x.c, y.c)};
}

CharacterRep CharacterSpace::negate(const CharacterRep& x) const {
    return CharacterRep{p_, scale(x.T, -1), delcoh::negate(x.c)};
}

CharacterRep CharacterSpace::gauge(const CharacterRep& x, const RatVector& S, const IntVector& u) const {
    RatVector T = delcoh::add(delcoh::add(x.T, K_.coboundary(p_ - 1) * S), to_rational(u));
    IntVector c = delcoh::sub(x.c, K_.coboundary(p_) * u);
    return CharacterRep{p_, std::move(T), std::move(c)};
}

CharacterSpace character_space(const simplicial::SimplicialComplex& K, int p) {
    auto shared = std::make_shared<const simplicial::SimplicialComplex>(K);
    return CharacterSpace(simplicial::cochain_complex(K), p, [shared](int n, std::size_t i) {
        return "simplex " + simplicial::to_string(shared->simplices(n).at(i));
    });
}

CharacterRep make_character(const simplicial::SimplicialComplex& K, int p, RatVector T, IntVector c) {
    return character_space(K, p).make(std::move(T), std::move(c));
}

bool characters_equal(const simplicial::SimplicialComplex& K, const CharacterRep& x, const CharacterRep& y) {
    if (x.p != y.p) throw ValidationError("characters have different degrees");
    return character_space(K, x.p).equal(x, y);
}

Rational holonomy(const simplicial::SimplicialComplex& K, const CharacterRep& x, const simplicial::Chain& z) {
    if (z.degree != x.p) throw ValidationError("cycle degree differs from character degree");
    return character_space(K, x.p).holonomy(x, z.coefficients);
}

std::string holonomy_string(const Rational& h) {
    Rational r = frac(h);
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace delcoh::characters
