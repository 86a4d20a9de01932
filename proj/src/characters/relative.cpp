#include "delcoh/characters/relative.hpp"

#include "delcoh/algebra/smith.hpp"
#include "delcoh/errors.hpp"

namespace delcoh::characters {

std::string to_string(RelType t) {
    switch (t) {
        case RelType::I: return "I";
        case RelType::II: return "II";
        case RelType::IIprime: return "II'";
        case RelType::IIIOrbit: return "III";
        case RelType::IVCoset: return "IV";
    }
    return "?";
}

RelType parse_rel_type(const std::string& text) {
    if (text == "I") return RelType::I;
    if (text == "II") return RelType::II;
    if (text == "II'" || text == "IIprime") return RelType::IIprime;
    if (text == "III") return RelType::IIIOrbit;
    if (text == "IV") return RelType::IVCoset;
    throw ValidationError("unknown relative type \"" + text + "\" (expected I, II, II', III or IV)");
}

namespace {

// f^# in degree n with the right shape even outside the stored range.
IntMatrix pullback(const cone::ConeComplex& cone, int n) {
    const IntMatrix& m = cone.pullback(n);
    if (m.rows() == cone.y().dim(n) && m.cols() == cone.x().dim(n)) return m;
    return IntMatrix(cone.y().dim(n), cone.x().dim(n));
}

// Places `block` into a zero matrix of shape rows x cols at (r0, 0), scaled by s.
RatMatrix placed(std::size_t rows, std::size_t cols, std::size_t r0, const IntMatrix& block, const Rational& s = 1) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) m(r0 + i, j) = s * Rational(block(i, j));
    return m;
}

RatMatrix identity(std::size_t n) { return RatMatrix::identity(n); }

RatMatrix neg(RatMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return m;
}

std::string simplex_name(const simplicial::SimplicialComplex& K, int n, std::size_t i) {
    return "simplex " + simplicial::to_string(K.simplices(n).at(i));
}

CharacterSpace::Describer namer(std::shared_ptr<const simplicial::SimplicialComplex> K, std::string suffix) {
    return [K = std::move(K), suffix = std::move(suffix)](int n, std::size_t i) { return simplex_name(*K, n, i) + suffix; };
}

}  // namespace

RelativeCharacterSpace::RelativeCharacterSpace(SimplicialMap f, int p)
    : p_(p),
      cone_(std::move(f)),
      cone_chars_(cone_.complex(), p,
                  [xs = cone_.map().target_ptr(), ys = cone_.map().source_ptr(), xc = cone_.x()](int n, std::size_t i) {
                      std::size_t a = xc.dim(n);
                      return i < a ? simplex_name(*xs, n, i) + " of X" : simplex_name(*ys, n - 1, i - a) + " of Y";
                  }),
      x_chars_(cone_.x(), p, namer(cone_.map().target_ptr(), " of X")),
      y_chars_(cone_.y(), p, namer(cone_.map().source_ptr(), " of Y")),
      x_lower_(cone_.x(), p >= 1 ? p - 1 : 0, namer(cone_.map().target_ptr(), " of X")),
      y_lower_(cone_.y(), p >= 1 ? p - 1 : 0, namer(cone_.map().source_ptr(), " of Y")) {
    if (p < 1) throw ValidationError("relative characters need degree p >= 1");
    const auto& X = cone_.x();
    const auto& Y = cone_.y();
    const auto& K = cone_.complex();
    y_cycles_ = Y.cycle_basis(p);
    x_cycles_ = X.cycle_basis(p);
    rel_cycles_next_ = K.cycle_basis(p + 1);

    const std::size_t kp = K.dim(p), kq = K.dim(p + 1), km = K.dim(p - 1);
    const std::size_t xp = X.dim(p), xq = X.dim(p + 1);
    const RatMatrix Dlow = rat(K.coboundary(p - 1));
    const RatMatrix Dp = rat(K.coboundary(p));

    // r_b = r_a + β(t, e) + gauge(S, u)
    {
        auto& s = type_iii_;
        s.var_a = s.sys.unknown(Y.dim(p - 1));
        s.var_b = s.sys.unknown(Y.dim(p), true);
        auto S = s.sys.unknown(km);
        auto u = s.sys.unknown(kp, true);
        s.sys.equations(Y.dim(p + 1), {{s.var_b, rat(Y.coboundary(p))}});
        s.eq_T = s.sys.equations(kp, {{s.var_a, embed(kp, Y.dim(p - 1), xp, 0, Y.dim(p - 1), -1)},
                                      {S, Dlow},
                                      {u, identity(kp)}});
        s.eq_c = s.sys.equations(kq, {{s.var_b, embed(kq, Y.dim(p), xq, 0, Y.dim(p), 1)}, {u, neg(Dp)}});
        s.solver = std::make_unique<MixedSolver>(s.sys.solver());
    }
    // r_a = r_b + φ_f(ρ̃) + gauge(S, u), δρ̃ = 0, ρ̃ integral on p-cycles of X
    {
        auto& s = type_iv_;
        s.var_a = s.sys.unknown(xp);
        auto S = s.sys.unknown(km);
        auto u = s.sys.unknown(kp, true);
        s.sys.equations(X.dim(p + 1), {{s.var_a, rat(X.coboundary(p))}});
        s.eq_T = s.sys.equations(kp, {{s.var_a, embed(kp, xp, 0, 0, xp, 1)}, {S, Dlow}, {u, identity(kp)}});
        s.eq_c = s.sys.equations(kq, {{u, neg(Dp)}});
        s.sys.congruences(x_cycles_.cols(), {{s.var_a, rat(x_cycles_.transpose())}});
        s.solver = std::make_unique<MixedSolver>(s.sys.solver());
    }
    // r = β(f^#s, f^#e) + gauge(S, u), δe = 0
    {
        auto& s = denominator_;
        s.var_a = s.sys.unknown(X.dim(p - 1));
        s.var_b = s.sys.unknown(xp, true);
        auto S = s.sys.unknown(km);
        auto u = s.sys.unknown(kp, true);
        s.sys.equations(xq, {{s.var_b, rat(X.coboundary(p))}});
        s.eq_T = s.sys.equations(kp, {{s.var_a, placed(kp, X.dim(p - 1), xp, pullback(cone_, p - 1), -1)},
                                      {S, Dlow},
                                      {u, identity(kp)}});
        s.eq_c = s.sys.equations(kq, {{s.var_b, placed(kq, xp, xq, pullback(cone_, p))}, {u, neg(Dp)}});
        s.solver = std::make_unique<MixedSolver>(s.sys.solver());
    }
    // f^#T_X - δT_Y + c_Y = ρ with (c_X, c_Y) a cone cocycle
    {
        auto& s = completion_;
        auto tx = s.sys.unknown(xp);
        auto ty = s.sys.unknown(Y.dim(p - 1));
        auto cx = s.sys.unknown(xq, true);
        auto cy = s.sys.unknown(Y.dim(p), true);
        s.var_a = tx;
        s.var_b = cy;
        s.sys.equations(X.dim(p + 2), {{cx, rat(X.coboundary(p + 1))}});
        s.sys.equations(Y.dim(p + 1), {{cx, rat(pullback(cone_, p + 1))}, {cy, neg(rat(Y.coboundary(p)))}});
        s.eq_T = s.sys.equations(Y.dim(p), {{tx, rat(pullback(cone_, p))},
                                            {ty, neg(rat(Y.coboundary(p - 1)))},
                                            {cy, identity(Y.dim(p))}});
        s.solver = std::make_unique<MixedSolver>(s.sys.solver());
    }
}

std::string RelativeCharacterSpace::describe_x(int n, std::size_t i) const {
    return simplex_name(map().target(), n, i) + " of X";
}

std::string RelativeCharacterSpace::describe_y(int n, std::size_t i) const {
    return simplex_name(map().source(), n, i) + " of Y";
}

CharacterRep RelativeCharacterSpace::to_cone(const RelCharacterRep& r) const {
    return CharacterRep{p_, concat(r.T_X, r.T_Y), concat(r.c_X, r.c_Y)};
}

RelCharacterRep RelativeCharacterSpace::from_cone(const CharacterRep& x, RelType type) const {
    auto [tx, ty] = cone_.split(x.T, p_);
    auto [cx, cy] = cone_.split(x.c, p_ + 1);
    return RelCharacterRep{p_, std::move(tx), std::move(ty), std::move(cx), std::move(cy), type};
}

void RelativeCharacterSpace::check_type(const RelCharacterRep& r, RelType t) const {
    RatVector rh = rho(r);
    switch (t) {
        case RelType::I:
            for (std::size_t i = 0; i < rh.size(); ++i)
                if (rh[i] != 0)
                    throw ValidationError("type I needs ρ = 0, but ρ = " + delcoh::to_string(rh[i]) + " on " +
                                          describe_y(p_, i));
            break;
        case RelType::IIprime:
        case RelType::IVCoset: {
            RatVector d = cone_.y().coboundary(p_) * rh;
            for (std::size_t i = 0; i < d.size(); ++i)
                if (d[i] != 0) throw ValidationError("type II' needs dρ = 0, but dρ ≠ 0 on " + describe_y(p_ + 1, i));
            for (std::size_t j = 0; j < y_cycles_.cols(); ++j) {
                Rational v = dot(rh, y_cycles_.col(j));
                if (v.get_den() != 1)
                    throw ValidationError("type II' needs integral periods, but ρ has period " + delcoh::to_string(v) +
                                          " on cycle " + std::to_string(j) + " of the p-cycle basis of Y");
            }
            break;
        }
        default: break;
    }
}

RelCharacterRep RelativeCharacterSpace::make_relative(RatVector T_X, RatVector T_Y, IntVector c_X, IntVector c_Y,
                                                      RelType claimed) const {
    const auto& X = cone_.x();
    const auto& Y = cone_.y();
    auto need = [](const char* name, std::size_t want, std::size_t got) {
        if (want != got)
            throw ValidationError(std::string(name) + " needs " + std::to_string(want) + " values, got " +
                                  std::to_string(got));
    };
    need("T_X", X.dim(p_), T_X.size());
    need("T_Y", Y.dim(p_ - 1), T_Y.size());
    need("c_X", X.dim(p_ + 1), c_X.size());
    need("c_Y", Y.dim(p_), c_Y.size());
    IntVector dc = X.coboundary(p_ + 1) * c_X;
    for (std::size_t i = 0; i < dc.size(); ++i)
        if (dc[i] != 0) throw ValidationError("c_X is not a cocycle: δc_X ≠ 0 on " + describe_x(p_ + 2, i));
    IntVector mismatch = delcoh::sub(pullback(cone_, p_ + 1) * c_X, Y.coboundary(p_) * c_Y);
    for (std::size_t i = 0; i < mismatch.size(); ++i)
        if (mismatch[i] != 0)
            throw ValidationError("f^#c_X ≠ δc_Y on " + describe_y(p_ + 1, i));
    RelCharacterRep r{p_, std::move(T_X), std::move(T_Y), std::move(c_X), std::move(c_Y), claimed};
    check_type(r, claimed);
    return r;
}

RelCharacterRep RelativeCharacterSpace::zero(RelType type) const {
    return RelCharacterRep{p_, RatVector(cone_.x().dim(p_)), RatVector(cone_.y().dim(p_ - 1)),
                           IntVector(cone_.x().dim(p_ + 1)), IntVector(cone_.y().dim(p_)), type};
}

RatVector RelativeCharacterSpace::omega(const RelCharacterRep& r) const {
    return delcoh::add(cone_.x().coboundary(p_) * r.T_X, to_rational(r.c_X));
}

RatVector RelativeCharacterSpace::rho(const RelCharacterRep& r) const {
    RatVector v = delcoh::sub(pullback(cone_, p_) * r.T_X, cone_.y().coboundary(p_ - 1) * r.T_Y);
    return delcoh::add(v, to_rational(r.c_Y));
}

Rational RelativeCharacterSpace::rel_holonomy(const RelCharacterRep& r, const RelativeCycle& z) const {
    if (z.degree() != p_) throw ValidationError("relative cycle degree differs from character degree");
    simplicial::validate_relative_cycle(map(), z);
    return frac(Rational(dot(r.T_X, z.C.coefficients) + dot(r.T_Y, z.C_prime.coefficients)));
}

bool RelativeCharacterSpace::equal_II(const RelCharacterRep& a, const RelCharacterRep& b) const {
    return cone_chars_.equal(to_cone(a), to_cone(b));
}

bool RelativeCharacterSpace::is_integral_form_on_y(const RatVector& rh) const {
    if (!is_zero(cone_.y().coboundary(p_) * rh)) return false;
    return integral_on_sublattice(rh, y_cycles_);
}

bool RelativeCharacterSpace::is_integral_form_on_x(const RatVector& rt) const {
    if (!is_zero(cone_.x().coboundary(p_) * rt)) return false;
    return integral_on_sublattice(rt, x_cycles_);
}

TrivializationKind RelativeCharacterSpace::trivialization_kind(const RelCharacterRep& r) const {
    TrivializationKind k;
    k.rho = rho(r);
    k.kind = is_zero(k.rho) ? Trivialization::Geometric : Trivialization::StrongTopological;
    k.rho_integral = is_integral_form_on_y(k.rho);
    return k;
}

bool RelativeCharacterSpace::in_lambda_omega(const RatVector& om, const RatVector& rh) const {
    if (om.size() != cone_.x().dim(p_ + 1) || rh.size() != cone_.y().dim(p_))
        throw ValidationError("forms have the wrong number of values");
    RatVector compat = delcoh::sub(cone_.y().coboundary(p_) * rh, pullback(cone_, p_ + 1) * om);
    for (std::size_t i = 0; i < compat.size(); ++i)
        if (compat[i] != 0) throw PreconditionError("δρ ≠ f^#ω on " + describe_y(p_ + 1, i));
    return integral_on_sublattice(concat(om, rh), rel_cycles_next_);
}

RelCharacterRep RelativeCharacterSpace::embed_I_to_II(const RelCharacterRep& r) const {
    check_type(r, RelType::I);
    RelCharacterRep out = r;
    out.type = RelType::II;
    return out;
}

RelCharacterRep RelativeCharacterSpace::bockstein(const CharacterRep& xi) const {
    if (xi.p != p_ - 1) throw ValidationError("the Bockstein needs a character of degree p-1 on Y");
    RelCharacterRep r = zero(RelType::II);
    r.T_Y = scale(xi.T, -1);
    r.c_Y = xi.c;
    return r;
}

RelCharacterRep RelativeCharacterSpace::act_on_II(const CharacterRep& xi, const RelCharacterRep& r) const {
    RelCharacterRep b = bockstein(xi);
    RelCharacterRep out = r;
    out.T_Y = delcoh::add(r.T_Y, b.T_Y);
    out.c_Y = delcoh::add(r.c_Y, b.c_Y);
    out.type = RelType::II;
    return out;
}

TypeIIIComparison RelativeCharacterSpace::same_type_III(const RelCharacterRep& a, const RelCharacterRep& b) const {
    const auto& s = type_iii_;
    CharacterRep ca = to_cone(a), cb = to_cone(b);
    auto res = s.solver->solve(s.sys.rhs({{s.eq_T, delcoh::sub(cb.T, ca.T)},
                                          {s.eq_c, to_rational(delcoh::sub(cb.c, ca.c))}}),
                               s.sys.congruence_rhs({}));
    if (!res) return {};
    CharacterRep xi{p_ - 1, s.sys.block(*res.solution, s.var_a), to_integer(s.sys.block(*res.solution, s.var_b))};
    if (!equal_II(act_on_II(xi, a), b)) throw std::logic_error("type III witness failed verification");
    return {true, xi};
}

RelCharacterRep RelativeCharacterSpace::phi_f(const RatVector& rt) const {
    if (rt.size() != cone_.x().dim(p_)) throw ValidationError("ρ̃ has the wrong number of values");
    if (!is_integral_form_on_x(rt))
        throw PreconditionError("φ_f needs a closed form on X with integral periods");
    RelCharacterRep r = zero(RelType::IIprime);
    r.T_X = rt;
    return r;
}

TypeIVComparison RelativeCharacterSpace::same_type_IV(const RelCharacterRep& a, const RelCharacterRep& b) const {
    if (!is_integral_form_on_y(rho(a)) || !is_integral_form_on_y(rho(b)))
        throw PreconditionError("type IV comparison needs two type II' characters");
    const auto& s = type_iv_;
    CharacterRep ca = to_cone(a), cb = to_cone(b);
    auto res = s.solver->solve(s.sys.rhs({{s.eq_T, delcoh::sub(ca.T, cb.T)},
                                          {s.eq_c, to_rational(delcoh::sub(ca.c, cb.c))}}),
                               s.sys.congruence_rhs({}));
    if (!res) return {};
    RatVector rt = s.sys.block(*res.solution, s.var_a);
    RelCharacterRep shifted = from_cone(cone_chars_.add(cb, to_cone(phi_f(rt))));
    if (!equal_II(shifted, a)) throw std::logic_error("type IV witness failed verification");
    return {true, rt};
}

CharacterRep RelativeCharacterSpace::project_to_x(const RelCharacterRep& r) const {
    return CharacterRep{p_, r.T_X, r.c_X};
}

CharacterRep RelativeCharacterSpace::restrict_to_y(const CharacterRep& x) const {
    return CharacterRep{x.p, pullback(cone_, x.p) * x.T, pullback(cone_, x.p + 1) * x.c};
}

bool RelativeCharacterSpace::hbar_numerator_member(const RelCharacterRep& r) const {
    return y_chars_.is_trivial(restrict_to_y(project_to_x(r)));
}

std::optional<RatVector> RelativeCharacterSpace::hbar_denominator_member(const RelCharacterRep& r) const {
    if (!hbar_numerator_member(r)) throw PreconditionError("character does not restrict to zero on Y");
    const auto& s = denominator_;
    CharacterRep cr = to_cone(r);
    auto res = s.solver->solve(s.sys.rhs({{s.eq_T, cr.T}, {s.eq_c, to_rational(cr.c)}}), s.sys.congruence_rhs({}));
    if (!res) return std::nullopt;
    RatVector sv = s.sys.block(*res.solution, s.var_a);
    RatVector ev = s.sys.block(*res.solution, s.var_b);
    RatVector rt = delcoh::add(cone_.x().coboundary(p_ - 1) * sv, ev);
    if (!equal_II(r, phi_f(rt))) throw std::logic_error("denominator witness failed verification");
    return rt;
}

std::optional<RelCharacterRep> RelativeCharacterSpace::complete_to_type_II(const RatVector& rh) const {
    if (rh.size() != cone_.y().dim(p_)) throw ValidationError("ρ has the wrong number of values");
    const auto& s = completion_;
    auto res = s.solver->solve(s.sys.rhs({{s.eq_T, rh}}), s.sys.congruence_rhs({}));
    if (!res) return std::nullopt;
    const RatVector& y = *res.solution;
    RelCharacterRep r = make_relative(s.sys.block(y, 0), s.sys.block(y, 1), to_integer(s.sys.block(y, 2)),
                                      to_integer(s.sys.block(y, 3)), RelType::II);
    if (rho(r) != rh) throw std::logic_error("completion failed verification");
    return r;
}

}  // namespace delcoh::characters
