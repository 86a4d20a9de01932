#include "delcoh/cone/cone.hpp"

#include "delcoh/algebra/abelian.hpp"
#include "delcoh/algebra/smith.hpp"
#include "delcoh/errors.hpp"

#include <stdexcept>

namespace delcoh::cone {

using simplicial::cochain_complex;
using simplicial::induced_cochain_map;

ConeComplex::ConeComplex(SimplicialMap f)
    : f_(std::move(f)), x_(cochain_complex(f_.target())), y_(cochain_complex(f_.source())) {
    const int top = std::max(x_.top_degree(), y_.top_degree() + 1);
    for (int n = 0; n <= top + 2; ++n) pullbacks_.push_back(induced_cochain_map(f_, n));
    std::vector<std::size_t> dims;
    std::vector<IntMatrix> d;
    for (int n = 0; n <= top; ++n) {
        dims.push_back(x_.dim(n) + y_.dim(n - 1));
        IntMatrix D(x_.dim(n + 1) + y_.dim(n), x_.dim(n) + y_.dim(n - 1));
        D.set_block(0, 0, x_.coboundary(n));
        D.set_block(x_.dim(n + 1), 0, pullbacks_[static_cast<std::size_t>(n)]);
        IntMatrix dy = y_.coboundary(n - 1);
        for (std::size_t i = 0; i < dy.rows(); ++i)
            for (std::size_t j = 0; j < dy.cols(); ++j) D(x_.dim(n + 1) + i, x_.dim(n) + j) = -dy(i, j);
        d.push_back(std::move(D));
    }
    cone_ = CochainComplex(std::move(dims), std::move(d));
}

const IntMatrix& ConeComplex::pullback(int n) const {
    if (n < 0 || n >= static_cast<int>(pullbacks_.size())) return empty_;
    return pullbacks_[static_cast<std::size_t>(n)];
}

IntVector ConeComplex::chain_vector(const simplicial::RelativeCycle& z) const {
    const int p = z.degree();
    if (z.C.coefficients.size() != x_.dim(p) || z.C_prime.coefficients.size() != y_.dim(p - 1))
        throw ValidationError("relative chain has the wrong number of coefficients");
    return concat(z.C.coefficients, z.C_prime.coefficients);
}

IntMatrix ConeComplex::relative_cycle_basis(int p) const { return cone_.cycle_basis(p); }

std::string ConeComplex::fixture_hash() const { return simplicial::fnv1a_hex(f_.canonical_string()); }

IntMatrix cone_differential(const ConeComplex& cone, int n) { return cone.complex().coboundary(n); }

simplicial::CohomologyGroup relative_cohomology(const SimplicialMap& f, int n, Coefficients coeff) {
    if (n < 0) throw std::out_of_range("relative_cohomology: negative degree");
    ConeComplex cone(f);
    return simplicial::cohomology(cone.complex(), n, coeff);
}

IntMatrix connecting_hom(const SimplicialMap& f, int n, Coefficients coeff) {
    ConeComplex cone(f);
    Subquotient hy(cone.y().coboundary(n - 2), cone.y().coboundary(n - 1));
    Subquotient hc(cone.complex().coboundary(n - 1), cone.complex().coboundary(n));
    IntMatrix m(hc.generator_count(), hy.generator_count());
    for (std::size_t j = 0; j < hy.generator_count(); ++j) {
        IntVector v = concat(IntVector(cone.x().dim(n)), hy.generator(j));
        m.set_col(j, hc.coordinates(v));
    }
    if (coeff == Coefficients::Z) return m;
    std::size_t ty = hy.structure().torsion.size(), tc = hc.structure().torsion.size();
    return m.block(tc, ty, m.rows() - tc, m.cols() - ty);
}

namespace {

IntMatrix diag_orders(const Subquotient& s) {
    IntMatrix d(s.generator_count(), s.generator_count());
    for (std::size_t i = 0; i < s.generator_count(); ++i) d(i, i) = s.generator_order(i);
    return d;
}

// Matrix of the induced map between subquotients in generator coordinates.
IntMatrix induced(const Subquotient& from, const Subquotient& to, const IntMatrix& A) {
    IntMatrix m(to.generator_count(), from.generator_count());
    for (std::size_t j = 0; j < from.generator_count(); ++j) m.set_col(j, to.coordinates(A * from.generator(j)));
    return m;
}

IntVector reduce(const Subquotient& s, IntVector x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Integer& d = s.generator_order(i);
        if (d == 0) continue;
        x[i] %= d;
        if (x[i] < 0) x[i] += d;
    }
    return x;
}

// Invariants of the subgroup of Z^k / diag(a) generated by the columns of W.
FGAbelianGroup subgroup_structure(const IntMatrix& W, const IntMatrix& diag_a) {
    const std::size_t w = W.cols();
    IntMatrix K = integer_kernel_basis(hstack(std::vector<IntMatrix>{W, diag_a}));
    FGAbelianGroup g = cokernel_structure(K.block(0, 0, w, K.cols()));
    g.generator_witnesses.clear();
    return g;
}

std::size_t free_block_rank(const IntMatrix& m, std::size_t row_torsion, std::size_t col_torsion) {
    IntMatrix b = m.block(row_torsion, col_torsion, m.rows() - row_torsion, m.cols() - col_torsion);
    return smith_normal_form(b).rank;
}

}  // namespace

CheckReport check_fg_exactness(const FGNode& prev, const FGNode& node, const FGNode& next, const IntMatrix& A,
                               const IntMatrix& B, Coefficients coeff) {
    CheckReport r;
    r.kind = "node";
    r.label = node.label;
    Subquotient sp(prev.d_in, prev.d_out), sn(node.d_in, node.d_out), sx(next.d_in, next.d_out);
    IntMatrix phiA = induced(sp, sn, A);
    IntMatrix phiB = induced(sn, sx, B);

    std::size_t composite = 0;
    for (std::size_t j = 0; j < sp.generator_count(); ++j) {
        IntVector c = sx.coordinates(B * (A * sp.generator(j)));
        if (coeff == Coefficients::Q)
            for (std::size_t i = 0; i < sx.structure().torsion.size(); ++i) c[i] = 0;
        ++composite;
        if (!is_zero(c)) r.fail("composite map is nonzero on generator " + std::to_string(j) + " of " + prev.label);
    }
    r.detail("composite_checks", composite);

    if (coeff == Coefficients::Q) {
        r.invariants = sn.structure().to_string_rational();
        std::size_t tp = sp.structure().torsion.size(), tn = sn.structure().torsion.size(),
                    tx = sx.structure().torsion.size();
        std::size_t image_rank = free_block_rank(phiA, tn, tp);
        std::size_t kernel_rank = sn.structure().free_rank - free_block_rank(phiB, tx, tn);
        r.detail("image", "Q^" + std::to_string(image_rank));
        r.detail("kernel", "Q^" + std::to_string(kernel_rank));
        if (image_rank != kernel_rank) r.fail("rank of image differs from rank of kernel");
        return r;
    }

    r.invariants = sn.structure().to_string();
    IntMatrix dn = diag_orders(sn);
    IntMatrix Kb = integer_kernel_basis(hstack(std::vector<IntMatrix>{phiB, diag_orders(sx)}));
    IntMatrix Wker = Kb.block(0, 0, sn.generator_count(), Kb.cols());
    FGAbelianGroup ker = subgroup_structure(Wker, dn);
    FGAbelianGroup img = subgroup_structure(phiA, dn);
    r.detail("kernel", ker.to_string());
    r.detail("image", img.to_string());
    if (!ker.same_invariants(img)) r.fail("kernel " + ker.to_string() + " and image " + img.to_string() + " differ");

    IntegerSolver pre(hstack(std::vector<IntMatrix>{phiA, dn}));
    WitnessLog log;
    std::size_t checked = 0;
    for (std::size_t j = 0; j < Wker.cols(); ++j) {
        IntVector x = Wker.col(j);
        if (is_zero(reduce(sn, x))) continue;
        ++checked;
        auto sol = pre.solve(x);
        if (!sol) {
            r.fail("kernel generator " + to_string(x) + " has no preimage");
            continue;
        }
        IntVector y(sol.solution->begin(), sol.solution->begin() + static_cast<std::ptrdiff_t>(sp.generator_count()));
        IntVector cochain(sp.ambient_dim());
        for (std::size_t g = 0; g < y.size(); ++g)
            for (std::size_t i = 0; i < sp.ambient_dim(); ++i) cochain[i] += y[g] * sp.generator(g)[i];
        if (sn.coordinates(A * cochain) != reduce(sn, x)) {
            r.fail("preimage witness for " + to_string(x) + " does not verify");
            continue;
        }
        log.add(to_string(cochain));
    }
    r.detail("kernel_generators", checked);
    log.store(r);
    return r;
}

namespace {

IntMatrix projection_to_x(const ConeComplex& c, int n) {
    IntMatrix m(c.x().dim(n), c.dim(n));
    for (std::size_t i = 0; i < c.x().dim(n); ++i) m(i, i) = 1;
    return m;
}

IntMatrix inclusion_of_y(const ConeComplex& c, int n) {
    // C^{n-1}(Y) -> Cone^n, e ↦ (0, e)
    IntMatrix m(c.dim(n), c.y().dim(n - 1));
    for (std::size_t i = 0; i < c.y().dim(n - 1); ++i) m(c.x().dim(n) + i, i) = 1;
    return m;
}

std::string degree_label(const char* group, int n, const char* coeff) {
    return std::string("H^") + std::to_string(n) + "(" + group + ";" + coeff + ")";
}

VerificationReport verify_cohomology_les(const ConeComplex& c, Coefficients coeff, int lo, int hi) {
    const char* ring = coeff == Coefficients::Z ? "Z" : "Q";
    struct Entry {
        FGNode node;
        IntMatrix to_next;
        bool checked;
    };
    std::vector<Entry> seq;
    auto y_node = [&](int n) {
        return FGNode{degree_label("Y", n, ring), c.y().coboundary(n - 1), c.y().coboundary(n)};
    };
    auto x_node = [&](int n) {
        return FGNode{degree_label("X", n, ring), c.x().coboundary(n - 1), c.x().coboundary(n)};
    };
    auto cone_node = [&](int n) {
        return FGNode{degree_label("X,Y", n, ring), c.complex().coboundary(n - 1), c.complex().coboundary(n)};
    };
    seq.push_back({y_node(lo - 1), inclusion_of_y(c, lo), false});
    for (int n = lo; n <= hi; ++n) {
        seq.push_back({cone_node(n), projection_to_x(c, n), true});
        seq.push_back({x_node(n), c.pullback(n), true});
        seq.push_back({y_node(n), inclusion_of_y(c, n + 1), true});
    }
    seq.push_back({cone_node(hi + 1), IntMatrix(), false});

    VerificationReport rep;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        rep.checks.push_back(
            check_fg_exactness(seq[i - 1].node, seq[i].node, seq[i + 1].node, seq[i - 1].to_next, seq[i].to_next, coeff));
    return rep;
}

VerificationReport verify_homology_les(const ConeComplex& c, int lo, int hi) {
    // H_n(Y) -> H_n(X) -> H_n(cone) -> H_{n-1}(Y); dualizing into R/Z gives the R/Z cohomology sequence.
    struct Entry {
        FGNode node;
        IntMatrix to_next;
    };
    auto y_node = [&](int n) {
        return FGNode{degree_label("Y", n, "R/Z"), c.y().boundary(n + 1), c.y().boundary(n)};
    };
    auto x_node = [&](int n) {
        return FGNode{degree_label("X", n, "R/Z"), c.x().boundary(n + 1), c.x().boundary(n)};
    };
    auto cone_node = [&](int n) {
        return FGNode{degree_label("X,Y", n, "R/Z"), c.complex().boundary(n + 1), c.complex().boundary(n)};
    };
    auto cone_to_y = [&](int n) {
        IntMatrix m(c.y().dim(n - 1), c.dim(n));
        for (std::size_t i = 0; i < c.y().dim(n - 1); ++i) m(i, c.x().dim(n) + i) = 1;
        return m;
    };
    auto x_to_cone = [&](int n) { return projection_to_x(c, n).transpose(); };
    std::vector<Entry> seq;
    seq.push_back({cone_node(hi + 1), cone_to_y(hi + 1)});
    for (int n = hi; n >= lo; --n) {
        seq.push_back({y_node(n), c.map().chain_map(n)});
        seq.push_back({x_node(n), x_to_cone(n)});
        seq.push_back({cone_node(n), cone_to_y(n)});
    }
    seq.push_back({y_node(lo - 1), IntMatrix()});

    VerificationReport rep;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        CheckReport r = check_fg_exactness(seq[i - 1].node, seq[i].node, seq[i + 1].node, seq[i - 1].to_next,
                                           seq[i].to_next, Coefficients::Z);
        Subquotient h(seq[i].node.d_in, seq[i].node.d_out);
        RZModuleInvariants rz{h.structure().free_rank, h.structure().torsion};
        r.invariants = rz.to_string();
        r.detail("checked_on", "dual homology");
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

}  // namespace

VerificationReport verify_les(const SimplicialMap& f, Coefficients coeff, int lo, int hi) {
    if (lo < 0 || hi < lo) throw std::out_of_range("verify_les: invalid degree range");
    ConeComplex c(f);
    VerificationReport rep = coeff == Coefficients::RZ ? verify_homology_les(c, lo, hi)
                                                       : verify_cohomology_les(c, coeff, lo, hi);
    rep.title = "relative LES (" + simplicial::to_string(coeff) + ")";
    rep.parameters = {{"fixture", c.fixture_hash()},
                      {"degrees", std::to_string(lo) + ".." + std::to_string(hi)}};
    return rep;
}

VerificationReport verify_les(const SimplicialMap& f, Coefficients coeff) {
    int top = std::max(f.target().dimension(), f.source().dimension() + 1);
    return verify_les(f, coeff, 0, std::max(top, 0));
}

}  // namespace delcoh::cone
