// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include "delcoh/algebra/random.hpp"
#include "delcoh/algebra/smith.hpp"
#include "delcoh/characters/relative.hpp"
#include "delcoh/cli/cli.hpp"
#include "delcoh/cone/cone.hpp"
#include "delcoh/sequences/sequences.hpp"
#include "delcoh/simplicial/cochain_complex.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace delcoh;
using namespace delcoh::characters;
using namespace delcoh::sequences;
using simplicial::Chain;
using simplicial::Coefficients;
using simplicial::RelativeCycle;
using simplicial::SimplicialComplex;

namespace {

// Collects failures and a count of the comparisons made.
struct Outcome {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.back() = "... and more";
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: no limit
    std::function<void(Outcome&)> body;
};

std::vector<SimplicialComplex> complexes() {
    return {fixtures::circle(3),  fixtures::circle(6),  fixtures::interval(3), fixtures::tetrahedron_boundary(),
            fixtures::torus7(),   fixtures::mobius5(),  fixtures::rp2_6(),     fixtures::point()};
}

RelCharacterRep rep_of(const RelativeCharacterSpace& s, const RatVector& x, RelType type = RelType::II) {
    const std::size_t nt = s.cone().dim(s.degree());
    RatVector T(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nt));
    RatVector c(x.begin() + static_cast<std::ptrdiff_t>(nt), x.end());
    RelCharacterRep r = s.from_cone(CharacterRep{s.degree(), T, to_integer(c)}, type);
    return s.make_relative(r.T_X, r.T_Y, r.c_X, r.c_Y, type);
}

RatVector random_rational(Rng& rng, std::size_t n) {
    RatVector v(n);
    for (auto& x : v) x = rng.small_rational();
    return v;
}

IntVector random_integer(Rng& rng, std::size_t n) {
    IntVector v(n);
    for (auto& x : v) x = rng.small_integer();
    return v;
}

RelativeCycle relative_cycle(const RelativeCharacterSpace& s, const IntVector& z, int n) {
    auto [C, Cp] = s.cone().split(z, n);
    return RelativeCycle{Chain{n, C}, Chain{n - 1, Cp}};
}

bool zero_matrix(const IntMatrix& m) { return m == IntMatrix(m.rows(), m.cols()); }

std::string where(const std::string& name, int p) { return name + " p=" + std::to_string(p); }

void complex_axioms(Outcome& o) {
    for (const auto& K : complexes()) {
        auto C = simplicial::cochain_complex(K);
        for (int n = -1; n <= K.dimension() + 1; ++n) {
            IntMatrix dd = C.coboundary(n + 1) * C.coboundary(n);
            o.expect(zero_matrix(dd), "δδ ≠ 0 on " + K.canonical_string() + " in degree " + std::to_string(n));
        }
    }
    for (const auto& [name, f] : fixtures::corpus()) {
        cone::ConeComplex c(f);
        for (int n = -1; n <= c.x().top_degree() + 1; ++n)
            o.expect(zero_matrix(cone::cone_differential(c, n + 1) * cone::cone_differential(c, n)),
                     "D² ≠ 0 on " + name + " in degree " + std::to_string(n));
    }
}

void cohomology_oracle(Outcome& o) {
    for (const auto& K : complexes())
        for (int n = 0; n <= K.dimension() + 1; ++n) {
            std::string got = simplicial::cohomology(K, n, Coefficients::Z).to_string();
            std::string want = oracle::integral_cohomology(K, n).to_string();
            o.expect(got == want, K.canonical_string() + " H^" + std::to_string(n) + ": " + got + " vs " + want);
        }
    for (const auto& [name, f] : fixtures::corpus()) {
        std::string probe;
        try {
            probe = oracle::relative_integral_cohomology(f, 0).to_string();
        } catch (const std::invalid_argument&) {
            continue;  // the quotient oracle needs an embedding
        }
        for (int n = 0; n <= f.target().dimension() + 1; ++n) {
            std::string got = cone::relative_cohomology(f, n, Coefficients::Z).to_string();
            std::string want = oracle::relative_integral_cohomology(f, n).to_string();
            o.expect(got == want, name + " H^" + std::to_string(n) + "(X,Y): " + got + " vs " + want);
        }
    }
    o.expect(cone::relative_cohomology(fixtures::equator(), 2, Coefficients::Z).to_string() == "Z^2",
             "equator H^2(X,Y) is not Z^2");
    o.expect(simplicial::cohomology(fixtures::torus7(), 1, Coefficients::Z).to_string() == "Z^2",
             "torus H^1 is not Z^2");
}

void exactness(Outcome& o) {
    std::size_t skipped = 0;
    for (const auto& [name, f] : fixtures::corpus()) {
        for (auto coeff : {Coefficients::Z, Coefficients::Q, Coefficients::RZ}) {
            VerificationReport r = cone::verify_les(f, coeff);
            o.expect(r.status() == Status::Pass, name + " cohomology sequence over " + simplicial::to_string(coeff));
        }
        for (int p = 1; p <= 2; ++p)
            for (auto tag : {SequenceTag::LES1, SequenceTag::LES2, SequenceTag::LES3, SequenceTag::LES4}) {
                VerificationReport r = verify(f, p, tag, VerifyOptions{20, 0});
                if (r.status() == Status::Skip) ++skipped;
                o.expect(r.status() != Status::Fail, where(name, p) + " " + to_string(tag));
            }
    }
    o.note = std::to_string(skipped) + " skipped (les3 needs p >= 2)";
}

void character_axiom(Outcome& o) {
    std::uint64_t seed = 0;
    for (const auto& [name, f] : fixtures::corpus())
        for (int p = 1; p <= 2; ++p) {
            RelativeCharacterSpace s(f, p);
            const auto& K = s.cone().complex();
            for (int t = 0; t < 2; ++t) {
                for (auto kind : {SampleKind::AbsoluteX, SampleKind::AbsoluteY}) {
                    const CharacterSpace& space = kind == SampleKind::AbsoluteX ? s.x_characters() : s.y_characters();
                    CharacterRep x = sample_character(f, p, kind, ++seed).absolute;
                    RatVector om = space.curvature(x);
                    for (std::size_t d = 0; d < space.c_size(); ++d) {
                        IntVector D(space.c_size());
                        D[d] = 1;
                        IntVector bd = space.complex().coboundary(p).transpose() * D;
                        o.expect(space.holonomy(x, bd) == frac(om[d]), where(name, p) + " absolute, simplex " +
                                                                             std::to_string(d));
                    }
                }
                RelCharacterRep r = sample_character(f, p, SampleKind::II, ++seed).relative;
                RatVector om = s.omega(r), rh = s.rho(r);
                for (std::size_t d = 0; d < K.dim(p + 1); ++d) {
                    IntVector b(K.dim(p + 1));
                    b[d] = 1;
                    auto [B, Bp] = s.cone().split(b, p + 1);
                    Rational rhs = frac(Rational(dot(om, B) + dot(rh, Bp)));
                    o.expect(s.rel_holonomy(r, relative_cycle(s, K.coboundary(p).transpose() * b, p)) == rhs,
                             where(name, p) + " relative, basis chain " + std::to_string(d));
                }
            }
        }
}

void gauge_invariance(Outcome& o) {
    for (const auto& [name, f] : fixtures::corpus()) {
        const int p = 1 + static_cast<int>(name.size() % 2);
        RelativeCharacterSpace s(f, p);
        const auto& K = s.cone().complex();
        Rng rng(derive_seed(5, name.size()));
        RelCharacterRep r = sample_character(f, p, SampleKind::II, 5).relative;
        IntMatrix Z = s.cone().relative_cycle_basis(p);
        std::vector<RelativeCycle> cycles;
        for (int k = 0; k < 20; ++k) {
            IntVector z(K.dim(p));
            for (std::size_t j = 0; j < Z.cols(); ++j) z = add(z, scale(Z.col(j), rng.small_integer(3)));
            cycles.push_back(relative_cycle(s, z, p));
        }
        std::vector<Rational> before;
        for (const auto& z : cycles) before.push_back(s.rel_holonomy(r, z));
        CharacterRep x = s.to_cone(r);
        for (int move = 0; move < 50; ++move) {
            x = s.cone_characters().gauge(x, random_rational(rng, K.dim(p - 1)), random_integer(rng, K.dim(p)));
            RelCharacterRep moved = s.from_cone(x);
            for (std::size_t k = 0; k < cycles.size(); ++k)
                o.expect(s.rel_holonomy(moved, cycles[k]) == before[k],
                         where(name, p) + " move " + std::to_string(move) + " cycle " + std::to_string(k));
        }
    }
}

void diagram(Outcome& o) {
    for (const auto& [name, f] : fixtures::corpus())
        for (int p = 1; p <= 2; ++p) {
            VerificationReport r = verify_diagram(f, p, VerifyOptions{20, 0});
            for (const auto& c : r.checks)
                o.expect(c.status == Status::Pass, where(name, p) + " " + c.kind + " " + c.label + ": " + c.message);
        }
}

void dictionary(Outcome& o) {
    std::size_t trivial = 0, certified_nontrivial = 0;
    for (const auto& [name, f] : fixtures::corpus())
        for (int p = 1; p <= 2; ++p) {
            RelativeCharacterSpace s(f, p);
            ModelFactory F(s);
            const auto& K = s.cone().complex();
            const CharacterSpace& cone = s.cone_characters();
            Rng rng(derive_seed(17, name.size(), static_cast<std::uint64_t>(p)));
            Group II(F.type_II()), flat(F.flat_rel(p));
            std::vector<std::pair<RelCharacterRep, bool>> samples;  // (rep, built as a coboundary)
            for (int k = 0; k < 10; ++k) {
                CharacterRep g = cone.gauge(cone.zero(), random_rational(rng, K.dim(p - 1)), random_integer(rng, K.dim(p)));
                samples.emplace_back(s.from_cone(g), true);
            }
            for (int k = 0; k < 6; ++k) samples.emplace_back(rep_of(s, flat.sample(rng)), false);
            for (int k = 0; k < 6; ++k) samples.emplace_back(rep_of(s, II.sample(rng)), false);
            for (const auto& [r, built] : samples) {
                const std::string at = where(name, p);
                CharacterRep x = s.to_cone(r);
                TrivialityCertificate cert = cone.certify_triviality(x);
                o.expect(cert.trivial == s.equal_II(r, s.zero(RelType::II)), at + ": certificate disagrees with equality");
                if (built) o.expect(cert.trivial, at + ": a coboundary was not recognised");
                if (cert.trivial) {
                    ++trivial;
                    CharacterRep g = cone.gauge(cone.zero(), cert.S, cert.u);
                    o.expect(g.T == x.T && g.c == x.c, at + ": gauge witness does not reproduce the representative");
                } else if (cert.cycle) {
                    ++certified_nontrivial;
                    RelativeCycle z = relative_cycle(s, cone.cycle_basis().col(*cert.cycle), p);
                    Rational h = s.rel_holonomy(r, z);
                    o.expect(h != 0 && h == cert.value, at + ": holonomy certificate does not reproduce");
                } else {
                    ++certified_nontrivial;
                    RatVector om = concat(s.omega(r), s.rho(r));
                    o.expect(cert.curvature_simplex && om[*cert.curvature_simplex] == cert.value && cert.value != 0,
                             at + ": curvature certificate does not reproduce");
                }
            }
        }
    o.expect(trivial > 0 && certified_nontrivial > 0, "one of the two directions was never exercised");
    o.note = std::to_string(trivial) + " coboundaries, " + std::to_string(certified_nontrivial) + " certified nontrivial";
}

void type_iv(Outcome& o) {
    std::size_t same = 0, different = 0;
    for (const auto& [name, f] : fixtures::corpus())
        for (int p = 1; p <= 2; ++p) {
            RelativeCharacterSpace s(f, p);
            ModelFactory F(s);
            const auto& X = s.cone().x();
            Rng rng(derive_seed(23, name.size(), static_cast<std::uint64_t>(p)));
            Group IIp(F.type_IIprime());
            IntMatrix cocycles = integer_kernel_basis(X.coboundary(p));
            std::vector<RelCharacterRep> samples;
            for (int k = 0; k < 50; ++k) samples.push_back(rep_of(s, IIp.sample(rng), RelType::IIprime));
            for (int k = 0; k < 10; ++k) {
                // φ_f of a closed form with integral periods, moved by a gauge transformation
                RatVector rt = X.coboundary(p - 1) * random_rational(rng, X.dim(p - 1));
                for (std::size_t j = 0; j < cocycles.cols(); ++j)
                    rt = add(rt, to_rational(scale(cocycles.col(j), rng.small_integer())));
                const auto& K = s.cone().complex();
                CharacterRep g = s.cone_characters().gauge(s.to_cone(s.phi_f(rt)), random_rational(rng, K.dim(p - 1)),
                                                           random_integer(rng, K.dim(p)));
                samples.push_back(s.from_cone(g, RelType::IIprime));
            }
            for (const auto& r : samples) {
                const bool iv = s.same_type_IV(r, s.zero(RelType::IIprime)).same;
                const bool num = s.hbar_numerator_member(r);
                const bool quotient = num && s.hbar_denominator_member(r).has_value();
                (iv ? same : different)++;
                o.expect(iv == quotient, where(name, p) + ": type IV and quotient membership disagree");
            }
        }
    o.expect(same > 0 && different > 0, "only one outcome was ever observed");
    o.note = std::to_string(same) + " trivial, " + std::to_string(different) + " nontrivial";
}

void lambda_omega(Outcome& o) {
    for (const auto& [name, f] : fixtures::corpus())
        for (int p = 1; p <= 2; ++p) {
            RelativeCharacterSpace s(f, p);
            ModelFactory F(s);
            Group II(F.type_II());
            Rng rng(derive_seed(29, name.size(), static_cast<std::uint64_t>(p)));
            for (int k = 0; k < 20; ++k) {
                RelCharacterRep r = rep_of(s, II.sample(rng));
                o.expect(s.in_lambda_omega(s.omega(r), s.rho(r)), where(name, p) + " sample " + std::to_string(k));
            }
        }
}

void determinism(Outcome& o) {
    const std::string ws = std::string(DELCOH_DOCS_DIR) + "/examples/equator.jsonl";
    for (const char* map : {"equator", "point_in_circle", "empty_into_sphere"})
        for (const char* p : {"1", "2"})
            for (const char* format : {"text", "json"}) {
                std::vector<std::string> args{"verify", ws, map, p, "all", "--seed", "11", "--format", format};
                std::ostringstream a, b, ea, eb;
                const int ca = cli::run(args, a, ea);
                const int cb = cli::run(args, b, eb);
                o.expect(ca == cb && a.str() == b.str() && !a.str().empty(),
                         std::string(map) + " p=" + p + " " + format + ": outputs differ");
            }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "complex axioms", 5, complex_axioms},
        {2, "cohomology oracle", 10, cohomology_oracle},
        {3, "long exact sequences", 60, exactness},
        {4, "holonomy of boundaries is the curvature integral", 0, character_axiom},
        {5, "gauge invariance of relative holonomy", 0, gauge_invariance},
        {6, "relative theories diagram", 60, diagram},
        {7, "triviality dictionary", 0, dictionary},
        {8, "type IV against the quotient", 0, type_iv},
        {9, "curvature pairs lie in the integral lattice", 0, lambda_omega},
        {10, "determinism of verify", 0, determinism},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds > c.limit_seconds)
            o.failures.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        const bool pass = o.failures.empty() && o.checks > 0;
        if (o.checks == 0 && o.failures.empty()) o.failures.push_back("no checks ran");
        all = all && pass;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << o.checks << " checks, " << std::fixed << std::setprecision(2) << seconds << " s";
        if (!o.note.empty()) std::cout << "; " << o.note;
        std::cout << ")\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    }
    return all ? 0 : 1;
}
