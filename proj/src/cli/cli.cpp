#include "delcoh/cli/cli.hpp"

#include "delcoh/cli/workspace.hpp"
#include "delcoh/cone/cone.hpp"
#include "delcoh/errors.hpp"
#include "delcoh/sequences/sequences.hpp"
#include "delcoh/simplicial/cochain_complex.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>

namespace delcoh::cli {

namespace {

struct Options {
    std::string workspace, name, second, which = "all", coeff = "Z", format = "text", kind;
    int degree = 0;
    std::size_t samples = 20;
    std::uint64_t seed = 0;
};

int cohomology(const Options& o, std::ostream& out) {
    Workspace ws = load_workspace(o.workspace);
    const auto& K = ws.complex(o.name);
    if (o.degree < 0) throw ValidationError("degree must be nonnegative");
    out << simplicial::cohomology(K, o.degree, simplicial::parse_coefficients(o.coeff)).to_string() << "\n";
    return Success;
}

int relative(const Options& o, std::ostream& out) {
    Workspace ws = load_workspace(o.workspace);
    const auto& f = ws.map(o.name);
    if (o.degree < 0) throw ValidationError("degree must be nonnegative");
    out << cone::relative_cohomology(f, o.degree, simplicial::parse_coefficients(o.coeff)).to_string() << "\n";
    return Success;
}

int holonomy(const Options& o, std::ostream& out) {
    Workspace ws = load_workspace(o.workspace);
    if (auto it = ws.characters.find(o.name); it != ws.characters.end()) {
        auto z = ws.cycles.find(o.second);
        if (z == ws.cycles.end()) {
            if (ws.relative_cycles.count(o.second))
                throw PreconditionError("'" + o.name + "' is an absolute character but '" + o.second +
                                        "' is a relative cycle");
            throw UnknownReference("unknown cycle '" + o.second + "'");
        }
        const auto& x = it->second;
        if (x.complex != z->second.complex)
            throw PreconditionError("character lives on '" + x.complex + "' but the cycle on '" + z->second.complex + "'");
        if (x.rep.p != z->second.chain.degree)
            throw PreconditionError("character has degree " + std::to_string(x.rep.p) + " but the cycle has degree " +
                                    std::to_string(z->second.chain.degree));
        auto space = characters::character_space(ws.complex(x.complex), x.rep.p);
        out << characters::holonomy_string(space.holonomy(x.rep, z->second.chain.coefficients)) << "\n";
        return Success;
    }
    if (auto it = ws.relative_characters.find(o.name); it != ws.relative_characters.end()) {
        auto z = ws.relative_cycles.find(o.second);
        if (z == ws.relative_cycles.end()) {
            if (ws.cycles.count(o.second))
                throw PreconditionError("'" + o.name + "' is a relative character but '" + o.second +
                                        "' is an absolute cycle");
            throw UnknownReference("unknown cycle '" + o.second + "'");
        }
        const auto& r = it->second;
        if (r.map != z->second.map)
            throw PreconditionError("character lives on map '" + r.map + "' but the cycle on '" + z->second.map + "'");
        if (r.rep.p != z->second.cycle.degree())
            throw PreconditionError("character has degree " + std::to_string(r.rep.p) + " but the cycle has degree " +
                                    std::to_string(z->second.cycle.degree()));
        characters::RelativeCharacterSpace space(ws.map(r.map), r.rep.p);
        out << characters::holonomy_string(space.rel_holonomy(r.rep, z->second.cycle)) << "\n";
        return Success;
    }
    throw UnknownReference("unknown character '" + o.name + "'");
}

int verify(const Options& o, std::ostream& out) {
    Workspace ws = load_workspace(o.workspace);
    const auto& f = ws.map(o.name);
    std::vector<sequences::SequenceTag> tags;
    if (o.which == "all")
        tags = {sequences::SequenceTag::LES1, sequences::SequenceTag::LES2, sequences::SequenceTag::LES3,
                sequences::SequenceTag::LES4, sequences::SequenceTag::Diagram};
    else
        tags = {sequences::parse_sequence_tag(o.which)};
    const sequences::VerifyOptions opt{o.samples, o.seed};
    bool failed = false;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (auto tag : tags) {
        VerificationReport r = sequences::verify(f, o.degree, tag, opt);
        failed = failed || r.status() == Status::Fail;
        if (o.format == "json") all.push_back(nlohmann::ordered_json::parse(r.to_json()));
        else out << r.to_text();
    }
    if (o.format == "json") out << all.dump(2) << "\n";
    return failed ? VerificationFailed : Success;
}

int sample(const Options& o, std::ostream& out) {
    Workspace ws = load_workspace(o.workspace);
    const auto& f = ws.map(o.name);
    out << sequences::sample_character(f, o.degree, sequences::parse_sample_kind(o.kind), o.seed).to_json();
    return Success;
}

std::uint64_t parse_seed(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("DELCOH_SEED must be a nonnegative integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw ValidationError("DELCOH_SEED is out of range: '" + text + "'");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relative Deligne cohomology and relative differential characters on simplicial maps", "delcoh"};
    app.require_subcommand(1);
    Options o;

    auto* coh = app.add_subcommand("cohomology", "Print H^n(K; coeff) of a named complex");
    coh->add_option("workspace", o.workspace, "Workspace file")->required();
    coh->add_option("complex", o.name, "Complex name")->required();
    coh->add_option("degree", o.degree, "Degree n")->required();
    coh->add_option("--coeff", o.coeff, "Z, Q or RZ")->capture_default_str();

    auto* rel = app.add_subcommand("relative", "Print H^n(X, Y, f; coeff) of a named map f: Y -> X");
    rel->add_option("workspace", o.workspace, "Workspace file")->required();
    rel->add_option("map", o.name, "Map name")->required();
    rel->add_option("degree", o.degree, "Degree n")->required();
    rel->add_option("--coeff", o.coeff, "Z, Q or RZ")->capture_default_str();

    auto* hol = app.add_subcommand("holonomy", "Print the holonomy of a character on a cycle, in [0, 1)");
    hol->add_option("workspace", o.workspace, "Workspace file")->required();
    hol->add_option("character", o.name, "Character name")->required();
    hol->add_option("cycle", o.second, "Cycle name")->required();

    auto* ver = app.add_subcommand("verify", "Verify the exact sequences and the diagram for a map");
    ver->add_option("workspace", o.workspace, "Workspace file")->required();
    ver->add_option("map", o.name, "Map name")->required();
    ver->add_option("p", o.degree, "Character degree p")->required();
    ver->add_option("which", o.which, "les1, les2, les3, les4, diagram or all")->capture_default_str();
    ver->add_option("--samples", o.samples, "Samples per node")->capture_default_str();
    ver->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    ver->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* smp = app.add_subcommand("sample", "Print a seeded random character for a map");
    smp->add_option("workspace", o.workspace, "Workspace file")->required();
    smp->add_option("map", o.name, "Map name")->required();
    smp->add_option("p", o.degree, "Character degree p")->required();
    smp->add_option("kind", o.kind, "x, y, I, II or II'")->required();
    smp->add_option("--seed", o.seed, "Random seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : InvalidInput;
    }

    try {
        if (const char* env = std::getenv("DELCOH_SEED")) o.seed = parse_seed(env);
        if (*coh) return cohomology(o, out);
        if (*rel) return relative(o, out);
        if (*hol) return holonomy(o, out);
        if (*ver) return verify(o, out);
        return sample(o, out);
    } catch (const UnknownReference& e) {
        err << "error: " << e.what() << "\n";
        return UnknownName;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return Precondition;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return InvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return InvalidInput;
    }
}

}  // namespace delcoh::cli
