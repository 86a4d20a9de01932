#include "delcoh/cli/workspace.hpp"

#include "delcoh/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace delcoh::cli {

using nlohmann::json;
using simplicial::Chain;
using simplicial::SimplicialComplex;
using simplicial::SimplicialMap;
using simplicial::Simplex;

namespace {

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string string_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) throw ValidationError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int int_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_number_integer()) throw ValidationError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

const json& array_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_array()) throw ValidationError(std::string("field \"") + key + "\" must be an array");
    return v;
}

Simplex simplex_of(const json& v) {
    if (!v.is_array() || v.empty()) throw ValidationError("a simplex must be a nonempty array of vertex labels");
    Simplex s;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ValidationError("vertex labels must be integers");
        s.push_back(x.get<int>());
    }
    return s;
}

Rational rational_of(const json& v) {
    if (!v.is_string()) throw ValidationError("rational values must be strings such as \"1/3\", got " + v.dump());
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

Integer integer_of(const json& v) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    Rational q = rational_of(v);
    if (q.get_den() != 1) throw ValidationError("integral value expected, got " + to_string(q));
    return q.get_num();
}

std::size_t index_in(const SimplicialComplex& K, int n, const Simplex& s, const std::string& where) {
    if (static_cast<int>(s.size()) != n + 1)
        throw ValidationError(where + ": simplex " + simplicial::to_string(s) + " does not have degree " +
                              std::to_string(n));
    auto i = K.index_of(s);
    if (!i) throw ValidationError(where + ": simplex " + simplicial::to_string(s) + " is not in the complex");
    return *i;
}

// Sparse [[simplex, value], ...] into a dense vector over the degree-n simplices of K.
template <typename V, typename Parse>
V sparse(const json& entries, const SimplicialComplex& K, int n, const std::string& where, Parse parse) {
    V out(n >= 0 && n <= K.dimension() ? K.count(n) : 0);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2) throw ValidationError(where + ": entries must be [simplex, value] pairs");
        out[index_in(K, n, simplex_of(e[0]), where)] += parse(e[1]);
    }
    return out;
}

RatVector rational_cochain(const json& obj, const char* key, const SimplicialComplex& K, int n) {
    if (!obj.contains(key)) return RatVector(n >= 0 && n <= K.dimension() ? K.count(n) : 0);
    return sparse<RatVector>(array_field(obj, key), K, n, key, rational_of);
}

IntVector integer_cochain(const json& obj, const char* key, const SimplicialComplex& K, int n) {
    if (!obj.contains(key)) return IntVector(n >= 0 && n <= K.dimension() ? K.count(n) : 0);
    return sparse<IntVector>(array_field(obj, key), K, n, key, integer_of);
}

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw UnknownReference(std::string("unknown ") + what + " '" + name + "'");
    return it->second;
}

template <typename M>
void fresh(const M& m, const std::string& name, const char* what) {
    if (m.count(name)) throw ValidationError(std::string("duplicate ") + what + " '" + name + "'");
}

void add_record(Workspace& ws, const json& rec) {
    if (!rec.is_object()) throw ValidationError("each line must be a JSON object");
    const std::string kind = string_field(rec, "kind");
    const std::string name = string_field(rec, "name");
    if (kind == "complex") {
        fresh(ws.complexes, name, "complex");
        std::vector<Simplex> facets;
        for (const auto& f : array_field(rec, "facets")) facets.push_back(simplex_of(f));
        ws.complexes.emplace(name, std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(facets)));
    } else if (kind == "map") {
        fresh(ws.maps, name, "map");
        auto source = lookup(ws.complexes, string_field(rec, "source"), "complex");
        auto target = lookup(ws.complexes, string_field(rec, "target"), "complex");
        std::map<int, int> vm;
        for (const auto& e : array_field(rec, "vertices")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ValidationError("vertices must be [source, target] pairs of integers");
            if (!vm.emplace(e[0].get<int>(), e[1].get<int>()).second)
                throw ValidationError("vertex " + e[0].dump() + " is mapped twice");
        }
        ws.maps.emplace(name, SimplicialMap(source, target, vm));
    } else if (kind == "character") {
        fresh(ws.characters, name, "character");
        fresh(ws.relative_characters, name, "character");
        const std::string cx = string_field(rec, "complex");
        const SimplicialComplex& K = ws.complex(cx);
        const int p = int_field(rec, "degree");
        if (p < 0) throw ValidationError("degree must be nonnegative");
        auto space = characters::character_space(K, p);
        auto rep = space.make(rational_cochain(rec, "T", K, p), integer_cochain(rec, "c", K, p + 1));
        ws.characters.emplace(name, Workspace::AbsoluteCharacter{cx, rep});
    } else if (kind == "relative_character") {
        fresh(ws.characters, name, "character");
        fresh(ws.relative_characters, name, "character");
        const std::string mname = string_field(rec, "map");
        const SimplicialMap& f = ws.map(mname);
        const int p = int_field(rec, "degree");
        const characters::RelType type =
            rec.contains("type") ? characters::parse_rel_type(string_field(rec, "type")) : characters::RelType::II;
        characters::RelativeCharacterSpace space(f, p);
        auto rep = space.make_relative(
            rational_cochain(rec, "T_X", f.target(), p), rational_cochain(rec, "T_Y", f.source(), p - 1),
            integer_cochain(rec, "c_X", f.target(), p + 1), integer_cochain(rec, "c_Y", f.source(), p), type);
        ws.relative_characters.emplace(name, Workspace::RelativeCharacter{mname, rep});
    } else if (kind == "cycle") {
        fresh(ws.cycles, name, "cycle");
        fresh(ws.relative_cycles, name, "cycle");
        const std::string cx = string_field(rec, "complex");
        const SimplicialComplex& K = ws.complex(cx);
        const int n = int_field(rec, "degree");
        ws.cycles.emplace(name, Workspace::AbsoluteCycle{cx, Chain{n, integer_cochain(rec, "chain", K, n)}});
    } else if (kind == "relative_cycle") {
        fresh(ws.cycles, name, "cycle");
        fresh(ws.relative_cycles, name, "cycle");
        const std::string mname = string_field(rec, "map");
        const SimplicialMap& f = ws.map(mname);
        const int n = int_field(rec, "degree");
        simplicial::RelativeCycle z{Chain{n, integer_cochain(rec, "C", f.target(), n)},
                                    Chain{n - 1, integer_cochain(rec, "C_prime", f.source(), n - 1)}};
        ws.relative_cycles.emplace(name, Workspace::RelativeCycle{mname, z});
    } else {
        throw ValidationError("unknown record kind '" + kind +
                              "' (expected complex, map, character, relative_character, cycle or relative_cycle)");
    }
}

}  // namespace

const SimplicialComplex& Workspace::complex(const std::string& name) const {
    return *lookup(complexes, name, "complex");
}

const SimplicialMap& Workspace::map(const std::string& name) const { return lookup(maps, name, "map"); }

Workspace parse_workspace(const std::string& text, const std::string& source) {
    Workspace ws;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = source + ":" + std::to_string(number) + ": ";
        try {
            add_record(ws, json::parse(line));
        } catch (const json::parse_error& e) {
            throw ValidationError(where + "malformed JSON: " + e.what());
        } catch (const UnknownReference& e) {
            throw UnknownReference(where + e.what());
        } catch (const PreconditionError& e) {
            throw PreconditionError(where + e.what());
        } catch (const std::exception& e) {
            throw ValidationError(where + e.what());
        }
    }
    return ws;
}

Workspace load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read workspace file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_workspace(ss.str(), path);
}

}  // namespace delcoh::cli
