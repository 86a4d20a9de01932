#pragma once

#include "delcoh/characters/character.hpp"
#include "delcoh/characters/relative.hpp"
#include "delcoh/simplicial/complex.hpp"
#include "delcoh/simplicial/fundamental.hpp"

#include <map>
#include <memory>
#include <string>

namespace delcoh::cli {

// Named objects loaded from a workspace file. Every entry has been validated
// and every reference resolved at load time.
struct Workspace {
    struct AbsoluteCharacter {
        std::string complex;
        characters::CharacterRep rep;
    };
    struct RelativeCharacter {
        std::string map;
        characters::RelCharacterRep rep;
    };
    struct AbsoluteCycle {
        std::string complex;
        simplicial::Chain chain;
    };
    struct RelativeCycle {
        std::string map;
        simplicial::RelativeCycle cycle;
    };

    std::map<std::string, std::shared_ptr<const simplicial::SimplicialComplex>> complexes;
    std::map<std::string, simplicial::SimplicialMap> maps;
    std::map<std::string, AbsoluteCharacter> characters;
    std::map<std::string, RelativeCharacter> relative_characters;
    std::map<std::string, AbsoluteCycle> cycles;
    std::map<std::string, RelativeCycle> relative_cycles;

    // Throw UnknownReference for missing names.
    const simplicial::SimplicialComplex& complex(const std::string& name) const;
    const simplicial::SimplicialMap& map(const std::string& name) const;
};

// One JSON object per line; blank lines are ignored. Errors are prefixed with
// "source:line: ". Malformed or invalid records throw ValidationError,
// references to names not defined on an earlier line throw UnknownReference.
Workspace parse_workspace(const std::string& text, const std::string& source = "<workspace>");
Workspace load_workspace(const std::string& path);

}  // namespace delcoh::cli
