#pragma once

#include "lefzeta/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefzeta {

// A parsed space file: either a full ring presentation or, for spaces whose
// ring structure is not being supplied, just a Betti profile.
struct SpaceFile {
    std::string name;
    std::optional<RingPresentation> presentation;
    std::optional<std::vector<int>> betti_only;
};

SpaceFile parse_space_text(const std::string& text);
SpaceFile parse_space_file(const std::string& path);

// Serializers. Output is deterministic and stable under a parse/emit round
// trip: emitting a presentation, parsing the result, and emitting again
// produces byte-identical text.
std::string space_file_text(const RingPresentation& p);
std::string betti_file_text(const std::string& name, const std::vector<int>& betti);

// Parses a map file into generator images over `model`. Structural problems
// (bad JSON, missing keys, malformed coefficients, a generator repeated
// inside one monomial) are parse errors; names that do not belong to the
// model are validation errors.
std::map<std::string, AlgebraElement> parse_map_text(const std::string& text,
                                                     const ModelPtr& model);
std::map<std::string, AlgebraElement> parse_map_file(const std::string& path,
                                                     const ModelPtr& model);

}  // namespace lefzeta
