#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "aop/families.hpp"
#include "aop/game.hpp"

namespace aop {

struct ParseError : Error {
    using Error::Error;
};

// One JSON document per file: {"n": .., "edges": [[u,v],..], "t": [..]},
// optionally a "family" block {kind,p,q} (validated against the edge set) and
// coordinate "labels".
struct InstanceFile {
    Instance instance;
    std::optional<FamilySpec> family;
    std::vector<std::string> labels;
};

InstanceFile read_instance(std::istream& in);
InstanceFile parse_instance(const std::string& text);
std::string instance_to_json(const Instance& inst, const std::optional<FamilySpec>& family,
                             bool with_labels = true);

std::string orientation_to_json(const Orientation& o);
Orientation parse_orientation(const std::string& text);

std::string order_to_json(const EliminationOrder& ord);
EliminationOrder parse_order(const std::string& text);

// DOT export; vertices in T are filled black, the rest white. Directed output
// when an orientation is supplied.
std::string to_dot(const Instance& inst, const Orientation* orientation = nullptr,
                   const std::vector<std::string>* labels = nullptr);

}  // namespace aop
