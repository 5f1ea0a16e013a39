#pragma once

#include <map>
#include <optional>
#include <string>

#include "jetvpa/affine.hpp"
#include "jetvpa/diffalg.hpp"
#include "jetvpa/poly_io.hpp"
#include "jetvpa/vpa.hpp"

namespace jetvpa {

// Parsed job input: a plain-text file with named sections
//   [presentation]  generators = N / names = a b c / relation = <poly>
//   [brackets]      generators = N / names = a b c / {a,b} = <poly>
//   [lie_algebra]   dimension = N / basis = a b c / c i j k = <rational>
//   [options]       key = value
// '#' starts a comment; blank lines are ignored. Every malformed line
// raises a ParseError carrying its position.
struct InputDoc {
    std::optional<Presentation> presentation;
    std::optional<PoissonStructure> brackets;  // not yet validated
    std::optional<LieAlgebraData> lie;
    std::map<std::string, std::string> options;
    std::map<std::string, VarId> names;  // generator names from any section
};

InputDoc parse_input(const std::string& text);

}  // namespace jetvpa
