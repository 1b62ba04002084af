// Problem files: a small TOML subset (tables, arrays of tables, integer /
// boolean / string / nested-array values, # comments) carrying the space,
// an optional embedding, optional descent data, and an optional comparison
// presentation.
#ifndef SPHCOX_INPUT_HPP
#define SPHCOX_INPUT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphcox/brion.hpp"
#include "sphcox/classgroup.hpp"
#include "sphcox/datum.hpp"

namespace sphcox {

struct TomlValue {
    enum class Kind { Integer, Boolean, String, Array };
    Kind kind = Kind::Integer;
    Int integer;
    bool boolean = false;
    std::string str;
    std::vector<TomlValue> array;
};

using TomlTable = std::map<std::string, TomlValue>;

// section path ("", "space", "space.relations", ...) -> occurrences
using TomlDoc = std::map<std::string, std::vector<TomlTable>>;

TomlDoc parse_toml(const std::string& text);

struct Problem {
    SphericalDatum datum;
    bool embedding_given = false;
    std::vector<Vec> rays;  // [embedding] rays (empty when section absent)
    std::optional<BoldDatum> bold;
    bool bold_rays_given = false;
    std::vector<Vec> bold_rays;
    std::optional<WonderfulPresentation> wonderful;
};

Problem load_problem_text(const std::string& text);
Problem load_problem_file(const std::string& path);

} // namespace sphcox

#endif
