#pragma once

#include <json.hpp>
#include <string>

#include "ayrep/cells.hpp"
#include "ayrep/character.hpp"
#include "ayrep/representation.hpp"
#include "ayrep/tableau.hpp"
#include "ayrep/tops.hpp"

namespace ayrep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Tableau& T);
Json to_json(const SkewShape& shape);
Json to_json(const Cell& K);
/// Matrices as rows of "p/q" strings.
Json to_json(const Representation& rep);
Json to_json(const FloatRepresentation& rep);
Json to_json(const Character& chi, const ConjugacyClasses& classes);
Json to_json(const TopReport& report);

/// Hasse diagram of the cell under right weak order. Edges w -> ws point
/// up and carry the generator with the (a, b) pair read off rho_s at C_w.
std::string to_dot(const Representation& rep);
/// Same diagram without coefficients, for cells that carry no representation.
std::string to_dot(const Cell& K);

}  // namespace ayrep
