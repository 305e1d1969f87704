#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "dcqft/character_s1.hpp"
#include "dcqft/hadamard_dynamical.hpp"
#include "dcqft/mode_solver.hpp"
#include "dcqft/splittings.hpp"
#include "dcqft/topological_sector.hpp"

namespace dcqft {

using Json = nlohmann::json;

// Malformed or schema-violating input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path);

FourierCharacter character_from_json(const Json& j);
Json character_to_json(const FourierCharacter& h);
DynamicalDatum datum_from_json(const Json& j);
Json datum_to_json(const DynamicalDatum& d);

TopologicalElement topological_from_json(const Json& j);
Json topological_to_json(const TopologicalElement& x);
GnsVector gns_from_json(const Json& j);
Json gns_to_json(const GnsVector& v);

struct SpectrumInput {
    ModeSpectrum spectrum;
    ModeInitialData data;
};
// Slots are sorted by eigenvalue; equal eigenvalues merge into one entry.
SpectrumInput spectrum_from_json(const Json& j);

SplittingModel splitting_from_json(const Json& j);
TestForm test_form_from_json(const Json& j);

// {"k", "m", "n", "n_tilde", "initial": [amplitudes], "ops": [{"op": "U" | "Pi" | "Pi_tilde" |
// "R" | "R_tilde" | "T" | "T_tilde", ...}]}, momentum indices 0-based
struct GnsOp {
    enum class Kind { duality, momentum, momentum_tilde, rotation, rotation_tilde, translation, translation_tilde };
    Kind kind = Kind::duality;
    std::size_t index = 0;
    TorusVector u;
    IntVector v;
};

struct GnsScript {
    int k = 1;
    int m = 2;
    std::size_t n = 0;
    std::size_t n_tilde = 0;
    GnsVector initial;
    std::vector<GnsOp> ops;
};

GnsScript gns_script_from_json(const Json& j);

}  // namespace dcqft
