// JSON serialization of the engine's value types. Rational values are emitted
// as string num/den pairs so arbitrary precision survives the round trip.
#pragma once

#include "solint/geometry.hpp"
#include "solint/normalform.hpp"

#include <json.hpp>

namespace solint {

using json = nlohmann::json;

json toJson(const Rat& r);        // {"num": "...", "den": "..."}
json toJson(const Poly& p);       // canonical text form
json toJson(const VField& v);     // {"dx": ..., "dy": ..., "dz": ...}
json toJson(const Expansion& e);  // [{family,l,i,k,num,den}, ...]
json toJson(const NFResult& nf);  // {p, coeffs, invariantI, linearizable}
json toJson(const PotentialPair& p);
json toJson(const VectorPotential& p);
json toJson(const PlanarHamiltonian& h);

}  // namespace solint
