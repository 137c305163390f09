#ifndef HAMDEC_JSON_IO_HPP
#define HAMDEC_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hamdec/decomposition.hpp"
#include "hamdec/gamma.hpp"
#include "hamdec/jump_pairing.hpp"
#include "hamdec/multigraph.hpp"
#include "hamdec/product_decomp.hpp"
#include "hamdec/verify.hpp"

namespace hamdec {

/// A graph parsed from JSON, remembering the structured form when present.
struct LoadedGraph {
    MultiGraph graph;
    std::optional<CirculantSpec> circulant;
    std::optional<GammaGraph> gamma;
};

/// Accepts {"type":"circulant","n":..,"jumps":[..]},
/// {"type":"multigraph","n":..,"edges":[[u,v,mult],..]} and
/// {"type":"gamma","alpha":..,"k":..,"c":..} (type optional for gamma).
LoadedGraph load_graph(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Q2Certificate& cert);
Q2Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const JumpPairing& pairing);
nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const ProductDecomposition& pd);

/// One line per edge: "u v multiplicity", u < v, lexicographic.
std::string export_edgelist(const MultiGraph& g);

/// DOT rendering; circulant vertices labeled by group element, gamma
/// vertices by "(i,j)".
std::string export_dot(const LoadedGraph& lg);

} // namespace hamdec

#endif
