#pragma once

#include <stdexcept>
#include <vector>

#include "holowedge/stabilizer_tensor.hpp"
#include "holowedge/subsystem_code.hpp"
#include "holowedge/tiling.hpp"

namespace holowedge {

// Raised when the Bell-pair elimination detects an inconsistent network
// (the contracted state vanishes) or a non-isometric bulk-to-boundary map.
class ContractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LegRef {
    int node = 0;
    int leg = 0;  // tensor leg; 0 is the bulk leg
};

/*
 * An explicit network of stabilizer tensors: one tensor per node, a wired
 * planar leg pair per edge, and the dangling planar legs listed in cyclic
 * boundary order. Every planar leg must be either wired once or appear
 * once on the boundary.
 */
struct NetworkSpec {
    std::vector<StabilizerTensor> tensors;
    std::vector<std::pair<LegRef, LegRef>> edges;
    std::vector<LegRef> boundary;
};

/*
 * Contract the network in the stabilizer formalism: the joint group of all
 * tensor copies plus +XX/+ZZ Bell constraints on every wired pair is
 * Gaussian-eliminated over the internal leg columns (in the given edge
 * order), then over the bulk columns. Boundary-supported rows become the
 * code's stabilizers; the single-bulk-pivot rows become boundary logical
 * representatives, sign-normalized to +. Throws ContractionError when the
 * constraints are inconsistent or when some bulk Pauli has no boundary
 * representative (the network is not an isometry).
 */
SubsystemCode contract_network(const NetworkSpec& spec);

// Place one copy of `tensor` on every tiling vertex, wire legs per the
// tiling's cyclic leg order, and contract. Internal columns are eliminated
// layer-by-layer from the outermost layer inward.
SubsystemCode contract(const Tiling& t, const StabilizerTensor& tensor);

}  // namespace holowedge
