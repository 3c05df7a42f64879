#pragma once

#include <memory>
#include <string>
#include <vector>

#include "holowedge/pauli.hpp"
#include "holowedge/pauli_basis.hpp"
#include "holowedge/region.hpp"
#include "holowedge/tiling.hpp"

namespace holowedge {

struct LogicalPair {
    Pauli x, z;  // boundary representatives
};

/*
 * A stabilizer subsystem code on n boundary qubits, indexed 0..n-1 in
 * cyclic boundary order, with one encoded qubit per bulk site. A choice of
 * protected bulk set s splits the encoded qubits into logical (s) and junk
 * (the rest); the per-site pairs fix one concrete tensor product structure.
 */
struct SubsystemCode {
    size_t n = 0;
    PauliBasis stabilizers;
    std::vector<LogicalPair> bulk;
    std::string name;

    // Set when the code came out of a tiling contraction; bulk site i
    // lives on tiling vertex bulk_vertex[i].
    std::shared_ptr<const Tiling> geometry;
    std::vector<int> bulk_vertex;

    size_t bulk_count() const { return bulk.size(); }

    // Generators of the bare-CSP Pauli group for logical choice s:
    // stabilizers plus the logical pairs of the sites in s.
    std::vector<Pauli> bare_generators(const BitVec& s) const;
    // Stabilizers plus the pairs of every site NOT in s (the junk dressing).
    std::vector<Pauli> dressing_generators(const BitVec& s) const;
    // Stabilizers plus all pairs: the full centralizer of the stabilizer group.
    std::vector<Pauli> centralizer_generators() const;

    BitVec all_bulk() const {
        BitVec b(bulk.size());
        return b.complemented();
    }
    BitVec bulk_set(const std::vector<size_t>& sites) const;

    // Invariants: abelian -I-free stabilizers, anticommuting pairs that
    // commute across sites and with the stabilizers. Throws on violation.
    void validate() const;

    // Single-tensor [[5,1,3]] code (layer-0 contraction of the five-qubit
    // tensor).
    static SubsystemCode five_qubit();

    // 2x2 Bacon-Shor-style gauge code: stabilizers XXXX, ZZZZ; encoded
    // qubit 0 = (XIXI, ZZII), encoded qubit 1 = (XXII, ZIZI).
    static SubsystemCode bacon_shor_22();
};

}  // namespace holowedge
