#pragma once

#include <string>
#include <vector>

#include "holowedge/pauli.hpp"
#include "holowedge/pauli_basis.hpp"

namespace holowedge {

/*
 * A stabilizer state on 2N legs, viewed as the encoding tensor of a
 * [[2N-1, 1]] code by lowering leg 0 (the bulk leg). state_gens generate
 * the stabilizer group of the 2N-leg state; code_stabilizers and the
 * logical pair describe the induced code on the 2N-1 planar legs.
 */
struct StabilizerTensor {
    int legs = 0;                          // 2N
    std::vector<Pauli> state_gens;         // 2N generators on the legs
    std::vector<Pauli> code_stabilizers;   // 2N-2 generators on planar legs
    Pauli logical_x, logical_z;            // on planar legs
    std::string name;

    int planar_legs() const { return legs - 1; }

    // Build from a code description: stabilizers on 2N-1 planar legs plus
    // one anticommuting logical pair. state_gens become
    // { I (x) S_r } + { X_bulk (x) LX, Z_bulk (x) LZ }.
    static StabilizerTensor from_code(std::vector<Pauli> stabilizers,
                                      Pauli logical_x, Pauli logical_z,
                                      std::string name = "custom");

    // The 6-leg perfect tensor of the [[5,1,3]] code.
    static StabilizerTensor five_qubit();

    // The 8-leg block-perfect tensor of the [[7,1,3]] code in its cyclic
    // labeling (stabilizer supports are complements of the Fano lines
    // {t, t+1, t+3}); no weight-3 logical lies in a cyclic 3-window, which
    // is what the {3,7} network pushes rely on.
    static StabilizerTensor steane();

    // Built-in lookup by name ("five-qubit", "steane").
    static StabilizerTensor builtin(const std::string& name);

    // Checks commutation, independence, -I-freeness of state_gens and the
    // induced-code relations. Throws std::invalid_argument on violation.
    void validate() const;
};

}  // namespace holowedge
