#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "holowedge/pauli.hpp"

namespace holowedge {

/*
 * Dense helpers for desk-scale verification. Basis index convention: leg 0
 * is the most significant bit, so a state on m legs has amplitude
 * amps[b_0 b_1 ... b_{m-1}].
 */

// The unique (up to phase) joint +1 eigenstate of 2N independent commuting
// generators, normalized with a deterministic global phase (first nonzero
// amplitude real positive).
Eigen::VectorXcd dense_state(const std::vector<Pauli>& gens);

// P |v> for a signed Pauli.
Eigen::VectorXcd apply_pauli(const Pauli& p, const Eigen::VectorXcd& v);

struct PerfectnessReport {
    bool pass = false;
    // Each failing leg subset, smallest first; empty when pass.
    std::vector<std::vector<int>> failures;
};

// Perfect-tensor check: for every leg subset of size <= N the induced
// 2^m x 2^(2N-m) matrix must be a scaled isometry. Throws on input whose
// length is not a power of two or exceeds 2^8.
PerfectnessReport check_perfect(const Eigen::VectorXcd& amps, double tol = 1e-9);

// Same test restricted to cyclically consecutive index windows.
PerfectnessReport check_block_perfect(const Eigen::VectorXcd& amps, double tol = 1e-9);

// Encoding isometry of a state on (inputs + outputs) legs, lowering the
// first `num_inputs` legs: V has 2^outputs rows and 2^inputs columns and
// satisfies V^dagger V = I when the state is maximally entangled across
// the cut.
Eigen::MatrixXcd isometry_from_state(const Eigen::VectorXcd& amps, int num_inputs);

// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);

}  // namespace holowedge
