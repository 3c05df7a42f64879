#pragma once

#include <optional>
#include <vector>

#include "holowedge/pauli.hpp"

namespace holowedge {

/*
 * Reduced row-echelon basis of a Pauli group over the 2n-column symplectic
 * matrix. Columns 0..n-1 are the X block, n..2n-1 the Z block; each row's
 * pivot is its lowest set column, pivots strictly increase down the rows.
 *
 * Row products track phases exactly, so the generated group (including
 * signs) is the same as that of the input generators. Generators that
 * reduce to the identity may leave behind a scalar; the smallest such
 * i-power is recorded in scalar_exponent (0 when the group is scalar-free,
 * 2 when it contains -I, 1 when it contains iI).
 */
class PauliBasis {
public:
    PauliBasis() = default;
    explicit PauliBasis(size_t n) : n_(n) {}

    size_t num_sites() const { return n_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<Pauli>& rows() const { return rows_; }
    const Pauli& row(size_t i) const { return rows_[i]; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    uint8_t scalar_exponent() const { return scalar_exponent_; }
    bool contains_minus_identity() const {
        return scalar_exponent_ != 0;
    }

    bool is_abelian() const;

    friend PauliBasis canonicalize(std::vector<Pauli> gens);
    friend class CleanSolver;

private:
    size_t n_ = 0;
    std::vector<Pauli> rows_;
    std::vector<size_t> pivots_;
    uint8_t scalar_exponent_ = 0;
};

// Symplectic bit of p at echelon column c (X block first).
inline bool symplectic_bit(const Pauli& p, size_t c) {
    size_t n = p.num_sites();
    return c < n ? p.x.get(c) : p.z.get(c - n);
}

// Echelon-reduce a generating list. Deterministic for a fixed input order;
// idempotent on scalar-free groups. Empty input gives rank 0.
PauliBasis canonicalize(std::vector<Pauli> gens);

struct Membership {
    BitVec combination;   // over the basis rows, ascending order
    bool phase_mismatch;  // reconstructed phase differs from the target's
};

/*
 * GF(2) membership of p's symplectic part in the span of the basis. The
 * reconstructed phase multiplies the selected rows in ascending row order;
 * for abelian bases (stabilizer groups) this makes phase_mismatch an exact
 * group-membership test, which is what the -I notin S checks rely on.
 */
std::optional<Membership> member(const Pauli& p, const PauliBasis& basis);

/*
 * Support-restricted solver: echelonizes a group's restriction to a site
 * mask once, then answers many cleaning queries against it. clean(p)
 * returns p*g for some g in the span with the product supported entirely
 * off the mask, when such g exists.
 */
class CleanSolver {
public:
    CleanSolver(const PauliBasis& group, const BitVec& region_mask);

    bool can_clean(const Pauli& p) const;
    std::optional<Pauli> clean(const Pauli& p) const;

private:
    BitVec mask_;
    size_t n_ = 0;
    std::vector<Pauli> restricted_;  // rows masked to the region, echelonized
    std::vector<Pauli> full_;        // matching full-support rows
    std::vector<size_t> pivots_;     // pivot columns of restricted_
};

// Basis of all span elements supported inside the region mask (the kernel
// of the restriction map to the complement).
PauliBasis supported_subbasis(const PauliBasis& group, const BitVec& region_mask);

// Convenience form of the cleaning primitive.
std::optional<Pauli> clean_onto(const Pauli& p, const PauliBasis& group,
                                const BitVec& region_mask);

/*
 * Echelon decomposition over an ordered generator list that is kept as
 * given (not re-echelonized), so combinations refer to the caller's
 * generators. reconstruct() multiplies the selected generators in list
 * order with exact phases.
 */
class Decomposer {
public:
    explicit Decomposer(std::vector<Pauli> gens);

    std::optional<BitVec> decompose(const Pauli& p) const;  // combo over gens
    Pauli reconstruct(const BitVec& combo) const;
    size_t num_gens() const { return gens_.size(); }

private:
    size_t n_ = 0;
    std::vector<Pauli> gens_;
    std::vector<Pauli> ech_;        // echelonized products
    std::vector<BitVec> ech_combo_;  // combination of gens_ forming each ech_ row
    std::vector<size_t> pivots_;
};

}  // namespace holowedge
