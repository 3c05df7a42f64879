#include "holowedge/pauli_basis.hpp"

#include <stdexcept>

namespace holowedge {

namespace {

// Lowest nonzero echelon column (X block first), or 2n when symplectically zero.
size_t pivot_column(const Pauli& p) {
    size_t n = p.num_sites();
    size_t px = p.x.lowest();
    if (px < n) return px;
    size_t pz = p.z.lowest();
    return pz < n ? n + pz : 2 * n;
}

}  // namespace

bool PauliBasis::is_abelian() const {
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = i + 1; j < rows_.size(); ++j)
            if (!rows_[i].commutes_with(rows_[j])) return false;
    return true;
}

PauliBasis canonicalize(std::vector<Pauli> gens) {
    PauliBasis b;
    if (gens.empty()) return b;
    b.n_ = gens[0].num_sites();
    for (const auto& g : gens)
        if (g.num_sites() != b.n_)
            throw std::invalid_argument("canonicalize: mixed site counts");

    for (auto& g : gens) {
        // Reduce against the existing echelon rows.
        for (size_t r = 0; r < b.rows_.size(); ++r)
            if (symplectic_bit(g, b.pivots_[r])) g.multiply_inplace(b.rows_[r]);
        size_t piv = pivot_column(g);
        if (piv == 2 * b.n_) {
            // Dependent generator; record any scalar it leaves behind.
            if (g.phase != 0) {
                uint8_t e = g.phase;
                if (b.scalar_exponent_ == 0 || e < b.scalar_exponent_)
                    b.scalar_exponent_ = (e == 3) ? 1 : e;
            }
            continue;
        }
        // Back-substitute into earlier rows, then insert keeping pivots sorted.
        for (size_t r = 0; r < b.rows_.size(); ++r)
            if (symplectic_bit(b.rows_[r], piv)) b.rows_[r].multiply_inplace(g);
        size_t at = 0;
        while (at < b.pivots_.size() && b.pivots_[at] < piv) ++at;
        b.rows_.insert(b.rows_.begin() + at, g);
        b.pivots_.insert(b.pivots_.begin() + at, piv);
    }
    return b;
}

std::optional<Membership> member(const Pauli& p, const PauliBasis& basis) {
    if (p.num_sites() != basis.num_sites())
        throw std::invalid_argument("member: site count mismatch");
    Pauli rem = p;
    BitVec combo(basis.rank());
    for (size_t r = 0; r < basis.rank(); ++r) {
        if (symplectic_bit(rem, basis.pivots()[r])) {
            rem.multiply_inplace(basis.row(r));
            combo.set(r, true);
        }
    }
    if (!rem.symplectic_identity()) return std::nullopt;
    // rem = rows_combo^dagger-ish residue; rebuild the product in ascending
    // order to compare phases exactly.
    Pauli prod = Pauli::identity(basis.num_sites());
    for (size_t r = 0; r < basis.rank(); ++r)
        if (combo.get(r)) prod.multiply_inplace(basis.row(r));
    return Membership{combo, prod.phase != p.phase};
}

CleanSolver::CleanSolver(const PauliBasis& group, const BitVec& region_mask)
    : mask_(region_mask), n_(group.num_sites()) {
    for (size_t i = 0; i < group.rank(); ++i) {
        Pauli res = group.row(i).masked(mask_);
        Pauli full = group.row(i);
        // Reduce against existing echelon rows of the restriction.
        for (size_t r = 0; r < restricted_.size(); ++r) {
            if (symplectic_bit(res, pivots_[r])) {
                res.multiply_inplace(restricted_[r]);
                full.multiply_inplace(full_[r]);
            }
        }
        size_t piv = pivot_column(res);
        if (piv == 2 * n_) continue;  // restriction dependent; skip
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < piv) ++at;
        restricted_.insert(restricted_.begin() + at, res);
        full_.insert(full_.begin() + at, full);
        pivots_.insert(pivots_.begin() + at, piv);
    }
}

bool CleanSolver::can_clean(const Pauli& p) const {
    Pauli res = p.masked(mask_);
    for (size_t r = 0; r < restricted_.size(); ++r)
        if (symplectic_bit(res, pivots_[r])) res.multiply_inplace(restricted_[r]);
    return res.symplectic_identity();
}

std::optional<Pauli> CleanSolver::clean(const Pauli& p) const {
    Pauli res = p.masked(mask_);
    Pauli out = p;
    for (size_t r = 0; r < restricted_.size(); ++r) {
        if (symplectic_bit(res, pivots_[r])) {
            res.multiply_inplace(restricted_[r]);
            out.multiply_inplace(full_[r]);
        }
    }
    if (!res.symplectic_identity()) return std::nullopt;
    return out;
}

PauliBasis supported_subbasis(const PauliBasis& group, const BitVec& region_mask) {
    // Echelonize restrictions to the complement; rows whose restriction
    // vanishes span exactly the elements supported inside the region.
    BitVec outside = region_mask.complemented();
    std::vector<Pauli> kernel;
    std::vector<Pauli> ech, full;
    std::vector<size_t> pivots;
    size_t n = group.num_sites();
    for (size_t i = 0; i < group.rank(); ++i) {
        Pauli res = group.row(i).masked(outside);
        Pauli f = group.row(i);
        for (size_t r = 0; r < ech.size(); ++r) {
            if (symplectic_bit(res, pivots[r])) {
                res.multiply_inplace(ech[r]);
                f.multiply_inplace(full[r]);
            }
        }
        size_t piv = pivot_column(res);
        if (piv == 2 * n) {
            kernel.push_back(f);
        } else {
            size_t at = 0;
            while (at < pivots.size() && pivots[at] < piv) ++at;
            ech.insert(ech.begin() + at, res);
            full.insert(full.begin() + at, f);
            pivots.insert(pivots.begin() + at, piv);
        }
    }
    return canonicalize(std::move(kernel));
}

std::optional<Pauli> clean_onto(const Pauli& p, const PauliBasis& group,
                                const BitVec& region_mask) {
    return CleanSolver(group, region_mask).clean(p);
}

Decomposer::Decomposer(std::vector<Pauli> gens) : gens_(std::move(gens)) {
    if (!gens_.empty()) n_ = gens_[0].num_sites();
    for (size_t i = 0; i < gens_.size(); ++i) {
        Pauli row = gens_[i];
        BitVec combo(gens_.size());
        combo.set(i, true);
        for (size_t r = 0; r < ech_.size(); ++r) {
            if (symplectic_bit(row, pivots_[r])) {
                row.multiply_inplace(ech_[r]);
                combo.xor_with(ech_combo_[r]);
            }
        }
        size_t piv = pivot_column(row);
        if (piv == 2 * n_) continue;  // dependent generator
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < piv) ++at;
        ech_.insert(ech_.begin() + at, row);
        ech_combo_.insert(ech_combo_.begin() + at, combo);
        pivots_.insert(pivots_.begin() + at, piv);
    }
}

std::optional<BitVec> Decomposer::decompose(const Pauli& p) const {
    Pauli rem = p;
    BitVec combo(gens_.size());
    for (size_t r = 0; r < ech_.size(); ++r) {
        if (symplectic_bit(rem, pivots_[r])) {
            rem.multiply_inplace(ech_[r]);
            combo.xor_with(ech_combo_[r]);
        }
    }
    if (!rem.symplectic_identity()) return std::nullopt;
    return combo;
}

Pauli Decomposer::reconstruct(const BitVec& combo) const {
    Pauli prod = Pauli::identity(n_);
    for (size_t i = 0; i < gens_.size(); ++i)
        if (combo.get(i)) prod.multiply_inplace(gens_[i]);
    return prod;
}

}  // namespace holowedge
