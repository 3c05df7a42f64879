#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holowedge/bit_vector.hpp"

namespace holowedge {

/*
 * A signed Pauli string on n sites, stored as i^phase * X^x Z^z with the
 * phase exponent tracked mod 4 globally. In this convention Y = i XZ, so a
 * string is Hermitian exactly when phase == Y-count (mod 2).
 */
struct Pauli {
    BitVec x, z;
    uint8_t phase = 0;  // exponent of i, mod 4

    Pauli() = default;
    explicit Pauli(size_t n) : x(n), z(n) {}

    size_t num_sites() const { return x.size(); }

    static Pauli identity(size_t n) { return Pauli(n); }
    // letter in {'I','X','Y','Z'}; Y carries the i XZ phase so the result is Hermitian.
    static Pauli single(size_t n, size_t site, char letter);
    static Pauli from_string(const std::string& text);  // throws std::invalid_argument

    bool commutes_with(const Pauli& o) const {
        return !(x.parity_and(o.z) ^ z.parity_and(o.x));
    }

    Pauli multiplied(const Pauli& o) const {
        Pauli r(*this);
        r.phase = uint8_t((phase + o.phase + 2 * (z.count_and(o.x) & 1)) & 3);
        r.x.xor_with(o.x);
        r.z.xor_with(o.z);
        return r;
    }
    void multiply_inplace(const Pauli& o) {
        phase = uint8_t((phase + o.phase + 2 * (z.count_and(o.x) & 1)) & 3);
        x.xor_with(o.x);
        z.xor_with(o.z);
    }

    bool is_identity() const { return phase == 0 && x.none() && z.none(); }
    bool symplectic_identity() const { return x.none() && z.none(); }
    bool symplectic_equal(const Pauli& o) const { return x == o.x && z == o.z; }
    bool is_hermitian() const { return ((phase ^ x.count_and(z)) & 1) == 0; }

    size_t y_count() const { return x.count_and(z); }
    size_t weight() const {
        BitVec s = x;
        s.or_with(z);
        return s.count();
    }
    BitVec support() const {
        BitVec s = x;
        s.or_with(z);
        return s;
    }
    bool supported_within(const BitVec& mask) const {
        return x.subset_of(mask) && z.subset_of(mask);
    }

    // Adjoint: flips the sign of odd powers of i.
    Pauli adjoint() const {
        Pauli r(*this);
        if (r.phase & 1) r.phase ^= 2;
        return r;
    }

    // Keep only the sites selected by mask (identity elsewhere). The phase
    // is kept verbatim; callers that need an operator identity must track
    // the discarded factor themselves.
    Pauli masked(const BitVec& mask) const {
        Pauli r(*this);
        r.x.and_with(mask);
        r.z.and_with(mask);
        return r;
    }

    // Text form: optional sign prefix (+, -, +i, -i) then one of IXYZ per site.
    std::string to_string() const;

    friend bool operator==(const Pauli& a, const Pauli& b) {
        return a.phase == b.phase && a.x == b.x && a.z == b.z;
    }
};

}  // namespace holowedge
