#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holowedge/bit_vector.hpp"

namespace holowedge {

/*
 * A subset of the n boundary sites of a code, which live on a cycle in
 * boundary order. Connected regions are exactly the cyclic intervals; those
 * carry an (start, length) interval fast path.
 */
class Region {
public:
    Region() = default;
    explicit Region(size_t n) : n_(n), sites_(n) {}
    Region(size_t n, BitVec sites) : n_(n), sites_(std::move(sites)) {}

    static Region empty(size_t n) { return Region(n); }
    static Region full(size_t n) {
        Region r(n);
        r.sites_ = r.sites_.complemented();
        return r;
    }
    // Cyclic interval of `len` sites starting at `start` (len <= n).
    static Region interval(size_t n, size_t start, size_t len);
    static Region of_sites(size_t n, const std::vector<size_t>& sites);

    // Interval syntax "a..b" (inclusive, cyclic) or "{a,b,c}".
    static Region parse(size_t n, const std::string& text);

    size_t boundary_size() const { return n_; }
    size_t size() const { return sites_.count(); }
    bool contains(size_t i) const { return sites_.get(i); }
    const BitVec& mask() const { return sites_; }

    Region complemented() const { return Region(n_, sites_.complemented()); }
    Region united(const Region& o) const {
        Region r(*this);
        r.sites_.or_with(o.sites_);
        return r;
    }
    Region intersected(const Region& o) const {
        Region r(*this);
        r.sites_.and_with(o.sites_);
        return r;
    }

    // True iff the sites form a single cyclic interval (empty and full count).
    bool connected() const;
    // (start, length) when connected; empty region reports (0, 0), the full
    // region (0, n).
    std::optional<std::pair<size_t, size_t>> as_interval() const;

    // All sites within cyclic distance d of the region. The empty region
    // stays empty.
    Region ball(size_t d) const;

    std::vector<size_t> site_list() const;
    std::string to_string() const;  // interval syntax when connected

    friend bool operator==(const Region& a, const Region& b) {
        return a.n_ == b.n_ && a.sites_ == b.sites_;
    }

private:
    size_t n_ = 0;
    BitVec sites_;
};

}  // namespace holowedge
