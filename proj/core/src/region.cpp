#include "holowedge/region.hpp"

#include <sstream>
#include <stdexcept>

namespace holowedge {

Region Region::interval(size_t n, size_t start, size_t len) {
    if (len > n) throw std::invalid_argument("interval longer than boundary");
    Region r(n);
    for (size_t i = 0; i < len; ++i) r.sites_.set((start + i) % n, true);
    return r;
}

Region Region::of_sites(size_t n, const std::vector<size_t>& sites) {
    Region r(n);
    for (size_t s : sites) {
        if (s >= n) throw std::invalid_argument("site index out of range");
        r.sites_.set(s, true);
    }
    return r;
}

Region Region::parse(size_t n, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty region spec");
    if (text.front() == '{') {
        if (text.back() != '}') throw std::invalid_argument("unterminated region set");
        std::vector<size_t> sites;
        std::stringstream ss(text.substr(1, text.size() - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            sites.push_back(std::stoul(tok));
        }
        return of_sites(n, sites);
    }
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        size_t s = std::stoul(text);
        return of_sites(n, {s});
    }
    size_t a = std::stoul(text.substr(0, dots));
    size_t b = std::stoul(text.substr(dots + 2));
    if (a >= n || b >= n) throw std::invalid_argument("interval endpoint out of range");
    size_t len = (b + n - a) % n + 1;
    return interval(n, a, len);
}

bool Region::connected() const {
    return as_interval().has_value();
}

std::optional<std::pair<size_t, size_t>> Region::as_interval() const {
    size_t cnt = sites_.count();
    if (cnt == 0) return std::make_pair(size_t{0}, size_t{0});
    if (cnt == n_) return std::make_pair(size_t{0}, n_);
    // One falling edge on the cycle means one cyclic run.
    size_t edges = 0, fall = 0;
    for (size_t i = 0; i < n_; ++i) {
        bool cur = sites_.get(i), nxt = sites_.get((i + 1) % n_);
        if (cur && !nxt) {
            ++edges;
            fall = i;
        }
    }
    if (edges != 1) return std::nullopt;
    size_t start = (fall + n_ - (cnt - 1)) % n_;
    // Verify the run is contiguous (guards against multiple runs with one
    // falling edge being impossible anyway; cheap sanity).
    return std::make_pair(start, cnt);
}

Region Region::ball(size_t d) const {
    Region r(*this);
    if (sites_.none()) return r;
    for (size_t step = 0; step < d; ++step) {
        if (r.sites_.count() == n_) break;
        BitVec grown = r.sites_;
        for (size_t i = 0; i < n_; ++i) {
            if (r.sites_.get(i)) {
                grown.set((i + 1) % n_, true);
                grown.set((i + n_ - 1) % n_, true);
            }
        }
        r.sites_ = grown;
    }
    return r;
}

std::vector<size_t> Region::site_list() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < n_; ++i)
        if (sites_.get(i)) out.push_back(i);
    return out;
}

std::string Region::to_string() const {
    auto iv = as_interval();
    if (iv && iv->second > 0 && iv->second < n_) {
        size_t a = iv->first, b = (iv->first + iv->second - 1) % n_;
        return std::to_string(a) + ".." + std::to_string(b);
    }
    if (iv && iv->second == n_) return "0.." + std::to_string(n_ - 1);
    std::string out = "{";
    bool first = true;
    for (size_t s : site_list()) {
        if (!first) out += ",";
        out += std::to_string(s);
        first = false;
    }
    return out + "}";
}

}  // namespace holowedge
