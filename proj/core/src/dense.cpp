#include "holowedge/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace holowedge {

namespace {

using cd = std::complex<double>;

const cd kPhase[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

int log2_exact(size_t dim) {
    int m = 0;
    while ((size_t(1) << m) < dim) ++m;
    if ((size_t(1) << m) != dim)
        throw std::invalid_argument("amplitude count is not a power of two");
    return m;
}

// Bit of basis index idx at leg position s (leg 0 most significant).
inline bool leg_bit(size_t idx, int m, int s) { return (idx >> (m - 1 - s)) & 1; }

}  // namespace

Eigen::VectorXcd apply_pauli(const Pauli& p, const Eigen::VectorXcd& v) {
    int m = int(p.num_sites());
    size_t dim = size_t(1) << m;
    if (size_t(v.size()) != dim) throw std::invalid_argument("dimension mismatch");
    size_t xmask = 0, zmask = 0;
    for (int s = 0; s < m; ++s) {
        if (p.x.get(s)) xmask |= size_t(1) << (m - 1 - s);
        if (p.z.get(s)) zmask |= size_t(1) << (m - 1 - s);
    }
    Eigen::VectorXcd out(dim);
    cd ph = kPhase[p.phase & 3];
    for (size_t b = 0; b < dim; ++b) {
        // i^phase X^x Z^z |b> = i^phase (-1)^(z.b) |b ^ x>
        cd amp = ph * v[b];
        if (std::popcount(b & zmask) & 1) amp = -amp;
        out[b ^ xmask] = amp;
    }
    return out;
}

Eigen::VectorXcd dense_state(const std::vector<Pauli>& gens) {
    if (gens.empty()) throw std::invalid_argument("need at least one generator");
    int m = int(gens[0].num_sites());
    size_t dim = size_t(1) << m;
    for (size_t seed = 0; seed < dim; ++seed) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v[seed] = 1.0;
        for (const auto& g : gens) v = 0.5 * (v + apply_pauli(g, v));
        double nrm = v.norm();
        if (nrm > 1e-9) {
            v /= nrm;
            // Deterministic global phase.
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                if (std::abs(v[i]) > 1e-9) {
                    v *= std::conj(v[i]) / std::abs(v[i]);
                    break;
                }
            }
            return v;
        }
    }
    throw std::invalid_argument("generators admit no joint +1 eigenstate");
}

namespace {

PerfectnessReport isometry_scan(const Eigen::VectorXcd& amps, double tol,
                                const std::vector<std::vector<int>>& subsets) {
    int m = log2_exact(size_t(amps.size()));
    PerfectnessReport rep;
    rep.pass = true;
    for (const auto& subset : subsets) {
        int a = int(subset.size());
        size_t rows = size_t(1) << a, cols = size_t(amps.size()) >> a;
        std::vector<int> rest;
        std::vector<bool> in(m, false);
        for (int s : subset) in[s] = true;
        for (int s = 0; s < m; ++s)
            if (!in[s]) rest.push_back(s);
        Eigen::MatrixXcd M(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) {
                size_t idx = 0;
                for (int i = 0; i < a; ++i)
                    if ((r >> (a - 1 - i)) & 1) idx |= size_t(1) << (m - 1 - subset[i]);
                for (size_t i = 0; i < rest.size(); ++i)
                    if ((c >> (rest.size() - 1 - i)) & 1)
                        idx |= size_t(1) << (m - 1 - rest[i]);
                M(r, c) = amps[idx];
            }
        }
        Eigen::MatrixXcd gram = M * M.adjoint();
        double scale = gram.trace().real() / double(rows);
        if ((gram - scale * Eigen::MatrixXcd::Identity(rows, rows)).norm() >
            tol * std::max(1.0, std::abs(scale)) * double(rows)) {
            rep.pass = false;
            rep.failures.push_back(subset);
        }
    }
    return rep;
}

}  // namespace

PerfectnessReport check_perfect(const Eigen::VectorXcd& amps, double tol) {
    int m = log2_exact(size_t(amps.size()));
    if (m > 8) throw std::invalid_argument("dense perfectness check is limited to 8 legs");
    std::vector<std::vector<int>> subsets;
    for (size_t bits = 1; bits < (size_t(1) << m); ++bits) {
        if (std::popcount(bits) > m / 2) continue;
        std::vector<int> subset;
        for (int s = 0; s < m; ++s)
            if ((bits >> s) & 1) subset.push_back(s);
        subsets.push_back(std::move(subset));
    }
    // Smallest subsets first so failure reports name a minimal bipartition.
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return isometry_scan(amps, tol, subsets);
}

PerfectnessReport check_block_perfect(const Eigen::VectorXcd& amps, double tol) {
    int m = log2_exact(size_t(amps.size()));
    if (m > 8) throw std::invalid_argument("dense perfectness check is limited to 8 legs");
    std::vector<std::vector<int>> windows;
    for (int len = 1; len <= m / 2; ++len) {
        for (int start = 0; start < m; ++start) {
            std::vector<int> w;
            for (int i = 0; i < len; ++i) w.push_back((start + i) % m);
            std::sort(w.begin(), w.end());
            windows.push_back(std::move(w));
        }
    }
    return isometry_scan(amps, tol, windows);
}

Eigen::MatrixXcd isometry_from_state(const Eigen::VectorXcd& amps, int num_inputs) {
    int m = log2_exact(size_t(amps.size()));
    if (num_inputs < 0 || num_inputs > m)
        throw std::invalid_argument("bad input leg count");
    size_t cols = size_t(1) << num_inputs;
    size_t rows = size_t(amps.size()) >> num_inputs;
    Eigen::MatrixXcd V(rows, cols);
    double scale = std::sqrt(double(cols));
    for (size_t in = 0; in < cols; ++in)
        for (size_t out = 0; out < rows; ++out)
            V(out, in) = scale * amps[(in << (m - num_inputs)) | out];
    return V;
}

double trace_norm(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().sum();
}

}  // namespace holowedge
