#include "holowedge/network.hpp"

#include <algorithm>
#include <memory>

namespace holowedge {

namespace {

struct QubitMap {
    // qubit ids: internal pairs first (2 per edge, elimination order),
    // then one bulk qubit per node, then boundary legs in cyclic order.
    std::vector<std::vector<int>> leg_qubit;  // [node][leg] -> qubit id
    size_t num_internal = 0, num_nodes = 0, num_boundary = 0;
    size_t total() const { return num_internal + num_nodes + num_boundary; }
};

QubitMap build_map(const NetworkSpec& spec) {
    QubitMap m;
    m.num_nodes = spec.tensors.size();
    m.leg_qubit.resize(m.num_nodes);
    for (size_t v = 0; v < m.num_nodes; ++v)
        m.leg_qubit[v].assign(spec.tensors[v].legs, -1);

    int q = 0;
    for (const auto& [a, b] : spec.edges) {
        for (const LegRef& r : {a, b}) {
            if (r.leg <= 0 || r.leg >= spec.tensors[r.node].legs)
                throw std::invalid_argument("edge references an invalid planar leg");
            if (m.leg_qubit[r.node][r.leg] != -1)
                throw std::invalid_argument("leg wired twice");
            m.leg_qubit[r.node][r.leg] = q++;
        }
    }
    m.num_internal = q;
    for (size_t v = 0; v < m.num_nodes; ++v) m.leg_qubit[v][0] = q++;
    for (const LegRef& r : spec.boundary) {
        if (m.leg_qubit[r.node][r.leg] != -1)
            throw std::invalid_argument("boundary leg already used");
        m.leg_qubit[r.node][r.leg] = q++;
    }
    m.num_boundary = spec.boundary.size();
    for (size_t v = 0; v < m.num_nodes; ++v)
        for (int l = 0; l < spec.tensors[v].legs; ++l)
            if (m.leg_qubit[v][l] == -1)
                throw std::invalid_argument("planar leg neither wired nor on the boundary");
    return m;
}

Pauli embed_on(const Pauli& p, size_t total, const std::vector<int>& legmap) {
    Pauli out(total);
    out.phase = p.phase;
    for (size_t l = 0; l < p.num_sites(); ++l) {
        if (p.x.get(l)) out.x.set(legmap[l], true);
        if (p.z.get(l)) out.z.set(legmap[l], true);
    }
    return out;
}

}  // namespace

SubsystemCode contract_network(const NetworkSpec& spec) {
    const QubitMap map = build_map(spec);
    const size_t Q = map.total();
    const size_t V = map.num_nodes;
    const size_t n = map.num_boundary;

    std::vector<Pauli> rows;
    for (size_t v = 0; v < V; ++v)
        for (const auto& g : spec.tensors[v].state_gens)
            rows.push_back(embed_on(g, Q, map.leg_qubit[v]));
    for (const auto& [a, b] : spec.edges) {
        size_t qa = map.leg_qubit[a.node][a.leg], qb = map.leg_qubit[b.node][b.leg];
        Pauli xx(Q), zz(Q);
        xx.x.set(qa, true);
        xx.x.set(qb, true);
        zz.z.set(qa, true);
        zz.z.set(qb, true);
        rows.push_back(xx);
        rows.push_back(zz);
    }

    // Column priority: internal qubits, then bulk, then boundary; X before
    // Z within a qubit. Full reduction so each pivot column is cleared
    // everywhere else.
    auto col_bit = [Q](const Pauli& p, size_t col) {
        return col < Q ? p.x.get(col) : p.z.get(col - Q);
    };
    std::vector<size_t> order;
    for (size_t q = 0; q < Q; ++q) {
        order.push_back(q);
        order.push_back(Q + q);
    }

    std::vector<int> pivot_col(rows.size(), -1);
    std::vector<bool> used(rows.size(), false);
    std::vector<size_t> col_pivot_row;
    for (size_t col : order) {
        size_t r = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && col_bit(rows[i], col)) {
                r = i;
                break;
            }
        }
        if (r == rows.size()) continue;
        used[r] = true;
        pivot_col[r] = int(col);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && col_bit(rows[i], col)) rows[i].multiply_inplace(rows[r]);
    }

    // Dependent generators must reduce to +I; a leftover sign means the
    // Bell constraints annihilate the state.
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!used[i]) {
            if (!rows[i].symplectic_identity())
                throw std::logic_error("contraction elimination left an unpivoted row");
            if (rows[i].phase != 0)
                throw ContractionError("inconsistent network: contracted state vanishes");
        }
    }

    // Classify pivot rows by block. Bulk columns are q in [internal,
    // internal+V); their pivot rows carry exactly one bulk X or Z.
    const size_t bulk_lo = map.num_internal, bulk_hi = bulk_lo + V;
    auto col_qubit = [Q](size_t col) { return col < Q ? col : col - Q; };
    size_t bulk_pivots = 0;
    std::vector<Pauli> stab_rows;
    std::vector<LogicalPair> pairs(V, LogicalPair{Pauli(n), Pauli(n)});
    std::vector<bool> have_x(V, false), have_z(V, false);

    auto restrict_boundary = [&](const Pauli& row) {
        Pauli out(n);
        out.phase = row.phase;
        for (size_t b = 0; b < n; ++b) {
            size_t q = bulk_hi + b;
            out.x.set(b, row.x.get(q));
            out.z.set(b, row.z.get(q));
        }
        return out;
    };

    for (size_t i = 0; i < rows.size(); ++i) {
        if (pivot_col[i] < 0) continue;
        size_t q = col_qubit(size_t(pivot_col[i]));
        if (q < bulk_lo) continue;  // internal support only; not a state row
        if (q < bulk_hi) {
            ++bulk_pivots;
            size_t site = q - bulk_lo;
            bool is_x = size_t(pivot_col[i]) < Q;
            Pauli rep = restrict_boundary(rows[i]);
            rep.phase = uint8_t(rep.y_count() & 3);  // sign-normalize to +
            if (is_x) {
                pairs[site].x = rep;
                have_x[site] = true;
            } else {
                pairs[site].z = rep;
                have_z[site] = true;
            }
        } else {
            stab_rows.push_back(restrict_boundary(rows[i]));
        }
    }
    if (bulk_pivots != 2 * V) {
        for (size_t v = 0; v < V; ++v) {
            if (!have_x[v] || !have_z[v])
                throw ContractionError(
                    "network is not an isometry: bulk site " + std::to_string(v) +
                    " has no boundary representative for " + (have_x[v] ? "Z" : "X"));
        }
        throw ContractionError("network is not an isometry");
    }

    SubsystemCode code;
    code.n = n;
    code.stabilizers = canonicalize(stab_rows);
    code.bulk = std::move(pairs);
    if (code.stabilizers.rank() + 2 * V !=
        canonicalize(code.centralizer_generators()).rank())
        throw ContractionError("contracted group has inconsistent rank");
    code.validate();
    return code;
}

SubsystemCode contract(const Tiling& t, const StabilizerTensor& tensor) {
    if (tensor.planar_legs() != t.schlafli.k)
        throw std::invalid_argument("tensor has " + std::to_string(tensor.planar_legs()) +
                                    " planar legs but the tiling needs " +
                                    std::to_string(t.schlafli.k));
    NetworkSpec spec;
    spec.tensors.assign(t.num_vertices(), tensor);

    // Outermost layers first keeps intermediate row supports small.
    struct E {
        int layer;
        LegRef a, b;
    };
    std::vector<E> edges;
    for (int v = 0; v < t.num_vertices(); ++v) {
        for (int slot = 0; slot < t.schlafli.k; ++slot) {
            const auto& leg = t.legs[v][slot];
            if (leg.dangling() || leg.vertex < v) continue;
            edges.push_back({std::max(t.vertices[v].layer, t.vertices[leg.vertex].layer),
                             LegRef{v, slot + 1}, LegRef{leg.vertex, leg.slot + 1}});
        }
    }
    std::stable_sort(edges.begin(), edges.end(),
                     [](const E& a, const E& b) { return a.layer > b.layer; });
    for (const auto& e : edges) spec.edges.emplace_back(e.a, e.b);
    for (const auto& site : t.boundary)
        spec.boundary.push_back(LegRef{site.vertex, site.slot + 1});

    SubsystemCode code = contract_network(spec);
    code.geometry = std::make_shared<Tiling>(t);
    code.bulk_vertex.resize(t.num_vertices());
    for (int v = 0; v < t.num_vertices(); ++v) code.bulk_vertex[v] = v;
    code.name = "happy-" + std::to_string(t.schlafli.n) + "," +
                std::to_string(t.schlafli.k) + "-L" + std::to_string(t.layers) + "-" +
                tensor.name;
    return code;
}

}  // namespace holowedge
