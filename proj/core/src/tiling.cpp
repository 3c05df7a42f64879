#include "holowedge/tiling.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace holowedge {

SchlafliCheck validate_schlafli(int n, int k) {
    SchlafliCheck out;
    if (n < 3 || k < 3) {
        out.error = "need n >= 3 and k >= 3";
        return out;
    }
    // Strict hyperbolicity: 1/n + 1/k < 1/2, i.e. 2(n + k) < n k.
    long lhs = 2L * (n + k), rhs = long(n) * k;
    if (lhs >= rhs) {
        out.error = "1/" + std::to_string(n) + " + 1/" + std::to_string(k) +
                    (lhs == rhs ? " = 1/2 (flat)" : " > 1/2 (spherical)");
        return out;
    }
    if (k == 3)
        out.warnings.push_back("k = 3: the contracted network is not an isometry");
    if (k % 2 == 0)
        out.warnings.push_back("even k: no single-bulk-leg tensor fits (needs k = 2N-1)");
    out.value = Schlafli{n, k};
    return out;
}

namespace {

struct Slots {
    int parent = -1;       // replacement parent edge
    int pred_parent = -1;  // second parent of a c vertex
    int ring_pred = -1;
    int ring_succ = -1;
    int own_c = -1;
    int extra_c = -1;
    int child_begin = -1, child_end = -1;  // b-children slots [begin, end)
};

Slots slot_layout(VertexType t, int n, int k) {
    Slots s;
    switch (t) {
        case VertexType::Central:
            s.child_begin = 0;
            s.child_end = k;
            break;
        case VertexType::A:
            s.ring_pred = 0;
            s.child_begin = 1;
            s.child_end = k - 1;
            s.ring_succ = k - 1;
            break;
        case VertexType::B:
            s.parent = 0;
            s.ring_pred = 1;
            if (n > 3) {
                s.child_begin = 2;
                s.child_end = k - 1;
            } else {
                s.own_c = 2;
                s.child_begin = 3;
                s.child_end = k - 2;
                s.extra_c = k - 2;
            }
            s.ring_succ = k - 1;
            break;
        case VertexType::C:
            s.pred_parent = 0;
            s.ring_pred = 1;
            s.own_c = 2;
            s.child_begin = 3;
            s.child_end = k - 3;
            s.extra_c = k - 3;
            s.ring_succ = k - 2;
            s.parent = k - 1;
            break;
    }
    return s;
}

}  // namespace

std::vector<std::vector<int>> Tiling::sectors() const {
    std::vector<std::vector<int>> out(schlafli.k);
    for (const auto& v : vertices)
        if (v.sector >= 1) out[v.sector - 1].push_back(v.id);
    return out;
}

std::pair<size_t, size_t> Tiling::sector_boundary_block(int sector) const {
    size_t n = boundary.size();
    size_t len = 0, start = 0;
    for (size_t i = 0; i < n; ++i)
        if (boundary_sector[i] == sector) ++len;
    if (len == 0 || len == n) return {0, len};
    for (size_t i = 0; i < n; ++i) {
        if (boundary_sector[i] == sector &&
            boundary_sector[(i + n - 1) % n] != sector) {
            start = i;
            break;
        }
    }
    return {start, len};
}

std::array<long, 4> Tiling::layer_census(int layer) const {
    std::array<long, 4> c{0, 0, 0, 0};
    for (int id : layer_order[layer]) {
        switch (vertices[id].type) {
            case VertexType::Central: ++c[0]; break;
            case VertexType::A: ++c[1]; break;
            case VertexType::B: ++c[2]; break;
            case VertexType::C: ++c[3]; break;
        }
    }
    return c;
}

std::vector<std::pair<int, int>> Tiling::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < num_vertices(); ++v)
        for (const auto& leg : legs[v])
            if (!leg.dangling() && v < leg.vertex)
                out.emplace_back(v, leg.vertex);
    return out;
}

std::array<long, 4> census_step(Schlafli s, const std::array<long, 4>& census) {
    long n = s.n, k = s.k;
    std::array<long, 4> out{0, 0, 0, 0};
    // i -> (b a^{n-3})^k
    out[1] += census[0] * k * (n - 3);
    out[2] += census[0] * k;
    if (n > 3) {
        // a -> a^{n-4} b (a^{n-3} b)^{k-3},  b -> one fewer repeat
        out[1] += census[1] * ((n - 4) + (n - 3) * (k - 3));
        out[2] += census[1] * (k - 2);
        out[1] += census[2] * ((n - 4) + (n - 3) * (k - 4));
        out[2] += census[2] * (k - 3);
    } else {
        // b -> c b^{k-5},  c -> c b^{k-6}
        out[2] += census[2] * (k - 5) + census[3] * (k - 6);
        out[3] += census[2] + census[3];
    }
    return out;
}

Tiling generate(Schlafli s, int layers) {
    auto check = validate_schlafli(s.n, s.k);
    if (!check.ok()) throw std::invalid_argument("invalid Schlafli symbol: " + check.error);
    if (layers < 0) throw std::invalid_argument("layers must be non-negative");
    const int n = s.n, k = s.k;

    Tiling t;
    t.schlafli = s;
    t.layers = layers;

    auto add_vertex = [&](VertexType type, int layer, int pos, int sector) {
        int id = t.num_vertices();
        t.vertices.push_back({id, type, layer, pos, sector});
        t.legs.emplace_back(k);
        if (int(t.layer_order.size()) <= layer) t.layer_order.resize(layer + 1);
        t.layer_order[layer].push_back(id);
        return id;
    };
    auto wire = [&](int u, int us, int v, int vs) {
        t.legs[u][us] = {v, vs};
        t.legs[v][vs] = {u, us};
    };
    auto slots_of = [&](int id) { return slot_layout(t.vertices[id].type, n, k); };

    add_vertex(VertexType::Central, 0, 0, 0);

    if (layers >= 1) {
        // Layer 1 from the i-rule; sector j owns b_j and the a's that follow it.
        for (int j = 0; j < k; ++j) {
            int b = add_vertex(VertexType::B, 1, int(t.layer_order[1].size()), j + 1);
            wire(0, j, b, 0);
            for (int a = 0; a < n - 3; ++a)
                add_vertex(VertexType::A, 1, int(t.layer_order[1].size()), j + 1);
        }
    }

    for (int layer = 1; layer < layers; ++layer) {
        const std::vector<int> prev = t.layer_order[layer];
        const int m = int(prev.size());
        std::vector<int> next_child_slot(t.num_vertices(), -1);
        for (int id : prev) next_child_slot[id] = slots_of(id).child_begin;

        for (int pi = 0; pi < m; ++pi) {
            int v = prev[pi];
            int pred = prev[(pi + m - 1) % m];
            VertexType vt = t.vertices[v].type;
            int sector = t.vertices[v].sector;
            auto emit = [&](VertexType ct) {
                int id = add_vertex(ct, layer + 1, int(t.layer_order[layer + 1].size()), sector);
                return id;
            };
            if (n > 3) {
                // a^{n-4} b (a^{n-3} b)^{k-3 or k-4}
                int repeats = (vt == VertexType::A) ? k - 3 : k - 4;
                for (int a = 0; a < n - 4; ++a) emit(VertexType::A);
                int b = emit(VertexType::B);
                wire(v, next_child_slot[v]++, b, 0);
                for (int r = 0; r < repeats; ++r) {
                    for (int a = 0; a < n - 3; ++a) emit(VertexType::A);
                    b = emit(VertexType::B);
                    wire(v, next_child_slot[v]++, b, 0);
                }
            } else {
                // c b^{k-5 or k-6}; the c also wires to the predecessor.
                int bs = (vt == VertexType::B) ? k - 5 : k - 6;
                int c = emit(VertexType::C);
                wire(v, slots_of(v).own_c, c, k - 1);
                wire(pred, slots_of(pred).extra_c, c, 0);
                for (int r = 0; r < bs; ++r) {
                    int b = emit(VertexType::B);
                    wire(v, next_child_slot[v]++, b, 0);
                }
            }
        }
    }

    // Ring edges within each layer.
    for (int layer = 1; layer <= layers; ++layer) {
        const auto& ring = t.layer_order[layer];
        const int m = int(ring.size());
        for (int i = 0; i < m; ++i) {
            int u = ring[i], w = ring[(i + 1) % m];
            wire(u, slots_of(u).ring_succ, w, slots_of(w).ring_pred);
        }
    }

    // Boundary: dangling slots of the outermost layer, vertex order then
    // slot order, which is the counterclockwise planar cycle.
    for (int id : t.layer_order[layers]) {
        for (int slot = 0; slot < k; ++slot) {
            if (t.legs[id][slot].dangling()) {
                t.boundary.push_back({id, slot});
                t.boundary_sector.push_back(layers == 0 ? slot + 1
                                                        : t.vertices[id].sector);
            }
        }
    }

    // All-pairs bulk distances (the graphs stay desk-sized).
    int V = t.num_vertices();
    t.dist_.assign(V, std::vector<int>(V, -1));
    for (int src = 0; src < V; ++src) {
        auto& d = t.dist_[src];
        d[src] = 0;
        std::deque<int> q{src};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& leg : t.legs[u]) {
                if (!leg.dangling() && d[leg.vertex] < 0) {
                    d[leg.vertex] = d[u] + 1;
                    q.push_back(leg.vertex);
                }
            }
        }
    }
    return t;
}

}  // namespace holowedge
