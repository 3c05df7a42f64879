#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace holowedge {

struct Schlafli {
    int n = 0;  // polygon side count
    int k = 0;  // vertex degree (planar legs per tensor)
};

struct SchlafliCheck {
    std::optional<Schlafli> value;
    std::string error;                  // violated condition when rejected
    std::vector<std::string> warnings;  // non-fatal: k = 3, even k
    bool ok() const { return value.has_value(); }
};

/*
 * Accepts strictly hyperbolic pairs 1/n + 1/k < 1/2 with n, k >= 3.
 * Flat and spherical tilings are rejected. k = 3 tilings generate but do
 * not contract to isometries, and even k admits no single-bulk-leg tensor;
 * both cases come back accepted with a warning.
 */
SchlafliCheck validate_schlafli(int n, int k);

enum class VertexType : char { Central = 'i', A = 'a', B = 'b', C = 'c' };

/*
 * Layered vertex-convention tiling. Layer 0 is the single central vertex;
 * layer t+1 is produced from layer t by the replacement rules
 *
 *   i -> (b a^{n-3})^k                     (all n)
 *   a -> a^{n-4} b (a^{n-3} b)^{k-3}       (n > 3)
 *   b -> a^{n-4} b (a^{n-3} b)^{k-4}       (n > 3)
 *   b -> c b^{k-5},  c -> c b^{k-6}        (n = 3)
 *
 * applied in cyclic order. New b and c vertices wire to the vertex whose
 * replacement produced them; a c additionally wires to that vertex's
 * predecessor in the layer ring. Consecutive same-layer vertices are wired
 * to each other.
 *
 * Every vertex carries k planar leg slots in counterclockwise cyclic order
 * (the bulk leg sits between slot k-1 and slot 0):
 *
 *   central  [children b_1..b_k]
 *   a        [ring-pred, children, ring-succ]
 *   b, n>3   [parent, ring-pred, children, ring-succ]
 *   b, n=3   [parent, ring-pred, own-c, b-children, extra-c, ring-succ]
 *   c, n=3   [pred-parent, ring-pred, own-c, b-children, extra-c, ring-succ, parent]
 *
 * where "own-c" is the leading c of the vertex's own replacement and
 * "extra-c" the leading c of its ring successor's replacement (which wires
 * back to this vertex). a-type children occupy no slot on their parent.
 */
class Tiling {
public:
    struct Vertex {
        int id;
        VertexType type;
        int layer;
        int pos;     // position in the layer's cyclic order
        int sector;  // 1..k for layer >= 1, 0 for the central vertex
    };
    struct LegTarget {
        int vertex = -1;  // -1 when dangling
        int slot = -1;
        bool dangling() const { return vertex < 0; }
    };
    struct BoundarySite {
        int vertex;
        int slot;
    };

    Schlafli schlafli;
    int layers = 0;
    std::vector<Vertex> vertices;
    std::vector<std::vector<LegTarget>> legs;   // [vertex][slot], size k
    std::vector<std::vector<int>> layer_order;  // vertex ids per layer
    std::vector<BoundarySite> boundary;         // counterclockwise cycle
    std::vector<int> boundary_sector;           // sector per boundary site

    int num_vertices() const { return int(vertices.size()); }
    size_t boundary_size() const { return boundary.size(); }

    // Shortest-path length in the planar adjacency graph.
    int bulk_distance(int u, int v) const { return dist_[u][v]; }

    // M_1..M_k: vertex ids of each sector, layer >= 1 only.
    std::vector<std::vector<int>> sectors() const;

    // Boundary sites of one sector, as a cyclic run [start, length).
    std::pair<size_t, size_t> sector_boundary_block(int sector) const;

    // Census (counts of i/a/b/c) of one layer.
    std::array<long, 4> layer_census(int layer) const;

    // Undirected edge list (u < v) for persistence and rendering.
    std::vector<std::pair<int, int>> edge_list() const;

    friend Tiling generate(Schlafli s, int layers);

private:
    std::vector<std::vector<int>> dist_;
};

// Generate a validated tiling. Throws std::invalid_argument for rejected
// Schlafli pairs or negative layer counts.
Tiling generate(Schlafli s, int layers);

// Apply the replacement rules symbolically to a type census
// (i, a, b, c counts) to predict the next layer's census.
std::array<long, 4> census_step(Schlafli s, const std::array<long, 4>& census);

}  // namespace holowedge
