#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gg {

// Undirected edge or diagonal, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

enum class GraphErrc {
    NTooSmall,
    NTooLarge,
    WrongDiagonalCount,
    CrossingDiagonals,
    DuplicateDiagonal,
    AdjacentPair,
    BadLabel,
    NotADiagonal,
    NotBoundary,
    TooSmall,
    ForeignMember,
    TooFewVertices,
    OutOfRange,
};

const char* to_string(GraphErrc c);

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    GraphErrc code() const { return code_; }

private:
    GraphErrc code_;
};

struct HalfEdge {
    int origin = -1;
    int target = -1;
    int twin = -1;
    int next = -1;   // -1 on the outer face
    int face = -1;   // triangle index, -1 on the outer face
    bool is_boundary = false;
    bool in_set = false;
};

// Maximal outerplanar graph on vertices 0..n-1 in boundary (ccw) order.
class TriangulationGraph {
public:
    TriangulationGraph() = default;

    // Throws GraphError on any violated precondition.
    static TriangulationGraph build(int n, const std::vector<Edge>& diagonals);

    int n() const { return n_; }
    const std::vector<Edge>& diagonals() const { return diagonals_; }
    std::vector<Edge> boundary_edges() const;
    std::vector<Edge> all_edges() const;
    // Sorted vertex triples, one per internal face.
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    bool has_edge(int u, int v) const { return find_half_edge(u, v) >= 0; }
    bool is_boundary(int u, int v) const;
    bool is_diagonal(int u, int v) const { return has_edge(u, v) && !is_boundary(u, v); }

    // Neighbours of v ordered ccw starting at v+1 and ending at v-1.
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return off_[v + 1] - off_[v]; }

    // Third vertex of the triangle to the left of the directed edge u->v, if any.
    std::optional<int> left_apex(int u, int v) const;

    // Half-edge access. Half-edge ids are dense in [0, 2(2n-3)).
    const std::vector<HalfEdge>& half_edges() const { return he_; }
    int find_half_edge(int u, int v) const;
    void set_in_set(int u, int v, bool flag);

    // Triangle index of face with sorted vertices, or -1.
    int triangle_index(int a, int b, int c) const;

    bool operator==(const TriangulationGraph& o) const { return n_ == o.n_ && diagonals_ == o.diagonals_; }

private:
    int n_ = 0;
    std::vector<Edge> diagonals_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<int> off_;   // per-vertex offset into he_ (CSR layout)
    std::vector<HalfEdge> he_;
};

struct DualTree {
    // nodes[i] is triangle i of the graph.
    int node_count = 0;
    struct Link {
        int s = -1;
        int t = -1;
        Edge diagonal;
    };
    std::vector<Link> links;
    std::vector<std::vector<int>> adjacency;  // node -> link ids
};

enum class DomMode { DiagonalAllowed, EdgeOnly };

struct DominatingSet {
    DomMode mode = DomMode::DiagonalAllowed;
    std::vector<Edge> members;  // kept sorted and unique by normalize()

    void normalize();
    std::size_t size() const { return members.size(); }
    bool contains(Edge e) const;
    bool operator==(const DominatingSet&) const = default;
};

struct SeparatingDiagonal {
    Edge diagonal;
    int k = 0;
    // The split-off side is v0, v0+1, ..., v0+k (mod n); v0 and v0+k are
    // the endpoints of the diagonal.
    int v0 = 0;
};

struct SplitResult {
    TriangulationGraph t1;  // side walked ccw from d.a to d.b
    TriangulationGraph t2;  // side walked ccw from d.b to d.a
    std::vector<int> map1;  // local label -> label in the source graph
    std::vector<int> map2;
};

struct MergeMap {
    int u = -1;  // endpoint of the contracted edge kept as the guard vertex
    int v = -1;  // other endpoint
    int w = -1;  // apex of the triangle on the contracted edge
    int x = -1;  // merged node in the contracted graph
    std::vector<int> old_to_new;  // size n; u and v both map to x
    std::vector<int> new_to_old;  // size n-1; x maps to u
};

struct ContractResult {
    TriangulationGraph graph;
    MergeMap map;
};

enum class ShapeMode { Diag, Edge };

struct ShapeMatch {
    int id = -1;     // index into subtree_shapes(mode)
    int k = 0;       // boundary edges on the split-off side
    int v0 = 0;      // side is v0..v0+k (mod n)
};

TriangulationGraph fan_triangulation(int n);
TriangulationGraph random_triangulation(int n, std::uint64_t seed);

// Calls visit(T) for every triangulation of the convex n-gon. 3 <= n <= 14.
template <class F>
void enumerate_triangulations(int n, F&& visit);
std::vector<TriangulationGraph> all_triangulations(int n);
std::uint64_t catalan(int m);

DualTree dual_tree(const TriangulationGraph& t);

SeparatingDiagonal find_separating_diagonal(const TriangulationGraph& t, int lambda);
SplitResult split_along(const TriangulationGraph& t, Edge d);
TriangulationGraph glue(const SplitResult& s, int n);
ContractResult contract_edge(const TriangulationGraph& t, Edge e, int keep = -1);

bool is_2_dominated(const TriangulationGraph& t, const DominatingSet& d);
// Vertex coverage mask of the set (true for endpoints of members).
std::vector<char> covered_vertices(int n, const std::vector<Edge>& members);

// Canonical encodings of the rooted dual subtrees used by the linear algorithms.
const std::vector<std::string>& subtree_shapes(ShapeMode mode);
std::optional<ShapeMatch> classify_subtree_shape(const TriangulationGraph& t, Edge d, ShapeMode mode);

// Throws unless all structural invariants hold.
void check_invariants(const TriangulationGraph& t);

namespace detail {
void enumerate_rec(int n, std::vector<Edge>& acc, std::vector<std::pair<int, int>>& work,
                   const std::function<void(const std::vector<Edge>&)>& emit);
}


template <class F>
void enumerate_triangulations(int n, F&& visit) {
    if (n < 3) throw GraphError(GraphErrc::NTooSmall, "n must be at least 3");
    if (n > 14) throw GraphError(GraphErrc::NTooLarge, "enumeration limited to n <= 14");
    std::vector<Edge> acc;
    std::vector<std::pair<int, int>> work{{0, n - 1}};
    detail::enumerate_rec(n, acc, work, [&](const std::vector<Edge>& diags) {
        visit(TriangulationGraph::build(n, diags));
    });
}

}  // namespace gg
