#include "gg/trigraph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gg {

const char* to_string(GraphErrc c) {
    switch (c) {
        case GraphErrc::NTooSmall: return "NTooSmall";
        case GraphErrc::NTooLarge: return "NTooLarge";
        case GraphErrc::WrongDiagonalCount: return "WrongDiagonalCount";
        case GraphErrc::CrossingDiagonals: return "CrossingDiagonals";
        case GraphErrc::DuplicateDiagonal: return "DuplicateDiagonal";
        case GraphErrc::AdjacentPair: return "AdjacentPair";
        case GraphErrc::BadLabel: return "BadLabel";
        case GraphErrc::NotADiagonal: return "NotADiagonal";
        case GraphErrc::NotBoundary: return "NotBoundary";
        case GraphErrc::TooSmall: return "TooSmall";
        case GraphErrc::ForeignMember: return "ForeignMember";
        case GraphErrc::TooFewVertices: return "TooFewVertices";
        case GraphErrc::OutOfRange: return "OutOfRange";
    }
    return "?";
}

namespace {

std::string pair_str(Edge e) {
    std::ostringstream os;
    os << "(" << e.a << "," << e.b << ")";
    return os.str();
}

bool adjacent_labels(int n, int u, int v) {
    int d = std::abs(u - v);
    return d == 1 || d == n - 1;
}

}  // namespace

TriangulationGraph TriangulationGraph::build(int n, const std::vector<Edge>& diagonals) {
    if (n < 3) throw GraphError(GraphErrc::NTooSmall, "n must be at least 3");
    if (static_cast<int>(diagonals.size()) != n - 3) {
        throw GraphError(GraphErrc::WrongDiagonalCount, "expected " + std::to_string(n - 3) + " diagonals, got " +
                                                            std::to_string(diagonals.size()));
    }
    std::vector<Edge> ds;
    ds.reserve(diagonals.size());
    for (Edge e : diagonals) {
        if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n || e.a == e.b) {
            throw GraphError(GraphErrc::BadLabel, "bad vertex label in " + pair_str(e));
        }
        Edge ne = make_edge(e.a, e.b);
        if (adjacent_labels(n, ne.a, ne.b)) {
            throw GraphError(GraphErrc::AdjacentPair, "diagonal " + pair_str(ne) + " joins adjacent vertices");
        }
        ds.push_back(ne);
    }
    // Sort by (a asc, b desc) so that nested chords come out in stack order.
    std::sort(ds.begin(), ds.end(), [](Edge x, Edge y) { return x.a != y.a ? x.a < y.a : x.b > y.b; });
    for (std::size_t i = 1; i < ds.size(); ++i) {
        if (ds[i] == ds[i - 1]) throw GraphError(GraphErrc::DuplicateDiagonal, "duplicate diagonal " + pair_str(ds[i]));
    }
    std::vector<Edge> stack;
    for (Edge e : ds) {
        while (!stack.empty() && stack.back().b <= e.a) stack.pop_back();
        if (!stack.empty() && stack.back().b < e.b) {
            throw GraphError(GraphErrc::CrossingDiagonals,
                             "diagonals " + pair_str(stack.back()) + " and " + pair_str(e) + " cross");
        }
        stack.push_back(e);
    }

    TriangulationGraph t;
    t.n_ = n;
    t.diagonals_ = ds;
    std::sort(t.diagonals_.begin(), t.diagonals_.end());

    std::vector<std::vector<int>> nb(n);
    for (int v = 0; v < n; ++v) {
        nb[v].push_back((v + 1) % n);
        nb[v].push_back((v + n - 1) % n);
    }
    for (Edge e : ds) {
        nb[e.a].push_back(e.b);
        nb[e.b].push_back(e.a);
    }
    t.off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        auto key = [n, v](int w) { return (w - v + n) % n; };
        std::sort(nb[v].begin(), nb[v].end(), [&](int x, int y) { return key(x) < key(y); });
        t.off_[v + 1] = t.off_[v] + static_cast<int>(nb[v].size());
    }
    t.he_.resize(t.off_[n]);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(nb[v].size()); ++i) {
            HalfEdge& h = t.he_[t.off_[v] + i];
            h.origin = v;
            h.target = nb[v][i];
            h.is_boundary = adjacent_labels(n, v, h.target);
        }
    }
    for (int v = 0; v < n; ++v) {
        int deg = static_cast<int>(nb[v].size());
        for (int i = 0; i < deg; ++i) {
            HalfEdge& h = t.he_[t.off_[v] + i];
            h.twin = t.find_half_edge(h.target, v);
            if (i + 1 < deg) {
                int a = v, b = nb[v][i], c = nb[v][i + 1];
                h.next = t.find_half_edge(b, c);
                if (a < b && a < c) {
                    std::array<int, 3> tri{a, b, c};
                    std::sort(tri.begin(), tri.end());
                    t.triangles_.push_back(tri);
                }
            }
        }
    }
    std::sort(t.triangles_.begin(), t.triangles_.end());
    for (auto& h : t.he_) {
        if (h.next < 0) continue;
        int c = t.he_[h.next].target;
        h.face = t.triangle_index(h.origin, h.target, c);
    }
    return t;
}

int TriangulationGraph::find_half_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    int key = (v - u + n_) % n_;
    auto first = he_.begin() + off_[u];
    auto last = he_.begin() + off_[u + 1];
    auto it = std::lower_bound(first, last, key, [this, u](const HalfEdge& h, int k) {
        return (h.target - u + n_) % n_ < k;
    });
    if (it != last && it->target == v) return static_cast<int>(it - he_.begin());
    return -1;
}

bool TriangulationGraph::is_boundary(int u, int v) const {
    return u != v && u >= 0 && v >= 0 && u < n_ && v < n_ && adjacent_labels(n_, u, v);
}

std::vector<int> TriangulationGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int i = off_[v]; i < off_[v + 1]; ++i) out.push_back(he_[i].target);
    return out;
}

std::optional<int> TriangulationGraph::left_apex(int u, int v) const {
    int h = find_half_edge(u, v);
    if (h < 0 || he_[h].next < 0) return std::nullopt;
    return he_[he_[h].next].target;
}

void TriangulationGraph::set_in_set(int u, int v, bool flag) {
    int h = find_half_edge(u, v);
    if (h < 0) throw GraphError(GraphErrc::ForeignMember, "no edge " + pair_str(make_edge(u, v)));
    he_[h].in_set = flag;
    he_[he_[h].twin].in_set = flag;
}

int TriangulationGraph::triangle_index(int a, int b, int c) const {
    std::array<int, 3> tri{a, b, c};
    std::sort(tri.begin(), tri.end());
    auto it = std::lower_bound(triangles_.begin(), triangles_.end(), tri);
    if (it != triangles_.end() && *it == tri) return static_cast<int>(it - triangles_.begin());
    return -1;
}

std::vector<Edge> TriangulationGraph::boundary_edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i) out.push_back(make_edge(i, (i + 1) % n_));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> TriangulationGraph::all_edges() const {
    auto out = boundary_edges();
    out.insert(out.end(), diagonals_.begin(), diagonals_.end());
    std::sort(out.begin(), out.end());
    return out;
}

void DominatingSet::normalize() {
    for (auto& e : members) e = make_edge(e.a, e.b);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool DominatingSet::contains(Edge e) const {
    e = make_edge(e.a, e.b);
    return std::find(members.begin(), members.end(), e) != members.end();
}

TriangulationGraph fan_triangulation(int n) {
    if (n < 3) throw GraphError(GraphErrc::NTooSmall, "n must be at least 3");
    std::vector<Edge> ds;
    for (int j = 2; j <= n - 2; ++j) ds.push_back({0, j});
    return TriangulationGraph::build(n, ds);
}

// Ear insertion: start from a triangle on {0,1,2}; each step picks a random
// boundary edge of the current polygon (in insertion labels) and attaches a
// new ear on it. Labels are then renumbered in boundary order.
TriangulationGraph random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw GraphError(GraphErrc::NTooSmall, "n must be at least 3");
    std::mt19937_64 rng(seed);
    std::vector<int> cycle{0, 1, 2};
    std::vector<Edge> edges;  // in insertion labels, excluding the cycle
    for (int next = 3; next < n; ++next) {
        std::uniform_int_distribution<std::size_t> pick(0, cycle.size() - 1);
        std::size_t i = pick(rng);
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        // edge (a,b) becomes a diagonal once the ear (a,next,b) is attached
        edges.push_back(make_edge(a, b));
        cycle.insert(cycle.begin() + static_cast<long>(i) + 1, next);
    }
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[cycle[i]] = i;
    std::vector<Edge> ds;
    for (Edge e : edges) ds.push_back(make_edge(label[e.a], label[e.b]));
    return TriangulationGraph::build(n, ds);
}

namespace detail {

void enumerate_rec(int n, std::vector<Edge>& acc, std::vector<std::pair<int, int>>& work,
                   const std::function<void(const std::vector<Edge>&)>& emit) {
    if (work.empty()) {
        emit(acc);
        return;
    }
    auto [i, j] = work.back();
    work.pop_back();
    if (j - i < 2) {
        enumerate_rec(n, acc, work, emit);
    } else {
        for (int m = i + 1; m < j; ++m) {
            std::size_t acc_size = acc.size();
            std::size_t work_size = work.size();
            if (m - i >= 2) acc.push_back({i, m});
            if (j - m >= 2) acc.push_back({m, j});
            work.push_back({m, j});
            work.push_back({i, m});
            enumerate_rec(n, acc, work, emit);
            acc.resize(acc_size);
            work.resize(work_size);
        }
    }
    work.push_back({i, j});
}

}  // namespace detail

std::vector<TriangulationGraph> all_triangulations(int n) {
    std::vector<TriangulationGraph> out;
    enumerate_triangulations(n, [&](const TriangulationGraph& t) { out.push_back(t); });
    return out;
}

std::uint64_t catalan(int m) {
    std::vector<std::uint64_t> c(m + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[m];
}

DualTree dual_tree(const TriangulationGraph& t) {
    DualTree dt;
    dt.node_count = static_cast<int>(t.triangles().size());
    dt.adjacency.assign(dt.node_count, {});
    for (Edge d : t.diagonals()) {
        auto l = t.left_apex(d.a, d.b);
        auto r = t.left_apex(d.b, d.a);
        DualTree::Link link{t.triangle_index(d.a, d.b, *l), t.triangle_index(d.a, d.b, *r), d};
        int id = static_cast<int>(dt.links.size());
        dt.links.push_back(link);
        dt.adjacency[link.s].push_back(id);
        dt.adjacency[link.t].push_back(id);
    }
    return dt;
}

SeparatingDiagonal find_separating_diagonal(const TriangulationGraph& t, int lambda) {
    const int n = t.n();
    if (lambda < 2) throw GraphError(GraphErrc::OutOfRange, "lambda must be at least 2");
    if (n < 2 * lambda) throw GraphError(GraphErrc::TooFewVertices, "n < 2*lambda");
    bool found = false;
    SeparatingDiagonal best;
    for (Edge d : t.diagonals()) {  // sorted, so the first minimum wins ties
        int inner = d.b - d.a;
        int outer = n - inner;
        for (auto [k, v0] : {std::pair{inner, d.a}, std::pair{outer, d.b}}) {
            if (k >= lambda && (!found || k < best.k)) {
                found = true;
                best = {d, k, v0};
            }
        }
    }
    if (!found) throw GraphError(GraphErrc::TooFewVertices, "no separating diagonal");
    return best;
}

SplitResult split_along(const TriangulationGraph& t, Edge d) {
    d = make_edge(d.a, d.b);
    if (!t.is_diagonal(d.a, d.b)) throw GraphError(GraphErrc::NotADiagonal, pair_str(d) + " is not a diagonal");
    const int n = t.n();
    SplitResult s;
    for (int v = d.a; v <= d.b; ++v) s.map1.push_back(v);
    for (int v = d.b;; v = (v + 1) % n) {
        s.map2.push_back(v);
        if (v == d.a) break;
    }
    auto sub = [&](const std::vector<int>& map) {
        std::vector<int> local(n, -1);
        for (int i = 0; i < static_cast<int>(map.size()); ++i) local[map[i]] = i;
        const int m = static_cast<int>(map.size());
        std::vector<Edge> ds;
        for (Edge e : t.diagonals()) {
            int la = local[e.a], lb = local[e.b];
            if (la < 0 || lb < 0) continue;
            Edge le = make_edge(la, lb);
            if (le.b - le.a == 1 || (le.a == 0 && le.b == m - 1)) continue;  // d itself
            ds.push_back(le);
        }
        return TriangulationGraph::build(m, ds);
    };
    s.t1 = sub(s.map1);
    s.t2 = sub(s.map2);
    return s;
}

TriangulationGraph glue(const SplitResult& s, int n) {
    std::set<Edge> ds;
    auto add = [&](const TriangulationGraph& g, const std::vector<int>& map) {
        for (Edge e : g.all_edges()) {
            Edge o = make_edge(map[e.a], map[e.b]);
            int dd = o.b - o.a;
            if (dd != 1 && dd != n - 1) ds.insert(o);
        }
    };
    add(s.t1, s.map1);
    add(s.t2, s.map2);
    return TriangulationGraph::build(n, {ds.begin(), ds.end()});
}

ContractResult contract_edge(const TriangulationGraph& t, Edge e, int keep) {
    const int n = t.n();
    e = make_edge(e.a, e.b);
    if (!t.is_boundary(e.a, e.b)) throw GraphError(GraphErrc::NotBoundary, pair_str(e) + " is not a boundary edge");
    if (n < 4) throw GraphError(GraphErrc::TooSmall, "contraction needs n >= 4");
    // first/second in ccw order along the boundary
    int first = e.a, second = e.b;
    if (e.a == 0 && e.b == n - 1) first = n - 1, second = 0;
    ContractResult r;
    MergeMap& m = r.map;
    m.u = (keep == second) ? second : first;
    m.v = (m.u == first) ? second : first;
    if (keep >= 0 && keep != e.a && keep != e.b) throw GraphError(GraphErrc::OutOfRange, "keep must be an endpoint");
    m.w = *t.left_apex(first, second);
    m.old_to_new.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == second) continue;
        m.old_to_new[v] = next++;
    }
    m.old_to_new[second] = m.old_to_new[first];
    m.x = m.old_to_new[first];
    m.new_to_old.assign(n - 1, -1);
    for (int v = 0; v < n; ++v) {
        if (v == m.v) continue;
        m.new_to_old[m.old_to_new[v]] = v;
    }
    std::set<Edge> ds;
    for (Edge d : t.all_edges()) {
        int a = m.old_to_new[d.a], b = m.old_to_new[d.b];
        if (a == b) continue;
        Edge ne = make_edge(a, b);
        if (!adjacent_labels(n - 1, ne.a, ne.b)) ds.insert(ne);
    }
    r.graph = TriangulationGraph::build(n - 1, {ds.begin(), ds.end()});
    return r;
}

std::vector<char> covered_vertices(int n, const std::vector<Edge>& members) {
    std::vector<char> cov(n, 0);
    for (Edge e : members) {
        cov[e.a] = 1;
        cov[e.b] = 1;
    }
    return cov;
}

bool is_2_dominated(const TriangulationGraph& t, const DominatingSet& d) {
    for (Edge e : d.members) {
        if (!t.has_edge(e.a, e.b)) throw GraphError(GraphErrc::ForeignMember, pair_str(e) + " is not an edge");
    }
    auto cov = covered_vertices(t.n(), d.members);
    for (const auto& tri : t.triangles()) {
        if (cov[tri[0]] + cov[tri[1]] + cov[tri[2]] < 2) return false;
    }
    return true;
}

namespace {

// Rooted dual subtree of the polygon side i..j (local labels) hanging below chord (i,j).
std::string encode_side(const std::vector<int>& apex_of, int i, int j, int width,
                        const std::function<int(int, int)>& apex) {
    (void)apex_of;
    (void)width;
    int m = apex(i, j);
    std::vector<std::string> ch;
    if (m - i >= 2) ch.push_back(encode_side(apex_of, i, m, width, apex));
    if (j - m >= 2) ch.push_back(encode_side(apex_of, m, j, width, apex));
    std::sort(ch.begin(), ch.end());
    std::string s = "(";
    for (auto& c : ch) s += c;
    return s + ")";
}

int shape_lambda(ShapeMode mode) { return mode == ShapeMode::Diag ? 4 : 6; }

std::vector<std::string> build_shapes(ShapeMode mode) {
    const int lambda = shape_lambda(mode);
    std::set<std::string> shapes;
    for (int k = lambda; k <= 2 * lambda - 2; ++k) {
        enumerate_triangulations(k + 1, [&](const TriangulationGraph& g) {
            for (Edge e : g.diagonals())
                if (e.b - e.a >= lambda) return;
            auto apex = [&](int i, int j) { return *g.left_apex(j, i); };
            shapes.insert(encode_side({}, 0, k, k, apex));
        });
    }
    return {shapes.begin(), shapes.end()};
}

}  // namespace

const std::vector<std::string>& subtree_shapes(ShapeMode mode) {
    static const std::vector<std::string> diag = build_shapes(ShapeMode::Diag);
    static const std::vector<std::string> edge = build_shapes(ShapeMode::Edge);
    return mode == ShapeMode::Diag ? diag : edge;
}

std::optional<ShapeMatch> classify_subtree_shape(const TriangulationGraph& t, Edge d, ShapeMode mode) {
    d = make_edge(d.a, d.b);
    if (!t.is_diagonal(d.a, d.b)) return std::nullopt;
    const int n = t.n();
    const int lambda = shape_lambda(mode);
    const auto& shapes = subtree_shapes(mode);
    for (auto [k, v0] : {std::pair{d.b - d.a, d.a}, std::pair{n - (d.b - d.a), d.b}}) {
        if (k < lambda || k > 2 * lambda - 2) continue;
        auto lab = [&](int i) { return (v0 + i) % n; };
        bool minimal = true;
        for (int i = 0; i <= k && minimal; ++i)
            for (int j = i + lambda; j <= k && minimal; ++j)
                if (!(i == 0 && j == k) && t.has_edge(lab(i), lab(j))) minimal = false;
        if (!minimal) continue;
        auto apex = [&](int i, int j) { return (*t.left_apex(lab(j), lab(i)) - v0 + n) % n; };
        std::string enc = encode_side({}, 0, k, k, apex);
        auto it = std::lower_bound(shapes.begin(), shapes.end(), enc);
        if (it == shapes.end() || *it != enc) continue;
        return ShapeMatch{static_cast<int>(it - shapes.begin()), k, v0};
    }
    return std::nullopt;
}

void check_invariants(const TriangulationGraph& t) {
    const int n = t.n();
    auto fail = [](const std::string& m) { throw std::logic_error("invariant violated: " + m); };
    if (static_cast<int>(t.diagonals().size()) != n - 3) fail("diagonal count");
    if (static_cast<int>(t.all_edges().size()) != 2 * n - 3) fail("edge count");
    if (static_cast<int>(t.triangles().size()) != n - 2) fail("triangle count");
    if (static_cast<int>(t.half_edges().size()) != 2 * (2 * n - 3)) fail("half-edge count");
    std::vector<int> faces_per_edge;
    std::map<Edge, int> incid;
    for (const auto& tri : t.triangles()) {
        for (int i = 0; i < 3; ++i) {
            Edge e = make_edge(tri[i], tri[(i + 1) % 3]);
            if (!t.has_edge(e.a, e.b)) fail("triangle side missing from graph");
            ++incid[e];
        }
    }
    for (Edge e : t.all_edges()) {
        int want = t.is_boundary(e.a, e.b) ? 1 : 2;
        if (incid[e] != want) fail("edge-face incidence of " + pair_str(e));
    }
    for (const auto& h : t.half_edges()) {
        const auto& tw = t.half_edges()[h.twin];
        if (tw.origin != h.target || tw.target != h.origin) fail("twin");
        if (h.next >= 0) {
            int a = h.next, b = t.half_edges()[a].next;
            if (b < 0 || t.half_edges()[b].next < 0) fail("face cycle open");
            if (t.half_edges()[t.half_edges()[b].next].origin != h.origin) fail("face cycle length");
        }
    }
    for (std::size_t i = 0; i < t.diagonals().size(); ++i)
        for (std::size_t j = i + 1; j < t.diagonals().size(); ++j) {
            Edge x = t.diagonals()[i], y = t.diagonals()[j];
            if ((x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b)) fail("crossing");
        }
    DualTree dt = dual_tree(t);
    if (static_cast<int>(dt.links.size()) != n - 3) fail("dual link count");
    std::vector<int> seen(dt.node_count, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        if (dt.adjacency[u].size() > 3) fail("dual degree");
        for (int l : dt.adjacency[u]) {
            int w = dt.links[l].s == u ? dt.links[l].t : dt.links[l].s;
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
        }
    }
    if (cnt != dt.node_count) fail("dual tree disconnected");
}

}  // namespace gg
