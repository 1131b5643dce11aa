#include "reduce.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace gg::detail {

bool GuardBag::has(int a, int b) const {
    const auto& p = partners_[a];
    return std::find(p.begin(), p.end(), b) != p.end();
}

void GuardBag::add(int a, int b) {
    if (a == b) throw std::logic_error("guard bag: self loop");
    if (has(a, b)) return;
    partners_[a].push_back(b);
    partners_[b].push_back(a);
}

bool GuardBag::remove(int a, int b) {
    auto& pa = partners_[a];
    auto it = std::find(pa.begin(), pa.end(), b);
    if (it == pa.end()) return false;
    pa.erase(it);
    auto& pb = partners_[b];
    pb.erase(std::find(pb.begin(), pb.end(), a));
    return true;
}

std::vector<Edge> GuardBag::members() const {
    std::vector<Edge> out;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b : partners_[a])
            if (a < b) out.push_back({a, b});
    return out;
}

namespace {

// y strictly inside the ccw walk from a to b on a circle of n labels
bool between_ccw(int a, int y, int b, int n) {
    int dy = ((y - a) % n + n) % n;
    int db = ((b - a) % n + n) % n;
    return dy > 0 && dy < db;
}

}  // namespace

int lift_contraction(GuardBag& bag, const Contraction& c, DomMode mode) {
    std::vector<int> at_x = bag.partners(c.u);
    for (int y : at_x) bag.remove(c.u, y);
    for (int y : at_x) {
        if (y == c.w) {
            if (mode == DomMode::EdgeOnly && !c.vw_boundary) {
                bag.add(c.u, c.w);
            } else {
                bag.add(c.v, c.w);
            }
            continue;
        }
        bool v_side = c.v_after_u ? between_ccw(c.v, y, c.w, c.n_labels) : between_ccw(c.w, y, c.v, c.n_labels);
        bag.add(v_side ? c.v : c.u, y);
    }
    if (bag.covered(c.u) && !bag.covered(c.v)) return c.v;
    return c.u;
}

bool Side::has(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (j - i == 1 || (i == 0 && j == k)) return true;
    Edge e = make_edge(L[i], L[j]);
    return std::find(inner.begin(), inner.end(), e) != inner.end();
}

int Side::apex(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (int m = i + 1; m < j; ++m)
        if (has(i, m) && has(m, j)) return m;
    throw std::logic_error("side has no apex on chord");
}

void Side::reflect() { std::reverse(L.begin(), L.begin() + k + 1); }

namespace {

struct Current {
    TriangulationGraph g;
    std::vector<int> glob;  // local -> global
};

// Builds the triangulation on the given global vertices (any order) from
// global-label edges; boundary pairs and duplicates are dropped.
Current rebuild(std::vector<int> verts, const std::vector<Edge>& edges, int nlabels) {
    std::sort(verts.begin(), verts.end());
    std::vector<int> loc(nlabels, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) loc[verts[i]] = i;
    const int m = static_cast<int>(verts.size());
    std::vector<Edge> ds;
    for (Edge e : edges) {
        int a = loc[e.a], b = loc[e.b];
        if (a < 0 || b < 0 || a == b) continue;
        Edge le = make_edge(a, b);
        if (le.b - le.a == 1 || (le.a == 0 && le.b == m - 1)) continue;
        ds.push_back(le);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return {TriangulationGraph::build(m, ds), std::move(verts)};
}

void add_base(GuardBag& bag, const DominatingSet& d, const std::vector<int>& glob) {
    for (Edge e : d.members) bag.add(glob[e.a], glob[e.b]);
}

DominatingSet finish(const GuardBag& bag, DomMode mode) {
    DominatingSet d{mode, bag.members()};
    d.normalize();
    return d;
}

}  // namespace

DominatingSet run_explicit(const TriangulationGraph& t, DomMode mode, int lambda, int cutoff, const CaseFn& cases,
                           const BaseFn& base, AlgoStats* stats) {
    AlgoStats local;
    AlgoStats& st = stats ? *stats : local;
    const int N = t.n();
    Current cur{t, {}};
    cur.glob.resize(N);
    std::iota(cur.glob.begin(), cur.glob.end(), 0);
    std::vector<std::function<void(GuardBag&)>> rewrites;

    while (cur.g.n() >= cutoff) {
        const int m = cur.g.n();
        st.work += static_cast<std::uint64_t>(m);
        auto sd = find_separating_diagonal(cur.g, lambda);
        Side s;
        s.k = sd.k;
        for (int i = 0; i <= sd.k; ++i) s.L[i] = cur.glob[(sd.v0 + i) % m];
        for (int i = 0; i <= sd.k; ++i)
            for (int j = i + 2; j <= sd.k; ++j) {
                if (i == 0 && j == sd.k) continue;
                if (cur.g.has_edge((sd.v0 + i) % m, (sd.v0 + j) % m)) s.inner.push_back(make_edge(s.L[i], s.L[j]));
            }
        Reduction r = cases(s);
        ++st.reductions;

        std::vector<char> gone(N, 0);
        for (int v : r.removed) gone[v] = 1;
        std::vector<int> verts;
        for (int v : cur.glob)
            if (!gone[v]) verts.push_back(v);
        std::vector<Edge> edges;
        for (Edge e : cur.g.all_edges()) {
            int a = cur.glob[e.a], b = cur.glob[e.b];
            if (!gone[a] && !gone[b]) edges.push_back(make_edge(a, b));
        }
        if (r.contract) {
            auto [u, v] = *r.contract;
            std::sort(verts.begin(), verts.end());
            const int m2 = static_cast<int>(verts.size());
            int pu = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
            int pv = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            Contraction c;
            c.u = u;
            c.v = v;
            c.n_labels = N;
            c.v_after_u = (pu + 1) % m2 == pv;
            if (!c.v_after_u && (pv + 1) % m2 != pu) throw std::logic_error("contraction of a non-boundary edge");
            std::vector<char> nu(N, 0);
            for (Edge e : edges) {
                if (e.a == u) nu[e.b] = 1;
                if (e.b == u) nu[e.a] = 1;
            }
            for (Edge e : edges) {
                int y = e.a == v ? e.b : e.b == v ? e.a : -1;
                if (y >= 0 && y != u && nu[y]) c.w = y;
            }
            int beyond_v = c.v_after_u ? verts[(pv + 1) % m2] : verts[(pv + m2 - 1) % m2];
            c.vw_boundary = beyond_v == c.w;
            for (Edge& e : edges) {
                if (e.a == v) e.a = u;
                if (e.b == v) e.b = u;
                e = make_edge(e.a, e.b);
            }
            verts.erase(std::find(verts.begin(), verts.end(), v));
            auto rw = r.rewrite;
            rewrites.push_back([c, rw, mode](GuardBag& b) { rw(b, lift_contraction(b, c, mode)); });
        } else {
            auto rw = r.rewrite;
            rewrites.push_back([rw](GuardBag& b) { rw(b, -1); });
        }
        cur = rebuild(std::move(verts), edges, N);
    }

    st.base_n = cur.g.n();
    GuardBag bag(N);
    add_base(bag, base(cur.g), cur.glob);
    for (auto it = rewrites.rbegin(); it != rewrites.rend(); ++it) (*it)(bag);
    return finish(bag, mode);
}

namespace {

class QueueEngine {
public:
    QueueEngine(const TriangulationGraph& t, int lambda, AlgoStats& st)
        : t_(t), lambda_(lambda), cap_(2 * lambda - 3), st_(st), dt_(dual_tree(t)) {
        alive_.assign(dt_.node_count, 1);
        alive_count_ = dt_.node_count;
        in_queue_.assign(2 * dt_.links.size(), 0);
        mark_.assign(dt_.node_count, 0);
        mode_ = lambda == 4 ? ShapeMode::Diag : ShapeMode::Edge;
    }

    int size() const { return alive_count_ + 2; }

    void seed_all() {
        for (int l = 0; l < static_cast<int>(dt_.links.size()); ++l) {
            try_push(l, 0);
            try_push(l, 1);
        }
    }

    // Pops until a valid configuration is found. Rescans once if the queue runs dry.
    std::optional<std::pair<int, Side>> next() {
        for (int pass = 0; pass < 2; ++pass) {
            while (!queue_.empty()) {
                auto [l, dir] = queue_.front();
                queue_.pop_front();
                in_queue_[2 * l + dir] = 0;
                ++st_.pops;
                if (auto s = config(l, dir)) return std::pair{l * 2 + dir, std::move(*s)};
            }
            if (pass == 0) {
                ++st_.rescans;
                seed_all();
            }
        }
        return std::nullopt;
    }

    void apply(int key, const Reduction& r) {
        int l = key / 2, dir = key % 2;
        int root = dir == 0 ? dt_.links[l].s : dt_.links[l].t;
        int other = dir == 0 ? dt_.links[l].t : dt_.links[l].s;
        auto tris = collect(l, root, cap_);
        std::vector<int> sources{other};
        for (int tr : tris) {
            const auto& tv = t_.triangles()[tr];
            bool dead = false;
            for (int v : r.removed) dead |= (tv[0] == v || tv[1] == v || tv[2] == v);
            if (dead) {
                alive_[tr] = 0;
                --alive_count_;
            } else {
                sources.push_back(tr);
            }
            ++st_.work;
        }
        enqueue_near(sources);
    }

    Current extract() const {
        std::vector<int> verts;
        std::vector<Edge> edges;
        std::vector<char> seen(t_.n(), 0);
        for (int tr = 0; tr < dt_.node_count; ++tr) {
            if (!alive_[tr]) continue;
            const auto& tv = t_.triangles()[tr];
            for (int i = 0; i < 3; ++i) {
                if (!seen[tv[i]]) {
                    seen[tv[i]] = 1;
                    verts.push_back(tv[i]);
                }
                edges.push_back(make_edge(tv[i], tv[(i + 1) % 3]));
            }
        }
        return rebuild(verts, edges, t_.n());
    }

private:
    int neighbor_across(int tr, int link) const {
        return dt_.links[link].s == tr ? dt_.links[link].t : dt_.links[link].s;
    }

    // Alive triangles reachable from root without crossing link l; empty if more than cap.
    std::vector<int> collect(int l, int root, int cap) {
        std::vector<int> out{root}, via{l};
        for (std::size_t i = 0; i < out.size(); ++i) {
            int tr = out[i];
            ++st_.work;
            for (int lk : dt_.adjacency[tr]) {
                if (lk == via[i]) continue;
                int nb = neighbor_across(tr, lk);
                if (!alive_[nb]) continue;
                out.push_back(nb);
                via.push_back(lk);
                if (static_cast<int>(out.size()) > cap) return {};
            }
        }
        return out;
    }

    int side_size(int l, int root) {
        auto tris = collect(l, root, cap_);
        return tris.empty() ? cap_ + 1 : static_cast<int>(tris.size());
    }

    std::optional<Side> config(int l, int dir) {
        const auto& link = dt_.links[l];
        if (!alive_[link.s] || !alive_[link.t]) return std::nullopt;
        int root = dir == 0 ? link.s : link.t;
        // rooted side with parent pointers
        std::vector<int> order{root}, parent{-1}, via{l};
        for (std::size_t i = 0; i < order.size(); ++i) {
            int tr = order[i];
            ++st_.work;
            for (int lk : dt_.adjacency[tr]) {
                if (lk == via[i]) continue;
                int nb = neighbor_across(tr, lk);
                if (!alive_[nb]) continue;
                order.push_back(nb);
                parent.push_back(static_cast<int>(i));
                via.push_back(lk);
                if (static_cast<int>(order.size()) > cap_) return std::nullopt;
            }
        }
        const int k = static_cast<int>(order.size()) + 1;
        if (k < lambda_) return std::nullopt;
        std::vector<int> sub(order.size(), 1);
        for (std::size_t i = order.size(); i-- > 1;) {
            if (sub[i] + 1 >= lambda_) return std::nullopt;
            sub[parent[i]] += sub[i];
        }
        Side s;
        s.k = k;
        Edge d = link.diagonal;
        std::vector<int> verts;
        for (int tr : order)
            for (int v : t_.triangles()[tr])
                if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        bool inside = std::any_of(verts.begin(), verts.end(), [&](int v) { return v > d.a && v < d.b; });
        int v0 = inside ? d.a : d.b;
        const int n = t_.n();
        std::sort(verts.begin(), verts.end(), [&](int x, int y) { return (x - v0 + n) % n < (y - v0 + n) % n; });
        if (static_cast<int>(verts.size()) != k + 1) throw std::logic_error("side vertex count");
        std::copy(verts.begin(), verts.end(), s.L.begin());
        for (std::size_t i = 1; i < order.size(); ++i) s.inner.push_back(dt_.links[via[i]].diagonal);
        s.shape = shape_id(order, parent);
        return s;
    }

    int shape_id(const std::vector<int>& order, const std::vector<int>& parent) const {
        std::vector<std::vector<std::string>> kids(order.size());
        std::vector<std::string> enc(order.size());
        for (std::size_t i = order.size(); i-- > 0;) {
            auto& ch = kids[i];
            std::sort(ch.begin(), ch.end());
            enc[i] = "(";
            for (auto& c : ch) enc[i] += c;
            enc[i] += ")";
            if (i > 0) kids[parent[i]].push_back(enc[i]);
        }
        const auto& shapes = subtree_shapes(mode_);
        auto it = std::lower_bound(shapes.begin(), shapes.end(), enc[0]);
        if (it == shapes.end() || *it != enc[0]) throw std::logic_error("configuration missing from catalogue");
        return static_cast<int>(it - shapes.begin());
    }

    void try_push(int l, int dir) {
        if (in_queue_[2 * l + dir]) return;
        if (!config(l, dir)) return;
        in_queue_[2 * l + dir] = 1;
        queue_.push_back({l, dir});
        ++st_.pushes;
    }

    // Re-examines every diagonal whose side towards the modified region is
    // small enough to be a configuration.
    void enqueue_near(const std::vector<int>& sources) {
        ++stamp_;
        std::vector<int> frontier;
        for (int s : sources) {
            if (!alive_[s] || mark_[s] == stamp_) continue;
            mark_[s] = stamp_;
            frontier.push_back(s);
        }
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            int tr = frontier[i];
            for (int lk : dt_.adjacency[tr]) {
                int nb = neighbor_across(tr, lk);
                if (!alive_[nb]) continue;
                ++st_.work;
                int dir_tr = dt_.links[lk].s == tr ? 0 : 1;
                try_push(lk, dir_tr);
                try_push(lk, 1 - dir_tr);
                if (mark_[nb] == stamp_) continue;
                if (side_size(lk, tr) > cap_) continue;
                mark_[nb] = stamp_;
                frontier.push_back(nb);
            }
        }
    }

    const TriangulationGraph& t_;
    int lambda_;
    int cap_;
    AlgoStats& st_;
    DualTree dt_;
    ShapeMode mode_;
    std::vector<char> alive_;
    int alive_count_ = 0;
    std::vector<char> in_queue_;
    std::deque<std::pair<int, int>> queue_;
    std::vector<int> mark_;
    int stamp_ = 0;
};

}  // namespace

DominatingSet run_queue(const TriangulationGraph& t, DomMode mode, int lambda, int cutoff, const CaseFn& cases,
                        const BaseFn& base, AlgoStats* stats) {
    AlgoStats local;
    AlgoStats& st = stats ? *stats : local;
    std::vector<std::function<void(GuardBag&)>> rewrites;
    QueueEngine eng(t, lambda, st);
    if (eng.size() >= cutoff) eng.seed_all();
    while (eng.size() >= cutoff) {
        auto found = eng.next();
        if (!found) throw std::logic_error("no configuration found in a graph above the cutoff");
        auto& [key, side] = *found;
        Reduction r = cases(side);
        if (r.contract) throw std::logic_error("queue engine does not contract");
        ++st.reductions;
        eng.apply(key, r);
        auto rw = r.rewrite;
        rewrites.push_back([rw](GuardBag& b) { rw(b, -1); });
    }
    Current cur = eng.extract();
    st.base_n = cur.g.n();
    GuardBag bag(t.n());
    add_base(bag, base(cur.g), cur.glob);
    for (auto it = rewrites.rbegin(); it != rewrites.rend(); ++it) (*it)(bag);
    return finish(bag, mode);
}

}  // namespace gg::detail
