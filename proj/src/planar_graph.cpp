#include "orthoplan/planar_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace orthoplan {

namespace {

// Canonical form of a closed walk: rotate so the smallest vertex comes
// first, keeping direction.
std::vector<Vid> canonical_cycle(std::vector<Vid> w) {
    auto it = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), it, w.end());
    return w;
}

} // namespace

void PlanarGraph::rebuild_index() {
    idx_.clear();
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) idx_[ids_[i]] = i;
    edges_.clear();
    num_edges_ = 0;
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
        for (Vid w : rot_[i]) {
            auto k = edge_key(ids_[i], w);
            if (!edges_.count(k)) {
                edges_.insert(k);
                ++num_edges_;
            }
        }
    }
}

PlanarGraph PlanarGraph::from_rotation(std::vector<Vid> vertices,
                                       std::unordered_map<Vid, std::vector<Vid>> rotation,
                                       std::vector<Vid> outer_face,
                                       std::unordered_map<Vid, std::string> labels) {
    PlanarGraph g;
    std::sort(vertices.begin(), vertices.end());
    g.ids_ = vertices;
    g.rot_.resize(vertices.size());
    g.labels_ = std::move(labels);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        auto it = rotation.find(vertices[i]);
        if (it == rotation.end())
            throw inconsistent_rotation_error("missing rotation for vertex " +
                                              std::to_string(vertices[i]));
        g.rot_[i] = it->second;
    }
    g.rebuild_index();

    // basic sanity: symmetric adjacency, no loops, no duplicates
    for (int i = 0; i < g.num_vertices(); ++i) {
        Vid v = g.ids_[i];
        std::set<Vid> seen;
        for (Vid w : g.rot_[i]) {
            if (w == v) throw inconsistent_rotation_error("self-loop at " + std::to_string(v));
            if (!seen.insert(w).second)
                throw inconsistent_rotation_error("parallel edge " + std::to_string(v) + "-" +
                                                  std::to_string(w));
            if (!g.idx_.count(w))
                throw inconsistent_rotation_error("rotation references unknown vertex " +
                                                  std::to_string(w));
            auto& back = g.rot_[g.idx_.at(w)];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw inconsistent_rotation_error("asymmetric adjacency " + std::to_string(v) +
                                                  "-" + std::to_string(w));
        }
    }

    auto rep = g.check_rotation_closure();
    if (!rep.verdict()) throw inconsistent_rotation_error(rep.first_failure());

    // locate the outer face among traversed faces: exact walk first, then
    // any face over the same vertex set
    auto fs = g.walk_faces();
    auto want_seq = canonical_cycle(outer_face);
    std::set<Vid> want(outer_face.begin(), outer_face.end());
    bool found = false;
    for (auto& f : fs)
        if (f.vertices == want_seq) {
            g.outer_ = f.vertices;
            found = true;
            break;
        }
    if (!found) {
        for (auto& f : fs) {
            std::set<Vid> have(f.vertices.begin(), f.vertices.end());
            if (have == want && f.vertices.size() == outer_face.size()) {
                g.outer_ = f.vertices;
                found = true;
                break;
            }
        }
    }
    if (!found) throw unknown_outer_face_error("outer face not present in embedding");
    return g;
}

Vid PlanarGraph::max_vertex_id() const {
    Vid m = -1;
    for (Vid v : ids_) m = std::max(m, v);
    return m;
}

bool PlanarGraph::on_outer_face(Vid v) const {
    return std::find(outer_.begin(), outer_.end(), v) != outer_.end();
}

bool PlanarGraph::edge_on_outer_face(Vid a, Vid b) const {
    int n = static_cast<int>(outer_.size());
    for (int i = 0; i < n; ++i) {
        Vid x = outer_[i], y = outer_[(i + 1) % n];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

int PlanarGraph::rot_position(Vid a, Vid b) const {
    auto& r = neighbors(a);
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == b) return i;
    return -1;
}

// Face tracing: the successor of directed edge (u,v) is (v,w) where w
// precedes u in the ccw rotation at v. With ccw rotations this walks every
// interior face counterclockwise and the outer face clockwise.
std::vector<Face> PlanarGraph::walk_faces() const {
    std::vector<Face> out;
    std::set<std::pair<Vid, Vid>> used;
    for (int i = 0; i < num_vertices(); ++i) {
        Vid v = ids_[i];
        for (Vid w : rot_[i]) {
            if (used.count({v, w})) continue;
            std::vector<Vid> walk;
            Vid a = v, b = w;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                auto& r = rot_.at(idx_.at(b));
                int p = -1;
                for (int j = 0; j < static_cast<int>(r.size()); ++j)
                    if (r[j] == a) {
                        p = j;
                        break;
                    }
                int q = (p - 1 + static_cast<int>(r.size())) % static_cast<int>(r.size());
                a = b;
                b = r[q];
            }
            Face f;
            f.vertices = canonical_cycle(walk);
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
        if (x.vertices[0] != y.vertices[0]) return x.vertices[0] < y.vertices[0];
        if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
    return out;
}

ValidationReport PlanarGraph::check_rotation_closure() const {
    ValidationReport rep;
    long long dir_edges = 0;
    for (auto& r : rot_) dir_edges += static_cast<long long>(r.size());
    auto fs = walk_faces();
    long long walk_len = 0;
    for (auto& f : fs) walk_len += static_cast<long long>(f.vertices.size());
    rep.add("every directed edge on exactly one face", walk_len == dir_edges);
    long long v = num_vertices(), e = num_edges_, fcount = static_cast<long long>(fs.size());
    rep.add("euler v-e+f=2", v - e + fcount == 2,
            "V=" + std::to_string(v) + " E=" + std::to_string(e) + " F=" + std::to_string(fcount));
    return rep;
}

std::vector<Face> PlanarGraph::faces() const {
    auto fs = walk_faces();
    auto want = canonical_cycle(outer_);
    for (auto& f : fs) f.is_outer = f.vertices == want;
    return fs;
}

std::pair<Face, Face> PlanarGraph::faces_of_edge(Vid a, Vid b) const {
    if (!has_edge(a, b)) throw precondition_error("no such edge");
    std::vector<Face> hit;
    for (auto& f : faces()) {
        int n = static_cast<int>(f.vertices.size());
        for (int i = 0; i < n; ++i) {
            Vid x = f.vertices[i], y = f.vertices[(i + 1) % n];
            if ((x == a && y == b) || (x == b && y == a)) {
                hit.push_back(f);
                break;
            }
        }
    }
    if (hit.size() != 2) throw precondition_error("edge does not bound exactly two faces");
    return {hit[0], hit[1]};
}

std::vector<std::pair<Vid, Vid>> PlanarGraph::edge_list() const {
    std::vector<std::pair<Vid, Vid>> out;
    for (int i = 0; i < num_vertices(); ++i) {
        Vid v = ids_[i];
        for (Vid w : rot_[i])
            if (v < w) out.push_back({v, w});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- builder

GraphBuilder::GraphBuilder(const PlanarGraph& g) {
    ids_ = g.vertex_ids();
    for (Vid v : ids_) rot_[v] = g.neighbors(v);
    outer_ = g.outer_face();
    labels_ = g.labels();
}

void GraphBuilder::delete_edge(Vid a, Vid b) {
    auto& ra = rot_.at(a);
    auto& rb = rot_.at(b);
    ra.erase(std::remove(ra.begin(), ra.end(), b), ra.end());
    rb.erase(std::remove(rb.begin(), rb.end(), a), rb.end());
}

void GraphBuilder::add_vertex(Vid v) {
    if (rot_.count(v)) throw precondition_error("vertex exists");
    ids_.push_back(v);
    rot_[v] = {};
}

std::vector<Vid>& GraphBuilder::rotation(Vid v) { return rot_.at(v); }

bool GraphBuilder::has_edge(Vid a, Vid b) const {
    auto it = rot_.find(a);
    if (it == rot_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), b) != it->second.end();
}

void GraphBuilder::insert_neighbor_before(Vid a, Vid ref, Vid b) {
    auto& r = rot_.at(a);
    auto it = std::find(r.begin(), r.end(), ref);
    if (it == r.end()) throw precondition_error("rotation reference missing");
    r.insert(it, b);
}

void GraphBuilder::insert_neighbor_after(Vid a, Vid ref, Vid b) {
    auto& r = rot_.at(a);
    auto it = std::find(r.begin(), r.end(), ref);
    if (it == r.end()) throw precondition_error("rotation reference missing");
    r.insert(it + 1, b);
}

void GraphBuilder::set_rotation(Vid v, std::vector<Vid> rot) { rot_.at(v) = std::move(rot); }

void GraphBuilder::replace_neighbor(Vid a, Vid old_nb, Vid new_nb) {
    auto& r = rot_.at(a);
    auto it = std::find(r.begin(), r.end(), old_nb);
    if (it == r.end()) throw precondition_error("neighbor missing");
    *it = new_nb;
}

void GraphBuilder::set_outer_face(std::vector<Vid> outer) { outer_ = std::move(outer); }

PlanarGraph GraphBuilder::finish() const {
    return PlanarGraph::from_rotation(ids_, rot_, outer_, labels_);
}

// ------------------------------------------------------------- operations

PlanarGraph build_graph(const std::vector<std::pair<Vid, Vid>>& edges,
                        const std::optional<std::unordered_map<Vid, std::vector<Vid>>>& rotation,
                        const std::optional<std::vector<Vid>>& outer_face,
                        const std::unordered_map<Vid, std::string>& labels) {
    if (edges.empty()) throw parse_error("empty edge list");
    std::set<Vid> vset;
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0) throw parse_error("negative vertex id");
        if (a == b) throw parse_error("self-loop");
        vset.insert(a);
        vset.insert(b);
    }
    std::vector<Vid> vertices(vset.begin(), vset.end());

    std::unordered_map<Vid, std::vector<Vid>> rot;
    if (rotation) {
        rot = *rotation;
    } else {
        rot = planar_embedding(vertices, edges);
    }

    // Determine outer face: given, else max length face with lexicographic
    // tie-break on the canonical walk. Trace faces directly from the
    // rotation map.
    std::set<std::pair<Vid, Vid>> used;
    std::vector<std::vector<Vid>> walks;
    for (Vid v : vertices) {
        for (Vid w : rot.at(v)) {
            if (used.count({v, w})) continue;
            std::vector<Vid> walk;
            Vid a = v, b = w;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                auto& r = rot.at(b);
                auto p = std::find(r.begin(), r.end(), a);
                if (p == r.end()) throw inconsistent_rotation_error("asymmetric adjacency");
                int pi = static_cast<int>(p - r.begin());
                int q = (pi - 1 + static_cast<int>(r.size())) % static_cast<int>(r.size());
                a = b;
                b = r[q];
            }
            walks.push_back(walk);
        }
    }
    std::vector<Vid> outer;
    if (outer_face) {
        outer = *outer_face;
        std::set<Vid> want(outer.begin(), outer.end());
        bool found = false;
        for (auto& w : walks)
            if (w.size() == outer.size() && std::set<Vid>(w.begin(), w.end()) == want) found = true;
        if (!found) throw unknown_outer_face_error("requested outer face is not a face");
    } else {
        std::vector<Vid> best;
        for (auto& w : walks) {
            auto c = w;
            auto it = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), it, c.end());
            if (best.empty() || c.size() > best.size() || (c.size() == best.size() && c < best))
                best = c;
        }
        outer = best;
    }
    return PlanarGraph::from_rotation(vertices, rot, outer, labels);
}

std::vector<Face> faces(const PlanarGraph& g) { return g.faces(); }

bool is_biconnected(const PlanarGraph& g) {
    int n = g.num_vertices();
    if (n < 3) return false;
    // Tarjan cut-vertex search on internal indices.
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    int counter = 0;
    bool has_cut = false;
    std::vector<int> stack;
    std::vector<int> childcount(n, 0);
    std::vector<size_t> iter(n, 0);
    stack.push_back(0);
    num[0] = low[0] = counter++;
    while (!stack.empty()) {
        int v = stack.back();
        Vid vid = g.id_of(v);
        auto& nb = g.neighbors(vid);
        if (iter[v] < nb.size()) {
            int w = g.index(nb[iter[v]++]);
            if (num[w] == -1) {
                parent[w] = v;
                ++childcount[v];
                num[w] = low[w] = counter++;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back();
                low[p] = std::min(low[p], low[v]);
                if (parent[p] != -1 && low[v] >= num[p]) has_cut = true;
            }
        }
    }
    if (counter != n) return false; // disconnected
    if (childcount[0] > 1) has_cut = true;
    return !has_cut;
}

ValidationReport validate_ptg(const PlanarGraph& g) {
    ValidationReport rep;
    rep.add("biconnected", is_biconnected(g));
    bool all_tri = true;
    std::string bad;
    for (auto& f : g.faces()) {
        if (!f.is_outer && f.vertices.size() != 3) {
            all_tri = false;
            bad = "face of length " + std::to_string(f.vertices.size());
            break;
        }
    }
    rep.add("inner faces triangular", all_tri, bad);
    rep.add("outer face length >= 3", g.outer_face().size() >= 3);
    return rep;
}

namespace {

bool connected_after_removal(const PlanarGraph& g, const std::vector<int>& removed_mask) {
    int n = g.num_vertices();
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (!removed_mask[i]) {
            start = i;
            break;
        }
    if (start < 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> q{start};
    seen[start] = 1;
    size_t head = 0;
    int cnt = 1;
    while (head < q.size()) {
        int v = q[head++];
        for (Vid w : g.neighbors(g.id_of(v))) {
            int wi = g.index(w);
            if (!removed_mask[wi] && !seen[wi]) {
                seen[wi] = 1;
                q.push_back(wi);
                ++cnt;
            }
        }
    }
    int alive = 0;
    for (int i = 0; i < n; ++i)
        if (!removed_mask[i]) ++alive;
    return cnt == alive;
}

// Unit-vertex-capacity max-flow check: true iff >= k internally disjoint
// paths between s and t (non-adjacent).
bool vertex_flow_at_least(const PlanarGraph& g, int s, int t, int k) {
    int n = g.num_vertices();
    // split nodes: in = 2v, out = 2v+1
    int N = 2 * n;
    std::vector<std::vector<int>> adj(N);
    std::vector<std::tuple<int, int, int>> edges; // from,to,cap
    auto add = [&](int a, int b, int cap) {
        adj[a].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, b, cap});
        adj[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({b, a, 0});
    };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? k : 1);
    for (auto& [a, b] : g.edge_list()) {
        int ai = g.index(a), bi = g.index(b);
        add(2 * ai + 1, 2 * bi, k);
        add(2 * bi + 1, 2 * ai, k);
    }
    int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (flow < k) {
        // bfs augment
        std::vector<int> pre(N, -1);
        std::vector<int> q{src};
        size_t head = 0;
        pre[src] = -2;
        while (head < q.size() && pre[dst] == -1) {
            int v = q[head++];
            for (int ei : adj[v]) {
                auto& [from, to, cap] = edges[ei];
                if (from == v && cap > 0 && pre[to] == -1) {
                    pre[to] = ei;
                    q.push_back(to);
                }
            }
        }
        if (pre[dst] == -1) break;
        int v = dst;
        while (v != src) {
            int ei = pre[v];
            std::get<2>(edges[ei]) -= 1;
            std::get<2>(edges[ei ^ 1]) += 1;
            v = std::get<0>(edges[ei]);
        }
        ++flow;
    }
    return flow >= k;
}

} // namespace

bool connectivity_at_least(const PlanarGraph& g, int k) {
    if (k < 1 || k > 4) throw precondition_error("k must be in 1..4");
    int n = g.num_vertices();
    if (n <= k) throw too_few_vertices_error("graph too small for k-connectivity check");

    // exhaustive removal when affordable, else max-flow per Even's scheme
    double subsets = 1;
    for (int i = 0; i < k - 1; ++i) subsets *= n;
    if (subsets * (n + g.num_edges()) <= 5e7) {
        std::vector<int> mask(n, 0);
        std::vector<int> pick(k - 1, 0);
        // iterate all subsets of size < k (sizes 0..k-1); size 0 = plain connectivity
        std::function<bool(int, int, int)> rec = [&](int size, int start, int chosen) -> bool {
            if (chosen == size) return connected_after_removal(g, mask);
            for (int v = start; v < n; ++v) {
                mask[v] = 1;
                if (!rec(size, v + 1, chosen + 1)) {
                    mask[v] = 0;
                    return false;
                }
                mask[v] = 0;
            }
            return true;
        };
        for (int size = 0; size < k; ++size)
            if (!rec(size, 0, 0)) return false;
        return true;
    }

    // flow fallback: any cut of size < k misses at least one of the first k
    // vertices; flows from those to all non-neighbors certify.
    for (int si = 0; si < k && si < n; ++si) {
        std::set<Vid> nb(g.neighbors(g.id_of(si)).begin(), g.neighbors(g.id_of(si)).end());
        for (int t = 0; t < n; ++t) {
            if (t == si || nb.count(g.id_of(t))) continue;
            if (!vertex_flow_at_least(g, si, t, k)) return false;
        }
    }
    return true;
}

// --------------------------------------------------- edge subdivision

PlanarGraph PlanarGraph::subdivide_edge(Vid a, Vid b, Vid u) const {
    if (!has_edge(a, b)) throw precondition_error("edge not present");
    auto [f1, f2] = faces_of_edge(a, b);

    auto apex_of = [&](const Face& f) -> Vid {
        if (f.vertices.size() != 3)
            throw precondition_error("edge face is not a triangle");
        for (Vid v : f.vertices)
            if (v != a && v != b) return v;
        throw precondition_error("degenerate face");
    };
    Vid p = apex_of(f1), q = apex_of(f2);
    if (p == q) throw edge_on_outer_face_error("cannot subdivide: both faces share the apex");

    bool f1_outer = f1.is_outer, f2_outer = f2.is_outer;

    GraphBuilder bld(*this);
    // Positions: remember where b sits in rot(a) and vice versa, then swap in u.
    bld.replace_neighbor(a, b, u);
    bld.replace_neighbor(b, a, u);
    bld.add_vertex(u);
    // apexes: u goes between a and b in their rotations (they are consecutive
    // there via the shared triangle face).
    auto insert_between = [&](Vid apex) {
        auto& r = bld.rotation(apex);
        int n = static_cast<int>(r.size());
        for (int i = 0; i < n; ++i) {
            Vid x = r[i], y = r[(i + 1) % n];
            if ((x == a && y == b) || (x == b && y == a)) {
                r.insert(r.begin() + i + 1, u);
                return;
            }
        }
        throw precondition_error("apex not adjacent to both endpoints consecutively");
    };
    insert_between(p);
    insert_between(q);

    // rotation at u: quad walk (a, p, b, q); orientation fixed by matching a
    // face walk so closure holds. Try (a,p,b,q) then its reverse.
    bld.set_rotation(u, {a, p, b, q});

    // If one side was outer, u lands in the unbounded region: the new outer
    // face is one of the four triangles around u. Deterministic pick:
    // (min(a,b), u, former outer apex).
    std::vector<Vid> new_outer = outer_;
    if (f1_outer || f2_outer) {
        Vid apex_outer = f1_outer ? p : q;
        new_outer = {std::min(a, b), u, apex_outer};
    }
    bld.set_outer_face(new_outer);
    try {
        return bld.finish();
    } catch (const error&) {
        bld.set_rotation(u, {q, b, p, a});
        return bld.finish();
    }
}

} // namespace orthoplan
