#include "orthoplan/ordering.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace orthoplan {

const char* category_name(Category c) {
    switch (c) {
        case Category::A: return "A";
        case Category::B: return "B";
        case Category::C: return "C";
        case Category::D: return "D";
        case Category::E: return "E";
        case Category::F: return "F";
        default: return "none";
    }
}

std::array<Vid, 4> category_sequence(Category c, const SiteL& site) {
    Vid a = site.a, d = site.d, u = site.u.value(), C1 = site.C1;
    switch (c) {
        case Category::A: return {C1, u, d, a};
        case Category::B: return {d, u, a, C1};
        case Category::C: return {d, u, C1, a};
        case Category::D: return {a, d, u, C1};
        case Category::E: return {C1, a, u, d};
        case Category::F: return {a, C1, u, d};
        default: throw precondition_error("no sequence for category none");
    }
}

bool OrderState::is_eligible(int i) const {
    return !st[i] && on_contour[i] && ch[i] == 0 && vi[i] >= 2;
}

namespace {

OrderState init_state(const CompletedGraph& cg) {
    if (!cg.ns_edge_present) throw precondition_error("(N,S) edge required before ordering");
    const PlanarGraph& g = cg.graph;
    int n = g.num_vertices();
    OrderState s;
    s.g = &g;
    s.N = cg.N;
    s.E = cg.E;
    s.S = cg.S;
    s.W = cg.W;
    s.rank.assign(n, 0);
    s.st.assign(n, 0);
    s.vi.assign(n, 0);
    s.ch.assign(n, 0);
    s.cl.assign(n, -1);
    s.cr.assign(n, -1);
    s.on_contour.assign(n, 0);
    int Wi = g.index(cg.W), Si = g.index(cg.S), Ni = g.index(cg.N), Ei = g.index(cg.E);
    s.rank[Wi] = 1;
    s.rank[Si] = 2;
    s.st[Wi] = s.st[Si] = 1;
    s.vi[Ni] = 2;
    s.vi[Ei] = 1;
    s.next_rank = n;
    // initial contour: W - N - E - S (outer cycle minus the (W,S) edge)
    s.on_contour[Wi] = s.on_contour[Ni] = s.on_contour[Ei] = s.on_contour[Si] = 1;
    s.cl[Ni] = Wi;
    s.cr[Ni] = Ei;
    s.cl[Ei] = Ni;
    s.cr[Ei] = Si;
    s.cl[Wi] = -1;
    s.cr[Wi] = Ni;
    s.cl[Si] = Ei;
    s.cr[Si] = -1;
    s.eligible.insert(Ni);
    return s;
}

// Strict-interior unordered neighbors of v, ordered from the cl side to the
// cr side along v's rotation.
std::vector<int> fan_of(const OrderState& s, int v) {
    const PlanarGraph& g = *s.g;
    Vid vid = g.id_of(v);
    const auto& rot = g.neighbors(vid);
    int deg = static_cast<int>(rot.size());
    int clv = s.cl[v], crv = s.cr[v];
    int pos_cl = -1;
    for (int i = 0; i < deg; ++i)
        if (g.index(rot[i]) == clv) pos_cl = i;
    if (pos_cl < 0) throw contour_broken_error("contour-left neighbor missing in rotation");

    auto strict_interior = [&](int idx) { return !s.on_contour[idx] && !s.st[idx]; };

    for (int dir : {1, -1}) {
        std::vector<int> fan;
        int i = pos_cl;
        bool ok = false;
        for (int step = 0; step < deg; ++step) {
            i = (i + dir + deg) % deg;
            int w = g.index(rot[i]);
            if (strict_interior(w)) {
                fan.push_back(w);
            } else {
                ok = (w == crv);
                break;
            }
        }
        if (ok) return fan;
    }
    throw contour_broken_error("no interior fan closes onto contour-right");
}

void remove_vertex(OrderState& s, int v) {
    const PlanarGraph& g = *s.g;
    s.rank[v] = s.next_rank--;
    s.st[v] = 1;
    s.trace.push_back(g.id_of(v));
    s.eligible.erase(v);

    std::vector<int> recheck;
    for (Vid w : g.neighbors(g.id_of(v))) {
        int wi = g.index(w);
        if (!s.st[wi]) {
            s.vi[wi] += 1;
            recheck.push_back(wi);
        }
    }

    std::vector<int> fan = fan_of(s, v);
    int L = s.cl[v], R = s.cr[v];
    s.on_contour[v] = 0;
    s.cl[v] = s.cr[v] = -1;

    if (fan.empty()) {
        // L and R become contour-adjacent; their mutual edge stops being a chord
        if (L >= 0) s.cr[L] = R;
        if (R >= 0) s.cl[R] = L;
        if (L >= 0 && R >= 0 && g.has_edge(g.id_of(L), g.id_of(R))) {
            s.ch[L] -= 1;
            s.ch[R] -= 1;
            recheck.push_back(L);
            recheck.push_back(R);
        }
    } else {
        int prev = L;
        for (int m : fan) {
            if (prev >= 0) s.cr[prev] = m;
            s.cl[m] = prev;
            prev = m;
        }
        if (prev >= 0) s.cr[prev] = R;
        if (R >= 0) s.cl[R] = prev;
        for (int m : fan) s.on_contour[m] = 1;

        // chord counting for the newcomers; skip fan-internal pairs where the
        // partner has not been processed yet so each edge counts once
        std::vector<char> processed_flag; // lazily sized map via set
        std::set<int> unprocessed(fan.begin(), fan.end());
        for (int m : fan) {
            unprocessed.erase(m);
            Vid mid = g.id_of(m);
            for (Vid z : g.neighbors(mid)) {
                int zi = g.index(z);
                if (!s.on_contour[zi]) continue;
                if (zi == s.cl[m] || zi == s.cr[m]) continue;
                if (unprocessed.count(zi)) continue;
                s.ch[m] += 1;
                s.ch[zi] += 1;
                recheck.push_back(zi);
            }
            recheck.push_back(m);
        }
        (void)processed_flag;
    }

    for (int w : recheck)
        if (s.is_eligible(w)) s.eligible.insert(w);
}

// Pop the smallest eligible vertex not in `skip`; verifies lazily.
std::optional<int> pop_eligible(OrderState& s, const std::set<int>& skip) {
    for (auto it = s.eligible.begin(); it != s.eligible.end();) {
        int v = *it;
        if (!s.is_eligible(v)) {
            it = s.eligible.erase(it);
            continue;
        }
        if (skip.count(v)) {
            ++it;
            continue;
        }
        return v;
    }
    return std::nullopt;
}

CanonicalOrdering finish_ordering(const OrderState& s, Category cat) {
    const PlanarGraph& g = *s.g;
    CanonicalOrdering ord;
    ord.by_rank.assign(g.num_vertices(), -1);
    for (int i = 0; i < g.num_vertices(); ++i) {
        if (s.rank[i] == 0) throw stuck_error("incomplete ordering");
        ord.rank[g.id_of(i)] = s.rank[i];
        ord.by_rank[s.rank[i] - 1] = g.id_of(i);
    }
    ord.trace = s.trace;
    ord.category = cat;
    return ord;
}

} // namespace

CanonicalOrdering canonical_order(const CompletedGraph& cg) {
    OrderState s = init_state(cg);
    while (s.next_rank >= 3) {
        auto v = pop_eligible(s, {});
        if (!v)
            throw stuck_error("no eligible vertex at rank " + std::to_string(s.next_rank) +
                              " of " + std::to_string(cg.graph.num_vertices()));
        remove_vertex(s, *v);
    }
    return finish_ordering(s, Category::None);
}

OrderState canon_label_partial(const CompletedGraph& cg, const std::vector<Vid>& frozen) {
    OrderState s = init_state(cg);
    for (Vid f : frozen) {
        if (f == cg.W || f == cg.S)
            throw precondition_error("frozen set may not contain W or S");
        s.frozen.insert(cg.graph.index(f));
    }
    while (s.next_rank >= 3) {
        auto v = pop_eligible(s, s.frozen);
        if (!v) break; // paused: only frozen (or nothing) eligible
        remove_vertex(s, *v);
    }
    return s;
}

std::optional<CanonicalOrdering> try_category(const OrderState& paused,
                                              const std::array<Vid, 4>& priority) {
    OrderState s = paused; // copy-on-try
    s.frozen.clear();
    const PlanarGraph& g = *s.g;
    std::array<int, 4> prio{};
    for (int i = 0; i < 4; ++i) prio[i] = g.index(priority[i]);
    {
        std::set<int> uniq(prio.begin(), prio.end());
        if (uniq.size() != 4) throw precondition_error("priority list must have 4 distinct vertices");
    }

    int progress = 0;
    while (s.next_rank >= 3) {
        if (progress < 4 && s.is_eligible(prio[progress])) {
            remove_vertex(s, prio[progress]);
            ++progress;
            continue;
        }
        std::set<int> skip;
        for (int i = progress; i < 4; ++i) skip.insert(prio[i]);
        auto v = pop_eligible(s, skip);
        if (!v) return std::nullopt;
        remove_vertex(s, *v);
    }
    return finish_ordering(s, Category::None);
}

std::vector<std::pair<CanonicalOrdering, Category>> prioritized_orderings(
    const CompletedGraph& cg, const SiteL& site) {
    if (!site.u) throw precondition_error("site has no u vertex; run modify_kl first");
    std::vector<Vid> frozen = {site.a, site.b, site.c, site.d, *site.u, site.C1};
    OrderState paused = canon_label_partial(cg, frozen);
    std::vector<std::pair<CanonicalOrdering, Category>> out;
    for (Category c :
         {Category::A, Category::B, Category::C, Category::D, Category::E, Category::F}) {
        auto ord = try_category(paused, category_sequence(c, site));
        if (ord) {
            ord->category = c;
            out.push_back({std::move(*ord), c});
        }
    }
    return out;
}

std::pair<CanonicalOrdering, Category> prioritized_order(const CompletedGraph& cg,
                                                         const SiteL& site) {
    auto all = prioritized_orderings(cg, site);
    if (all.empty())
        throw no_category_error("no category admits a priority ordering (Lemma 1 violation)");
    return all.front();
}

ValidationReport validate_ordering(const CompletedGraph& cg, const CanonicalOrdering& ord) {
    ValidationReport rep;
    const PlanarGraph& g = cg.graph;
    int n = g.num_vertices();
    if (static_cast<int>(ord.by_rank.size()) != n || ord.by_rank[0] == -1) {
        rep.add("ordering complete", false, "rank table size mismatch");
        return rep;
    }
    rep.add("v1 is W", ord.by_rank[0] == cg.W);
    rep.add("v2 is S", ord.by_rank[1] == cg.S);
    rep.add("vn is N", ord.by_rank[n - 1] == cg.N);

    // insertion replay with a contour list; checks Def-4 (ii)
    std::vector<Vid> contour = {cg.W, cg.S};
    auto pos_in_contour = [&](Vid v) {
        for (size_t i = 0; i < contour.size(); ++i)
            if (contour[i] == v) return static_cast<int>(i);
        return -1;
    };
    bool replay_ok = true;
    std::string replay_detail;
    for (int j = 3; j <= n && replay_ok; ++j) {
        Vid v = ord.by_rank[j - 1];
        std::vector<int> low;
        for (Vid w : g.neighbors(v)) {
            if (ord.rank.at(w) < j) {
                int p = pos_in_contour(w);
                if (p < 0) {
                    replay_ok = false;
                    replay_detail =
                        "rank " + std::to_string(j) + ": lower neighbor off the contour";
                }
                low.push_back(p);
            }
        }
        if (!replay_ok) break;
        if (low.size() < 2) {
            replay_ok = false;
            replay_detail = "rank " + std::to_string(j) + ": fewer than two lower neighbors";
            break;
        }
        std::sort(low.begin(), low.end());
        for (size_t i = 1; i < low.size(); ++i)
            if (low[i] != low[i - 1] + 1) {
                replay_ok = false;
                replay_detail = "rank " + std::to_string(j) + ": lower neighbors not consecutive";
            }
        if (!replay_ok) break;
        int lo = low.front(), hi = low.back();
        std::vector<Vid> next(contour.begin(), contour.begin() + lo + 1);
        next.push_back(v);
        next.insert(next.end(), contour.begin() + hi, contour.end());
        contour = std::move(next);
    }
    rep.add("prefix shelling (consecutive lower neighborhoods)", replay_ok, replay_detail);

    // Def-4 (iii): at least two higher-ranked neighbors for j <= n-2
    bool cond3 = true;
    std::string det3;
    for (int j = 3; j <= n - 2 && cond3; ++j) {
        Vid v = ord.by_rank[j - 1];
        int above = 0;
        for (Vid w : g.neighbors(v))
            if (ord.rank.at(w) > j) ++above;
        if (above < 2) {
            cond3 = false;
            det3 = "rank " + std::to_string(j) + " has " + std::to_string(above) +
                   " neighbors above";
        }
    }
    rep.add("at least two neighbors above (j <= n-2)", cond3, det3);

    // prefix biconnectivity: spot-checked exhaustively on small graphs
    if (n <= 60) {
        bool bic = true;
        std::string detb;
        for (int j = 4; j <= n && bic; ++j) {
            // induced prefix graph
            std::vector<std::pair<Vid, Vid>> pe;
            for (auto& [x, y] : g.edge_list())
                if (ord.rank.at(x) < j && ord.rank.at(y) < j &&
                    !(x == std::min(cg.N, cg.S) && y == std::max(cg.N, cg.S)))
                    pe.push_back({x, y});
            // lightweight biconnectivity on the prefix
            // build adjacency
            std::map<Vid, std::vector<Vid>> adj;
            for (auto& [x, y] : pe) {
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
            if (adj.size() < static_cast<size_t>(j - 1)) {
                bic = false;
                detb = "prefix " + std::to_string(j - 1) + " has isolated vertices";
                break;
            }
            // Tarjan
            std::map<Vid, int> num, low;
            int counter = 0;
            bool cut = false;
            std::function<void(Vid, Vid)> dfs = [&](Vid v, Vid parent) {
                num[v] = low[v] = counter++;
                int children = 0;
                for (Vid w : adj[v]) {
                    if (!num.count(w)) {
                        ++children;
                        dfs(w, v);
                        low[v] = std::min(low[v], low[w]);
                        if (parent != -1 && low[w] >= num[v]) cut = true;
                    } else if (w != parent) {
                        low[v] = std::min(low[v], num[w]);
                    }
                }
                if (parent == -1 && children > 1) cut = true;
            };
            Vid root = adj.begin()->first;
            dfs(root, -1);
            if (static_cast<int>(num.size()) != static_cast<int>(adj.size())) {
                bic = false;
                detb = "prefix " + std::to_string(j - 1) + " disconnected";
            } else if (cut) {
                bic = false;
                detb = "prefix " + std::to_string(j - 1) + " has a cut vertex";
            }
        }
        rep.add("prefix biconnectivity", bic, detb);
    }
    return rep;
}

bool chords_consistent(const OrderState& s) {
    const PlanarGraph& g = *s.g;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!s.on_contour[v]) {
            if (s.ch[v] != 0) return false;
            continue;
        }
        int count = 0;
        for (Vid w : g.neighbors(g.id_of(v))) {
            int wi = g.index(w);
            if (!s.on_contour[wi]) continue;
            if (wi == s.cl[v] || wi == s.cr[v]) continue;
            // the auxiliary (N,S) edge is invisible to the ordering
            Vid a = g.id_of(v), b = w;
            if ((a == s.N && b == s.S) || (a == s.S && b == s.N)) continue;
            ++count;
        }
        if (count != s.ch[v]) return false;
    }
    return true;
}

} // namespace orthoplan
