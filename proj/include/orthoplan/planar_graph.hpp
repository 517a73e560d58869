#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orthoplan/errors.hpp"

namespace orthoplan {

using Vid = int; // external vertex id (non-negative, user-facing)

struct Face {
    std::vector<Vid> vertices; // closed walk, first vertex = smallest
    bool is_outer = false;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool verdict() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    std::string first_failure() const {
        for (auto& c : checks)
            if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
        return "";
    }
};

// Plane graph with an explicit rotation system (counterclockwise neighbor
// order per vertex) and a designated outer face. Immutable after
// construction; mutating pipeline steps build a new graph.
class PlanarGraph {
public:
    PlanarGraph() = default;

    // Construction from parts. Rotation lists are ccw. Throws
    // inconsistent_rotation_error if the face walk does not satisfy Euler.
    static PlanarGraph from_rotation(std::vector<Vid> vertices,
                                     std::unordered_map<Vid, std::vector<Vid>> rotation,
                                     std::vector<Vid> outer_face,
                                     std::unordered_map<Vid, std::string> labels = {});

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return num_edges_; }

    const std::vector<Vid>& vertex_ids() const { return ids_; }
    const std::vector<Vid>& neighbors(Vid v) const { return rot_.at(index(v)); }
    const std::vector<Vid>& outer_face() const { return outer_; }
    const std::unordered_map<Vid, std::string>& labels() const { return labels_; }

    bool has_vertex(Vid v) const { return idx_.count(v) != 0; }
    bool has_edge(Vid a, Vid b) const { return edges_.count(edge_key(a, b)) != 0; }
    int degree(Vid v) const { return static_cast<int>(neighbors(v).size()); }
    Vid max_vertex_id() const;

    bool on_outer_face(Vid v) const;
    bool edge_on_outer_face(Vid a, Vid b) const;

    // All faces, deterministic order (smallest vertex, then length, then
    // lexicographic walk). Every face's walk starts at its smallest vertex.
    std::vector<Face> faces() const;

    // The two faces bounding edge (a,b).
    std::pair<Face, Face> faces_of_edge(Vid a, Vid b) const;

    // Sorted edge list (a < b).
    std::vector<std::pair<Vid, Vid>> edge_list() const;

    static std::uint64_t edge_key(Vid a, Vid b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    // --- surgery helpers used by the pipeline (return a new graph) ---

    // Delete interior-ish edge (a,b), insert a fresh vertex u inside the
    // merged quad, adjacent to a, b and the two former apexes.
    // If one side of (a,b) was the outer face, u lands in the outer region
    // and the outer face is re-designated deterministically.
    PlanarGraph subdivide_edge(Vid a, Vid b, Vid u) const;

    // Internal index mapping (dense 0..n-1); used by algorithms.
    int index(Vid v) const {
        auto it = idx_.find(v);
        if (it == idx_.end()) throw precondition_error("unknown vertex id " + std::to_string(v));
        return it->second;
    }
    Vid id_of(int internal) const { return ids_[internal]; }

    // Position of neighbor b in rot(a), or -1.
    int rot_position(Vid a, Vid b) const;

    ValidationReport check_rotation_closure() const;

private:
    friend class GraphBuilder;
    std::vector<Vid> ids_;                          // internal -> external
    std::unordered_map<Vid, int> idx_;              // external -> internal
    std::vector<std::vector<Vid>> rot_;             // ccw neighbor order (external ids)
    std::unordered_set<std::uint64_t> edges_;
    std::vector<Vid> outer_;
    std::unordered_map<Vid, std::string> labels_;
    int num_edges_ = 0;

    void rebuild_index();
    std::vector<Face> walk_faces() const;
};

// Mutable companion for multi-step surgery; validates on finish().
class GraphBuilder {
public:
    explicit GraphBuilder(const PlanarGraph& g);

    void delete_edge(Vid a, Vid b);
    void add_vertex(Vid v);
    // insert b into rot(a) right before / after existing neighbor ref
    void insert_neighbor_before(Vid a, Vid ref, Vid b);
    void insert_neighbor_after(Vid a, Vid ref, Vid b);
    void set_rotation(Vid v, std::vector<Vid> rot);
    void replace_neighbor(Vid a, Vid old_nb, Vid new_nb);
    void set_outer_face(std::vector<Vid> outer);

    std::vector<Vid>& rotation(Vid v);
    bool has_edge(Vid a, Vid b) const;

    PlanarGraph finish() const; // validates closure

private:
    std::vector<Vid> ids_;
    std::unordered_map<Vid, std::vector<Vid>> rot_;
    std::vector<Vid> outer_;
    std::unordered_map<Vid, std::string> labels_;
};

// build_graph: ingest an edge list; compute an embedding when none given.
PlanarGraph build_graph(const std::vector<std::pair<Vid, Vid>>& edges,
                        const std::optional<std::unordered_map<Vid, std::vector<Vid>>>& rotation =
                            std::nullopt,
                        const std::optional<std::vector<Vid>>& outer_face = std::nullopt,
                        const std::unordered_map<Vid, std::string>& labels = {});

std::vector<Face> faces(const PlanarGraph& g);

ValidationReport validate_ptg(const PlanarGraph& g);

bool connectivity_at_least(const PlanarGraph& g, int k);

bool is_biconnected(const PlanarGraph& g);

// Deterministic planar embedding of an abstract graph (Boyer–Myrvold via
// Boost.Graph). Throws non_planar_error. Returns ccw rotations.
std::unordered_map<Vid, std::vector<Vid>> planar_embedding(
    const std::vector<Vid>& vertices, const std::vector<std::pair<Vid, Vid>>& edges);

} // namespace orthoplan
