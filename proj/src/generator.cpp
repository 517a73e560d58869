#include "orthoplan/generator.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace orthoplan {

namespace {

struct Grower {
    std::map<Vid, std::vector<Vid>> rot;
    std::vector<std::array<Vid, 3>> faces; // inner faces, ccw walks
    Vid next_id = 4;

    Grower() {
        rot[1] = {2, 3};
        rot[2] = {3, 1};
        rot[3] = {1, 2};
        faces.push_back({1, 2, 3});
    }

    void insert_between(Vid at, Vid before, Vid after, Vid w) {
        auto& r = rot.at(at);
        int n = static_cast<int>(r.size());
        for (int i = 0; i < n; ++i) {
            if (r[i] == before && r[(i + 1) % n] == after) {
                r.insert(r.begin() + i + 1, w);
                return;
            }
        }
        throw precondition_error("rotation pair missing during growth");
    }

    // split face index fi with a fresh vertex; returns the new vertex and
    // replaces the face by its three children (ccw)
    Vid split(size_t fi) {
        auto [x, y, z] = faces[fi];
        Vid w = next_id++;
        insert_between(x, z, y, w);
        insert_between(y, x, z, w);
        insert_between(z, y, x, w);
        rot[w] = {x, y, z};
        faces[fi] = {x, y, w};
        faces.push_back({y, z, w});
        faces.push_back({z, x, w});
        return w;
    }

    // find the face (x,y,w) among current faces
    size_t face_index(Vid x, Vid y, Vid w) const {
        for (size_t i = 0; i < faces.size(); ++i) {
            std::array<Vid, 3> f = faces[i];
            std::array<Vid, 3> s1 = f;
            std::sort(s1.begin(), s1.end());
            std::array<Vid, 3> s2 = {x, y, w};
            std::sort(s2.begin(), s2.end());
            if (s1 == s2) return i;
        }
        throw precondition_error("face missing during growth");
    }

    PlanarGraph finish() const {
        std::vector<Vid> vertices;
        for (auto& [v, r] : rot) {
            (void)r;
            vertices.push_back(v);
        }
        std::unordered_map<Vid, std::vector<Vid>> rr(rot.begin(), rot.end());
        return PlanarGraph::from_rotation(vertices, rr, {1, 2, 3});
    }
};

} // namespace

PlanarGraph generate_instance(const GenSpec& spec) {
    int plant = spec.kind == ShapeKind::L ? 2 : 3;
    if (spec.n < 3 + plant)
        throw precondition_error("n must be at least " + std::to_string(3 + plant));
    SplitMix64 rng(spec.seed);
    Grower gr;
    int grow_steps = spec.n - 3 - plant;
    for (int i = 0; i < grow_steps; ++i) gr.split(rng.below(gr.faces.size()));

    size_t fi = rng.below(gr.faces.size());
    auto [x, y, z] = gr.faces[fi];
    Vid w = gr.split(fi);
    if (spec.kind == ShapeKind::L) {
        gr.split(gr.face_index(x, y, w));
    } else {
        gr.split(gr.face_index(x, y, w));
        gr.split(gr.face_index(y, z, w));
    }
    return gr.finish();
}

} // namespace orthoplan
