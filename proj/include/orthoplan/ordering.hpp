#pragma once

#include <array>
#include <optional>
#include <set>

#include "orthoplan/completion.hpp"
#include "orthoplan/triangles.hpp"

namespace orthoplan {

enum class Category { A, B, C, D, E, F, None };

const char* category_name(Category c);

// Priority sequence p1..p4 over {a,d,u,C1} for each category.
std::array<Vid, 4> category_sequence(Category c, const SiteL& site);

struct CanonicalOrdering {
    std::unordered_map<Vid, int> rank; // 1..n, W=1, S=2, N=n
    std::vector<Vid> by_rank;          // by_rank[r-1] = vertex with rank r
    std::vector<Vid> trace;            // removal order (rank n first)
    Category category = Category::None;

    int rank_of(Vid v) const { return rank.at(v); }
    int size() const { return static_cast<int>(by_rank.size()); }
};

// Paused peeling state (the partially ordered graph of the first phase).
struct OrderState {
    const PlanarGraph* g = nullptr;
    Vid N = -1, E = -1, S = -1, W = -1;
    std::vector<int> rank;      // by internal index; 0 = unassigned
    std::vector<char> st;       // ordered flag
    std::vector<int> vi, ch;
    std::vector<int> cl, cr;    // contour links, -1 off-contour
    std::vector<char> on_contour;
    int next_rank = 0;
    std::vector<Vid> trace;
    std::set<int> eligible;     // internal indices, ascending = smallest id
    std::set<int> frozen;       // internal indices excluded in phase one

    bool is_eligible(int vi_idx) const;
};

CanonicalOrdering canonical_order(const CompletedGraph& cg);

OrderState canon_label_partial(const CompletedGraph& cg, const std::vector<Vid>& frozen);

std::optional<CanonicalOrdering> try_category(const OrderState& paused,
                                              const std::array<Vid, 4>& priority);

std::pair<CanonicalOrdering, Category> prioritized_order(const CompletedGraph& cg,
                                                         const SiteL& site);

// All categories whose ordering succeeds, in trial order A..F. The pipeline
// walks these until the final plan classifies as required.
std::vector<std::pair<CanonicalOrdering, Category>> prioritized_orderings(
    const CompletedGraph& cg, const SiteL& site);

ValidationReport validate_ordering(const CompletedGraph& cg, const CanonicalOrdering& ord);

// Ground-truth chord recount over the current contour (test hook).
bool chords_consistent(const OrderState& s);

} // namespace orthoplan
