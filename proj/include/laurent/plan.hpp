#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "laurent/constellation.hpp"
#include "laurent/error.hpp"
#include "laurent/partition.hpp"
#include "laurent/perm.hpp"

namespace laurent {

enum class Side { Interior, Exterior };

/// A colored vertex. Cycle vertices have parent == -1; every other vertex is
/// a tip of exactly one parent star.
struct PlanVertex {
    int color = 0;
    int parent = -1;
    int cycle_pos = -1;
    std::vector<int> interior_hung;  // cycle vertices only
    std::vector<int> exterior_hung;  // all hung stars of an off-cycle vertex
};

/// A star with one tip per color. Cycle stars have anchor == -1 and join
/// cycle vertices cycle_index and cycle_index + 1.
struct PlanStar {
    int anchor = -1;
    int cycle_index = -1;
    Side side = Side::Exterior;
    std::vector<int> tips;
};

/// A two-face constellation drawn as a cycle of colored vertices with trees
/// of stars hanging inside or outside. Star tips are colored 0..r-1
/// counterclockwise; the cycle is listed counterclockwise, so the interior is
/// on its left.
///
/// Rotation at cycle vertex k: cycle star k, interior stars, cycle star k-1,
/// exterior stars. Rotation at any other vertex: parent star, hung stars.
class SunflowerPlan {
public:
    /// Cycle of vertex colors; adjacent colors differ cyclically, length >= 2.
    static SunflowerPlan with_cycle(int r, const std::vector<int>& word) {
        const int m = static_cast<int>(word.size());
        if (r < 2 || m < 2) throw Error(ErrorCode::InternalPlanError, "cycle needs r >= 2 and length >= 2");
        SunflowerPlan p;
        p.r_ = r;
        for (int k = 0; k < m; ++k) {
            const int a = word[static_cast<std::size_t>(k)], b = word[static_cast<std::size_t>((k + 1) % m)];
            if (a == b || a < 0 || a >= r) throw Error(ErrorCode::InternalPlanError, "bad cycle word");
            PlanVertex v;
            v.color = a;
            v.cycle_pos = k;
            p.vertices_.push_back(v);
            p.cycle_.push_back(k);
        }
        for (int k = 0; k < m; ++k) {
            PlanStar st;
            st.cycle_index = k;
            st.tips.assign(static_cast<std::size_t>(r), -1);
            const int va = p.cycle_[static_cast<std::size_t>(k)], vb = p.cycle_[static_cast<std::size_t>((k + 1) % m)];
            st.tips[static_cast<std::size_t>(p.color(va))] = va;
            st.tips[static_cast<std::size_t>(p.color(vb))] = vb;
            const int id = static_cast<int>(p.stars_.size());
            p.stars_.push_back(st);
            p.cycle_stars_.push_back(id);
            for (int c = 0; c < r; ++c)
                if (p.stars_[static_cast<std::size_t>(id)].tips[static_cast<std::size_t>(c)] < 0) p.new_leaf(id, c);
        }
        return p;
    }

    int colors() const noexcept { return r_; }
    int degree() const noexcept { return static_cast<int>(stars_.size()); }
    int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& cycle() const noexcept { return cycle_; }
    const std::vector<int>& cycle_stars() const noexcept { return cycle_stars_; }
    const PlanVertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    const PlanStar& star(int s) const { return stars_.at(static_cast<std::size_t>(s)); }

    int color(int v) const { return vertex(v).color; }
    bool on_cycle(int v) const { return vertex(v).parent < 0; }
    int tip(int s, int c) const { return star(s).tips.at(static_cast<std::size_t>(c)); }
    int cycle_color(int k) const { return color(cycle_[static_cast<std::size_t>(k)]); }

    int valency(int v) const {
        const auto& x = vertex(v);
        return (x.parent < 0 ? 2 : 1) + static_cast<int>(x.interior_hung.size() + x.exterior_hung.size());
    }

    /// Hang a fresh star at v; its other tips become new leaves. The side only
    /// matters at cycle vertices.
    int hang(int v, Side side = Side::Exterior) {
        PlanStar st;
        st.anchor = v;
        st.side = on_cycle(v) ? side : Side::Exterior;
        st.tips.assign(static_cast<std::size_t>(r_), -1);
        st.tips[static_cast<std::size_t>(color(v))] = v;
        const int id = static_cast<int>(stars_.size());
        stars_.push_back(st);
        auto& x = vertices_[static_cast<std::size_t>(v)];
        (st.side == Side::Interior ? x.interior_hung : x.exterior_hung).push_back(id);
        for (int c = 0; c < r_; ++c)
            if (c != color(v)) new_leaf(id, c);
        return id;
    }

    /// Move a star hung at a cycle vertex to the given side; its whole branch
    /// follows.
    void set_side(int s, Side side) {
        auto& st = stars_.at(static_cast<std::size_t>(s));
        if (st.anchor < 0 || !on_cycle(st.anchor))
            throw Error(ErrorCode::InternalPlanError, "only stars hung at cycle vertices can change side");
        if (st.side == side) return;
        auto& x = vertices_[static_cast<std::size_t>(st.anchor)];
        auto& from = st.side == Side::Interior ? x.interior_hung : x.exterior_hung;
        auto& to = side == Side::Interior ? x.interior_hung : x.exterior_hung;
        from.erase(std::find(from.begin(), from.end(), s));
        to.push_back(s);
        st.side = side;
    }

    /// Whether tip color c of cycle star k lies inside the cycle.
    bool interior_tip(int k, int c) const {
        const int a = cycle_color(k), b = cycle_color((k + 1) % static_cast<int>(cycle_.size()));
        if (c == a || c == b) return false;
        return ((c - b + r_) % r_) < ((a - b + r_) % r_);
    }

    Side region(int s) const {
        const auto& st = star(s);
        if (st.anchor < 0) {
            const int k = st.cycle_index;
            const int a = cycle_color(k), b = cycle_color((k + 1) % static_cast<int>(cycle_.size()));
            return a < b ? Side::Interior : Side::Exterior;
        }
        if (on_cycle(st.anchor)) return st.side;
        const int parent = vertex(st.anchor).parent;
        const auto& ps = star(parent);
        if (ps.anchor < 0) return interior_tip(ps.cycle_index, color(st.anchor)) ? Side::Interior : Side::Exterior;
        return region(parent);
    }

    /// Plan arithmetic: number of stars inside the cycle.
    int interior_count() const {
        int count = 0;
        for (int s = 0; s < degree(); ++s)
            if (region(s) == Side::Interior) ++count;
        return count;
    }

    /// Number of stars in the branch rooted at a hung star.
    int branch_weight(int s) const {
        int w = 1;
        for (int v : star(s).tips) {
            if (v == star(s).anchor || vertex(v).parent != s) continue;
            for (int h : vertex(v).exterior_hung) w += branch_weight(h);
        }
        return w;
    }

    /// Per color, the multiset of vertex valencies.
    std::vector<Partition> valency_datum() const {
        std::vector<std::vector<int>> vals(static_cast<std::size_t>(r_));
        for (int v = 0; v < vertex_count(); ++v) vals[static_cast<std::size_t>(color(v))].push_back(valency(v));
        std::vector<Partition> out;
        for (auto& x : vals) out.emplace_back(std::move(x));
        return out;
    }

    /// Off-cycle vertices of color c with no hung stars, in creation order.
    std::vector<int> leaves(int c) const {
        std::vector<int> out;
        for (int v = 0; v < vertex_count(); ++v)
            if (color(v) == c && !on_cycle(v) && valency(v) == 1) out.push_back(v);
        return out;
    }

    /// Counterclockwise order of stars around vertex v.
    std::vector<int> rotation(int v) const {
        const auto& x = vertex(v);
        std::vector<int> out;
        if (x.parent >= 0) {
            out.push_back(x.parent);
        } else {
            const int m = static_cast<int>(cycle_.size());
            out.push_back(cycle_stars_[static_cast<std::size_t>(x.cycle_pos)]);
            out.insert(out.end(), x.interior_hung.begin(), x.interior_hung.end());
            out.push_back(cycle_stars_[static_cast<std::size_t>((x.cycle_pos + m - 1) % m)]);
        }
        out.insert(out.end(), x.exterior_hung.begin(), x.exterior_hung.end());
        return out;
    }

    /// Stars counted by interior_count(), increasing.
    std::vector<int> interior_stars() const {
        std::vector<int> out;
        for (int s = 0; s < degree(); ++s)
            if (region(s) == Side::Interior) out.push_back(s);
        return out;
    }

private:
    void new_leaf(int s, int c) {
        PlanVertex v;
        v.color = c;
        v.parent = s;
        vertices_.push_back(v);
        stars_[static_cast<std::size_t>(s)].tips[static_cast<std::size_t>(c)] = static_cast<int>(vertices_.size()) - 1;
    }

    int r_ = 0;
    std::vector<PlanVertex> vertices_;
    std::vector<PlanStar> stars_;
    std::vector<int> cycle_;
    std::vector<int> cycle_stars_;
};

/// Emit g_1..g_r from the vertex rotations (star ids become points) and
/// complete the tuple with the face permutation. Throws PlanInconsistent if
/// the result is not a planar two-face constellation whose interior face is
/// exactly the plan's interior star set.
inline ConstellationTuple synthesize(const SunflowerPlan& plan) {
    const int n = plan.degree();
    const int r = plan.colors();
    std::vector<std::vector<int>> img(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int v = 0; v < plan.vertex_count(); ++v) {
        const auto rot = plan.rotation(v);
        auto& g = img[static_cast<std::size_t>(plan.color(v))];
        for (std::size_t k = 0; k < rot.size(); ++k) g[static_cast<std::size_t>(rot[k])] = rot[(k + 1) % rot.size()];
    }
    std::vector<Perm> rotations;
    for (auto& g : img) {
        if (std::find(g.begin(), g.end(), -1) != g.end())
            throw Error(ErrorCode::PlanInconsistent, "a star misses a tip");
        rotations.emplace_back(std::move(g));
    }
    auto tuple = from_rotations(n, rotations);

    if (!is_planar_constellation(tuple))
        throw Error(ErrorCode::PlanInconsistent, "synthesized tuple is not a planar constellation");
    const auto datum = plan.valency_datum();
    for (int c = 0; c < r; ++c)
        if (cycle_type(tuple.g[static_cast<std::size_t>(c)]) != datum[static_cast<std::size_t>(c)])
            throw Error(ErrorCode::PlanInconsistent, "rotation cycle type differs from plan valencies");
    const auto inside = plan.interior_stars();
    const auto faces = tuple.face().cycles();
    bool found = false;
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        if (f == inside) found = true;
    }
    if (faces.size() != 2 || !found)
        throw Error(ErrorCode::PlanInconsistent,
                    "face tracing disagrees with the plan interior count " + std::to_string(inside.size()));
    return tuple;
}

}  // namespace laurent
