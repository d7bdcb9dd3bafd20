#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "laurent/bounded_sum.hpp"
#include "laurent/constellation.hpp"
#include "laurent/decision.hpp"
#include "laurent/error.hpp"
#include "laurent/passport.hpp"
#include "laurent/plan.hpp"

namespace laurent {

namespace detail {

inline void plan_assert(bool cond, const char* what) {
    if (!cond) throw Error(ErrorCode::InternalPlanError, what);
}

/// Working state shared by the constructions: the plan plus the target
/// valency of every nontrivial vertex placed so far.
struct PlanState {
    SunflowerPlan plan;
    std::vector<int> target;  // per vertex, 0 = leaf / not yet assigned

    explicit PlanState(SunflowerPlan p) : plan(std::move(p)) { sync(); }

    void sync() { target.resize(static_cast<std::size_t>(plan.vertex_count()), 0); }

    int hang(int v, Side side = Side::Exterior) {
        int s = plan.hang(v, side);
        sync();
        return s;
    }

    /// Hang exterior stars at v until it reaches its target; returns them.
    std::vector<int> grow(int v) {
        std::vector<int> out;
        while (plan.valency(v) < target[static_cast<std::size_t>(v)]) out.push_back(hang(v));
        return out;
    }

    /// Cycle vertices of color c, cycle order.
    std::vector<int> cycle_vertices(int c) const {
        std::vector<int> out;
        for (int v : plan.cycle())
            if (plan.color(v) == c) out.push_back(v);
        return out;
    }
};

/// Give each cycle vertex of color c a target: the largest entries of b[c],
/// largest first along the cycle. Returns the unused (smallest) entries.
inline std::vector<std::vector<int>> assign_cycle_targets(PlanState& st, const std::vector<std::vector<int>>& b) {
    std::vector<std::vector<int>> rest = b;
    for (int c = 0; c < st.plan.colors(); ++c) {
        auto& pool = rest[static_cast<std::size_t>(c)];
        for (int v : st.cycle_vertices(c)) {
            plan_assert(!pool.empty(), "more cycle vertices than nontrivial parts");
            st.target[static_cast<std::size_t>(v)] = pool.back();
            pool.pop_back();
        }
    }
    return rest;
}

/// Grow every cycle vertex with exterior stars; returns the new stars per
/// anchor color.
inline std::vector<std::vector<int>> grow_cycle(PlanState& st) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(st.plan.colors()));
    for (int v : st.plan.cycle()) {
        auto g = st.grow(v);
        auto& dst = out[static_cast<std::size_t>(st.plan.color(v))];
        dst.insert(dst.end(), g.begin(), g.end());
    }
    return out;
}

/// Place off-cycle nontrivial vertices (color, target) at exterior leaves,
/// growing each as soon as it is placed.
inline void place_exterior(PlanState& st, std::vector<std::pair<int, int>> items) {
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if ((x.first == 0) != (y.first == 0)) return x.first != 0;
        return x.second > y.second;
    });
    while (!items.empty()) {
        bool placed = false;
        for (std::size_t i = 0; i < items.size() && !placed; ++i) {
            for (int v : st.plan.leaves(items[i].first)) {
                if (st.target[static_cast<std::size_t>(v)] != 0) continue;
                if (st.plan.region(st.plan.vertex(v).parent) != Side::Exterior) continue;
                const auto& ps = st.plan.star(st.plan.vertex(v).parent);
                if (ps.anchor < 0 && st.plan.interior_tip(ps.cycle_index, items[i].first)) continue;
                st.target[static_cast<std::size_t>(v)] = items[i].second;
                st.grow(v);
                items.erase(items.begin() + static_cast<long>(i));
                placed = true;
                break;
            }
        }
        plan_assert(placed, "no exterior leaf available for an off-cycle vertex");
    }
}

/// Shortest cycle word with exactly s ascents using at most c[i] vertices of
/// color i, for r >= 3, 1 <= s <= sum_{i>=1} c[i] and c[0] >= c[i]. The word
/// is a run of groups, each a 0 followed by distinct non-0 colors; vertices
/// left out are placed off the cycle later.
inline std::vector<int> base_word(const std::vector<int>& c, int s) {
    const int r = static_cast<int>(c.size());
    const int rest = std::accumulate(c.begin() + 1, c.end(), 0);
    plan_assert(s >= 1 && s <= rest, "base interior out of range");
    const int groups = std::min(c[0], s);
    std::vector<std::vector<int>> grp(static_cast<std::size_t>(groups));
    int slot = 0, budget = s;
    for (int i = 1; i < r; ++i) {
        plan_assert(c[static_cast<std::size_t>(i)] <= c[0], "color 0 must dominate the cycle counts");
        const int take = std::min({c[static_cast<std::size_t>(i)], groups, budget});
        budget -= take;
        for (int k = 0; k < take; ++k) {
            grp[static_cast<std::size_t>(slot)].push_back(i);
            slot = (slot + 1) % groups;
        }
    }
    plan_assert(budget == 0, "not enough non-0 vertices for the cycle");
    int extra_ascents = s - groups;
    std::vector<int> word;
    for (auto& g : grp) {
        plan_assert(!g.empty(), "empty group in base word");
        const int k = static_cast<int>(g.size());
        const int a = std::min(extra_ascents, k - 1);
        extra_ascents -= a;
        word.push_back(0);
        // a internal ascents: g_1..g_a, then g_k down to g_{a+1}
        for (int j = 0; j < a; ++j) word.push_back(g[static_cast<std::size_t>(j)]);
        for (int j = k - 1; j >= a; --j) word.push_back(g[static_cast<std::size_t>(j)]);
    }
    plan_assert(extra_ascents == 0, "not enough room for ascents");
    return word;
}

/// Move the chosen branches inside: x selects long branches, y counts short ones.
inline void shift_branches(PlanState& st, const std::vector<int>& longs, const std::vector<int>& shorts,
                           const BoundedSumSolution& sol) {
    for (std::size_t j = 0; j < longs.size(); ++j)
        if (sol.x[j]) st.plan.set_side(longs[j], Side::Interior);
    plan_assert(sol.y <= static_cast<int>(shorts.size()), "not enough short branches");
    for (int j = 0; j < sol.y; ++j) st.plan.set_side(shorts[static_cast<std::size_t>(j)], Side::Interior);
}

inline int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Sunflower on the cycle word with every colored vertex on the cycle where
/// possible; the l smallest color-0 parts hang as long branches on carriers
/// at non-0 cycle vertices. Returns long carriers (weights increasing) and
/// short branches (weight 1).
inline PlanState long_short_base(const std::vector<int>& word, int r, const DerivedStats& d, std::vector<int>& longs,
                                 std::vector<int>& shorts) {
    PlanState st(SunflowerPlan::with_cycle(r, word));
    auto rest = assign_cycle_targets(st, d.b);
    for (int c = 1; c < r; ++c) plan_assert(rest[static_cast<std::size_t>(c)].empty(), "non-0 part left off the cycle");
    auto grown = grow_cycle(st);
    const auto& pending = rest[0];
    std::vector<int> carriers;
    for (int c = 1; c < r; ++c) carriers.insert(carriers.end(), grown[static_cast<std::size_t>(c)].begin(), grown[static_cast<std::size_t>(c)].end());
    plan_assert(carriers.size() >= pending.size(), "fewer carriers than off-cycle color-0 vertices");
    longs.clear();
    shorts.clear();
    for (std::size_t j = 0; j < pending.size(); ++j) {
        const int v = st.plan.tip(carriers[j], 0);
        st.target[static_cast<std::size_t>(v)] = pending[j];
        st.grow(v);
        longs.push_back(carriers[j]);
    }
    for (std::size_t j = pending.size(); j < carriers.size(); ++j) shorts.push_back(carriers[j]);
    shorts.insert(shorts.end(), grown[0].begin(), grown[0].end());
    return st;
}

inline PlanState finish(PlanState st, int s) {
    plan_assert(st.plan.interior_count() == s, "plan arithmetic misses the interior face size");
    return st;
}

}  // namespace detail

/// Plan for a canonical passport with r = q-1 > 2 colors.
inline SunflowerPlan plan_r_gt2(const LaurentPassport& p) {
    using namespace detail;
    const int r = p.r();
    plan_assert(r > 2, "plan_r_gt2 needs q > 3");
    plan_assert(is_canonical(p), "plan_r_gt2 needs a canonical passport");
    const auto d = derived(p);
    const int s = p.s();
    const int q0 = d.q[0];
    const int Q = std::accumulate(d.q.begin() + 1, d.q.end(), 0);
    const int l = std::max(0, q0 - Q);

    if (s <= Q) {
        std::vector<int> counts(d.q);
        counts[0] = std::min(q0, Q);
        auto word = base_word(counts, s);
        PlanState st(SunflowerPlan::with_cycle(r, word));
        auto rest = assign_cycle_targets(st, d.b);
        grow_cycle(st);
        std::vector<std::pair<int, int>> items;
        for (int c = 0; c < r; ++c)
            for (int t : rest[static_cast<std::size_t>(c)]) items.emplace_back(c, t);
        place_exterior(st, items);
        return finish(std::move(st), s).plan;
    }

    std::vector<int> counts(d.q);
    counts[0] = std::min(q0, Q);
    std::vector<int> longs, shorts;

    if (q0 <= Q) {
        auto st = long_short_base(base_word(counts, Q), r, d, longs, shorts);
        plan_assert(longs.empty(), "unexpected long branch");
        plan_assert(static_cast<int>(shorts.size()) >= s - Q, "too few growth stars to shift");
        shift_branches(st, {}, shorts, BoundedSumSolution{{}, s - Q});
        return finish(std::move(st), s).plan;
    }

    // q0 > Q: the cycle alternates 0 with single non-0 vertices
    auto word = base_word(counts, Q);
    {
        auto st = long_short_base(word, r, d, longs, shorts);
        std::vector<int> u(d.b[0].begin(), d.b[0].begin() + l);
        auto res = solve_bounded_sum(u, static_cast<int>(shorts.size()), s - Q);
        if (res) {
            shift_branches(st, longs, shorts, *res.solution);
            return finish(std::move(st), s).plan;
        }
    }
    plan_assert(p.colored(0).all_equal_to(2), "no branch selection reaches the interior size");

    // odd excess with all color-0 parts equal to 2: drop the 0 between the
    // largest and smallest cycle colors and hang its star outside instead
    plan_assert(word.front() == 0 && word[1] < word[word.size() - 1], "fold position missing");
    word.erase(word.begin());
    PlanState st(SunflowerPlan::with_cycle(r, word));
    auto rest = assign_cycle_targets(st, d.b);
    for (int c = 1; c < r; ++c) plan_assert(rest[static_cast<std::size_t>(c)].empty(), "non-0 part left off the cycle");
    const int fold_vertex = st.plan.tip(st.plan.cycle_stars().back(), 0);
    plan_assert(!st.plan.on_cycle(fold_vertex) && st.plan.region(st.plan.cycle_stars().back()) == Side::Exterior,
                "fold tip is not exterior");
    plan_assert(!rest[0].empty(), "no color-0 part left for the fold");
    st.target[static_cast<std::size_t>(fold_vertex)] = rest[0].back();
    rest[0].pop_back();
    st.grow(fold_vertex);
    auto grown = grow_cycle(st);
    std::vector<int> carriers;
    for (int c = 1; c < r; ++c) carriers.insert(carriers.end(), grown[static_cast<std::size_t>(c)].begin(), grown[static_cast<std::size_t>(c)].end());
    plan_assert(rest[0].size() == static_cast<std::size_t>(l) && carriers.size() >= rest[0].size(),
                "fold carriers do not match");
    for (std::size_t j = 0; j < rest[0].size(); ++j) {
        const int v = st.plan.tip(carriers[j], 0);
        st.target[static_cast<std::size_t>(v)] = rest[0][j];
        st.grow(v);
    }
    const int k = (s - (Q - 1)) / 2;
    plan_assert((s - (Q - 1)) % 2 == 0 && k <= static_cast<int>(rest[0].size()), "fold parity");
    for (int j = 0; j < k; ++j) st.plan.set_side(carriers[static_cast<std::size_t>(j)], Side::Interior);
    return finish(std::move(st), s).plan;
}

/// Plan for a canonical passport with two colors (q = 3) that is not
/// exceptional.
inline SunflowerPlan plan_r2(const LaurentPassport& p) {
    using namespace detail;
    plan_assert(p.r() == 2, "plan_r2 needs q = 3");
    plan_assert(is_canonical(p), "plan_r2 needs a canonical passport");
    if (auto fam = matching_families(p); !fam.empty())
        throw Error(ErrorCode::NotRealizable, "passport belongs to an exceptional family");
    const auto d = derived(p);
    const int n = p.n();
    const int s = p.s();
    const int q0 = d.q[0], q1 = d.q[1];
    const int l = q0 - q1;
    const bool a2 = p.colored(0).all_equal_to(2);
    const bool b2 = p.colored(1).all_equal_to(2);
    auto alternating = [](int k) {
        std::vector<int> w;
        for (int j = 0; j < k; ++j) {
            w.push_back(0);
            w.push_back(1);
        }
        return w;
    };

    if (a2 && b2) {
        plan_assert(2 * s == n, "all-2 pair needs equal faces");
        PlanState st(SunflowerPlan::with_cycle(2, alternating(n / 2)));
        return finish(std::move(st), s).plan;
    }

    if (s <= q1) {
        PlanState st(SunflowerPlan::with_cycle(2, alternating(s)));
        auto rest = assign_cycle_targets(st, d.b);
        const int L = q1 - s;
        if (L > 0) {
            // exterior path from a cycle vertex holding the largest part > 2
            const int c = d.b[0].back() > 2 ? 0 : 1;
            const int x = st.cycle_vertices(c).front();
            plan_assert(st.target[static_cast<std::size_t>(x)] > 2, "path seed needs valency > 2");
            int v = x;
            std::vector<int> path;
            for (int j = 0; j < 2 * L + 1; ++j) {
                const int star = st.hang(v);
                v = st.plan.tip(star, (st.plan.color(v) + 1) % 2);
                if (j < 2 * L) path.push_back(v);
            }
            for (int w : path) {
                auto& pool = rest[static_cast<std::size_t>(st.plan.color(w))];
                plan_assert(!pool.empty(), "path longer than the nontrivial parts");
                st.target[static_cast<std::size_t>(w)] = pool.back();
                pool.pop_back();
            }
            for (int w : path) st.grow(w);
        }
        grow_cycle(st);
        plan_assert(rest[1].empty(), "color-1 part left unplaced");
        std::vector<std::pair<int, int>> items;
        for (int t : rest[0]) items.emplace_back(0, t);
        place_exterior(st, items);
        return finish(std::move(st), s).plan;
    }

    std::vector<int> longs, shorts;
    if (q0 == q1) {
        auto st = long_short_base(alternating(q1), 2, d, longs, shorts);
        plan_assert(static_cast<int>(shorts.size()) >= s - q1, "too few growth stars to shift");
        shift_branches(st, {}, shorts, BoundedSumSolution{{}, s - q1});
        return finish(std::move(st), s).plan;
    }

    {
        auto st = long_short_base(alternating(q1), 2, d, longs, shorts);
        std::vector<int> u(d.b[0].begin(), d.b[0].begin() + l);
        auto res = solve_bounded_sum(u, static_cast<int>(shorts.size()), s - q1);
        if (res) {
            shift_branches(st, longs, shorts, *res.solution);
            return finish(std::move(st), s).plan;
        }
    }
    plan_assert(a2 && q1 > 1, "no branch selection reaches the interior size");

    // color 0 all 2s, opposite parity: the smallest color-1 vertex leaves the
    // cycle and hangs, with its own weight-2 branches, as one heavy branch
    PlanState st(SunflowerPlan::with_cycle(2, alternating(q1 - 1)));
    std::vector<std::vector<int>> b1rest{d.b[0], {d.b[1].begin() + 1, d.b[1].end()}};
    assign_cycle_targets(st, b1rest);
    int host = -1;
    for (int v : st.cycle_vertices(1))
        if (host < 0 || st.target[static_cast<std::size_t>(v)] > st.target[static_cast<std::size_t>(host)]) host = v;
    plan_assert(st.target[static_cast<std::size_t>(host)] > 2, "no cycle vertex can carry the heavy branch");
    const int heavy = st.hang(host);
    const int u0 = st.plan.tip(heavy, 0);
    const int down = st.hang(u0);
    const int z = st.plan.tip(down, 1);
    st.target[static_cast<std::size_t>(z)] = d.b[1].front();
    for (int h : st.grow(z)) st.hang(st.plan.tip(h, 0));
    std::vector<int> light;
    for (int v : st.cycle_vertices(1))
        for (int h : st.grow(v)) {
            st.hang(st.plan.tip(h, 0));
            light.push_back(h);
        }
    plan_assert((s - q1 + 1) % 2 == 0, "parity construction needs odd excess");
    auto res = solve_bounded_sum({d.b[1].front()}, static_cast<int>(light.size()), (s - q1 + 1) / 2);
    plan_assert(static_cast<bool>(res), "no heavy/light selection reaches the interior size");
    shift_branches(st, {heavy}, light, *res.solution);
    return finish(std::move(st), s).plan;
}

/// Why build() produced no tuple.
struct NotRealizableResult {
    std::vector<int> families;
};

using BuildResult = std::variant<ConstellationTuple, NotRealizableResult, Invalid>;

/// Witness for a validated passport in its own color order, or the
/// exceptional families it belongs to.
inline BuildResult build(const LaurentPassport& p) {
    auto verdict = classify(p);
    if (auto* e = std::get_if<Exceptional>(&verdict)) return NotRealizableResult{e->families};
    auto [canon, rel] = canonicalize(p);
    const SunflowerPlan plan = canon.r() == 2 ? plan_r2(canon) : plan_r_gt2(canon);
    auto tuple = synthesize(plan);
    if (!matches_in_order(tuple, canon))
        throw Error(ErrorCode::PlanInconsistent, "synthesized tuple does not match the canonical passport");
    tuple = undo_relabeling(tuple, rel);
    if (!matches_in_order(tuple, p) || !verify_against(tuple, p).passed())
        throw Error(ErrorCode::PlanInconsistent, "relabeled tuple does not match the input passport");
    return tuple;
}

inline BuildResult build(const RawPassport& raw) {
    auto res = validate(raw);
    if (!res.ok()) return Invalid{std::move(res.violations)};
    return build(*res.passport);
}

}  // namespace laurent
