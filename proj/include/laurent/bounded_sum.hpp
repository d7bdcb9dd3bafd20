#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "laurent/error.hpp"

namespace laurent {

/// s = y + sum x_i u_i with x_i in {0,1} and 0 <= y <= t.
struct BoundedSumSolution {
    std::vector<int> x;
    int y = 0;
};

enum class NoSolution { OutOfRange, Unrepresentable };

struct BoundedSumResult {
    std::optional<BoundedSumSolution> solution;
    NoSolution reason = NoSolution::Unrepresentable;

    explicit operator bool() const noexcept { return solution.has_value(); }
};

/// t + u_1 + ... + u_{k-1} >= u_k - 1 for every k: exactly the condition under
/// which every s in 0..t+sum(u) is representable.
inline bool bounded_sum_criterion(const std::vector<int>& u, int t) {
    long acc = t;
    for (int v : u) {
        if (acc < v - 1) return false;
        acc += v;
    }
    return true;
}

namespace detail {

inline void check_bounded_sum_input(const std::vector<int>& u, int t) {
    if (t < 0) throw Error(ErrorCode::UnsortedInput, "slack t must be non-negative");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] <= 1) throw Error(ErrorCode::UnsortedInput, "weights must exceed 1");
        if (i && u[i] < u[i - 1]) throw Error(ErrorCode::UnsortedInput, "weights must be sorted increasing");
    }
}

/// Peel the largest weight whenever s exceeds what the smaller ones and the
/// slack can reach.
inline BoundedSumSolution peel(const std::vector<int>& u, int t, long s) {
    BoundedSumSolution sol;
    sol.x.assign(u.size(), 0);
    long below = t + std::accumulate(u.begin(), u.end(), 0L);
    for (std::size_t k = u.size(); k-- > 0;) {
        below -= u[k];
        if (s > below) {
            sol.x[k] = 1;
            s -= u[k];
        }
    }
    sol.y = static_cast<int>(s);
    return sol;
}

/// Subset-sum table over the weights, then any y in 0..t.
inline std::optional<BoundedSumSolution> direct(const std::vector<int>& u, int t, int s) {
    const int total = std::accumulate(u.begin(), u.end(), 0);
    const std::size_t w = static_cast<std::size_t>(total) + 1;
    // reach[k][v]: some subset of the first k weights sums to v
    std::vector<std::vector<char>> reach(u.size() + 1, std::vector<char>(w, 0));
    reach[0][0] = 1;
    for (std::size_t k = 0; k < u.size(); ++k)
        for (std::size_t v = 0; v < w; ++v) {
            if (!reach[k][v]) continue;
            reach[k + 1][v] = 1;
            if (v + static_cast<std::size_t>(u[k]) < w) reach[k + 1][v + static_cast<std::size_t>(u[k])] = 1;
        }
    for (int y = 0; y <= t && y <= s; ++y) {
        int v = s - y;
        if (v > total || !reach[u.size()][static_cast<std::size_t>(v)]) continue;
        BoundedSumSolution sol;
        sol.x.assign(u.size(), 0);
        sol.y = y;
        for (std::size_t k = u.size(); k-- > 0;) {
            if (!reach[k][static_cast<std::size_t>(v)]) {
                sol.x[k] = 1;
                v -= u[k];
            }
        }
        return sol;
    }
    return std::nullopt;
}

}  // namespace detail

/// Solve s = y + sum x_i u_i for u sorted increasing with parts > 1, x_i in
/// {0,1}, 0 <= y <= t. Uses the peeling induction when the criterion holds,
/// otherwise a direct search for this particular s.
inline BoundedSumResult solve_bounded_sum(const std::vector<int>& u, int t, int s) {
    detail::check_bounded_sum_input(u, t);
    BoundedSumResult res;
    const long top = t + std::accumulate(u.begin(), u.end(), 0L);
    if (s < 0 || s > top) {
        res.reason = NoSolution::OutOfRange;
        return res;
    }
    if (bounded_sum_criterion(u, t)) {
        res.solution = detail::peel(u, t, s);
        return res;
    }
    res.solution = detail::direct(u, t, s);
    res.reason = NoSolution::Unrepresentable;
    return res;
}

}  // namespace laurent
