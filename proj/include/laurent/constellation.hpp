#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/partition.hpp"
#include "laurent/passport.hpp"
#include "laurent/perm.hpp"

namespace laurent {

/// q permutations of one degree: g_1..g_{q-1} rotate stars around colored
/// vertices, g_q is the face permutation. The product g_1 * ... * g_q is the
/// identity (left-to-right).
struct ConstellationTuple {
    int n = 0;
    std::vector<Perm> g;

    int q() const noexcept { return static_cast<int>(g.size()); }
    const Perm& face() const { return g.back(); }
};

/// Completes rotations g_1..g_{q-1} with g_q = (g_1 ... g_{q-1})^{-1}.
inline ConstellationTuple from_rotations(int n, const std::vector<Perm>& rotations) {
    ConstellationTuple c;
    c.n = n;
    Perm prod = Perm::identity(n);
    for (const auto& p : rotations) {
        if (p.degree() != n)
            throw Error(ErrorCode::DegreeMismatch,
                        "rotation of degree " + std::to_string(p.degree()) + " in a tuple of degree " + std::to_string(n));
        prod = prod * p;
        c.g.push_back(p);
    }
    c.g.push_back(prod.inverse());
    return c;
}

inline bool product_is_identity(const ConstellationTuple& c) {
    Perm prod = Perm::identity(c.n);
    for (const auto& p : c.g) prod = prod * p;
    return prod.is_identity();
}

inline bool is_transitive(const ConstellationTuple& c) {
    if (c.n <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(c.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = c.n;
    for (const auto& p : c.g)
        for (int x = 0; x < c.n; ++x) {
            int a = find(x), b = find(p[x]);
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --components;
            }
        }
    return components == 1;
}

inline long total_cycles(const ConstellationTuple& c) {
    long sum = 0;
    for (const auto& p : c.g) sum += p.cycle_count();
    return sum;
}

/// Genus of the surface carrying the constellation: 2 - 2g = sum c(g_i) - (q-2)n.
inline int genus(const ConstellationTuple& c) {
    if (!is_transitive(c)) throw Error(ErrorCode::NotTransitive, "genus requires a transitive tuple");
    long euler = total_cycles(c) - static_cast<long>(c.q() - 2) * c.n;
    return static_cast<int>((2 - euler) / 2);
}

/// Cycle types of g_1..g_q.
inline std::vector<Partition> valency_datum(const ConstellationTuple& c) {
    std::vector<Partition> out;
    for (const auto& p : c.g) out.push_back(cycle_type(p));
    return out;
}

/// The constellation model invariants: identity product, transitivity, genus 0.
inline bool is_planar_constellation(const ConstellationTuple& c) {
    if (c.g.empty()) return false;
    for (const auto& p : c.g)
        if (p.degree() != c.n) return false;
    return product_is_identity(c) && is_transitive(c) &&
           total_cycles(c) == static_cast<long>(c.q() - 2) * c.n + 2;
}

struct VerifyReport {
    bool transitive = false;
    bool genus_zero = false;
    bool colored_match = false;
    bool face_match = false;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Checks (a) transitivity, (b) genus 0 with identity product, (c) the colored
/// cycle types equal the colored partitions as a multiset, (d) the face cycle
/// type equals {s, n-s}.
inline VerifyReport verify_against(const ConstellationTuple& c, const LaurentPassport& p) {
    if (c.n != p.n())
        throw Error(ErrorCode::DegreeMismatch,
                    "tuple degree " + std::to_string(c.n) + " vs passport degree " + std::to_string(p.n()));
    if (c.q() != p.q())
        throw Error(ErrorCode::QMismatch,
                    "tuple has " + std::to_string(c.q()) + " permutations, passport has q=" + std::to_string(p.q()));
    for (const auto& g : c.g)
        if (g.degree() != c.n) throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from n");

    VerifyReport rep;
    rep.transitive = is_transitive(c);
    if (!rep.transitive) rep.failures.push_back("(a) not transitive");

    rep.genus_zero = product_is_identity(c) && total_cycles(c) == static_cast<long>(c.q() - 2) * c.n + 2;
    if (!rep.genus_zero) rep.failures.push_back("(b) product is not the identity or genus is not 0");

    std::vector<Partition> got, want = p.colored();
    for (int i = 0; i + 1 < c.q(); ++i) got.push_back(cycle_type(c.g[static_cast<std::size_t>(i)]));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    rep.colored_match = got == want;
    if (!rep.colored_match) rep.failures.push_back("(c) colored cycle types differ from the colored partitions");

    rep.face_match = cycle_type(c.face()) == p.face();
    if (!rep.face_match) rep.failures.push_back("(d) face cycle type differs from " + to_string(p.face()));
    return rep;
}

/// Stricter than verify_against: g_i must have cycle type Pi_i position by position.
inline bool matches_in_order(const ConstellationTuple& c, const LaurentPassport& p) {
    if (c.n != p.n() || c.q() != p.q()) return false;
    for (int i = 0; i < p.r(); ++i)
        if (cycle_type(c.g[static_cast<std::size_t>(i)]) != p.colored(i)) return false;
    return cycle_type(c.face()) == p.face();
}

/// Simultaneous relabeling of stars: every g_i replaced by h^{-1} g_i h.
inline ConstellationTuple conjugate(const ConstellationTuple& c, const Perm& h) {
    ConstellationTuple out;
    out.n = c.n;
    for (const auto& p : c.g) out.g.push_back(p.conjugate(h));
    return out;
}

/// Reorders the colored permutations so that position order[k] of the input
/// ends up at position k, using Hurwitz moves (a, b) -> (b, b^{-1} a b). The
/// product, transitivity and every cycle type are preserved; the face stays
/// last.
inline ConstellationTuple braid_reorder(const ConstellationTuple& c, const std::vector<int>& order) {
    const int r = c.q() - 1;
    if (static_cast<int>(order.size()) != r) throw Error(ErrorCode::QMismatch, "reorder length differs from q-1");
    ConstellationTuple out = c;
    std::vector<int> label(static_cast<std::size_t>(r));
    std::iota(label.begin(), label.end(), 0);
    for (int k = 0; k < r; ++k) {
        int pos = static_cast<int>(std::find(label.begin() + k, label.end(), order[static_cast<std::size_t>(k)]) - label.begin());
        if (pos >= r) throw Error(ErrorCode::QMismatch, "reorder is not a permutation");
        for (int j = pos; j > k; --j) {
            auto& a = out.g[static_cast<std::size_t>(j - 1)];
            auto& b = out.g[static_cast<std::size_t>(j)];
            Perm moved = a.conjugate(b);
            a = b;
            b = moved;
            std::swap(label[static_cast<std::size_t>(j - 1)], label[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

/// Puts a tuple built for the canonical passport back into the input color
/// order described by rel.
inline ConstellationTuple undo_relabeling(const ConstellationTuple& c, const ColorRelabeling& rel) {
    std::vector<int> order(rel.perm.size());
    for (std::size_t j = 0; j < rel.perm.size(); ++j) order[static_cast<std::size_t>(rel.perm[j])] = static_cast<int>(j);
    return braid_reorder(c, order);
}

}  // namespace laurent
