#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "laurent/constellation.hpp"
#include "laurent/error.hpp"
#include "laurent/partition.hpp"
#include "laurent/passport.hpp"
#include "laurent/perm.hpp"

namespace laurent {

namespace detail {

using Images = std::vector<int>;

/// Depth-first walk over all permutations with a given cycle type. Each new
/// cycle starts at the smallest unused point; its length is chosen among the
/// distinct remaining lengths and its other points in every order.
class ClassWalker {
public:
    ClassWalker(const Partition& t, std::function<bool(const Images&)> visit)
        : n_(t.sum()), visit_(std::move(visit)) {
        for (int v : t.parts()) ++lengths_[v];
        img_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
    }

    /// Returns false if the visitor asked to stop.
    bool run() { return next_cycle(); }

private:
    bool next_cycle() {
        int start = 0;
        while (start < n_ && used_[static_cast<std::size_t>(start)]) ++start;
        if (start == n_) return visit_(img_);
        used_[static_cast<std::size_t>(start)] = 1;
        for (auto& [len, cnt] : lengths_) {
            if (cnt == 0) continue;
            --cnt;
            cyc_.assign(1, start);
            bool go = fill(len);
            ++cnt;
            if (!go) {
                used_[static_cast<std::size_t>(start)] = 0;
                return false;
            }
        }
        used_[static_cast<std::size_t>(start)] = 0;
        return true;
    }

    bool fill(int len) {
        if (static_cast<int>(cyc_.size()) == len) {
            for (std::size_t k = 0; k < cyc_.size(); ++k) img_[static_cast<std::size_t>(cyc_[k])] = cyc_[(k + 1) % cyc_.size()];
            auto saved = cyc_;
            bool go = next_cycle();
            cyc_ = std::move(saved);
            return go;
        }
        for (int x = cyc_.front() + 1; x < n_; ++x) {
            if (used_[static_cast<std::size_t>(x)]) continue;
            used_[static_cast<std::size_t>(x)] = 1;
            cyc_.push_back(x);
            bool go = fill(len);
            cyc_.pop_back();
            used_[static_cast<std::size_t>(x)] = 0;
            if (!go) return false;
        }
        return true;
    }

    int n_;
    std::function<bool(const Images&)> visit_;
    std::map<int, int> lengths_;
    Images img_;
    std::vector<char> used_;
    std::vector<int> cyc_;
};

inline Partition images_cycle_type(const Images& img, std::vector<char>& seen) {
    seen.assign(img.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int x = static_cast<int>(i); !seen[static_cast<std::size_t>(x)]; x = img[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

}  // namespace detail

/// Visit every permutation with cycle type t exactly once, in a fixed order.
/// The visitor returns false to stop.
inline void for_each_in_class(const Partition& t, const std::function<bool(const Perm&)>& visit) {
    detail::ClassWalker w(t, [&](const detail::Images& img) { return visit(Perm(img)); });
    w.run();
}

/// All permutations of {0..n-1} with cycle type t.
inline std::vector<Perm> class_stream(const Partition& t, int n) {
    if (t.sum() != n) throw Error(ErrorCode::DegreeMismatch, "cycle type does not sum to n");
    std::vector<Perm> out;
    for_each_in_class(t, [&](const Perm& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

/// n! / prod(k^{m_k} m_k!) where m_k is the multiplicity of length k.
inline std::uint64_t class_size(const Partition& t) {
    long double v = 1;
    for (int k = 2; k <= t.sum(); ++k) v *= k;
    std::map<int, int> mult;
    for (int p : t.parts()) ++mult[p];
    for (auto [k, m] : mult) {
        for (int j = 0; j < m; ++j) v /= k;
        for (int j = 2; j <= m; ++j) v /= j;
    }
    return static_cast<std::uint64_t>(v + 0.5L);
}

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000'000ULL;
    std::uint64_t max_millis = 600'000ULL;
};

enum class OracleTag { Realizable, NotRealizable, BudgetExceeded };

inline const char* to_string(OracleTag t) {
    switch (t) {
        case OracleTag::Realizable: return "REALIZABLE";
        case OracleTag::NotRealizable: return "NOT_REALIZABLE";
        case OracleTag::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "UNKNOWN";
}

struct OracleResult {
    OracleTag tag = OracleTag::NotRealizable;
    std::optional<ConstellationTuple> witness;
    std::uint64_t nodes = 0;
};

struct OracleOptions {
    SearchBudget budget;
    int workers = 1;
    /// Keep only candidates minimal under the cycle rotations of the fixed
    /// face permutation.
    bool reduce_symmetry = true;
};

namespace detail {

/// Shared search over tuples with prescribed cycle types types[0..q-1]; the
/// last one is fixed to consecutive blocks.
class TupleSearch {
public:
    TupleSearch(std::vector<Partition> types, const OracleOptions& opt)
        : types_(std::move(types)), opt_(opt), q_(static_cast<int>(types_.size())), n_(types_.back().sum()) {
        // fixed last permutation: blocks of consecutive points, longest first
        face_.assign(static_cast<std::size_t>(n_), 0);
        int at = 0;
        for (int len : types_.back().decreasing()) {
            std::vector<int> blk;
            for (int k = 0; k < len; ++k) blk.push_back(at + k);
            for (int k = 0; k < len; ++k) face_[static_cast<std::size_t>(at + k)] = at + (k + 1) % len;
            blocks_.push_back(blk);
            at += len;
        }
        // free colored slots by increasing class size; the largest is derived
        std::vector<int> slots(static_cast<std::size_t>(q_ - 1));
        for (int i = 0; i < q_ - 1; ++i) slots[static_cast<std::size_t>(i)] = i;
        std::stable_sort(slots.begin(), slots.end(), [&](int a, int b) {
            return class_size(types_[static_cast<std::size_t>(a)]) < class_size(types_[static_cast<std::size_t>(b)]);
        });
        derived_ = slots.back();
        slots.pop_back();
        order_ = slots;
        if (opt_.reduce_symmetry) build_rotations();
    }

    OracleResult run() {
        start_ = std::chrono::steady_clock::now();
        const int workers = std::max(1, opt_.workers);
        if (workers == 1) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back([this, w, workers] { work(w, workers); });
            for (auto& t : pool) t.join();
        }
        OracleResult res;
        res.nodes = nodes_.load();
        if (witness_) {
            res.tag = OracleTag::Realizable;
            res.witness = witness_;
        } else if (exceeded_.load()) {
            res.tag = OracleTag::BudgetExceeded;
        } else {
            res.tag = OracleTag::NotRealizable;
        }
        return res;
    }

private:
    static Images invert(const Images& a) {
        Images out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
        return out;
    }

    // left-to-right product
    static Images mul(const Images& a, const Images& b) {
        Images out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
        return out;
    }

    void build_rotations() {
        // every combination of powers of the face cycles
        rotations_.assign(1, Images(static_cast<std::size_t>(n_)));
        for (int i = 0; i < n_; ++i) rotations_[0][static_cast<std::size_t>(i)] = i;
        for (const auto& blk : blocks_) {
            const int len = static_cast<int>(blk.size());
            std::vector<Images> next;
            for (const auto& h : rotations_)
                for (int k = 0; k < len; ++k) {
                    Images g = h;
                    for (int j = 0; j < len; ++j) g[static_cast<std::size_t>(blk[static_cast<std::size_t>(j)])] = blk[static_cast<std::size_t>((j + k) % len)];
                    next.push_back(std::move(g));
                }
            rotations_ = std::move(next);
        }
        rotations_.erase(rotations_.begin());  // identity
        for (const auto& h : rotations_) rotation_inverses_.push_back(invert(h));
    }

    /// x is kept iff no rotation conjugate h^{-1} x h is lexicographically smaller.
    bool canonical(const Images& x) const {
        for (std::size_t k = 0; k < rotations_.size(); ++k) {
            const auto& h = rotations_[k];
            const auto& hinv = rotation_inverses_[k];
            // (h^{-1} x h)[y] = h[x[h^{-1}[y]]]
            for (int y = 0; y < n_; ++y) {
                const int v = h[static_cast<std::size_t>(x[static_cast<std::size_t>(hinv[static_cast<std::size_t>(y)])])];
                if (v < x[static_cast<std::size_t>(y)]) return false;
                if (v > x[static_cast<std::size_t>(y)]) break;
            }
        }
        return true;
    }

    bool tick() {
        const auto k = ++nodes_;
        if (k > opt_.budget.max_nodes) {
            exceeded_ = true;
            return false;
        }
        if ((k & 1023U) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
            if (static_cast<std::uint64_t>(ms) > opt_.budget.max_millis) {
                exceeded_ = true;
                return false;
            }
        }
        return !found_.load(std::memory_order_relaxed) && !exceeded_.load(std::memory_order_relaxed);
    }

    void work(int worker, int workers) {
        std::vector<Images> chosen(static_cast<std::size_t>(q_ - 1));
        std::vector<char> seen;
        std::uint64_t top_index = 0;

        std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
            if (depth == order_.size()) return leaf(chosen, seen);
            const int slot = order_[depth];
            ClassWalker walker(types_[static_cast<std::size_t>(slot)], [&](const Images& img) {
                if (depth == 0) {
                    if (top_index++ % static_cast<std::uint64_t>(workers) != static_cast<std::uint64_t>(worker)) return true;
                    if (opt_.reduce_symmetry && !canonical(img)) return true;
                }
                if (!tick()) return false;
                chosen[static_cast<std::size_t>(slot)] = img;
                return descend(depth + 1);
            });
            return walker.run();
        };
        descend(0);
    }

    bool leaf(std::vector<Images>& chosen, std::vector<char>& seen) {
        // g_derived = (prefix)^{-1} (suffix * face)^{-1}
        Images prefix(static_cast<std::size_t>(n_)), suffix = face_;
        for (int i = 0; i < n_; ++i) prefix[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < derived_; ++i) prefix = mul(prefix, chosen[static_cast<std::size_t>(i)]);
        for (int i = q_ - 2; i > derived_; --i) suffix = mul(chosen[static_cast<std::size_t>(i)], suffix);
        Images g = mul(invert(prefix), invert(suffix));
        if (images_cycle_type(g, seen) != types_[static_cast<std::size_t>(derived_)]) return true;
        chosen[static_cast<std::size_t>(derived_)] = g;

        ConstellationTuple c;
        c.n = n_;
        for (const auto& img : chosen) c.g.emplace_back(img);
        c.g.emplace_back(face_);
        if (!is_transitive(c)) return true;
        if (!product_is_identity(c))
            throw Error(ErrorCode::InternalPlanError, "oracle derived a tuple without identity product");
        std::lock_guard<std::mutex> lock(mu_);
        if (!witness_) witness_ = std::move(c);
        found_ = true;
        return false;
    }

    std::vector<Partition> types_;
    OracleOptions opt_;
    int q_;
    int n_;
    Images face_;
    std::vector<std::vector<int>> blocks_;
    std::vector<Images> rotations_;
    std::vector<Images> rotation_inverses_;
    int derived_ = 0;
    std::vector<int> order_;

    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> found_{false};
    std::atomic<bool> exceeded_{false};
    std::mutex mu_;
    std::optional<ConstellationTuple> witness_;
};

}  // namespace detail

/// Exhaustive decision for a general passport: types[0..q-2] are the colored
/// cycle types, types[q-1] the face type. Requires the Riemann-Hurwitz count.
inline OracleResult oracle_decide(const std::vector<Partition>& types, const OracleOptions& opt = {}) {
    if (types.size() < 3) throw Error(ErrorCode::InvalidPassport, "need at least three partitions");
    const int n = types.back().sum();
    long total = 0;
    for (const auto& t : types) {
        if (t.empty() || t.sum() != n || t.min_part() < 1)
            throw Error(ErrorCode::InvalidPassport, "partitions must be nonempty and sum to the same n");
        total += t.count();
    }
    if (total != static_cast<long>(types.size() - 2) * n + 2)
        throw Error(ErrorCode::InvalidPassport, "Riemann-Hurwitz count fails");
    if (opt.budget.max_nodes == 0 || opt.budget.max_millis == 0)
        throw Error(ErrorCode::InvalidPassport, "search budget must be positive");

    detail::TupleSearch search(types, opt);
    auto res = search.run();
    if (res.witness) {
        const auto& w = *res.witness;
        bool ok = is_planar_constellation(w);
        for (std::size_t i = 0; ok && i < types.size(); ++i) ok = cycle_type(w.g[i]) == types[i];
        if (!ok) throw Error(ErrorCode::InternalPlanError, "oracle witness failed verification");
    }
    return res;
}

inline OracleResult oracle_decide(const LaurentPassport& p, const OracleOptions& opt = {}) {
    auto res = oracle_decide(p.all(), opt);
    if (res.witness && !verify_against(*res.witness, p).passed())
        throw Error(ErrorCode::InternalPlanError, "oracle witness failed verification");
    return res;
}

}  // namespace laurent
