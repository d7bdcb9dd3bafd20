#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laurent/partition.hpp"

namespace laurent {

/// Unvalidated branch data: q-1 colored part lists plus the face list.
struct RawPassport {
    std::vector<std::vector<int>> colored;
    std::vector<int> face;
};

enum class ViolationKind {
    NonPositivePart,
    SumMismatch,
    RHViolation,
    FaceNotTwoParts,
    TrivialPartition,
    TooFewPartitions,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NonPositivePart: return "NonPositivePart";
        case ViolationKind::SumMismatch: return "SumMismatch";
        case ViolationKind::RHViolation: return "RHViolation";
        case ViolationKind::FaceNotTwoParts: return "FaceNotTwoParts";
        case ViolationKind::TrivialPartition: return "TrivialPartition";
        case ViolationKind::TooFewPartitions: return "TooFewPartitions";
    }
    return "Unknown";
}

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// A validated Laurent passport: r = q-1 colored partitions of n and a face
/// partition {s, n-s}. The face is a multiset; s() is its smaller part.
class LaurentPassport {
public:
    const std::vector<Partition>& colored() const noexcept { return colored_; }
    const Partition& colored(int i) const { return colored_.at(static_cast<std::size_t>(i)); }
    const Partition& face() const noexcept { return face_; }

    int n() const noexcept { return n_; }
    int r() const noexcept { return static_cast<int>(colored_.size()); }
    int q() const noexcept { return r() + 1; }
    int s() const { return face_.min_part(); }

    /// All q partitions, face last.
    std::vector<Partition> all() const {
        auto out = colored_;
        out.push_back(face_);
        return out;
    }

    friend bool operator==(const LaurentPassport&, const LaurentPassport&) = default;

private:
    friend struct PassportAccess;
    std::vector<Partition> colored_;
    Partition face_;
    int n_ = 0;
};

struct PassportAccess {
    static LaurentPassport make(std::vector<Partition> colored, Partition face) {
        LaurentPassport p;
        p.n_ = face.sum();
        p.colored_ = std::move(colored);
        p.face_ = std::move(face);
        return p;
    }
};

struct ValidationResult {
    std::optional<LaurentPassport> passport;
    std::vector<Violation> violations;

    bool ok() const noexcept { return passport.has_value(); }
};

/// Check every Laurent passport invariant; on failure all violated ones are
/// reported. The degree n is taken from the face partition when it is
/// non-empty, otherwise from the first colored list.
inline ValidationResult validate(const RawPassport& raw) {
    ValidationResult res;
    auto add = [&](ViolationKind k, std::string d) { res.violations.push_back({k, std::move(d)}); };

    const int q = static_cast<int>(raw.colored.size()) + 1;
    std::vector<const std::vector<int>*> lists;
    for (const auto& c : raw.colored) lists.push_back(&c);
    lists.push_back(&raw.face);

    if (q < 3) add(ViolationKind::TooFewPartitions, "q=" + std::to_string(q) + " < 3");

    bool positive = true;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (lists[i]->empty() ||
            std::any_of(lists[i]->begin(), lists[i]->end(), [](int v) { return v < 1; })) {
            add(ViolationKind::NonPositivePart,
                "partition " + std::to_string(i + 1) + " is empty or has a part < 1");
            positive = false;
        }
    }

    const auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    const int n = !raw.face.empty() ? sum(raw.face) : (raw.colored.empty() ? 0 : sum(raw.colored.front()));

    for (std::size_t i = 0; i < lists.size(); ++i) {
        int si = sum(*lists[i]);
        if (si != n)
            add(ViolationKind::SumMismatch, "partition " + std::to_string(i + 1) + " sums to " +
                                                std::to_string(si) + ", expected " + std::to_string(n));
    }
    if (raw.face.size() != 2)
        add(ViolationKind::FaceNotTwoParts,
            "face partition has " + std::to_string(raw.face.size()) + " parts");

    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (static_cast<int>(lists[i]->size()) >= n && n > 0)
            add(ViolationKind::TrivialPartition, "partition " + std::to_string(i + 1) + " has " +
                                                     std::to_string(lists[i]->size()) +
                                                     " parts, must be fewer than n=" + std::to_string(n));
    }

    long total = 0;
    for (const auto* l : lists) total += static_cast<long>(l->size());
    const long expected = static_cast<long>(q - 2) * n + 2;
    if (total != expected)
        add(ViolationKind::RHViolation, "sum of part counts is " + std::to_string(total) +
                                            ", Riemann-Hurwitz requires " + std::to_string(expected));

    if (res.violations.empty() && positive) {
        std::vector<Partition> colored;
        for (const auto& c : raw.colored) colored.emplace_back(c);
        res.passport = PassportAccess::make(std::move(colored), Partition(raw.face));
    }
    return res;
}

/// Convenience for tests and internal callers: validate or throw.
LaurentPassport make_passport(std::vector<Partition> colored, Partition face);

struct DerivedStats {
    std::vector<int> q;                  // parts > 1 per color
    std::vector<int> e;                  // parts == 1 per color
    std::vector<std::vector<int>> b;     // parts > 1, increasing
};

inline DerivedStats derived(const LaurentPassport& p) {
    DerivedStats d;
    for (const auto& part : p.colored()) {
        d.b.push_back(part.nontrivial());
        d.q.push_back(static_cast<int>(d.b.back().size()));
        d.e.push_back(part.ones());
    }
    return d;
}

/// Maps canonical color index j to the original color index perm[j].
struct ColorRelabeling {
    std::vector<int> perm;

    bool is_identity() const {
        for (std::size_t j = 0; j < perm.size(); ++j)
            if (perm[j] != static_cast<int>(j)) return false;
        return true;
    }
};

/// Ordering used for colored partitions: more parts > 1 first, ties broken by
/// the decreasing part list, larger first.
inline bool canonical_before(const Partition& a, const Partition& b) {
    const auto qa = a.nontrivial().size(), qb = b.nontrivial().size();
    if (qa != qb) return qa > qb;
    return a.decreasing() > b.decreasing();
}

inline std::pair<LaurentPassport, ColorRelabeling> canonicalize(const LaurentPassport& p) {
    ColorRelabeling rel;
    rel.perm.resize(static_cast<std::size_t>(p.r()));
    std::iota(rel.perm.begin(), rel.perm.end(), 0);
    std::stable_sort(rel.perm.begin(), rel.perm.end(), [&](int x, int y) {
        return canonical_before(p.colored(x), p.colored(y));
    });
    std::vector<Partition> colored;
    for (int idx : rel.perm) colored.push_back(p.colored(idx));
    return {PassportAccess::make(std::move(colored), p.face()), rel};
}

/// Inverse of canonicalize: put canonical colors back in original order.
inline LaurentPassport apply_relabeling(const LaurentPassport& canonical, const ColorRelabeling& rel) {
    std::vector<Partition> colored(canonical.colored().size());
    for (std::size_t j = 0; j < rel.perm.size(); ++j)
        colored[static_cast<std::size_t>(rel.perm[j])] = canonical.colored(static_cast<int>(j));
    return PassportAccess::make(std::move(colored), canonical.face());
}

inline bool is_canonical(const LaurentPassport& p) {
    for (int i = 0; i + 1 < p.r(); ++i)
        if (canonical_before(p.colored(i + 1), p.colored(i))) return false;
    return true;
}

/// Both sides of the identity
///   sum_{i>=2} sum_j (b_ij - 2) = e_1 + q_1 - (q_2 + ... + q_r).
inline std::pair<long, long> gop_sides(const DerivedStats& d) {
    long lhs = 0;
    for (std::size_t i = 1; i < d.b.size(); ++i)
        for (int v : d.b[i]) lhs += v - 2;
    long rhs = d.e.at(0) + d.q.at(0);
    for (std::size_t i = 1; i < d.q.size(); ++i) rhs -= d.q[i];
    return {lhs, rhs};
}

inline std::pair<long, long> gop_sides(const LaurentPassport& p) { return gop_sides(derived(p)); }

/// Visit every Laurent passport of degree n with q branch points once, colored
/// partitions taken as an unordered multiset and the face as {s, n-s}.
inline void for_each_passport(int n, int q, const std::function<bool(const LaurentPassport&)>& visit) {
    if (n < 3 || q < 3) return;
    std::vector<Partition> cands;
    for (const auto& p : partitions_of(n))
        if (p.count() < n) cands.push_back(p);
    const int r = q - 1;
    const int target = (r - 1) * n;
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    std::vector<std::vector<Partition>> colored_sets;

    std::function<bool(int, int, int)> rec = [&](int pos, int start, int acc) -> bool {
        if (pos == r) {
            if (acc != target) return true;
            std::vector<Partition> colored;
            for (int k : idx) colored.push_back(cands[static_cast<std::size_t>(k)]);
            for (int s = 1; 2 * s <= n; ++s) {
                auto p = PassportAccess::make(colored, Partition{s, n - s});
                if (!visit(p)) return false;
            }
            return true;
        }
        for (int k = start; k < static_cast<int>(cands.size()); ++k) {
            int nacc = acc + cands[static_cast<std::size_t>(k)].count();
            // every remaining slot adds at least one part
            if (nacc + (r - pos - 1) > target) continue;
            idx[static_cast<std::size_t>(pos)] = k;
            if (!rec(pos + 1, k, nacc)) return false;
        }
        return true;
    };
    rec(0, 0, 0);
}

inline std::vector<LaurentPassport> enumerate_passports(int n, int q) {
    std::vector<LaurentPassport> out;
    for_each_passport(n, q, [&](const LaurentPassport& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace laurent

#include "laurent/error.hpp"

namespace laurent {

inline LaurentPassport make_passport(std::vector<Partition> colored, Partition face) {
    RawPassport raw;
    for (const auto& c : colored) raw.colored.push_back(c.parts());
    raw.face = face.parts();
    auto res = validate(raw);
    if (!res.ok()) {
        std::string msg;
        for (const auto& v : res.violations) msg += std::string(to_string(v.kind)) + " ";
        throw Error(ErrorCode::InvalidPassport, msg);
    }
    // keep the caller's color order
    return PassportAccess::make(std::move(colored), std::move(face));
}

}  // namespace laurent
