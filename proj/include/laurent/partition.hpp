#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace laurent {

/// A multiset of positive integers, stored weakly increasing.
///
/// Used both for branch data (cycle types of a permutation tuple) and for
/// vertex valency lists of a constellation. Two partitions compare equal iff
/// they are equal as multisets.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Number of parts (p_i).
    int count() const noexcept { return static_cast<int>(parts_.size()); }

    int sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool empty() const noexcept { return parts_.empty(); }

    int min_part() const { return parts_.front(); }
    int max_part() const { return parts_.back(); }

    /// Parts greater than 1, increasing.
    std::vector<int> nontrivial() const {
        std::vector<int> out;
        for (int p : parts_)
            if (p > 1) out.push_back(p);
        return out;
    }

    int ones() const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
    }

    bool all_equal_to(int v) const {
        return !parts_.empty() &&
               std::all_of(parts_.begin(), parts_.end(), [v](int p) { return p == v; });
    }

    /// Parts listed largest first, the order used for display and tie-breaking.
    std::vector<int> decreasing() const { return {parts_.rbegin(), parts_.rend()}; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// "3,2,1" style rendering, largest part first.
inline std::string to_string(const Partition& p) {
    std::string out;
    for (int v : p.decreasing()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '{' << to_string(p) << '}';
}

/// Visit every partition of n exactly once, in reverse lexicographic order of
/// the decreasing part list ({n} first, {1,...,1} last). The visitor returns
/// false to stop early.
inline void for_each_partition(int n, const std::function<bool(const Partition&)>& visit) {
    if (n <= 0) return;
    std::vector<int> a{n};  // decreasing parts
    while (true) {
        if (!visit(Partition(a))) return;
        // find rightmost part > 1
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            rem += 1;
            a.pop_back();
        }
        if (a.empty()) return;
        int k = --a.back();
        rem += 1;
        while (rem > k) {
            a.push_back(k);
            rem -= k;
        }
        if (rem > 0) a.push_back(rem);
    }
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace laurent
