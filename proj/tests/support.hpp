#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's enumeration or search code.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace support {

using Parts = std::vector<int>;  // weakly increasing

/// Partitions of n by recursion on the largest part.
inline void partitions_rec(int n, int max_part, Parts& cur, std::vector<Parts>& out) {
    if (n == 0) {
        Parts p(cur.rbegin(), cur.rend());
        out.push_back(p);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Parts> partitions(int n) {
    std::vector<Parts> out;
    Parts cur;
    partitions_rec(n, n, cur, out);
    return out;
}

/// Sorted list of colored partitions followed by the face.
using PassportKey = std::vector<Parts>;

/// Every Laurent passport of degree n with q branch points, colored
/// partitions as a multiset: brute force over all r-subsets with repetition.
inline std::set<PassportKey> passports(int n, int q) {
    std::set<PassportKey> out;
    if (q < 3 || n < 3) return out;  // the 2-part face needs 2 < n
    const int r = q - 1;
    auto all = partitions(n);
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    while (true) {
        long total = 0;
        bool small = true;
        for (auto i : idx) {
            total += static_cast<long>(all[i].size());
            small = small && static_cast<int>(all[i].size()) < n;
        }
        if (small && total == static_cast<long>(r - 1) * n) {
            for (int s = 1; 2 * s <= n; ++s) {
                PassportKey key;
                for (auto i : idx) key.push_back(all[i]);
                std::sort(key.begin(), key.end());
                key.push_back({s, n - s});
                out.insert(key);
            }
        }
        // next non-decreasing index tuple
        int k = r - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] + 1 == all.size()) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(k)];
    }
    return out;
}

/// Uniform random permutation of {0..n-1}.
inline std::vector<int> random_images(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

/// Cycle type by direct traversal, increasing.
inline Parts cycle_lengths(const std::vector<int>& img) {
    std::vector<char> seen(img.size(), 0);
    Parts out;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (auto x = i; !seen[x]; x = static_cast<std::size_t>(img[x])) {
            seen[x] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Whether s = y + sum x_i u_i has a solution, by trying every subset.
inline bool representable(const std::vector<int>& u, int t, int s) {
    const std::size_t l = u.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
        int sum = 0;
        for (std::size_t i = 0; i < l; ++i)
            if (mask >> i & 1U) sum += u[i];
        if (s - sum >= 0 && s - sum <= t) return true;
    }
    return false;
}

inline unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
    return f;
}

}  // namespace support
