#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/partition.hpp"

namespace laurent {

/// A permutation of {0..n-1}. Text and JSON forms are 1-indexed; the
/// in-memory image array is 0-indexed.
///
/// Products compose left to right: (a * b)[x] = b[a[x]], so x is moved by a
/// first.
class Perm {
public:
    Perm() = default;

    /// Throws NotPermutation unless images is a bijection of {0..n-1}.
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::NotPermutation, "image array is not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Perm identity(int n) {
        Perm p;
        p.img_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = i;
        return p;
    }

    /// Build from 1-indexed images.
    static Perm from_one_based(const std::vector<int>& images) {
        std::vector<int> z(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) z[i] = images[i] - 1;
        return Perm(std::move(z));
    }

    /// Build from 0-indexed disjoint cycles; unlisted points are fixed.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (const auto& c : cycles) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                int x = c[k];
                if (x < 0 || x >= n || used[static_cast<std::size_t>(x)])
                    throw Error(ErrorCode::NotPermutation, "cycles are not disjoint within range");
                used[static_cast<std::size_t>(x)] = 1;
                img[static_cast<std::size_t>(x)] = c[(k + 1) % c.size()];
            }
        }
        return Perm(std::move(img));
    }

    int degree() const noexcept { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return img_; }

    std::vector<int> one_based() const {
        std::vector<int> out(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
        return out;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    Perm inverse() const {
        Perm p;
        p.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        return p;
    }

    /// Left-to-right product: apply *this first, then b.
    Perm operator*(const Perm& b) const {
        if (b.degree() != degree()) throw Error(ErrorCode::DegreeMismatch, "product of different degrees");
        Perm p;
        p.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) p.img_[i] = b.img_[static_cast<std::size_t>(img_[i])];
        return p;
    }

    /// h^{-1} * this * h, i.e. relabel every point x as h[x].
    Perm conjugate(const Perm& h) const { return h.inverse() * *this * h; }

    /// Disjoint cycles, each starting at its smallest point, ordered by start.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> c;
            int x = static_cast<int>(i);
            while (!seen[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = 1;
                c.push_back(x);
                x = img_[static_cast<std::size_t>(x)];
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    int cycle_count() const {
        int count = 0;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            ++count;
            for (int x = static_cast<int>(i); !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)])
                seen[static_cast<std::size_t>(x)] = 1;
        }
        return count;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
    std::vector<int> img_;
};

/// Multiset of cycle lengths, fixed points included.
inline Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    for (const auto& c : p.cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
}

/// Cycle notation, 1-indexed, fixed points omitted; "()" for the identity.
inline std::string to_cycle_string(const Perm& p) {
    std::string out;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(c[k] + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << to_cycle_string(p); }

}  // namespace laurent
