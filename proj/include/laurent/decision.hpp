#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/passport.hpp"

namespace laurent {

struct Realizable {};

struct Exceptional {
    std::vector<int> families;  // sorted, nonempty, subset of 1..7
};

struct Invalid {
    std::vector<Violation> reasons;
};

using Verdict = std::variant<Realizable, Exceptional, Invalid>;

inline bool is_realizable(const Verdict& v) { return std::holds_alternative<Realizable>(v); }
inline bool is_exceptional(const Verdict& v) { return std::holds_alternative<Exceptional>(v); }
inline bool is_invalid(const Verdict& v) { return std::holds_alternative<Invalid>(v); }

namespace detail {

inline bool face_is(const Partition& face, int a, int n) {
    if (a < 1 || a >= n) return false;
    return face == Partition{a, n - a};
}

inline bool family_ordered(const Partition& a, const Partition& b, const Partition& face, int n, int k) {
    const int s = face.min_part();
    const auto bt = b.nontrivial();
    switch (k) {
        case 1: {
            const int l = a.min_part();
            if (l < 2 || !a.all_equal_to(l)) return false;
            if (bt.size() != 1 || bt[0] < 3) return false;
            return s % l == 0;
        }
        case 2:
            return a.all_equal_to(2) && b.all_equal_to(2) && 2 * s != n;
        case 3: {
            if (!a.all_equal_to(2) || bt.size() != 2) return false;
            const int d = bt[1];
            return d >= 3 && bt[0] == d - 1 && face_is(face, 2 * d - 3, n);
        }
        case 4:
        case 5: {
            if (!a.all_equal_to(2) || bt.size() != 2 || bt[0] != bt[1]) return false;
            const int d = bt[0];
            return d >= 3 && face_is(face, k == 4 ? 2 * d - 3 : 2 * d - 1, n);
        }
        case 6: {
            if (!a.all_equal_to(2) || b.ones() != 1 || bt.empty() || bt.back() != 3) return false;
            for (std::size_t j = 0; j + 1 < bt.size(); ++j)
                if (bt[j] != 2) return false;
            return 2 * s == n;
        }
        case 7:
            return a == Partition{2, 2, 2, 2, 2, 2} && b == Partition{1, 1, 1, 3, 3, 3} && face == Partition{6, 6};
        default:
            return false;
    }
}

}  // namespace detail

/// True iff the q = 3 passport instantiates exceptional family k (1..7), with
/// the two colored partitions tried in both roles.
inline bool match_family(const LaurentPassport& p, int k) {
    if (p.q() != 3) throw Error(ErrorCode::NotQ3, "family matching needs q=3, got q=" + std::to_string(p.q()));
    const auto& a = p.colored(0);
    const auto& b = p.colored(1);
    return detail::family_ordered(a, b, p.face(), p.n(), k) || detail::family_ordered(b, a, p.face(), p.n(), k);
}

inline std::vector<int> matching_families(const LaurentPassport& p) {
    std::vector<int> out;
    if (p.q() != 3) return out;
    for (int k = 1; k <= 7; ++k)
        if (match_family(p, k)) out.push_back(k);
    return out;
}

inline Verdict classify(const LaurentPassport& p) {
    if (p.q() > 3) return Realizable{};
    auto fam = matching_families(p);
    if (fam.empty()) return Realizable{};
    return Exceptional{std::move(fam)};
}

inline Verdict classify(const RawPassport& raw) {
    auto res = validate(raw);
    if (!res.ok()) return Invalid{std::move(res.violations)};
    return classify(*res.passport);
}

inline std::string to_string(const Verdict& v) {
    if (is_realizable(v)) return "REALIZABLE";
    if (const auto* e = std::get_if<Exceptional>(&v)) {
        std::string out = "EXCEPTIONAL families=[";
        for (std::size_t i = 0; i < e->families.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(e->families[i]);
        }
        return out + "]";
    }
    std::string out = "INVALID";
    for (const auto& r : std::get<Invalid>(v).reasons) out += std::string(" ") + to_string(r.kind);
    return out;
}

}  // namespace laurent
