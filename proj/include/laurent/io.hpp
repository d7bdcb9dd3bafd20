#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "json.hpp"
#include "laurent/constellation.hpp"
#include "laurent/error.hpp"
#include "laurent/passport.hpp"
#include "laurent/perm.hpp"

namespace laurent {

/// Parse "a,b,...;c,d*;..." into a raw passport. Whitespace is ignored; a
/// trailing '*' marks the face. Without a marker the face is the unique
/// 2-part partition, or the last partition when it is 2-part and no other
/// partition equals it, or any of several equal 2-part partitions.
/// Colored partitions keep their listed order.
inline RawPassport parse_passport(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw Error(ErrorCode::SyntaxError, "empty passport text");

    std::vector<std::vector<int>> parts;
    std::vector<bool> starred;
    std::size_t i = 0;
    while (true) {
        std::vector<int> cur;
        while (true) {
            if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
                throw Error(ErrorCode::SyntaxError, "expected an integer at position " + std::to_string(i));
            long v = 0;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
                v = v * 10 + (t[i] - '0');
                if (v > 1'000'000) throw Error(ErrorCode::SyntaxError, "part too large");
                ++i;
            }
            cur.push_back(static_cast<int>(v));
            if (i < t.size() && t[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        bool star = false;
        if (i < t.size() && t[i] == '*') {
            star = true;
            ++i;
        }
        parts.push_back(std::move(cur));
        starred.push_back(star);
        if (i == t.size()) break;
        if (t[i] != ';') throw Error(ErrorCode::SyntaxError, std::string("unexpected '") + t[i] + "'");
        ++i;
    }
    if (parts.size() < 2) throw Error(ErrorCode::SyntaxError, "need at least two partitions separated by ';'");

    int face = -1;
    int stars = 0;
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (starred[k]) {
            ++stars;
            face = static_cast<int>(k);
        }
    if (stars > 1) throw Error(ErrorCode::SyntaxError, "more than one '*'");
    if (stars == 0) {
        std::vector<int> two;
        for (std::size_t k = 0; k < parts.size(); ++k)
            if (parts[k].size() == 2) two.push_back(static_cast<int>(k));
        if (two.empty()) throw Error(ErrorCode::NoFace, "no 2-part partition to serve as the face");
        auto same = [&](int a, int b) { return Partition(parts[static_cast<std::size_t>(a)]) == Partition(parts[static_cast<std::size_t>(b)]); };
        const bool interchangeable = std::all_of(two.begin(), two.end(), [&](int k) { return same(k, two.front()); });
        const int last = static_cast<int>(parts.size()) - 1;
        const bool last_unique = two.back() == last && std::count_if(two.begin(), two.end(), [&](int k) { return same(k, last); }) == 1;
        if (!interchangeable && !last_unique)
            throw Error(ErrorCode::AmbiguousFace, "several 2-part partitions; mark the face with '*'");
        face = two.back();
    }
    RawPassport raw;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (static_cast<int>(k) == face)
            raw.face = parts[k];
        else
            raw.colored.push_back(parts[k]);
    }
    return raw;
}

/// Inverse of parse_passport: colored partitions in order, face last with '*'.
inline std::string format_passport(const LaurentPassport& p) {
    std::string out;
    for (const auto& c : p.colored()) out += to_string(c) + ";";
    return out + to_string(p.face()) + "*";
}

/// JSON document for a tuple: 1-indexed image arrays, left-to-right products.
inline nlohmann::json to_json(const ConstellationTuple& c) {
    nlohmann::json sigma = nlohmann::json::array();
    for (const auto& g : c.g) sigma.push_back(g.one_based());
    return {{"n", c.n}, {"q", c.q()}, {"convention", "left-to-right"}, {"sigma", sigma}};
}

/// Loads a tuple document; rejects anything but a well-formed tuple with
/// identity product.
inline ConstellationTuple from_json(const nlohmann::json& j) {
    auto bad = [](const std::string& why) { return Error(ErrorCode::InvalidDocument, why); };
    if (!j.is_object()) throw bad("document is not an object");
    for (const char* key : {"n", "q", "convention", "sigma"})
        if (!j.contains(key)) throw bad(std::string("missing field '") + key + "'");
    if (!j["n"].is_number_integer() || !j["q"].is_number_integer() || !j["sigma"].is_array() ||
        !j["convention"].is_string())
        throw bad("field types are wrong");
    if (j["convention"].get<std::string>() != "left-to-right") throw bad("unsupported composition convention");
    ConstellationTuple c;
    c.n = j["n"].get<int>();
    const int q = j["q"].get<int>();
    if (c.n < 1 || q < 1 || static_cast<int>(j["sigma"].size()) != q) throw bad("n, q and sigma disagree");
    for (const auto& row : j["sigma"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != c.n) throw bad("image array has the wrong length");
        std::vector<int> img;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw bad("image entries must be integers");
            img.push_back(v.get<int>());
        }
        try {
            c.g.push_back(Perm::from_one_based(img));
        } catch (const Error&) {
            throw bad("image array is not a permutation of 1..n");
        }
    }
    if (!product_is_identity(c)) throw bad("product of sigma is not the identity");
    return c;
}

/// Graphviz view. For q = 3 the bicolored graph: black nodes are cycles of
/// g_1, white nodes cycles of g_2, one edge per point. For q > 3 each star is
/// an auxiliary node joined to its colored vertices.
inline std::string to_dot(const ConstellationTuple& c) {
    std::string out = "graph constellation {\n";
    auto node_of = [](const Perm& g) {
        std::vector<int> id(static_cast<std::size_t>(g.degree()));
        const auto cyc = g.cycles();
        for (std::size_t k = 0; k < cyc.size(); ++k)
            for (int x : cyc[k]) id[static_cast<std::size_t>(x)] = static_cast<int>(k);
        return std::make_pair(id, static_cast<int>(cyc.size()));
    };
    if (c.q() == 3) {
        auto [black, nb] = node_of(c.g[0]);
        auto [white, nw] = node_of(c.g[1]);
        for (int k = 0; k < nb; ++k)
            out += "  b" + std::to_string(k + 1) + " [style=filled, fillcolor=black, fontcolor=white];\n";
        for (int k = 0; k < nw; ++k) out += "  w" + std::to_string(k + 1) + " [style=filled, fillcolor=white];\n";
        for (int x = 0; x < c.n; ++x)
            out += "  b" + std::to_string(black[static_cast<std::size_t>(x)] + 1) + " -- w" +
                   std::to_string(white[static_cast<std::size_t>(x)] + 1) + " [label=\"" + std::to_string(x + 1) +
                   "\"];\n";
        return out + "}\n";
    }
    for (int x = 0; x < c.n; ++x) out += "  s" + std::to_string(x + 1) + " [shape=point];\n";
    for (int i = 0; i + 1 < c.q(); ++i) {
        auto [id, nv] = node_of(c.g[static_cast<std::size_t>(i)]);
        const std::string pre = "c" + std::to_string(i + 1) + "_";
        for (int k = 0; k < nv; ++k)
            out += "  " + pre + std::to_string(k + 1) + " [label=\"" + std::to_string(i + 1) + "\"];\n";
        for (int x = 0; x < c.n; ++x)
            out += "  s" + std::to_string(x + 1) + " -- " + pre + std::to_string(id[static_cast<std::size_t>(x)] + 1) + ";\n";
    }
    return out + "}\n";
}

}  // namespace laurent
