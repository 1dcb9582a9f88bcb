#pragma once

// Hardcoded finite and affine Cartan matrices of rank <= 8, built from their
// Dynkin diagrams, and an ADE recognizer for simply-laced graphs.

#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

struct Named {
    std::string name;
    Matrix a;
};

// bond (i, j, a_ij, a_ji)
inline Matrix from_bonds(int n, const std::vector<std::tuple<int, int, int, int>>& bonds) {
    Matrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (auto [i, j, x, y] : bonds) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = y;
    }
    return a;
}

inline std::vector<std::tuple<int, int, int, int>> chain(int from, int to) {
    std::vector<std::tuple<int, int, int, int>> b;
    for (int i = from; i < to; ++i) b.emplace_back(i, i + 1, -1, -1);
    return b;
}

inline std::vector<Named> finite_types(int max_rank) {
    std::vector<Named> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({"A" + std::to_string(n), from_bonds(n, chain(0, n - 1))});
    for (int n = 2; n <= max_rank; ++n) {
        auto b = chain(0, n - 2);
        b.emplace_back(n - 2, n - 1, -2, -1);
        out.push_back({"B" + std::to_string(n), from_bonds(n, b)});
        if (n >= 3) {
            b.back() = {n - 2, n - 1, -1, -2};
            out.push_back({"C" + std::to_string(n), from_bonds(n, b)});
        }
    }
    for (int n = 4; n <= max_rank; ++n) {
        auto b = chain(0, n - 2);
        b.emplace_back(n - 3, n - 1, -1, -1);
        out.push_back({"D" + std::to_string(n), from_bonds(n, b)});
    }
    for (int n = 6; n <= std::min(8, max_rank); ++n) {
        auto b = chain(0, n - 2);
        b.emplace_back(2, n - 1, -1, -1);
        out.push_back({"E" + std::to_string(n), from_bonds(n, b)});
    }
    if (max_rank >= 4) out.push_back({"F4", from_bonds(4, {{0, 1, -1, -1}, {1, 2, -2, -1}, {2, 3, -1, -1}})});
    if (max_rank >= 2) out.push_back({"G2", from_bonds(2, {{0, 1, -3, -1}})});
    return out;
}

// Untwisted and twisted affine types whose matrices have size <= max_size.
inline std::vector<Named> affine_types(int max_size) {
    std::vector<Named> out;
    out.push_back({"A1~", from_bonds(2, {{0, 1, -2, -2}})});
    out.push_back({"A2(2)", from_bonds(2, {{0, 1, -4, -1}})});
    for (int s = 3; s <= max_size; ++s) {
        auto b = chain(0, s - 1);
        b.emplace_back(s - 1, 0, -1, -1);
        out.push_back({"A" + std::to_string(s - 1) + "~", from_bonds(s, b)});
    }
    // fork at the start, double bond at the end: B~ and A(2)_{odd}
    for (int s = 4; s <= max_size; ++s)
        for (int orient = 0; orient < 2; ++orient) {
            auto b = chain(1, s - 2);
            b.emplace_back(0, 2, -1, -1);
            b.emplace_back(s - 2, s - 1, orient ? -2 : -1, orient ? -1 : -2);
            out.push_back({std::string(orient ? "B" : "A(2)odd") + "~size" + std::to_string(s), from_bonds(s, b)});
        }
    // double bonds at both ends: C~, D(2), A(2)_{even}
    for (int s = 3; s <= max_size; ++s)
        for (int o1 = 0; o1 < 2; ++o1)
            for (int o2 = 0; o2 < 2; ++o2) {
                auto b = chain(1, s - 2);
                b.emplace_back(0, 1, o1 ? -2 : -1, o1 ? -1 : -2);
                b.emplace_back(s - 2, s - 1, o2 ? -2 : -1, o2 ? -1 : -2);
                out.push_back({"double-ended size" + std::to_string(s), from_bonds(s, b)});
            }
    // forks at both ends: D~
    for (int s = 5; s <= max_size; ++s) {
        auto b = chain(1, s - 2);
        b.emplace_back(0, 2, -1, -1);
        b.emplace_back(s - 3, s - 1, -1, -1);
        out.push_back({"D" + std::to_string(s - 1) + "~", from_bonds(s, b)});
    }
    if (max_size >= 7) {
        // E6~: center 0 with three arms of length 2
        out.push_back({"E6~", from_bonds(7, {{0, 1, -1, -1}, {1, 2, -1, -1}, {0, 3, -1, -1}, {3, 4, -1, -1}, {0, 5, -1, -1}, {5, 6, -1, -1}})});
    }
    if (max_size >= 8) {
        // E7~: arms 3, 3, 1
        out.push_back({"E7~", from_bonds(8, {{0, 1, -1, -1}, {1, 2, -1, -1}, {2, 3, -1, -1}, {0, 4, -1, -1}, {4, 5, -1, -1}, {5, 6, -1, -1}, {0, 7, -1, -1}})});
    }
    if (max_size >= 5) {
        out.push_back({"F4~", from_bonds(5, {{0, 1, -1, -1}, {1, 2, -1, -1}, {2, 3, -2, -1}, {3, 4, -1, -1}})});
        out.push_back({"E6(2)", from_bonds(5, {{0, 1, -1, -1}, {1, 2, -1, -1}, {2, 3, -1, -2}, {3, 4, -1, -1}})});
    }
    out.push_back({"G2~", from_bonds(3, {{0, 1, -1, -1}, {1, 2, -3, -1}})});
    out.push_back({"D4(3)", from_bonds(3, {{0, 1, -1, -1}, {1, 2, -1, -3}})});
    return out;
}

// Simply-laced graph is a disjoint union of ADE diagrams.
inline bool is_ade(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    auto deg = [&](int v) {
        int d = 0;
        for (int w = 0; w < n; ++w) d += adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] ? 1 : 0;
        return d;
    };
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> verts{s};
        comp[static_cast<std::size_t>(s)] = s;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (int w = 0; w < n; ++w)
                if (adj[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = s;
                    verts.push_back(w);
                }
        int edges = 0, branch = -1, branches = 0;
        for (int v : verts) {
            edges += deg(v);
            if (deg(v) > 3) return false;
            if (deg(v) == 3) {
                branch = v;
                ++branches;
            }
        }
        edges /= 2;
        if (edges != static_cast<int>(verts.size()) - 1) return false;  // not a tree
        if (branches > 1) return false;
        if (branches == 0) continue;  // path
        std::vector<int> arms;
        for (int w = 0; w < n; ++w) {
            if (!adj[static_cast<std::size_t>(branch)][static_cast<std::size_t>(w)]) continue;
            int len = 0, prev = branch, cur = w;
            while (true) {
                ++len;
                int next = -1;
                for (int x = 0; x < n; ++x)
                    if (x != prev && adj[static_cast<std::size_t>(cur)][static_cast<std::size_t>(x)]) next = x;
                if (next < 0) break;
                prev = cur;
                cur = next;
            }
            arms.push_back(len);
        }
        double s3 = 0;
        for (int a : arms) s3 += 1.0 / (a + 1);
        if (s3 <= 1.0 + 1e-12) return false;
    }
    return true;
}

}  // namespace oracle
