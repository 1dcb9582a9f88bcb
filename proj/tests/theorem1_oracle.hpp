#pragma once

// Hand instantiation of the list of surviving patterns (i)-(ix) at a given m,
// built directly from the statement: each case enumerates its own types and
// characters instead of filtering the classifier's irreps.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nichols/centralizer.hpp"

namespace oracle {

using nichols::CentralizerIrrep;
using nichols::CycleType;
using nichols::IrrepFactor;
using nichols::Partition;

inline Partition trivial_partition(int n) { return {n}; }
inline Partition sign_partition(int n) { return Partition(static_cast<std::size_t>(n), 1); }

inline IrrepFactor constant_factor(int j, int n, int t, Partition mu) { return IrrepFactor{j, n, std::vector<int>(static_cast<std::size_t>(n), t), {std::move(mu)}}; }

// ρ_1 ∈ {ε, sgn}; empty choice list entry when n_1 = 0
inline std::vector<std::vector<IrrepFactor>> rho1_choices(int n1) {
    if (n1 == 0) return {{}};
    if (n1 == 1) return {{constant_factor(1, 1, 0, {1})}};
    return {{constant_factor(1, n1, 0, trivial_partition(n1))}, {constant_factor(1, n1, 0, sign_partition(n1))}};
}

inline void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out, const std::function<bool(int)>& allowed) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        if (!allowed(p)) continue;
        cur.push_back(p);
        partitions_into(n - p, p, cur, out, allowed);
        cur.pop_back();
    }
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_into(n, n, cur, out, [](int) { return true; });
    return out;
}

inline std::string key(const CentralizerIrrep& rho) { return rho.type().to_string() + " " + rho.to_string(); }

/// key -> case label
inline std::map<std::string, std::string> theorem1_instances(int m) {
    std::map<std::string, std::string> out;
    auto add = [&](const std::string& label, std::map<int, int> counts, std::vector<IrrepFactor> factors) {
        std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
        CentralizerIrrep rho(CycleType(counts), std::move(factors));
        out.emplace(key(rho), label);
    };
    auto with_rho1 = [&](const std::string& label, int n1, std::map<int, int> counts, const std::vector<IrrepFactor>& rest) {
        for (auto f1 : rho1_choices(n1)) {
            f1.insert(f1.end(), rest.begin(), rest.end());
            counts[1] = n1;
            add(label, counts, f1);
        }
    };
    const IrrepFactor sgn2 = constant_factor(2, 1, 1, {1});
    const IrrepFactor eps2 = constant_factor(2, 1, 0, {1});

    // (i) (1^{n_1}, 2)
    if (m >= 2) with_rho1("i", m - 2, {{2, 1}}, {sgn2});

    // (ii) (2, σ_o), odd parts > 1, t = 0 and any μ on each odd length
    {
        std::vector<std::vector<int>> odd_parts;
        std::vector<int> cur;
        partitions_into(m - 2, m - 2, cur, odd_parts, [](int p) { return p % 2 == 1 && p > 1; });
        for (const auto& parts : odd_parts) {
            if (parts.empty()) continue;
            std::map<int, int> counts{{2, 1}};
            for (int p : parts) ++counts[p];
            std::vector<std::vector<IrrepFactor>> partial{{sgn2}};
            for (const auto& [j, n] : counts) {
                if (j == 2) continue;
                std::vector<std::vector<IrrepFactor>> next;
                for (const auto& pre : partial)
                    for (const auto& mu : all_partitions(n)) {
                        auto v = pre;
                        v.push_back(constant_factor(j, n, 0, mu));
                        next.push_back(v);
                    }
                partial = std::move(next);
            }
            for (const auto& f : partial) add("ii", counts, f);
        }
    }

    // (iii) (1^{n_1}, 2^3)
    if (m >= 6) {
        const int n1 = m - 6;
        with_rho1("iii", n1, {{2, 3}}, {constant_factor(2, 3, 1, sign_partition(3))});
        if (n1 == 0) add("iii", {{2, 3}}, {constant_factor(2, 3, 1, trivial_partition(3))});
    }

    // (iv) (2^5)
    if (m == 10) {
        add("iv", {{2, 5}}, {constant_factor(2, 5, 1, trivial_partition(5))});
        add("iv", {{2, 5}}, {constant_factor(2, 5, 1, sign_partition(5))});
    }

    // (v) (1^{n_1}, 4), ρ_4 = χ_(-1)
    if (m >= 4) with_rho1("v", m - 4, {{4, 1}}, {constant_factor(4, 1, 2, {1})});

    // (vi) (1^{n_1}, 4^2), ρ_4 = χ_(±i,±i) ⊗ sgn
    if (m >= 8)
        for (int t : {1, 3}) with_rho1("vi", m - 8, {{4, 2}}, {constant_factor(4, 2, t, sign_partition(2))});

    // (vii) (2, 4)
    if (m == 6) {
        add("vii", {{2, 1}, {4, 1}}, {sgn2, constant_factor(4, 1, 0, {1})});
        add("vii", {{2, 1}, {4, 1}}, {eps2, constant_factor(4, 1, 2, {1})});
    }

    // (viii) (2, 4^2)
    if (m == 10)
        for (int t : {1, 3}) add("viii", {{2, 1}, {4, 2}}, {eps2, constant_factor(4, 2, t, sign_partition(2))});

    // (ix) (2^2, 4), deg ρ_2 = 1
    if (m == 8)
        for (int t : {0, 1})
            for (const auto& mu : {trivial_partition(2), sign_partition(2)})
                add("ix", {{2, 2}, {4, 1}}, {constant_factor(2, 2, t, mu), constant_factor(4, 1, 2, {1})});

    return out;
}

}  // namespace oracle
