#include "nichols/braiding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::abelian: return "abelian";
        case FamilyKind::d3: return "D3";
        case FamilyKind::d4sq: return "D4sq";
        case FamilyKind::dsq: return "Dsq";
        case FamilyKind::transversal: return "transversal";
    }
    return "?";
}

SubrackFamily::SubrackFamily(Permutation base, std::vector<FamilyMember> members, FamilyKind kind)
    : base_(std::move(base)), members_(std::move(members)), kind_(kind) {
    for (std::size_t l = 0; l < members_.size(); ++l) {
        const auto& m = members_[l];
        if (rack_conj(m.conjugator, base_) != m.element)
            throw PreconditionError("family member " + std::to_string(l) + ": " + m.conjugator.to_string() + " does not conjugate the base to " + m.element.to_string());
        for (std::size_t k = 0; k < l; ++k) {
            if (members_[k].element == m.element) throw PreconditionError("family members " + std::to_string(k) + " and " + std::to_string(l) + " coincide");
            if (kind_ == FamilyKind::abelian && !commute(members_[k].element, m.element))
                throw PreconditionError("abelian family: members " + std::to_string(k) + " and " + std::to_string(l) + " do not commute");
        }
    }
}

std::optional<int> SubrackFamily::index_of(const Permutation& x) const {
    for (std::size_t l = 0; l < members_.size(); ++l)
        if (members_[l].element == x) return static_cast<int>(l);
    return std::nullopt;
}

bool SubrackFamily::is_closed() const {
    for (const auto& x : members_)
        for (const auto& y : members_)
            if (!index_of(rack_conj(x.element, y.element))) return false;
    return true;
}

RootOfUnity act_on_weight_vector(const CentralizerIrrep& rho, const Permutation& gamma, const CentralizerPresentation& c) {
    if (rho.degree() == 1) return evaluate_deg1(rho, gamma, c);
    return weight_value(rho, gamma, c);
}

CycMatrix braiding_matrix(const SubrackFamily& fam, const CentralizerIrrep& rho, const CentralizerPresentation& c) {
    if (fam.base() != c.sigma) throw PreconditionError("family base is not the canonical representative of " + c.type.to_string());
    for (int l = 0; l < fam.size(); ++l)
        for (int k = 0; k < l; ++k)
            if (!commute(fam.element(l), fam.element(k))) throw PreconditionError("braiding_matrix needs pairwise commuting members; use span_braiding");
    CycMatrix q(fam.size());
    for (int l = 0; l < fam.size(); ++l)
        for (int k = 0; k < fam.size(); ++k) {
            auto gamma = fam.conjugator(k).inverse() * fam.element(l) * fam.conjugator(k);
            q(l, k) = Cyclotomic(act_on_weight_vector(rho, gamma, c));
        }
    return q;
}

CycMatrix braiding_matrix(const SubrackFamily& fam, const CentralizerIrrep& rho) {
    return braiding_matrix(fam, rho, build_centralizer(rho.type()));
}

CycMatrix SpanAction::operator_of(int a) const {
    CycMatrix m(size());
    for (int b = 0; b < size(); ++b) {
        auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        m(target[ua][ub], b) = Cyclotomic(scalar[ua][ub]);
    }
    return m;
}

SpanAction span_braiding(const SubrackFamily& fam, const CentralizerIrrep& rho, const CentralizerPresentation& c) {
    if (fam.base() != c.sigma) throw PreconditionError("family base is not the canonical representative of " + c.type.to_string());
    const auto n = static_cast<std::size_t>(fam.size());
    SpanAction act;
    act.target.assign(n, std::vector<int>(n, 0));
    act.scalar.assign(n, std::vector<RootOfUnity>(n));
    act.gamma.assign(n, std::vector<Permutation>(n));
    for (int a = 0; a < fam.size(); ++a)
        for (int b = 0; b < fam.size(); ++b) {
            auto moved = rack_conj(fam.element(a), fam.element(b));
            auto bp = fam.index_of(moved);
            if (!bp)
                throw PreconditionError("span_braiding: member " + std::to_string(a) + " ▷ member " + std::to_string(b) + " = " + moved.to_string() + " is not in the family");
            auto gamma = fam.conjugator(*bp).inverse() * fam.element(a) * fam.conjugator(b);
            auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
            act.target[ua][ub] = *bp;
            act.scalar[ua][ub] = act_on_weight_vector(rho, gamma, c);
            act.gamma[ua][ub] = std::move(gamma);
        }
    return act;
}

CycMatrix diagonalize_transversal(const SpanAction& action, const CycMatrix& combos) {
    const int n = action.size();
    if (combos.dim() != n) throw PreconditionError("combination matrix has the wrong size");
    auto inv = combos.inverse();
    std::vector<std::optional<CycMatrix>> conjugated(static_cast<std::size_t>(n));
    CycMatrix q(n);
    for (int A = 0; A < n; ++A) {
        std::optional<int> first;
        for (int a = 0; a < n; ++a) {
            if (combos(a, A).is_zero()) continue;
            auto& t = conjugated[static_cast<std::size_t>(a)];
            if (!t) t = inv * action.operator_of(a) * combos;
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    if (r != s && !(*t)(r, s).is_zero())
                        throw PreconditionError("not diagonal: operator of basis vector " + std::to_string(a) + " has entry (" + std::to_string(r) + ", " +
                                                std::to_string(s) + ") = " + (*t)(r, s).to_string() + " in the new basis");
            if (!first) {
                first = a;
                for (int B = 0; B < n; ++B) q(A, B) = (*t)(B, B);
            } else {
                for (int B = 0; B < n; ++B)
                    if (!((*t)(B, B) == q(A, B)))
                        throw PreconditionError("components " + std::to_string(*first) + " and " + std::to_string(a) + " of new vector " + std::to_string(A) +
                                                " act differently on new vector " + std::to_string(B));
            }
        }
    }
    return q;
}

CycMatrix transversal_combinations() {
    CycMatrix c(8);
    for (int half = 0; half < 2; ++half) {
        int o = 4 * half;
        for (int p = 0; p < 2; ++p) {
            // columns o+2p, o+2p+1 combine basis vectors o+p and o+p+2
            c(o + p, o + 2 * p) = Cyclotomic(1);
            c(o + p + 2, o + 2 * p) = Cyclotomic(1);
            c(o + p, o + 2 * p + 1) = Cyclotomic(1);
            c(o + p + 2, o + 2 * p + 1) = Cyclotomic(-1);
        }
    }
    return c;
}

std::string scalar_string(const Cyclotomic& z) { return z.to_string(); }

nlohmann::json matrix_to_json(const CycMatrix& m) {
    auto rows = nlohmann::json::array();
    for (int r = 0; r < m.dim(); ++r) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(scalar_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool GDDiagram::adjacent(int a, int b) const {
    return std::any_of(edges.begin(), edges.end(), [&](const DiagramEdge& e) { return (e.a == a && e.b == b) || (e.a == b && e.b == a); });
}

std::vector<std::vector<bool>> GDDiagram::adjacency() const {
    auto n = static_cast<std::size_t>(size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = true;
        adj[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = true;
    }
    return adj;
}

std::string GDDiagram::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (int v = 0; v < size(); ++v)
        os << "  v" << v + 1 << " [label=\"" << v + 1 << ": " << scalar_string(vertex_labels[static_cast<std::size_t>(v)]) << "\"];\n";
    for (const auto& e : edges) os << "  v" << e.a + 1 << " -- v" << e.b + 1 << " [label=\"" << scalar_string(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json GDDiagram::to_json() const {
    nlohmann::json j;
    auto vs = nlohmann::json::array();
    for (int v = 0; v < size(); ++v) vs.push_back({{"id", v + 1}, {"label", scalar_string(vertex_labels[static_cast<std::size_t>(v)])}});
    auto es = nlohmann::json::array();
    for (const auto& e : edges) es.push_back({{"a", e.a + 1}, {"b", e.b + 1}, {"label", scalar_string(e.label)}});
    j["vertices"] = std::move(vs);
    j["edges"] = std::move(es);
    return j;
}

GDDiagram dynkin_diagram(const CycMatrix& q) {
    GDDiagram g;
    for (int l = 0; l < q.dim(); ++l) g.vertex_labels.push_back(q(l, l));
    for (int l = 0; l < q.dim(); ++l)
        for (int k = l + 1; k < q.dim(); ++k) {
            auto prod = q(l, k) * q(k, l);
            if (!prod.is_one()) g.edges.push_back({l, k, prod});
        }
    return g;
}

std::optional<std::vector<int>> has_long_cycle(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n > 20) throw PreconditionError("has_long_cycle: subset search limited to 20 vertices");
    auto at = [&](int a, int b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    for (int size = 4; size <= n; ++size) {
        // subsets of the given size in lexicographic order
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (pick[static_cast<std::size_t>(v)]) verts.push_back(v);
            // an induced subgraph that is 2-regular and connected is a chordless cycle
            bool two_regular = std::all_of(verts.begin(), verts.end(), [&](int v) {
                return std::count_if(verts.begin(), verts.end(), [&](int w) { return w != v && at(v, w); }) == 2;
            });
            if (!two_regular) continue;
            std::vector<int> cycle{verts.front()};
            int prev = -1, cur = verts.front();
            while (true) {
                int next = -1;
                for (int w : verts)
                    if (w != cur && w != prev && at(cur, w)) {
                        next = w;
                        break;
                    }
                if (next == verts.front() || next < 0) break;
                cycle.push_back(next);
                prev = cur;
                cur = next;
            }
            if (static_cast<int>(cycle.size()) == size) return cycle;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
}

std::optional<std::vector<int>> has_long_cycle(const GDDiagram& g) { return has_long_cycle(g.adjacency()); }

std::optional<CartanData> cartan_data(const CycMatrix& q) {
    const int n = q.dim();
    std::vector<RootOfUnity> r(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            auto z = q(l, k).as_root_of_unity();
            if (!z) return std::nullopt;
            r[static_cast<std::size_t>(l * n + k)] = *z;
        }
    CartanData c;
    c.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int l = 0; l < n; ++l) {
        const auto& qll = r[static_cast<std::size_t>(l * n + l)];
        if (qll.is_one()) return std::nullopt;
        c.a[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)] = 2;
        for (int k = 0; k < n; ++k) {
            if (k == l) continue;
            auto prod = r[static_cast<std::size_t>(l * n + k)] * r[static_cast<std::size_t>(k * n + l)];
            std::optional<int> found;
            for (long long e = 0; e < qll.order(); ++e)
                if (qll.pow(-e) == prod) {
                    found = static_cast<int>(-e);
                    break;
                }
            if (!found) return std::nullopt;
            c.a[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = *found;
        }
    }
    return c;
}

bool is_finite_type(const CartanData& c) {
    const int n = c.rank();
    auto a = [&](int i, int j) { return c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c.a[static_cast<std::size_t>(i)].size()) != n) throw PreconditionError("Cartan matrix is not square");
        if (a(i, i) != 2) throw PreconditionError("Cartan matrix needs 2 on the diagonal");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a(i, j) > 0) throw PreconditionError("Cartan matrix needs non-positive off-diagonal entries");
            if ((a(i, j) == 0) != (a(j, i) == 0)) throw PreconditionError("Cartan matrix needs a_ij = 0 exactly when a_ji = 0");
        }
    }
    // d_i a_ij = d_j a_ji, propagated over each connected component
    std::vector<std::optional<Rational>> d(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (d[static_cast<std::size_t>(s)]) continue;
        d[static_cast<std::size_t>(s)] = Rational(1);
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (j == i || a(i, j) == 0) continue;
                Rational dj = *d[static_cast<std::size_t>(i)] * a(i, j) / a(j, i);
                auto& slot = d[static_cast<std::size_t>(j)];
                if (!slot) {
                    slot = dj;
                    queue.push_back(j);
                } else if (*slot != dj) {
                    return false;  // not symmetrizable, hence not of finite type
                }
            }
        }
    }
    std::vector<std::vector<Rational>> b(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *d[static_cast<std::size_t>(i)] * a(i, j);
    // positive definite iff every pivot of elimination without row exchanges is positive
    for (int p = 0; p < n; ++p) {
        auto up = static_cast<std::size_t>(p);
        if (b[up][up] <= 0) return false;
        for (int r = p + 1; r < n; ++r) {
            auto ur = static_cast<std::size_t>(r);
            Rational f = b[ur][up] / b[up][up];
            if (f == 0) continue;
            for (int col = p; col < n; ++col) b[ur][static_cast<std::size_t>(col)] -= f * b[up][static_cast<std::size_t>(col)];
        }
    }
    return true;
}

bool is_negative_braiding(const CycMatrix& q) {
    for (int l = 0; l < q.dim(); ++l) {
        if (!q(l, l).is_minus_one()) return false;
        for (int k = l + 1; k < q.dim(); ++k) {
            auto prod = q(l, k) * q(k, l);
            if (!prod.is_one() && !prod.is_minus_one()) return false;
        }
    }
    return true;
}

ProbeReport negative_braiding_probe(const CycleType& type, const CentralizerIrrep& rho, int budget, std::uint64_t seed) {
    if (rho.degree() != 1) throw PreconditionError("negative_braiding_probe needs a degree-one irrep");
    auto c = build_centralizer(type);
    if (c.order() > 2'000'000) throw PreconditionError("negative_braiding_probe: centralizer too large to enumerate");
    std::vector<Permutation> candidates;
    for_each_element(c, [&](const Permutation& g) {
        if (g != c.sigma && cycle_type(g) == type) candidates.push_back(g);
    });
    std::sort(candidates.begin(), candidates.end());

    ProbeReport report;
    std::mt19937_64 rng(seed);
    auto check = [&](std::vector<Permutation> elems) {
        std::vector<FamilyMember> members;
        for (auto& e : elems) members.push_back({e, conjugator(c.sigma, e)});
        SubrackFamily fam(c.sigma, std::move(members), FamilyKind::abelian);
        auto q = braiding_matrix(fam, rho, c);
        ++report.families_checked;
        if (!is_negative_braiding(q) && report.negative) {
            report.negative = false;
            report.counterexample = fam;
            report.counterexample_matrix = q;
        }
    };
    check({c.sigma});
    for (int trial = 1; trial < budget; ++trial) {
        std::vector<Permutation> elems{c.sigma};
        if (!candidates.empty()) {
            std::size_t want = 2 + rng() % 3;
            std::vector<std::size_t> order(candidates.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            for (std::size_t i : order) {
                if (elems.size() >= want) break;
                const auto& x = candidates[i];
                if (std::all_of(elems.begin(), elems.end(), [&](const Permutation& y) { return commute(x, y); })) elems.push_back(x);
            }
        }
        check(std::move(elems));
    }
    return report;
}

}  // namespace nichols
