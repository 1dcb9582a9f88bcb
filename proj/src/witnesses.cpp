#include "nichols/witnesses.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

namespace {

using json = nlohmann::json;

class Builder {
public:
    Builder(std::string witness, std::string description, const CentralizerIrrep& rho) {
        r.witness = std::move(witness);
        r.description = std::move(description);
        r.type = rho.type();
        r.rho = rho;
    }

    bool check(std::string name, bool ok, std::string detail = {}) {
        r.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    }

    void compare(std::string name, bool ok, std::string detail = {}) {
        r.comparisons.push_back({std::move(name), ok, std::move(detail)});
    }

    void evaluate(const std::string& label, const Permutation& x, std::optional<RootOfUnity> value,
                  std::optional<RootOfUnity> expected = std::nullopt) {
        r.evaluations.push_back({label, x, value, expected});
        if (expected) {
            std::string got = value ? value->to_string() : "not a scalar";
            check("rho(" + label + ") = " + expected->to_string(), value && *value == *expected, "value " + got);
        }
    }

    WitnessReport finish(const std::string& support) {
        if (r.passed()) r.verdict_support = support;
        return std::move(r);
    }

    WitnessReport r;
};

std::string equation_detail(const Permutation& got, const Permutation& want) {
    if (got == want) return got.to_string();
    return "got " + got.to_string() + ", expected " + want.to_string();
}

Permutation product(int degree, const std::vector<Permutation>& factors) {
    Permutation p(degree);
    for (const auto& f : factors) p = p * f;
    return p;
}

std::set<int> support(const Permutation& p) {
    std::set<int> s;
    for (int x = 1; x <= p.degree(); ++x)
        if (p.image(x) != x) s.insert(x);
    return s;
}

bool distinct(const std::vector<Permutation>& xs) {
    std::set<Permutation> s(xs.begin(), xs.end());
    return s.size() == xs.size();
}

// x ▷ y stays inside xs for all x, y
bool closed_under_conjugation(const std::vector<Permutation>& xs) {
    std::set<Permutation> s(xs.begin(), xs.end());
    for (const auto& x : xs)
        for (const auto& y : xs)
            if (!s.contains(rack_conj(x, y))) return false;
    return true;
}

bool same_class(const std::vector<Permutation>& xs, const Permutation& sigma) {
    auto t = cycle_type(sigma);
    return std::all_of(xs.begin(), xs.end(), [&](const Permutation& x) { return cycle_type(x) == t; });
}

std::optional<SubrackFamily> make_family(Builder& b, const Permutation& base, const std::vector<FamilyMember>& members, FamilyKind kind) {
    try {
        SubrackFamily fam(base, members, kind);
        b.check("family is well formed", true, std::to_string(members.size()) + " members, " + to_string(kind));
        return fam;
    } catch (const PreconditionError& e) {
        b.check("family is well formed", false, e.what());
        return std::nullopt;
    }
}

std::vector<FamilyMember> members_by_conjugator(const Permutation& sigma, const std::vector<Permutation>& xs) {
    std::vector<FamilyMember> out;
    for (const auto& x : xs) out.push_back({x, conjugator(sigma, x)});
    return out;
}

CycMatrix block_matrix(const CycMatrix& q, int off_sign) {
    int n = q.dim();
    CycMatrix out(2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out(r, c) = q(r, c);
            out(r + n, c + n) = q(r, c);
            out(r, c + n) = off_sign > 0 ? q(r, c) : -q(r, c);
            out(r + n, c) = off_sign > 0 ? q(r, c) : -q(r, c);
        }
    return out;
}

// Diagonalizes the span action in the transversal basis and runs the Cartan test.
void transversal_pipeline(Builder& b, const SubrackFamily& fam, const CentralizerIrrep& rho, const CentralizerPresentation& c) {
    SpanAction action;
    try {
        action = span_braiding(fam, rho, c);
    } catch (const PreconditionError& e) {
        b.check("family is closed under conjugation", false, e.what());
        return;
    }
    b.check("family is closed under conjugation", true);
    CycMatrix m;
    try {
        m = diagonalize_transversal(action, transversal_combinations());
    } catch (const PreconditionError& e) {
        b.check("transversal basis diagonalizes the braiding", false, e.what());
        return;
    }
    b.check("transversal basis diagonalizes the braiding", true);
    b.r.matrix = m;
    b.r.diagram = dynkin_diagram(m);
    auto cd = cartan_data(m);
    if (!b.check("braiding is of Cartan type", cd.has_value())) return;
    b.r.cartan = cd;
    bool finite = true;
    std::string detail;
    try {
        finite = is_finite_type(*cd);
    } catch (const PreconditionError& e) {
        detail = e.what();
    }
    b.check("Cartan matrix is not of finite type", !finite, detail);
}

const std::string kCartanSupport = "Cartan type braided subspace whose Cartan matrix is not of finite type [H]";
const std::string kOctahedralSupport = "octahedral subrack with the required -1 values [AF2, Th. 4.11]";

}  // namespace

bool WitnessReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* WitnessReport::find_check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const IdentityCheck* WitnessReport::find_comparison(const std::string& name) const {
    for (const auto& c : comparisons)
        if (c.name == name) return &c;
    return nullptr;
}

json WitnessReport::to_json() const {
    auto checks_json = [](const std::vector<IdentityCheck>& cs) {
        json a = json::array();
        for (const auto& c : cs) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return a;
    };
    json j;
    j["witness"] = witness;
    j["description"] = description;
    j["type"] = type.to_string();
    j["rho"] = rho.to_string();
    j["passed"] = passed();
    j["checks"] = checks_json(checks);
    j["comparisons"] = checks_json(comparisons);
    json evs = json::array();
    for (const auto& e : evaluations) {
        json ej{{"label", e.label}, {"element", e.element.to_string()}};
        ej["value"] = e.value ? json(e.value->to_string()) : json(nullptr);
        ej["expected"] = e.expected ? json(e.expected->to_string()) : json(nullptr);
        evs.push_back(ej);
    }
    j["evaluations"] = evs;
    if (family) {
        json ms = json::array();
        for (const auto& m : family->members())
            ms.push_back({{"element", m.element.to_string()}, {"conjugator", m.conjugator.to_string()}});
        j["family"] = {{"kind", to_string(family->kind())}, {"members", ms}};
    } else {
        j["family"] = nullptr;
    }
    j["matrix"] = matrix ? matrix_to_json(*matrix) : json(nullptr);
    j["diagram"] = diagram ? diagram->to_json() : json(nullptr);
    j["cartan"] = cartan ? json(cartan->a) : json(nullptr);
    j["verdict_support"] = verdict_support ? json(*verdict_support) : json(nullptr);
    j["notes"] = notes;
    return j;
}

CentralizerIrrep restrict_irrep(const CentralizerIrrep& rho, const std::function<bool(int)>& keep) {
    std::map<int, int> counts;
    std::vector<IrrepFactor> factors;
    for (const auto& f : rho.factors()) {
        if (!keep(f.length)) continue;
        counts[f.length] = f.count;
        factors.push_back(f);
    }
    return CentralizerIrrep(CycleType(counts), factors);
}

// ---------------------------------------------------------------------------

WitnessReport reversal_quadruple_witness(const CentralizerIrrep& rho, int j, int l) {
    const CycleType& type = rho.type();
    if (l < 1 || l > type.count(j)) throw PreconditionError("no cycle A_{" + std::to_string(l) + "," + std::to_string(j) + "} in type " + type.to_string());
    const int t = rho.factor(j).t[static_cast<std::size_t>(l - 1)];
    if ((4 * t) % j == 0)
        throw PreconditionError("4 t_{l,j} = " + std::to_string(4 * t) + " is divisible by j = " + std::to_string(j));
    int long_cycles = 0;
    for (int k : type.lengths())
        if (k >= 3) long_cycles += type.count(k);
    if (long_cycles < 2) throw PreconditionError("the quadruple needs at least two cycles of length >= 3");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;
    const Permutation a = layout.cycle(j, l);

    Builder b("reversal-quadruple",
              "sigma, sigma A^-2, (sigma A^-2)^-1, sigma^-1 for A = A_{" + std::to_string(l) + "," + std::to_string(j) +
                  "}, conjugated by reversing involutions",
              rho);

    const Permutation s2 = sigma * a.pow(-2);
    const std::vector<Permutation> s{sigma, s2, s2.inverse(), sigma.inverse()};
    const Permutation g2 = reversing_involution(m, layout.cycle_points(j, l));
    Permutation g3(m);
    for (int k : type.lengths())
        for (int h = 1; h <= type.count(k); ++h)
            if (k != j || h != l) g3 = g3 * reversing_involution(m, layout.cycle_points(k, h));
    const std::vector<Permutation> g{Permutation(m), g2, g3, g2 * g3};

    for (int r = 0; r < 4; ++r) {
        std::string idx = std::to_string(r + 1);
        b.check("g_" + idx + " is an involution", g[static_cast<std::size_t>(r)].is_involution());
        b.check("g_" + idx + " conjugates sigma to sigma_" + idx, rack_conj(g[static_cast<std::size_t>(r)], sigma) == s[static_cast<std::size_t>(r)],
                equation_detail(rack_conj(g[static_cast<std::size_t>(r)], sigma), s[static_cast<std::size_t>(r)]));
    }
    b.check("sigma_1..sigma_4 are distinct", distinct(s));
    bool commuting = true;
    for (const auto& x : s)
        for (const auto& y : s) commuting = commuting && commute(x, y);
    b.check("sigma_1..sigma_4 commute pairwise", commuting);

    // σ_a g_b = g_b σ_{a xor b}
    int grid_failures = 0;
    std::string grid_detail;
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
            if (s[x] * g[y] != g[y] * s[x ^ y]) {
                ++grid_failures;
                if (grid_detail.empty()) grid_detail = "sigma_" + std::to_string(x + 1) + " g_" + std::to_string(y + 1);
            }
    b.check("sigma_a g_b = g_b sigma_(a xor b) for all a, b", grid_failures == 0,
            grid_failures == 0 ? "16 relations" : std::to_string(grid_failures) + " failures, first at " + grid_detail);

    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());

    std::vector<FamilyMember> members;
    for (std::size_t r = 0; r < 4; ++r) members.push_back({s[r], g[r]});
    auto fam = make_family(b, sigma, members, FamilyKind::abelian);
    if (!fam) return b.finish("");
    b.r.family = fam;

    const CycMatrix qm = braiding_matrix(*fam, rho, c);
    b.r.matrix = qm;
    b.r.diagram = dynkin_diagram(qm);
    auto cyc = has_long_cycle(*b.r.diagram);
    std::string cyc_detail;
    if (cyc) {
        std::ostringstream os;
        for (std::size_t i = 0; i < cyc->size(); ++i) os << (i ? "-" : "") << (*cyc)[i] + 1;
        cyc_detail = os.str();
    }
    b.check("diagram has a chordless cycle of length >= 4", cyc.has_value(), cyc_detail);

    // reference matrix with x = ω_j^{2t}
    const Cyclotomic x = Cyclotomic(root(j, 2LL * t));
    const Cyclotomic xi = x.inverse();
    const Cyclotomic mo(-1);
    const CycMatrix published = CycMatrix::from_rows({{mo, x, xi, mo}, {x, mo, mo, xi}, {xi, mo, mo, x}, {mo, xi, x, mo}});
    b.compare("braiding matrix equals the published matrix", qm == published, "computed " + qm.to_string());
    const auto& d = *b.r.diagram;
    bool square = d.adjacent(0, 1) && d.adjacent(0, 2) && d.adjacent(1, 3) && d.adjacent(2, 3) && !d.adjacent(0, 3) && !d.adjacent(1, 2);
    b.compare("diagram is the square 1-2-4-3", square);

    return b.finish("chordless cycle of length >= 4 in the generalized Dynkin diagram [H]");
}

WitnessReport reversal_quadruple_witness(const CentralizerIrrep& rho) {
    auto trig = lemma31_trigger(rho);
    if (!trig) throw PreconditionError("every exponent satisfies 4 t_{l,j} = 0 (mod j)");
    return reversal_quadruple_witness(rho, trig->first, trig->second);
}

// ---------------------------------------------------------------------------

namespace {

struct TableEntry {
    int target;
    const char* gamma;
};

using Table = std::array<std::array<TableEntry, 4>, 4>;

// rows σ_0..σ_3, columns g_0..g_3
constexpr Table kSigmaG{{{{{0, "s"}, {3, "s+"}, {2, "s2"}, {1, "s-"}}},
                         {{{2, "s-"}, {1, "s"}, {0, "s+"}, {3, "s2"}}},
                         {{{0, "s2"}, {3, "s-"}, {2, "s"}, {1, "s+"}}},
                         {{{2, "s+"}, {1, "s2"}, {0, "s-"}, {3, "s"}}}}};
// rows τ_0..τ_3, columns g_0..g_3
constexpr Table kTauG{{{{{0, "si"}, {3, "si+"}, {2, "s2i"}, {1, "si-"}}},
                       {{{2, "si-"}, {1, "si"}, {0, "si+"}, {3, "s2i"}}},
                       {{{0, "s2i"}, {3, "si-"}, {2, "si"}, {1, "si+"}}},
                       {{{2, "si+"}, {1, "s2i"}, {0, "si-"}, {3, "si"}}}}};
// rows σ_0..σ_3, columns h_0..h_3
constexpr Table kSigmaH{{{{{0, "si"}, {3, "si-"}, {2, "s2i"}, {1, "si+"}}},
                         {{{2, "si+"}, {1, "si"}, {0, "si-"}, {3, "s2i"}}},
                         {{{0, "s2i"}, {3, "si+"}, {2, "si"}, {1, "si-"}}},
                         {{{2, "si-"}, {1, "s2i"}, {0, "si+"}, {3, "si"}}}}};
// rows τ_0..τ_3, columns h_0..h_3
constexpr Table kTauH{{{{{0, "s"}, {3, "s-"}, {2, "s2"}, {1, "s+"}}},
                       {{{2, "s+"}, {1, "s"}, {0, "s-"}, {3, "s2"}}},
                       {{{0, "s2"}, {3, "s+"}, {2, "s"}, {1, "s-"}}},
                       {{{2, "s-"}, {1, "s2"}, {0, "s+"}, {3, "s"}}}}};

}  // namespace

WitnessReport transversal_power2_witness(const CentralizerIrrep& rho) {
    const CycleType& type = rho.type();
    const auto lengths = type.lengths();
    const int big = lengths.back();
    for (int k : lengths)
        if ((k & (k - 1)) != 0) throw PreconditionError("cycle length " + std::to_string(k) + " is not a power of 2");
    if (big < 8) throw PreconditionError("needs a cycle of length 2^k with k >= 3");
    const int n = type.count(big);
    if (n > 2) throw PreconditionError("needs at most two cycles of the largest length");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;
    const int half = big / 2;
    const int r = big / 8;

    Builder b("transversal-2power", "conjugates of sigma by powers of the even-position cycle of its " + std::to_string(big) + "-cycles, with inverses", rho);

    std::vector<Permutation> odd_cycles, even_cycles;
    Permutation g(m);
    for (int h = 1; h <= n; ++h) {
        auto pts = layout.cycle_points(big, h);
        std::vector<int> odd, even;
        for (int i = 0; i < big; ++i) (i % 2 == 0 ? odd : even).push_back(pts[static_cast<std::size_t>(i)]);
        odd_cycles.push_back(Permutation::cycle(m, odd));
        even_cycles.push_back(Permutation::cycle(m, even));
        std::vector<std::vector<int>> pairs;
        for (int s = 0; s < half; ++s) pairs.push_back({pts[static_cast<std::size_t>(s)], pts[static_cast<std::size_t>(big - 1 - s)]});
        g = g * Permutation::from_cycles(m, pairs);
    }
    for (int k : lengths)
        if (k != big)
            for (int h = 1; h <= type.count(k); ++h) g = g * reversing_involution(m, layout.cycle_points(k, h));

    const Permutation I = product(m, odd_cycles);
    const Permutation P = product(m, even_cycles);
    const Permutation alpha = layout.cycles_of_length(big);

    std::map<int, int> half_counts{{half, n}};
    if (m > half * n) half_counts[1] = m - half * n;
    const CycleType halves(half_counts);
    auto si = support(I), sp = support(P);
    bool disjoint = std::none_of(si.begin(), si.end(), [&](int x) { return sp.contains(x); });
    b.check("I and P are disjoint products of 2^(k-1)-cycles", disjoint && cycle_type(I) == halves && cycle_type(P) == halves,
            "I = " + I.to_string() + ", P = " + P.to_string());
    b.check("alpha^2 = I P", alpha * alpha == I * P);
    b.check("alpha I alpha^-1 = P", rack_conj(alpha, I) == P);
    b.check("sigma I sigma^-1 = P", rack_conj(sigma, I) == P);
    std::string bad_t;
    for (int t = 1; t <= half; ++t)
        if (P.pow(t) * alpha * P.pow(t) != alpha.pow(2LL * t + 1)) bad_t += (bad_t.empty() ? "" : ",") + std::to_string(t);
    b.check("P^t alpha P^t = alpha^(2t+1) for t = 1..2^(k-1)", bad_t.empty(), bad_t.empty() ? "" : "fails for t = " + bad_t);
    b.check("P^(2^(k-2)) is an involution", P.pow(2LL * r).is_involution() && !P.pow(2LL * r).is_identity());

    std::vector<Permutation> gl, sl, al;
    for (int l = 0; l < 4; ++l) {
        gl.push_back(P.pow(static_cast<long long>(r) * l));
        sl.push_back(rack_conj(gl.back(), sigma));
        al.push_back(rack_conj(gl.back(), alpha));
    }
    b.check("alpha_2 = alpha^(2^(k-1)+1)", al[2] == alpha.pow(half + 1), equation_detail(al[2], alpha.pow(half + 1)));
    b.check("alpha_3 = alpha_1^(2^(k-1)+1)", al[3] == al[1].pow(half + 1), equation_detail(al[3], al[1].pow(half + 1)));
    b.check("sigma_2 = sigma^(2^(k-1)+1)", sl[2] == sigma.pow(half + 1), equation_detail(sl[2], sigma.pow(half + 1)));
    b.check("sigma_3 = sigma_1^(2^(k-1)+1)", sl[3] == sl[1].pow(half + 1), equation_detail(sl[3], sl[1].pow(half + 1)));
    b.check("g is an involution", g.is_involution());
    b.check("g sigma g = sigma^-1", rack_conj(g, sigma) == sigma.inverse());

    std::vector<Permutation> hl, tl;
    bool tau_ok = true;
    for (int l = 0; l < 4; ++l) {
        hl.push_back(gl[static_cast<std::size_t>(l)] * g);
        tl.push_back(rack_conj(hl.back(), sigma));
        tau_ok = tau_ok && tl.back() == sl[static_cast<std::size_t>(l)].inverse();
    }
    b.check("h_l sigma h_l^-1 = sigma_l^-1", tau_ok);

    bool exps_ok = true;
    int tsum = 0;
    for (int t : rho.factor(big).t) {
        exps_ok = exps_ok && (4 * t) % big == 0;
        tsum += t;
    }
    b.check("exponents of the 2^k-cycles lie in {0, 2^(k-2), 2^(k-1), 3 2^(k-2)}", exps_ok);
    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());

    std::vector<FamilyMember> members;
    for (std::size_t l = 0; l < 4; ++l) members.push_back({sl[l], gl[l]});
    for (std::size_t l = 0; l < 4; ++l) members.push_back({tl[l], hl[l]});
    auto fam = make_family(b, sigma, members, FamilyKind::d4sq);
    if (!fam) return b.finish("");
    b.r.family = fam;

    // table of x g_b = g_{b'} γ
    try {
        const auto action = span_braiding(*fam, rho, c);
        const Permutation a2r = alpha.pow(2LL * r), a2ri = a2r.inverse();
        auto gamma_of = [&](std::string_view code) -> Permutation {
            if (code == "s") return sigma;
            if (code == "si") return sigma.inverse();
            if (code == "s2") return sl[2];
            if (code == "s2i") return sl[2].inverse();
            if (code == "s+") return sigma * a2r;
            if (code == "s-") return sigma * a2ri;
            if (code == "si+") return sigma.inverse() * a2r;
            return sigma.inverse() * a2ri;  // "si-"
        };
        int failures = 0;
        std::string first;
        auto run = [&](const Table& table, int row_off, int col_off) {
            for (int a = 0; a < 4; ++a)
                for (int bb = 0; bb < 4; ++bb) {
                    const auto& e = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(bb)];
                    const auto ra = static_cast<std::size_t>(row_off + a), cb = static_cast<std::size_t>(col_off + bb);
                    bool ok = action.target[ra][cb] == col_off + e.target && action.gamma[ra][cb] == gamma_of(e.gamma);
                    if (!ok && failures++ == 0) first = "row " + std::to_string(ra) + ", column " + std::to_string(cb);
                }
        };
        run(kSigmaG, 0, 0);
        run(kTauG, 4, 0);
        run(kSigmaH, 0, 4);
        run(kTauH, 4, 4);
        b.check("conjugation table of the eight conjugates", failures == 0,
                failures == 0 ? "64 entries" : std::to_string(failures) + " mismatches, first at " + first);
    } catch (const PreconditionError& e) {
        b.check("conjugation table of the eight conjugates", false, e.what());
    }

    transversal_pipeline(b, *fam, rho, c);
    if (b.r.matrix) {
        const Cyclotomic lam = Cyclotomic(root(4, tsum));
        const Cyclotomic mo(-1);
        const CycMatrix published = CycMatrix::from_rows(
            {{mo, mo, -lam, lam}, {mo, mo, -lam, lam}, {-lam, lam, mo, mo}, {-lam, lam, mo, mo}});
        b.compare("transversal matrix equals (Q Q; Q Q) with lambda = i^t", *b.r.matrix == block_matrix(published, 1),
                  "lambda = " + scalar_string(lam));
    }
    return b.finish(kCartanSupport);
}

// ---------------------------------------------------------------------------

WitnessReport octahedral_4cycles_witness(const CentralizerIrrep& rho, std::optional<int> which) {
    const CycleType& type = rho.type();
    if (type.count(4) != 2) throw PreconditionError("needs exactly two 4-cycles");
    for (int k : type.lengths())
        if (k != 1 && k != 2 && k != 4) throw PreconditionError("cycle length " + std::to_string(k) + " not allowed next to the two 4-cycles");
    if (rho.degree() != 1) throw PreconditionError("needs deg rho = 1");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;
    const auto& f4 = rho.factor(4);
    const int t4 = f4.t[0];
    const bool sign4 = f4.is_sign_mu();

    int kase = which.value_or(t4 % 2 == 0 ? 1 : 2);
    if (kase != 1 && kase != 2) throw PreconditionError("case must be 1 or 2");

    std::vector<int> jp = layout.cycle_points(4, 1);
    auto second = layout.cycle_points(4, 2);
    jp.insert(jp.end(), second.begin(), second.end());
    auto J = [&](std::initializer_list<std::initializer_list<int>> cycles) {
        std::vector<std::vector<int>> cs;
        for (auto cyc : cycles) {
            std::vector<int> pts;
            for (int i : cyc) pts.push_back(jp[static_cast<std::size_t>(i - 1)]);
            cs.push_back(pts);
        }
        return Permutation::from_cycles(m, cs);
    };

    Builder b("octahedral-4cycles", kase == 1 ? "octahedral family on two 4-cycles, rho(A_4) = 1" : "octahedral family on two 4-cycles, rho(A_4) = -1", rho);

    const Permutation a1 = layout.cycle(4, 1), a2 = layout.cycle(4, 2);
    const Permutation s1 = a1 * a2;
    std::vector<Permutation> s(6), t(6);
    Permutation g(m);
    s[0] = s1;
    if (kase == 1) {
        b.check("rho(A_4) = 1", central_scalar(rho, 4).is_one(), "rho(A_4) = " + central_scalar(rho, 4).to_string());
        s[5] = a1 * a2.inverse();
        t[0] = a1.inverse() * a2;
        t[5] = s1.inverse();
        const Permutation back = J({{1, 4, 3, 2}});
        const std::array<Permutation, 4> tail{J({{5, 6, 8, 7}}), J({{5, 7, 6, 8}}), J({{5, 7, 8, 6}}), J({{5, 8, 6, 7}})};
        for (std::size_t i = 0; i < 4; ++i) {
            s[i + 1] = a1 * tail[i];
            t[i + 1] = back * tail[i];
        }
        g = J({{1, 2}, {3, 4}});
    } else {
        b.check("rho(A_4) = -1", central_scalar(rho, 4).is_minus_one(), "rho(A_4) = " + central_scalar(rho, 4).to_string());
        b.check("mu_4 is trivial", !sign4);
        s[1] = J({{1, 2, 4, 3}, {5, 6, 8, 7}});
        s[2] = J({{1, 3, 2, 4}, {5, 7, 6, 8}});
        s[3] = s[1].inverse();
        s[4] = s[2].inverse();
        s[5] = s1.inverse();
        t[0] = J({{1, 6, 3, 8}, {2, 7, 4, 5}});
        t[1] = J({{1, 6, 4, 7}, {2, 8, 3, 5}});
        t[2] = J({{1, 7, 2, 8}, {3, 6, 4, 5}});
        t[3] = t[1].inverse();
        t[4] = t[2].inverse();
        t[5] = t[0].inverse();
        g = J({{2, 6}, {4, 8}});
    }

    const Permutation alpha = sigma * s1.inverse();
    std::vector<Permutation> sl, tl;
    for (std::size_t i = 0; i < 6; ++i) {
        sl.push_back(s[i] * alpha);
        tl.push_back(t[i] * alpha);
    }
    std::vector<Permutation> all = sl;
    all.insert(all.end(), tl.begin(), tl.end());

    b.check("sigma_1 = sigma", sl[0] == sigma);
    b.check("all twelve elements lie in the class of sigma", same_class(all, sigma));
    b.check("the twelve elements are distinct", distinct(all));
    b.check("the twelve elements are closed under conjugation", closed_under_conjugation(all));
    b.check("g is an involution", g.is_involution());
    b.check("g sigma_1 g^-1 = tau_1", rack_conj(g, sl[0]) == tl[0], equation_detail(rack_conj(g, sl[0]), tl[0]));

    const Permutation gs1 = g.inverse() * sl[0] * g;
    const Permutation gs6 = g.inverse() * sl[5] * g;
    if (kase == 1) {
        b.check("tau_1 = sigma A_{1,4}^-2", tl[0] == sigma * a1.pow(-2));
        b.check("sigma_6 = sigma A_{2,4}^-2", sl[5] == sigma * a2.pow(-2));
        b.check("g^-1 sigma_6 g = sigma s_1^-2", gs6 == sigma * s1.pow(-2), equation_detail(gs6, sigma * s1.pow(-2)));
    } else {
        const Permutation swap = layout.swap(4, 1);
        b.check("t_1 = A_{1,4} A_{2,4} B_{1,4}", t[0] == a1 * a2 * swap);
        b.check("tau_1 = sigma B_{1,4}", tl[0] == sigma * swap);
        b.check("sigma_6 = sigma A_4^-2", sl[5] == sigma * s1.pow(-2));
        b.check("g^-1 sigma_6 g = sigma A_4^-2 B_{1,4}", gs6 == sigma * s1.pow(-2) * swap, equation_detail(gs6, sigma * s1.pow(-2) * swap));
    }

    const RootOfUnity minus = RootOfUnity::minus_one();
    auto eval = [&](const std::string& label, const Permutation& x) {
        std::optional<RootOfUnity> v;
        if (c.contains(x)) v = evaluate_deg1(rho, x, c);
        b.evaluate(label, x, v, minus);
    };
    eval("tau_1", tl[0]);
    eval("g^-1 sigma_1 g", gs1);
    eval("sigma_6", sl[5]);
    eval("g^-1 sigma_6 g", gs6);

    b.r.family = SubrackFamily(sigma, members_by_conjugator(sigma, all), FamilyKind::dsq);
    return b.finish(kOctahedralSupport);
}

// ---------------------------------------------------------------------------

WitnessReport transversal_2244_witness(const CentralizerIrrep& rho) {
    const CycleType& type = rho.type();
    if (type != CycleType(std::map<int, int>{{2, 2}, {4, 2}})) throw PreconditionError("needs type (2^2, 4^2)");
    if (rho.degree() != 1) throw PreconditionError("needs deg rho = 1");
    const auto& f4 = rho.factor(4);
    if (!f4.is_sign_mu() || !(f4.t == std::vector<int>{1, 1} || f4.t == std::vector<int>{3, 3}))
        throw PreconditionError("needs rho_4 with exponents (1,1) or (3,3) and sign mu_4; other rho_4 go through the octahedral family");

    const auto c = build_centralizer(type);
    const int m = 12;
    const Permutation& sigma = c.sigma;
    auto P = [&](std::string_view text) { return Permutation::parse(m, text); };

    Builder b("transversal-2244", "conjugates of (1 2)(3 4)(5 6 7 8)(9 10 11 12) and their transversal subspace", rho);
    b.check("canonical sigma is (1 2)(3 4)(5 6 7 8)(9 10 11 12)", sigma == P("(1 2)(3 4)(5 6 7 8)(9 10 11 12)"), sigma.to_string());

    const Permutation s1 = P("(1 2)(3 4)(5 9 7 11)(6 12 8 10)");
    const Permutation t0 = P("(1 3)(2 4)(5 6 7 8)(9 10 11 12)");
    const Permutation t1 = P("(1 3)(2 4)(5 9 7 11)(6 12 8 10)");
    const std::vector<Permutation> sl{sigma, s1, sigma.inverse(), s1.inverse()};
    const std::vector<Permutation> tl{t0, t1, t0.inverse(), t1.inverse()};
    const std::vector<Permutation> gl{Permutation(m), P("(6 9)(8 11)(10 12)"), P("(6 8)(10 12)"), P("(6 11)(8 9)(10 12)")};
    const Permutation swap23 = P("(2 3)");

    std::vector<FamilyMember> members;
    bool conj_ok = true;
    for (std::size_t l = 0; l < 4; ++l) {
        conj_ok = conj_ok && rack_conj(gl[l], sigma) == sl[l];
        members.push_back({sl[l], gl[l]});
    }
    b.check("g_l sigma g_l^-1 = sigma_l", conj_ok);
    conj_ok = true;
    for (std::size_t l = 0; l < 4; ++l) {
        const Permutation h = swap23 * gl[l];
        conj_ok = conj_ok && rack_conj(h, sigma) == tl[l];
        members.push_back({tl[l], h});
    }
    b.check("h_l sigma h_l^-1 = tau_l", conj_ok);

    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());
    b.check("rho(A_2) = 1", central_scalar(rho, 2).is_one(), "rho(A_2) = " + central_scalar(rho, 2).to_string());

    auto fam = make_family(b, sigma, members, FamilyKind::d4sq);
    if (!fam) return b.finish("");
    b.r.family = fam;
    transversal_pipeline(b, *fam, rho, c);

    if (b.r.matrix) {
        const Cyclotomic mo(-1), one(1);
        const CycMatrix published = CycMatrix::from_rows({{mo, mo, mo, one}, {mo, mo, mo, one}, {one, mo, mo, mo}, {one, mo, mo, mo}});
        if (rho.factor(2).is_sign_mu())
            b.compare("transversal matrix equals (Q -Q; -Q Q)", *b.r.matrix == block_matrix(published, -1));
        else
            b.compare("transversal matrix equals (Q Q; Q Q)", *b.r.matrix == block_matrix(published, 1));
    }
    return b.finish(kCartanSupport);
}

// ---------------------------------------------------------------------------

WitnessReport octahedral_odd_witness(const CentralizerIrrep& rho) {
    const CycleType& type = rho.type();
    const int n4 = type.count(4);
    if (n4 != 1 && n4 != 2) throw PreconditionError("needs one or two 4-cycles");
    bool has_odd = false;
    for (int k : type.lengths()) {
        if (k % 2 == 0 && k != 2 && k != 4) throw PreconditionError("even cycle length " + std::to_string(k) + " not allowed");
        has_odd = has_odd || (k % 2 == 1 && k > 1);
    }
    if (!has_odd) throw PreconditionError("needs sigma_o != id");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;

    std::vector<int> jp = layout.cycle_points(4, 1);
    if (n4 == 2) {
        auto second = layout.cycle_points(4, 2);
        jp.insert(jp.end(), second.begin(), second.end());
    }
    // same 4-cycle pattern on every block of four j-points
    auto diag = [&](std::vector<int> pattern) {
        std::vector<std::vector<int>> cs;
        for (int h = 0; h < n4; ++h) {
            std::vector<int> pts;
            for (int i : pattern) pts.push_back(jp[static_cast<std::size_t>(4 * h + i - 1)]);
            cs.push_back(pts);
        }
        return Permutation::from_cycles(m, cs);
    };

    Builder b("octahedral-odd", "octahedral family A_2 s_l sigma_o^(+-1) on the 4-cycle points", rho);

    std::vector<Permutation> s(6);
    s[0] = diag({1, 2, 3, 4});
    s[1] = diag({1, 2, 4, 3});
    s[2] = diag({1, 3, 2, 4});
    s[3] = s[1].inverse();
    s[4] = s[2].inverse();
    s[5] = s[0].inverse();

    const Permutation a2 = type.count(2) ? layout.cycles_of_length(2) : Permutation(m);
    const Permutation so = layout.odd_part();
    Permutation g(m);
    for (int k : type.lengths())
        if (k % 2 == 1 && k > 1)
            for (int h = 1; h <= type.count(k); ++h) g = g * reversing_involution(m, layout.cycle_points(k, h));

    std::vector<Permutation> sl, tl;
    for (const auto& x : s) {
        sl.push_back(a2 * x * so);
        tl.push_back(a2 * x * so.inverse());
    }
    std::vector<Permutation> all = sl;
    all.insert(all.end(), tl.begin(), tl.end());

    b.check("sigma_1 = sigma", sl[0] == sigma);
    b.check("all twelve elements lie in the class of sigma", same_class(all, sigma));
    b.check("the twelve elements are distinct", distinct(all));
    b.check("the twelve elements are closed under conjugation", closed_under_conjugation(all));
    b.check("g is an involution", g.is_involution());
    b.check("g sigma_o g = sigma_o^-1", rack_conj(g, so) == so.inverse());
    b.check("g sigma g = tau_1", g * sigma * g == tl[0]);

    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());

    const RootOfUnity minus = RootOfUnity::minus_one();
    auto eval = [&](const std::string& label, const Permutation& x) {
        std::optional<RootOfUnity> v;
        if (c.contains(x)) v = scalar_action(rho, x, c);
        b.evaluate(label, x, v, minus);
    };
    const Permutation gs1 = g.inverse() * sl[0] * g;
    b.check("g^-1 sigma_1 g = tau_1", gs1 == tl[0]);
    eval("g^-1 sigma_1 g", gs1);
    eval("sigma_6", sl[5]);
    eval("g^-1 sigma_6 g", g.inverse() * sl[5] * g);

    b.r.family = SubrackFamily(sigma, members_by_conjugator(sigma, all), FamilyKind::dsq);
    return b.finish(kOctahedralSupport);
}

// ---------------------------------------------------------------------------

namespace {

// Compares x_a ▷ x_b with y_a ▷ y_b index by index.
bool same_rack_table(const std::vector<Permutation>& xs, const std::vector<Permutation>& ys) {
    auto index = [](const std::vector<Permutation>& v, const Permutation& p) -> int {
        auto it = std::find(v.begin(), v.end(), p);
        return it == v.end() ? -1 : static_cast<int>(it - v.begin());
    };
    for (const auto& a : xs)
        for (const auto& bb : xs) {
            auto ia = static_cast<std::size_t>(index(xs, a)), ib = static_cast<std::size_t>(index(xs, bb));
            int lhs = index(xs, rack_conj(a, bb));
            int rhs = index(ys, rack_conj(ys[ia], ys[ib]));
            if (lhs < 0 || lhs != rhs) return false;
        }
    return true;
}

}  // namespace

WitnessReport s3_transpositions_witness(const CentralizerIrrep& rho) {
    const CycleType& type = rho.type();
    if (type.count(2) == 0) throw PreconditionError("needs a transposition in sigma");
    if (rho.factor_degree(1) < 2) throw PreconditionError("needs deg rho_1 > 1");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;
    const auto tp = layout.cycle_points(2, 1);
    const int j1 = tp[0], j2 = tp[1], j3 = layout.fixed_points().front();
    auto tr = [&](int x, int y) { return Permutation::from_cycles(m, {{x, y}}); };

    Builder b("s3-transpositions", "sigma with the transposition (j1 j2) moved onto a fixed point j3", rho);

    const std::vector<Permutation> sl{sigma, tr(j1, j3) * tr(j1, j2) * sigma, tr(j2, j3) * tr(j1, j2) * sigma};
    const std::vector<Permutation> gl{Permutation(m), tr(j2, j3), tr(j1, j3)};
    bool conj_ok = true;
    std::vector<FamilyMember> members;
    for (std::size_t l = 0; l < 3; ++l) {
        conj_ok = conj_ok && rack_conj(gl[l], sigma) == sl[l];
        members.push_back({sl[l], gl[l]});
    }
    b.check("g_l sigma g_l^-1 = sigma_l", conj_ok);
    const std::vector<Permutation> s3{Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 3)"), Permutation::parse(3, "(2 3)")};
    b.check("rack of sigma_1..sigma_3 matches the transpositions of S_3", same_rack_table(sl, s3));
    b.check("deg rho_1 >= 2", rho.factor_degree(1) >= 2, "deg rho_1 = " + std::to_string(rho.factor_degree(1)));
    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());

    auto fam = make_family(b, sigma, members, FamilyKind::d3);
    if (fam) b.r.family = fam;
    auto a12 = scalar_action(rho, layout.cycle(2, 1), c);
    b.compare("A_{1,2} acts by -1", a12 && a12->is_minus_one(), a12 ? a12->to_string() : "not a scalar");
    b.r.notes.push_back("two independent vectors of rho_1 give two copies of the transposition rack of S_3 with the sign cocycle");
    return b.finish("two copies of the braided space of transpositions in S_3 with sign cocycle [AHS, Th. 4.8]");
}

WitnessReport s4_fourcycles_witness(const CentralizerIrrep& rho) {
    const CycleType& type = rho.type();
    if (type.count(4) == 0) throw PreconditionError("needs a 4-cycle in sigma");
    if (rho.factor_degree(1) < 2) throw PreconditionError("needs deg rho_1 > 1");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;
    const auto jp = layout.cycle_points(4, 1);
    const Permutation rest = sigma * layout.cycle(4, 1).inverse();

    Builder b("s4-fourcycles", "sigma with A_{1,4} replaced by each 4-cycle on its own points", rho);

    const std::vector<std::vector<int>> patterns{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 4, 3, 2}, {1, 3, 4, 2}, {1, 4, 2, 3}};
    std::vector<Permutation> sl, s4;
    for (const auto& pat : patterns) {
        std::vector<int> pts;
        for (int i : pat) pts.push_back(jp[static_cast<std::size_t>(i - 1)]);
        sl.push_back(Permutation::cycle(m, pts) * rest);
        s4.push_back(Permutation::cycle(4, pat));
    }
    b.check("sigma_1 = sigma", sl[0] == sigma);
    auto members = members_by_conjugator(sigma, sl);
    bool local = true;
    for (const auto& mbr : members)
        for (int x = 1; x <= m; ++x)
            if (mbr.conjugator.image(x) != x && std::find(jp.begin(), jp.end(), x) == jp.end()) local = false;
    b.check("conjugators move only the points of A_{1,4}", local);
    b.check("rack of sigma_1..sigma_6 matches the 4-cycles of S_4", same_rack_table(sl, s4));
    b.check("deg rho_1 >= 2", rho.factor_degree(1) >= 2, "deg rho_1 = " + std::to_string(rho.factor_degree(1)));
    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());

    auto fam = make_family(b, sigma, members, FamilyKind::dsq);
    if (fam) b.r.family = fam;
    const RootOfUnity a14 = weight_value(rho, layout.cycle(4, 1), c);
    b.compare("A_{1,4} acts by -1 on the weight vector", a14.is_minus_one(), a14.to_string());
    b.r.notes.push_back("two independent vectors of rho_1 give two copies of the rack of 4-cycles in S_4");
    return b.finish("two copies of a braided space over the 4-cycles of S_4 [AHS, Th. 4.7]");
}

// ---------------------------------------------------------------------------

WitnessReport d3_involutions_witness(const CentralizerIrrep& rho) {
    const CycleType& type = rho.type();
    const int n1 = type.count(1), n2 = type.count(2);
    for (int k : type.lengths())
        if (k > 2) throw PreconditionError("needs an involution");
    if (n1 == 0 || (n2 != 3 && n2 != 5)) throw PreconditionError("needs n_1 > 0 and n_2 in {3, 5}");

    const auto c = build_centralizer(type);
    const auto& layout = c.layout;
    const int m = type.degree();
    const Permutation& sigma = c.sigma;
    const int extra = layout.fixed_points().front();
    // points 1..2 n_2 of the model go onto the transpositions, the next one onto a fixed point
    auto map_point = [&](int p) { return p <= 2 * n2 ? n1 + p : extra; };
    auto M = [&](std::initializer_list<std::pair<int, int>> pairs) {
        std::vector<std::vector<int>> cs;
        for (auto [x, y] : pairs) cs.push_back({map_point(x), map_point(y)});
        return Permutation::from_cycles(m, cs);
    };

    const bool small = n2 == 3;
    Builder b("d3-involutions", small ? "six involutions of type D_3 on three transpositions" : "six involutions of type D_3 on five transpositions", rho);

    Permutation s1, t0, g;
    if (small) {
        s1 = M({{1, 2}, {3, 4}, {5, 7}});
        t0 = M({{1, 3}, {2, 4}, {5, 6}});
        g = M({{2, 3}});
    } else {
        s1 = M({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 11}});
        t0 = M({{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 10}});
        g = M({{2, 3}, {6, 7}});
    }
    const Permutation s2 = rack_conj(sigma, s1);
    const Permutation t1 = rack_conj(s2, t0);
    const Permutation t2 = rack_conj(s1, t0);
    const std::vector<Permutation> sl{sigma, s1, s2}, tl{t0, t1, t2};
    std::vector<Permutation> all = sl;
    all.insert(all.end(), tl.begin(), tl.end());

    b.check("all six elements lie in the class of sigma", same_class(all, sigma));
    b.check("the six elements are distinct", distinct(all));
    bool pattern = true;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            auto z = static_cast<std::size_t>(((2 * x - y) % 3 + 3) % 3);
            pattern = pattern && rack_conj(sl[static_cast<std::size_t>(x)], sl[static_cast<std::size_t>(y)]) == sl[z];
            pattern = pattern && rack_conj(sl[static_cast<std::size_t>(x)], tl[static_cast<std::size_t>(y)]) == tl[z];
        }
    b.check("sigma_a > sigma_b = sigma_(2a-b) and sigma_a > tau_b = tau_(2a-b)", pattern);
    b.check("g^-1 sigma g = tau_0", g.inverse() * sigma * g == t0);
    const Permutation expected_t0 = small ? layout.cycle(2, 3) * layout.swap(2, 1) : layout.cycle(2, 5) * layout.swap(2, 1) * layout.swap(2, 3);
    b.check(small ? "tau_0 = A_{3,2} B_{1,2}" : "tau_0 = A_{5,2} B_{1,2} B_{3,2}", t0 == expected_t0);
    const RootOfUnity q = q_sigma(rho);
    b.check("q_sigma_sigma = -1", q.is_minus_one(), "q_sigma_sigma = " + q.to_string());

    std::optional<RootOfUnity> v;
    if (c.contains(t0)) v = scalar_action(rho, t0, c);
    b.evaluate("tau_0", t0, v, RootOfUnity::minus_one());

    b.r.family = SubrackFamily(sigma, members_by_conjugator(sigma, all), FamilyKind::d3);
    return b.finish("subrack of type D_3 with rho(tau_0) = -1 [AF2, Th. 3.7]");
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& witness_names() {
    static const std::vector<std::string> names{"reversal-quadruple", "transversal-2power", "octahedral-4cycles", "transversal-2244",
                                                "octahedral-odd",     "s3-transpositions",  "s4-fourcycles",      "d3-involutions"};
    return names;
}

WitnessReport run_witness(const std::string& name, const CentralizerIrrep& rho, std::optional<int> option) {
    if (name == "reversal-quadruple") return reversal_quadruple_witness(rho);
    if (name == "transversal-2power") return transversal_power2_witness(rho);
    if (name == "octahedral-4cycles") return octahedral_4cycles_witness(rho, option);
    if (name == "transversal-2244") return transversal_2244_witness(rho);
    if (name == "octahedral-odd") return octahedral_odd_witness(rho);
    if (name == "s3-transpositions") return s3_transpositions_witness(rho);
    if (name == "s4-fourcycles") return s4_fourcycles_witness(rho);
    if (name == "d3-involutions") return d3_involutions_witness(rho);
    throw PreconditionError("unknown witness '" + name + "'");
}

}  // namespace nichols
