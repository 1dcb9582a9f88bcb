#include "nichols/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "nichols/error.hpp"

namespace nichols {

namespace {

using json = nlohmann::json;

bool only_lengths(const CycleType& t, std::initializer_list<int> allowed) {
    for (int j : t.lengths())
        if (std::find(allowed.begin(), allowed.end(), j) == allowed.end()) return false;
    return true;
}

bool has_long_cycle_length(const CycleType& t) {
    auto ls = t.lengths();
    return !ls.empty() && ls.back() >= 3;
}

bool has_odd_part(const CycleType& t) {
    for (int j : t.lengths())
        if (j % 2 == 1 && j > 1) return true;
    return false;
}

bool all_exponents(const IrrepFactor& f, int value) {
    return std::all_of(f.t.begin(), f.t.end(), [&](int t) { return t == value; });
}

bool linear_mu(const IrrepFactor& f) { return f.is_trivial_mu() || f.is_sign_mu(); }

// ρ_4 = χ_{(i,i)} ⊗ sgn or χ_{(-i,-i)} ⊗ sgn
bool special_rho4(const CentralizerIrrep& rho) {
    if (rho.type().count(4) != 2) return false;
    const auto& f = rho.factor(4);
    return f.is_sign_mu() && (f.t == std::vector<int>{1, 1} || f.t == std::vector<int>{3, 3});
}

bool rho1_linear(const CentralizerIrrep& rho) { return rho.factor_degree(1) == 1; }

bool exponents_are(const CentralizerIrrep& rho, int j, std::vector<int> t) { return rho.type().count(j) > 0 && rho.factor(j).t == t; }

bool power_of_two(int j) { return (j & (j - 1)) == 0; }

std::optional<WitnessReport> power2_hook(const CentralizerIrrep& rho) {
    const auto& t = rho.type();
    int top = 0;
    for (int j : t.lengths()) {
        if (j % 2 == 1) continue;
        if (j >= 6 && !power_of_two(j)) return std::nullopt;  // odd divisor: external argument
        top = j;
    }
    if (t.count(top) >= 3) return std::nullopt;  // three or more cycles of the top length: external argument
    auto reduced = restrict_irrep(rho, [](int j) { return j == 1 || (j % 2 == 0); });
    return transversal_power2_witness(reduced);
}

std::optional<WitnessReport> square_hook(const CentralizerIrrep& rho) {
    auto reduced = restrict_irrep(rho, [](int j) { return j == 2 || j == 4; });
    if (special_rho4(reduced)) return transversal_2244_witness(reduced);
    return octahedral_4cycles_witness(reduced);
}

std::vector<Rule> build_catalog() {
    std::vector<Rule> r;
    r.push_back({"a", "q_sigma_sigma != -1 or sigma has odd order", "[AZ, Lemma 2.2]",
                 [](const CentralizerIrrep& rho) { return !q_sigma(rho).is_minus_one() || rho.type().element_order() % 2 == 1; }, nullptr});
    r.push_back({"a'", "some exponent has 4 t_{l,j} != 0 (mod j)", "reversal-quadruple witness, [H]",
                 [](const CentralizerIrrep& rho) { return lemma31_trigger(rho).has_value(); },
                 [](const CentralizerIrrep& rho) -> std::optional<WitnessReport> { return reversal_quadruple_witness(rho); }});
    r.push_back({"b", "a cycle of even length >= 6",
                 "[AF2, Ex. 2.10] for lengths with an odd divisor; transversal-2power witness or [AF2, Ex. 3.10] for powers of 2",
                 [](const CentralizerIrrep& rho) {
                     for (int j : rho.type().lengths())
                         if (j >= 6 && j % 2 == 0) return true;
                     return false;
                 },
                 power2_hook});
    r.push_back({"b'", "deg rho_1 > 1 with n_2 > 0 or n_4 > 0",
                 "s3-transpositions witness, [AHS, Th. 4.8]; s4-fourcycles witness, [AHS, Th. 4.7]",
                 [](const CentralizerIrrep& rho) {
                     const auto& t = rho.type();
                     return rho.factor_degree(1) > 1 && (t.count(2) > 0 || t.count(4) > 0);
                 },
                 [](const CentralizerIrrep& rho) -> std::optional<WitnessReport> {
                     if (rho.type().count(2) > 0) return s3_transpositions_witness(rho);
                     return s4_fourcycles_witness(rho);
                 }});
    r.push_back({"c", "n_4 >= 3 or n_2 >= 6", "[AF2, Ex. 3.10]; [AF2, Ex. 3.13]",
                 [](const CentralizerIrrep& rho) { return rho.type().count(4) >= 3 || rho.type().count(2) >= 6; }, nullptr});
    r.push_back({"d", "deg rho_2 > 1 or deg rho_4 > 1", "[AF1, Th. 4]; [AZ, Prop. 2.6]",
                 [](const CentralizerIrrep& rho) { return rho.factor_degree(2) > 1 || rho.factor_degree(4) > 1; }, nullptr});
    r.push_back({"e", "a cycle of length >= 3 and n_2 >= 3", "[AF2, Ex. 3.12]",
                 [](const CentralizerIrrep& rho) { return has_long_cycle_length(rho.type()) && rho.type().count(2) >= 3; }, nullptr});
    r.push_back({"e'", "a cycle of length >= 3, n_2 > 0 and n_1 > 0", "[AF2, Ex. 3.9]",
                 [](const CentralizerIrrep& rho) {
                     const auto& t = rho.type();
                     return has_long_cycle_length(t) && t.count(2) > 0 && t.count(1) > 0;
                 },
                 nullptr});
    r.push_back({"e''", "type (2^2, 4^2, sigma_o)", "transversal-2244 or octahedral-4cycles witness; [AZ, Prop. 2.6]",
                 [](const CentralizerIrrep& rho) {
                     const auto& t = rho.type();
                     for (int j : t.lengths())
                         if (j % 2 == 0 && j != 2 && j != 4) return false;
                     return t.count(2) == 2 && t.count(4) == 2;
                 },
                 square_hook});
    r.push_back({"f", "n_4 > 0 and sigma_o != id", "octahedral-odd witness, [AF2, Th. 4.11]",
                 [](const CentralizerIrrep& rho) { return rho.type().count(4) > 0 && has_odd_part(rho.type()); },
                 [](const CentralizerIrrep& rho) -> std::optional<WitnessReport> { return octahedral_odd_witness(rho); }});
    r.push_back({"f'", "type (1^n_1, 2^n_2, 4^2) with rho_4 other than chi_(i,i) or chi_(-i,-i) with sign", "octahedral-4cycles witness, [AF2, Th. 4.11]",
                 [](const CentralizerIrrep& rho) {
                     const auto& t = rho.type();
                     return only_lengths(t, {1, 2, 4}) && t.count(4) == 2 && !special_rho4(rho);
                 },
                 [](const CentralizerIrrep& rho) -> std::optional<WitnessReport> { return octahedral_4cycles_witness(rho); }});
    r.push_back({"g", "type (1^n_1, 2^2)", "[AZ, Th. 2.7]",
                 [](const CentralizerIrrep& rho) { return only_lengths(rho.type(), {1, 2}) && rho.type().count(2) == 2; }, nullptr});
    r.push_back({"g'", "type (1^n_1, 2^4)", "[AF1, Th. 1 (B) (i)]; [AZ, Prop. 2.6]",
                 [](const CentralizerIrrep& rho) { return only_lengths(rho.type(), {1, 2}) && rho.type().count(2) == 4; }, nullptr});
    r.push_back({"g''", "type (1^n_1, 2^n_2) with rho_2 not all exponents 1 and linear mu", "[AF1, Th. 1 (B) (ii)]",
                 [](const CentralizerIrrep& rho) {
                     const auto& t = rho.type();
                     if (!only_lengths(t, {1, 2}) || t.count(2) == 0) return false;
                     const auto& f = rho.factor(2);
                     return !(all_exponents(f, 1) && linear_mu(f));
                 },
                 nullptr});
    r.push_back({"g'''", "type (1^n_1, 2^3), n_1 > 0, rho_2 all exponents 1 with trivial mu; or (1^n_1, 2^5), n_1 > 0, rho_2 all exponents 1",
                 "d3-involutions witness, [AF2, Th. 3.7]",
                 [](const CentralizerIrrep& rho) {
                     const auto& t = rho.type();
                     if (!only_lengths(t, {1, 2}) || t.count(1) == 0) return false;
                     const int n2 = t.count(2);
                     if (n2 != 3 && n2 != 5) return false;
                     const auto& f = rho.factor(2);
                     if (!all_exponents(f, 1)) return false;
                     return n2 == 3 ? f.is_trivial_mu() : linear_mu(f);
                 },
                 [](const CentralizerIrrep& rho) -> std::optional<WitnessReport> { return d3_involutions_witness(rho); }});
    return r;
}

std::vector<const Rule*> ordered_rules(const ClassifyOptions& opts) {
    const auto& cat = rule_catalog();
    std::vector<const Rule*> out;
    if (opts.order.empty()) {
        for (const auto& r : cat) out.push_back(&r);
    } else {
        for (const auto& id : opts.order) out.push_back(&find_rule(id));
        if (out.size() != cat.size()) throw PreconditionError("rule order must list every rule exactly once");
    }
    for (const auto& id : opts.disabled) find_rule(id);  // validates the id
    return out;
}

void run_hook(const Rule& rule, Verdict& v) {
    if (!rule.witness) return;
    try {
        v.witness = rule.witness(v.rho);
    } catch (const Error& e) {
        v.witness_error = e.what();
    }
}

Verdict decide_with(const CentralizerIrrep& rho, const std::vector<const Rule*>& rules, const ClassifyOptions& opts) {
    Verdict v;
    v.rho = rho;
    for (const Rule* rule : rules) {
        if (opts.disabled.contains(rule->id)) continue;
        if (!rule->predicate(rho)) continue;
        v.outcome = Outcome::infinite;
        v.rule = rule->id;
        v.citation = rule->citation;
        if (opts.run_witnesses) run_hook(*rule, v);
        return v;
    }
    v.theorem1_case = theorem1_case(rho);
    v.outcome = v.theorem1_case ? Outcome::survivor : Outcome::discrepancy;
    return v;
}

}  // namespace

const std::vector<Rule>& rule_catalog() {
    static const std::vector<Rule> catalog = build_catalog();
    return catalog;
}

const Rule& find_rule(const std::string& id) {
    for (const auto& r : rule_catalog())
        if (r.id == id) return r;
    throw PreconditionError("unknown rule '" + id + "'");
}

std::optional<std::string> theorem1_case(const CentralizerIrrep& rho) {
    if (!q_sigma(rho).is_minus_one()) return std::nullopt;
    const auto& t = rho.type();
    const int n1 = t.count(1), n2 = t.count(2), n4 = t.count(4);

    if (only_lengths(t, {1, 2}) && n2 == 1 && rho1_linear(rho) && exponents_are(rho, 2, {1})) return "i";

    if (n1 == 0 && n2 == 1 && exponents_are(rho, 2, {1}) && has_odd_part(t)) {
        bool ok = true;
        for (int j : t.lengths()) {
            if (j == 2) continue;
            if (j % 2 == 0 || !all_exponents(rho.factor(j), 0)) ok = false;
        }
        if (ok) return "ii";
    }

    if (only_lengths(t, {1, 2}) && n2 == 3 && rho1_linear(rho)) {
        const auto& f = rho.factor(2);
        if (all_exponents(f, 1) && (f.is_sign_mu() || (n1 == 0 && f.is_trivial_mu()))) return "iii";
    }

    if (t == CycleType(std::map<int, int>{{2, 5}})) {
        const auto& f = rho.factor(2);
        if (all_exponents(f, 1) && linear_mu(f)) return "iv";
    }

    if (only_lengths(t, {1, 4}) && n4 == 1 && rho1_linear(rho) && exponents_are(rho, 4, {2})) return "v";

    if (only_lengths(t, {1, 4}) && n4 == 2 && rho1_linear(rho) && special_rho4(rho)) return "vi";

    if (t == CycleType(std::map<int, int>{{2, 1}, {4, 1}})) {
        if ((exponents_are(rho, 2, {1}) && exponents_are(rho, 4, {0})) || (exponents_are(rho, 2, {0}) && exponents_are(rho, 4, {2})))
            return "vii";
    }

    if (t == CycleType(std::map<int, int>{{2, 1}, {4, 2}}) && exponents_are(rho, 2, {0}) && special_rho4(rho)) return "viii";

    if (t == CycleType(std::map<int, int>{{2, 2}, {4, 1}}) && rho.factor_degree(2) == 1 && exponents_are(rho, 4, {2})) return "ix";

    return std::nullopt;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::infinite: return "infinite";
        case Outcome::survivor: return "survivor";
        case Outcome::discrepancy: return "discrepancy";
    }
    return "?";
}

json Verdict::to_json(bool full_witness) const {
    json j;
    j["type"] = type().to_string();
    j["irrep"] = rho.to_string();
    j["outcome"] = to_string(outcome);
    j["rule"] = rule.empty() ? json(nullptr) : json(rule);
    j["citation"] = citation.empty() ? json(nullptr) : json(citation);
    if (theorem1_case) j["theorem1_case"] = *theorem1_case;
    if (witness) {
        if (full_witness) {
            j["witness"] = witness->to_json();
        } else {
            j["witness"] = {{"name", witness->witness}, {"passed", witness->passed()}};
        }
    }
    if (witness_error) j["witness_error"] = *witness_error;
    return j;
}

std::vector<const Verdict*> ClassifyResult::survivors() const {
    std::vector<const Verdict*> out;
    for (const auto& v : verdicts)
        if (v.outcome == Outcome::survivor) out.push_back(&v);
    return out;
}

std::vector<const Verdict*> ClassifyResult::discrepancies() const {
    std::vector<const Verdict*> out;
    for (const auto& v : verdicts)
        if (v.outcome == Outcome::discrepancy) out.push_back(&v);
    return out;
}

json ClassifyResult::to_json() const {
    json j;
    j["m"] = m;
    j["disabled_rules"] = disabled;
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(v.to_json());
    j["verdicts"] = vs;
    j["survivor_count"] = survivors().size();
    j["discrepancy_count"] = discrepancies().size();
    return j;
}

Verdict decide(const CentralizerIrrep& rho, const ClassifyOptions& opts) { return decide_with(rho, ordered_rules(opts), opts); }

ClassifyResult classify(int m, const ClassifyOptions& opts) {
    if (m < 3 || m > opts.max_m)
        throw PreconditionError("m = " + std::to_string(m) + " outside the supported range 3.." + std::to_string(opts.max_m));
    const auto rules = ordered_rules(opts);
    const auto types = all_cycle_types(m);

    std::vector<std::vector<Verdict>> per_type(types.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < types.size(); i = next++)
            for_each_irrep(types[i], [&](const CentralizerIrrep& rho) { per_type[i].push_back(decide_with(rho, rules, opts)); });
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ClassifyResult res;
    res.m = m;
    res.disabled.assign(opts.disabled.begin(), opts.disabled.end());
    for (auto& vs : per_type)
        for (auto& v : vs) res.verdicts.push_back(std::move(v));
    return res;
}

json Explanation::to_json() const {
    json j = verdict.to_json(true);
    json tr = json::array();
    for (const auto& e : trace)
        tr.push_back({{"rule", e.rule}, {"statement", e.statement}, {"citation", e.citation}, {"disabled", e.disabled}, {"fired", e.fired}});
    j["trace"] = tr;
    return j;
}

Explanation explain(const CentralizerIrrep& rho, const ClassifyOptions& opts) {
    Explanation ex;
    const auto rules = ordered_rules(opts);
    for (const Rule* rule : rules)
        ex.trace.push_back({rule->id, rule->statement, rule->citation, opts.disabled.contains(rule->id), rule->predicate(rho)});
    ClassifyOptions with_witness = opts;
    with_witness.run_witnesses = true;
    ex.verdict = decide_with(rho, rules, with_witness);
    return ex;
}

}  // namespace nichols
