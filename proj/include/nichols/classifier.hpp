#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "nichols/centralizer.hpp"
#include "nichols/witnesses.hpp"

namespace nichols {

/// One obstruction. `witness`, when set, runs the explicit construction
/// certifying the rule for a pair it fires on; it returns nullopt for the
/// sub-cases that rest on an external reference only.
struct Rule {
    std::string id;
    std::string statement;
    std::string citation;
    std::function<bool(const CentralizerIrrep&)> predicate;
    std::function<std::optional<WitnessReport>(const CentralizerIrrep&)> witness;
};

/// (a), (a'), (b), (b'), (c), (d), (e), (e'), (e''), (f), (f'), (g), (g'), (g''), (g''').
const std::vector<Rule>& rule_catalog();

const Rule& find_rule(const std::string& id);

/// Case label "i".."ix" of the list of surviving patterns, or nullopt.
std::optional<std::string> theorem1_case(const CentralizerIrrep& rho);

enum class Outcome { infinite, survivor, discrepancy };

std::string to_string(Outcome o);

struct Verdict {
    CentralizerIrrep rho;
    Outcome outcome = Outcome::discrepancy;
    std::string rule;      ///< id of the firing rule, empty otherwise
    std::string citation;
    std::optional<std::string> theorem1_case;
    std::optional<WitnessReport> witness;
    std::optional<std::string> witness_error;

    const CycleType& type() const { return rho.type(); }
    nlohmann::json to_json(bool full_witness = false) const;
};

struct ClassifyOptions {
    std::set<std::string> disabled;
    /// Rule ids in evaluation order; empty means catalog order.
    std::vector<std::string> order;
    int jobs = 1;
    bool run_witnesses = false;
    int max_m = 12;
};

struct ClassifyResult {
    int m = 0;
    std::vector<std::string> disabled;
    std::vector<Verdict> verdicts;  ///< ascending (type, irrep)

    std::vector<const Verdict*> survivors() const;
    std::vector<const Verdict*> discrepancies() const;
    nlohmann::json to_json() const;
};

/// Verdict for one pair under the given options.
Verdict decide(const CentralizerIrrep& rho, const ClassifyOptions& opts = {});

/// Every (cycle type, irrep) pair of S_m. Throws PreconditionError unless 3 <= m <= opts.max_m.
ClassifyResult classify(int m, const ClassifyOptions& opts = {});

struct TraceEntry {
    std::string rule;
    std::string statement;
    std::string citation;
    bool disabled = false;
    bool fired = false;
};

struct Explanation {
    Verdict verdict;
    std::vector<TraceEntry> trace;
    nlohmann::json to_json() const;
};

/// Evaluates every rule on the pair and runs the witness of the deciding rule.
Explanation explain(const CentralizerIrrep& rho, const ClassifyOptions& opts = {});

}  // namespace nichols
