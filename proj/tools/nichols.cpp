#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nichols/classifier.hpp"
#include "nichols/error.hpp"

using namespace nichols;
using nlohmann::json;

namespace {

struct Range {
    int lo = 3;
    int hi = 10;
};

Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int m = std::stoi(s);
            return {m, m};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw PreconditionError("cannot read m range '" + s + "', expected N or A..B");
    }
}

int range_cap(bool all_m) {
    if (const char* env = std::getenv("NICHOLS_MAX_M")) return std::stoi(env);
    return all_m ? 12 : 10;
}

void print_verdict_row(const Verdict& v) {
    std::cout << "  " << std::left << std::setw(14) << v.type().to_string() << std::setw(48) << v.rho.to_string() << std::setw(12)
              << to_string(v.outcome);
    if (!v.rule.empty()) std::cout << "rule " << v.rule;
    if (v.theorem1_case) std::cout << "case (" << *v.theorem1_case << ")";
    if (v.witness) std::cout << "  [" << v.witness->witness << (v.witness->passed() ? " ok" : " FAILED") << "]";
    if (v.witness_error) std::cout << "  [witness error: " << *v.witness_error << "]";
    std::cout << "\n";
}

void print_table(const ClassifyResult& r, bool all_pairs) {
    std::cout << "# m = " << r.m;
    if (!r.disabled.empty()) {
        std::cout << "  disabled rules:";
        for (const auto& d : r.disabled) std::cout << " " << d;
    }
    std::cout << "\n";
    std::map<std::string, int> per_rule;
    for (const auto& v : r.verdicts)
        if (v.outcome == Outcome::infinite) ++per_rule[v.rule];
    std::cout << "pairs " << r.verdicts.size() << ", survivors " << r.survivors().size() << ", discrepancies " << r.discrepancies().size() << "\n";
    std::cout << "infinite by rule:";
    for (const auto& rule : rule_catalog())
        if (per_rule.count(rule.id)) std::cout << " " << rule.id << "=" << per_rule[rule.id];
    std::cout << "\n";
    if (all_pairs) {
        for (const auto& v : r.verdicts) print_verdict_row(v);
    } else {
        for (const auto* v : r.survivors()) print_verdict_row(*v);
        for (const auto* v : r.discrepancies()) print_verdict_row(*v);
    }
    std::cout << "\n";
}

void print_report(const WitnessReport& r) {
    std::cout << "witness " << r.witness << ": " << (r.passed() ? "passed" : "FAILED") << "\n  " << r.description << "\n";
    for (const auto& c : r.checks) std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    for (const auto& c : r.comparisons)
        std::cout << "  [" << (c.passed ? "match" : "differs") << "] " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    for (const auto& e : r.evaluations) {
        std::cout << "  rho(" << e.label << ") = " << (e.value ? e.value->to_string() : std::string("not scalar"));
        if (e.expected) std::cout << ", expected " << e.expected->to_string();
        std::cout << "\n";
    }
    if (r.matrix) {
        std::cout << "  braiding matrix:\n";
        for (int a = 0; a < r.matrix->dim(); ++a) {
            std::cout << "   ";
            for (int b = 0; b < r.matrix->dim(); ++b) std::cout << " " << std::setw(10) << scalar_string((*r.matrix)(a, b));
            std::cout << "\n";
        }
    }
    if (r.cartan) {
        std::cout << "  Cartan matrix:";
        for (const auto& row : r.cartan->a) {
            std::cout << " [";
            for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k];
            std::cout << "]";
        }
        std::cout << "\n";
    }
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    if (r.verdict_support) std::cout << "  supports: " << *r.verdict_support << "\n";
}

CentralizerIrrep read_pair(const std::string& type, const std::string& rho) { return CentralizerIrrep::parse(CycleType::parse(type), rho); }

struct SelfCheck {
    std::string name;
    std::function<bool()> run;
};

int run_selftest() {
    std::vector<SelfCheck> checks;
    checks.push_back({"class equation and sum of squared degrees, m <= 9", [] {
                          for (int m = 1; m <= 9; ++m) {
                              std::uint64_t total = 0, fact = 1;
                              for (int k = 2; k <= m; ++k) fact *= static_cast<std::uint64_t>(k);
                              for (const auto& t : all_cycle_types(m)) {
                                  total += conjugacy_class_size(t);
                                  std::uint64_t squares = 0;
                                  for_each_irrep(t, [&](const CentralizerIrrep& r) { squares += r.degree() * r.degree(); });
                                  if (squares != centralizer_order(t)) return false;
                              }
                              if (total != fact) return false;
                          }
                          return true;
                      }});
    checks.push_back({"classify m = 3..10 has no discrepancy", [] {
                          ClassifyOptions o;
                          o.jobs = 4;
                          for (int m = 3; m <= 10; ++m)
                              if (!classify(m, o).discrepancies().empty()) return false;
                          return true;
                      }});
    checks.push_back({"every witness of a firing rule passes, m <= 9", [] {
                          ClassifyOptions o;
                          o.jobs = 4;
                          o.run_witnesses = true;
                          for (int m = 3; m <= 9; ++m)
                              for (const auto& v : classify(m, o).verdicts)
                                  if (v.witness_error || (v.witness && !v.witness->passed())) return false;
                          return true;
                      }});
    const std::vector<std::tuple<std::string, std::string, std::string>> reproductions = {
        {"reversal-quadruple", "2,3^2", "j=2:t=1|j=3:t=1,2"},
        {"transversal-2power", "8", "j=8:t=4"},
        {"transversal-2power", "16", "j=16:t=8"},
        {"transversal-2244", "2^2,4^2", "j=2:t=0,0;mu=eps|j=4:t=1,1;mu=sgn"},
        {"octahedral-4cycles", "4^2", "j=4:t=1,1;mu=eps"},
        {"octahedral-odd", "3,4", "j=3:t=0|j=4:t=2"},
        {"s3-transpositions", "1^3,2", "j=1:t=0,0,0;mu=[2,1]|j=2:t=1"},
        {"s4-fourcycles", "1^3,4", "j=1:t=0,0,0;mu=[2,1]|j=4:t=2"},
        {"d3-involutions", "1,2^3", "j=2:t=1,1,1;mu=eps"},
    };
    for (const auto& [name, type, rho] : reproductions)
        checks.push_back({name + " on (" + type + ") " + rho, [name, type, rho] { return run_witness(name, read_pair(type, rho)).passed(); }});

    int failed = 0;
    for (const auto& c : checks) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "  error: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << "\n";
        failed += ok ? 0 : 1;
    }
    std::cout << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finiteness obstructions for Nichols algebras over conjugacy classes of symmetric groups"};
    app.require_subcommand(1);

    std::string m_text, format = "table";
    std::vector<std::string> disabled;
    int jobs = 1;
    bool all_m = false, all_pairs = false, witnesses = false;
    auto* cls = app.add_subcommand("classify", "Decide every (class, irrep) pair of S_m");
    cls->add_option("--m", m_text, "m or a range a..b (default 3..10)");
    cls->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    cls->add_option("--disable-rule", disabled, "rule id to switch off (repeatable)");
    cls->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cls->add_flag("--all-m", all_m, "allow m = 11, 12");
    cls->add_flag("--all-pairs", all_pairs, "table: list every pair, not only survivors and discrepancies");
    cls->add_flag("--witnesses", witnesses, "run the witness of every firing rule");

    std::string type, rho;
    auto* exp = app.add_subcommand("explain", "Rule trace and witness for one pair");
    exp->add_option("--type", type, "cycle type, e.g. 1^2,2^3")->required();
    exp->add_option("--rho", rho, "irrep, e.g. j=2:t=1,1,1;mu=eps")->required();
    exp->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    exp->add_option("--disable-rule", disabled);

    std::string name;
    std::optional<int> option;
    auto* wit = app.add_subcommand("witness", "Run one explicit construction");
    wit->add_option("--name", name, "witness name")->required()->check(CLI::IsMember(witness_names()));
    wit->add_option("--type", type)->required();
    wit->add_option("--rho", rho)->required();
    wit->add_option("--case", option, "octahedral-4cycles: 1 or 2");
    wit->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string family, out_dir = ".";
    auto* dia = app.add_subcommand("diagram", "Write the generalized Dynkin diagram of a witness as DOT");
    dia->add_option("--type", type)->required();
    dia->add_option("--rho", rho)->required();
    dia->add_option("--family", family, "witness name (default: witness of the deciding rule)");
    dia->add_option("--case", option);
    dia->add_option("--out-dir", out_dir);

    auto* self = app.add_subcommand("selftest", "Run the built-in consistency checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed()) {
            const Range range = m_text.empty() ? Range{} : parse_range(m_text);
            ClassifyOptions opts;
            opts.disabled = {disabled.begin(), disabled.end()};
            opts.jobs = jobs;
            opts.run_witnesses = witnesses;
            opts.max_m = range_cap(all_m);
            if (range.lo > range.hi) throw PreconditionError("empty m range");
            bool any_discrepancy = false;
            json runs = json::array();
            for (int m = range.lo; m <= range.hi; ++m) {
                auto res = classify(m, opts);
                any_discrepancy = any_discrepancy || !res.discrepancies().empty();
                if (format == "json") {
                    runs.push_back(res.to_json());
                } else {
                    print_table(res, all_pairs);
                }
            }
            if (format == "json") std::cout << (runs.size() == 1 ? runs[0] : json{{"runs", runs}}).dump(2) << "\n";
            return any_discrepancy ? 1 : 0;
        }
        if (exp->parsed()) {
            ClassifyOptions opts;
            opts.disabled = {disabled.begin(), disabled.end()};
            auto ex = explain(read_pair(type, rho), opts);
            if (format == "json") {
                std::cout << ex.to_json().dump(2) << "\n";
                return 0;
            }
            std::cout << "type " << ex.verdict.type().to_string() << ", irrep " << ex.verdict.rho.to_string() << "\n";
            for (const auto& t : ex.trace)
                std::cout << "  " << std::left << std::setw(6) << t.rule << (t.disabled ? "disabled" : t.fired ? "fires   " : "-       ") << "  " << t.statement
                          << "  " << t.citation << "\n";
            std::cout << "verdict: " << to_string(ex.verdict.outcome);
            if (!ex.verdict.rule.empty()) std::cout << " by rule " << ex.verdict.rule << " " << ex.verdict.citation;
            if (ex.verdict.theorem1_case) std::cout << ", case (" << *ex.verdict.theorem1_case << ") of the survivor list";
            std::cout << "\n";
            if (ex.verdict.witness) print_report(*ex.verdict.witness);
            if (ex.verdict.witness_error) std::cout << "witness error: " << *ex.verdict.witness_error << "\n";
            return 0;
        }
        if (wit->parsed()) {
            auto r = run_witness(name, read_pair(type, rho), option);
            if (format == "json") {
                std::cout << r.to_json().dump(2) << "\n";
            } else {
                print_report(r);
            }
            return r.passed() ? 0 : 1;
        }
        if (dia->parsed()) {
            const auto pair = read_pair(type, rho);
            std::optional<WitnessReport> r;
            if (!family.empty()) {
                r = run_witness(family, pair, option);
            } else {
                auto ex = explain(pair);
                if (ex.verdict.witness_error) throw PreconditionError(*ex.verdict.witness_error);
                r = ex.verdict.witness;
            }
            if (!r || !r->diagram) throw PreconditionError("no diagram: the deciding rule has no explicit construction here; pass --family");
            std::filesystem::create_directories(out_dir);
            std::string stem = r->witness + "_" + pair.type().to_string();
            for (char& c : stem)
                if (c == ',' || c == '^') c = '_';
            const auto path = std::filesystem::path(out_dir) / (stem + ".dot");
            std::ofstream out(path);
            if (!out) throw Error("cannot write " + path.string());
            out << r->diagram->to_dot(r->witness);
            std::cout << path.string() << "\n";
            if (auto cyc = has_long_cycle(*r->diagram)) {
                std::cout << "chordless cycle:";
                for (int v : *cyc) std::cout << " " << v + 1;
                std::cout << "\n";
            }
            return 0;
        }
        if (self->parsed()) return run_selftest();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
