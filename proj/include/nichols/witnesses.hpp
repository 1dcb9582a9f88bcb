#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nichols/braiding.hpp"
#include "nichols/centralizer.hpp"

namespace nichols {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct EvaluationRecord {
    std::string label;
    Permutation element;
    std::optional<RootOfUnity> value;     ///< nullopt when ρ does not act by a scalar
    std::optional<RootOfUnity> expected;
};

/// Outcome of one explicit construction. `checks` gate the verdict;
/// `comparisons` hold reference data (published matrices, expected diagram
/// shapes) and are reported without gating.
struct WitnessReport {
    std::string witness;
    std::string description;
    CycleType type;
    CentralizerIrrep rho;
    std::optional<SubrackFamily> family;
    std::vector<IdentityCheck> checks;
    std::vector<IdentityCheck> comparisons;
    std::vector<EvaluationRecord> evaluations;
    std::optional<CycMatrix> matrix;
    std::optional<GDDiagram> diagram;
    std::optional<CartanData> cartan;
    std::optional<std::string> verdict_support;
    std::vector<std::string> notes;

    bool passed() const;
    const IdentityCheck* find_check(const std::string& name) const;
    const IdentityCheck* find_comparison(const std::string& name) const;
    nlohmann::json to_json() const;
};

/// Restriction of ρ to the factors whose cycle length satisfies `keep`,
/// together with the reduced cycle type.
CentralizerIrrep restrict_irrep(const CentralizerIrrep& rho, const std::function<bool(int)>& keep);

/// Four pairwise commuting conjugates σ, σA^{-2}, (σA^{-2})^{-1}, σ^{-1} of σ,
/// A = A_{l,j}, reached through reversing involutions; the diagram of their
/// braiding matrix is tested for a chordless cycle of length >= 4.
/// Requires 4·t_{l,j} ≢ 0 (mod j) and at least two cycles of length >= 3.
WitnessReport reversal_quadruple_witness(const CentralizerIrrep& rho, int j, int l);
WitnessReport reversal_quadruple_witness(const CentralizerIrrep& rho);

/// Conjugates of σ by powers of the even-position cycle P inside a 2^k-cycle
/// (k >= 3), their inverses, and the eight-vector transversal subspace.
/// The type may only contain cycles of length 1, 2, 4, ..., 2^k with n_{2^k} <= 2.
WitnessReport transversal_power2_witness(const CentralizerIrrep& rho);

/// Twelve-element octahedral family built on the points of two 4-cycles, for
/// types with n_4 = 2 and otherwise only fixed points and transpositions;
/// deg ρ = 1. `which` = 1 or 2 forces a case, otherwise it is chosen from ρ_4.
WitnessReport octahedral_4cycles_witness(const CentralizerIrrep& rho, std::optional<int> which = std::nullopt);

/// Eight-vector transversal subspace for type (2^2, 4^2) with ρ_4 having both
/// exponents 1 or both 3 and sign μ_4; deg ρ = 1.
WitnessReport transversal_2244_witness(const CentralizerIrrep& rho);

/// Octahedral family A_2 s_l σ_o^{±1} for n_4 in {1, 2} and σ_o ≠ id.
WitnessReport octahedral_odd_witness(const CentralizerIrrep& rho);

/// Three conjugates of σ moving one transposition across a fixed point; needs n_2 > 0 and deg ρ_1 > 1.
WitnessReport s3_transpositions_witness(const CentralizerIrrep& rho);

/// The six 4-cycles on the points of A_{1,4} with the rest of σ; needs n_4 > 0 and deg ρ_1 > 1.
WitnessReport s4_fourcycles_witness(const CentralizerIrrep& rho);

/// Six involutions of type D_3 for (1^{n_1}, 2^3) and (1^{n_1}, 2^5), n_1 > 0.
WitnessReport d3_involutions_witness(const CentralizerIrrep& rho);

/// Names accepted by run_witness.
const std::vector<std::string>& witness_names();

/// Dispatch by name; `option` selects the octahedral-4cycles case.
WitnessReport run_witness(const std::string& name, const CentralizerIrrep& rho, std::optional<int> option = std::nullopt);

}  // namespace nichols
