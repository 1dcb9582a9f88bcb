#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nichols/centralizer.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/permgroup.hpp"

namespace nichols {

enum class FamilyKind { abelian, d3, d4sq, dsq, transversal };

std::string to_string(FamilyKind kind);

struct FamilyMember {
    Permutation element;     ///< σ_l
    Permutation conjugator;  ///< g_l with g_l σ g_l^{-1} = σ_l
};

/// Elements of the class of `base` together with chosen conjugators.
class SubrackFamily {
public:
    /// Checks g_l σ g_l^{-1} = σ_l, distinctness, and pairwise commutation for
    /// abelian families; throws PreconditionError otherwise.
    SubrackFamily(Permutation base, std::vector<FamilyMember> members, FamilyKind kind);

    const Permutation& base() const { return base_; }
    const std::vector<FamilyMember>& members() const { return members_; }
    FamilyKind kind() const { return kind_; }
    int size() const { return static_cast<int>(members_.size()); }

    const Permutation& element(int l) const { return members_[static_cast<std::size_t>(l)].element; }
    const Permutation& conjugator(int l) const { return members_[static_cast<std::size_t>(l)].conjugator; }

    std::optional<int> index_of(const Permutation& x) const;

    /// x ▷ y stays inside the family for all members x, y.
    bool is_closed() const;

private:
    Permutation base_;
    std::vector<FamilyMember> members_;
    FamilyKind kind_;
};

/// Scalar by which γ ∈ S_m^σ acts on the vector v used for the braided
/// subspace: ρ(γ) when deg ρ = 1, otherwise the eigenvalue on a weight vector
/// of χ_t (t in layout order), which requires γ in the abelian base.
RootOfUnity act_on_weight_vector(const CentralizerIrrep& rho, const Permutation& gamma, const CentralizerPresentation& c);

/// q_{lk} = ρ(g_k^{-1} σ_l g_k) for a family of pairwise commuting elements.
CycMatrix braiding_matrix(const SubrackFamily& fam, const CentralizerIrrep& rho, const CentralizerPresentation& c);
CycMatrix braiding_matrix(const SubrackFamily& fam, const CentralizerIrrep& rho);

/// c(g_a v ⊗ g_b v) = σ_a g_b v ⊗ g_a v = ρ(γ) g_{b'} v ⊗ g_a v, where
/// σ_a g_b = g_{b'} γ and σ_{b'} = σ_a ▷ σ_b.
struct SpanAction {
    std::vector<std::vector<int>> target;         ///< target[a][b] = b'
    std::vector<std::vector<RootOfUnity>> scalar; ///< scalar[a][b] = ρ(γ)
    std::vector<std::vector<Permutation>> gamma;  ///< γ itself

    int size() const { return static_cast<int>(target.size()); }

    /// M_a with M_a e_b = scalar[a][b] e_{b'}.
    CycMatrix operator_of(int a) const;
};

/// Throws PreconditionError when σ_a ▷ σ_b leaves the family.
SpanAction span_braiding(const SubrackFamily& fam, const CentralizerIrrep& rho, const CentralizerPresentation& c);

/// Braiding on the basis given by the columns of `combos`: u_A ⊗ u_B ↦ q_{AB} u_B ⊗ u_A.
/// Throws PreconditionError naming the offending entry when some M_a is not
/// diagonal in the new basis, or when two components of u_A disagree.
CycMatrix diagonalize_transversal(const SpanAction& action, const CycMatrix& combos);

/// Columns g_0 + g_2, g_0 - g_2, g_1 + g_3, g_1 - g_3 and the same on h_0..h_3,
/// for the basis ordered g_0..g_3, h_0..h_3.
CycMatrix transversal_combinations();

struct DiagramEdge {
    int a = 0;
    int b = 0;
    Cyclotomic label;  ///< q_{ab} q_{ba}
};

/// Generalized Dynkin diagram; vertices are 0-based.
struct GDDiagram {
    std::vector<Cyclotomic> vertex_labels;
    std::vector<DiagramEdge> edges;

    int size() const { return static_cast<int>(vertex_labels.size()); }
    bool adjacent(int a, int b) const;
    std::vector<std::vector<bool>> adjacency() const;

    std::string to_dot(const std::string& name = "diagram") const;
    nlohmann::json to_json() const;
};

GDDiagram dynkin_diagram(const CycMatrix& q);

/// Chordless cycle of length >= 4 (vertex order along the cycle), shortest
/// first and lexicographically first among those.
std::optional<std::vector<int>> has_long_cycle(const std::vector<std::vector<bool>>& adjacency);
std::optional<std::vector<int>> has_long_cycle(const GDDiagram& g);

struct CartanData {
    std::vector<std::vector<int>> a;
    int rank() const { return static_cast<int>(a.size()); }
    friend bool operator==(const CartanData&, const CartanData&) = default;
};

/// a_{lk} in {0, -1, ..., -(ord q_{ll} - 1)} with q_{lk}q_{kl} = q_{ll}^{a_{lk}};
/// nullopt when some entry is not a root of unity, some q_{ll} = 1, or no
/// exponent works.
std::optional<CartanData> cartan_data(const CycMatrix& q);

/// Positive definiteness of the symmetrization (exact pivots). Throws
/// PreconditionError when `c` is not a generalized Cartan matrix.
bool is_finite_type(const CartanData& c);

/// Diagonal entries all -1 and every q_{lk}q_{kl} in {1, -1}.
bool is_negative_braiding(const CycMatrix& q);

struct ProbeReport {
    int families_checked = 0;
    bool negative = true;
    std::optional<SubrackFamily> counterexample;
    std::optional<CycMatrix> counterexample_matrix;
};

/// Samples up to `budget` abelian families {σ, σ_2, ...} of pairwise commuting
/// elements of the class of σ and checks each braiding matrix. Requires deg ρ = 1.
ProbeReport negative_braiding_probe(const CycleType& type, const CentralizerIrrep& rho, int budget, std::uint64_t seed = 0x5eed);

/// String used in DOT and JSON output: w(n)^k for roots of unity.
std::string scalar_string(const Cyclotomic& z);

nlohmann::json matrix_to_json(const CycMatrix& m);

}  // namespace nichols
