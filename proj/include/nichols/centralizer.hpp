#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nichols/cyclotomic.hpp"
#include "nichols/permgroup.hpp"

namespace nichols {

/// Integer partition with non-increasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n, largest first part first.
std::vector<Partition> partitions(int n);

/// Degree of the irreducible S_n-representation indexed by the partition (hook length formula).
std::uint64_t partition_dimension(const Partition& p);

std::string partition_to_string(const Partition& p);

/// Generators of S_m^σ = T_1 × ... × T_m on the canonical layout, where
/// T_j = <A_{1,j}, ..., A_{n_j,j}> ⋊ <B_{1,j}, ..., B_{n_j-1,j}>.
struct CentralizerPresentation {
    CycleType type;
    CanonicalLayout layout;
    Permutation sigma;
    std::map<int, std::vector<Permutation>> rotations;  ///< A_{l,j} keyed by j
    std::map<int, std::vector<Permutation>> swaps;      ///< B_{h,j} keyed by j

    std::uint64_t order() const { return centralizer_order(type); }
    bool contains(const Permutation& g) const { return commute(g, sigma); }
    std::vector<Permutation> generators() const;
};

CentralizerPresentation build_centralizer(const CycleType& type);

/// Coordinates of a centralizer element in one wreath factor (ℤ/j)^{n_j} ⋊ S_{n_j}.
struct WreathComponent {
    int length = 0;
    /// block_perm[l] = l' when the element maps the support of A_{l+1,j} onto A_{l'+1,j}.
    std::vector<int> block_perm;
    /// rotations[l'] = r with the element equal to (∏ A_{l'+1,j}^{r}) · w_π.
    std::vector<int> rotations;

    friend bool operator==(const WreathComponent&, const WreathComponent&) = default;
};

struct WreathFactorization {
    std::vector<WreathComponent> components;  ///< one per present cycle length, ascending

    const WreathComponent& component(int j) const;
    friend bool operator==(const WreathFactorization&, const WreathFactorization&) = default;
};

/// Throws MembershipError when g does not commute with σ.
WreathFactorization factorize(const Permutation& g, const CentralizerPresentation& c);

Permutation reassemble(const WreathFactorization& f, const CentralizerPresentation& c);

/// Visits every element of S_m^σ through its wreath coordinates.
void for_each_element(const CentralizerPresentation& c, const std::function<void(const Permutation&)>& visit);

/// w_π: moves A_{l,j} onto A_{π(l),j} preserving positions inside the cycles.
Permutation block_permutation(const CanonicalLayout& layout, int j, const std::vector<int>& perm);

/// Irreducible representation ρ_j of one wreath factor: an S_{n_j}-orbit of
/// characters χ_{(t_1,...,t_{n_j})} of (ℤ/j)^{n_j} (stored as the sorted
/// multiset of exponents) together with one partition per distinct exponent,
/// indexing an irreducible representation of the stabilizer ∏ S_{c_v}.
struct IrrepFactor {
    int length = 0;
    int count = 0;
    std::vector<int> t;          ///< ascending, each in [0, length)
    std::vector<Partition> mu;   ///< one per distinct value of t, ascending values

    /// Distinct exponents with their multiplicities.
    std::vector<std::pair<int, int>> multiplicities() const;

    /// [S_n : stabilizer] · deg μ
    std::uint64_t degree() const;

    /// Degree one with μ the trivial character (every part a single row).
    bool is_trivial_mu() const;
    /// Degree one with μ the sign character.
    bool is_sign_mu() const;

    friend bool operator==(const IrrepFactor&, const IrrepFactor&) = default;
    friend auto operator<=>(const IrrepFactor&, const IrrepFactor&) = default;
};

/// ρ = ρ_1 ⊗ ... ⊗ ρ_m for S_m^σ, one factor per present cycle length.
class CentralizerIrrep {
public:
    CentralizerIrrep() = default;
    CentralizerIrrep(CycleType type, std::vector<IrrepFactor> factors);

    const CycleType& type() const { return type_; }
    const std::vector<IrrepFactor>& factors() const { return factors_; }
    bool has_factor(int j) const { return type_.count(j) > 0; }

    /// Throws PreconditionError when n_j = 0.
    const IrrepFactor& factor(int j) const;

    std::uint64_t degree() const;

    /// Degree of ρ_j, or 1 when n_j = 0.
    std::uint64_t factor_degree(int j) const;

    /// "j=1:t=0,0;mu=eps|j=2:t=1;mu=eps"
    std::string to_string() const;

    /// Parses the clause grammar above; clauses may be omitted (all exponents
    /// zero and trivial μ) and exponents may be listed in any order.
    static CentralizerIrrep parse(const CycleType& type, std::string_view text);

    /// Degree-one irrep with exponent t_j and μ_j = sgn when sign[j] is set.
    static CentralizerIrrep linear(const CycleType& type, const std::map<int, int>& t, const std::map<int, bool>& sign = {});

    friend bool operator==(const CentralizerIrrep&, const CentralizerIrrep&) = default;
    friend auto operator<=>(const CentralizerIrrep& a, const CentralizerIrrep& b) { return a.factors_ <=> b.factors_; }

private:
    CycleType type_;
    std::vector<IrrepFactor> factors_;
};

/// All irreps of one wreath factor (ℤ/j)^n ⋊ S_n, sorted.
std::vector<IrrepFactor> factor_irreps(int length, int count);

/// Calls `visit` for every irrep of S_m^σ, in ascending order.
void for_each_irrep(const CycleType& type, const std::function<void(const CentralizerIrrep&)>& visit);

std::vector<CentralizerIrrep> enumerate_irreps(const CentralizerPresentation& c);

/// q_{A_j} = ω_j^{Σ_l t_{l,j}}; throws PreconditionError when n_j = 0.
RootOfUnity central_scalar(const CentralizerIrrep& rho, int j);

/// ∏ q_{A_j} over even j.
RootOfUnity q_even(const CentralizerIrrep& rho);

/// ∏ q_{A_j} over odd j > 1.
RootOfUnity q_odd(const CentralizerIrrep& rho);

/// q_{σσ} = q_e q_o, the scalar by which σ acts.
RootOfUnity q_sigma(const CentralizerIrrep& rho);

/// ρ(g) for a degree-one ρ and g in the centralizer.
RootOfUnity evaluate_deg1(const CentralizerIrrep& rho, const Permutation& g, const CentralizerPresentation& c);
RootOfUnity evaluate_deg1(const CentralizerIrrep& rho, const Permutation& g);

/// ρ(g) when g is known to act by a scalar on every factor: degree-one
/// factors are evaluated exactly, higher-degree factors only on powers of
/// the central element A_j. Returns nullopt otherwise.
std::optional<RootOfUnity> scalar_action(const CentralizerIrrep& rho, const Permutation& g, const CentralizerPresentation& c);

/// Eigenvalue of g (in the abelian base ∏ (ℤ/j)^{n_j}) on a vector of weight
/// χ_t, t in layout order. Throws PreconditionError when g permutes blocks.
RootOfUnity weight_value(const CentralizerIrrep& rho, const Permutation& g, const CentralizerPresentation& c);

/// Some (j, l), l 1-based in layout order, with 4·t_{l,j} ≢ 0 (mod j).
std::optional<std::pair<int, int>> lemma31_trigger(const CentralizerIrrep& rho);

}  // namespace nichols
