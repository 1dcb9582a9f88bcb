#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nichols {

/// Element of the symmetric group S_m.
///
/// Points are 1-based in every public signature that takes or returns a
/// point and 0-based in `images()`. Multiplication is composition of maps:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;

    /// Identity of S_degree.
    explicit Permutation(int degree);

    /// From 0-based images; throws PreconditionError unless a bijection.
    static Permutation from_images(std::vector<int> images);

    /// From disjoint cycles written with 1-based points.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    /// Single cycle (i_1 i_2 ... i_j), 1-based.
    static Permutation cycle(int degree, std::span<const int> points);

    /// Parses cycle notation such as "(1 2)(3 4 5)"; "()" is the identity.
    static Permutation parse(int degree, std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    /// Image of a 1-based point.
    int image(int point) const { return images_[static_cast<std::size_t>(point - 1)] + 1; }

    Permutation inverse() const;
    Permutation pow(long long exponent) const;
    bool is_identity() const;
    bool is_involution() const { return (*this * *this).is_identity(); }

    /// Non-trivial cycles, each starting at its minimum point, sorted by that minimum.
    std::vector<std::vector<int>> cycles() const;

    long long order() const;
    int sign() const;

    /// Cycle notation, "()" for the identity.
    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> images, bool) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// x ▷ y = x y x^{-1}.
Permutation rack_conj(const Permutation& x, const Permutation& y);

bool commute(const Permutation& a, const Permutation& b);

/// Some g with g a g^{-1} = b, matching cycles of equal length in order;
/// throws PreconditionError when the cycle types differ.
Permutation conjugator(const Permutation& a, const Permutation& b);

/// Involution g with g τ g = τ^{-1}, fixing the first listed point:
/// (i_2 i_j)(i_3 i_{j-1})... for the cycle (i_1 ... i_j).
Permutation reversing_involution(int degree, std::span<const int> cycle_points);

/// Same, for a permutation that is a single cycle written from its minimum point.
Permutation reversing_involution(const Permutation& tau);

/// Multiset (1^{n_1}, 2^{n_2}, ..., m^{n_m}) of cycle lengths.
class CycleType {
public:
    CycleType() = default;

    /// From multiplicities keyed by cycle length; the degree is Σ j·n_j.
    explicit CycleType(const std::map<int, int>& counts);

    /// As above but checks Σ j·n_j = degree.
    static CycleType with_degree(int degree, const std::map<int, int>& counts);

    /// Parses "1^2,2^3,4" (ascending lengths, exponent 1 optional).
    static CycleType parse(std::string_view text);

    int degree() const { return degree_; }

    /// n_j; zero when j is out of range.
    int count(int j) const;

    /// Lengths j with n_j > 0, ascending.
    std::vector<int> lengths() const;

    std::map<int, int> counts() const;

    /// Multiplicities of even lengths.
    std::map<int, int> even_part() const;

    /// Multiplicities of odd lengths greater than one.
    std::map<int, int> odd_part() const;

    /// lcm of the lengths, i.e. the order of any element of this type.
    long long element_order() const;

    /// Cycle lengths in non-increasing order (a partition of the degree).
    std::vector<int> parts() const;

    std::string to_string() const;

    friend bool operator==(const CycleType& a, const CycleType& b) { return a.counts_ == b.counts_; }
    friend std::strong_ordering operator<=>(const CycleType& a, const CycleType& b);

private:
    std::vector<int> counts_;  // counts_[j - 1] = n_j
    int degree_ = 0;
};

CycleType cycle_type(const Permutation& p);

/// Every cycle type of S_m, in ascending lexicographic order of their parts (written non-increasing).
std::vector<CycleType> all_cycle_types(int degree);

/// m! / ∏ j^{n_j} n_j!
std::uint64_t conjugacy_class_size(const CycleType& type);

/// ∏ j^{n_j} n_j!
std::uint64_t centralizer_order(const CycleType& type);

std::uint64_t factorial(int n);

/// Position of a point inside the canonical layout.
struct CyclePosition {
    int length = 0;  ///< j
    int index = 0;   ///< l, 1-based
    int offset = 0;  ///< position inside the cycle, 0-based
};

/// Canonical placement of the cycles of a given type: the cycles of length j
/// come after all shorter ones, consecutively, so that A_{l,j} is
/// (r+(l-1)j+1 ... r+lj) with r = Σ_{k<j} k·n_k, and B_{h,j} swaps
/// A_{h,j} with A_{h+1,j} point by point.
class CanonicalLayout {
public:
    CanonicalLayout() = default;
    explicit CanonicalLayout(CycleType type);

    const CycleType& type() const { return type_; }
    int degree() const { return type_.degree(); }

    /// r for cycles of length j.
    int offset(int j) const;

    /// 1-based point at 0-based position i of A_{l,j}.
    int point(int j, int l, int i) const;

    std::vector<int> cycle_points(int j, int l) const;

    /// A_{l,j}; for j = 1 the identity.
    Permutation cycle(int j, int l) const;

    /// B_{h,j}, 1 <= h < n_j.
    Permutation swap(int j, int h) const;

    /// A_j = A_{1,j} ... A_{n_j,j}.
    Permutation cycles_of_length(int j) const;

    Permutation sigma() const;

    /// σ_e and σ_o.
    Permutation even_part() const;
    Permutation odd_part() const;

    std::vector<int> fixed_points() const;

    CyclePosition locate(int point) const;

private:
    void check(int j, int l) const;

    CycleType type_;
    std::vector<int> offsets_;  // offsets_[j - 1] = r
};

std::pair<Permutation, CanonicalLayout> canonical_sigma(const CycleType& type);

}  // namespace nichols
