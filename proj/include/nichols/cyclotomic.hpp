#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// ω_n^k = e^{2πik/n}, stored with gcd(k, n) divided out so that equality is structural.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(long long order, long long exponent);

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {2, 1}; }

    long long order() const { return order_; }
    long long exponent() const { return exponent_; }

    bool is_one() const { return order_ == 1; }
    bool is_minus_one() const { return order_ == 2; }

    RootOfUnity inverse() const { return {order_, -exponent_}; }
    RootOfUnity pow(long long e) const;

    /// "w(n)^k"
    std::string to_string() const;
    static RootOfUnity parse(std::string_view text);

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }
    RootOfUnity& operator*=(const RootOfUnity& b) { return *this = *this * b; }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

private:
    long long order_ = 1;
    long long exponent_ = 0;
};

/// Normalized ω_n^k; throws PreconditionError for n < 1.
RootOfUnity root(long long n, long long k);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Exact element of ℚ(ζ_N), kept fully reduced modulo Φ_N over the power
/// basis 1, ζ_N, ..., ζ_N^{φ(N)-1}. Operands of different conductors are
/// lifted to the lcm of the two.
class Cyclotomic {
public:
    Cyclotomic() : coeffs_(1) {}
    Cyclotomic(long long v) : coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(Rational v) : coeffs_{std::move(v)} {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(const RootOfUnity& z);                   // NOLINT(google-explicit-constructor)

    /// ζ_N^k inside ℚ(ζ_N).
    static Cyclotomic zeta(int conductor, long long k = 1);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Same value, expressed in ℚ(ζ_N) for a multiple N of the conductor.
    Cyclotomic lift(int conductor) const;

    bool is_zero() const;
    bool is_one() const { return *this == Cyclotomic(1); }
    bool is_minus_one() const { return *this == Cyclotomic(-1); }

    Cyclotomic inverse() const;
    Cyclotomic pow(long long e) const;

    /// The value as ±ζ_N^k when it is a root of unity.
    std::optional<RootOfUnity> as_root_of_unity() const;

    std::string to_string() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    int conductor_ = 1;
    std::vector<Rational> coeffs_;
};

inline bool is_one(const Cyclotomic& z) { return z.is_one(); }
inline bool is_minus_one(const Cyclotomic& z) { return z.is_minus_one(); }

/// Square matrix over cyclotomic numbers.
class CycMatrix {
public:
    CycMatrix() = default;
    explicit CycMatrix(int dim);
    static CycMatrix identity(int dim);
    static CycMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

    int dim() const { return dim_; }
    Cyclotomic& operator()(int r, int c) { return entries_[index(r, c)]; }
    const Cyclotomic& operator()(int r, int c) const { return entries_[index(r, c)]; }

    bool is_diagonal() const;
    Cyclotomic determinant() const;

    /// Throws PreconditionError when singular.
    CycMatrix inverse() const;

    std::string to_string() const;

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c); }

    int dim_ = 0;
    std::vector<Cyclotomic> entries_;
};

/// combos^{-1} · op · combos; the columns of `combos` are the new basis vectors.
CycMatrix change_of_basis(const CycMatrix& op, const CycMatrix& combos);

}  // namespace nichols
