#include "nichols/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

namespace {

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

RootOfUnity::RootOfUnity(long long order, long long exponent) {
    if (order < 1) throw PreconditionError("root of unity order must be positive");
    long long k = mod(exponent, order);
    long long g = std::gcd(k, order);
    if (k == 0) {
        order_ = 1;
        exponent_ = 0;
        return;
    }
    order_ = order / g;
    exponent_ = k / g;
}

RootOfUnity root(long long n, long long k) { return {n, k}; }

RootOfUnity RootOfUnity::pow(long long e) const {
    // exponent * e may overflow for huge e; reduce e first
    return {order_, mod(exponent_ * mod(e, order_), order_)};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    long long n = std::lcm(a.order_, b.order_);
    return {n, a.exponent_ * (n / a.order_) + b.exponent_ * (n / b.order_)};
}

std::string RootOfUnity::to_string() const { return "w(" + std::to_string(order_) + ")^" + std::to_string(exponent_); }

RootOfUnity RootOfUnity::parse(std::string_view text) {
    // w(n)^k
    std::size_t i = 0;
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto number = [&] {
        bool neg = false;
        if (i < text.size() && text[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a number", i);
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    };
    expect('w');
    expect('(');
    long long n = number();
    expect(')');
    expect('^');
    long long k = number();
    if (i != text.size()) throw ParseError("trailing characters", i);
    if (n < 1) throw ParseError("order must be positive", 2);
    return {n, k};
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::mutex guard;
    static std::map<int, std::vector<long long>> cache;
    if (n < 1) throw PreconditionError("cyclotomic polynomial index must be positive");
    {
        std::lock_guard lock(guard);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& den = cyclotomic_polynomial(d);
        std::size_t dd = den.size() - 1;
        std::vector<long long> q(num.size() - dd, 0);
        for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
            long long c = num[i];
            if (c == 0) {
                if (i == dd) break;
                continue;
            }
            q[i - dd] = c;
            for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
            if (i == dd) break;
        }
        num = std::move(q);
    }
    std::lock_guard lock(guard);
    return cache.emplace(n, std::move(num)).first->second;
}

namespace {

void reduce(std::vector<Rational>& a, int conductor) {
    const auto& phi = cyclotomic_polynomial(conductor);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        if (a[i] == 0) continue;
        Rational c = a[i];
        for (std::size_t t = 0; t < deg; ++t) a[i - deg + t] -= c * phi[t];
        a[i] = 0;
    }
    a.resize(deg);
}

std::vector<Rational> monomial(int conductor, long long k) {
    auto e = static_cast<std::size_t>(mod(k, conductor));
    std::vector<Rational> a(e + 1);
    a[e] = 1;
    reduce(a, conductor);
    return a;
}

}  // namespace

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    reduce(coeffs_, conductor_);
}

Cyclotomic::Cyclotomic(const RootOfUnity& z)
    : conductor_(static_cast<int>(z.order())), coeffs_(monomial(static_cast<int>(z.order()), z.exponent())) {}

Cyclotomic Cyclotomic::zeta(int conductor, long long k) {
    if (conductor < 1) throw PreconditionError("conductor must be positive");
    return {conductor, monomial(conductor, k)};
}

Cyclotomic Cyclotomic::lift(int conductor) const {
    if (conductor < 1 || conductor % conductor_ != 0)
        throw PreconditionError("cannot lift from conductor " + std::to_string(conductor_) + " to " + std::to_string(conductor));
    if (conductor == conductor_) return *this;
    auto step = static_cast<std::size_t>(conductor / conductor_);
    std::vector<Rational> a(coeffs_.size() * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i * step] = coeffs_[i];
    return {conductor, std::move(a)};
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int n = std::lcm(a.conductor_, b.conductor_);
    auto x = a.lift(n);
    auto y = b.lift(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    int n = std::lcm(a.conductor_, b.conductor_);
    auto x = a.lift(n);
    auto y = b.lift(n);
    std::vector<Rational> p(x.coeffs_.size() + y.coeffs_.size());
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) p[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return {n, std::move(p)};
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    int n = std::lcm(a.conductor_, b.conductor_);
    return a.lift(n).coeffs_ == b.lift(n).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero cyclotomic");
    const std::size_t d = coeffs_.size();
    // columns of M are this * ζ^i; solve M x = e_0
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (std::size_t i = 0; i < d; ++i) {
        auto col = (*this * zeta(conductor_, static_cast<long long>(i))).lift(conductor_).coeffs_;
        for (std::size_t r = 0; r < d; ++r) m[r][i] = col[r];
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && m[piv][c] == 0) ++piv;
        if (piv == d) throw PreconditionError("singular multiplication matrix");
        std::swap(m[piv], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(d);
    for (std::size_t r = 0; r < d; ++r) x[r] = m[r][d];
    return {conductor_, std::move(x)};
}

Cyclotomic Cyclotomic::pow(long long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Cyclotomic r(1);
    while (k) {
        if (k & 1U) r = r * base;
        base = base * base;
        k >>= 1U;
    }
    return r;
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    const int n = conductor_;
    auto neg = -*this;
    for (long long k = 0; k < n; ++k) {
        auto z = zeta(n, k);
        if (z == *this) return root(n, k);
        if (z == neg) return root(n, k) * RootOfUnity::minus_one();
    }
    return std::nullopt;
}

std::string Cyclotomic::to_string() const {
    if (auto r = as_root_of_unity()) return r->to_string();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i];
        } else {
            if (coeffs_[i] != 1) os << coeffs_[i] << '*';
            os << "z(" << conductor_ << ")^" << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------------------

CycMatrix::CycMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

CycMatrix CycMatrix::identity(int dim) {
    CycMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Cyclotomic(1);
    return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    CycMatrix m(static_cast<int>(rows.size()));
    for (int r = 0; r < m.dim_; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.dim_) throw PreconditionError("matrix is not square");
        for (int c = 0; c < m.dim_; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

bool CycMatrix::is_diagonal() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
}

Cyclotomic CycMatrix::determinant() const {
    CycMatrix a = *this;
    Cyclotomic det(1);
    for (int c = 0; c < dim_; ++c) {
        int piv = c;
        while (piv < dim_ && a(piv, c).is_zero()) ++piv;
        if (piv == dim_) return Cyclotomic(0);
        if (piv != c) {
            for (int k = 0; k < dim_; ++k) std::swap(a(piv, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        Cyclotomic inv = a(c, c).inverse();
        for (int r = c + 1; r < dim_; ++r) {
            if (a(r, c).is_zero()) continue;
            Cyclotomic f = a(r, c) * inv;
            for (int k = c; k < dim_; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

CycMatrix CycMatrix::inverse() const {
    CycMatrix a = *this;
    CycMatrix inv = identity(dim_);
    for (int c = 0; c < dim_; ++c) {
        int piv = c;
        while (piv < dim_ && a(piv, c).is_zero()) ++piv;
        if (piv == dim_) throw PreconditionError("matrix is singular");
        if (piv != c) {
            for (int k = 0; k < dim_; ++k) {
                std::swap(a(piv, k), a(c, k));
                std::swap(inv(piv, k), inv(c, k));
            }
        }
        Cyclotomic p = a(c, c).inverse();
        for (int k = 0; k < dim_; ++k) {
            a(c, k) *= p;
            inv(c, k) *= p;
        }
        for (int r = 0; r < dim_; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            Cyclotomic f = a(r, c);
            for (int k = 0; k < dim_; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < dim_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < dim_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim_ != b.dim_) throw PreconditionError("matrix dimension mismatch");
    CycMatrix m(a.dim_);
    for (int r = 0; r < a.dim_; ++r)
        for (int k = 0; k < a.dim_; ++k) {
            if (a(r, k).is_zero()) continue;
            for (int c = 0; c < a.dim_; ++c)
                if (!b(k, c).is_zero()) m(r, c) += a(r, k) * b(k, c);
        }
    return m;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (!(a.entries_[i] == b.entries_[i])) return false;
    return true;
}

CycMatrix change_of_basis(const CycMatrix& op, const CycMatrix& combos) {
    if (op.dim() != combos.dim()) throw PreconditionError("change of basis: dimension mismatch");
    return combos.inverse() * op * combos;
}

}  // namespace nichols
