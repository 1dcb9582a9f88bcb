#include "nichols/centralizer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

bool single_row(const Partition& p) { return p.size() <= 1; }
bool single_column(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int x) { return x == 1; });
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw PreconditionError("partitions of a negative integer");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::uint64_t partition_dimension(const Partition& p) {
    int n = std::accumulate(p.begin(), p.end(), 0);
    // n! / ∏ hooks; n! overflows 64 bits before the quotient does
    BigInt num = 1, den = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    std::vector<int> conj;
    if (!p.empty()) {
        conj.assign(static_cast<std::size_t>(p.front()), 0);
        for (int row : p)
            for (int c = 0; c < row; ++c) ++conj[static_cast<std::size_t>(c)];
    }
    for (std::size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) den *= (p[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    return static_cast<std::uint64_t>(num / den);
}

std::string partition_to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

std::vector<Permutation> CentralizerPresentation::generators() const {
    std::vector<Permutation> gens;
    for (const auto& [j, as] : rotations)
        for (const auto& a : as)
            if (!a.is_identity()) gens.push_back(a);
    for (const auto& [j, bs] : swaps) gens.insert(gens.end(), bs.begin(), bs.end());
    return gens;
}

CentralizerPresentation build_centralizer(const CycleType& type) {
    CentralizerPresentation c;
    c.type = type;
    c.layout = CanonicalLayout(type);
    c.sigma = c.layout.sigma();
    for (int j : type.lengths()) {
        auto& as = c.rotations[j];
        auto& bs = c.swaps[j];
        for (int l = 1; l <= type.count(j); ++l) as.push_back(c.layout.cycle(j, l));
        for (int h = 1; h < type.count(j); ++h) bs.push_back(c.layout.swap(j, h));
    }
    return c;
}

const WreathComponent& WreathFactorization::component(int j) const {
    for (const auto& comp : components)
        if (comp.length == j) return comp;
    throw PreconditionError("no cycles of length " + std::to_string(j));
}

WreathFactorization factorize(const Permutation& g, const CentralizerPresentation& c) {
    const auto& layout = c.layout;
    if (g.degree() != layout.degree()) throw PreconditionError("degree mismatch");
    for (int x = 1; x <= g.degree(); ++x)
        if (g.image(c.sigma.image(x)) != c.sigma.image(g.image(x)))
            throw MembershipError(g.to_string() + " does not commute with " + c.sigma.to_string() + " at point " + std::to_string(x), x);

    WreathFactorization f;
    for (int j : c.type.lengths()) {
        int n = c.type.count(j);
        WreathComponent comp;
        comp.length = j;
        comp.block_perm.assign(static_cast<std::size_t>(n), 0);
        comp.rotations.assign(static_cast<std::size_t>(n), 0);
        for (int l = 1; l <= n; ++l) {
            auto pos = layout.locate(g.image(layout.point(j, l, 0)));
            // commuting with σ forces cycles of σ onto cycles of the same length
            comp.block_perm[static_cast<std::size_t>(l - 1)] = pos.index - 1;
            comp.rotations[static_cast<std::size_t>(pos.index - 1)] = j == 1 ? 0 : pos.offset;
        }
        f.components.push_back(std::move(comp));
    }
    return f;
}

Permutation block_permutation(const CanonicalLayout& layout, int j, const std::vector<int>& perm) {
    auto img = Permutation(layout.degree()).images();
    for (std::size_t l = 0; l < perm.size(); ++l)
        for (int i = 0; i < j; ++i)
            img[static_cast<std::size_t>(layout.point(j, static_cast<int>(l) + 1, i) - 1)] = layout.point(j, perm[l] + 1, i) - 1;
    return Permutation::from_images(std::move(img));
}

Permutation reassemble(const WreathFactorization& f, const CentralizerPresentation& c) {
    Permutation g(c.layout.degree());
    for (const auto& comp : f.components) {
        Permutation part = block_permutation(c.layout, comp.length, comp.block_perm);
        for (std::size_t l = 0; l < comp.rotations.size(); ++l)
            if (comp.rotations[l] != 0) part = c.layout.cycle(comp.length, static_cast<int>(l) + 1).pow(comp.rotations[l]) * part;
        g = g * part;
    }
    return g;
}

void for_each_element(const CentralizerPresentation& c, const std::function<void(const Permutation&)>& visit) {
    // per length: all (block permutation, rotation vector) pairs as factor elements
    std::vector<std::vector<Permutation>> factors;
    for (int j : c.type.lengths()) {
        int n = c.type.count(j);
        std::vector<Permutation> elems;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Permutation w = block_permutation(c.layout, j, perm);
            std::vector<int> rot(static_cast<std::size_t>(n), 0);
            while (true) {
                Permutation g = w;
                for (int l = 0; l < n; ++l)
                    if (rot[static_cast<std::size_t>(l)]) g = c.layout.cycle(j, l + 1).pow(rot[static_cast<std::size_t>(l)]) * g;
                elems.push_back(std::move(g));
                int l = n - 1;
                while (l >= 0 && rot[static_cast<std::size_t>(l)] == j - 1) rot[static_cast<std::size_t>(l--)] = 0;
                if (l < 0 || j == 1) break;
                ++rot[static_cast<std::size_t>(l)];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        factors.push_back(std::move(elems));
    }
    std::vector<std::size_t> idx(factors.size(), 0);
    while (true) {
        Permutation g(c.layout.degree());
        for (std::size_t k = 0; k < factors.size(); ++k) g = g * factors[k][idx[k]];
        visit(g);
        std::size_t k = factors.size();
        while (k > 0 && ++idx[k - 1] == factors[k - 1].size()) idx[--k] = 0;
        if (k == 0) break;
    }
}

std::vector<std::pair<int, int>> IrrepFactor::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int v : t) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

std::uint64_t IrrepFactor::degree() const {
    std::uint64_t d = factorial(count);
    for (const auto& [v, c] : multiplicities()) d /= factorial(c);
    for (const auto& p : mu) d *= partition_dimension(p);
    return d;
}

bool IrrepFactor::is_trivial_mu() const {
    return mu.size() <= 1 && std::all_of(mu.begin(), mu.end(), single_row);
}

bool IrrepFactor::is_sign_mu() const {
    return mu.size() <= 1 && std::all_of(mu.begin(), mu.end(), single_column);
}

CentralizerIrrep::CentralizerIrrep(CycleType type, std::vector<IrrepFactor> factors)
    : type_(std::move(type)), factors_(std::move(factors)) {
    auto lengths = type_.lengths();
    if (factors_.size() != lengths.size()) throw PreconditionError("one factor per cycle length is required");
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        auto& f = factors_[i];
        int j = lengths[i];
        if (f.length != j || f.count != type_.count(j)) throw PreconditionError("factor does not match cycle type");
        if (static_cast<int>(f.t.size()) != f.count) throw PreconditionError("wrong number of exponents for j=" + std::to_string(j));
        for (int v : f.t)
            if (v < 0 || v >= j) throw PreconditionError("exponent out of range for j=" + std::to_string(j));
        std::sort(f.t.begin(), f.t.end());
        auto mult = f.multiplicities();
        if (f.mu.size() != mult.size()) throw PreconditionError("one partition per distinct exponent is required");
        for (std::size_t k = 0; k < mult.size(); ++k)
            if (std::accumulate(f.mu[k].begin(), f.mu[k].end(), 0) != mult[k].second)
                throw PreconditionError("partition size does not match exponent multiplicity for j=" + std::to_string(j));
    }
}

const IrrepFactor& CentralizerIrrep::factor(int j) const {
    for (const auto& f : factors_)
        if (f.length == j) return f;
    throw PreconditionError("no cycles of length " + std::to_string(j) + " in " + type_.to_string());
}

std::uint64_t CentralizerIrrep::degree() const {
    std::uint64_t d = 1;
    for (const auto& f : factors_) d *= f.degree();
    return d;
}

std::uint64_t CentralizerIrrep::factor_degree(int j) const {
    return has_factor(j) ? factor(j).degree() : 1;
}

namespace {

std::string mu_to_string(const IrrepFactor& f) {
    if (std::all_of(f.mu.begin(), f.mu.end(), single_row)) return "eps";
    if (std::all_of(f.mu.begin(), f.mu.end(), single_column)) return "sgn";
    std::string s;
    for (std::size_t i = 0; i < f.mu.size(); ++i) {
        if (i) s += '/';
        s += partition_to_string(f.mu[i]);
    }
    return s;
}

class IrrepParser {
public:
    explicit IrrepParser(std::string_view text) : s_(text) {}

    bool done() {
        skip();
        return pos_ >= s_.size();
    }
    std::size_t pos() const { return pos_; }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("integer too large");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("irrep: " + msg, pos_); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string CentralizerIrrep::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        if (i) s += '|';
        s += "j=" + std::to_string(f.length) + ":t=";
        for (std::size_t k = 0; k < f.t.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(f.t[k]);
        }
        s += ";mu=" + mu_to_string(f);
    }
    return s;
}

CentralizerIrrep CentralizerIrrep::parse(const CycleType& type, std::string_view text) {
    std::map<int, IrrepFactor> given;
    IrrepParser p(text);
    while (!p.done()) {
        if (!given.empty()) p.expect('|');
        std::size_t clause_start = p.pos();
        if (!p.accept_word("j")) p.fail("expected 'j='");
        p.expect('=');
        int j = p.integer();
        if (type.count(j) == 0) throw ParseError("irrep: no cycles of length " + std::to_string(j) + " in " + type.to_string(), clause_start);
        if (given.count(j)) throw ParseError("irrep: duplicate clause for j=" + std::to_string(j), clause_start);
        p.expect(':');
        IrrepFactor f{j, type.count(j), {}, {}};
        bool have_t = false;
        enum class Mu { eps, sgn, explicit_ } mu_kind = Mu::eps;
        std::vector<Partition> mu;
        std::size_t mu_pos = p.pos();
        do {
            if (p.accept_word("t")) {
                if (have_t) p.fail("duplicate t");
                p.expect('=');
                have_t = true;
                do {
                    std::size_t at = p.pos();
                    int v = p.integer();
                    if (v >= j) throw ParseError("irrep: exponent " + std::to_string(v) + " out of range for j=" + std::to_string(j), at);
                    f.t.push_back(v);
                } while (p.accept(','));
            } else if (p.accept_word("mu")) {
                p.expect('=');
                mu_pos = p.pos();
                if (p.accept_word("eps")) {
                    mu_kind = Mu::eps;
                } else if (p.accept_word("sgn")) {
                    mu_kind = Mu::sgn;
                } else {
                    mu_kind = Mu::explicit_;
                    do {
                        p.expect('[');
                        Partition part;
                        do part.push_back(p.integer());
                        while (p.accept(','));
                        p.expect(']');
                        if (!std::is_sorted(part.rbegin(), part.rend()) || part.back() < 1) p.fail("partition parts must be positive and non-increasing");
                        mu.push_back(std::move(part));
                    } while (p.accept('/'));
                }
            } else {
                p.fail("expected 't=' or 'mu='");
            }
        } while (p.accept(';'));
        if (!have_t) f.t.assign(static_cast<std::size_t>(f.count), 0);
        if (static_cast<int>(f.t.size()) != f.count)
            throw ParseError("irrep: j=" + std::to_string(j) + " needs " + std::to_string(f.count) + " exponents, got " + std::to_string(f.t.size()), clause_start);
        std::sort(f.t.begin(), f.t.end());
        auto mult = f.multiplicities();
        if (mu_kind == Mu::explicit_) {
            if (mu.size() != mult.size())
                throw ParseError("irrep: j=" + std::to_string(j) + " needs " + std::to_string(mult.size()) + " partitions, got " + std::to_string(mu.size()), mu_pos);
            for (std::size_t k = 0; k < mult.size(); ++k)
                if (std::accumulate(mu[k].begin(), mu[k].end(), 0) != mult[k].second)
                    throw ParseError("irrep: partition " + partition_to_string(mu[k]) + " should have size " + std::to_string(mult[k].second), mu_pos);
            f.mu = std::move(mu);
        } else {
            for (const auto& [v, c] : mult)
                f.mu.push_back(mu_kind == Mu::eps ? Partition{c} : Partition(static_cast<std::size_t>(c), 1));
        }
        given.emplace(j, std::move(f));
    }
    std::vector<IrrepFactor> factors;
    for (int j : type.lengths()) {
        auto it = given.find(j);
        if (it != given.end()) {
            factors.push_back(std::move(it->second));
        } else {
            int n = type.count(j);
            factors.push_back({j, n, std::vector<int>(static_cast<std::size_t>(n), 0), {Partition{n}}});
        }
    }
    return CentralizerIrrep(type, std::move(factors));
}

CentralizerIrrep CentralizerIrrep::linear(const CycleType& type, const std::map<int, int>& t, const std::map<int, bool>& sign) {
    std::vector<IrrepFactor> factors;
    for (int j : type.lengths()) {
        int n = type.count(j);
        auto ti = t.find(j);
        auto si = sign.find(j);
        int v = ti == t.end() ? 0 : mod(ti->second, j);
        bool sg = si != sign.end() && si->second;
        factors.push_back({j, n, std::vector<int>(static_cast<std::size_t>(n), v), {sg ? Partition(static_cast<std::size_t>(n), 1) : Partition{n}}});
    }
    for (const auto& [j, v] : t)
        if (type.count(j) == 0) throw PreconditionError("no cycles of length " + std::to_string(j));
    return CentralizerIrrep(type, std::move(factors));
}

namespace {

// Odometer over the cartesian product; false once every combination was visited.
template <class T>
bool advance(std::vector<std::size_t>& idx, const std::vector<std::vector<T>>& choices) {
    for (std::size_t k = idx.size(); k > 0; --k) {
        if (++idx[k - 1] < choices[k - 1].size()) return true;
        idx[k - 1] = 0;
    }
    return false;
}

}  // namespace

std::vector<IrrepFactor> factor_irreps(int length, int count) {
    std::vector<IrrepFactor> out;
    std::vector<int> t(static_cast<std::size_t>(count), 0);
    // non-decreasing exponent sequences in lexicographic order
    while (true) {
        IrrepFactor base{length, count, t, {}};
        auto mult = base.multiplicities();
        std::vector<std::vector<Partition>> choices;
        for (const auto& [v, c] : mult) choices.push_back(partitions(c));
        std::vector<std::size_t> idx(choices.size(), 0);
        do {
            IrrepFactor f = base;
            for (std::size_t k = 0; k < choices.size(); ++k) f.mu.push_back(choices[k][idx[k]]);
            out.push_back(std::move(f));
        } while (advance(idx, choices));
        int i = count - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == length - 1) --i;
        if (i < 0) break;
        int v = t[static_cast<std::size_t>(i)] + 1;
        for (int k = i; k < count; ++k) t[static_cast<std::size_t>(k)] = v;
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_irrep(const CycleType& type, const std::function<void(const CentralizerIrrep&)>& visit) {
    std::vector<std::vector<IrrepFactor>> per;
    for (int j : type.lengths()) per.push_back(factor_irreps(j, type.count(j)));
    std::vector<std::size_t> idx(per.size(), 0);
    do {
        std::vector<IrrepFactor> fs;
        for (std::size_t k = 0; k < per.size(); ++k) fs.push_back(per[k][idx[k]]);
        visit(CentralizerIrrep(type, std::move(fs)));
    } while (advance(idx, per));
}

std::vector<CentralizerIrrep> enumerate_irreps(const CentralizerPresentation& c) {
    std::vector<CentralizerIrrep> out;
    for_each_irrep(c.type, [&](const CentralizerIrrep& r) { out.push_back(r); });
    return out;
}

RootOfUnity central_scalar(const CentralizerIrrep& rho, int j) {
    const auto& f = rho.factor(j);
    return root(j, std::accumulate(f.t.begin(), f.t.end(), 0LL));
}

RootOfUnity q_even(const CentralizerIrrep& rho) {
    RootOfUnity q;
    for (const auto& f : rho.factors())
        if (f.length % 2 == 0) q *= central_scalar(rho, f.length);
    return q;
}

RootOfUnity q_odd(const CentralizerIrrep& rho) {
    RootOfUnity q;
    for (const auto& f : rho.factors())
        if (f.length % 2 == 1 && f.length > 1) q *= central_scalar(rho, f.length);
    return q;
}

RootOfUnity q_sigma(const CentralizerIrrep& rho) { return q_even(rho) * q_odd(rho); }

namespace {

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool is_identity_perm(const std::vector<int>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

void check_type(const CentralizerIrrep& rho, const CentralizerPresentation& c) {
    if (!(rho.type() == c.type)) throw PreconditionError("irrep is for " + rho.type().to_string() + ", centralizer for " + c.type.to_string());
}

RootOfUnity linear_factor_value(const IrrepFactor& f, const WreathComponent& comp) {
    long long total = std::accumulate(comp.rotations.begin(), comp.rotations.end(), 0LL);
    RootOfUnity v = root(f.length, static_cast<long long>(f.t.front()) * total);
    if (f.is_sign_mu() && permutation_sign(comp.block_perm) < 0) v *= RootOfUnity::minus_one();
    return v;
}

}  // namespace

RootOfUnity evaluate_deg1(const CentralizerIrrep& rho, const Permutation& g, const CentralizerPresentation& c) {
    check_type(rho, c);
    if (rho.degree() != 1) throw PreconditionError("evaluate_deg1 needs a degree-one irrep, got degree " + std::to_string(rho.degree()));
    auto fact = factorize(g, c);
    RootOfUnity v;
    for (std::size_t i = 0; i < rho.factors().size(); ++i) v *= linear_factor_value(rho.factors()[i], fact.components[i]);
    return v;
}

RootOfUnity evaluate_deg1(const CentralizerIrrep& rho, const Permutation& g) {
    return evaluate_deg1(rho, g, build_centralizer(rho.type()));
}

std::optional<RootOfUnity> scalar_action(const CentralizerIrrep& rho, const Permutation& g, const CentralizerPresentation& c) {
    check_type(rho, c);
    auto fact = factorize(g, c);
    RootOfUnity v;
    for (std::size_t i = 0; i < rho.factors().size(); ++i) {
        const auto& f = rho.factors()[i];
        const auto& comp = fact.components[i];
        if (f.degree() == 1) {
            v *= linear_factor_value(f, comp);
            continue;
        }
        if (!is_identity_perm(comp.block_perm)) return std::nullopt;
        if (std::adjacent_find(comp.rotations.begin(), comp.rotations.end(), std::not_equal_to<>()) != comp.rotations.end()) return std::nullopt;
        long long sum_t = std::accumulate(f.t.begin(), f.t.end(), 0LL);
        v *= root(f.length, sum_t * comp.rotations.front());
    }
    return v;
}

RootOfUnity weight_value(const CentralizerIrrep& rho, const Permutation& g, const CentralizerPresentation& c) {
    check_type(rho, c);
    auto fact = factorize(g, c);
    RootOfUnity v;
    for (std::size_t i = 0; i < rho.factors().size(); ++i) {
        const auto& f = rho.factors()[i];
        const auto& comp = fact.components[i];
        if (!is_identity_perm(comp.block_perm)) throw PreconditionError(g.to_string() + " permutes the cycles of length " + std::to_string(f.length));
        long long e = 0;
        for (std::size_t l = 0; l < f.t.size(); ++l) e += static_cast<long long>(f.t[l]) * comp.rotations[l];
        v *= root(f.length, e);
    }
    return v;
}

std::optional<std::pair<int, int>> lemma31_trigger(const CentralizerIrrep& rho) {
    for (const auto& f : rho.factors())
        for (std::size_t l = 0; l < f.t.size(); ++l)
            if ((4 * f.t[l]) % f.length != 0) return std::make_pair(f.length, static_cast<int>(l) + 1);
    return std::nullopt;
}

}  // namespace nichols
