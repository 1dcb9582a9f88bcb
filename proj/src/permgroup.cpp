#include "nichols/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

Permutation::Permutation(int degree) {
    if (degree < 0) throw PreconditionError("negative degree");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int x : images) {
        if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)])
            throw PreconditionError("images do not form a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
    return Permutation(std::move(images), true);
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i];
            if (a < 1 || a > degree) throw PreconditionError("point " + std::to_string(a) + " out of range");
            if (used[static_cast<std::size_t>(a - 1)])
                throw PreconditionError("cycles are not disjoint at point " + std::to_string(a));
            used[static_cast<std::size_t>(a - 1)] = true;
            p.images_[static_cast<std::size_t>(a - 1)] = c[(i + 1) % c.size()] - 1;
        }
    }
    return p;
}

Permutation Permutation::cycle(int degree, std::span<const int> points) {
    return from_cycles(degree, {std::vector<int>(points.begin(), points.end())});
}

Permutation Permutation::parse(int degree, std::string_view text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip();
            if (i >= text.size()) throw ParseError("unterminated cycle", i);
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a point", i);
            int v = 0;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > degree) throw ParseError("point " + std::to_string(v) + " out of range", start);
            cyc.push_back(v);
        }
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
        skip();
    }
    try {
        return from_cycles(degree, cycles);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv), true);
}

Permutation Permutation::pow(long long exponent) const {
    Permutation base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
    Permutation result(degree());
    while (e) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s] || images_[s] == static_cast<int>(s)) continue;
        std::vector<int> c;
        for (auto x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
            seen[x] = true;
            c.push_back(static_cast<int>(x) + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

long long Permutation::order() const {
    long long o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<long long>(c.size()));
    return o;
}

int Permutation::sign() const {
    int s = 1;
    for (const auto& c : cycles())
        if (c.size() % 2 == 0) s = -s;
    return s;
}

std::string Permutation::to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << ')';
    }
    return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw PreconditionError("degree mismatch in composition");
    std::vector<int> r(b.images_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    return Permutation(std::move(r), true);
}

Permutation rack_conj(const Permutation& x, const Permutation& y) { return x * y * x.inverse(); }

bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

Permutation conjugator(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw PreconditionError("conjugator: degree mismatch");
    // all cycles including fixed points, grouped by length
    auto orbits = [](const Permutation& p) {
        std::map<int, std::vector<std::vector<int>>> by_len;
        std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
        for (int x = 1; x <= p.degree(); ++x) {
            if (seen[static_cast<std::size_t>(x - 1)]) continue;
            std::vector<int> c;
            for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = p.image(y)) {
                seen[static_cast<std::size_t>(y - 1)] = true;
                c.push_back(y);
            }
            by_len[static_cast<int>(c.size())].push_back(std::move(c));
        }
        return by_len;
    };
    auto oa = orbits(a), ob = orbits(b);
    std::vector<int> img(static_cast<std::size_t>(a.degree()), 0);
    for (const auto& [len, cs] : oa) {
        auto it = ob.find(len);
        if (it == ob.end() || it->second.size() != cs.size())
            throw PreconditionError("conjugator: " + a.to_string() + " and " + b.to_string() + " have different cycle types");
        for (std::size_t c = 0; c < cs.size(); ++c)
            for (std::size_t i = 0; i < cs[c].size(); ++i) img[static_cast<std::size_t>(cs[c][i] - 1)] = it->second[c][i] - 1;
    }
    if (oa.size() != ob.size()) throw PreconditionError("conjugator: different cycle types");
    return Permutation::from_images(std::move(img));
}

Permutation reversing_involution(int degree, std::span<const int> cycle_points) {
    const auto j = static_cast<int>(cycle_points.size());
    if (j < 1) throw PreconditionError("reversing involution needs a non-empty cycle");
    std::vector<std::vector<int>> swaps;
    // pair i_{1+s} with i_{j+1-s}, i.e. 0-based s with j - s
    for (int s = 1; s < j - s; ++s)
        swaps.push_back({cycle_points[static_cast<std::size_t>(s)], cycle_points[static_cast<std::size_t>(j - s)]});
    return Permutation::from_cycles(degree, swaps);
}

Permutation reversing_involution(const Permutation& tau) {
    auto cs = tau.cycles();
    if (cs.empty()) return Permutation(tau.degree());
    if (cs.size() != 1) throw PreconditionError("reversing involution: " + tau.to_string() + " is not a single cycle");
    return reversing_involution(tau.degree(), cs.front());
}

// ---------------------------------------------------------------------------

CycleType::CycleType(const std::map<int, int>& counts) {
    int degree = 0;
    for (auto [j, n] : counts) {
        if (j < 1 || n < 0) throw PreconditionError("invalid cycle type entry " + std::to_string(j) + "^" + std::to_string(n));
        degree += j * n;
    }
    counts_.assign(static_cast<std::size_t>(degree), 0);
    for (auto [j, n] : counts)
        if (n > 0) counts_[static_cast<std::size_t>(j - 1)] = n;
    degree_ = degree;
}

CycleType CycleType::with_degree(int degree, const std::map<int, int>& counts) {
    CycleType t(counts);
    if (t.degree() != degree)
        throw PreconditionError("malformed cycle type: sum of j*n_j is " + std::to_string(t.degree()) + ", expected " +
                                std::to_string(degree));
    return t;
}

CycleType CycleType::parse(std::string_view text) {
    std::map<int, int> counts;
    std::size_t i = 0;
    int last = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    auto number = [&](const char* what) {
        skip();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("expected ") + what, i);
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i++] - '0');
            if (v > 1000) throw ParseError("number too large", i);
        }
        return v;
    };
    skip();
    if (i >= text.size()) throw ParseError("empty cycle type", 0);
    for (;;) {
        std::size_t start = i;
        int j = number("cycle length");
        int n = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            n = number("multiplicity");
        }
        if (j < 1) throw ParseError("cycle length must be positive", start);
        if (n < 1) throw ParseError("multiplicity must be positive", start);
        if (j <= last) throw ParseError("cycle lengths must be strictly ascending", start);
        last = j;
        counts[j] = n;
        skip();
        if (i >= text.size()) break;
        if (text[i] != ',') throw ParseError("expected ','", i);
        ++i;
    }
    return CycleType(counts);
}

int CycleType::count(int j) const {
    if (j < 1 || j > degree_) return 0;
    return counts_[static_cast<std::size_t>(j - 1)];
}

std::vector<int> CycleType::lengths() const {
    std::vector<int> out;
    for (int j = 1; j <= degree_; ++j)
        if (count(j) > 0) out.push_back(j);
    return out;
}

std::map<int, int> CycleType::counts() const {
    std::map<int, int> out;
    for (int j : lengths()) out[j] = count(j);
    return out;
}

std::map<int, int> CycleType::even_part() const {
    std::map<int, int> out;
    for (int j : lengths())
        if (j % 2 == 0) out[j] = count(j);
    return out;
}

std::map<int, int> CycleType::odd_part() const {
    std::map<int, int> out;
    for (int j : lengths())
        if (j % 2 == 1 && j > 1) out[j] = count(j);
    return out;
}

long long CycleType::element_order() const {
    long long o = 1;
    for (int j : lengths()) o = std::lcm(o, static_cast<long long>(j));
    return o;
}

std::vector<int> CycleType::parts() const {
    std::vector<int> out;
    for (int j = degree_; j >= 1; --j)
        for (int k = 0; k < count(j); ++k) out.push_back(j);
    return out;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j : lengths()) {
        os << (first ? "" : ",") << j;
        if (count(j) != 1) os << '^' << count(j);
        first = false;
    }
    return os.str();
}

std::strong_ordering operator<=>(const CycleType& a, const CycleType& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    auto pa = a.parts();
    auto pb = b.parts();
    return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
}

CycleType cycle_type(const Permutation& p) {
    std::map<int, int> counts;
    int moved = 0;
    for (const auto& c : p.cycles()) {
        ++counts[static_cast<int>(c.size())];
        moved += static_cast<int>(c.size());
    }
    if (p.degree() > moved) counts[1] = p.degree() - moved;
    return CycleType::with_degree(p.degree(), counts);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<CycleType> all_cycle_types(int degree) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions_rec(degree, degree, current, parts);
    std::vector<CycleType> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        std::map<int, int> counts;
        for (int x : p) ++counts[x];
        out.emplace_back(counts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t centralizer_order(const CycleType& type) {
    std::uint64_t o = 1;
    for (int j : type.lengths()) {
        for (int k = 0; k < type.count(j); ++k) o *= static_cast<std::uint64_t>(j);
        o *= factorial(type.count(j));
    }
    return o;
}

std::uint64_t conjugacy_class_size(const CycleType& type) { return factorial(type.degree()) / centralizer_order(type); }

// ---------------------------------------------------------------------------

CanonicalLayout::CanonicalLayout(CycleType type) : type_(std::move(type)) {
    offsets_.assign(static_cast<std::size_t>(type_.degree()), 0);
    int r = 0;
    for (int j = 1; j <= type_.degree(); ++j) {
        offsets_[static_cast<std::size_t>(j - 1)] = r;
        r += j * type_.count(j);
    }
}

void CanonicalLayout::check(int j, int l) const {
    if (j < 1 || j > degree() || l < 1 || l > type_.count(j))
        throw PreconditionError("no cycle A_{" + std::to_string(l) + "," + std::to_string(j) + "} in type " +
                                type_.to_string());
}

int CanonicalLayout::offset(int j) const {
    if (j < 1 || j > degree()) throw PreconditionError("cycle length out of range");
    return offsets_[static_cast<std::size_t>(j - 1)];
}

int CanonicalLayout::point(int j, int l, int i) const {
    check(j, l);
    return offset(j) + (l - 1) * j + (i % j + j) % j + 1;
}

std::vector<int> CanonicalLayout::cycle_points(int j, int l) const {
    check(j, l);
    std::vector<int> pts(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) pts[static_cast<std::size_t>(i)] = point(j, l, i);
    return pts;
}

Permutation CanonicalLayout::cycle(int j, int l) const {
    auto pts = cycle_points(j, l);
    if (j == 1) return Permutation(degree());
    return Permutation::cycle(degree(), pts);
}

Permutation CanonicalLayout::swap(int j, int h) const {
    if (h < 1 || h >= type_.count(j))
        throw PreconditionError("no swap B_{" + std::to_string(h) + "," + std::to_string(j) + "}");
    std::vector<std::vector<int>> cs;
    for (int i = 0; i < j; ++i) cs.push_back({point(j, h, i), point(j, h + 1, i)});
    return Permutation::from_cycles(degree(), cs);
}

Permutation CanonicalLayout::cycles_of_length(int j) const {
    Permutation p(degree());
    for (int l = 1; l <= type_.count(j); ++l) p = p * cycle(j, l);
    return p;
}

Permutation CanonicalLayout::sigma() const {
    Permutation p(degree());
    for (int j : type_.lengths()) p = p * cycles_of_length(j);
    return p;
}

Permutation CanonicalLayout::even_part() const {
    Permutation p(degree());
    for (int j : type_.lengths())
        if (j % 2 == 0) p = p * cycles_of_length(j);
    return p;
}

Permutation CanonicalLayout::odd_part() const {
    Permutation p(degree());
    for (int j : type_.lengths())
        if (j % 2 == 1 && j > 1) p = p * cycles_of_length(j);
    return p;
}

std::vector<int> CanonicalLayout::fixed_points() const {
    std::vector<int> pts;
    for (int l = 1; l <= type_.count(1); ++l) pts.push_back(point(1, l, 0));
    return pts;
}

CyclePosition CanonicalLayout::locate(int point) const {
    if (point < 1 || point > degree()) throw PreconditionError("point out of range");
    int j = 1;
    for (int k : type_.lengths())
        if (offset(k) < point) j = k;
    int rel = point - 1 - offset(j);
    return {j, rel / j + 1, rel % j};
}

std::pair<Permutation, CanonicalLayout> canonical_sigma(const CycleType& type) {
    CanonicalLayout layout(type);
    auto s = layout.sigma();
    return {std::move(s), std::move(layout)};
}

}  // namespace nichols
