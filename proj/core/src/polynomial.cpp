#include "strongce/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace strongce {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

}  // namespace

std::uint32_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

SparsePolynomial SparsePolynomial::constant(std::size_t variables, std::int64_t value) {
    SparsePolynomial p(variables);
    p.add_term(Monomial(variables, 0), value);
    return p;
}

std::int64_t SparsePolynomial::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::uint32_t SparsePolynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

void SparsePolynomial::add_term(const Monomial& m, std::int64_t c) {
    if (m.size() != variables_) throw std::invalid_argument("monomial length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t SparsePolynomial::evaluate(std::span<const std::int64_t> point) const {
    if (point.size() != variables_) throw std::invalid_argument("point dimension mismatch");
    std::int64_t total = 0;
    for (const auto& [m, c] : terms_) {
        std::int64_t term = c;
        for (std::size_t i = 0; i < variables_; ++i) {
            for (std::uint32_t k = 0; k < m[i]; ++k) term = checked_mul(term, point[i]);
        }
        total = checked_add(total, term);
    }
    return total;
}

SparsePolynomial multiply_capped(const SparsePolynomial& p, FactorPair factor,
                                 std::span<const std::uint32_t> caps) {
    const std::size_t n = p.variables();
    if (factor.i >= n || factor.j >= n || factor.i == factor.j) {
        throw std::invalid_argument("factor indices out of range");
    }
    if (!caps.empty() && caps.size() != n) throw std::invalid_argument("caps length mismatch");

    std::vector<std::pair<Monomial, std::int64_t>> products;
    products.reserve(2 * p.term_count());
    for (const auto& [m, c] : p.terms()) {
        if (caps.empty() || m[factor.i] < caps[factor.i]) {
            Monomial up = m;
            ++up[factor.i];
            products.emplace_back(std::move(up), c);
        }
        if (caps.empty() || m[factor.j] < caps[factor.j]) {
            Monomial down = m;
            ++down[factor.j];
            products.emplace_back(std::move(down), -c);
        }
    }
    std::sort(products.begin(), products.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparsePolynomial out(n);
    for (std::size_t k = 0; k < products.size();) {
        std::int64_t sum = 0;
        std::size_t l = k;
        while (l < products.size() && products[l].first == products[k].first) {
            sum = checked_add(sum, products[l].second);
            ++l;
        }
        out.add_term(products[k].first, sum);
        k = l;
    }
    return out;
}

SparsePolynomial expand_product(std::size_t variables, std::span<const FactorPair> factors,
                                std::span<const std::uint32_t> caps) {
    auto p = SparsePolynomial::constant(variables, 1);
    for (const auto& f : factors) p = multiply_capped(p, f, caps);
    return p;
}

std::int64_t product_coefficient(std::size_t variables, std::span<const FactorPair> factors,
                                 std::span<const std::uint32_t> targets) {
    if (targets.size() != variables) throw std::invalid_argument("target length mismatch");
    auto p = expand_product(variables, factors, targets);
    return p.coefficient_of(Monomial(targets.begin(), targets.end()));
}

bool nonvanishing(std::span<const FactorPair> factors, std::span<const ColorId> values) {
    return std::all_of(factors.begin(), factors.end(), [&](const FactorPair& f) {
        return values[f.i] != values[f.j];
    });
}

std::optional<std::vector<ColorId>> cn_find_assignment(const ConflictSystem& system) {
    const std::size_t n = system.variables;
    if (system.lists.size() != n) throw std::invalid_argument("list count mismatch");
    // For each variable, the earlier variables it shares a factor with.
    std::vector<std::vector<std::uint32_t>> earlier(n);
    for (const auto& f : system.factors) {
        if (f.i >= n || f.j >= n) throw std::invalid_argument("factor index out of range");
        auto lo = std::min(f.i, f.j), hi = std::max(f.i, f.j);
        earlier[hi].push_back(lo);
    }
    std::vector<ColorId> values(n);
    std::vector<std::size_t> cursor(n, 0);
    std::size_t k = 0;
    if (n == 0) return values;
    while (true) {
        bool placed = false;
        while (cursor[k] < system.lists[k].size()) {
            ColorId c = system.lists[k][cursor[k]++];
            bool ok = std::none_of(earlier[k].begin(), earlier[k].end(),
                                   [&](std::uint32_t j) { return values[j] == c; });
            if (ok) {
                values[k] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (k + 1 == n) return values;
            ++k;
            cursor[k] = 0;
        } else {
            if (k == 0) return std::nullopt;
            --k;
        }
    }
}

bool certified(const ConflictSystem& system) {
    const std::size_t n = system.variables;
    if (system.targets.size() != n || system.lists.size() != n) return false;
    std::size_t sum = std::accumulate(system.targets.begin(), system.targets.end(), std::size_t{0});
    if (sum != system.factors.size()) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (system.lists[i].size() <= system.targets[i]) return false;
    }
    return product_coefficient(n, system.factors, system.targets) != 0;
}

namespace {

constexpr std::array<FactorPair, 29> kFiveCycleFactors = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 8},  //
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},          //
    {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},          //
    {3, 4}, {3, 6}, {3, 7}, {3, 8},                          //
    {4, 5}, {4, 7}, {4, 8},                                  //
    {5, 6}, {6, 7}, {7, 8},
}};

constexpr std::array<std::uint32_t, 9> kFiveCycleTargets = {3, 4, 5, 4, 4, 2, 3, 2, 2};

}  // namespace

std::span<const FactorPair> five_cycle_factors() { return kFiveCycleFactors; }
std::span<const std::uint32_t> five_cycle_targets() { return kFiveCycleTargets; }

const Certificate& five_cycle_certificate() {
    static const Certificate cert = [] {
        Certificate c;
        auto p = expand_product(9, kFiveCycleFactors, kFiveCycleTargets);
        c.coefficient = p.coefficient_of(Monomial(kFiveCycleTargets.begin(), kFiveCycleTargets.end()));
        c.degree = p.degree();
        c.factor_count = kFiveCycleFactors.size();
        return c;
    }();
    return cert;
}

Monomial parse_monomial(const std::string& text, std::size_t variables) {
    Monomial m(variables, 0);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
    };
    auto number = [&]() -> std::uint32_t {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected a number in monomial '" + text + "'");
        return static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
    };
    skip();
    if (text.substr(pos) == "1") return m;
    while (pos < text.size()) {
        if (text[pos] != 'x') throw std::invalid_argument("expected 'x' in monomial '" + text + "'");
        ++pos;
        std::uint32_t var = number();
        if (var == 0 || var > variables) {
            throw std::invalid_argument("variable x" + std::to_string(var) + " out of range");
        }
        std::uint32_t exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = number();
        }
        m[var - 1] += exp;
        skip();
    }
    return m;
}

std::vector<FactorPair> parse_factors(const std::string& text) {
    std::vector<FactorPair> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long i, j;
        if (!(ls >> i)) continue;
        std::string extra;
        if (!(ls >> j) || (ls >> extra) || i < 1 || j < 1 || i == j) {
            throw std::invalid_argument("bad factor line '" + line + "'");
        }
        out.push_back({static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1)});
    }
    return out;
}

}  // namespace strongce
