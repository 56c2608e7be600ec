#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongce/coloring.hpp"

namespace strongce {

/// Exponent vector; length equals the variable count.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

/// A linear factor (x_i - x_j), 0-based variable indices.
struct FactorPair {
    std::uint32_t i;
    std::uint32_t j;
    friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Integer polynomial as a lexicographically ordered map monomial -> nonzero
/// coefficient. Coefficient arithmetic is checked; overflow throws std::overflow_error.
class SparsePolynomial {
public:
    explicit SparsePolynomial(std::size_t variables) : variables_(variables) {}

    static SparsePolynomial constant(std::size_t variables, std::int64_t value);

    std::size_t variables() const noexcept { return variables_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }

    std::int64_t coefficient_of(const Monomial& m) const;
    /// Highest total degree of a stored term; 0 for the zero polynomial.
    std::uint32_t degree() const;

    /// Adds `c` to the coefficient of `m`, erasing the term if it cancels.
    void add_term(const Monomial& m, std::int64_t c);

    std::int64_t evaluate(std::span<const std::int64_t> point) const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::size_t variables_;
    std::map<Monomial, std::int64_t> terms_;
};

/// p * (x_i - x_j), dropping every monomial that exceeds `caps` in some
/// coordinate. An empty `caps` means no capping. Exponents only grow under
/// multiplication, so a dropped monomial never contributes to a monomial
/// within the caps.
SparsePolynomial multiply_capped(const SparsePolynomial& p, FactorPair factor,
                                 std::span<const std::uint32_t> caps);

/// Product of all factors, capped as in multiply_capped.
SparsePolynomial expand_product(std::size_t variables, std::span<const FactorPair> factors,
                                std::span<const std::uint32_t> caps = {});

/// Coefficient of x^targets in the product, expanding with caps = targets.
std::int64_t product_coefficient(std::size_t variables, std::span<const FactorPair> factors,
                                 std::span<const std::uint32_t> targets);

/// A Nullstellensatz instance: variables with candidate value lists, the
/// linear factors of the product, and a target exponent vector.
struct ConflictSystem {
    std::size_t variables = 0;
    std::vector<FactorPair> factors;
    std::vector<std::vector<ColorId>> lists;
    std::vector<std::uint32_t> targets;
};

/// True iff s_i != s_j for every factor, i.e. the product does not vanish at s.
bool nonvanishing(std::span<const FactorPair> factors, std::span<const ColorId> values);

/// Backtracking over lists[0] x ... x lists[n-1] in index order; a prefix is
/// pruned as soon as a factor with both variables assigned vanishes.
std::optional<std::vector<ColorId>> cn_find_assignment(const ConflictSystem& system);

/// True when the target coefficient is nonzero, sum(targets) equals the
/// factor count, and |lists[i]| > targets[i] for all i.
bool certified(const ConflictSystem& system);

/// The 9-variable, 29-factor product used to color a 5-cycle with its
/// four pendant edges, and the exponent vector whose coefficient certifies it.
std::span<const FactorPair> five_cycle_factors();
std::span<const std::uint32_t> five_cycle_targets();

struct Certificate {
    std::int64_t coefficient = 0;
    std::uint32_t degree = 0;
    std::size_t factor_count = 0;
};

/// Expands the five-cycle product with capping and extracts the target
/// coefficient (-1). Computed once per process.
const Certificate& five_cycle_certificate();

/// Parses "x1^3*x2*x9^2" or "x1^3 x2 x9^2" (1-based variable names) into an
/// exponent vector of length `variables`. Throws std::invalid_argument.
Monomial parse_monomial(const std::string& text, std::size_t variables);

/// Parses factor lines "i j" (1-based) meaning (x_i - x_j); '#' comments.
std::vector<FactorPair> parse_factors(const std::string& text);

}  // namespace strongce
