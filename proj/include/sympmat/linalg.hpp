#pragma once

// Exact linear algebra over Q and Z for the small systems this library needs:
// ranks, nonnegative feasibility (phase-one simplex) and Smith invariants.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sympmat {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Always "p/q" with q >= 1.
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p". Throws InvalidInput.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

/// Some x >= 0 with A x = b, or nullopt when none exists. Phase-one simplex
/// with Bland's rule, so it terminates on degenerate problems.
std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b);

/// Nonzero diagonal entries of the Smith normal form of an integer matrix
/// (rows are generators). Their count is the rank; their product is the
/// order of the torsion subgroup of Z^cols / rowspace.
std::vector<Integer> smith_invariants(const std::vector<std::vector<long long>>& rows, std::size_t cols);

}  // namespace sympmat
