#include "sympmat/linalg.hpp"

#include <algorithm>
#include <utility>

#include "sympmat/error.hpp"

namespace sympmat {

std::string to_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos ||
            s.find_first_of("0123456789") == std::string::npos || s.find_first_of("+-", 1) != std::string::npos)
            throw Error(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t rows = a.rows();
    const std::size_t vars = a.cols();
    if (b.size() != rows) throw Error(ErrorKind::InvalidInput, "right-hand side has wrong length");

    // Tableau [A | I | b] with every row sign-normalized so that b >= 0; the
    // artificial columns start out basic.
    const std::size_t width = vars + rows + 1;
    RationalMatrix t(rows, width);
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < vars; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        t(i, vars + i) = 1;
        t(i, width - 1) = flip ? Rational(-b[i]) : b[i];
        basis[i] = vars + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    auto reduced_cost = [&](std::size_t j) {
        Rational d = j >= vars ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] >= vars) d -= t(i, j);
        return d;
    };

    for (;;) {
        std::size_t entering = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
            if (reduced_cost(j) < 0) {
                entering = j;
                break;
            }
        }
        if (entering == width) break;

        std::size_t leaving = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t(i, entering) <= 0) continue;
            Rational ratio = t(i, width - 1) / t(i, entering);
            if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        if (leaving == rows) break;

        Rational pivot = t(leaving, entering);
        for (std::size_t k = 0; k < width; ++k) t(leaving, k) /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leaving || t(i, entering) == 0) continue;
            Rational f = t(i, entering);
            for (std::size_t k = 0; k < width; ++k) t(i, k) -= f * t(leaving, k);
        }
        basis[leaving] = entering;
    }

    std::vector<Rational> x(vars);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= vars) {
            if (t(i, width - 1) != 0) return std::nullopt;
        } else {
            x[basis[i]] = t(i, width - 1);
        }
    }
    return x;
}

std::vector<Integer> smith_invariants(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    std::vector<std::vector<Integer>> m;
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorKind::InvalidInput, "ragged integer matrix");
        m.emplace_back(r.begin(), r.end());
    }
    const std::size_t nr = m.size();
    std::vector<Integer> out;

    for (std::size_t k = 0; k < std::min(nr, cols); ++k) {
        // Move the smallest nonzero entry of the trailing block to (k, k).
        auto place_min = [&]() {
            std::size_t bi = nr, bj = cols;
            for (std::size_t i = k; i < nr; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (m[i][j] != 0 && (bi == nr || abs(m[i][j]) < abs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == nr) return false;
            std::swap(m[k], m[bi]);
            for (auto& row : m) std::swap(row[k], row[bj]);
            return true;
        };
        if (!place_min()) break;

        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < nr; ++i) {
                Integer q = m[i][k] / m[k][k];
                if (q != 0)
                    for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                Integer q = m[k][j] / m[k][k];
                if (q != 0)
                    for (std::size_t i = k; i < nr; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) clean = false;
            }
            if (clean) {
                // The pivot must divide the whole trailing block.
                std::size_t bad_row = nr;
                for (std::size_t i = k + 1; i < nr && bad_row == nr; ++i)
                    for (std::size_t j = k + 1; j < cols; ++j)
                        if (m[i][j] % m[k][k] != 0) {
                            bad_row = i;
                            break;
                        }
                if (bad_row == nr) break;
                for (std::size_t j = k; j < cols; ++j) m[k][j] += m[bad_row][j];
                continue;
            }
            place_min();
        }
        out.push_back(abs(m[k][k]));
    }
    return out;
}

}  // namespace sympmat
