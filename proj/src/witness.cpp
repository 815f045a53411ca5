#include "sympmat/witness.hpp"

#include <stdexcept>

#include "sympmat/error.hpp"

namespace sympmat {

std::size_t plucker_index(Position i, Position j, int n) {
    const int size = 2 * n;
    if (i < 1 || j > size || i >= j) throw Error(ErrorKind::InvalidInput, "Plucker index needs 1 <= i < j <= 2n");
    std::size_t idx = 0;
    for (Position a = 1; a < i; ++a) idx += static_cast<std::size_t>(size - a);
    return idx + static_cast<std::size_t>(j - i - 1);
}

std::vector<Rational> plucker_vector(const RationalMatrix& m) {
    if (m.rows() != 2 || m.cols() < 2 || m.cols() % 2 != 0)
        throw Error(ErrorKind::InvalidInput, "expected a 2 x 2n matrix");
    std::vector<Rational> x;
    bool nonzero = false;
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            x.push_back(m(0, i) * m(1, j) - m(0, j) * m(1, i));
            nonzero = nonzero || x.back() != 0;
        }
    if (!nonzero) throw Error(ErrorKind::RankDeficient, "all 2 x 2 minors vanish");
    return x;
}

PluckerWitness::PluckerWitness(int n, RationalMatrix matrix) : n_(n), matrix_(std::move(matrix)) {
    if (n < 1 || matrix_.cols() != static_cast<std::size_t>(2 * n))
        throw Error(ErrorKind::InvalidInput, "matrix width does not match n");
    plucker_ = plucker_vector(matrix_);
}

PluckerWitness::PluckerWitness(int n, RationalMatrix matrix, std::vector<Rational> plucker)
    : n_(n), matrix_(std::move(matrix)), plucker_(std::move(plucker)) {
    const std::size_t size = static_cast<std::size_t>(2 * n);
    if (n < 1 || matrix_.rows() != 2 || matrix_.cols() != size || plucker_.size() != size * (size - 1) / 2)
        throw Error(ErrorKind::InvalidInput, "witness shape does not match n");
}

const Rational& PluckerWitness::coordinate(Position i, Position j) const {
    return i < j ? plucker_[plucker_index(i, j, n_)] : plucker_[plucker_index(j, i, n_)];
}

SymmetricMatroid matroid_of_witness(const PluckerWitness& w) {
    BasisSet b;
    for (Position i = 1; i <= 2 * w.n(); ++i)
        for (Position j = i + 1; j <= 2 * w.n(); ++j)
            if (w.coordinate(i, j) != 0) b.push_back({i, j});
    return from_bases(b, w.n());
}

Rational symplectic_sum(const PluckerWitness& w) {
    GroundSet e{w.n()};
    Rational s = 0;
    for (Position i = 1; i <= w.n(); ++i) s += w.coordinate(i, e.star(i));
    return s;
}

bool satisfies_plucker_relations(const PluckerWitness& w) {
    const int size = 2 * w.n();
    for (Position a = 1; a <= size; ++a)
        for (Position b = a + 1; b <= size; ++b)
            for (Position c = b + 1; c <= size; ++c)
                for (Position d = c + 1; d <= size; ++d) {
                    Rational r = w.coordinate(a, b) * w.coordinate(c, d) - w.coordinate(a, c) * w.coordinate(b, d) +
                                 w.coordinate(a, d) * w.coordinate(b, c);
                    if (r != 0) return false;
                }
    return true;
}

PluckerWitness build_witness(const SymmetricMatroid& m) {
    RationalMatrix a(2, 2 * m.n());
    for (std::size_t k = 0; k < m.bags().size(); ++k)
        for (Position p : m.bags()[k]) {
            a(0, p - 1) = 1;
            a(1, p - 1) = static_cast<long>(k);
        }
    return PluckerWitness(m.n(), std::move(a));
}

PluckerWitness build_symplectic_witness(const SymplecticMatroid& m) {
    const auto report = is_representable(m);
    if (!report.representable) throw Error(ErrorKind::NotRepresentable, "every lifting has degree 1 or none exists");
    const SymmetricMatroid& lift = *report.witness_lifting;
    GroundSet e{m.n()};
    PluckerWitness w = build_witness(lift);
    const auto diag = diagonal_labels(lift);
    if (diag.size() >= 2) {
        // Only the columns of starred diagonal partners are rescaled, which
        // multiplies minors by nonzero scalars and keeps the pattern.
        RationalMatrix a = w.matrix();
        auto scale_column = [&](Position p, const Rational& c) {
            a(0, p - 1) *= c;
            a(1, p - 1) *= c;
        };
        auto rest = [&] {
            PluckerWitness cur(m.n(), a);
            Rational r = 0;
            for (std::size_t k = 1; k < diag.size(); ++k) r += cur.coordinate(diag[k], e.star(diag[k]));
            return std::pair{r, cur.coordinate(diag[0], e.star(diag[0]))};
        };
        auto [r, lead] = rest();
        if (r == 0) {
            scale_column(e.star(diag[1]), Rational(2));
            std::tie(r, lead) = rest();
        }
        scale_column(e.star(diag[0]), Rational(-r / lead));
        w = PluckerWitness(m.n(), std::move(a));
    }
    if (!verify_certificate(w, m)) throw std::logic_error("constructed witness failed its certificate");
    return w;
}

std::string_view to_string(CertificateFailure f) {
    switch (f) {
        case CertificateFailure::None: return "ok";
        case CertificateFailure::Shape: return "shape";
        case CertificateFailure::RankDeficient: return "rank_deficient";
        case CertificateFailure::MinorsMismatch: return "minors_mismatch";
        case CertificateFailure::PluckerRelation: return "plucker_relation";
        case CertificateFailure::SymplecticSum: return "symplectic_sum";
        case CertificateFailure::PatternMismatch: return "pattern_mismatch";
    }
    return "unknown";
}

CertificateCheck verify_certificate(const PluckerWitness& w, const SymplecticMatroid& m) {
    auto fail = [](CertificateFailure f) { return CertificateCheck{false, f}; };
    if (w.n() != m.n()) return fail(CertificateFailure::Shape);
    if (rank(w.matrix()) != 2) return fail(CertificateFailure::RankDeficient);
    if (plucker_vector(w.matrix()) != w.plucker()) return fail(CertificateFailure::MinorsMismatch);
    if (!satisfies_plucker_relations(w)) return fail(CertificateFailure::PluckerRelation);
    if (symplectic_sum(w) != 0) return fail(CertificateFailure::SymplecticSum);
    BasisSet pattern;
    for (const Pair& p : admissible_pairs(w.n()))
        if (w.coordinate(p.lo, p.hi) != 0) pattern.push_back(p);
    if (pattern != m.bases()) return fail(CertificateFailure::PatternMismatch);
    return {true, CertificateFailure::None};
}

PluckerWitness apply_torus(const PluckerWitness& w, std::span<const Rational> mu) {
    if (mu.size() != static_cast<std::size_t>(w.n())) throw Error(ErrorKind::InvalidInput, "torus element needs n entries");
    GroundSet e{w.n()};
    RationalMatrix a = w.matrix();
    for (Position i = 1; i <= w.n(); ++i) {
        const Rational& t = mu[i - 1];
        if (t == 0) throw Error(ErrorKind::InvalidInput, "torus entries must be nonzero");
        const Rational inv = 1 / t;
        for (std::size_t r = 0; r < 2; ++r) {
            a(r, i - 1) *= t;
            a(r, e.star(i) - 1) *= inv;
        }
    }
    return PluckerWitness(w.n(), std::move(a));
}

}  // namespace sympmat
