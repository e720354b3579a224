#include "gftk/guess.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gftk {

namespace {

// Fraction-free (Bareiss) echelon form over Z, in place; returns the pivot
// columns. Every division is exact by Sylvester's identity; that is asserted
// rather than assumed so a pivoting bug can never corrupt results silently.
std::vector<long> bareiss_echelon(std::vector<std::vector<Integer>>& rows, long ncols) {
    std::vector<long> pivots;
    Integer prev(1);
    std::size_t r = 0;
    for (long c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][static_cast<std::size_t>(c)] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        const std::vector<Integer>& prow = rows[r];
        const Integer& piv = prow[static_cast<std::size_t>(c)];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            Integer mult = rows[i][static_cast<std::size_t>(c)];
            for (long j = c + 1; j < ncols; ++j) {
                Integer num = rows[i][static_cast<std::size_t>(j)] * piv - prow[static_cast<std::size_t>(j)] * mult;
                if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("bareiss_echelon: inexact division");
                mpz_divexact(rows[i][static_cast<std::size_t>(j)].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][static_cast<std::size_t>(c)] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// One kernel vector per free column f: x_f = 1, other free coordinates 0,
// pivot coordinates by back-substitution over Q.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Integer>>& rows,
                                                const std::vector<long>& pivots, long ncols) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (long c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (long f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> x(static_cast<std::size_t>(ncols), Rational(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (long r = static_cast<long>(pivots.size()) - 1; r >= 0; --r) {
            long pc = pivots[static_cast<std::size_t>(r)];
            Rational s(0);
            for (long j = pc + 1; j < ncols; ++j)
                if (x[static_cast<std::size_t>(j)] != 0)
                    s += Rational(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) *
                         x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(pc)] = -s / Rational(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<Integer>> clear_rows(const std::vector<std::vector<Rational>>& qrows) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(qrows.size());
    for (const auto& qr : qrows) {
        Integer l(1);
        for (const auto& q : qr)
            if (q != 0) l = lcm(l, q.get_den());
        std::vector<Integer> r;
        r.reserve(qr.size());
        for (const auto& q : qr) r.push_back(Rational(q * Rational(l)).get_num());
        Integer g(0);
        for (const auto& n : r) g = gcd(g, n);
        if (g > 1)
            for (auto& n : r) n /= g;
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<Rational>& pick_most_trailing_zeros(const std::vector<std::vector<Rational>>& basis) {
    std::size_t best = 0;
    long bestz = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        long z = 0;
        for (long j = static_cast<long>(basis[k].size()) - 1; j >= 0 && basis[k][static_cast<std::size_t>(j)] == 0; --j)
            ++z;
        if (z > bestz) {
            bestz = z;
            best = k;
        }
    }
    return basis[best];
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& x) {
    Integer l(1);
    for (const auto& q : x)
        if (q != 0) l = lcm(l, q.get_den());
    std::vector<Integer> v;
    v.reserve(x.size());
    for (const auto& q : x) v.push_back(Rational(q * Rational(l)).get_num());
    Integer g(0);
    for (const auto& n : v) g = gcd(g, n);
    if (g > 1)
        for (auto& n : v) n /= g;
    return v;
}

// Solve M·c = 0 exactly; empty when only the zero vector does.
std::optional<std::pair<std::vector<Integer>, bool>> primitive_kernel_vector(
    const std::vector<std::vector<Rational>>& qrows, long ncols) {
    std::vector<std::vector<Integer>> rows = clear_rows(qrows);
    std::vector<long> pivots = bareiss_echelon(rows, ncols);
    std::vector<std::vector<Rational>> basis = kernel_basis(rows, pivots, ncols);
    if (basis.empty()) return std::nullopt;
    return std::make_pair(primitive_integer(pick_most_trailing_zeros(basis)), basis.size() > 1);
}

} // namespace

Integer ipoly_eval(const std::vector<Integer>& p, long m) {
    Integer r(0);
    for (long d = static_cast<long>(p.size()) - 1; d >= 0; --d) r = r * m + p[static_cast<std::size_t>(d)];
    return r;
}

std::optional<Guess<AlgebraicEquation>> guess_algeq(const std::vector<Rational>& coeffs, long deg_g, long deg_z,
                                                    long margin) {
    if (deg_g < 0 || deg_z < 0 || margin < 0) throw InvalidArgument("guess_algeq: negative bounds");
    long len = static_cast<long>(coeffs.size());
    long ncols = (deg_g + 1) * (deg_z + 1);
    if (len < ncols + margin)
        throw InsufficientData("guess_algeq: need at least " + std::to_string(ncols + margin) + " coefficients, got " +
                               std::to_string(len));

    RSeries g = RSeries::from_coeffs(coeffs, 0, len);
    std::vector<RSeries> pw;
    pw.reserve(static_cast<std::size_t>(deg_g) + 1);
    pw.push_back(RSeries::constant(Rational(1), len));
    for (long i = 1; i <= deg_g; ++i) pw.push_back(pw.back() * g);

    std::vector<std::vector<Rational>> qrows;
    qrows.reserve(static_cast<std::size_t>(len));
    for (long n = 0; n < len; ++n) {
        std::vector<Rational> row(static_cast<std::size_t>(ncols), Rational(0));
        for (long i = 0; i <= deg_g; ++i)
            for (long j = 0; j <= deg_z; ++j)
                if (n >= j) row[static_cast<std::size_t>(i * (deg_z + 1) + j)] = pw[static_cast<std::size_t>(i)].coeff(n - j);
        qrows.push_back(std::move(row));
    }

    auto kv = primitive_kernel_vector(qrows, ncols);
    if (!kv) return std::nullopt;

    AlgebraicEquation eq;
    eq.deg_g = deg_g;
    eq.deg_z = deg_z;
    eq.grid.assign(static_cast<std::size_t>(deg_g) + 1, std::vector<Integer>(static_cast<std::size_t>(deg_z) + 1));
    for (long i = 0; i <= deg_g; ++i)
        for (long j = 0; j <= deg_z; ++j)
            eq.grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                kv->first[static_cast<std::size_t>(i * (deg_z + 1) + j)];

    // canonical sign: first nonzero scanning (i, j) downward is positive
    [&] {
        for (long i = deg_g; i >= 0; --i)
            for (long j = deg_z; j >= 0; --j) {
                const Integer& e = eq.grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e == 0) continue;
                if (e < 0)
                    for (auto& rowv : eq.grid)
                        for (auto& entry : rowv) entry = -entry;
                return;
            }
    }();

    if (verify_algeq(eq, g) < len) return std::nullopt; // soundness gate; not expected to trigger
    return Guess<AlgebraicEquation>{std::move(eq), kv->second};
}

long verify_algeq(const AlgebraicEquation& p, const RSeries& g) {
    PolyTZ pt;
    pt.tc.reserve(p.grid.size());
    for (const auto& rowv : p.grid) {
        ZPoly c;
        c.reserve(rowv.size());
        for (const auto& e : rowv) c.push_back(Rational(e));
        pt.tc.push_back(std::move(c));
    }
    return eval_at(pt, g, g.precision()).valuation();
}

std::optional<Guess<Recurrence>> guess_rec(const std::vector<Rational>& coeffs, long order, long deg, long margin) {
    if (order < 0 || deg < 0 || margin < 0) throw InvalidArgument("guess_rec: negative bounds");
    long len = static_cast<long>(coeffs.size());
    long ncols = (order + 1) * (deg + 1);
    if (len < ncols + order + margin)
        throw InsufficientData("guess_rec: need at least " + std::to_string(ncols + order + margin) +
                               " coefficients, got " + std::to_string(len));

    std::vector<std::vector<Rational>> qrows;
    qrows.reserve(static_cast<std::size_t>(len - order));
    for (long m = 0; m + order < len; ++m) {
        std::vector<Rational> row(static_cast<std::size_t>(ncols), Rational(0));
        for (long i = 0; i <= order; ++i) {
            Rational mpow(1);
            for (long d = 0; d <= deg; ++d) {
                row[static_cast<std::size_t>(i * (deg + 1) + d)] = coeffs[static_cast<std::size_t>(m + i)] * mpow;
                mpow *= m;
            }
        }
        qrows.push_back(std::move(row));
    }

    auto kv = primitive_kernel_vector(qrows, ncols);
    if (!kv) return std::nullopt;

    Recurrence rec;
    rec.polys.assign(static_cast<std::size_t>(order) + 1, std::vector<Integer>(static_cast<std::size_t>(deg) + 1));
    for (long i = 0; i <= order; ++i)
        for (long d = 0; d <= deg; ++d)
            rec.polys[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
                kv->first[static_cast<std::size_t>(i * (deg + 1) + d)];

    // trim to the actual order and degree
    auto poly_is_zero = [](const std::vector<Integer>& p) {
        for (const auto& e : p)
            if (e != 0) return false;
        return true;
    };
    while (rec.polys.size() > 1 && poly_is_zero(rec.polys.back())) rec.polys.pop_back();
    rec.order = static_cast<long>(rec.polys.size()) - 1;
    long maxdeg = 0;
    for (const auto& p : rec.polys)
        for (long d = 0; d < static_cast<long>(p.size()); ++d)
            if (p[static_cast<std::size_t>(d)] != 0) maxdeg = std::max(maxdeg, d);
    for (auto& p : rec.polys) p.resize(static_cast<std::size_t>(maxdeg) + 1, Integer(0));
    rec.deg = maxdeg;

    // canonical sign: leading coefficient of the leading polynomial positive
    const auto& lead = rec.polys.back();
    for (long d = static_cast<long>(lead.size()) - 1; d >= 0; --d) {
        if (lead[static_cast<std::size_t>(d)] == 0) continue;
        if (lead[static_cast<std::size_t>(d)] < 0)
            for (auto& p : rec.polys)
                for (auto& e : p) e = -e;
        break;
    }

    if (verify_rec(rec, coeffs)) return std::nullopt; // soundness gate; not expected to trigger
    return Guess<Recurrence>{std::move(rec), kv->second};
}

std::optional<long> verify_rec(const Recurrence& r, const std::vector<Rational>& coeffs) {
    if (static_cast<long>(coeffs.size()) <= r.order)
        throw InvalidArgument("verify_rec: need more coefficients than the order");
    for (long m = 0; m + r.order < static_cast<long>(coeffs.size()); ++m)
        if (rec_window_residual(r, coeffs, m) != 0) return m;
    return std::nullopt;
}

Rational rec_window_residual(const Recurrence& r, const std::vector<Rational>& coeffs, long m) {
    if (m < 0 || m + r.order >= static_cast<long>(coeffs.size()))
        throw InvalidArgument("rec_window_residual: window out of range");
    Rational s(0);
    for (long i = 0; i <= r.order; ++i)
        s += Rational(ipoly_eval(r.polys[static_cast<std::size_t>(i)], m)) * coeffs[static_cast<std::size_t>(m + i)];
    return s;
}

} // namespace gftk
