#include "gftk/intfactor.hpp"

#include <algorithm>
#include <map>

#include "gftk/errors.hpp"

namespace gftk {

namespace {

Integer pollard_rho(const Integer& n) {
    // n odd composite, no factor below the trial-division bound.
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break; // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<Integer, int>> factor(const Integer& n) {
    if (n == 0) throw InvalidArgument("factor: n must be nonzero");
    Integer m = n < 0 ? Integer(-n) : n;
    std::map<Integer, int> acc;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++acc[Integer(static_cast<long>(p))];
        }
    }
    for (unsigned long p = 17; p <= 100000 && m > 1; p += 2) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++acc[Integer(static_cast<long>(p))];
        }
    }
    if (m > 1) factor_into(m, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Integer> divisors(const Integer& n) {
    auto f = factor(n);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer square_part(const Integer& n) {
    if (n <= 0) throw InvalidArgument("square_part: n must be positive");
    Integer s = 1;
    for (const auto& [p, e] : factor(n)) {
        for (int k = 0; k < e / 2; ++k) s *= p;
    }
    return s;
}

} // namespace gftk
