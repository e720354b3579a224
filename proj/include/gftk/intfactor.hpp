#pragma once

#include <vector>

#include "gftk/rational.hpp"

namespace gftk {

// Prime factorization of |n| (n != 0): trial division for small factors, then
// Pollard rho with a primality check for the rest. Returns (prime, exponent)
// pairs with ascending primes.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> divisors(const Integer& n);

// Largest s with s^2 | n, for n > 0: n = s^2 * d with d squarefree.
Integer square_part(const Integer& n);

} // namespace gftk
