#ifndef LATDIFF_FORMULAS_HPP_
#define LATDIFF_FORMULAS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "latdiff/errors.hpp"

namespace latdiff {

// Exact 128-bit counter. Arithmetic is checked: overflow throws
// std::overflow_error instead of wrapping.
using Count = boost::multiprecision::checked_uint128_t;

std::string count_to_string(const Count& c);

// Exact binomial coefficient; 0 for k < 0 or k > n.
Count binomial(int n, int k);

// The n-th Catalan number binom(2n, n) / (n + 1), exact.
Count catalan(int n);

// Number of difference operators d on the n-element chain with
// d(top) = a_j, by the closed formulas:
//   j in {n-1, n-2}: C(n)
//   0 <= j <= n-3:   C(n) + sum_{k=1}^{n-2-j} binom(n-2-j, k) C(n-k)
Count omega_top_formula(int n, int j);

// The same count evaluated through the recurrence
//   omega_j^{n-1}(L_n) = C(n) + sum_{k=j}^{n-3} omega_k^{n-2}(L_{n-1})
// with the j in {n-1, n-2} base cases. Must agree with omega_top_formula
// on the whole valid range.
Count omega_recurrence(int n, int j);

// Total number of difference operators on the n-element chain:
//   n C(n) for n in {1, 2};
//   n C(n) + sum_{k=1}^{n-2} sum_{p=k}^{n-2} binom(p, k) C(n-k) for n >= 3.
Count chain_total(int n);

// Number of derivations on the n-element quasi-antichain (n >= 4):
//   2 + sum_{k=1}^{n-2} (k+1) binom(n-2, k).
Count quasi_derivation_total(int n);

// The two addends of the difference-operator count on the n-element
// quasi-antichain, valid for n >= 5:
//   poly = (3n^3 - 22n^2 + 61n - 50) / 2
//   sum  = sum_{k=1}^{n-2} (k+1) binom(n-2, k)
struct QuasiTotalParts {
  Count poly;
  Count sum;
};
QuasiTotalParts quasi_total_parts(int n);

// poly + sum above. The closed form is only stated for n >= 5; for n = 4
// this throws InvalidInput carrying the known enumerated value 36.
Count quasi_total(int n);

}  // namespace latdiff

#endif  // LATDIFF_FORMULAS_HPP_
