#include "latdiff/formulas.hpp"

#include <vector>

namespace latdiff {

std::string count_to_string(const Count& c) { return c.str(); }

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<unsigned>(n - k + i);
    r /= static_cast<unsigned>(i);  // exact at each step
  }
  return r;
}

Count catalan(int n) {
  if (n < 1) throw InvalidInput("catalan is defined for n >= 1, got " + std::to_string(n));
  return binomial(2 * n, n) / static_cast<unsigned>(n + 1);
}

Count omega_top_formula(int n, int j) {
  if (n < 1 || j < 0 || j > n - 1)
    throw InvalidInput("omega: j = " + std::to_string(j) + " out of range for n = " +
                       std::to_string(n));
  if (j >= n - 2) return catalan(n);
  Count r = catalan(n);
  const int t = n - 2 - j;
  for (int k = 1; k <= t; ++k) r += binomial(t, k) * catalan(n - k);
  return r;
}

Count omega_recurrence(int n, int j) {
  if (n < 1 || j < 0 || j > n - 1)
    throw InvalidInput("omega: j = " + std::to_string(j) + " out of range for n = " +
                       std::to_string(n));
  if (j >= n - 2) return catalan(n);
  // row[m][k] holds the count for the m-chain with the top sent to a_k,
  // k <= m-3; the two top rows are the Catalan base cases
  std::vector<std::vector<Count>> row(static_cast<size_t>(n) + 1);
  for (int m = 3; m <= n; ++m) {
    row[m].resize(static_cast<size_t>(m) - 2);
    for (int k = m - 3; k >= 0; --k) {
      Count r = catalan(m);
      for (int t = k; t <= m - 3; ++t)
        r += (t >= m - 3) ? catalan(m - 1) : row[m - 1][t];
      row[m][k] = r;
    }
  }
  return row[n][j];
}

Count chain_total(int n) {
  if (n < 1) throw InvalidInput("chain_total is defined for n >= 1, got " + std::to_string(n));
  Count r = static_cast<unsigned>(n) * catalan(n);
  for (int k = 1; k <= n - 2; ++k) {
    Count coeff = 0;
    for (int p = k; p <= n - 2; ++p) coeff += binomial(p, k);
    r += coeff * catalan(n - k);
  }
  return r;
}

namespace {

Count weighted_binomial_sum(int n) {
  Count s = 0;
  for (int k = 1; k <= n - 2; ++k) s += static_cast<unsigned>(k + 1) * binomial(n - 2, k);
  return s;
}

}  // namespace

Count quasi_derivation_total(int n) {
  if (n < 4)
    throw InvalidInput("quasi_derivation_total is defined for n >= 4, got " + std::to_string(n));
  return 2 + weighted_binomial_sum(n);
}

QuasiTotalParts quasi_total_parts(int n) {
  if (n < 5)
    throw InvalidInput("quasi-antichain closed form is stated only for n >= 5 (n = 4 has the "
                       "enumerated value 36), got " + std::to_string(n));
  // 3n^3 - 22n^2 + 61n - 50 is positive and even on n >= 5
  const Count nn = static_cast<unsigned>(n);
  const Count pos = 3 * nn * nn * nn + 61 * nn;
  const Count neg = 22 * nn * nn + 50;
  const Count poly2 = pos - neg;
  return QuasiTotalParts{poly2 / 2, weighted_binomial_sum(n)};
}

Count quasi_total(int n) {
  const auto parts = quasi_total_parts(n);
  return parts.poly + parts.sum;
}

}  // namespace latdiff
