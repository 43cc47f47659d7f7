#ifndef LATDIFF_ENUMERATE_HPP_
#define LATDIFF_ENUMERATE_HPP_

#include <chrono>
#include <functional>
#include <utility>
#include <vector>

#include "latdiff/formulas.hpp"
#include "latdiff/lattice.hpp"
#include "latdiff/operators.hpp"

namespace latdiff {

// A request to count (or list) the operators of a given weight on a
// lattice, optionally restricted by fixed values d(x) = y and lower
// bounds d(x) >= y.
struct CountQuery {
  explicit CountQuery(Lattice l, Weight w = Weight::plus_one,
                      std::vector<std::pair<Elem, Elem>> fixed_values = {},
                      std::vector<std::pair<Elem, Elem>> lower_bounds = {})
      : lattice(std::move(l)),
        weight(w),
        fixed(std::move(fixed_values)),
        at_least(std::move(lower_bounds)) {}

  Lattice lattice;
  Weight weight;
  std::vector<std::pair<Elem, Elem>> fixed;     // (element, required image)
  std::vector<std::pair<Elem, Elem>> at_least;  // (element, lower bound)
};

struct CountReport {
  enum class Method { brute, formula, recurrence };

  Count count = 0;
  Method method = Method::brute;
  std::chrono::duration<double> elapsed{0};
  // Set instead of wrapping when the count leaves 128 bits. Never true in
  // an accepted run.
  bool overflow = false;
};

struct EnumerateOptions {
  // Largest lattice size accepted without force.
  int budget = 10;
  bool force = false;
  // > 1 splits the search by the value of image[0] and runs the partitions
  // concurrently; counts and emission order are identical to a sequential
  // run.
  int partitions = 1;
};

using OperatorConsumer = std::function<void(const Operator&)>;

/// Depth-first enumeration of the operators matching a query.
///
/// Images are assigned in index order; after image[k] is placed, the weight
/// identity is checked for every pair (x, y) whose three participating
/// images (x, y and x/\y) are all assigned and whose last-assigned index is
/// k. Constraints act as assignment filters. The consumer, when given,
/// receives each surviving operator in strictly increasing lexicographic
/// order of image arrays.
CountReport enumerate_ops(const CountQuery& q, const OperatorConsumer& emit = nullptr,
                          const EnumerateOptions& opts = {});

// Convenience: the members of DW_w(l) under the query's constraints, in
// lexicographic order.
std::vector<Operator> enumerate_members(const CountQuery& q, const EnumerateOptions& opts = {});

}  // namespace latdiff

#endif  // LATDIFF_ENUMERATE_HPP_
