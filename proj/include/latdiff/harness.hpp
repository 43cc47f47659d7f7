#ifndef LATDIFF_HARNESS_HPP_
#define LATDIFF_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latdiff/enumerate.hpp"
#include "latdiff/formulas.hpp"
#include "latdiff/lattice.hpp"
#include "latdiff/operators.hpp"

namespace latdiff {

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  bool slow = false;
};

// Chains L_1..L_6 (L_7, L_8 slow), quasi-antichains M_2..M_5 (M_6 slow),
// the pentagon N_5 and the Boolean cube B_3.
std::vector<CatalogEntry> default_catalog(bool include_slow);

Lattice pentagon();
Lattice boolean_cube(int dim);

// ---------------------------------------------------------------------------
// Reports

struct VerificationReport {
  std::string theorem_id;
  std::string lattice_desc;
  bool pass = true;
  // Lexicographically smallest operator demonstrating the failure.
  std::optional<Operator> witness;
  // (expected, observed) when a count comparison was involved.
  std::optional<std::pair<Count, Count>> counts;
  std::string note;
};

std::string report_line(const VerificationReport& r);

// Exact set comparison; the witness is the lexicographically smallest
// member of the symmetric difference.
struct SetDiff {
  bool equal = true;
  std::optional<Operator> witness;
};
SetDiff compare_operator_sets(std::vector<Operator> expected, std::vector<Operator> observed);

// ---------------------------------------------------------------------------
// Sampling contract for lattices whose map space exceeds the exhaustive
// budget: kSampleCount images drawn as gen() % n per element from a
// std::mt19937_64 seeded with kSampleSeed.

inline constexpr std::uint64_t kSampleSeed = 0x1A77;
inline constexpr int kSampleCount = 100000;
inline constexpr std::uint64_t kExhaustiveMapLimit = 100000;

// ---------------------------------------------------------------------------
// Verification operations

// DW_{-1} = DW_0 as sets, and every weight-(-1) operator is decreasing.
// Exhaustive over all n^n maps when that count fits the exhaustive budget,
// sampled otherwise.
VerificationReport verify_weight_equivalence(const CatalogEntry& entry);

// DW_0 = { d in DW_1 : d decreasing } as sets.
VerificationReport verify_decreasing_characterization(const CatalogEntry& entry);

// Distributivity (triple check) holds iff every x -> x \/ a map is a
// difference operator; both sides computed independently.
VerificationReport verify_distributivity_characterization(const CatalogEntry& entry);

// Chain count checks: the closed formula against the reference table
// (n <= 10), the closed form against the recurrence for every valid j,
// and, in brute mode, the enumeration totals, the per-top-image counts
// and the lower-bounded variants against their Catalan expressions.
VerificationReport verify_chain_counts(int n, bool brute);

struct QuasiSliceSizes {
  std::size_t derivations = 0;    // d(0) = 0
  std::size_t constant_top = 0;   // d(0) = 1, d(1) = 1
  std::size_t top_to_atom = 0;    // d(0) = 1, d(1) an atom
  std::size_t top_to_zero = 0;    // d(0) = 1, d(1) = 0
  std::size_t atom_valued = 0;    // d(0) an atom
};

// Exact set equality between the enumerated difference operators on the
// n-element quasi-antichain and the materialized family catalog, slice by
// slice of d(0). 4 <= n <= 7.
VerificationReport verify_quasi_classification(int n, QuasiSliceSizes* sizes = nullptr);

std::vector<VerificationReport> verify_supporting_lemmas(const CatalogEntry& entry);

// The named rejected maps (and the two accepted ones) checked literally.
std::vector<VerificationReport> verify_counterexamples();

// ---------------------------------------------------------------------------
// Family materialization

struct NamedOperator {
  std::string name;
  Operator op;
};

// Every family instance of the classification on a quasi-antichain: the
// d(0)=1 families and the per-atom families (the 4-element lattice gets
// its enlarged per-atom list). Derivations are not materialized here;
// callers take them from enumeration.
std::vector<NamedOperator> quasi_family_catalog(const Lattice& m);

// ---------------------------------------------------------------------------
// Structure-lemma checks over an explicit member list (exposed so tests
// can feed corrupted sets).

enum class QuasiLemma {
  equal_middle_images,   // d(0)=1: two distinct middles never share a non-top image
  three_middle_images,   // d(0)=1, size >= 5: at most two middles map into middles
  rest_maps_to_top,      // d(0)=1: besides at most two middles, everything below top maps to 1
  second_image_of_bottom  // d(0) an atom: d(d(0)) is 0 or d(0)
};
std::optional<Operator> find_quasi_lemma_violation(const Lattice& m,
                                                   const std::vector<Operator>& dw1_members,
                                                   QuasiLemma which);

enum class ChainLemma {
  increasing_below_top,     // a_{n-2} <= d(a_{n-2}) forces x <= d(x) below the top
  restriction_equivalence   // membership transfers between L_n and L_{n-1}
};
std::optional<Operator> find_chain_lemma_violation(const Lattice& chain,
                                                   const std::vector<Operator>& dw1_members,
                                                   ChainLemma which);

// ---------------------------------------------------------------------------
// Suites

enum class Suite {
  all,
  weight_equivalence,
  decreasing,
  distributivity,
  chain_counts,
  quasi_classification,
  supporting_lemmas,
  counterexamples
};

std::optional<Suite> suite_from_name(const std::string& name);
std::vector<std::string> suite_names();
std::vector<VerificationReport> run_suite(Suite s, bool slow);

}  // namespace latdiff

#endif  // LATDIFF_HARNESS_HPP_
