#ifndef LATDIFF_LATTICE_HPP_
#define LATDIFF_LATTICE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "latdiff/errors.hpp"

namespace latdiff {

// Element of a lattice, identified by its dense index in [0, size).
using Elem = int;

// Input description of a finite poset by its Hasse diagram.
struct PosetSpec {
  int size = 0;
  // (a, b) means a is covered by b. Transitive edges are tolerated.
  std::vector<std::pair<Elem, Elem>> covers;
  // Either empty or one display name per element.
  std::vector<std::string> labels;
};

/// A bounded finite lattice with precomputed meet/join tables.
///
/// Values are immutable after construction and safe to share across
/// concurrent readers. Every constructor runs the full axiom check
/// (commutativity, associativity, idempotency, absorption, bounds), so a
/// Lattice value is valid by construction.
class Lattice {
 public:
  // The n-element chain a_0 < a_1 < ... < a_{n-1}. Meet is min, join is max.
  static Lattice chain(int n);

  // The quasi-antichain with m >= 2 atoms: bottom, m pairwise-incomparable
  // atoms, top. Size m + 2. Index 0 is the bottom, 1..m the atoms, m + 1
  // the top.
  static Lattice quasi_antichain(int m);

  // Builds a lattice from cover relations. Throws NotALattice when the
  // input has a cycle, lacks a unique bottom or top, or some pair has no
  // unique greatest lower bound / least upper bound. Never completes a
  // non-lattice silently.
  static Lattice from_covers(const PosetSpec& spec);

  int size() const { return size_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  Elem meet(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return meet_[static_cast<size_t>(x) * size_ + y];
  }
  Elem join(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return join_[static_cast<size_t>(x) * size_ + y];
  }

  // The order induced by meet: x <= y iff x /\ y = x.
  bool leq(Elem x, Elem y) const { return meet(x, y) == x; }

  // x /\ (y \/ z) = (x /\ y) \/ (x /\ z) for every triple, checked
  // exhaustively in O(n^3).
  bool is_distributive() const;

  bool is_chain() const;

  // Elements covering the bottom.
  std::vector<Elem> atoms() const;

  // True when the lattice is a bounded lattice of size >= 4 whose
  // non-extremal elements are pairwise incomparable atoms.
  bool is_quasi_antichain() const;

  // The Hasse diagram: pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  const std::string& label(Elem x) const {
    check_index(x);
    return labels_[x];
  }

  // Flattened n*n tables, row-major: table[x * n + y].
  const std::vector<Elem>& meet_table() const { return meet_; }
  const std::vector<Elem>& join_table() const { return join_; }

  bool operator==(const Lattice& other) const {
    return size_ == other.size_ && meet_ == other.meet_ && join_ == other.join_;
  }

 private:
  Lattice() = default;

  void check_index(Elem x) const {
    if (x < 0 || x >= size_)
      throw InvalidInput("element index " + std::to_string(x) +
                         " out of range [0, " + std::to_string(size_) + ")");
  }

  // Full axiom check; throws NotALattice naming the first violation.
  void validate() const;

  int size_ = 0;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> labels_;
};

}  // namespace latdiff

#endif  // LATDIFF_LATTICE_HPP_
