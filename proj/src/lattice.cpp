#include "latdiff/lattice.hpp"

#include <algorithm>
#include <queue>

namespace latdiff {

namespace {

std::string pair_str(Elem x, Elem y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

Lattice Lattice::chain(int n) {
  if (n < 1) throw InvalidInput("chain size must be at least 1, got " + std::to_string(n));
  Lattice l;
  l.size_ = n;
  l.meet_.resize(static_cast<size_t>(n) * n);
  l.join_.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      l.meet_[static_cast<size_t>(x) * n + y] = std::min(x, y);
      l.join_[static_cast<size_t>(x) * n + y] = std::max(x, y);
    }
  }
  l.bottom_ = 0;
  l.top_ = n - 1;
  l.labels_.reserve(n);
  for (Elem x = 0; x < n; ++x) l.labels_.push_back("a" + std::to_string(x));
  l.validate();
  return l;
}

Lattice Lattice::quasi_antichain(int m) {
  if (m < 2)
    throw InvalidInput("quasi-antichain needs at least 2 atoms, got " + std::to_string(m) +
                       " (use a chain for fewer)");
  const int n = m + 2;
  Lattice l;
  l.size_ = n;
  l.bottom_ = 0;
  l.top_ = n - 1;
  l.meet_.resize(static_cast<size_t>(n) * n);
  l.join_.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem mv, jv;
      if (x == y) {
        mv = jv = x;
      } else if (x == l.bottom_ || y == l.bottom_) {
        mv = l.bottom_;
        jv = (x == l.bottom_) ? y : x;
      } else if (x == l.top_ || y == l.top_) {
        mv = (x == l.top_) ? y : x;
        jv = l.top_;
      } else {
        // distinct atoms
        mv = l.bottom_;
        jv = l.top_;
      }
      l.meet_[static_cast<size_t>(x) * n + y] = mv;
      l.join_[static_cast<size_t>(x) * n + y] = jv;
    }
  }
  l.labels_.reserve(n);
  l.labels_.push_back("0");
  for (int i = 1; i <= m; ++i) l.labels_.push_back("b" + std::to_string(i));
  l.labels_.push_back("1");
  l.validate();
  return l;
}

Lattice Lattice::from_covers(const PosetSpec& spec) {
  const int n = spec.size;
  if (n < 1) throw InvalidInput("poset size must be at least 1, got " + std::to_string(n));
  if (!spec.labels.empty() && static_cast<int>(spec.labels.size()) != n)
    throw InvalidInput("label count " + std::to_string(spec.labels.size()) +
                       " does not match size " + std::to_string(n));
  for (const auto& [a, b] : spec.covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidInput("cover pair " + pair_str(a, b) + " out of range [0, " +
                         std::to_string(n) + ")");
    if (a == b) throw NotALattice("cycle: element " + std::to_string(a) + " covers itself");
  }

  // strict reachability over cover edges
  std::vector<std::vector<Elem>> up(n);
  for (const auto& [a, b] : spec.covers) up[a].push_back(b);
  std::vector<char> strict(static_cast<size_t>(n) * n, 0);
  for (Elem s = 0; s < n; ++s) {
    std::queue<Elem> q;
    for (Elem t : up[s]) q.push(t);
    while (!q.empty()) {
      Elem t = q.front();
      q.pop();
      if (strict[static_cast<size_t>(s) * n + t]) continue;
      strict[static_cast<size_t>(s) * n + t] = 1;
      for (Elem u : up[t]) q.push(u);
    }
  }
  for (Elem x = 0; x < n; ++x)
    if (strict[static_cast<size_t>(x) * n + x])
      throw NotALattice("cycle through element " + std::to_string(x));

  auto leq = [&](Elem x, Elem y) { return x == y || strict[static_cast<size_t>(x) * n + y]; };

  // unique bottom and top
  std::vector<Elem> minimal, maximal;
  for (Elem x = 0; x < n; ++x) {
    bool has_lower = false, has_upper = false;
    for (Elem y = 0; y < n; ++y) {
      if (y == x) continue;
      if (leq(y, x)) has_lower = true;
      if (leq(x, y)) has_upper = true;
    }
    if (!has_lower) minimal.push_back(x);
    if (!has_upper) maximal.push_back(x);
  }
  if (minimal.size() != 1)
    throw NotALattice("no unique bottom: minimal elements " +
                      std::to_string(minimal[0]) + " and " + std::to_string(minimal[1]));
  if (maximal.size() != 1)
    throw NotALattice("no unique top: maximal elements " +
                      std::to_string(maximal[0]) + " and " + std::to_string(maximal[1]));

  Lattice l;
  l.size_ = n;
  l.bottom_ = minimal[0];
  l.top_ = maximal[0];
  l.meet_.resize(static_cast<size_t>(n) * n);
  l.join_.resize(static_cast<size_t>(n) * n);

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      // greatest lower bound: the unique maximal common lower bound
      std::vector<Elem> glbs, lubs;
      for (Elem z = 0; z < n; ++z) {
        if (leq(z, x) && leq(z, y)) {
          bool maximal_lb = true;
          for (Elem w = 0; w < n; ++w)
            if (w != z && leq(w, x) && leq(w, y) && leq(z, w)) {
              maximal_lb = false;
              break;
            }
          if (maximal_lb) glbs.push_back(z);
        }
        if (leq(x, z) && leq(y, z)) {
          bool minimal_ub = true;
          for (Elem w = 0; w < n; ++w)
            if (w != z && leq(x, w) && leq(y, w) && leq(w, z)) {
              minimal_ub = false;
              break;
            }
          if (minimal_ub) lubs.push_back(z);
        }
      }
      if (glbs.size() != 1)
        throw NotALattice("pair " + pair_str(x, y) + " has no unique greatest lower bound");
      if (lubs.size() != 1)
        throw NotALattice("pair " + pair_str(x, y) + " has no unique least upper bound");
      l.meet_[static_cast<size_t>(x) * n + y] = glbs[0];
      l.meet_[static_cast<size_t>(y) * n + x] = glbs[0];
      l.join_[static_cast<size_t>(x) * n + y] = lubs[0];
      l.join_[static_cast<size_t>(y) * n + x] = lubs[0];
    }
  }

  if (spec.labels.empty()) {
    for (Elem x = 0; x < n; ++x) l.labels_.push_back(std::to_string(x));
  } else {
    l.labels_ = spec.labels;
  }
  l.validate();
  return l;
}

void Lattice::validate() const {
  const int n = size_;
  auto m = [&](Elem x, Elem y) { return meet_[static_cast<size_t>(x) * n + y]; };
  auto j = [&](Elem x, Elem y) { return join_[static_cast<size_t>(x) * n + y]; };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem mv = m(x, y), jv = j(x, y);
      if (mv < 0 || mv >= n || jv < 0 || jv >= n)
        throw NotALattice("table entry out of range at " + pair_str(x, y));
      if (mv != m(y, x)) throw NotALattice("meet not commutative at " + pair_str(x, y));
      if (jv != j(y, x)) throw NotALattice("join not commutative at " + pair_str(x, y));
      if (m(x, j(x, y)) != x) throw NotALattice("absorption x/\\(x\\/y) fails at " + pair_str(x, y));
      if (j(x, m(x, y)) != x) throw NotALattice("absorption x\\/(x/\\y) fails at " + pair_str(x, y));
    }
  for (Elem x = 0; x < n; ++x) {
    if (m(x, x) != x) throw NotALattice("meet not idempotent at " + std::to_string(x));
    if (j(x, x) != x) throw NotALattice("join not idempotent at " + std::to_string(x));
    if (m(bottom_, x) != bottom_) throw NotALattice("bottom law fails at " + std::to_string(x));
    if (j(top_, x) != top_) throw NotALattice("top law fails at " + std::to_string(x));
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z)))
          throw NotALattice("meet not associative at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ", " + std::to_string(z) + ")");
        if (j(j(x, y), z) != j(x, j(y, z)))
          throw NotALattice("join not associative at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ", " + std::to_string(z) + ")");
      }
  // induced order must be antisymmetric with the two bounds unique
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && m(x, y) == x && m(y, x) == y)
        throw NotALattice("order not antisymmetric at " + pair_str(x, y));
}

bool Lattice::is_distributive() const {
  const int n = size_;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

bool Lattice::is_chain() const {
  for (Elem x = 0; x < size_; ++x)
    for (Elem y = x + 1; y < size_; ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

std::vector<Elem> Lattice::atoms() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size_; ++x) {
    if (x == bottom_) continue;
    bool covers_bottom = true;
    for (Elem z = 0; z < size_; ++z)
      if (z != bottom_ && z != x && leq(z, x) && leq(bottom_, z)) {
        covers_bottom = false;
        break;
      }
    if (covers_bottom) out.push_back(x);
  }
  return out;
}

bool Lattice::is_quasi_antichain() const {
  if (size_ < 4) return false;
  for (Elem x = 0; x < size_; ++x) {
    if (x == bottom_ || x == top_) continue;
    for (Elem y = 0; y < size_; ++y) {
      if (y == bottom_ || y == top_ || y == x) continue;
      if (meet(x, y) != bottom_ || join(x, y) != top_) return false;
    }
  }
  return true;
}

std::vector<std::pair<Elem, Elem>> Lattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < size_; ++x)
    for (Elem y = 0; y < size_; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool is_cover = true;
      for (Elem z = 0; z < size_; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) {
          is_cover = false;
          break;
        }
      if (is_cover) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace latdiff
