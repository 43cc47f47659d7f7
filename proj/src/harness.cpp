#include "latdiff/harness.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

namespace latdiff {

namespace {

constexpr std::array<std::uint64_t, 11> kChainReference = {
    0, 1, 4, 17, 73, 316, 1379, 6065, 26870, 119848, 537877};

// Reference totals on quasi-antichains, indexed by lattice size n.
constexpr std::array<std::uint64_t, 12> kQuasiReference = {
    0, 0, 0, 0, 36, 59, 133, 275, 538, 1027, 1959, 3791};

bool image_decreasing(const Lattice& l, std::span<const Elem> im) {
  for (Elem x = 0; x < l.size(); ++x)
    if (!l.leq(im[x], x)) return false;
  return true;
}

bool image_increasing(const Lattice& l, std::span<const Elem> im) {
  for (Elem x = 0; x < l.size(); ++x)
    if (!l.leq(x, im[x])) return false;
  return true;
}

bool image_isotone(const Lattice& l, std::span<const Elem> im) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (l.leq(x, y) && !l.leq(im[x], im[y])) return false;
  return true;
}

// Visits every image array with the given entries pinned, in ascending
// lexicographic order, until the visitor returns false.
template <class F>
void scan_maps(int n, const std::vector<std::pair<Elem, Elem>>& pinned, F&& visit) {
  std::vector<Elem> image(static_cast<size_t>(n), 0);
  std::vector<char> is_pinned(static_cast<size_t>(n), 0);
  for (const auto& [x, v] : pinned) {
    image[x] = v;
    is_pinned[x] = 1;
  }
  std::vector<int> free_pos;
  for (int x = 0; x < n; ++x)
    if (!is_pinned[x]) free_pos.push_back(x);
  for (;;) {
    if (!visit(std::span<const Elem>(image))) return;
    int i = static_cast<int>(free_pos.size()) - 1;
    for (; i >= 0; --i) {
      if (++image[free_pos[i]] < n) break;
      image[free_pos[i]] = 0;
    }
    if (i < 0) return;
  }
}

Count map_space(int n) {
  Count space = 1;
  for (int i = 0; i < n; ++i) space *= static_cast<unsigned>(n);
  return space;
}

std::vector<Operator> members_of(const Lattice& l, Weight w) {
  return enumerate_members(CountQuery(l, w));
}

void fail_with_witness(VerificationReport& r, const Operator& op, const std::string& note) {
  r.pass = false;
  if (!r.witness) r.witness = op;
  if (r.note.empty()) r.note = note;
}

void fail_with_counts(VerificationReport& r, Count expected, Count observed,
                      const std::string& note) {
  r.pass = false;
  if (!r.counts) r.counts = {expected, observed};
  if (r.note.empty()) r.note = note;
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog

Lattice pentagon() {
  PosetSpec spec;
  spec.size = 5;
  spec.covers = {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  spec.labels = {"0", "a", "b", "c", "1"};
  return Lattice::from_covers(spec);
}

Lattice boolean_cube(int dim) {
  if (dim < 1 || dim > 4) throw InvalidInput("boolean_cube supports 1 <= dim <= 4");
  PosetSpec spec;
  spec.size = 1 << dim;
  for (int x = 0; x < spec.size; ++x)
    for (int b = 0; b < dim; ++b)
      if (!(x & (1 << b))) spec.covers.emplace_back(x, x | (1 << b));
  return Lattice::from_covers(spec);
}

std::vector<CatalogEntry> default_catalog(bool include_slow) {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 8; ++n) {
    const bool slow = n > 6;
    if (slow && !include_slow) continue;
    out.push_back({"L_" + std::to_string(n), Lattice::chain(n), slow});
  }
  for (int m = 2; m <= 6; ++m) {
    const bool slow = m > 5;
    if (slow && !include_slow) continue;
    out.push_back({"M_" + std::to_string(m), Lattice::quasi_antichain(m), slow});
  }
  out.push_back({"N_5", pentagon(), false});
  out.push_back({"B_3", boolean_cube(3), false});
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::string report_line(const VerificationReport& r) {
  std::string line = r.pass ? "[PASS] " : "[FAIL] ";
  line += r.theorem_id;
  if (!r.lattice_desc.empty()) line += " " + r.lattice_desc;
  if (r.counts)
    line += " expected=" + count_to_string(r.counts->first) +
            " observed=" + count_to_string(r.counts->second);
  if (r.witness) line += " witness=[" + r.witness->to_string() + "]";
  if (!r.note.empty()) line += " | " + r.note;
  return line;
}

SetDiff compare_operator_sets(std::vector<Operator> expected, std::vector<Operator> observed) {
  std::sort(expected.begin(), expected.end());
  std::sort(observed.begin(), observed.end());
  SetDiff diff;
  size_t i = 0, j = 0;
  while (i < expected.size() || j < observed.size()) {
    if (i < expected.size() && j < observed.size() && expected[i] == observed[j]) {
      ++i;
      ++j;
      continue;
    }
    diff.equal = false;
    if (j >= observed.size() || (i < expected.size() && expected[i] < observed[j]))
      diff.witness = expected[i];
    else
      diff.witness = observed[j];
    return diff;
  }
  return diff;
}

// ---------------------------------------------------------------------------
// Weight equivalence and characterizations

VerificationReport verify_weight_equivalence(const CatalogEntry& entry) {
  VerificationReport r;
  r.theorem_id = "thm-2.3";
  r.lattice_desc = entry.name;
  const Lattice& l = entry.lattice;
  const int n = l.size();

  Count seen0 = 0, seen_minus = 0;
  auto examine = [&](std::span<const Elem> im) {
    const bool w0 = check_weight(l, im, Weight::zero);
    const bool wm = check_weight(l, im, Weight::minus_one);
    if (w0) ++seen0;
    if (wm) ++seen_minus;
    if (w0 != wm) {
      fail_with_witness(r, Operator(std::vector<Elem>(im.begin(), im.end())),
                        "weight 0 and weight -1 memberships disagree");
      return false;
    }
    if (wm && !image_decreasing(l, im)) {
      fail_with_witness(r, Operator(std::vector<Elem>(im.begin(), im.end())),
                        "weight -1 operator is not decreasing");
      return false;
    }
    return true;
  };

  if (map_space(n) <= kExhaustiveMapLimit) {
    scan_maps(n, {}, examine);
    r.note = r.note.empty() ? "exhaustive" : r.note;
  } else {
    std::mt19937_64 gen(kSampleSeed);
    std::vector<Elem> image(static_cast<size_t>(n));
    for (int s = 0; s < kSampleCount; ++s) {
      for (int x = 0; x < n; ++x) image[x] = static_cast<Elem>(gen() % n);
      if (!examine(std::span<const Elem>(image))) break;
    }
    if (r.note.empty())
      r.note = "sampled " + std::to_string(kSampleCount) + " maps, seed 0x1a77";
  }
  if (r.pass) r.counts = {seen0, seen_minus};
  return r;
}

VerificationReport verify_decreasing_characterization(const CatalogEntry& entry) {
  VerificationReport r;
  r.theorem_id = "prop-2.6.1";
  r.lattice_desc = entry.name;
  const Lattice& l = entry.lattice;
  const std::vector<Operator> derivations = members_of(l, Weight::zero);
  std::vector<Operator> decreasing_diff;
  for (const Operator& d : members_of(l, Weight::plus_one))
    if (check_property(l, d, OpProperty::decreasing)) decreasing_diff.push_back(d);
  r.counts = {Count(derivations.size()), Count(decreasing_diff.size())};
  const SetDiff diff = compare_operator_sets(derivations, decreasing_diff);
  if (!diff.equal) {
    r.pass = false;
    r.witness = diff.witness;
    r.note = "derivations differ from decreasing difference operators";
  }
  return r;
}

VerificationReport verify_distributivity_characterization(const CatalogEntry& entry) {
  VerificationReport r;
  r.theorem_id = "thm-2.14";
  r.lattice_desc = entry.name;
  const Lattice& l = entry.lattice;
  const bool distributive = l.is_distributive();
  bool all_psi = true;
  std::optional<Operator> failing_psi;
  for (Elem a = 0; a < l.size(); ++a) {
    Operator psi = make_named(l, {FamilyKind::psi, {a}});
    if (!check_weight(l, psi, Weight::plus_one)) {
      all_psi = false;
      failing_psi = psi;
      break;
    }
  }
  r.note = std::string("distributive=") + (distributive ? "true" : "false") +
           " psi-family=" + (all_psi ? "member" : "non-member");
  if (distributive != all_psi) {
    r.pass = false;
    r.witness = failing_psi;
    if (!r.witness) r.counts = {Count(distributive ? 1 : 0), Count(all_psi ? 1 : 0)};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Chain counts

VerificationReport verify_chain_counts(int n, bool brute) {
  VerificationReport r;
  r.theorem_id = "thm-3.6";
  r.lattice_desc = "L_" + std::to_string(n);
  const Count formula = chain_total(n);

  if (n <= 10 && formula != Count(kChainReference[n])) {
    fail_with_counts(r, Count(kChainReference[n]), formula, "formula vs reference table");
    return r;
  }
  for (int j = 0; j <= n - 1; ++j) {
    const Count a = omega_top_formula(n, j);
    const Count b = omega_recurrence(n, j);
    if (a != b) {
      fail_with_counts(r, a, b, "closed form vs recurrence at j=" + std::to_string(j));
      return r;
    }
  }
  if (!brute) {
    r.note = "formula";
    r.counts = {formula, formula};
    return r;
  }

  const Lattice l = Lattice::chain(n);
  CountQuery q{l, Weight::plus_one, {}, {}};
  const Count total = enumerate_ops(q).count;
  if (total != formula) {
    fail_with_counts(r, formula, total, "enumeration vs closed formula");
    return r;
  }
  for (int j = 0; j <= n - 1; ++j) {
    CountQuery qj{l, Weight::plus_one, {{n - 1, j}}, {}};
    const Count wj = enumerate_ops(qj).count;
    if (j >= n - 2 && wj != catalan(n)) {
      fail_with_counts(r, catalan(n), wj, "omega at j=" + std::to_string(j));
      return r;
    }
    if (j == n - 3 && wj != catalan(n) + catalan(n - 1)) {
      fail_with_counts(r, catalan(n) + catalan(n - 1), wj, "omega at j=n-3");
      return r;
    }
    if (wj != omega_top_formula(n, j)) {
      fail_with_counts(r, omega_top_formula(n, j), wj,
                       "omega closed form at j=" + std::to_string(j));
      return r;
    }
    if (n >= 2) {
      CountQuery qa{l, Weight::plus_one, {{n - 1, j}}, {{n - 2, n - 2}}};
      const Count aj = enumerate_ops(qa).count;
      if (aj != catalan(n)) {
        fail_with_counts(r, catalan(n), aj, "lower-bounded slice at j=" + std::to_string(j));
        return r;
      }
    }
  }
  r.note = "brute";
  r.counts = {formula, total};
  return r;
}

// ---------------------------------------------------------------------------
// Quasi-antichain classification

std::vector<NamedOperator> quasi_family_catalog(const Lattice& m) {
  if (!m.is_quasi_antichain())
    throw InvalidInput("family catalog requires a quasi-antichain lattice");
  const int n = m.size();
  const Elem bot = m.bottom();
  const Elem top = m.top();
  const std::vector<Elem> atoms = m.atoms();
  auto lbl = [&m](Elem x) { return m.label(x); };

  std::vector<NamedOperator> out;
  const Operator c1 = Operator::constant(n, top);
  out.push_back({"C_(1)", c1});
  out.push_back({"(C_(1))^0", modify_at_top(m, c1, bot)});
  for (Elem u : atoms) out.push_back({"(C_(1))^" + lbl(u), modify_at_top(m, c1, u)});

  for (Elem b : atoms)
    for (Elem u : atoms) {
      if (u == b) continue;
      for (Elem v : atoms) {
        if (v == u) continue;
        out.push_back({"eta(" + lbl(b) + ";" + lbl(u) + "->" + lbl(v) + ")",
                       make_named(m, {FamilyKind::eta, {b, u, v}})});
      }
    }
  if (n >= 5)
    for (Elem b : atoms)
      for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = i + 1; j < atoms.size(); ++j) {
          const Elem u = atoms[i], v = atoms[j];
          if (u == b || v == b) continue;
          out.push_back({"gamma(" + lbl(b) + ";" + lbl(u) + "<->" + lbl(v) + ")",
                         make_named(m, {FamilyKind::gamma, {b, u, v}})});
        }
  for (Elem u : atoms)
    for (Elem v : atoms) {
      if (u == v) continue;
      out.push_back({"theta(" + lbl(u) + "->" + lbl(v) + ")",
                     make_named(m, {FamilyKind::theta, {u, v}})});
    }
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t j = i + 1; j < atoms.size(); ++j)
      out.push_back({"alpha(" + lbl(atoms[i]) + "<->" + lbl(atoms[j]) + ")",
                     make_named(m, {FamilyKind::alpha, {atoms[i], atoms[j]}})});

  for (size_t ai = 0; ai < atoms.size(); ++ai) {
    const Elem a = atoms[ai];
    const Operator ca = Operator::constant(n, a);
    out.push_back({"C_(" + lbl(a) + ")", ca});
    out.push_back({"(C_(" + lbl(a) + "))^0", modify_at_top(m, ca, bot)});
    out.push_back({"lambda(" + lbl(a) + ")", make_named(m, {FamilyKind::lambda_a, {a}})});
    if (n == 4) {
      const Operator psi = make_named(m, {FamilyKind::psi, {a}});
      out.push_back({"psi(" + lbl(a) + ")", psi});
      out.push_back({"(psi(" + lbl(a) + "))^0", modify_at_top(m, psi, bot)});
      for (Elem u : atoms)
        out.push_back({"(psi(" + lbl(a) + "))^" + lbl(u), modify_at_top(m, psi, u)});
      const FamilyKind phi_kind = (ai == 0) ? FamilyKind::phi_a : FamilyKind::phi_b;
      const std::string phi_name = (ai == 0) ? "Phi_a" : "Phi_b";
      const Operator phi = make_named(m, {phi_kind, {}});
      out.push_back({phi_name, phi});
      out.push_back({"(" + phi_name + ")^0", modify_at_top(m, phi, bot)});
    }
  }
  return out;
}

VerificationReport verify_quasi_classification(int n, QuasiSliceSizes* sizes) {
  if (n < 4 || n > 7)
    throw InvalidInput("quasi classification is checked exhaustively for 4 <= n <= 7");
  VerificationReport r;
  r.theorem_id = "thm-4.14";
  r.lattice_desc = "M_" + std::to_string(n - 2);
  const Lattice m = Lattice::quasi_antichain(n - 2);
  const Elem bot = m.bottom();
  const Elem top = m.top();

  const std::vector<Operator> members1 = members_of(m, Weight::plus_one);
  const std::vector<Operator> members0 = members_of(m, Weight::zero);

  std::vector<std::vector<Operator>> slice(static_cast<size_t>(n));
  for (const Operator& d : members1) slice[d(bot)].push_back(d);

  // materialized families, grouped by the image of the bottom
  std::vector<std::vector<Operator>> family_slice(static_cast<size_t>(n));
  std::vector<NamedOperator> families = quasi_family_catalog(m);
  {
    std::vector<Operator> all;
    for (const NamedOperator& f : families) {
      family_slice[f.op(bot)].push_back(f.op);
      all.push_back(f.op);
    }
    std::sort(all.begin(), all.end());
    const auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end())
      fail_with_witness(r, *dup, "duplicate operator in the family materialization");
  }

  // d(0) = 0 slice coincides with the derivations
  {
    const SetDiff diff = compare_operator_sets(members0, slice[bot]);
    if (!diff.equal)
      fail_with_witness(r, *diff.witness, "d(0)=0 slice differs from the derivations");
  }
  // d(0) = 1 slice equals the materialized top families
  {
    const SetDiff diff = compare_operator_sets(family_slice[top], slice[top]);
    if (!diff.equal)
      fail_with_witness(r, *diff.witness, "d(0)=1 slice differs from the family union");
  }
  // each atom slice equals its materialized family list
  for (Elem a : m.atoms()) {
    const SetDiff diff = compare_operator_sets(family_slice[a], slice[a]);
    if (!diff.equal)
      fail_with_witness(r, *diff.witness,
                        "d(0)=" + m.label(a) + " slice differs from the family list");
  }

  const Count expected_total = (n == 4) ? Count(36) : quasi_total(n);
  if (Count(members1.size()) != expected_total)
    fail_with_counts(r, expected_total, Count(members1.size()), "total vs closed formula");
  if (n <= 11 && Count(members1.size()) != Count(kQuasiReference[n]))
    fail_with_counts(r, Count(kQuasiReference[n]), Count(members1.size()),
                     "total vs reference table");

  QuasiSliceSizes s;
  s.derivations = slice[bot].size();
  for (const Operator& d : slice[top]) {
    if (d(top) == top)
      ++s.constant_top;
    else if (d(top) == bot)
      ++s.top_to_zero;
    else
      ++s.top_to_atom;
  }
  for (Elem a : m.atoms()) s.atom_valued += slice[a].size();

  if (n >= 5) {
    const Count natoms = static_cast<unsigned>(n - 2);
    const Count expect_top_atom = natoms * (1 + Count(static_cast<unsigned>((n - 3) * (n - 3))) +
                                            binomial(n - 3, 2));
    const Count expect_top_zero =
        1 + Count(static_cast<unsigned>((n - 2) * (n - 3))) + binomial(n - 2, 2);
    if (Count(s.derivations) != quasi_derivation_total(n))
      fail_with_counts(r, quasi_derivation_total(n), Count(s.derivations), "derivation slice");
    if (s.constant_top != 1)
      fail_with_counts(r, 1, Count(s.constant_top), "constant-top slice");
    if (Count(s.top_to_atom) != expect_top_atom)
      fail_with_counts(r, expect_top_atom, Count(s.top_to_atom), "top-to-atom slice");
    if (Count(s.top_to_zero) != expect_top_zero)
      fail_with_counts(r, expect_top_zero, Count(s.top_to_zero), "top-to-zero slice");
    if (Count(s.atom_valued) != 3 * Count(static_cast<unsigned>(n - 2)))
      fail_with_counts(r, 3 * Count(static_cast<unsigned>(n - 2)), Count(s.atom_valued),
                       "atom-valued slice");
  } else {
    const size_t top_slice = s.constant_top + s.top_to_atom + s.top_to_zero;
    if (s.derivations != 9)
      fail_with_counts(r, 9, Count(s.derivations), "derivation slice of nine");
    if (top_slice != 9) fail_with_counts(r, 9, Count(top_slice), "d(0)=1 slice of nine");
    for (Elem a : m.atoms())
      if (slice[a].size() != 9)
        fail_with_counts(r, 9, Count(slice[a].size()), "atom slice of nine");
  }

  if (r.pass) {
    r.counts = {expected_total, Count(members1.size())};
    if (n == 4) {
      r.note = "slices by d(0): 9/9/9/9 = 36";
    } else {
      r.note = std::to_string(s.derivations) + " + " + std::to_string(s.constant_top) + " + " +
               std::to_string(s.top_to_atom) + " + " + std::to_string(s.top_to_zero) + " + " +
               std::to_string(s.atom_valued) + " = " + std::to_string(members1.size());
    }
  }
  if (sizes) *sizes = s;
  return r;
}

// ---------------------------------------------------------------------------
// Supporting lemmas

std::optional<Operator> find_quasi_lemma_violation(const Lattice& m,
                                                   const std::vector<Operator>& dw1_members,
                                                   QuasiLemma which) {
  const Elem bot = m.bottom();
  const Elem top = m.top();
  auto middle = [&](Elem x) { return x != bot && x != top; };

  for (const Operator& d : dw1_members) {
    switch (which) {
      case QuasiLemma::equal_middle_images: {
        if (d(bot) != top) break;
        for (Elem u = 0; u < m.size(); ++u) {
          if (!middle(u)) continue;
          for (Elem v = u + 1; v < m.size(); ++v)
            if (middle(v) && d(u) == d(v) && d(u) != top) return d;
        }
        break;
      }
      case QuasiLemma::three_middle_images: {
        if (d(bot) != top) break;
        int with_middle_image = 0;
        for (Elem u = 0; u < m.size(); ++u)
          if (middle(u) && middle(d(u))) ++with_middle_image;
        if (with_middle_image >= 3) return d;
        break;
      }
      case QuasiLemma::rest_maps_to_top: {
        if (d(bot) != top) break;
        std::vector<Elem> carriers;
        for (Elem u = 0; u < m.size(); ++u)
          if (middle(u) && middle(d(u))) carriers.push_back(u);
        if (carriers.size() > 2) return d;
        for (Elem y = 0; y < m.size(); ++y) {
          if (y == top) continue;
          if (std::find(carriers.begin(), carriers.end(), y) != carriers.end()) continue;
          if (d(y) != top) return d;
        }
        break;
      }
      case QuasiLemma::second_image_of_bottom: {
        if (!middle(d(bot))) break;
        const Elem second = d(d(bot));
        if (second != bot && second != d(bot)) return d;
        break;
      }
    }
  }
  return std::nullopt;
}

std::optional<Operator> find_chain_lemma_violation(const Lattice& chain,
                                                   const std::vector<Operator>& dw1_members,
                                                   ChainLemma which) {
  const int n = chain.size();
  if (n < 3) return std::nullopt;
  switch (which) {
    case ChainLemma::increasing_below_top: {
      for (const Operator& d : dw1_members) {
        if (!chain.leq(n - 2, d(n - 2))) continue;
        for (Elem x = 0; x < n - 1; ++x)
          if (!chain.leq(x, d(x))) return d;
      }
      return std::nullopt;
    }
    case ChainLemma::restriction_equivalence: {
      const Lattice sub = Lattice::chain(n - 1);
      // members satisfying the hypothesis restrict to members
      for (const Operator& d : dw1_members) {
        const Elem at_top = d(n - 1);
        const Elem below = d(n - 2);
        if (at_top == n - 1 || !chain.leq(at_top, below) || below > n - 3) continue;
        std::vector<Elem> restricted(d.image().begin(), d.image().end() - 1);
        for (Elem v : restricted)
          if (v > n - 2) return d;  // restriction leaves the subchain
        if (!check_weight(sub, std::span<const Elem>(restricted), Weight::plus_one)) return d;
      }
      // members of the subchain with small top image extend to members
      for (const Operator& e : members_of(sub, Weight::plus_one)) {
        const Elem et = e(n - 2);
        if (et > n - 3) continue;
        std::vector<Elem> extended(e.image());
        extended.push_back(0);
        for (Elem j = 0; j <= et; ++j) {
          extended[static_cast<size_t>(n) - 1] = j;
          if (!check_weight(chain, std::span<const Elem>(extended), Weight::plus_one))
            return Operator(extended);
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

VerificationReport lemma_report(const std::string& id, const std::string& desc,
                                const std::optional<Operator>& violation) {
  VerificationReport r;
  r.theorem_id = id;
  r.lattice_desc = desc;
  if (violation) {
    r.pass = false;
    r.witness = violation;
  }
  return r;
}

// All maps pinned at (bottom, top) and (top, top) are difference operators
// exactly when constant at the top.
VerificationReport check_constant_top_characterization(const CatalogEntry& entry) {
  const Lattice& l = entry.lattice;
  const int n = l.size();
  std::optional<Operator> violation;
  scan_maps(n, {{l.bottom(), l.top()}, {l.top(), l.top()}},
            [&](std::span<const Elem> im) {
              bool constant_top = true;
              for (Elem x = 0; x < n; ++x)
                if (im[x] != l.top()) {
                  constant_top = false;
                  break;
                }
              if (check_weight(l, im, Weight::plus_one) != constant_top) {
                violation = Operator(std::vector<Elem>(im.begin(), im.end()));
                return false;
              }
              return true;
            });
  return lemma_report("prop-2.8", entry.name, violation);
}

// On a chain with the bottom sent to the top, membership means "top
// everywhere except possibly at the top".
VerificationReport check_tau_characterization(const CatalogEntry& entry) {
  const Lattice& l = entry.lattice;
  const int n = l.size();
  std::optional<Operator> violation;
  scan_maps(n, {{l.bottom(), l.top()}}, [&](std::span<const Elem> im) {
    bool tau_shape = true;
    for (Elem x = 0; x < n - 1; ++x)
      if (im[x] != l.top()) {
        tau_shape = false;
        break;
      }
    if (check_weight(l, im, Weight::plus_one) != tau_shape) {
      violation = Operator(std::vector<Elem>(im.begin(), im.end()));
      return false;
    }
    return true;
  });
  return lemma_report("prop-2.9", entry.name, violation);
}

// On a chain with the top fixed, membership means increasing and isotone.
VerificationReport check_chain_fixed_top_characterization(const CatalogEntry& entry) {
  const Lattice& l = entry.lattice;
  const int n = l.size();
  std::optional<Operator> violation;
  scan_maps(n, {{l.top(), l.top()}}, [&](std::span<const Elem> im) {
    const bool expected = image_increasing(l, im) && image_isotone(l, im);
    if (check_weight(l, im, Weight::plus_one) != expected) {
      violation = Operator(std::vector<Elem>(im.begin(), im.end()));
      return false;
    }
    return true;
  });
  return lemma_report("cor-2.11p", entry.name, violation);
}

}  // namespace

std::vector<VerificationReport> verify_supporting_lemmas(const CatalogEntry& entry) {
  const Lattice& l = entry.lattice;
  const int n = l.size();
  std::vector<VerificationReport> out;

  out.push_back(check_constant_top_characterization(entry));

  if (l.is_chain() && n >= 2) {
    out.push_back(check_tau_characterization(entry));
    out.push_back(check_chain_fixed_top_characterization(entry));
    if (n >= 3) {
      const std::vector<Operator> members = members_of(l, Weight::plus_one);
      out.push_back(lemma_report(
          "lemma-3.2", entry.name,
          find_chain_lemma_violation(l, members, ChainLemma::increasing_below_top)));
      out.push_back(lemma_report(
          "lemma-3.4", entry.name,
          find_chain_lemma_violation(l, members, ChainLemma::restriction_equivalence)));
    }
  }

  if (l.is_quasi_antichain()) {
    const std::vector<Operator> members = members_of(l, Weight::plus_one);
    out.push_back(lemma_report(
        "lemma-4.4", entry.name,
        find_quasi_lemma_violation(l, members, QuasiLemma::equal_middle_images)));
    if (n >= 5)
      out.push_back(lemma_report(
          "lemma-4.6", entry.name,
          find_quasi_lemma_violation(l, members, QuasiLemma::three_middle_images)));
    out.push_back(lemma_report(
        "lemma-4.9", entry.name,
        find_quasi_lemma_violation(l, members, QuasiLemma::rest_maps_to_top)));
    out.push_back(lemma_report(
        "lemma-4.10", entry.name,
        find_quasi_lemma_violation(l, members, QuasiLemma::second_image_of_bottom)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counterexamples

std::vector<VerificationReport> verify_counterexamples() {
  std::vector<VerificationReport> out;
  const Lattice m2 = Lattice::quasi_antichain(2);
  const Lattice m3 = Lattice::quasi_antichain(3);
  const Lattice l3 = Lattice::chain(3);

  auto expect = [&out](const std::string& id, const std::string& desc, const Lattice& l,
                       const Operator& op, bool should_be_member) {
    VerificationReport r;
    r.theorem_id = id;
    r.lattice_desc = desc;
    const bool member = check_weight(l, op, Weight::plus_one);
    r.note = std::string(member ? "accepted" : "rejected") + " [" + op.to_string() + "]";
    if (member != should_be_member) {
      r.pass = false;
      r.witness = op;
    }
    out.push_back(std::move(r));
  };

  expect("lemma-4.7/Theta", "M_2", m2,
         make_named(m2, {FamilyKind::theta_m2_counterexample, {}}), false);
  expect("example-2.13/psi", "M_3", m3, make_named(m3, {FamilyKind::psi, {1}}), false);
  expect("prop-3.8/chain-swap", "L_3", l3, Operator({2, 1, 0}), false);

  {
    // x below the first atom goes to it, everything else to the second
    std::vector<Elem> im(5);
    for (Elem x = 0; x < 5; ++x) im[x] = m3.leq(x, 1) ? 1 : 2;
    expect("prop-3.8/incomparable", "M_3", m3, Operator(std::move(im)), false);
  }

  expect("prop-2.15/C0-top", "L_3", l3,
         modify_at_top(l3, Operator::constant(3, 0), l3.top()), false);

  {
    // meet-translation by the first atom, then the two chain constructions
    std::vector<Elem> base(5), saturated(5), floored(5);
    for (Elem x = 0; x < 5; ++x) base[x] = m3.meet(x, 1);
    const Elem dtop = base[m3.top()];
    for (Elem x = 0; x < 5; ++x) {
      saturated[x] = m3.leq(x, dtop) ? base[x] : m3.top();
      floored[x] = m3.leq(x, dtop) ? dtop : base[x];
    }
    expect("prop-2.16/saturate-M3", "M_3", m3, Operator(std::move(saturated)), false);
    expect("prop-2.16/floor-M3", "M_3", m3, Operator(std::move(floored)), false);
  }

  expect("lemma-4.7/Phi_a", "M_2", m2, make_named(m2, {FamilyKind::phi_a, {}}), true);
  expect("lemma-4.7/Phi_b", "M_2", m2, make_named(m2, {FamilyKind::phi_b, {}}), true);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "weight-equivalence") return Suite::weight_equivalence;
  if (name == "decreasing") return Suite::decreasing;
  if (name == "distributivity") return Suite::distributivity;
  if (name == "chain-counts") return Suite::chain_counts;
  if (name == "quasi-classification") return Suite::quasi_classification;
  if (name == "supporting-lemmas") return Suite::supporting_lemmas;
  if (name == "counterexamples") return Suite::counterexamples;
  return std::nullopt;
}

std::vector<std::string> suite_names() {
  return {"all",           "weight-equivalence",   "decreasing",
          "distributivity", "chain-counts",        "quasi-classification",
          "supporting-lemmas", "counterexamples"};
}

std::vector<VerificationReport> run_suite(Suite s, bool slow) {
  std::vector<VerificationReport> out;
  const std::vector<CatalogEntry> catalog = default_catalog(slow);

  auto run = [&](Suite which) {
    switch (which) {
      case Suite::weight_equivalence:
        for (const CatalogEntry& e : catalog) out.push_back(verify_weight_equivalence(e));
        break;
      case Suite::decreasing:
        for (const CatalogEntry& e : catalog)
          out.push_back(verify_decreasing_characterization(e));
        break;
      case Suite::distributivity:
        for (const CatalogEntry& e : catalog)
          out.push_back(verify_distributivity_characterization(e));
        break;
      case Suite::chain_counts: {
        const int brute_max = slow ? 8 : 6;
        for (int n = 1; n <= 10; ++n) out.push_back(verify_chain_counts(n, n <= brute_max));
        break;
      }
      case Suite::quasi_classification: {
        const int max_n = slow ? 7 : 6;
        for (int n = 4; n <= max_n; ++n) out.push_back(verify_quasi_classification(n));
        break;
      }
      case Suite::supporting_lemmas:
        for (const CatalogEntry& e : catalog) {
          auto reports = verify_supporting_lemmas(e);
          out.insert(out.end(), reports.begin(), reports.end());
        }
        break;
      case Suite::counterexamples: {
        auto reports = verify_counterexamples();
        out.insert(out.end(), reports.begin(), reports.end());
        break;
      }
      case Suite::all:
        break;
    }
  };

  if (s == Suite::all) {
    for (Suite each : {Suite::weight_equivalence, Suite::decreasing, Suite::distributivity,
                       Suite::chain_counts, Suite::quasi_classification,
                       Suite::supporting_lemmas, Suite::counterexamples})
      run(each);
  } else {
    run(s);
  }
  return out;
}

}  // namespace latdiff
