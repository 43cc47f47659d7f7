#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "latdiff/harness.hpp"
#include "latdiff/operators.hpp"

using namespace latdiff;

namespace {

// Visits every self-map on n elements, ascending lexicographically.
template <class F>
void all_maps(int n, F&& f) {
  std::vector<Elem> image(static_cast<size_t>(n), 0);
  for (;;) {
    f(std::span<const Elem>(image));
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++image[i] < n) break;
      image[i] = 0;
    }
    if (i < 0) return;
  }
}

std::vector<Lattice> small_fixtures() {
  std::vector<Lattice> out;
  for (int n = 1; n <= 5; ++n) out.push_back(Lattice::chain(n));
  out.push_back(Lattice::quasi_antichain(2));
  out.push_back(Lattice::quasi_antichain(3));
  out.push_back(pentagon());
  return out;
}

Operator op(std::vector<Elem> image) { return Operator(std::move(image)); }

}  // namespace

TEST_CASE("operator basics") {
  const Operator d = op({1, 0, 3, 2});
  CHECK(d.size() == 4);
  CHECK(d(2) == 3);
  CHECK(d.to_string() == "1 0 3 2");
  CHECK(Operator::identity(3).image() == std::vector<Elem>{0, 1, 2});
  CHECK(Operator::constant(3, 1).image() == std::vector<Elem>{1, 1, 1});
  CHECK_THROWS_AS(op({0, 5}), InvalidInput);
  CHECK_THROWS_AS(Operator::constant(3, 3), InvalidInput);
  CHECK(op({0, 1}) < op({1, 0}));
}

TEST_CASE("weight parsing") {
  CHECK(weight_from_int(0) == Weight::zero);
  CHECK(weight_from_int(1) == Weight::plus_one);
  CHECK(weight_from_int(-1) == Weight::minus_one);
  CHECK(weight_to_int(Weight::minus_one) == -1);
  CHECK_THROWS_AS(weight_from_int(2), InvalidInput);
}

TEST_CASE("check_weight on the named examples") {
  const Lattice m3 = Lattice::quasi_antichain(3);
  const Operator psi_b1 = make_named(m3, {FamilyKind::psi, {1}});
  CHECK(psi_b1.image() == std::vector<Elem>{1, 1, 4, 4, 4});
  CHECK_FALSE(check_weight(m3, psi_b1, Weight::plus_one));

  const Lattice m2 = Lattice::quasi_antichain(2);
  const Operator theta = make_named(m2, {FamilyKind::theta_m2_counterexample, {}});
  CHECK(theta.image() == std::vector<Elem>{1, 0, 1, 2});
  CHECK_FALSE(check_weight(m2, theta, Weight::plus_one));

  for (const Lattice& l : small_fixtures()) {
    for (Elem a = 0; a < l.size(); ++a)
      CHECK(check_weight(l, Operator::constant(l.size(), a), Weight::plus_one));
    CHECK(check_weight(l, Operator::identity(l.size()), Weight::zero));
  }

  CHECK_THROWS_AS(static_cast<void>(check_weight(m3, theta, Weight::plus_one)), InvalidInput);
}

TEST_CASE("the diagonal matters for weights 0 and -1") {
  // constant-top on the 2-chain satisfies the difference identity but is
  // not decreasing, so it is neither a derivation nor of weight -1
  const Lattice l2 = Lattice::chain(2);
  const Operator top2 = op({1, 1});
  CHECK(check_weight(l2, top2, Weight::plus_one));
  CHECK_FALSE(check_weight(l2, top2, Weight::zero));
  CHECK_FALSE(check_weight(l2, top2, Weight::minus_one));
}

TEST_CASE("check_property") {
  const Lattice l3 = Lattice::chain(3);
  const Operator tau = make_named(l3, {FamilyKind::tau, {1}});
  CHECK(tau.image() == std::vector<Elem>{2, 2, 1});
  CHECK_FALSE(check_property(l3, tau, OpProperty::isotone));
  CHECK_FALSE(check_property(l3, tau, OpProperty::idempotent));

  for (const Lattice& l : small_fixtures()) {
    const Operator id = Operator::identity(l.size());
    for (OpProperty p :
         {OpProperty::decreasing, OpProperty::increasing, OpProperty::isotone,
          OpProperty::meet_homomorphism, OpProperty::join_homomorphism, OpProperty::idempotent,
          OpProperty::lattice_homomorphism})
      CHECK(check_property(l, id, p));
  }

  const Lattice m2 = Lattice::quasi_antichain(2);
  const Operator psi_a = make_named(m2, {FamilyKind::psi, {1}});
  CHECK(psi_a.image() == std::vector<Elem>{1, 1, 3, 3});
  CHECK(check_property(m2, psi_a, OpProperty::increasing));
}

TEST_CASE("make_named transcribes the case definitions") {
  const Lattice m3 = Lattice::quasi_antichain(3);
  const Operator eta = make_named(m3, {FamilyKind::eta, {1, 2, 3}});
  CHECK(eta.image() == std::vector<Elem>{4, 4, 3, 4, 1});

  const Lattice m2 = Lattice::quasi_antichain(2);
  CHECK(make_named(m2, {FamilyKind::phi_a, {}}).image() == std::vector<Elem>{1, 0, 3, 2});
  CHECK(make_named(m2, {FamilyKind::phi_b, {}}).image() == std::vector<Elem>{2, 3, 0, 1});

  const Lattice l4 = Lattice::chain(4);
  CHECK(make_named(l4, {FamilyKind::constant, {2}}).image() == std::vector<Elem>{2, 2, 2, 2});

  // beta is the eta instance with v = b
  CHECK(make_named(m3, {FamilyKind::beta, {1, 2}}) ==
        make_named(m3, {FamilyKind::eta, {1, 2, 1}}));

  const Operator lam = make_named(m3, {FamilyKind::lambda_a, {2}});
  CHECK(lam.image() == std::vector<Elem>{2, 2, 0, 2, 0});

  const Operator alpha = make_named(m2, {FamilyKind::alpha, {1, 2}});
  CHECK(alpha.image() == std::vector<Elem>{3, 2, 1, 0});
}

TEST_CASE("make_named side conditions") {
  const Lattice m2 = Lattice::quasi_antichain(2);
  const Lattice m3 = Lattice::quasi_antichain(3);
  const Lattice l4 = Lattice::chain(4);

  CHECK_THROWS_AS(make_named(m3, {FamilyKind::eta, {1, 1, 2}}), InvalidInput);    // u = b
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::eta, {1, 2, 2}}), InvalidInput);    // v = u
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::eta, {0, 1, 2}}), InvalidInput);    // b extremal
  CHECK_THROWS_AS(make_named(m2, {FamilyKind::gamma, {1, 2, 3}}), InvalidInput);  // too small
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::gamma, {1, 1, 2}}), InvalidInput);
  CHECK_THROWS_AS(make_named(l4, {FamilyKind::lambda_a, {1}}), InvalidInput);     // not quasi
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::lambda_a, {0}}), InvalidInput);     // not an atom
  CHECK_THROWS_AS(make_named(Lattice::chain(1), {FamilyKind::tau, {0}}), InvalidInput);
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::phi_a, {}}), InvalidInput);         // needs size 4
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::theta, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(make_named(m3, {FamilyKind::eta, {1, 2}}), InvalidInput);       // arity
}

TEST_CASE("family members satisfy the difference identity") {
  // every family of the classification is a difference operator on its
  // home lattice; the near-miss is the lone exception
  for (int m = 2; m <= 5; ++m) {
    const Lattice q = Lattice::quasi_antichain(m);
    const auto atoms = q.atoms();
    for (Elem a = 0; a < q.size(); ++a) {
      CHECK(check_weight(q, make_named(q, {FamilyKind::constant, {a}}), Weight::plus_one));
      CHECK(check_weight(q, make_named(q, {FamilyKind::tau, {a}}), Weight::plus_one));
    }
    for (Elem a : atoms)
      CHECK(check_weight(q, make_named(q, {FamilyKind::lambda_a, {a}}), Weight::plus_one));
    for (Elem b : atoms)
      for (Elem u : atoms) {
        if (u == b) continue;
        CHECK(check_weight(q, make_named(q, {FamilyKind::beta, {b, u}}), Weight::plus_one));
        for (Elem v : atoms) {
          if (v == u) continue;
          CHECK(check_weight(q, make_named(q, {FamilyKind::eta, {b, u, v}}), Weight::plus_one));
          if (m >= 3 && v != b)
            CHECK(
                check_weight(q, make_named(q, {FamilyKind::gamma, {b, u, v}}), Weight::plus_one));
        }
      }
    for (Elem u : atoms)
      for (Elem v : atoms) {
        if (u == v) continue;
        CHECK(check_weight(q, make_named(q, {FamilyKind::theta, {u, v}}), Weight::plus_one));
        CHECK(check_weight(q, make_named(q, {FamilyKind::alpha, {u, v}}), Weight::plus_one));
      }
  }
  const Lattice m2 = Lattice::quasi_antichain(2);
  CHECK(check_weight(m2, make_named(m2, {FamilyKind::phi_a, {}}), Weight::plus_one));
  CHECK(check_weight(m2, make_named(m2, {FamilyKind::phi_b, {}}), Weight::plus_one));
  CHECK_FALSE(check_weight(m2, make_named(m2, {FamilyKind::theta_m2_counterexample, {}}),
                           Weight::plus_one));

  // the join-translations are difference operators exactly on distributive
  // lattices
  for (const Lattice& l : small_fixtures()) {
    bool all_psi = true;
    for (Elem a = 0; a < l.size(); ++a)
      all_psi =
          all_psi && check_weight(l, make_named(l, {FamilyKind::psi, {a}}), Weight::plus_one);
    CHECK(all_psi == l.is_distributive());
  }
}

TEST_CASE("modify_at_top") {
  const Lattice m2 = Lattice::quasi_antichain(2);
  const Operator c1 = Operator::constant(4, 3);
  CHECK(modify_at_top(m2, c1, 0).image() == std::vector<Elem>{3, 3, 3, 0});
  const Operator d = make_named(m2, {FamilyKind::phi_a, {}});
  CHECK(modify_at_top(m2, d, d(m2.top())) == d);
  CHECK_THROWS_AS(modify_at_top(m2, c1, 9), InvalidInput);
  CHECK_THROWS_AS(modify_at_top(m2, Operator::constant(3, 0), 0), InvalidInput);

  // raising the top image of the bottom constant breaks membership
  const Lattice l3 = Lattice::chain(3);
  const Operator broken = modify_at_top(l3, Operator::constant(3, 0), l3.top());
  CHECK_FALSE(check_weight(l3, broken, Weight::plus_one));
  // any image below d(1) keeps it
  for (Elem u = 0; u < 3; ++u)
    CHECK(check_weight(l3, modify_at_top(l3, Operator::constant(3, 2), u), Weight::plus_one));
}

TEST_CASE("chain saturate and floor") {
  const Lattice l3 = Lattice::chain(3);

  const Operator c_a1 = Operator::constant(3, 1);
  const Operator d_up = chain_saturate(l3, c_a1);
  CHECK(d_up.image() == std::vector<Elem>{1, 1, 2});
  CHECK(check_weight(l3, d_up, Weight::plus_one));

  const Operator tau_a1 = make_named(l3, {FamilyKind::tau, {1}});
  const Operator d_dn = chain_floor(l3, tau_a1);
  CHECK(d_dn.image() == std::vector<Elem>{1, 1, 1});
  CHECK(check_weight(l3, d_dn, Weight::plus_one));

  // with the top fixed, saturation changes nothing and flooring yields the
  // constant top
  const Operator id = Operator::identity(3);
  CHECK(chain_saturate(l3, id) == id);
  CHECK(chain_floor(l3, id) == Operator::constant(3, 2));

  const Lattice m3 = Lattice::quasi_antichain(3);
  std::vector<Elem> meet_b1(5);
  for (Elem x = 0; x < 5; ++x) meet_b1[x] = m3.meet(x, 1);
  CHECK_THROWS_AS(chain_saturate(m3, op(meet_b1)), UnsupportedShape);
  CHECK_THROWS_AS(chain_floor(m3, op(meet_b1)), UnsupportedShape);

  // non-member input on a chain is refused
  CHECK_THROWS_AS(chain_saturate(l3, op({2, 1, 0})), InvalidInput);

  // saturate/floor of every member is again a member
  for (int n = 2; n <= 5; ++n) {
    const Lattice l = Lattice::chain(n);
    all_maps(n, [&](std::span<const Elem> im) {
      if (!check_weight(l, im, Weight::plus_one)) return;
      const Operator d(std::vector<Elem>(im.begin(), im.end()));
      CHECK(check_weight(l, chain_saturate(l, d), Weight::plus_one));
      CHECK(check_weight(l, chain_floor(l, d), Weight::plus_one));
    });
  }
}

TEST_CASE("weight -1 coincides with weight 0 (exhaustive small, sampled large)") {
  for (const Lattice& l : small_fixtures())
    all_maps(l.size(), [&](std::span<const Elem> im) {
      CHECK(check_weight(l, im, Weight::zero) == check_weight(l, im, Weight::minus_one));
      if (check_weight(l, im, Weight::minus_one)) {
        for (Elem x = 0; x < l.size(); ++x) CHECK(l.leq(im[x], x));
      }
    });

  for (const Lattice& l :
       {Lattice::quasi_antichain(4), Lattice::quasi_antichain(5), boolean_cube(3)}) {
    std::mt19937_64 gen(kSampleSeed);
    std::vector<Elem> image(static_cast<size_t>(l.size()));
    for (int s = 0; s < kSampleCount; ++s) {
      for (Elem x = 0; x < l.size(); ++x) image[x] = static_cast<Elem>(gen() % l.size());
      CHECK(check_weight(l, std::span<const Elem>(image), Weight::zero) ==
            check_weight(l, std::span<const Elem>(image), Weight::minus_one));
    }
  }
}

TEST_CASE("derivations are the decreasing difference operators") {
  for (const Lattice& l : small_fixtures())
    all_maps(l.size(), [&](std::span<const Elem> im) {
      bool decreasing = true;
      for (Elem x = 0; x < l.size(); ++x)
        if (!l.leq(im[x], x)) decreasing = false;
      CHECK(check_weight(l, im, Weight::zero) ==
            (check_weight(l, im, Weight::plus_one) && decreasing));
    });
}

TEST_CASE("increasing maps: membership means meet-homomorphism") {
  for (const Lattice& l : small_fixtures())
    all_maps(l.size(), [&](std::span<const Elem> im) {
      const Operator d(std::vector<Elem>(im.begin(), im.end()));
      if (!check_property(l, d, OpProperty::increasing)) return;
      CHECK(check_weight(l, d, Weight::plus_one) ==
            check_property(l, d, OpProperty::meet_homomorphism));
    });
}

TEST_CASE("member properties: isotone, join-homomorphism, idempotent") {
  for (const Lattice& l : small_fixtures())
    all_maps(l.size(), [&](std::span<const Elem> im) {
      if (!check_weight(l, im, Weight::plus_one)) return;
      const Operator d(std::vector<Elem>(im.begin(), im.end()));
      CHECK(check_property(l, d, OpProperty::isotone) ==
            check_property(l, d, OpProperty::meet_homomorphism));
      CHECK(check_property(l, d, OpProperty::join_homomorphism) ==
            check_property(l, d, OpProperty::lattice_homomorphism));
      bool fixes_image_meets = true;
      for (Elem x = 0; x < l.size() && fixes_image_meets; ++x)
        for (Elem y = 0; y < l.size(); ++y) {
          const Elem w = l.meet(d(x), d(y));
          if (d(w) != w) {
            fixes_image_meets = false;
            break;
          }
        }
      CHECK(check_property(l, d, OpProperty::idempotent) == fixes_image_meets);
    });
}

TEST_CASE("chains with the top fixed: membership means increasing and isotone") {
  for (int n = 1; n <= 5; ++n) {
    const Lattice l = Lattice::chain(n);
    all_maps(n, [&](std::span<const Elem> im) {
      if (im[n - 1] != n - 1) return;
      const Operator d(std::vector<Elem>(im.begin(), im.end()));
      CHECK(check_weight(l, d, Weight::plus_one) ==
            (check_property(l, d, OpProperty::increasing) &&
             check_property(l, d, OpProperty::isotone)));
    });
  }
}

TEST_CASE("bottom and top sent to the top force the constant") {
  for (const Lattice& l : small_fixtures()) {
    if (l.size() < 2) continue;
    all_maps(l.size(), [&](std::span<const Elem> im) {
      if (im[l.bottom()] != l.top() || im[l.top()] != l.top()) return;
      bool constant_top = true;
      for (Elem x = 0; x < l.size(); ++x)
        if (im[x] != l.top()) constant_top = false;
      CHECK(check_weight(l, im, Weight::plus_one) == constant_top);
    });
  }
}

TEST_CASE("chains with the bottom sent to the top admit only near-constants") {
  for (int n = 2; n <= 5; ++n) {
    const Lattice l = Lattice::chain(n);
    all_maps(n, [&](std::span<const Elem> im) {
      if (im[0] != n - 1) return;
      bool tau_shape = true;
      for (Elem x = 0; x + 1 < n; ++x)
        if (im[x] != n - 1) tau_shape = false;
      CHECK(check_weight(l, im, Weight::plus_one) == tau_shape);
    });
  }
}

TEST_CASE("pointwise consequences for members on bounded lattices") {
  for (const Lattice& l : small_fixtures())
    all_maps(l.size(), [&](std::span<const Elem> im) {
      if (!check_weight(l, im, Weight::plus_one)) return;
      const Elem top = l.top();
      const Elem bottom = l.bottom();
      for (Elem x = 0; x < l.size(); ++x) {
        if (l.leq(x, im[top])) CHECK(l.leq(x, im[x]));
        if (l.leq(im[top], x)) CHECK(l.leq(im[top], im[x]));
        for (Elem y = 0; y < l.size(); ++y)
          if (l.leq(x, y) && l.leq(y, im[top])) CHECK(l.leq(im[x], im[y]));
        if (l.leq(l.join(x, im[x]), im[bottom])) CHECK(l.join(x, im[x]) == im[bottom]);
      }
    });
}
