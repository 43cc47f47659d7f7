#include "latdiff/operators.hpp"

#include <algorithm>

namespace latdiff {

namespace {

void check_bound(const Lattice& l, const Operator& d) {
  if (d.size() != l.size())
    throw InvalidInput("operator size " + std::to_string(d.size()) +
                       " does not match lattice size " + std::to_string(l.size()));
}

bool is_middle(const Lattice& l, Elem x) {
  return x >= 0 && x < l.size() && x != l.bottom() && x != l.top();
}

void require_quasi(const Lattice& l, const char* family) {
  if (!l.is_quasi_antichain())
    throw InvalidInput(std::string(family) + " requires a quasi-antichain lattice");
}

void require_middle(const Lattice& l, Elem x, const char* family, const char* param) {
  if (!is_middle(l, x))
    throw InvalidInput(std::string(family) + ": parameter " + param + " = " +
                       std::to_string(x) + " must be a non-extremal element");
}

void require_arity(const OperatorFamily& fam, size_t arity, const char* family) {
  if (fam.params.size() != arity)
    throw InvalidInput(std::string(family) + " takes " + std::to_string(arity) +
                       " element parameter(s), got " + std::to_string(fam.params.size()));
}

}  // namespace

Operator::Operator(std::vector<Elem> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  for (Elem v : image_)
    if (v < 0 || v >= n)
      throw InvalidInput("operator image entry " + std::to_string(v) +
                         " out of range [0, " + std::to_string(n) + ")");
}

Operator Operator::identity(int n) {
  std::vector<Elem> image(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) image[x] = x;
  return Operator(std::move(image));
}

Operator Operator::constant(int n, Elem value) {
  if (value < 0 || value >= n)
    throw InvalidInput("constant value " + std::to_string(value) + " out of range [0, " +
                       std::to_string(n) + ")");
  return Operator(std::vector<Elem>(static_cast<size_t>(n), value));
}

std::string Operator::to_string() const {
  std::string out;
  for (size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(image_[i]);
  }
  return out;
}

Weight weight_from_int(int value) {
  switch (value) {
    case 0:
      return Weight::zero;
    case 1:
      return Weight::plus_one;
    case -1:
      return Weight::minus_one;
    default:
      throw InvalidInput("weight must be one of {0, 1, -1}, got " + std::to_string(value));
  }
}

int weight_to_int(Weight w) { return static_cast<int>(w); }

bool check_weight(const Lattice& l, std::span<const Elem> image, Weight w) {
  const int n = l.size();
  if (static_cast<int>(image.size()) != n)
    throw InvalidInput("operator size " + std::to_string(image.size()) +
                       " does not match lattice size " + std::to_string(n));
  const Elem* meet = l.meet_table().data();
  const Elem* join = l.join_table().data();
  auto m = [&](Elem a, Elem b) { return meet[static_cast<size_t>(a) * n + b]; };
  auto j = [&](Elem a, Elem b) { return join[static_cast<size_t>(a) * n + b]; };

  for (Elem x = 0; x < n; ++x) {
    const Elem dx = image[x];
    for (Elem y = x; y < n; ++y) {
      if (x == y && w == Weight::plus_one) continue;
      const Elem dy = image[y];
      const Elem dm = image[m(x, y)];
      const Elem cross = j(m(dx, y), m(x, dy));
      switch (w) {
        case Weight::zero:
          if (dm != cross) return false;
          break;
        case Weight::plus_one:
          if (dm != j(cross, m(dx, dy))) return false;
          break;
        case Weight::minus_one:
          if (j(dm, m(dx, dy)) != cross) return false;
          break;
      }
    }
  }
  return true;
}

bool check_weight(const Lattice& l, const Operator& d, Weight w) {
  return check_weight(l, std::span<const Elem>(d.image()), w);
}

bool check_property(const Lattice& l, const Operator& d, OpProperty p) {
  check_bound(l, d);
  const int n = l.size();
  const auto& im = d.image();
  switch (p) {
    case OpProperty::decreasing:
      for (Elem x = 0; x < n; ++x)
        if (!l.leq(im[x], x)) return false;
      return true;
    case OpProperty::increasing:
      for (Elem x = 0; x < n; ++x)
        if (!l.leq(x, im[x])) return false;
      return true;
    case OpProperty::isotone:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (l.leq(x, y) && !l.leq(im[x], im[y])) return false;
      return true;
    case OpProperty::meet_homomorphism:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y)
          if (im[l.meet(x, y)] != l.meet(im[x], im[y])) return false;
      return true;
    case OpProperty::join_homomorphism:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y)
          if (im[l.join(x, y)] != l.join(im[x], im[y])) return false;
      return true;
    case OpProperty::idempotent:
      for (Elem x = 0; x < n; ++x)
        if (im[im[x]] != im[x]) return false;
      return true;
    case OpProperty::lattice_homomorphism:
      return check_property(l, d, OpProperty::meet_homomorphism) &&
             check_property(l, d, OpProperty::join_homomorphism);
  }
  return false;
}

Operator make_named(const Lattice& l, const OperatorFamily& fam) {
  const int n = l.size();
  const Elem bot = l.bottom();
  const Elem top = l.top();
  std::vector<Elem> im(static_cast<size_t>(n));

  switch (fam.kind) {
    case FamilyKind::constant: {
      require_arity(fam, 1, "constant");
      const Elem a = fam.params[0];
      if (a < 0 || a >= n)
        throw InvalidInput("constant: value " + std::to_string(a) + " out of range");
      return Operator::constant(n, a);
    }
    case FamilyKind::tau: {
      require_arity(fam, 1, "tau");
      if (n < 2) throw InvalidInput("tau requires a lattice with at least 2 elements");
      const Elem a = fam.params[0];
      if (a < 0 || a >= n) throw InvalidInput("tau: value " + std::to_string(a) + " out of range");
      for (Elem x = 0; x < n; ++x) im[x] = (x == top) ? a : top;
      return Operator(std::move(im));
    }
    case FamilyKind::psi: {
      require_arity(fam, 1, "psi");
      const Elem a = fam.params[0];
      if (a < 0 || a >= n) throw InvalidInput("psi: value " + std::to_string(a) + " out of range");
      for (Elem x = 0; x < n; ++x) im[x] = l.join(x, a);
      return Operator(std::move(im));
    }
    case FamilyKind::lambda_a: {
      require_arity(fam, 1, "lambda");
      require_quasi(l, "lambda");
      const Elem a = fam.params[0];
      require_middle(l, a, "lambda", "a");
      for (Elem x = 0; x < n; ++x) im[x] = (x == a || x == top) ? bot : a;
      return Operator(std::move(im));
    }
    case FamilyKind::eta: {
      require_arity(fam, 3, "eta");
      require_quasi(l, "eta");
      const Elem b = fam.params[0], u = fam.params[1], v = fam.params[2];
      require_middle(l, b, "eta", "b");
      require_middle(l, u, "eta", "u");
      require_middle(l, v, "eta", "v");
      if (u == b) throw InvalidInput("eta: u must differ from b");
      if (v == u) throw InvalidInput("eta: v must differ from u");
      for (Elem x = 0; x < n; ++x) im[x] = (x == top) ? b : (x == u) ? v : top;
      return Operator(std::move(im));
    }
    case FamilyKind::beta: {
      require_arity(fam, 2, "beta");
      require_quasi(l, "beta");
      const Elem b = fam.params[0], u = fam.params[1];
      require_middle(l, b, "beta", "b");
      require_middle(l, u, "beta", "u");
      if (u == b) throw InvalidInput("beta: u must differ from b");
      for (Elem x = 0; x < n; ++x) im[x] = (x == top || x == u) ? b : top;
      return Operator(std::move(im));
    }
    case FamilyKind::gamma: {
      require_arity(fam, 3, "gamma");
      require_quasi(l, "gamma");
      if (n < 5) throw InvalidInput("gamma requires a quasi-antichain with at least 5 elements");
      const Elem b = fam.params[0], u = fam.params[1], v = fam.params[2];
      require_middle(l, b, "gamma", "b");
      require_middle(l, u, "gamma", "u");
      require_middle(l, v, "gamma", "v");
      if (b == u || b == v || u == v)
        throw InvalidInput("gamma: b, u, v must be mutually distinct");
      for (Elem x = 0; x < n; ++x)
        im[x] = (x == top) ? b : (x == u) ? v : (x == v) ? u : top;
      return Operator(std::move(im));
    }
    case FamilyKind::theta: {
      require_arity(fam, 2, "theta");
      require_quasi(l, "theta");
      const Elem u = fam.params[0], v = fam.params[1];
      require_middle(l, u, "theta", "u");
      require_middle(l, v, "theta", "v");
      if (u == v) throw InvalidInput("theta: u must differ from v");
      for (Elem x = 0; x < n; ++x) im[x] = (x == top) ? bot : (x == u) ? v : top;
      return Operator(std::move(im));
    }
    case FamilyKind::alpha: {
      require_arity(fam, 2, "alpha");
      require_quasi(l, "alpha");
      const Elem u = fam.params[0], v = fam.params[1];
      require_middle(l, u, "alpha", "u");
      require_middle(l, v, "alpha", "v");
      if (u == v) throw InvalidInput("alpha: u must differ from v");
      for (Elem x = 0; x < n; ++x)
        im[x] = (x == top) ? bot : (x == u) ? v : (x == v) ? u : top;
      return Operator(std::move(im));
    }
    case FamilyKind::phi_a:
    case FamilyKind::phi_b:
    case FamilyKind::theta_m2_counterexample: {
      require_arity(fam, 0, "phi/theta-counterexample");
      require_quasi(l, "phi/theta-counterexample");
      if (n != 4)
        throw InvalidInput("phi/theta-counterexample requires the 4-element quasi-antichain");
      const auto atoms = l.atoms();
      const Elem a = atoms[0], b = atoms[1];
      if (fam.kind == FamilyKind::phi_a) {
        im[bot] = a, im[a] = bot, im[b] = top, im[top] = b;
      } else if (fam.kind == FamilyKind::phi_b) {
        im[bot] = b, im[a] = top, im[b] = bot, im[top] = a;
      } else {
        im[bot] = a, im[a] = bot, im[b] = a, im[top] = b;
      }
      return Operator(std::move(im));
    }
  }
  throw InvalidInput("unknown operator family");
}

Operator modify_at_top(const Lattice& l, const Operator& d, Elem u) {
  check_bound(l, d);
  if (u < 0 || u >= l.size())
    throw InvalidInput("top image " + std::to_string(u) + " out of range");
  std::vector<Elem> im = d.image();
  im[l.top()] = u;
  return Operator(std::move(im));
}

namespace {

Operator chain_derive(const Lattice& l, const Operator& d, bool saturate) {
  check_bound(l, d);
  if (!l.is_chain())
    throw UnsupportedShape("this construction is only valid on chains");
  if (!check_weight(l, d, Weight::plus_one))
    throw InvalidInput("input operator is not a difference operator");
  const Elem dtop = d(l.top());
  std::vector<Elem> im(static_cast<size_t>(l.size()));
  for (Elem x = 0; x < l.size(); ++x) {
    if (saturate)
      im[x] = l.leq(x, dtop) ? d(x) : l.top();
    else
      im[x] = l.leq(x, dtop) ? dtop : d(x);
  }
  return Operator(std::move(im));
}

}  // namespace

Operator chain_saturate(const Lattice& l, const Operator& d) {
  return chain_derive(l, d, true);
}

Operator chain_floor(const Lattice& l, const Operator& d) {
  return chain_derive(l, d, false);
}

}  // namespace latdiff
