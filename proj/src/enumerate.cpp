#include "latdiff/enumerate.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace latdiff {

namespace {

struct Kernel {
  const Lattice& l;
  int n;
  Weight w;
  const Elem* meet;
  const Elem* join;
  // candidate images per element, ascending, after constraint filtering
  std::vector<std::vector<Elem>> allowed;
  // pairs (x, y), x <= y, whose identity becomes checkable at step k
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs_at;

  std::vector<Elem> image;
  Count count = 0;
  const OperatorConsumer* emit = nullptr;

  explicit Kernel(const CountQuery& q)
      : l(q.lattice),
        n(q.lattice.size()),
        w(q.weight),
        meet(q.lattice.meet_table().data()),
        join(q.lattice.join_table().data()) {
    allowed.assign(n, {});
    std::vector<bool> has_fixed(n, false);
    std::vector<Elem> fixed_value(n, 0);
    for (const auto& [x, y] : q.fixed) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw InvalidInput("fixed constraint (" + std::to_string(x) + " -> " +
                           std::to_string(y) + ") out of range");
      if (has_fixed[x] && fixed_value[x] != y)
        throw InvalidInput("conflicting fixed images for element " + std::to_string(x));
      has_fixed[x] = true;
      fixed_value[x] = y;
    }
    std::vector<std::vector<Elem>> lower_bounds(n);
    for (const auto& [x, y] : q.at_least) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw InvalidInput("lower-bound constraint (" + std::to_string(x) + " >= " +
                           std::to_string(y) + ") out of range");
      lower_bounds[x].push_back(y);
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem v = 0; v < n; ++v) {
        if (has_fixed[x] && v != fixed_value[x]) continue;
        bool ok = true;
        for (Elem b : lower_bounds[x])
          if (!l.leq(b, v)) {
            ok = false;
            break;
          }
        if (ok) allowed[x].push_back(v);
      }
    }

    pairs_at.assign(n, {});
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x; y < n; ++y) {
        if (x == y && w == Weight::plus_one) continue;  // automatic by absorption
        const Elem m = meet[static_cast<size_t>(x) * n + y];
        pairs_at[std::max({x, y, m})].emplace_back(x, y);
      }
    image.assign(n, 0);
  }

  bool pair_ok(Elem x, Elem y) const {
    const Elem dx = image[x];
    const Elem dy = image[y];
    const Elem dm = image[meet[static_cast<size_t>(x) * n + y]];
    const Elem mx = meet[static_cast<size_t>(dx) * n + y];
    const Elem my = meet[static_cast<size_t>(x) * n + dy];
    const Elem cross = join[static_cast<size_t>(mx) * n + my];
    const Elem dd = meet[static_cast<size_t>(dx) * n + dy];
    switch (w) {
      case Weight::zero:
        return dm == cross;
      case Weight::plus_one:
        return dm == join[static_cast<size_t>(cross) * n + dd];
      case Weight::minus_one:
        return join[static_cast<size_t>(dm) * n + dd] == cross;
    }
    return false;
  }

  void dfs(int k) {
    if (k == n) {
      ++count;
      if (emit) (*emit)(Operator(image));
      return;
    }
    for (Elem v : allowed[k]) {
      image[k] = v;
      bool ok = true;
      for (const auto& [x, y] : pairs_at[k])
        if (!pair_ok(x, y)) {
          ok = false;
          break;
        }
      if (ok) dfs(k + 1);
    }
  }
};

CountReport run_sequential(const CountQuery& q, const OperatorConsumer& emit) {
  Kernel kernel(q);
  kernel.emit = emit ? &emit : nullptr;
  CountReport report;
  try {
    kernel.dfs(0);
    report.count = kernel.count;
  } catch (const std::overflow_error&) {
    report.overflow = true;
    report.count = 0;
  }
  return report;
}

CountReport run_partitioned(const CountQuery& q, const OperatorConsumer& emit, int partitions) {
  // One task per value of image[0]; each task runs the identical kernel
  // with image[0] pinned. Totals are summed and buffered emissions are
  // replayed in image[0] order, so results match the sequential run.
  Kernel probe(q);
  const std::vector<Elem> first_values = probe.allowed[0];

  struct PartResult {
    Count count = 0;
    bool overflow = false;
    std::vector<Operator> ops;
  };

  auto run_part = [&q, &emit](Elem v) {
    CountQuery part = q;
    part.fixed.emplace_back(0, v);
    PartResult r;
    OperatorConsumer collect;
    if (emit) collect = [&r](const Operator& op) { r.ops.push_back(op); };
    CountReport rep = run_sequential(part, collect);
    r.count = rep.count;
    r.overflow = rep.overflow;
    return r;
  };

  std::vector<PartResult> results(first_values.size());
  const size_t width = std::max(1, partitions);
  for (size_t base = 0; base < first_values.size(); base += width) {
    const size_t end = std::min(base + width, first_values.size());
    std::vector<std::future<PartResult>> futures;
    for (size_t i = base; i < end; ++i)
      futures.push_back(std::async(std::launch::async, run_part, first_values[i]));
    for (size_t i = base; i < end; ++i) results[i] = futures[i - base].get();
  }

  CountReport report;
  try {
    for (const auto& r : results) {
      if (r.overflow) {
        report.overflow = true;
        report.count = 0;
        return report;
      }
      report.count += r.count;
    }
  } catch (const std::overflow_error&) {
    report.overflow = true;
    report.count = 0;
    return report;
  }
  if (emit)
    for (const auto& r : results)
      for (const auto& op : r.ops) emit(op);
  return report;
}

}  // namespace

CountReport enumerate_ops(const CountQuery& q, const OperatorConsumer& emit,
                          const EnumerateOptions& opts) {
  const int n = q.lattice.size();
  if (!opts.force && n > opts.budget)
    throw BudgetExceeded("lattice size " + std::to_string(n) +
                         " exceeds the enumeration budget " + std::to_string(opts.budget));
  const auto start = std::chrono::steady_clock::now();
  CountReport report = (opts.partitions > 1 && n > 0)
                           ? run_partitioned(q, emit, opts.partitions)
                           : run_sequential(q, emit);
  report.method = CountReport::Method::brute;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<Operator> enumerate_members(const CountQuery& q, const EnumerateOptions& opts) {
  std::vector<Operator> out;
  enumerate_ops(q, [&out](const Operator& op) { out.push_back(op); }, opts);
  return out;
}

}  // namespace latdiff
