#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "latdiff/harness.hpp"
#include "latdiff/io.hpp"

namespace {

using namespace latdiff;

int resolve_cli_budget() {
  if (const char* env = std::getenv("LATDIFF_BUDGET")) {
    try {
      const int v = std::stoi(env);
      if (v < 1) throw std::invalid_argument("non-positive");
      return v;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("LATDIFF_BUDGET must be a positive integer, got \"") +
                         env + "\"");
    }
  }
  return 8;
}

std::pair<Elem, Elem> split_constraint(const std::string& text, const std::string& sep) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos)
    throw InvalidInput("constraint \"" + text + "\" must look like <elem>" + sep + "<elem>");
  try {
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + sep.size()))};
  } catch (const std::exception&) {
    throw InvalidInput("constraint \"" + text + "\" has non-integer parts");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difference operators on finite lattices: membership checks, "
               "enumeration, count tables and a verification suite"};
  app.require_subcommand(1);
  int exit_code = 0;

  // lattice-check ----------------------------------------------------------
  auto* lattice_check = app.add_subcommand("lattice-check", "validate a lattice file");
  std::string lc_path;
  lattice_check->add_option("path", lc_path, "lattice file")->required();
  lattice_check->callback([&]() {
    try {
      const Lattice l = load_lattice_file(lc_path);
      std::cout << "PASS n=" << l.size() << " bottom=" << l.bottom() << " top=" << l.top()
                << " distributive=" << (l.is_distributive() ? "true" : "false") << "\n";
    } catch (const NotALattice& e) {
      std::cout << "FAIL " << e.what() << "\n";
      exit_code = 1;
    }
  });

  // op-check ----------------------------------------------------------------
  auto* op_check = app.add_subcommand("op-check", "check one operator against a lattice");
  std::string oc_lattice, oc_op, oc_weight = "1";
  op_check->add_option("lattice", oc_lattice, "lattice file")->required();
  op_check->add_option("operator", oc_op, "operator file")->required();
  op_check->add_option("--weight", oc_weight, "0, 1, -1 or all (default 1)");
  op_check->callback([&]() {
    const Lattice l = load_lattice_file(oc_lattice);
    const Operator d = load_operator_file(oc_op, l);
    std::vector<Weight> weights;
    if (oc_weight == "all")
      weights = {Weight::plus_one, Weight::zero, Weight::minus_one};
    else
      weights = {weight_from_int(std::stoi(oc_weight))};

    std::cout << "lattice: " << oc_lattice << " (n=" << l.size() << ", bottom=" << l.bottom()
              << ", top=" << l.top() << ")\n";
    std::cout << "operator: [" << d.to_string() << "]\n";
    bool all_member = true;
    for (Weight w : weights) {
      const bool member = check_weight(l, d, w);
      all_member = all_member && member;
      const char* noun = w == Weight::plus_one ? "difference operator"
                         : w == Weight::zero  ? "derivation"
                                              : "differential operator of weight -1";
      std::cout << "weight " << weight_to_int(w) << ": " << (member ? "" : "NOT a ") << noun
                << "\n";
    }
    const auto flag = [&](const char* name, OpProperty p) {
      std::cout << name << "=" << (check_property(l, d, p) ? "yes" : "no") << " ";
    };
    flag("decreasing", OpProperty::decreasing);
    flag("increasing", OpProperty::increasing);
    flag("isotone", OpProperty::isotone);
    flag("meet-hom", OpProperty::meet_homomorphism);
    flag("join-hom", OpProperty::join_homomorphism);
    flag("idempotent", OpProperty::idempotent);
    std::cout << "lattice-hom="
              << (check_property(l, d, OpProperty::lattice_homomorphism) ? "yes" : "no") << "\n";
    if (!all_member) exit_code = 1;
  });

  // enumerate ---------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "count or list operators of a weight");
  std::string en_family = "chain", en_lattice_path;
  int en_n = 0, en_weight = 1, en_partitions = 1;
  bool en_emit = false, en_force = false;
  std::vector<std::string> en_fix, en_ge;
  enumerate->add_option("--family", en_family, "chain or quasi (default chain)");
  enumerate->add_option("--n", en_n, "lattice size (the quasi-antichain of size n has n-2 atoms)");
  enumerate->add_option("--lattice", en_lattice_path, "lattice file instead of a family");
  enumerate->add_option("--weight", en_weight, "0, 1 or -1 (default 1)");
  enumerate->add_option("--fix", en_fix, "constraint d(j)=i, as j=i (repeatable)");
  enumerate->add_option("--ge", en_ge, "constraint d(x)>=y, as x>=y (repeatable)");
  enumerate->add_flag("--emit", en_emit, "print each operator, one per line");
  enumerate->add_flag("--force", en_force, "override the size budget");
  enumerate->add_option("--partitions", en_partitions, "concurrent search partitions");
  enumerate->callback([&]() {
    Lattice l = Lattice::chain(1);
    if (!en_lattice_path.empty()) {
      l = load_lattice_file(en_lattice_path);
    } else if (en_family == "chain") {
      l = Lattice::chain(en_n);
    } else if (en_family == "quasi") {
      if (en_n < 4) throw InvalidInput("quasi family needs --n >= 4 (n counts all elements)");
      l = Lattice::quasi_antichain(en_n - 2);
    } else {
      throw InvalidInput("unknown family \"" + en_family + "\" (chain or quasi)");
    }
    CountQuery q(l, weight_from_int(en_weight));
    for (const auto& s : en_fix) q.fixed.push_back(split_constraint(s, "="));
    for (const auto& s : en_ge) q.at_least.push_back(split_constraint(s, ">="));

    EnumerateOptions opts;
    opts.budget = resolve_cli_budget();
    opts.force = en_force;
    opts.partitions = en_partitions;

    CountReport report;
    if (en_emit) {
      report = enumerate_ops(q, [](const Operator& op) { std::cout << op.to_string() << "\n"; },
                             opts);
      std::cout << "# count=" << count_to_string(report.count) << "\n";
    } else {
      report = enumerate_ops(q, nullptr, opts);
      std::cout << count_to_string(report.count) << "\n";
    }
    if (report.overflow) {
      std::cerr << "error: count exceeded the 128-bit range\n";
      exit_code = 2;
    }
  });

  // table ---------------------------------------------------------------
  auto* table = app.add_subcommand("table", "TSV tables of counts");
  std::string tb_which = "chains";
  int tb_max_n = 10, tb_partitions = 1;
  bool tb_brute = false, tb_force = false;
  table->add_option("--which", tb_which, "chains or quasi");
  table->add_option("--max-n", tb_max_n, "largest lattice size row");
  table->add_flag("--brute", tb_brute, "add enumeration columns");
  table->add_flag("--force", tb_force, "override the size budget");
  table->add_option("--partitions", tb_partitions, "concurrent search partitions");
  table->callback([&]() {
    EnumerateOptions opts;
    opts.budget = resolve_cli_budget();
    opts.force = tb_force;
    opts.partitions = tb_partitions;
    if (tb_which == "chains")
      std::cout << render_chain_table(tb_max_n, tb_brute, opts);
    else if (tb_which == "quasi")
      std::cout << render_quasi_table(tb_max_n, tb_brute, opts);
    else
      throw InvalidInput("unknown table \"" + tb_which + "\" (chains or quasi)");
  });

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::string vf_suite = "all";
  bool vf_slow = false;
  verify->add_option("--suite", vf_suite, "one of: all, weight-equivalence, decreasing, "
                                          "distributivity, chain-counts, quasi-classification, "
                                          "supporting-lemmas, counterexamples");
  verify->add_flag("--slow", vf_slow, "include the slow catalog entries");
  verify->callback([&]() {
    const auto suite = suite_from_name(vf_suite);
    if (!suite) {
      std::string names;
      for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
      throw InvalidInput("unknown suite \"" + vf_suite + "\" (choose from: " + names + ")");
    }
    const auto reports = run_suite(*suite, vf_slow);
    int passed = 0;
    for (const auto& r : reports) {
      std::cout << report_line(r) << "\n";
      if (r.pass) ++passed;
    }
    std::cout << passed << "/" << reports.size() << " checks passed\n";
    if (passed != static_cast<int>(reports.size())) exit_code = 1;
  });

  // classify ---------------------------------------------------------------
  auto* classify = app.add_subcommand(
      "classify", "enumerate with per-family membership columns (quasi-antichains)");
  std::string cf_family = "quasi";
  int cf_n = 0;
  bool cf_force = false;
  classify->add_option("--family", cf_family, "only quasi is supported");
  classify->add_option("--n", cf_n, "lattice size (n-2 atoms)")->required();
  classify->add_flag("--force", cf_force, "override the size budget");
  classify->callback([&]() {
    if (cf_family != "quasi")
      throw InvalidInput("family membership columns are defined for quasi-antichains");
    if (cf_n < 4) throw InvalidInput("classify needs --n >= 4 (n counts all elements)");
    const Lattice m = Lattice::quasi_antichain(cf_n - 2);

    EnumerateOptions opts;
    opts.budget = resolve_cli_budget();
    opts.force = cf_force;

    std::map<Operator, std::vector<std::string>> tags;
    for (const NamedOperator& f : quasi_family_catalog(m)) tags[f.op].push_back(f.name);
    {
      CountQuery q0{m, Weight::zero, {}, {}};
      for (const Operator& d : enumerate_members(q0, opts)) tags[d].push_back("derivation");
    }
    CountQuery q{m, Weight::plus_one, {}, {}};
    std::cout << "# image\td(0)\tfamilies\n";
    enumerate_ops(
        q,
        [&](const Operator& d) {
          std::cout << d.to_string() << "\t" << m.label(d(m.bottom())) << "\t";
          const auto it = tags.find(d);
          if (it == tags.end() || it->second.empty()) {
            std::cout << "-";
          } else {
            for (size_t i = 0; i < it->second.size(); ++i)
              std::cout << (i ? "," : "") << it->second[i];
          }
          std::cout << "\n";
        },
        opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
