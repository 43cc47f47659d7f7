#include "latdiff/io.hpp"

#include <fstream>
#include <sstream>

namespace latdiff {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

struct LineReader {
  std::istream& in;
  const std::string& source;
  int line_no = 0;

  // next content line (comments and blanks skipped); false at end
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      const std::string t = trim(raw);
      if (t.empty() || t[0] == '#') continue;
      out = t;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InvalidInput(source + ":" + std::to_string(line_no) + ": " + message);
  }
};

}  // namespace

PosetSpec parse_lattice_text(std::istream& in, const std::string& source_name) {
  LineReader reader{in, source_name};
  std::string line;
  if (!reader.next(line)) throw InvalidInput(source_name + ": empty lattice file");

  PosetSpec spec;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> spec.size) || (ss >> extra))
      reader.fail("expected a single element count, got \"" + line + "\"");
    if (spec.size < 1) reader.fail("element count must be positive");
  }
  spec.labels.assign(static_cast<size_t>(spec.size), "");
  bool any_label = false;

  while (reader.next(line)) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "label") {
      int index;
      if (!(ss >> index)) reader.fail("expected \"label <index> <name>\"");
      if (index < 0 || index >= spec.size)
        reader.fail("label index " + std::to_string(index) + " out of range");
      std::string name;
      std::getline(ss, name);
      name = trim(name);
      if (name.empty()) reader.fail("empty label name");
      spec.labels[static_cast<size_t>(index)] = name;
      any_label = true;
      continue;
    }
    int a, b;
    std::istringstream pair_ss(line);
    std::string extra;
    if (!(pair_ss >> a >> b) || (pair_ss >> extra))
      reader.fail("expected a cover line \"a b\", got \"" + line + "\"");
    if (a < 0 || a >= spec.size || b < 0 || b >= spec.size)
      reader.fail("cover (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    spec.covers.emplace_back(a, b);
  }

  if (any_label) {
    for (int i = 0; i < spec.size; ++i)
      if (spec.labels[static_cast<size_t>(i)].empty())
        spec.labels[static_cast<size_t>(i)] = std::to_string(i);
  } else {
    spec.labels.clear();
  }
  return spec;
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open lattice file " + path);
  return Lattice::from_covers(parse_lattice_text(in, path));
}

std::vector<Elem> parse_operator_text(std::istream& in, const std::string& source_name) {
  LineReader reader{in, source_name};
  std::string line;
  if (!reader.next(line)) throw InvalidInput(source_name + ": empty operator file");
  std::istringstream ss(line);
  std::vector<Elem> image;
  Elem v;
  while (ss >> v) image.push_back(v);
  if (!ss.eof()) reader.fail("expected whitespace-separated integers, got \"" + line + "\"");
  if (image.empty()) reader.fail("no image entries found");
  std::string extra;
  if (reader.next(extra)) reader.fail("trailing content after the image line");
  return image;
}

Operator load_operator_file(const std::string& path, const Lattice& l) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open operator file " + path);
  const std::vector<Elem> image = parse_operator_text(in, path);
  if (static_cast<int>(image.size()) != l.size())
    throw InvalidInput(path + ": operator has " + std::to_string(image.size()) +
                       " entries but the lattice has " + std::to_string(l.size()) +
                       " elements");
  for (Elem v : image)
    if (v < 0 || v >= l.size())
      throw InvalidInput(path + ": image entry " + std::to_string(v) + " out of range [0, " +
                         std::to_string(l.size()) + ")");
  return Operator(image);
}

std::string render_chain_table(int max_n, bool brute, const EnumerateOptions& opts) {
  if (max_n < 1) throw InvalidInput("chain table needs max n >= 1");
  if (brute && !opts.force && max_n > opts.budget)
    throw BudgetExceeded("brute columns up to n=" + std::to_string(max_n) +
                         " exceed the enumeration budget " + std::to_string(opts.budget));
  std::string out = brute ? "n\tformula\tbrute\tmatch\n" : "n\tformula\n";
  for (int n = 1; n <= max_n; ++n) {
    const Count formula = chain_total(n);
    out += std::to_string(n) + "\t" + count_to_string(formula);
    if (brute) {
      CountQuery q{Lattice::chain(n), Weight::plus_one, {}, {}};
      const Count observed = enumerate_ops(q, nullptr, opts).count;
      out += "\t" + count_to_string(observed) + "\t" +
             (observed == formula ? "ok" : "MISMATCH");
    }
    out += "\n";
  }
  return out;
}

std::string render_quasi_table(int max_n, bool brute, const EnumerateOptions& opts) {
  if (max_n < 4) throw InvalidInput("quasi table needs max n >= 4");
  if (brute && !opts.force && max_n > opts.budget)
    throw BudgetExceeded("brute columns up to n=" + std::to_string(max_n) +
                         " exceed the enumeration budget " + std::to_string(opts.budget));
  std::string out = brute ? "n\tpoly\tsum\tformula\tbrute\tmatch\n" : "n\tpoly\tsum\tformula\n";
  for (int n = 4; n <= max_n; ++n) {
    out += std::to_string(n);
    if (n >= 5) {
      const QuasiTotalParts parts = quasi_total_parts(n);
      out += "\t" + count_to_string(parts.poly) + "\t" + count_to_string(parts.sum) + "\t" +
             count_to_string(parts.poly + parts.sum);
    } else {
      out += "\t—\t—\t—";
    }
    if (brute) {
      CountQuery q{Lattice::quasi_antichain(n - 2), Weight::plus_one, {}, {}};
      const Count observed = enumerate_ops(q, nullptr, opts).count;
      out += "\t" + count_to_string(observed);
      if (n >= 5)
        out += std::string("\t") + (observed == quasi_total(n) ? "ok" : "MISMATCH");
      else
        out += "\tn/a(formula n≥5)";
    }
    out += "\n";
  }
  return out;
}

}  // namespace latdiff
