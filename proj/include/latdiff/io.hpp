#ifndef LATDIFF_IO_HPP_
#define LATDIFF_IO_HPP_

#include <iosfwd>
#include <string>

#include "latdiff/enumerate.hpp"
#include "latdiff/lattice.hpp"
#include "latdiff/operators.hpp"

namespace latdiff {

// Lattice text format:
//   - the first content line holds the element count n
//   - every other content line is either "a b" (element a is covered by b,
//     0-based) or "label i name"
//   - lines starting with '#' and blank lines are ignored anywhere
// Parse errors carry the source name and line number.
PosetSpec parse_lattice_text(std::istream& in, const std::string& source_name);
Lattice load_lattice_file(const std::string& path);

// Operator text format: a single content line of whitespace-separated
// image entries; comments and blank lines as above.
std::vector<Elem> parse_operator_text(std::istream& in, const std::string& source_name);
Operator load_operator_file(const std::string& path, const Lattice& l);

// TSV tables of difference-operator counts. Output is byte-stable across
// runs and partition counts. The quasi table lists the paper-shaped rows
// starting at size 4, whose closed form starts at size 5; the n = 4 cells
// without a formula hold an em dash.
std::string render_chain_table(int max_n, bool brute, const EnumerateOptions& opts);
std::string render_quasi_table(int max_n, bool brute, const EnumerateOptions& opts);

}  // namespace latdiff

#endif  // LATDIFF_IO_HPP_
