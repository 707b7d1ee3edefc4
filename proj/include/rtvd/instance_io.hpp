#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtvd/oracle.hpp"
#include "rtvd/reductions.hpp"

namespace rtvd {

// Text formats. Vertex ids are 1-based on disk and 0-based in memory; lines
// starting with `c` are comments and blank lines are ignored.
//
//   instance:  p rtvd <n> <m> <k> <ell>   then m lines  a <u> <v>
//   graph:     p edge <n> <m>             then m lines  e <u> <v>
//   multicut:  p mcut <n> <m> <r>         then m lines  a <u> <v>  and r lines  t <s> <t>

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  Instance instance;
  std::vector<std::string> comments;  // without the leading "c "
};

ParsedInstance read_instance(std::istream& in);
ParsedInstance read_instance_file(const std::string& path);
/// Comments first, then the header, then arcs in lexicographic order.
void write_instance(std::ostream& out, const Instance& inst, const std::vector<std::string>& comments = {});

UndirectedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const UndirectedGraph& g);

/// The budget is not part of the format; the result has k = 0.
MulticutInstance read_multicut(std::istream& in);
void write_multicut(std::ostream& out, const MulticutInstance& mc);

/// Throws std::runtime_error when the file cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace rtvd
