#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gswitch/core/colouring.hpp"
#include "gswitch/core/switching.hpp"
#include "gswitch/push_graph/push_graph.hpp"

namespace gswitch {

/// Malformed input; `line` is 1-based, 0 when the problem is not tied to a
/// line (e.g. a missing edge noticed at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format, 1-based vertices and colours:
///
///   ecg 1
///   n=<n> m=<m>
///   <i> <j> <c>        one line per pair i < j, any order
///
/// '#' starts a comment; blank lines are ignored.
EdgeColouring parse_colouring(std::string_view text);

/// Canonical text: header then edges in lexicographic order.
std::string emit_colouring(const EdgeColouring& g);

/// Reads and parses a file; errors name the path.
EdgeColouring read_colouring_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Push graphs in the same format with header flag "partial=1" and colour
/// 0 marking non-adjacent pairs.
std::string emit_push_graph(const PushGraph& p);

/// "(v,perm);(v,perm);..." with 1-based v and perm in 1-based cycle
/// notation "(1 2 3)" or image notation "[2 3 1]".
SwitchingSequence parse_sequence(std::string_view text, int m);
std::string format_sequence(const SwitchingSequence& s);

}  // namespace gswitch
