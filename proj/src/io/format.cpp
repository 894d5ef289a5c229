#include "gswitch/io/format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gswitch/groups/group_spec.hpp"

namespace gswitch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view s, int line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" +
                               std::string(s) + "'");
  }
  return v;
}

struct Header {
  int n = 0;
  int m = 0;
  bool partial = false;
};

Header parse_header(std::string_view line, int lineno) {
  Header h;
  bool have_n = false, have_m = false;
  for (auto f : fields(line)) {
    auto eq = f.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(lineno, "expected key=value in header, got '" + std::string(f) + "'");
    }
    auto key = f.substr(0, eq);
    int v = to_int(f.substr(eq + 1), lineno, "header value");
    if (key == "n") {
      h.n = v;
      have_n = true;
    } else if (key == "m") {
      h.m = v;
      have_m = true;
    } else if (key == "partial") {
      h.partial = v != 0;
    } else {
      throw ParseError(lineno, "unknown header key '" + std::string(key) + "'");
    }
  }
  if (!have_n || !have_m) throw ParseError(lineno, "header must give n=<n> m=<m>");
  if (h.n < 1) throw ParseError(lineno, "n must be positive");
  if (h.m < 2 || h.m > kMaxDegree) {
    throw ParseError(lineno, "m must be between 2 and " + std::to_string(kMaxDegree));
  }
  return h;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

EdgeColouring parse_colouring(std::string_view text) {
  int lineno = 0;
  int stage = 0;  // 0: expect magic, 1: expect header, 2: edges
  Header h;
  std::vector<int> colours;
  std::vector<int> seen_line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (stage == 0) {
      auto f = fields(line);
      if (f.size() != 2 || f[0] != "ecg") {
        throw ParseError(lineno, "expected 'ecg 1' magic line");
      }
      if (f[1] != "1") throw ParseError(lineno, "unsupported format version " + std::string(f[1]));
      stage = 1;
    } else if (stage == 1) {
      h = parse_header(line, lineno);
      if (h.partial) {
        throw ParseError(lineno, "partial (push graph) files are not complete colourings");
      }
      colours.assign(edge_count(h.n), -1);
      seen_line.assign(edge_count(h.n), 0);
      stage = 2;
    } else {
      auto f = fields(line);
      if (f.size() != 3) throw ParseError(lineno, "expected '<i> <j> <c>'");
      int i = to_int(f[0], lineno, "vertex");
      int j = to_int(f[1], lineno, "vertex");
      int c = to_int(f[2], lineno, "colour");
      if (i < 1 || i > h.n || j < 1 || j > h.n) {
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(h.n));
      }
      if (i == j) throw ParseError(lineno, "loop at vertex " + std::to_string(i));
      if (c < 1 || c > h.m) {
        throw ParseError(lineno, "colour " + std::to_string(c) + " out of range 1.." +
                                     std::to_string(h.m));
      }
      if (i > j) std::swap(i, j);
      auto e = edge_index(h.n, i - 1, j - 1);
      if (colours[e] != -1) {
        throw ParseError(lineno, "duplicate edge (" + std::to_string(i) + "," +
                                     std::to_string(j) + "), first given on line " +
                                     std::to_string(seen_line[e]));
      }
      colours[e] = c - 1;
      seen_line[e] = lineno;
    }
    if (end == text.size()) break;
  }
  if (stage == 0) throw ParseError(lineno, "empty input: expected 'ecg 1'");
  if (stage == 1) throw ParseError(lineno, "missing 'n=<n> m=<m>' header");
  std::vector<Colour> out(colours.size());
  for (int i = 0; i < h.n; ++i) {
    for (int j = i + 1; j < h.n; ++j) {
      auto e = edge_index(h.n, i, j);
      if (colours[e] == -1) {
        throw ParseError(0, "missing edge (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
      }
      out[e] = static_cast<Colour>(colours[e]);
    }
  }
  return EdgeColouring(h.n, h.m, std::move(out));
}

std::string emit_colouring(const EdgeColouring& g) {
  std::string s = "ecg 1\nn=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + "\n";
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      s += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
           std::to_string(g.colour(i, j) + 1) + "\n";
    }
  }
  return s;
}

EdgeColouring read_colouring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_colouring(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string emit_push_graph(const PushGraph& p) {
  std::string s = "ecg 1\nn=" + std::to_string(p.vertices()) + " m=" +
                  std::to_string(p.m()) + " partial=1\n";
  s += "# vertex x = copy * " + std::to_string(p.base_n()) + " + base vertex; colour 0 = no edge\n";
  for (int x = 0; x < p.vertices(); ++x) {
    for (int y = x + 1; y < p.vertices(); ++y) {
      s += std::to_string(x + 1) + " " + std::to_string(y + 1) + " " +
           std::to_string(p.colour(x, y) + 1) + "\n";
    }
  }
  return s;
}

SwitchingSequence parse_sequence(std::string_view text, int m) {
  SwitchingSequence s;
  // Split on ';' at bracket depth 0.
  std::vector<std::string_view> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char ch = i < text.size() ? text[i] : ';';
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in switching sequence");
    if (ch == ';' && depth == 0) {
      auto item = trim(text.substr(start, i - start));
      if (!item.empty()) items.push_back(item);
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in switching sequence");
  for (auto item : items) {
    if (item.size() < 2 || item.front() != '(' || item.back() != ')') {
      throw std::invalid_argument("switch '" + std::string(item) + "' is not of the form (v,perm)");
    }
    auto body = item.substr(1, item.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("switch '" + std::string(item) + "' lacks a ',' after the vertex");
    }
    auto vtext = trim(body.substr(0, comma));
    int v = 0;
    auto [p, ec] = std::from_chars(vtext.data(), vtext.data() + vtext.size(), v);
    if (ec != std::errc() || p != vtext.data() + vtext.size() || v < 1) {
      throw std::invalid_argument("bad vertex '" + std::string(vtext) + "' in switch");
    }
    s.steps.push_back({v - 1, parse_permutation(trim(body.substr(comma + 1)), m)});
  }
  return s;
}

std::string format_sequence(const SwitchingSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (i) out += ";";
    out += "(" + std::to_string(s.steps[i].vertex + 1) + "," +
           s.steps[i].perm.to_cycle_string(true) + ")";
  }
  return out;
}

}  // namespace gswitch
