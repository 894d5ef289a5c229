#include "gswitch/groups/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

namespace gswitch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<int> parse_points(std::string_view body, int degree) {
  std::vector<int> points;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto v = parse_int(token);
    if (!v || *v < 1 || *v > degree) {
      throw std::invalid_argument("bad point '" + token + "' for degree " +
                                  std::to_string(degree));
    }
    points.push_back(*v - 1);
    token.clear();
  };
  for (char ch : body) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return points;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  if (text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated image list");
    std::vector<int> image = parse_points(text.substr(1, text.size() - 2), degree);
    if (static_cast<int>(image.size()) != degree) {
      throw std::invalid_argument("image list has " + std::to_string(image.size()) +
                                  " entries, expected " + std::to_string(degree));
    }
    return Permutation(std::span<const int>(image));
  }
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') {
      throw std::invalid_argument("expected '(' in permutation '" +
                                  std::string(text) + "'");
    }
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unterminated cycle in '" + std::string(text) + "'");
    }
    auto points = parse_points(text.substr(pos + 1, close - pos - 1), degree);
    if (!points.empty()) cycles.push_back(std::move(points));
    pos = close + 1;
  }
  return Permutation::from_cycles(degree, cycles);
}

ColourGroup parse_group_spec(std::string_view text, std::optional<int> degree) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty group spec");

  if (text == "trivial" || text == "1") {
    if (!degree) throw std::invalid_argument("trivial group needs a degree");
    return ColourGroup::trivial(*degree);
  }

  if (std::isalpha(static_cast<unsigned char>(text.front()))) {
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    auto m = parse_int(text.substr(1));
    if (!m || *m < 1 || *m > kMaxDegree) {
      throw std::invalid_argument("unknown group '" + std::string(text) + "'");
    }
    if (degree && *degree != *m) {
      throw std::invalid_argument("group " + std::string(text) + " has degree " +
                                  std::to_string(*m) + " but " +
                                  std::to_string(*degree) + " colours are in use");
    }
    switch (family) {
      case 'C': return ColourGroup::cyclic(*m);
      case 'S': return ColourGroup::symmetric(*m);
      case 'A': return ColourGroup::alternating(*m);
      case 'D': return ColourGroup::dihedral(*m);
      default:
        throw std::invalid_argument("unknown group family in '" + std::string(text) + "'");
    }
  }

  std::string_view body = text;
  auto colon = body.find(':');
  if (colon != std::string_view::npos) {
    auto d = parse_int(body.substr(0, colon));
    if (!d) throw std::invalid_argument("bad degree prefix in '" + std::string(text) + "'");
    if (degree && *degree != *d) {
      throw std::invalid_argument("group degree prefix " + std::to_string(*d) +
                                  " disagrees with " + std::to_string(*degree) +
                                  " colours in use");
    }
    degree = *d;
    body = body.substr(colon + 1);
  }
  if (!degree) {
    throw std::invalid_argument("explicit generators need a degree: '" +
                                std::string(text) + "'");
  }

  // Split on ',' or ';' outside parentheses and brackets.
  std::vector<Permutation> gens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    char ch = i < body.size() ? body[i] : ';';
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if ((ch == ',' || ch == ';') && depth == 0) {
      auto piece = trim(body.substr(start, i - start));
      if (!piece.empty()) gens.push_back(parse_permutation(piece, *degree));
      start = i + 1;
    }
  }
  return ColourGroup::generate(*degree, std::move(gens), std::string(text));
}

}  // namespace gswitch
