#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/fan.hpp"

namespace toric {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

std::int64_t parse_integer(const Token& tok, int line) {
  std::int64_t value = 0;
  std::string_view s = tok.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("integer '" + std::string(tok.text) + "' out of range", line, tok.column);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, found '" + std::string(tok.text) + "'", line, tok.column);
  return value;
}

enum class Section { kHeader, kBeforeRays, kRays, kCones };

}  // namespace

FanPtr parse_fan(std::string_view text) {
  Section section = Section::kHeader;
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<int> ray_lines;
  std::vector<Cone> cones;
  std::set<Cone> seen_cones;
  std::vector<bool> used;
  int line_no = 0;
  int last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    const auto& head = tokens.front();

    switch (section) {
      case Section::kHeader: {
        if (head.text != "dim")
          throw ParseError("expected 'dim <n>', found '" + std::string(head.text) + "'", line_no,
                           head.column);
        if (tokens.size() != 2)
          throw ParseError("'dim' takes exactly one integer", line_no, head.column);
        const auto d = parse_integer(tokens[1], line_no);
        if (d < 1 || d > 16)
          throw ParseError("dimension must be in [1, 16]", line_no, tokens[1].column);
        dim = static_cast<int>(d);
        section = Section::kBeforeRays;
        break;
      }
      case Section::kBeforeRays:
        if (head.text != "rays" || tokens.size() != 1)
          throw ParseError("expected 'rays'", line_no, head.column);
        section = Section::kRays;
        break;
      case Section::kRays: {
        if (head.text == "cones") {
          if (tokens.size() != 1) throw ParseError("'cones' takes no arguments", line_no, tokens[1].column);
          if (rays.empty()) throw ParseError("no rays given", line_no, head.column);
          used.assign(rays.size(), false);
          section = Section::kCones;
          break;
        }
        if (static_cast<int>(tokens.size()) != dim)
          throw ParseError("ray has " + std::to_string(tokens.size()) + " coordinates, expected " +
                               std::to_string(dim),
                           line_no, head.column);
        LatticeVector v;
        for (const auto& t : tokens) v.push_back(parse_integer(t, line_no));
        if (gcd_of(v) == 0) throw ParseError("zero ray", line_no, head.column);
        if (!is_primitive(v))
          throw ParseError("non-primitive ray (coordinate gcd " + std::to_string(gcd_of(v)) + ")",
                           line_no, head.column);
        for (std::size_t j = 0; j < rays.size(); ++j)
          if (rays[j] == v)
            throw ParseError("duplicate ray (same as ray " + std::to_string(j) + " on line " +
                                 std::to_string(ray_lines[j]) + ")",
                             line_no, head.column);
        rays.push_back(std::move(v));
        ray_lines.push_back(line_no);
        break;
      }
      case Section::kCones: {
        if (static_cast<int>(tokens.size()) != dim)
          throw ParseError("maximal cone has " + std::to_string(tokens.size()) +
                               " rays, expected " + std::to_string(dim),
                           line_no, head.column);
        std::vector<int> idx;
        for (const auto& t : tokens) {
          const auto r = parse_integer(t, line_no);
          if (r < 0 || r >= static_cast<std::int64_t>(rays.size()))
            throw ParseError("ray index " + std::to_string(r) + " out of range", line_no, t.column);
          for (int prev : idx)
            if (prev == r) throw ParseError("ray index repeated in cone", line_no, t.column);
          idx.push_back(static_cast<int>(r));
          used[static_cast<std::size_t>(r)] = true;
        }
        Cone c(std::move(idx));
        if (!seen_cones.insert(c).second) throw ParseError("duplicate maximal cone", line_no, head.column);
        cones.push_back(std::move(c));
        break;
      }
    }
    if (end == text.size()) break;
  }

  if (section != Section::kCones) {
    const char* what = section == Section::kHeader       ? "missing 'dim' header"
                       : section == Section::kBeforeRays ? "missing 'rays' section"
                                                         : "missing 'cones' section";
    throw ParseError(what, last_line + 1, 1);
  }
  if (cones.empty()) throw ParseError("no maximal cones given", last_line + 1, 1);
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      throw ParseError("unused ray " + std::to_string(i) + " (not in any maximal cone)",
                       ray_lines[i], 1);

  try {
    return make_fan(dim, std::move(rays), std::move(cones));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

}  // namespace toric
