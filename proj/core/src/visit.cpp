#include "turmite/visit.hpp"

#include <charconv>
#include <stdexcept>
#include <unordered_set>

#include "turmite/simulate.hpp"

namespace turmite {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void expect(char c) {
    if (done() || text[pos] != c)
      throw std::invalid_argument("visit encoding: expected '" +
                                  std::string(1, c) + "' at offset " +
                                  std::to_string(pos));
    ++pos;
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      throw std::invalid_argument("visit encoding: expected integer at offset " +
                                  std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

Cell parse_pair(Scanner& s) {
  s.expect('(');
  Coord x = s.integer();
  s.expect(',');
  Coord y = s.integer();
  s.expect(')');
  return {x, y};
}

void append_pair(std::string& out, const Cell& c) {
  out += '(';
  out += std::to_string(c.x);
  out += ',';
  out += std::to_string(c.y);
  out += ')';
}

}  // namespace

VisitInstance parse_visit(std::string_view text, const TurmiteRule* rule) {
  Scanner s{text};
  VisitInstance out;
  std::unordered_set<Cell, CellHash> seen;
  while (s.peek() == '(') {
    s.expect('(');
    Coord x = s.integer();
    s.expect(',');
    Coord y = s.integer();
    s.expect(',');
    std::int64_t color = s.integer();
    s.expect(')');
    if (color < 0) throw std::invalid_argument("visit encoding: negative color");
    if (rule && color >= rule->colors())
      throw std::invalid_argument("visit encoding: color exceeds rule colors");
    Cell cell{x, y};
    if (!seen.insert(cell).second)
      throw std::invalid_argument("visit encoding: duplicate cell");
    out.cells.emplace_back(cell, static_cast<int>(color));
  }
  s.expect('#');
  out.start = parse_pair(s);
  s.expect('#');
  if (s.done()) throw std::invalid_argument("visit encoding: missing direction");
  out.dir = parse_dir(text[s.pos]);
  ++s.pos;
  s.expect('#');
  out.target = parse_pair(s);
  s.expect('#');
  std::int64_t t = s.integer();
  if (t < 0) throw std::invalid_argument("visit encoding: negative time bound");
  out.time = static_cast<std::uint64_t>(t);
  if (!s.done())
    throw std::invalid_argument("visit encoding: trailing characters");
  return out;
}

std::string serialize_visit(const VisitInstance& instance) {
  std::string out;
  for (const auto& [cell, color] : instance.cells) {
    out += '(';
    out += std::to_string(cell.x);
    out += ',';
    out += std::to_string(cell.y);
    out += ',';
    out += std::to_string(color);
    out += ')';
  }
  out += '#';
  append_pair(out, instance.start);
  out += '#';
  out += to_char(instance.dir);
  out += '#';
  append_pair(out, instance.target);
  out += '#';
  out += std::to_string(instance.time);
  return out;
}

Configuration initial_configuration(const VisitInstance& instance, int colors) {
  Configuration config(colors);
  for (const auto& [cell, color] : instance.cells) config.set(cell, color);
  return config;
}

bool decide_visit(const TurmiteRule& rule, const VisitInstance& instance) {
  Configuration config = initial_configuration(instance, rule.colors());
  Pose pose{instance.start, instance.dir};
  if (instance.time == 0) return false;
  if (pose.cell == instance.target) return true;
  for (std::uint64_t t = 1; t < instance.time; ++t) {
    step(rule, config, pose);
    if (pose.cell == instance.target) return true;
  }
  return false;
}

}  // namespace turmite
