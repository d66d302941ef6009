#include "difflat/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace difflat {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string token; is >> token;) {
    out.push_back(std::move(token));
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<Weight> parse_int(std::string_view s) {
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// "{A,B}" -> {"A","B"}; "{}" -> {}.
std::vector<std::string> parse_braced(std::size_t line, std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError(line, "expected {...}, got '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  if (text.empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PointId resolve(const Poset& poset, std::size_t line, const std::string& name) {
  if (auto id = poset.find(name)) {
    return *id;
  }
  throw ParseError(line, "unknown point name '" + name + "'");
}

PointSet resolve_set(const Poset& poset, std::size_t line, std::string_view text) {
  PointSet out;
  for (const auto& name : parse_braced(line, text)) {
    out.push_back(resolve(poset, line, name));
  }
  normalize(out);
  return out;
}

std::string format_created(const Poset& poset,
                           const std::vector<std::pair<PointId, Weight>>& created) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < created.size(); ++i) {
    os << (i > 0 ? "," : "") << poset.name(created[i].first) << ':' << created[i].second;
  }
  os << '}';
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Poset read_poset(std::istream& in) {
  Poset poset;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) {
      continue;
    }
    const auto tokens = split_ws(line);
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "posetfile" || tokens[1] != "1") {
        throw ParseError(number, "expected header 'posetfile 1'");
      }
      header = true;
      continue;
    }
    if (tokens.size() < 3 || tokens[2] != ":") {
      throw ParseError(number, "expected '<name> <weight> : <covers...>'");
    }
    if (!is_identifier(tokens[0])) {
      throw ParseError(number, "invalid point name '" + tokens[0] + "'");
    }
    if (poset.find(tokens[0])) {
      throw ParseError(number, "duplicate point name '" + tokens[0] + "'");
    }
    const auto weight = parse_int(tokens[1]);
    if (!weight) {
      throw ParseError(number, "invalid weight '" + tokens[1] + "'");
    }
    if (*weight < 1) {
      throw ParseError(number, "weight must be at least 1, got " + tokens[1]);
    }
    PointSet covers;
    for (std::size_t k = 3; k < tokens.size(); ++k) {
      auto id = poset.find(tokens[k]);
      if (!id) {
        throw ParseError(number, "cover '" + tokens[k] +
                                     "' is not defined on an earlier line");
      }
      covers.push_back(*id);
    }
    try {
      poset.add_point(*weight, std::move(covers), std::nullopt, tokens[0]);
    } catch (const PosetError& e) {
      throw ParseError(number, e.what());
    }
  }
  if (!header) {
    throw ParseError(number, "missing header 'posetfile 1'");
  }
  return poset;
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& poset) {
  out << "posetfile 1\n";
  for (PointId p : poset.ids()) {
    out << poset.name(p) << ' ' << poset.weight(p) << " :";
    for (PointId c : poset.lower_covers(p)) {
      out << ' ' << poset.name(c);
    }
    out << '\n';
  }
}

std::string write_poset(const Poset& poset) {
  std::ostringstream os;
  write_poset(os, poset);
  return os.str();
}

void write_poset_file(const std::string& path, const Poset& poset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  write_poset(out, poset);
}

void write_trace(std::ostream& out, const Poset& poset, const ProcessTrace& trace) {
  out << "tracefile 1\n";
  for (const auto& record : trace.records) {
    const StepOutcome& o = record.outcome;
    out << "ideal " << format_set(poset, o.ideal.members()) << '\n';
    out << "  degree " << o.degree << '\n';
    out << "  deletion " << format_set(poset, o.deletion_set) << " weight "
        << o.deletion_weight << '\n';
    out << "  total " << o.total_insertion_weight << '\n';
    out << "  existing " << format_set(poset, o.old_insertion_points) << " weight "
        << o.old_insertion_weight << '\n';
    if (!o.given_new_points.empty()) {
      out << "  given " << format_set(poset, o.given_new_points) << " weight "
          << o.given_new_weight << '\n';
    }
    out << "  new " << format_created(poset, record.created) << '\n';
  }
}

std::string write_trace(const Poset& poset, const ProcessTrace& trace) {
  std::ostringstream os;
  write_trace(os, poset, trace);
  return os.str();
}

ProcessTrace read_trace(std::istream& in, const Poset& poset) {
  ProcessTrace trace;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!skippable(line)) {
      lines.emplace_back(number, split_ws(line));
    }
  }
  if (lines.empty() || lines[0].second != std::vector<std::string>{"tracefile", "1"}) {
    throw ParseError(lines.empty() ? number : lines[0].first,
                     "expected header 'tracefile 1'");
  }

  std::size_t k = 1;
  auto expect = [&](const char* key, std::size_t arity) -> const std::vector<std::string>& {
    if (k >= lines.size()) {
      throw ParseError(number, std::string("unexpected end of file, expected '") + key + "'");
    }
    const auto& [at, tokens] = lines[k];
    if (tokens.empty() || tokens[0] != key || tokens.size() != arity) {
      throw ParseError(at, std::string("expected '") + key + "' line");
    }
    ++k;
    return tokens;
  };
  auto integer = [&](const std::string& text) {
    const auto value = parse_int(text);
    if (!value) {
      throw ParseError(lines[k - 1].first, "invalid integer '" + text + "'");
    }
    return *value;
  };

  while (k < lines.size()) {
    const std::size_t start = lines[k].first;
    TraceRecord record;
    StepOutcome& o = record.outcome;
    o.ideal = Ideal(resolve_set(poset, start, expect("ideal", 2)[1]));
    o.degree = integer(expect("degree", 2)[1]);
    {
      const auto& t = expect("deletion", 4);
      o.deletion_set = resolve_set(poset, lines[k - 1].first, t[1]);
      o.deletion_weight = integer(t[3]);
    }
    o.total_insertion_weight = integer(expect("total", 2)[1]);
    {
      const auto& t = expect("existing", 4);
      o.old_insertion_points = resolve_set(poset, lines[k - 1].first, t[1]);
      o.old_insertion_weight = integer(t[3]);
    }
    if (k < lines.size() && !lines[k].second.empty() && lines[k].second[0] == "given") {
      const auto& t = expect("given", 4);
      o.given_new_points = resolve_set(poset, lines[k - 1].first, t[1]);
      o.given_new_weight = integer(t[3]);
    }
    {
      const auto& t = expect("new", 2);
      const std::size_t at = lines[k - 1].first;
      for (const auto& item : parse_braced(at, t[1])) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw ParseError(at, "expected name:weight, got '" + item + "'");
        }
        const PointId id = resolve(poset, at, item.substr(0, colon));
        const auto w = parse_int(std::string_view(item).substr(colon + 1));
        if (!w) {
          throw ParseError(at, "invalid weight in '" + item + "'");
        }
        record.created.emplace_back(id, *w);
      }
    }
    o.new_weight_budget = o.total_insertion_weight - o.old_insertion_weight;

    Weight created_weight = 0;
    for (const auto& [id, w] : record.created) created_weight += w;
    if (o.deletion_weight != weight_sum(poset, o.deletion_set) ||
        o.old_insertion_weight != weight_sum(poset, o.old_insertion_points) ||
        o.given_new_weight != weight_sum(poset, o.given_new_points) ||
        o.total_insertion_weight != o.deletion_weight + o.degree ||
        created_weight != o.remaining_budget()) {
      throw ParseError(start, "record for " + format_set(poset, o.ideal.members()) +
                                  " violates the step identities");
    }
    trace.records.push_back(std::move(record));
  }
  return trace;
}

std::string export_dot(const Poset& poset, const std::optional<Ideal>& highlight) {
  PointSet deletion;
  PointSet insertion;
  if (highlight) {
    if (!poset.is_ideal(highlight->members())) {
      throw PosetError("highlight set is not an ideal: " +
                       format_set(poset, highlight->members()));
    }
    deletion = deletion_points(poset, *highlight);
    insertion = insertion_points(poset, *highlight);
  }

  std::vector<std::size_t> height(poset.size(), 0);
  std::map<std::size_t, PointSet> by_height;
  for (PointId p : poset.ids()) {
    for (PointId c : poset.lower_covers(p)) {
      height[p.value] = std::max(height[p.value], height[c.value] + 1);
    }
    by_height[height[p.value]].push_back(p);
  }

  std::ostringstream os;
  os << "digraph poset {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (const auto& [h, points] : by_height) {
    os << "  { rank=same;";
    for (PointId p : points) os << " \"" << poset.name(p) << "\";";
    os << " }\n";
  }
  for (PointId p : poset.ids()) {
    os << "  \"" << poset.name(p) << "\" [label=\"" << poset.name(p);
    if (poset.weight(p) != 1) {
      os << "\\n" << poset.weight(p);
    }
    os << '"';
    if (contains(deletion, p)) {
      os << ", style=filled, fillcolor=blue, fontcolor=white";
    } else if (highlight && highlight->contains(p)) {
      os << ", style=filled, fillcolor=lightgray";
    } else if (contains(insertion, p)) {
      os << ", color=orange, fontcolor=orange, penwidth=2";
    }
    os << "];\n";
  }
  for (PointId p : poset.ids()) {
    for (PointId c : poset.lower_covers(p)) {
      os << "  \"" << poset.name(c) << "\" -> \"" << poset.name(p) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Ideal parse_ideal(const Poset& poset, std::string_view names) {
  if (!names.empty() && names.front() == '{' && names.back() == '}') {
    names = names.substr(1, names.size() - 2);
  }
  PointSet members;
  std::size_t start = 0;
  while (start <= names.size() && !names.empty()) {
    const auto comma = names.find(',', start);
    const auto token = names.substr(start, comma - start);
    if (token.empty()) {
      throw PosetError("empty point name in ideal list");
    }
    members.push_back(poset.at(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return poset.ideal(std::move(members));
}

}  // namespace difflat
