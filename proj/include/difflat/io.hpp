#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "difflat/poset.hpp"
#include "difflat/process.hpp"

namespace difflat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Poset files:
//
//   posetfile 1
//   A 1 :
//   B 1 :
//   C 1 : A
//
// One line per point in creation order: name, weight, a colon, then the
// names of the covered points, which must appear on earlier lines. Blank
// lines and lines starting with '#' are ignored.
Poset read_poset(std::istream& in);
Poset read_poset_file(const std::string& path);
void write_poset(std::ostream& out, const Poset& poset);
std::string write_poset(const Poset& poset);
void write_poset_file(const std::string& path, const Poset& poset);

// Trace files hold one record per processed ideal, in processing order:
//
//   tracefile 1
//   ideal {A,C}
//     degree 2
//     deletion {C} weight 1
//     total 3
//     existing {B,D} weight 2
//     new {G:1}
//
// A "given {...} weight w" line follows "existing" when the process
// completed a seed poset that already had points covering the deletion set.
void write_trace(std::ostream& out, const Poset& poset, const ProcessTrace& trace);
std::string write_trace(const Poset& poset, const ProcessTrace& trace);
/// Names resolve against `poset`; every record's identities are checked.
ProcessTrace read_trace(std::istream& in, const Poset& poset);

/// Hasse diagram in DOT, drawn bottom-up with points ranked by height.
/// With a highlight ideal, members are filled, deletion points blue and
/// insertion points orange.
std::string export_dot(const Poset& poset, const std::optional<Ideal>& highlight = std::nullopt);

/// Parses "A,C,D" (or "{A,C,D}") into a validated ideal of `poset`.
Ideal parse_ideal(const Poset& poset, std::string_view names);

}  // namespace difflat
