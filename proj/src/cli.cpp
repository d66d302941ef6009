#include "difflat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "difflat/analyzer.hpp"
#include "difflat/enumeration.hpp"
#include "difflat/io.hpp"
#include "difflat/process.hpp"

namespace difflat {
namespace {

struct Options {
  // construct
  Weight degree = 0;
  std::size_t max_size = 0;
  std::string weights = "unit";
  Weight max_weight = 2;
  std::size_t max_new = 4;
  std::uint64_t branch_limit = 1'000'000;
  std::string order = "cardinality";
  std::string out;
  std::string trace;
  // inputs
  std::string poset;
  std::string ideal;
  std::size_t max_n = 0;
  Weight expect_degree = 0;
  std::optional<std::size_t> horizon;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write " + path);
  }
  file << text;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i > 0 ? "," : "") << values[i];
  }
  return os.str();
}

void print_violation(std::ostream& out, const Poset& poset, const Violation& v) {
  out << "violation " << format_set(poset, v.ideal.members()) << ": insertion weight "
      << v.lhs << " != deletion weight + degree " << v.rhs << '\n';
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const auto degree = DegreeFunction::constant(o.degree);
  const auto order = o.order == "agenda" ? IterationOrder::agenda : IterationOrder::cardinality;

  if (o.weights == "unit") {
    Construction c;
    try {
      c = construct(degree, WeightPolicy::unit(), o.max_size, order);
    } catch (const ConstructionFailure& failure) {
      const auto& w = failure.witness();
      err << "construction failed at ideal " << format_set(w.snapshot, w.ideal.members())
          << ": new weight budget " << w.new_weight_budget << '\n';
      return kExitViolation;
    }
    write_text(o.out, write_poset(c.poset), out);
    if (!o.trace.empty()) {
      write_text(o.trace, write_trace(c.poset, c.trace), out);
    }
    if (o.out != "-") {
      out << "constructed " << c.poset.size() << " points, " << c.trace.records.size()
          << " ideals processed, horizon " << c.horizon << '\n';
    }
    return kExitClean;
  }

  const auto policy = WeightPolicy::search(o.max_weight, o.max_new);
  const SearchResult result = search(degree, policy, o.max_size, o.branch_limit);
  for (std::size_t k = 0; k < result.lattices.size(); ++k) {
    const auto& lattice = result.lattices[k];
    const std::string suffix = "." + std::to_string(k + 1);
    write_text(o.out + suffix, write_poset(lattice.poset), out);
    if (!o.trace.empty()) {
      write_text(o.trace + suffix, write_trace(lattice.poset, lattice.trace), out);
    }
  }
  out << "search: " << result.lattices.size() << " lattices, "
      << result.branches_explored << " branches, " << result.pruned_negative
      << " pruned (negative budget), " << result.pruned_unsplittable
      << " pruned (no weight multiset), " << result.duplicates << " duplicates, "
      << result.root_branches << " branches at {}\n";
  out << "status: " << (result.partial ? "partial (branch limit reached)" : "complete")
      << '\n';
  return kExitClean;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Poset poset = read_poset_file(o.poset);
  const auto report =
      verify_differential(poset, DegreeFunction::constant(o.degree), o.max_size);
  out << "checked " << report.ideal_count << " ideals up to size "
      << report.checked_horizon << ", " << report.violations.size() << " violations\n";
  for (const auto& v : report.violations) {
    print_violation(out, poset, v);
  }
  return report.ok() ? kExitClean : kExitViolation;
}

int cmd_orphans(const Options& o, std::ostream& out) {
  const Poset poset = read_poset_file(o.poset);
  const auto degree = DegreeFunction::constant(o.degree);
  const OrphanReport report = orphan_report(poset);
  out << "orphans " << format_set(poset, report.orphans) << '\n';
  for (const auto& [p, count] : report.multi_orphan_parents) {
    out << "triple orphan: " << poset.name(p) << " is covered by " << count
        << " orphans\n";
  }

  std::optional<std::size_t> horizon = o.horizon;
  if (!horizon) {
    horizon = verified_horizon(poset, degree, poset.size());
  } else if (!verify_differential(poset, degree, *horizon).ok()) {
    out << "differential condition fails within size " << *horizon << '\n';
    horizon = verified_horizon(poset, degree, *horizon);
  }
  if (!horizon) {
    out << "verified horizon: none (the empty ideal fails)\n";
  } else {
    out << "verified horizon: " << *horizon << '\n';
    std::size_t checks = 0;
    std::size_t failed = 0;
    for (const auto& r : derived_relations_all(poset, o.degree, *horizon)) {
      for (const auto& c : r.checks) {
        ++checks;
        if (!c.holds()) {
          ++failed;
          out << "relation " << to_string(c.relation) << " fails at "
              << poset.name(r.point) << ' ' << format_set(poset, c.subjects) << ": "
              << c.lhs << " != " << c.rhs << '\n';
        }
      }
    }
    out << "derived relations: " << checks << " checked, " << failed << " failed\n";
    const auto confirmed = triple_orphan_check(poset, o.degree, *horizon);
    out << "triple orphans inside the verified horizon: "
        << format_set(poset, confirmed) << '\n';
  }
  return report.multi_orphan_parents.empty() ? kExitClean : kExitViolation;
}

int cmd_ranks(const Options& o, std::ostream& out) {
  const Poset poset = read_poset_file(o.poset);
  const RankProfile profile = rank_profile(poset, o.max_n);
  out << join(profile.counts) << '\n';
  if (o.expect_degree > 0) {
    const auto expected =
        partition_convolution_oracle(static_cast<unsigned>(o.expect_degree), o.max_n);
    if (expected != profile.counts) {
      out << "mismatch: expected " << join(expected) << '\n';
      return kExitViolation;
    }
    out << "matches the partition convolution for degree " << o.expect_degree << '\n';
  }
  return kExitClean;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const Poset poset = read_poset_file(o.poset);
  std::optional<Ideal> ideal;
  if (!o.ideal.empty()) {
    ideal = parse_ideal(poset, o.ideal);
  }
  write_text(o.out, export_dot(poset, ideal), out);
  return kExitClean;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify weighted-differential distributive lattices", "difflat"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "Run the ideal-by-ideal construction");
  construct_cmd->add_option("--degree", o.degree, "Constant differential degree")
      ->required()
      ->check(CLI::PositiveNumber);
  construct_cmd->add_option("--max-size", o.max_size, "Largest ideal size to process")
      ->required();
  construct_cmd->add_option("--weights", o.weights, "unit or search")
      ->check(CLI::IsMember({"unit", "search"}));
  construct_cmd->add_option("--max-weight", o.max_weight, "Largest point weight (search)")
      ->check(CLI::PositiveNumber);
  construct_cmd->add_option("--max-new", o.max_new, "New points per ideal (search)")
      ->check(CLI::PositiveNumber);
  construct_cmd->add_option("--branch-limit", o.branch_limit, "Branches to explore (search)");
  construct_cmd->add_option("--order", o.order, "cardinality or agenda")
      ->check(CLI::IsMember({"cardinality", "agenda"}));
  construct_cmd->add_option("--out", o.out, "Poset file ('-' for stdout)")->required();
  construct_cmd->add_option("--trace", o.trace, "Trace file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Check the differential condition");
  analyze_cmd->add_option("--poset", o.poset)->required();
  analyze_cmd->add_option("--degree", o.degree)->required()->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-size", o.max_size)->required();

  auto* orphans_cmd = app.add_subcommand("orphans", "Report orphans and derived relations");
  orphans_cmd->add_option("--poset", o.poset)->required();
  orphans_cmd->add_option("--degree", o.degree)->required()->check(CLI::PositiveNumber);
  orphans_cmd->add_option("--max-size", o.horizon,
                          "Horizon for the relations (default: largest verified)");

  auto* ranks_cmd = app.add_subcommand("ranks", "Count ideals by size");
  ranks_cmd->add_option("--poset", o.poset)->required();
  ranks_cmd->add_option("--max-n", o.max_n)->required();
  ranks_cmd->add_option("--expect-degree", o.expect_degree)->check(CLI::PositiveNumber);

  auto* dot_cmd = app.add_subcommand("export-dot", "Write a Hasse diagram in DOT");
  dot_cmd->add_option("--poset", o.poset)->required();
  dot_cmd->add_option("--ideal", o.ideal, "Comma-separated ideal members to highlight");
  dot_cmd->add_option("--out", o.out, "DOT file ('-' for stdout)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(o, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (orphans_cmd->parsed()) return cmd_orphans(o, out);
    if (ranks_cmd->parsed()) return cmd_ranks(o, out);
    if (dot_cmd->parsed()) return cmd_export_dot(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace difflat
