#include "pftop_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "pftop/construction.hpp"
#include "pftop/error.hpp"
#include "pftop/expr.hpp"
#include "pftop/family_io.hpp"
#include "pftop/law_lab.hpp"
#include "pftop/relations.hpp"
#include "pftop/topology_check.hpp"

namespace pftop::cli {

namespace {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

InclusionMode parse_mode(const std::string& text) {
  return text == "reversed" ? InclusionMode::Reversed : InclusionMode::Literal;
}

json values_json(const PictureFuzzySet& set) {
  json out = json::object();
  for (std::size_t i = 0; i < set.size(); ++i) {
    out[set.universe().label(i)] = {
        {"mu", to_decimal(set[i].mu)}, {"rho", to_decimal(set[i].rho)}, {"sigma", to_decimal(set[i].sigma)}};
  }
  return out;
}

json member_json(const Member& m) { return {{"name", m.name}, {"values", values_json(m.set)}}; }

std::string rho_text(const std::vector<Grade>& rho) {
  std::string out = "(";
  for (std::size_t i = 0; i < rho.size(); ++i) out += (i ? ", " : "") + to_decimal(rho[i]);
  return out + ")";
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string(sep) : "") + items[i];
  return out;
}

struct Options {
  std::string file;
  bool json = false;
  std::string mode = "literal";
  std::vector<std::string> subbase;
  bool require_minimal = false;
  std::string output;
  std::optional<std::size_t> expect_rank;
  std::string expr;
  std::vector<std::string> laws;
  std::optional<std::string> step;
  std::optional<int> universe_size;
  std::optional<int> arity;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = laws::kDefaultSeed;
};

int run_check(const Options& o, std::ostream& out) {
  const Family family = load_family(read_file(o.file));
  const InclusionMode mode = parse_mode(o.mode);
  const AxiomReport report = check_axioms(family);
  const auto full = PictureFuzzySet::full(family.universe());
  const auto null = PictureFuzzySet::null(family.universe());

  if (o.json) {
    json doc{{"command", "check"}, {"format_version", kFormatVersion}, {"file", o.file},
             {"mode", to_string(mode)}, {"is_topology", report.is_topology}};
    json violations = json::array();
    for (const auto& v : report.violations) {
      json operands = json::array();
      for (const auto& m : v.operands) operands.push_back(member_json(m));
      violations.push_back({{"kind", to_string(v.kind)}, {"operands", operands}, {"result", values_json(v.result)}});
    }
    doc["violations"] = violations;
    json bounds = json::array();
    for (const auto& m : family.members()) {
      bounds.push_back({{"name", m.name},
                        {"above_null", includes(null, m.set, mode)},
                        {"below_full", includes(m.set, full, mode)}});
    }
    doc["bounds"] = bounds;
    out << doc.dump(2) << '\n';
  } else {
    out << o.file << ": " << family.size() << " sets over " << family.universe().size() << " elements\n";
    if (report.is_topology) {
      out << "topology axioms: satisfied\n";
    } else {
      out << "topology axioms: violated (" << report.violations.size() << ")\n";
      for (const auto& v : report.violations) {
        out << "  " << to_string(v.kind) << ": ";
        switch (v.kind) {
          case ViolationKind::MissingFull: out << "I is not a member\n"; continue;
          case ViolationKind::MissingNull: out << "O is not a member\n"; continue;
          case ViolationKind::UnionEscape:
          case ViolationKind::IntersectionEscape: break;
        }
        const char* op = v.kind == ViolationKind::UnionEscape ? " | " : " & ";
        out << v.operands[0].name << op << v.operands[1].name << " = " << to_string(v.result)
            << " is not a member\n";
      }
    }
    std::vector<std::string> outside;
    for (const auto& m : family.members()) {
      if (!includes(null, m.set, mode) || !includes(m.set, full, mode)) outside.push_back(m.name);
    }
    out << "bounds (" << to_string(mode) << "): ";
    if (outside.empty()) {
      out << "every member lies between O and I\n";
    } else {
      out << "not between O and I: " << join(outside, ", ") << '\n';
    }
  }
  return report.is_topology ? kSuccess : kPropertyFailed;
}

int run_generate(const Options& o, std::ostream& out) {
  const Family family = load_family(read_file(o.file));
  const Family subbase = o.subbase.empty() ? family : family.select(o.subbase);
  const ConstructionTrace trace = generate_from_subbase(subbase, o.require_minimal);
  const std::size_t rank = rank_of(trace.topology).value;
  const bool rank_differs = o.expect_rank && *o.expect_rank != rank;
  if (!o.output.empty()) write_file(o.output, save_family(trace.topology));

  if (o.json) {
    json doc{{"command", "generate"}, {"format_version", kFormatVersion}, {"size", trace.topology.size()},
             {"rank", rank}};
    if (o.expect_rank) {
      doc["expected_rank"] = *o.expect_rank;
      doc["rank_matches"] = !rank_differs;
    }
    doc["topology"] = json::parse(save_family(trace.topology));
    json provenance = json::object();
    for (const auto& m : trace.topology.members()) provenance[m.name] = expr::print(trace.provenance.at(m.name));
    doc["provenance"] = provenance;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& m : trace.topology.members()) out << "  " << m.name << " = " << to_string(m.set) << '\n';
    out << "|T| = " << trace.topology.size() << ", rank = " << rank << '\n';
    if (rank_differs) out << "note: rank " << rank << " differs from the expected rank " << *o.expect_rank << '\n';
  }
  return kSuccess;
}

int run_rank(const Options& o, std::ostream& out) {
  const Family family = load_family(read_file(o.file));
  const std::size_t rank = rank_of(family).value;
  if (o.json) {
    out << json{{"command", "rank"}, {"format_version", kFormatVersion}, {"size", family.size()}, {"rank", rank}}
               .dump(2)
        << '\n';
  } else {
    out << "|F| = " << family.size() << ", rank = " << rank << '\n';
  }
  return kSuccess;
}

int run_classify(const Options& o, std::ostream& out) {
  const Family family = load_family(read_file(o.file));
  const RhoPartition partition = partition_by_rho(family);
  if (o.json) {
    json classes = json::array();
    for (const auto& c : partition.classes) {
      json rho = json::array();
      for (const auto& g : c.rho) rho.push_back(to_decimal(g));
      classes.push_back({{"rho", rho}, {"members", c.members}});
    }
    out << json{{"command", "classify"}, {"format_version", kFormatVersion}, {"rank", partition.classes.size()},
                {"classes", classes}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& c : partition.classes) out << "rho " << rho_text(c.rho) << ": " << join(c.members, ", ") << '\n';
    out << "rank = " << partition.classes.size() << '\n';
  }
  return kSuccess;
}

int run_eval(const Options& o, std::ostream& out) {
  const Family family = load_family(read_file(o.file));
  const expr::Expr e = expr::parse(o.expr);
  const PictureFuzzySet result = expr::evaluate(e, family);
  std::vector<std::string> matches;
  for (const auto& m : family.members()) {
    if (m.set == result) matches.push_back(m.name);
  }
  if (o.json) {
    out << json{{"command", "eval"}, {"format_version", kFormatVersion}, {"expr", expr::print(e)},
                {"result", values_json(result)}, {"matches", matches}}
               .dump(2)
        << '\n';
  } else {
    out << expr::print(e) << " = " << to_string(result) << '\n';
    if (!matches.empty()) out << "matches: " << join(matches, ", ") << '\n';
  }
  return kSuccess;
}

std::string run_summary(const laws::LawVerdict& v) {
  std::string out = "(" + std::to_string(v.runs.front().instances) + " instances)";
  for (std::size_t i = 1; i < v.runs.size(); ++i) {
    const auto& d = v.runs[i].domain;
    const bool sampled = std::holds_alternative<laws::Randomized>(d.strategy);
    out += " [+" + std::to_string(v.runs[i].instances) + (sampled ? " randomized" : " exhaustive") +
           " at |X|=" + std::to_string(d.universe_size) + "]";
  }
  return out;
}

void print_witness(const laws::Witness& w, std::ostream& out) {
  for (std::size_t i = 0; i < w.sets.size(); ++i) out << "      #" << i + 1 << " " << to_string(w.sets[i]) << '\n';
  if (!w.detail.empty()) out << "      " << w.detail << '\n';
}

int run_laws(const Options& o, std::ostream& out) {
  const InclusionMode mode = parse_mode(o.mode);
  std::vector<laws::LawId> ids;
  for (const auto& text : o.laws) ids.push_back(laws::parse_law_id(text));
  if (ids.empty()) {
    for (const auto& l : laws::catalog()) ids.push_back(l.id);
  }
  const bool custom = o.step || o.universe_size || o.arity || o.samples;

  std::vector<laws::LawVerdict> verdicts;
  for (const auto id : ids) {
    std::vector<laws::SearchDomain> domains;
    if (custom) {
      laws::SearchDomain d;
      if (o.step) d.grade_step = grade_from_decimal(*o.step);
      if (o.universe_size) d.universe_size = *o.universe_size;
      if (o.arity) d.arity = *o.arity;
      if (o.samples) d.strategy = laws::Randomized{*o.samples, o.seed};
      d.include_fixtures = laws::info(id).source != laws::InstanceSource::Tuples;
      domains.push_back(d);
    } else {
      domains = laws::default_domains(id, o.seed);
    }
    verdicts.push_back(laws::check_law(id, domains, mode));
  }

  const bool all_hold = std::all_of(verdicts.begin(), verdicts.end(),
                                    [](const auto& v) { return v.outcome == laws::Outcome::Holds; });
  if (o.json) {
    json list = json::array();
    for (const auto& v : verdicts) {
      const auto& law = laws::info(v.law);
      json runs = json::array();
      for (const auto& r : v.runs) runs.push_back({{"domain", laws::describe(r.domain)}, {"instances", r.instances}});
      json clauses = json::array();
      for (const auto& c : v.clauses) {
        json clause{{"clause", c.clause}, {"informational", c.informational}, {"holds", c.holds},
                    {"checked", c.checked}};
        if (c.witness) {
          json sets = json::array();
          for (const auto& s : c.witness->sets) sets.push_back(values_json(s));
          clause["witness"] = {{"sets", sets}, {"detail", c.witness->detail}};
        }
        clauses.push_back(clause);
      }
      list.push_back({{"id", law.code}, {"statement", law.statement}, {"outcome", laws::to_string(v.outcome)},
                      {"checked", v.checked_count}, {"vacuous", v.vacuous}, {"runs", runs}, {"clauses", clauses}});
    }
    out << json{{"command", "laws"}, {"format_version", kFormatVersion}, {"mode", to_string(mode)}, {"laws", list}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& v : verdicts) {
      out << laws::info(v.law).code << ' ' << laws::to_string(v.outcome) << ' ' << run_summary(v);
      if (v.vacuous) out << " (vacuous)";
      out << '\n';
      for (const auto& c : v.clauses) {
        if (v.outcome == laws::Outcome::Holds && (c.holds || !c.informational)) continue;
        out << "  " << (c.holds ? "holds" : "fails") << (c.informational ? " (informational)" : "") << ": "
            << c.clause << '\n';
        if (c.witness) {
          out << "    witness:\n";
          print_witness(*c.witness, out);
        }
      }
    }
  }
  return all_hold ? kSuccess : kPropertyFailed;
}

std::string diagnostic(const Error& e) {
  std::string kind(to_string(e.kind()));
  if (e.cause() != e.kind()) kind += " (" + std::string(to_string(e.cause())) + ")";
  return kind + ": " + e.message();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picture fuzzy topologies: construction, checking and law search", "pftop"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> modes{"literal", "reversed"};

  auto* check = app.add_subcommand("check", "Check a family against the topology axioms");
  check->add_option("file", o.file, "Family document")->required();
  check->add_option("--mode", o.mode, "Inclusion order for the bounds report")->check(CLI::IsMember(modes));
  check->add_flag("--json", o.json, "Machine-readable report");

  auto* generate = app.add_subcommand("generate", "Generate the topology of a sub-base");
  generate->add_option("file", o.file, "Family document")->required();
  generate->add_option("--subbase", o.subbase, "Member names forming the sub-base (default: all)")->delimiter(',');
  generate->add_flag("--require-minimal", o.require_minimal, "Reject sub-bases that are not minimal");
  generate->add_option("-o,--output", o.output, "Write the topology document here");
  generate->add_option("--expect-rank", o.expect_rank, "Report when the computed rank differs");
  generate->add_flag("--json", o.json, "Machine-readable report");

  auto* rank = app.add_subcommand("rank", "Count the rho-equivalence classes of a family");
  rank->add_option("file", o.file, "Family document")->required();
  rank->add_flag("--json", o.json, "Machine-readable report");

  auto* classify = app.add_subcommand("classify", "Partition a family by rho");
  classify->add_option("file", o.file, "Family document")->required();
  classify->add_flag("--json", o.json, "Machine-readable report");

  auto* lawcmd = app.add_subcommand("laws", "Search the law catalog for counterexamples");
  lawcmd->add_option("--law", o.laws, "Law identifier, e.g. L06 (repeatable; default: all)");
  lawcmd->add_option("--step", o.step, "Grade step: 0.25, 0.10 or 0.05");
  lawcmd->add_option("--universe-size", o.universe_size, "Universe size, 1 to 3");
  lawcmd->add_option("--arity", o.arity, "Sets per instance (default: the law's own)");
  lawcmd->add_option("--samples", o.samples, "Draw this many random instances instead of enumerating");
  lawcmd->add_option("--seed", o.seed, "Random seed");
  lawcmd->add_option("--mode", o.mode, "Inclusion order")->check(CLI::IsMember(modes));
  lawcmd->add_flag("--json", o.json, "Machine-readable report");

  auto* eval = app.add_subcommand("eval", "Evaluate a set expression over a family");
  eval->add_option("file", o.file, "Family document")->required();
  eval->add_option("--expr", o.expr, "Expression, e.g. \"~(K1 | K2) & K3\"")->required();
  eval->add_flag("--json", o.json, "Machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "pftop: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (generate->parsed()) return run_generate(o, out);
    if (rank->parsed()) return run_rank(o, out);
    if (classify->parsed()) return run_classify(o, out);
    if (lawcmd->parsed()) return run_laws(o, out);
    if (eval->parsed()) return run_eval(o, out);
  } catch (const SyntaxError& e) {
    err << "pftop: --expr: " << diagnostic(e) << " (offset " << e.offset() << ")\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "pftop: " << (o.file.empty() ? std::string() : o.file + ": ") << diagnostic(e) << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "pftop: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace pftop::cli
