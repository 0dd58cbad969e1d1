#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "singlets/characters.hpp"
#include "singlets/errors.hpp"
#include "singlets/invariant_engine.hpp"
#include "singlets/serialization.hpp"
#include "singlets/verification.hpp"

namespace singlets::cli {

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("not an integer: '" + text + "'");
  }
  return value;
}

const std::map<std::string, OutputFormat> kFormats{{"text", OutputFormat::text},
                                                   {"json", OutputFormat::json},
                                                   {"csv", OutputFormat::csv},
                                                   {"bfile", OutputFormat::bfile}};

const std::map<std::string, RepKind> kReps{{"adjoint", RepKind::adjoint},
                                           {"fundamental", RepKind::fundamental},
                                           {"weights-file", RepKind::weights_file}};

const std::vector<std::string> kSequences{"dim", "a1", "a2", "a3", "a4",
                                          "derangement", "su2-binomial", "su2-ladder"};

std::string group_label(int n) { return "SU(" + std::to_string(n) + ")"; }

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed,
                    const char* command) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
    std::string name;
    for (const auto& [k, v] : kFormats) {
      if (v == cfg.format) name = k;
    }
    throw FormatError(std::string("format '") + name + "' is not supported by '" + command + "'");
  }
}

/// Character for the configured representation plus its display name.
std::pair<LaurentPolynomial, std::string> load_rep(const RunConfig& cfg) {
  switch (cfg.rep) {
    case RepKind::adjoint:
      return {adjoint_character(cfg.group_n), "adjoint"};
    case RepKind::fundamental:
      return {fundamental_character(cfg.group_n), "fundamental"};
    case RepKind::weights_file: {
      if (cfg.weights_path.empty()) throw FormatError("--rep weights-file needs a path");
      CharacterSpec spec = load_weight_file(cfg.weights_path);
      if (spec.rank != static_cast<std::size_t>(cfg.group_n - 1)) {
        throw RankMismatchError("weight file rank " + std::to_string(spec.rank) +
                                " does not match " + group_label(cfg.group_n));
      }
      return {character_from_weights(spec), spec.label.empty() ? "weights-file" : spec.label};
    }
  }
  throw FormatError("unknown representation");
}

int cmd_dim(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json}, "dim");
  if (cfg.group_n < 2) throw InvalidRankError("--group must be >= 2");
  if (!cfg.n || *cfg.n < 0) throw DomainError("--n must be >= 0");
  auto [chi, rep] = load_rep(cfg);
  BigInt d = invariant_dimension(InvariantQuery::power(cfg.group_n, std::move(chi), *cfg.n));
  if (cfg.format == OutputFormat::json) {
    out << dimension_record_to_json({group_label(cfg.group_n), rep, *cfg.n, d}) << '\n';
  } else {
    out << to_decimal(d) << '\n';
  }
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json, OutputFormat::csv}, "table");
  DimensionTable table = dimension_table(cfg.groups, cfg.powers, cfg.threads);
  int largest_power = 0;
  for (int p : cfg.powers) largest_power = std::max(largest_power, p);
  const auto stable = derangement_sequence(largest_power);

  std::vector<std::string> header{"n"};
  for (int g : table.groups) header.push_back(group_label(g));
  header.push_back("SU(inf)");

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < table.powers.size(); ++i) {
    const int n = table.powers[i];
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& cell : table.cells[i]) row.push_back(to_decimal(cell));
    row.push_back(to_decimal(stable[static_cast<std::size_t>(n)]));
    rows.push_back(std::move(row));
  }

  if (cfg.format == OutputFormat::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t j = 0; j < cells.size(); ++j) out << (j ? "," : "") << cells[j];
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
  } else if (cfg.format == OutputFormat::json) {
    for (std::size_t i = 0; i < table.powers.size(); ++i) {
      for (std::size_t j = 0; j < table.groups.size(); ++j) {
        out << dimension_record_to_json(
                   {group_label(table.groups[j]), "adjoint", table.powers[i], table.cells[i][j]})
            << '\n';
      }
      out << dimension_record_to_json(
                 {"SU(inf)", "adjoint", table.powers[i],
                  stable[static_cast<std::size_t>(table.powers[i])]})
          << '\n';
    }
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) {
      width[j] = header[j].size();
      for (const auto& row : rows) width[j] = std::max(width[j], row[j].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        out << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << cells[j];
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
  return 0;
}

int cmd_components(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json, OutputFormat::csv}, "components");
  std::vector<SU3Components> rows;
  if (cfg.n) {
    if (*cfg.n < 0) throw DomainError("--n must be >= 0");
    rows.push_back(su3_components(*cfg.n));
  } else {
    const int max_n = cfg.max_n.value_or(10);
    if (max_n < 0) throw DomainError("--max-n must be >= 0");
    rows = su3_component_sequence(max_n);
  }
  if (cfg.format == OutputFormat::csv) out << "n,a1,a2,a3,a4,dimension\n";
  if (cfg.format == OutputFormat::text) out << "n a1 a2 a3 a4 dimension\n";
  for (const auto& c : rows) {
    const BigInt d = su3_dimension_from_components(c);
    if (cfg.format == OutputFormat::json) {
      nlohmann::ordered_json doc;
      doc["n"] = c.n;
      doc["a1"] = to_decimal(c.a1);
      doc["a2"] = to_decimal(c.a2);
      doc["a3"] = to_decimal(c.a3);
      doc["a4"] = to_decimal(c.a4);
      doc["dimension"] = to_decimal(d);
      out << doc.dump() << '\n';
    } else {
      const char sep = cfg.format == OutputFormat::csv ? ',' : ' ';
      out << c.n << sep << c.a1 << sep << c.a2 << sep << c.a3 << sep << c.a4 << sep << d << '\n';
    }
  }
  return 0;
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::bfile, OutputFormat::text, OutputFormat::json}, "sequence");
  const int max_n = cfg.max_n.value_or(30);
  if (max_n < 0) throw DomainError("--max-n must be >= 0");

  std::vector<BigInt> terms;
  std::string rep = "adjoint";
  if (cfg.name == "dim") {
    if (cfg.group_n < 2) throw InvalidRankError("--group must be >= 2");
    auto [chi, label] = load_rep(cfg);
    rep = label;
    terms = invariant_dimension_sequence(cfg.group_n, chi, max_n);
  } else if (cfg.name.size() == 2 && cfg.name[0] == 'a') {
    for (const auto& c : su3_component_sequence(max_n)) {
      terms.push_back(cfg.name == "a1" ? c.a1 : cfg.name == "a2" ? c.a2 : cfg.name == "a3" ? c.a3 : c.a4);
    }
  } else if (cfg.name == "derangement") {
    terms = derangement_sequence(max_n);
  } else if (cfg.name == "su2-binomial") {
    for (int n = 0; n <= max_n; ++n) terms.push_back(su2_dimension_by_binomials(n));
  } else if (cfg.name == "su2-ladder") {
    for (int n = 0; n <= max_n; ++n) terms.push_back(su2_cg_oracle(n));
  } else {
    throw FormatError("unknown sequence '" + cfg.name + "'");
  }

  if (cfg.format == OutputFormat::bfile) {
    write_bfile(out, terms);
  } else if (cfg.format == OutputFormat::json) {
    for (std::size_t n = 0; n < terms.size(); ++n) {
      if (cfg.name == "dim") {
        out << dimension_record_to_json({group_label(cfg.group_n), rep, static_cast<int>(n), terms[n]})
            << '\n';
      } else {
        nlohmann::ordered_json doc;
        doc["sequence"] = cfg.name;
        doc["n"] = n;
        doc["value"] = to_decimal(terms[n]);
        out << doc.dump() << '\n';
      }
    }
  } else {
    for (std::size_t n = 0; n < terms.size(); ++n) out << n << ": " << terms[n] << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json}, "verify");
  Verifier verifier;
  VerifyOptions options{cfg.max_n, cfg.order};
  std::vector<CheckReport> reports;
  if (cfg.name == "all") {
    reports = verifier.run_all(options);
  } else {
    reports.push_back(verifier.run(cfg.name, options));
  }
  bool all_passed = true;
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed;
    if (cfg.format == OutputFormat::json) {
      out << check_report_to_json(r) << '\n';
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.check << " [" << r.range_begin << ", "
          << r.range_end << "]";
      if (r.first_violation) out << " first violation at " << *r.first_violation;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << '\n';
    }
  }
  return all_passed ? 0 : 1;
}

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      int v = parse_int(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (const FormatError&) {
    }
  }
  return 1;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int first = parse_int(text.substr(0, dots));
    const int last = parse_int(text.substr(dots + 2));
    if (first > last) throw FormatError("empty range '" + text + "'");
    for (int v = first; v <= last; ++v) out.push_back(v);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw FormatError("empty list");
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singlet counting for tensor powers of SU(N) representations", "singlets"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_threads();
  std::string format;
  std::vector<std::string> rep_args{"adjoint"};
  std::string groups = "2..7";
  std::string powers = "2..8";

  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    format = fallback;
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
  };
  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--rep", rep_args, "adjoint | fundamental | weights-file [PATH]")
        ->expected(1, 2);
    sub->add_option("--weights", cfg.weights_path, "Weight file (JSON) for --rep weights-file");
  };

  auto* dim = app.add_subcommand("dim", "Singlets in the n-th tensor power of a representation");
  dim->add_option("--group", cfg.group_n, "N of SU(N)")->required();
  dim->add_option("--n", cfg.n, "Tensor power")->required();
  add_rep(dim);

  auto* table = app.add_subcommand("table", "Adjoint singlet counts for a grid of N and n");
  table->add_option("--groups", groups, "Range such as 2..7 or list 2,3,5");
  table->add_option("--powers", powers, "Range such as 2..8");
  table->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* components = app.add_subcommand("components", "SU(3) adjoint components a1..a4");
  components->add_option("--n", cfg.n, "Single power");
  components->add_option("--max-n", cfg.max_n, "Powers 0..max-n (default 10)");

  auto* sequence = app.add_subcommand("sequence", "Emit an integer sequence");
  sequence->add_option("name", cfg.name, "dim | a1..a4 | derangement | su2-binomial | su2-ladder")
      ->required()
      ->check(CLI::IsMember(kSequences));
  sequence->add_option("--group", cfg.group_n, "N of SU(N) for 'dim'");
  sequence->add_option("--max-n", cfg.max_n, "Last index (default 30)");
  add_rep(sequence);

  auto* verify = app.add_subcommand("verify", "Run a named verification, or 'all'");
  std::vector<std::string> checks{"all"};
  for (auto name : check_names()) checks.emplace_back(name);
  verify->add_option("check", cfg.name, "Check name")->required()->check(CLI::IsMember(checks));
  verify->add_option("--max-n", cfg.max_n, "Range of n (check-specific default)");
  verify->add_option("--order", cfg.order, "Truncation order of ODE residuals (default 40)");

  for (auto* sub : {dim, table, components, sequence, verify}) {
    add_format(sub, sub == sequence ? "bfile" : "text");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  // Each subcommand has its own --format; pick the one that was parsed.
  for (auto* sub : {dim, table, components, sequence, verify}) {
    if (!sub->parsed()) continue;
    if (auto* opt = sub->get_option("--format"); opt->count() > 0) format = opt->as<std::string>();
    else format = sub == sequence ? "bfile" : "text";
  }

  try {
    cfg.format = kFormats.at(format);
    if (auto it = kReps.find(rep_args.front()); it != kReps.end()) {
      cfg.rep = it->second;
    } else {
      throw FormatError("unknown representation '" + rep_args.front() + "'");
    }
    if (rep_args.size() == 2) {
      if (cfg.rep != RepKind::weights_file) throw FormatError("only weights-file takes a path");
      cfg.weights_path = rep_args[1];
    }

    if (dim->parsed()) {
      cfg.command = Command::dim;
      return cmd_dim(cfg, out);
    }
    if (table->parsed()) {
      cfg.command = Command::table;
      cfg.groups = parse_int_list(groups);
      cfg.powers = parse_int_list(powers);
      return cmd_table(cfg, out);
    }
    if (components->parsed()) {
      cfg.command = Command::components;
      return cmd_components(cfg, out);
    }
    if (sequence->parsed()) {
      cfg.command = Command::sequence;
      return cmd_sequence(cfg, out);
    }
    cfg.command = Command::verify;
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace singlets::cli
