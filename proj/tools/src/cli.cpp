#include "painleve/cli/cli.hpp"

#include "painleve/parser.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace painleve::cli {

int exit_code(Status status) {
  switch (status) {
    case Status::kPassesNecessary: return kExitPass;
    case Status::kFailsPainleve: return kExitFail;
    case Status::kIndeterminate: return kExitIndeterminate;
  }
  return kExitInputError;
}

std::string strip_comments(const std::string& document) {
  std::istringstream in(document);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    if (!out.empty()) out += ' ';
    out += line.substr(first, last - first + 1);
  }
  return out;
}

namespace {

Format parse_format(const std::string& s) { return s == "json" ? Format::kJson : Format::kText; }

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Painlevé test for polynomial ODEs", "painleve-probe"};
  app.require_subcommand(1);

  std::string source, expr, z0_text, format = "text";
  long precision = kDefaultPrecision;
  unsigned depth = kDefaultMaxDepth;
  bool self_check = false, timings = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one equation");
  analyze_cmd->add_option("source", source, "equation file, or - for standard input");
  analyze_cmd->add_option("--expr", expr, "equation text");
  analyze_cmd->add_option("--z0", z0_text, "base point (Gaussian rational)");
  analyze_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--precision", precision, "working precision in bits")->check(CLI::Range(32L, 1L << 16));
  analyze_cmd->add_option("--depth", depth, "maximum Laurent depth")->check(CLI::Range(1u, 4096u));
  analyze_cmd->add_flag("--self-check", self_check, "compare H and R with the series oracle");
  analyze_cmd->add_flag("--timings", timings, "report per-stage timings");

  std::string dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string corpus_format = "text";
  auto* corpus_cmd = app.add_subcommand("corpus", "analyze every .ode file in a directory");
  corpus_cmd->add_option("dir", dir, "directory")->required();
  corpus_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  corpus_cmd->add_option("--format", corpus_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "painleve-probe: " << e.what() << '\n';
    return kExitInputError;
  }

  if (*corpus_cmd) {
    if (!std::filesystem::is_directory(dir)) {
      err << "painleve-probe: not a directory: " << dir << '\n';
      return kExitInputError;
    }
    out << render_corpus(run_corpus(dir, jobs), parse_format(corpus_format));
    return kExitPass;
  }

  if (source.empty() == expr.empty()) {
    err << "painleve-probe: give exactly one of <path>, - or --expr\n";
    return kExitInputError;
  }
  std::string text;
  if (!expr.empty()) {
    text = strip_comments(expr);
  } else {
    std::ostringstream buf;
    if (source == "-") {
      buf << in.rdbuf();
    } else {
      std::ifstream file(source);
      if (!file || !(buf << file.rdbuf())) {
        err << "painleve-probe: cannot read " << source << '\n';
        return kExitInputError;
      }
    }
    text = strip_comments(buf.str());
  }

  AnalysisOptions options;
  options.precision = precision;
  options.max_depth = depth;
  options.self_check = self_check;
  try {
    if (!z0_text.empty()) options.z0 = GaussRational::from_string(z0_text);
  } catch (const std::exception& e) {
    err << "painleve-probe: invalid --z0: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    const Analysis a = analyze(parse_equation(text), options);
    const AnalysisReport report = make_report(a, text, precision);
    if (parse_format(format) == Format::kJson) out << to_json(report, timings).dump(2) << '\n';
    else out << render_text(report, timings);
    return exit_code(report.verdict);
  } catch (const InputError& e) {
    err << "painleve-probe: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SelfCheckMismatch& e) {
    err << "painleve-probe: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NumericFailure& e) {
    err << "painleve-probe: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const std::invalid_argument& e) {
    err << "painleve-probe: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace painleve::cli
