#pragma once

#include "painleve/cli/report.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace painleve::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitIndeterminate = 2, kExitInputError = 3 };

int exit_code(Status status);

/// Equation text of a .ode document: '#' lines dropped, the rest joined.
std::string strip_comments(const std::string& document);

enum class Format { kText, kJson };

struct CorpusEntry {
  std::string file;
  std::optional<AnalysisReport> report;
  std::string error;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;  // filename order
};

/// Analyzes every *.ode file in `dir` with `jobs` workers. Per-file failures
/// are recorded in the entry; the result does not depend on `jobs`.
CorpusSummary run_corpus(const std::filesystem::path& dir, unsigned jobs,
                         const AnalysisOptions& options = {});

std::string render_corpus(const CorpusSummary& summary, Format format);

/// argv excludes nothing: args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace painleve::cli
