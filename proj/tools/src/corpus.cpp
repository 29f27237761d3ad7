#include "painleve/cli/cli.hpp"

#include "painleve/parser.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace painleve::cli {

namespace {

CorpusEntry analyze_file(const std::filesystem::path& path, const AnalysisOptions& options) {
  CorpusEntry entry;
  entry.file = path.filename().string();
  std::ifstream in(path);
  std::ostringstream buf;
  if (!in || !(buf << in.rdbuf())) {
    entry.error = "cannot read file";
    return entry;
  }
  try {
    const std::string text = strip_comments(buf.str());
    const Analysis a = analyze(parse_equation(text), options);
    entry.report = make_report(a, text, options.precision);
  } catch (const std::exception& e) {
    entry.error = e.what();
  }
  return entry;
}

}  // namespace

CorpusSummary run_corpus(const std::filesystem::path& dir, unsigned jobs, const AnalysisOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".ode") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  CorpusSummary summary;
  summary.entries.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      summary.entries[i] = analyze_file(files[i], options);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return summary;
}

std::string render_corpus(const CorpusSummary& summary, Format format) {
  std::map<std::string, unsigned> by_verdict{
      {to_string(Status::kPassesNecessary), 0}, {to_string(Status::kFailsPainleve), 0},
      {to_string(Status::kIndeterminate), 0}};
  std::map<std::string, unsigned> by_check;
  unsigned errors = 0;
  for (const auto& e : summary.entries) {
    if (!e.report) {
      ++errors;
      continue;
    }
    ++by_verdict[to_string(e.report->verdict)];
    for (const auto& c : e.report->checks) {
      if (c.hard_failure()) {
        ++by_check[to_string(c.id)];
        break;
      }
    }
  }

  if (format == Format::kJson) {
    Json j;
    j["reports"] = Json::array();
    for (const auto& e : summary.entries) {
      Json ej;
      ej["file"] = e.file;
      if (e.report) ej["report"] = to_json(*e.report);
      else ej["error"] = e.error;
      j["reports"].push_back(std::move(ej));
    }
    Json s;
    s["files"] = summary.entries.size();
    s["errors"] = errors;
    s["verdicts"] = by_verdict;
    s["failing_checks"] = by_check;
    j["summary"] = std::move(s);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  for (const auto& e : summary.entries) {
    os << "== " << e.file << " ==\n";
    if (e.report) os << render_text(*e.report);
    else os << "error: " << e.error << '\n';
    os << '\n';
  }
  os << "summary: " << summary.entries.size() << " files, " << errors << " errors\n";
  for (const auto& [status, count] : by_verdict) os << "  " << status << ": " << count << '\n';
  os << "failing checks:";
  if (by_check.empty()) os << " none";
  for (const auto& [id, count] : by_check) os << "\n  " << id << ": " << count;
  os << '\n';
  return os.str();
}

}  // namespace painleve::cli
