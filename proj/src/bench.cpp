#include "loopforge/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "json.hpp"

namespace loopforge {

namespace {

std::string fixed(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return buf;
}

std::string finiteness_cell(const PipelineResult& r) {
  if (!r.finiteness) return "-";
  switch (r.finiteness->kind) {
    case Finiteness::Empty:
      return "empty";
    case Finiteness::Finite:
      return "<inf";
    case Finiteness::Infinite:
      return "inf";
  }
  return "-";
}

}  // namespace

BenchReport run_bench(const std::filesystem::path& dir, const PipelineOptions& options, std::size_t jobs) {
  if (!std::filesystem::is_directory(dir)) throw Error("corpus directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".loop") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  BenchReport report;
  report.rows.resize(files.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(files.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < files.size();) {
      BenchRow& row = report.rows[k];
      row.name = files[k].stem().string();
      try {
        row.result = run_pipeline(load_problem(files[k]), options);
      } catch (const std::exception& e) {
        row.result.generation = "error";
        row.result.status = "error";
        row.result.detail = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return report;
}

std::string BenchReport::table() const {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"problem", "mode", "n", "m", "d", "D", "l", "k", "gen[s]", "s", "#sols", "solver[s]", "status",
                   "verified"});
  for (const auto& row : rows) {
    const PipelineResult& r = row.result;
    const bool generated = r.generation == "ok";
    cells.push_back({row.name, std::string(to_string(r.mode)), std::to_string(r.shape.n), std::to_string(r.shape.m),
                     std::to_string(r.shape.d), std::to_string(r.shape.D), std::to_string(r.shape.l),
                     std::to_string(r.shape.k), generated ? fixed(r.generation_time) : r.generation,
                     r.system ? std::to_string(r.system->equations.size()) : "-", finiteness_cell(r),
                     r.model || r.status == "unsat" || r.status == "TL" ? fixed(r.solve_time) : "-", r.status,
                     r.verdict});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t c = 0; c < cells[i].size(); ++c) {
      const std::string& cell = cells[i][c];
      std::string pad(width[c] - cell.size(), ' ');
      out += c == 0 ? cell + pad : "  " + pad + cell;
    }
    out += "\n";
    if (i == 0) out += std::string(out.size() - 1, '-') + "\n";
  }
  for (const auto& row : rows)
    if (!row.result.detail.empty()) out += row.name + ": " + row.result.detail + "\n";
  return out;
}

std::string BenchReport::records() const {
  std::string out;
  for (const auto& row : rows) {
    const PipelineResult& r = row.result;
    nlohmann::ordered_json j;
    j["problem"] = row.name;
    j["mode"] = std::string(to_string(r.mode));
    j["n"] = r.shape.n;
    j["m"] = r.shape.m;
    j["d"] = r.shape.d;
    j["D"] = r.shape.D;
    j["l"] = r.shape.l;
    j["k"] = r.shape.k;
    j["generation"] = r.generation;
    j["generation_seconds"] = r.generation_time;
    j["equations"] = r.system ? nlohmann::json(r.system->equations.size()) : nlohmann::json(nullptr);
    j["finiteness"] = r.finiteness ? nlohmann::json(r.finiteness->to_string()) : nlohmann::json(nullptr);
    j["status"] = r.status;
    j["solver_seconds"] = r.solve_time;
    j["verified"] = r.verdict;
    if (r.model) {
      nlohmann::ordered_json m;
      for (const auto& [name, value] : *r.model) m[name] = to_string(value);
      j["model"] = m;
    }
    j["detail"] = r.detail;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace loopforge
