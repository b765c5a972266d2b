#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "loopforge/pipeline.hpp"

namespace loopforge {

struct BenchRow {
  std::string name;  // file stem
  PipelineResult result;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by file name

  /// Fixed-width table: problem shape, generation time/status, number of
  /// equations, finiteness, solver time/status, verification verdict.
  std::string table() const;
  /// One JSON object per line with stable field names.
  std::string records() const;
};

/// Runs every `*.loop` file of `dir` (sorted by name) through the
/// pipeline on `jobs` worker threads (0 = hardware concurrency). A failing
/// row never stops the others.
BenchReport run_bench(const std::filesystem::path& dir, const PipelineOptions& options, std::size_t jobs = 0);

}  // namespace loopforge
