#pragma once

// Result serialization. The TSV data file carries one row per sweep point; its
// '#' header records provenance, and only the "# generated:" line is allowed to
// differ between reruns of the same configuration (byte-for-byte otherwise).
// The JSON summary is fully deterministic: keys are emitted sorted and no
// timestamp is included.

#include <string>

#include "fourfold/config.hpp"
#include "fourfold/field.hpp"
#include "fourfold/sweep.hpp"

namespace fourfold {

void write_sweep_data(const std::string& path, const Config& cfg, const SweepResult& result);

// Reads a data file written by write_sweep_data: fills variable and points and
// recomputes max_abs_z / frac_within_3 from the stored z column. pass is left
// false; verdicts belong to the summary, not the data file.
SweepResult read_sweep_data(const std::string& path);

void write_summary_json(const std::string& path, const Config& cfg, const SweepResult& result);
std::string render_summary_json(const Config& cfg, const SweepResult& result);

// Complex envelope samples as "t re im" rows, for eyeballing a realization.
void write_trace(const std::string& path, const FieldTrace& trace);

} // namespace fourfold
