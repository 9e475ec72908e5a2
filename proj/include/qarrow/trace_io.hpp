#pragma once

#include <iosfwd>
#include <string>

#include "qarrow/majorization.hpp"

namespace qarrow::io {

enum class Format { Json, Csv };

// JSON schema: {"algorithm": text, "n": int, "snapshots": [{"label": text,
// "probs": [real, ...]}, ...]}. CSV: header "label,p0,p1,...", one row per
// snapshot, 17 significant digits.
void write_trace(const Trace& t, std::ostream& os, Format fmt);
void write_trace_file(const Trace& t, const std::string& path, Format fmt);

Trace read_trace(std::istream& is, Format fmt);
Trace read_trace_file(const std::string& path);  // format chosen by .csv extension

// {"verdicts": [text, ...], "first_violation": int|null}
void write_report(const TraceReport& rep, std::ostream& os);

// Lorenz data: header "k,<label>,..."; row k holds each slice's cumulative sum
// of its k+1 largest probabilities.
void write_lorenz_csv(const Trace& t, std::ostream& os);
void write_lorenz_csv_file(const Trace& t, const std::string& path);

std::string format_double(double v);  // %.17g

}  // namespace qarrow::io
