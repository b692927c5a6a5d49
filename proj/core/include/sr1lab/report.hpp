#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sr1lab/bounds.hpp"
#include "sr1lab/solvers.hpp"
#include "sr1lab/trace.hpp"

namespace sr1lab {

/// Writes the per-iteration trace as CSV: a '#'-prefixed JSON manifest
/// line, the header, then one row per record with 17 significant digits
/// so every double survives a reparse exactly. Missing optional fields
/// come out as empty cells.
void write_trace_csv(const SolveResult& result, const RunManifest& manifest, std::ostream& out);

/// Parsed trace file; the manifest line is kept verbatim so rewriting the
/// file reproduces it byte for byte.
struct TraceFile {
    std::string manifest_line;
    std::vector<IterationRecord> records;
};

TraceFile read_trace_csv(std::istream& in);
void write_trace_csv(const TraceFile& trace, std::ostream& out);

/// Writes envelopes as columns over a shared integer k-grid (cells outside
/// an envelope's tabulated range stay empty). Throws GridMismatch when the
/// tabulated k values of any envelope are not consecutive.
void write_envelopes_csv(const std::vector<RateEnvelope>& envelopes, std::ostream& out);

struct CaseFailure {
    std::string case_id;
    double violation = 0.0;
};

struct SuiteResult {
    std::string suite;
    int cases = 0;
    int passes = 0;
    std::vector<CaseFailure> failures;
    std::vector<std::string> notes;
};

/// Machine-readable verification summary. The process running the suites
/// should exit nonzero iff any suite reports failures.
std::string verify_summary_json(const std::vector<SuiteResult>& suites);

std::string manifest_json(const RunManifest& manifest);

/// 17-significant-digit decimal form; round-trips any finite double.
std::string format_double(double v);

}  // namespace sr1lab
