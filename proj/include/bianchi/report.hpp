#pragma once

// JSON (schema 1) and text rendering of verdicts. Integers are written as
// decimal strings.

#include <string>

#include "bianchi/pipeline.hpp"

namespace bianchi {

inline constexpr int kReportSchema = 1;

std::string report_json(const Verdict& v, int indent = 2);

/// One line: m, branch, statuses, root count, cusps, certificate.
std::string summary_line(const Verdict& v);

}  // namespace bianchi
