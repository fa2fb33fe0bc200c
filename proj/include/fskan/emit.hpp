#pragma once

// CSV and JSON emission of solve reports, convergence histories, and case
// matrices.  Numbers are written as the shortest representation that parses
// back to the same double, zero-padded to at least 8 significant digits
// (exact zero stays "0"), so emitted files are both human-readable and
// byte-reproducible.

#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fskan/shooting.hpp"

namespace fskan {

enum class OutputFormat { csv, json };

std::optional<OutputFormat> parse_format(const std::string& name);

std::string format_shortest(double v);  // bare shortest round-trip (used in file names)
std::string format_number(double v);    // shortest round-trip, >= 8 significant digits

// CSV columns eta,f,fp,fpp; JSON mirrors the whole report
void emit_profile(const SolveReport& report, OutputFormat format, std::ostream& sink);

// CSV columns iteration,best_fitness,alpha,eta_inf
void emit_convergence(const ConvergenceHistory& history, std::ostream& sink);

// CSV columns beta0,beta,algorithm,alpha,eta_inf,residual,status
void emit_matrix(const std::vector<MatrixCell>& cells, std::ostream& sink);

nlohmann::json report_to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& j);

}  // namespace fskan
