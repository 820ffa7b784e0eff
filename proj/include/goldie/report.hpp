#pragma once

#include <string>

#include <json.hpp>

#include "goldie/oracle.hpp"
#include "goldie/pipeline.hpp"

namespace goldie {

using ReportJson = nlohmann::ordered_json;

// Structured reports. Indices are 1-based and every rational is a "p/q" string.
ReportJson to_json(const AnalysisReport& rep, bool with_points = false);
ReportJson to_json(const FamilyTable& table);
ReportJson to_json(const OracleResult& res);
ReportJson to_json(const QuasiPolynomial& qp);

std::string render_text(const AnalysisReport& rep, bool with_points = false);
std::string render_text(const FamilyTable& table);
std::string render_text(const OracleResult& res);

}  // namespace goldie
