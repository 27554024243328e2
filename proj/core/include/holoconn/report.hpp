#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holoconn/families.hpp"
#include "holoconn/killing.hpp"
#include "holoconn/projective.hpp"

namespace holoconn {

enum class Analysis { Torsion, Curvature, Flat, Projective, Killing };

const char* analysis_name(Analysis a);
std::optional<Analysis> analysis_from_name(const std::string& name);

enum class OutputFormat { Text, Machine };

/// One analysis request: a connection (inline Christoffels or a family
/// constructor), the analyses to run and their parameters.
struct AnalysisRequest {
  Chart chart;
  std::string source_kind;                       // "inline" | "elliptic" | "translation"
  std::map<std::string, std::string> source_params;  // echoed verbatim
  Connection connection;
  std::set<Analysis> analyses;
  std::optional<ChartPoint> point;
  std::vector<std::string> point_text;           // as written, for the echo
  int order = 6;
  int window = 3;
  OutputFormat format = OutputFormat::Text;

  /// Enforces the request invariants (killing needs a point and order >= 2).
  void validate() const;
};

struct KillingReport {
  std::vector<std::pair<int, int>> dimensions;  // (order, dim)
  bool stabilized = false;
  int dimension = 0;
  std::vector<std::pair<SeriesJet, SeriesJet>> basis;
};

/// Results of one request. Wall-clock timing appears in the text rendering
/// only; the machine rendering is fully deterministic.
struct Report {
  AnalysisRequest request;
  std::optional<DiffTensor> torsion_tensor;
  std::optional<CurvatureTensor> curvature_tensor;
  std::optional<bool> flat;
  std::optional<GeodesicOde> ode;
  std::optional<LiouvillePair> liouville;
  std::optional<bool> projectively_flat;
  std::optional<KillingReport> killing;
  double elapsed_ms = 0.0;
};

/// Parses a connection file: line-oriented `key = value` statements, one or
/// more [connection] sections (a file without section headers is a single
/// request), `#` comments, `;` statement separators, quoted expression
/// strings. Performs full syntactic and semantic validation.
///
/// Throws SyntaxError (line/column), UnknownVariable, ArityError.
std::vector<AnalysisRequest> parse_connection_file(const std::string& text);

/// Executes exactly the requested analyses; deterministic for identical
/// input. Module errors are rethrown as AnalysisError with the analysis name
/// attached.
Report run(const AnalysisRequest& request);

/// Runs a batch concurrently; report order matches input order.
std::vector<Report> run_batch(const std::vector<AnalysisRequest>& requests);

std::string render_text(const std::vector<Report>& reports);
/// Canonical machine rendering (JSON, two-space indent, trailing newline).
/// Parsing and re-serializing this string is byte-identical.
std::string render_machine(const std::vector<Report>& reports);

}  // namespace holoconn
