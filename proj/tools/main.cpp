#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "holoconn/errors.hpp"
#include "holoconn/parser.hpp"
#include "holoconn/report.hpp"
#include "holoconn/version.hpp"

namespace {

using namespace holoconn;

struct AnalyzeOptions {
  std::string file;
  std::string report_list;
  std::string point_text;
  int order = -1;
  int window = -1;
  std::string format;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(s);
  while (std::getline(in, piece, ',')) {
    size_t b = piece.find_first_not_of(" \t");
    size_t e = piece.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(piece.substr(b, e - b + 1));
  }
  return out;
}

int run_analyze(const AnalyzeOptions& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "error: cannot open '" << opt.file << "'\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  std::vector<AnalysisRequest> requests = parse_connection_file(buf.str());

  // Command-line settings override the file for every request.
  for (AnalysisRequest& req : requests) {
    if (!opt.report_list.empty()) {
      req.analyses.clear();
      for (const std::string& name : split_csv(opt.report_list)) {
        auto a = analysis_from_name(name);
        if (!a) throw ArityError("unknown analysis '" + name + "'");
        req.analyses.insert(*a);
      }
    }
    if (!opt.point_text.empty()) {
      auto parts = split_csv(opt.point_text);
      if (parts.size() != 2)
        throw ArityError("--point needs exactly two components");
      req.point = ChartPoint{parse_scalar(parts[0], req.chart),
                             parse_scalar(parts[1], req.chart)};
      req.point_text = parts;
    }
    if (opt.order >= 0) req.order = opt.order;
    if (opt.window >= 0) req.window = opt.window;
    if (opt.format == "text") req.format = OutputFormat::Text;
    if (opt.format == "machine") req.format = OutputFormat::Machine;
    req.validate();
  }

  std::vector<Report> reports = run_batch(requests);
  OutputFormat fmt = requests.empty() ? OutputFormat::Text : requests[0].format;
  std::cout << (fmt == OutputFormat::Machine ? render_machine(reports)
                                             : render_text(reports));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kEngineName) +
               " - exact calculus for holomorphic affine and projective "
               "connections on two-dimensional charts"};
  app.set_version_flag("--version",
                       std::string(kEngineName) + " " + kEngineVersion);
  app.require_subcommand(1);

  AnalyzeOptions opt;
  CLI::App* analyze =
      app.add_subcommand("analyze", "run analyses from a connection file");
  analyze->add_option("file", opt.file, "connection definition file")->required();
  analyze->add_option("--report", opt.report_list,
                      "comma-separated subset of "
                      "torsion,curvature,flat,projective,killing");
  analyze->add_option("--point", opt.point_text,
                      "base point v1,v2 (constant expressions)");
  analyze->add_option("--order", opt.order, "maximum jet order for killing");
  analyze->add_option("--window", opt.window, "stabilization window");
  analyze->add_option("--format", opt.format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run_analyze(opt);
  } catch (const SyntaxError& e) {  // covers UnknownVariable
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ArityError& e) {
    std::cerr << "request error: " << e.what() << "\n";
    return 1;
  } catch (const AnalysisError& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
