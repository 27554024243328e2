#include "holoconn/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <future>
#include <sstream>

#include <nlohmann/json.hpp>

#include "holoconn/errors.hpp"
#include "holoconn/parser.hpp"
#include "holoconn/version.hpp"

namespace holoconn {

using ordered_json = nlohmann::ordered_json;

const char* analysis_name(Analysis a) {
  switch (a) {
    case Analysis::Torsion: return "torsion";
    case Analysis::Curvature: return "curvature";
    case Analysis::Flat: return "flat";
    case Analysis::Projective: return "projective";
    case Analysis::Killing: return "killing";
  }
  return "?";
}

std::optional<Analysis> analysis_from_name(const std::string& name) {
  for (Analysis a : {Analysis::Torsion, Analysis::Curvature, Analysis::Flat,
                     Analysis::Projective, Analysis::Killing})
    if (name == analysis_name(a)) return a;
  return std::nullopt;
}

void AnalysisRequest::validate() const {
  if (analyses.count(Analysis::Killing)) {
    if (!point)
      throw ArityError("killing analysis requires a base point");
    if (order < 2)
      throw ArityError("killing analysis requires order >= 2");
  }
  if (window < 1) throw ArityError("window must be >= 1");
  if (order < 0) throw ArityError("order must be non-negative");
}

// ---------------------------------------------------------------------------
// Connection file parsing
// ---------------------------------------------------------------------------

namespace {

struct Statement {
  std::string key;
  std::string value;   // quotes stripped
  bool quoted = false;
  int line = 0;
  int value_column = 0;  // 1-based column of the value text (inside quotes)
};

struct Section {
  int line = 0;
  std::vector<Statement> statements;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> sections;
  auto current = [&]() -> Section& {
    if (sections.empty()) sections.push_back(Section{1, {}});
    return sections.back();
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    // Strip comments and split statements on ';', both outside quotes.
    std::vector<std::pair<std::string, int>> pieces;  // text, start column
    std::string piece;
    int piece_col = 1;
    bool in_quotes = false;
    for (size_t k = 0; k <= raw.size(); ++k) {
      char c = k < raw.size() ? raw[k] : ';';  // sentinel flush
      if (c == '"') in_quotes = !in_quotes;
      if (!in_quotes && k < raw.size() && c == '#') break;
      if (!in_quotes && c == ';') {
        pieces.emplace_back(piece, piece_col);
        piece.clear();
        piece_col = static_cast<int>(k) + 2;
      } else if (k < raw.size()) {
        piece += c;
      }
    }
    if (in_quotes) throw SyntaxError("unterminated string", line_no,
                                     static_cast<int>(raw.size()) + 1);
    for (auto& [text_piece, col0] : pieces) {
      std::string stmt = trim(text_piece);
      if (stmt.empty()) continue;
      if (stmt == "[connection]") {
        sections.push_back(Section{line_no, {}});
        continue;
      }
      if (stmt.front() == '[')
        throw SyntaxError("unknown section '" + stmt + "'", line_no, col0);
      size_t eq = text_piece.find('=');
      if (eq == std::string::npos)
        throw SyntaxError("expected 'key = value'", line_no, col0);
      std::string key = trim(text_piece.substr(0, eq));
      if (!is_identifier(key))
        throw SyntaxError("invalid key '" + key + "'", line_no, col0);
      std::string value_raw = text_piece.substr(eq + 1);
      size_t vb = value_raw.find_first_not_of(" \t\r");
      if (vb == std::string::npos)
        throw SyntaxError("missing value for '" + key + "'", line_no,
                          col0 + static_cast<int>(eq) + 1);
      int vcol = col0 + static_cast<int>(eq + 1 + vb);
      std::string value = trim(value_raw);
      bool quoted = false;
      if (value.front() == '"') {
        if (value.size() < 2 || value.back() != '"')
          throw SyntaxError("unterminated string", line_no, vcol);
        value = value.substr(1, value.size() - 2);
        quoted = true;
        ++vcol;
      }
      Statement st{key, value, quoted, line_no, vcol};
      current().statements.push_back(std::move(st));
    }
  }
  if (sections.empty()) sections.push_back(Section{1, {}});
  return sections;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string piece;
  for (size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == ',') {
      std::string t = trim(piece);
      if (!t.empty()) out.push_back(t);
      piece.clear();
    } else {
      piece += s[k];
    }
  }
  return out;
}

const std::array<const char*, 8> kGammaKeys = {
    "Gamma1_11", "Gamma1_12", "Gamma1_21", "Gamma1_22",
    "Gamma2_11", "Gamma2_12", "Gamma2_21", "Gamma2_22"};
const std::array<const char*, 6> kTranslationKeys = {
    "Gamma1_11", "Gamma1_12", "Gamma1_22", "Gamma2_11", "Gamma2_12", "Gamma2_22"};

int parse_int(const Statement& st) {
  try {
    size_t pos = 0;
    int v = std::stoi(st.value, &pos);
    if (pos != st.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw SyntaxError("expected an integer for '" + st.key + "'", st.line,
                      st.value_column);
  }
}

AnalysisRequest build_request(const Section& section) {
  std::map<std::string, const Statement*> by_key;
  for (const auto& st : section.statements) {
    if (by_key.count(st.key))
      throw SyntaxError("duplicate key '" + st.key + "'", st.line,
                        st.value_column);
    by_key[st.key] = &st;
  }

  AnalysisRequest req;

  if (auto it = by_key.find("vars"); it != by_key.end()) {
    auto names = split_list(it->second->value);
    if (names.size() != 2)
      throw SyntaxError("'vars' needs exactly two names", it->second->line,
                        it->second->value_column);
    for (const auto& n : names)
      if (!is_identifier(n) || n == "i")
        throw SyntaxError("invalid variable name '" + n + "'",
                          it->second->line, it->second->value_column);
    if (names[0] == names[1])
      throw SyntaxError("variable names must differ", it->second->line,
                        it->second->value_column);
    req.chart = Chart{names[0], names[1]};
    by_key.erase(it);
  }

  auto parse_expr_stmt = [&](const Statement& st) {
    return parse_expression(st.value, req.chart, st.line, st.value_column);
  };

  std::string family = "inline";
  if (auto it = by_key.find("family"); it != by_key.end()) {
    family = it->second->value;
    if (family != "elliptic" && family != "translation")
      throw SyntaxError("unknown family '" + family + "'", it->second->line,
                        it->second->value_column);
    by_key.erase(it);
  }
  req.source_kind = family;

  auto take = [&](const std::string& key) -> const Statement* {
    auto it = by_key.find(key);
    if (it == by_key.end()) return nullptr;
    const Statement* st = it->second;
    by_key.erase(it);
    return st;
  };

  if (family == "elliptic") {
    std::array<Expr, 3> params;
    const std::array<const char*, 3> keys = {"f12", "g22", "g12"};
    for (size_t k = 0; k < 3; ++k) {
      const Statement* st = take(keys[k]);
      if (!st)
        throw ArityError("elliptic family needs parameter '" +
                         std::string(keys[k]) + "'");
      params[k] = parse_expr_stmt(*st);
      req.source_params[keys[k]] = st->value;
    }
    req.connection = elliptic_family(
        EllipticFamilyData(params[0], params[1], params[2]), req.chart);
  } else if (family == "translation") {
    TranslationInvariantData data{};
    std::array<Scalar*, 6> slots = {&data.g1_11, &data.g1_12, &data.g1_22,
                                    &data.g2_11, &data.g2_12, &data.g2_22};
    for (size_t k = 0; k < kTranslationKeys.size(); ++k) {
      const Statement* st = take(kTranslationKeys[k]);
      if (!st) continue;
      Expr e = parse_expr_stmt(*st);
      if (!e.is_constant())
        throw ArityError(std::string("translation family entry '") +
                         kTranslationKeys[k] + "' must be constant");
      *slots[k] = e.constant_value();
      req.source_params[kTranslationKeys[k]] = st->value;
    }
    req.connection = translation_invariant(data, req.chart);
  } else {
    Connection c(req.chart);
    const std::array<std::tuple<int, int, int>, 8> idx = {
        {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2},
         {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}}};
    for (size_t k = 0; k < kGammaKeys.size(); ++k) {
      const Statement* st = take(kGammaKeys[k]);
      if (!st) continue;  // unset entries are zero
      auto [kk, ii, jj] = idx[k];
      c.set_gamma(kk, ii, jj, parse_expr_stmt(*st));
      req.source_params[kGammaKeys[k]] = st->value;
    }
    req.connection = std::move(c);
  }

  if (const Statement* st = take("analyses")) {
    for (const auto& name : split_list(st->value)) {
      auto a = analysis_from_name(name);
      if (!a)
        throw SyntaxError("unknown analysis '" + name + "'", st->line,
                          st->value_column);
      req.analyses.insert(*a);
    }
  } else {
    req.analyses = {Analysis::Torsion, Analysis::Curvature, Analysis::Flat,
                    Analysis::Projective};
  }

  if (const Statement* st = take("point")) {
    auto parts = split_list(st->value);
    if (parts.size() != 2)
      throw SyntaxError("'point' needs exactly two components", st->line,
                        st->value_column);
    for (auto& p : parts)
      if (p.size() >= 2 && p.front() == '"' && p.back() == '"')
        p = p.substr(1, p.size() - 2);
    req.point = ChartPoint{parse_scalar(parts[0], req.chart, st->line),
                           parse_scalar(parts[1], req.chart, st->line)};
    req.point_text = parts;
  }

  if (const Statement* st = take("order")) req.order = parse_int(*st);
  if (const Statement* st = take("window")) req.window = parse_int(*st);
  if (const Statement* st = take("format")) {
    if (st->value == "text")
      req.format = OutputFormat::Text;
    else if (st->value == "machine")
      req.format = OutputFormat::Machine;
    else
      throw SyntaxError("format must be 'text' or 'machine'", st->line,
                        st->value_column);
  }

  if (!by_key.empty()) {
    const Statement* st = by_key.begin()->second;
    throw SyntaxError("unknown key '" + st->key + "'" +
                          (family != "inline" ? " for family '" + family + "'"
                                              : ""),
                      st->line, st->value_column);
  }

  req.validate();
  return req;
}

}  // namespace

std::vector<AnalysisRequest> parse_connection_file(const std::string& text) {
  std::vector<AnalysisRequest> out;
  for (const Section& s : split_sections(text)) out.push_back(build_request(s));
  return out;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

Report run(const AnalysisRequest& request) {
  request.validate();
  Report rep;
  rep.request = request;
  const Connection& c = request.connection;
  auto t0 = std::chrono::steady_clock::now();

  auto guarded = [](Analysis a, auto&& fn) {
    try {
      fn();
    } catch (const AnalysisError&) {
      throw;
    } catch (const Error& e) {
      throw AnalysisError(analysis_name(a), e.what());
    }
  };

  for (Analysis a : request.analyses) {
    switch (a) {
      case Analysis::Torsion:
        guarded(a, [&] { rep.torsion_tensor = torsion(c); });
        break;
      case Analysis::Curvature:
        guarded(a, [&] { rep.curvature_tensor = curvature(c); });
        break;
      case Analysis::Flat:
        guarded(a, [&] { rep.flat = is_flat(c); });
        break;
      case Analysis::Projective:
        guarded(a, [&] {
          rep.ode = geodesic_ode(c);
          rep.liouville = liouville_invariants(*rep.ode);
          rep.projectively_flat = rep.liouville->both_zero();
        });
        break;
      case Analysis::Killing:
        guarded(a, [&] {
          JetSolutionSpace sp =
              killing_jet_space(c, *request.point, request.order);
          KillingReport kr;
          kr.dimensions = sp.per_order;
          kr.basis = sp.basis;
          kr.dimension = sp.per_order.back().second;
          kr.stabilized =
              static_cast<int>(sp.per_order.size()) >= request.window;
          for (size_t k = sp.per_order.size() -
                          std::min<size_t>(request.window, sp.per_order.size());
               kr.stabilized && k < sp.per_order.size(); ++k)
            kr.stabilized = sp.per_order[k].second == kr.dimension;
          rep.killing = std::move(kr);
        });
        break;
    }
  }

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::vector<Report> run_batch(const std::vector<AnalysisRequest>& requests) {
  std::vector<std::future<Report>> futures;
  futures.reserve(requests.size());
  for (const auto& r : requests)
    futures.push_back(std::async(std::launch::async, [&r] { return run(r); }));
  std::vector<Report> out;
  out.reserve(requests.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

ordered_json jet_json(const SeriesJet& j) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : j.coefficients())
    terms.push_back({m.p, m.q, c.to_string()});
  return terms;
}

ordered_json request_json(const AnalysisRequest& req) {
  ordered_json r;
  r["vars"] = {req.chart.v1, req.chart.v2};
  ordered_json src;
  src["kind"] = req.source_kind;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : req.source_params) params[k] = v;
  src["params"] = params;
  r["source"] = src;
  ordered_json an = ordered_json::array();
  for (Analysis a : req.analyses) an.push_back(analysis_name(a));
  r["analyses"] = an;
  if (req.point)
    r["point"] = {req.point_text.size() == 2 ? req.point_text[0]
                                             : req.point->x1.to_string(),
                  req.point_text.size() == 2 ? req.point_text[1]
                                             : req.point->x2.to_string()};
  else
    r["point"] = nullptr;
  r["order"] = req.order;
  r["window"] = req.window;
  return r;
}

ordered_json report_json(const Report& rep) {
  const Chart& chart = rep.request.chart;
  ordered_json results = ordered_json::object();
  if (rep.torsion_tensor) {
    ordered_json t;
    for (int k = 1; k <= 2; ++k)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          t["T" + std::to_string(k) + "_" + std::to_string(i) +
            std::to_string(j)] = rep.torsion_tensor->omega(k, i, j).to_string(chart);
    t["zero"] = rep.torsion_tensor->is_zero();
    results["torsion"] = t;
  }
  if (rep.curvature_tensor) {
    ordered_json r;
    for (int l = 1; l <= 2; ++l)
      for (int k = 1; k <= 2; ++k)
        r["R" + std::to_string(l) + "_" + std::to_string(k)] =
            rep.curvature_tensor->entry(l, k).to_string(chart);
    r["zero"] = rep.curvature_tensor->is_zero();
    results["curvature"] = r;
  }
  if (rep.flat) results["flat"] = *rep.flat;
  if (rep.ode) {
    ordered_json p;
    p["K0"] = rep.ode->k0.to_string(chart);
    p["K1"] = rep.ode->k1.to_string(chart);
    p["K2"] = rep.ode->k2.to_string(chart);
    p["K3"] = rep.ode->k3.to_string(chart);
    p["L1"] = rep.liouville->l1.to_string(chart);
    p["L2"] = rep.liouville->l2.to_string(chart);
    p["projectively_flat"] = *rep.projectively_flat;
    results["projective"] = p;
  }
  if (rep.killing) {
    ordered_json k;
    ordered_json dims = ordered_json::array();
    for (auto [o, d] : rep.killing->dimensions) dims.push_back({o, d});
    k["dimensions"] = dims;
    k["stabilized"] = rep.killing->stabilized;
    k["dimension"] = rep.killing->dimension;
    ordered_json basis = ordered_json::array();
    for (const auto& [ja, jb] : rep.killing->basis) {
      ordered_json v;
      v["a"] = jet_json(ja);
      v["b"] = jet_json(jb);
      basis.push_back(v);
    }
    k["basis"] = basis;
    results["killing"] = k;
  }
  ordered_json out;
  out["request"] = request_json(rep.request);
  out["results"] = results;
  return out;
}

}  // namespace

std::string render_machine(const std::vector<Report>& reports) {
  ordered_json root;
  root["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  ordered_json rs = ordered_json::array();
  for (const auto& r : reports) rs.push_back(report_json(r));
  root["reports"] = rs;
  return root.dump(2) + "\n";
}

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (size_t n = 0; n < reports.size(); ++n) {
    const Report& rep = reports[n];
    const Chart& chart = rep.request.chart;
    out << "== connection " << (n + 1) << " (" << rep.request.source_kind
        << ") on chart (" << chart.v1 << ", " << chart.v2 << ") ==\n";
    for (const auto& [k, v] : rep.request.source_params)
      out << "  " << k << " = \"" << v << "\"\n";
    if (rep.torsion_tensor) {
      out << "torsion: " << (rep.torsion_tensor->is_zero() ? "zero" : "nonzero")
          << "\n";
      for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j)
            if (!rep.torsion_tensor->omega(k, i, j).is_zero())
              out << "  T" << k << "_" << i << j << " = "
                  << rep.torsion_tensor->omega(k, i, j).to_string(chart) << "\n";
    }
    if (rep.curvature_tensor) {
      out << "curvature: "
          << (rep.curvature_tensor->is_zero() ? "zero" : "nonzero") << "\n";
      for (int l = 1; l <= 2; ++l)
        for (int k = 1; k <= 2; ++k)
          out << "  R" << l << "_" << k << " = "
              << rep.curvature_tensor->entry(l, k).to_string(chart) << "\n";
    }
    if (rep.flat) out << "flat: " << (*rep.flat ? "true" : "false") << "\n";
    if (rep.ode) {
      out << "geodesic ODE: K0 = " << rep.ode->k0.to_string(chart)
          << ", K1 = " << rep.ode->k1.to_string(chart)
          << ", K2 = " << rep.ode->k2.to_string(chart)
          << ", K3 = " << rep.ode->k3.to_string(chart) << "\n";
      out << "  L1 = " << rep.liouville->l1.to_string(chart)
          << ", L2 = " << rep.liouville->l2.to_string(chart) << "\n";
      out << "projectively flat: " << (*rep.projectively_flat ? "true" : "false")
          << "\n";
    }
    if (rep.killing) {
      out << "killing jets at (" << rep.request.point->x1.to_string() << ", "
          << rep.request.point->x2.to_string() << "):\n";
      out << "  order  dimension\n";
      for (auto [o, d] : rep.killing->dimensions)
        out << "  " << o << "      " << d << "\n";
      out << "  stabilized: " << (rep.killing->stabilized ? "true" : "false")
          << " (window " << rep.request.window << "), dimension "
          << rep.killing->dimension << "\n";
      int bn = 0;
      for (const auto& [ja, jb] : rep.killing->basis) {
        out << "  basis " << ++bn << ": a = " << ja.to_string(chart)
            << " ; b = " << jb.to_string(chart) << "\n";
      }
    }
    out << "elapsed: " << rep.elapsed_ms << " ms\n";
    if (n + 1 < reports.size()) out << "\n";
  }
  out << "engine: " << kEngineName << " " << kEngineVersion << "\n";
  return out.str();
}

}  // namespace holoconn
