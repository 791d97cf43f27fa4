#include "cliffmodel/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cliffmodel/errors.hpp"
#include "cliffmodel/geometry.hpp"
#include "cliffmodel/json_io.hpp"
#include "cliffmodel/pairing.hpp"
#include "cliffmodel/reality.hpp"
#include "cliffmodel/verify.hpp"

namespace cliff {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "cliffmodel-v1";

// Internal signal for malformed requests; mapped to exit code 2.
struct usage_error : error {
  explicit usage_error(const std::string& what) : error(what) {}
};

ModelSpec resolve_model(const CommandRequest& request) {
  if (request.preset) {
    if (request.r || request.s || request.t)
      throw usage_error("give either --preset or --r/--s/--t, not both");
    auto name = parse_preset_name(*request.preset);
    if (!name)
      throw usage_error("unknown preset '" + *request.preset + "'");
    return preset(*name);
  }
  if (!request.r || !request.s)
    throw usage_error("need --preset, or --r and --s");
  int t = request.t ? *request.t : enumerate_real_indices(*request.r, *request.s).front();
  return plan_model(*request.r, *request.s, t);
}

std::string render_scalar_text(const Scalar& value) {
  return value.is_zero() ? "·" : value.to_short_string();
}

std::string text_matrix(const Matrix& mat, const std::string& indent) {
  std::vector<std::size_t> widths(mat.empty() ? 0 : mat[0].size(), 0);
  for (const auto& row : mat)
    for (std::size_t j = 0; j < row.size(); ++j)
      widths[j] = std::max(widths[j], render_scalar_text(row[j]).size());
  std::ostringstream os;
  for (const auto& row : mat) {
    os << indent;
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell = render_scalar_text(row[j]);
      os << std::string(widths[j] - cell.size(), ' ') << cell
         << (j + 1 == row.size() ? "" : "  ");
    }
    os << "\n";
  }
  return os.str();
}

json json_matrix(const Matrix& mat) {
  json rows = json::array();
  for (const auto& row : mat) {
    json cells = json::array();
    for (const Scalar& value : row) cells.push_back(value.to_string());
    rows.push_back(std::move(cells));
  }
  return rows;
}

json json_multivector(const Multivector& form) {
  json comps = json::array();
  for (const auto& [labels, value] : form.comps)
    comps.push_back(json{{"labels", labels},
                         {"re", rational_to_string(value.re())},
                         {"im", rational_to_string(value.im())}});
  return comps;
}

json json_model(const ModelSpec& spec) { return json::parse(model_to_json(spec)); }

json json_report(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckRecord& check : report.checks)
    checks.push_back(
        json{{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
  return json{{"checks", std::move(checks)}, {"ok", report.ok}};
}

void text_report(std::ostringstream& os, const VerificationReport& report,
                 const std::string& indent) {
  for (const CheckRecord& check : report.checks) {
    os << indent << (check.ok ? "ok   " : "FAIL ") << check.name;
    if (!check.ok && !check.detail.empty()) os << ": " << check.detail;
    os << "\n";
  }
}

std::string model_summary(const ModelSpec& spec) {
  std::ostringstream os;
  os << spec.name << " (r=" << spec.r << ", s=" << spec.s << ", t=" << spec.t
     << ", k=" << spec.k << ", l=" << spec.l << ", m=" << spec.m << ")";
  return os.str();
}

CommandResult finish_result(const CommandRequest& request, int exit_code,
                            std::string output, std::string error = "") {
  if (request.output_path && exit_code != 2) {
    std::ofstream out(*request.output_path, std::ios::binary);
    if (!out)
      return {2, "", "cannot open output file '" + *request.output_path + "'"};
    out << output;
    if (!out)
      return {2, "", "failed writing output file '" + *request.output_path + "'"};
    output.clear();
  }
  return {exit_code, std::move(output), std::move(error)};
}

CommandResult cmd_models(const CommandRequest& request) {
  if (!request.r || !request.s) throw usage_error("models needs --r and --s");
  std::vector<int> indices = enumerate_real_indices(*request.r, *request.s);
  if (request.format == "json") {
    json doc{{"schema", kSchema},
             {"command", "models"},
             {"r", *request.r},
             {"s", *request.s},
             {"t_values", indices}};
    return finish_result(request, 0, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "t: ";
  for (std::size_t i = 0; i < indices.size(); ++i)
    os << (i ? ", " : "") << indices[i];
  os << "\n";
  return finish_result(request, 0, os.str());
}

CommandResult cmd_gammas(const CommandRequest& request) {
  ModelSpec spec = resolve_model(request);
  if (request.format == "json") {
    json matrices = json::array();
    for (int a = 1; a <= spec.labels(); ++a)
      matrices.push_back(json{{"label", a},
                              {"name", spec.label_names[a - 1]},
                              {"rows", json_matrix(gamma_matrix(spec, a))}});
    json doc{{"schema", kSchema},
             {"command", "gammas"},
             {"model", json_model(spec)},
             {"matrices", std::move(matrices)}};
    return finish_result(request, 0, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "model: " << model_summary(spec) << "\n";
  for (int a = 1; a <= spec.labels(); ++a) {
    os << "gamma " << spec.label_names[a - 1] << ":\n";
    os << text_matrix(gamma_matrix(spec, a), "  ");
  }
  return finish_result(request, 0, os.str());
}

CommandResult cmd_gram(const CommandRequest& request) {
  ModelSpec spec = resolve_model(request);
  Matrix g = gram(spec);
  if (request.format == "json") {
    json doc{{"schema", kSchema},
             {"command", "gram"},
             {"model", json_model(spec)},
             {"gram", json_matrix(g)}};
    return finish_result(request, 0, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "model: " << model_summary(spec) << "\n";
  os << "gram:\n" << text_matrix(g, "  ");
  return finish_result(request, 0, os.str());
}

CommandResult cmd_classify(const CommandRequest& request) {
  int max_dim = request.max_dim ? *request.max_dim : 10;
  std::vector<ModelSpec> models = enumerate_models(max_dim);
  struct Row {
    int r, s, t, r_square, rp_square;
    std::string cls;
  };
  std::vector<Row> rows;
  rows.reserve(models.size());
  for (const ModelSpec& spec : models) {
    ClassifyResult cls = classify(spec);
    rows.push_back(
        {spec.r, spec.s, spec.t, cls.r_square, cls.r_prime_square,
         to_string(cls.cls)});
  }
  if (request.format == "json") {
    json out = json::array();
    for (const Row& row : rows)
      out.push_back(json{{"r", row.r},
                         {"s", row.s},
                         {"t", row.t},
                         {"r_square", row.r_square},
                         {"r_prime_square", row.rp_square},
                         {"class", row.cls}});
    json doc{{"schema", kSchema},
             {"command", "classify"},
             {"max_dim", max_dim},
             {"rows", std::move(out)}};
    return finish_result(request, 0, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << " r   s   t  R^2  R'^2  class\n";
  for (const Row& row : rows) {
    auto sq = [](int sign) { return sign > 0 ? "+1" : "-1"; };
    os << " " << row.r << (row.r > 9 ? "  " : "   ") << row.s << "   " << row.t
       << "   " << sq(row.r_square) << "    " << sq(row.rp_square) << "  "
       << row.cls << "\n";
  }
  return finish_result(request, 0, os.str());
}

CommandResult cmd_bilinear(const CommandRequest& request) {
  ModelSpec spec = resolve_model(request);
  if (!request.degree) throw usage_error("bilinear needs --k");
  if (!request.psi1 || !request.psi2)
    throw usage_error("bilinear needs --psi1 and --psi2");
  if (*request.degree < 0 || *request.degree > spec.labels())
    throw usage_error("bilinear degree out of range for this model");
  Polyform psi1, psi2;
  try {
    psi1 = parse_polyform(spec, *request.psi1);
    psi2 = parse_polyform(spec, *request.psi2);
  } catch (const parse_error& e) {
    throw usage_error(e.what());
  }
  Multivector form = bilinear_B(spec, *request.degree, psi1, psi2);
  if (request.format == "json") {
    json doc{{"schema", kSchema},
             {"command", "bilinear"},
             {"model", json_model(spec)},
             {"k", *request.degree},
             {"psi1", *request.psi1},
             {"psi2", *request.psi2},
             {"components", json_multivector(form)}};
    return finish_result(request, 0, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "model: " << model_summary(spec) << "\n";
  os << "B_" << *request.degree << "(psi1, psi2): " << form.to_string() << "\n";
  return finish_result(request, 0, os.str());
}

CommandResult cmd_verify(const CommandRequest& request) {
  ModelSpec spec = resolve_model(request);
  VerificationReport report = verify_model(spec, request.samples);
  int exit_code = report.ok ? 0 : 1;
  if (request.format == "json") {
    json doc{{"schema", kSchema},
             {"command", "verify"},
             {"model", json_model(spec)},
             {"report", json_report(report)}};
    return finish_result(request, exit_code, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "model: " << model_summary(spec) << "\n";
  text_report(os, report, "  ");
  os << (report.ok ? "ok" : "FAIL") << "\n";
  return finish_result(request, exit_code, os.str());
}

CommandResult cmd_sweep(const CommandRequest& request) {
  int max_dim = request.max_dim ? *request.max_dim : 10;
  SweepReport sweep =
      verify_sweep(max_dim, request.threads ? *request.threads : 0,
                   request.samples);
  int exit_code = sweep.ok ? 0 : 1;
  if (request.format == "json") {
    json models = json::array();
    for (const ModelReport& model : sweep.models)
      models.push_back(json{{"r", model.r},
                            {"s", model.s},
                            {"t", model.t},
                            {"name", model.name},
                            {"report", json_report(model.report)}});
    json cross = json::array();
    for (const CheckRecord& check : sweep.cross_checks)
      cross.push_back(
          json{{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    json doc{{"schema", kSchema},
             {"command", "sweep"},
             {"max_dim", max_dim},
             {"models", std::move(models)},
             {"cross_checks", std::move(cross)},
             {"ok", sweep.ok}};
    return finish_result(request, exit_code, doc.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "sweep through r+s <= " << max_dim << ": " << sweep.models.size()
     << " models\n";
  for (const ModelReport& model : sweep.models) {
    os << (model.report.ok ? "ok   " : "FAIL ") << model.name << " ("
       << model.report.checks.size() << " checks)\n";
    if (!model.report.ok) text_report(os, model.report, "    ");
  }
  for (const CheckRecord& check : sweep.cross_checks) {
    os << (check.ok ? "ok   " : "FAIL ") << check.name;
    if (!check.ok) os << ": " << check.detail;
    os << "\n";
  }
  os << (sweep.ok ? "ok" : "FAIL") << "\n";
  return finish_result(request, exit_code, os.str());
}

}  // namespace

CommandResult run(const CommandRequest& request) {
  try {
    if (request.format != "text" && request.format != "json")
      throw usage_error("unknown format '" + request.format + "'");
    if (request.command == "models") return cmd_models(request);
    if (request.command == "gammas") return cmd_gammas(request);
    if (request.command == "gram") return cmd_gram(request);
    if (request.command == "classify") return cmd_classify(request);
    if (request.command == "bilinear") return cmd_bilinear(request);
    if (request.command == "verify") return cmd_verify(request);
    if (request.command == "sweep") return cmd_sweep(request);
    throw usage_error("unknown command '" + request.command + "'");
  } catch (const usage_error& e) {
    return {2, "", e.what()};
  } catch (const invalid_argument& e) {
    // Domain errors on inputs (bad signatures, bad degrees) are usage errors
    // at the command line.
    return {2, "", e.what()};
  } catch (const parse_error& e) {
    return {2, "", e.what()};
  }
}

}  // namespace cliff
