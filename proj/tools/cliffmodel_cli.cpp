// Command-line front end: argv parsing only; all behavior lives in the
// library's run() entry point.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cliffmodel/cli.hpp"

namespace {

// Options shared by the model-addressed subcommands.
struct ModelOptions {
  int r = 0, s = 0, t = 0;
  std::string preset;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--preset", opts.preset,
                  "preset model name (spin2, spin11, spin4, spin31, spin22_t2, "
                  "spin22_t0, spin6, spin51, spin42, spin33_t1, spin33_t3)");
  cmd->add_option("--r", opts.r, "positive directions");
  cmd->add_option("--s", opts.s, "negative directions");
  cmd->add_option("--t", opts.t,
                  "real index (defaults to the largest admissible)");
}

void fill_model(const CLI::App* cmd, const ModelOptions& opts,
                cliff::CommandRequest& request) {
  if (cmd->count("--preset") > 0) request.preset = opts.preset;
  if (cmd->count("--r") > 0) request.r = opts.r;
  if (cmd->count("--s") > 0) request.s = opts.s;
  if (cmd->count("--t") > 0) request.t = opts.t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cliffmodel: exact creation/annihilation-operator models of Clifford "
      "algebras Cl(r,s) and the geometry of their spinors"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "output format: text or json")
      ->capture_default_str();
  app.add_option("--output", output_path, "write the document to a file");

  cliff::CommandRequest request;

  // models R S
  int models_r = 0, models_s = 0;
  CLI::App* models = app.add_subcommand(
      "models", "list the admissible real indices of Cl(r,s)");
  models->add_option("r", models_r, "positive directions")->required();
  models->add_option("s", models_s, "negative directions")->required();

  ModelOptions gammas_opts;
  CLI::App* gammas = app.add_subcommand(
      "gammas", "emit the gamma matrices of a model in its presentation basis");
  add_model_options(gammas, gammas_opts);

  ModelOptions gram_opts;
  CLI::App* gram = app.add_subcommand(
      "gram", "emit the invariant pairing over the presentation basis");
  add_model_options(gram, gram_opts);

  int classify_max_dim = 10;
  CLI::App* classify = app.add_subcommand(
      "classify", "tabulate reality-operator squares and the Majorana class");
  classify->add_option("--max-dim", classify_max_dim,
                       "largest total dimension r+s to include")
      ->capture_default_str();

  ModelOptions bilinear_opts;
  int bilinear_k = 0;
  std::string psi1, psi2;
  CLI::App* bilinear = app.add_subcommand(
      "bilinear", "evaluate the degree-k pairing of two spinor literals");
  add_model_options(bilinear, bilinear_opts);
  bilinear->add_option("--k", bilinear_k, "pairing degree")->required();
  bilinear->add_option("--psi1", psi1, "first spinor literal")->required();
  bilinear->add_option("--psi2", psi2, "second spinor literal")->required();

  ModelOptions verify_opts;
  int verify_samples = 3;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the invariant battery for one model");
  add_model_options(verify, verify_opts);
  verify->add_option("--samples", verify_samples,
                     "random spin-algebra samples per check")
      ->capture_default_str();

  int sweep_max_dim = 10, sweep_threads = 0, sweep_samples = 3;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "verify every model up to a total dimension, in parallel");
  sweep->add_option("--max-dim", sweep_max_dim,
                    "largest total dimension r+s to include")
      ->capture_default_str();
  sweep->add_option("--threads", sweep_threads,
                    "worker threads (0 = CLIFFMODEL_THREADS or hardware)");
  sweep->add_option("--samples", sweep_samples,
                    "random spin-algebra samples per check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  request.format = format;
  if (!output_path.empty()) request.output_path = output_path;

  if (models->parsed()) {
    request.command = "models";
    request.r = models_r;
    request.s = models_s;
  } else if (gammas->parsed()) {
    request.command = "gammas";
    fill_model(gammas, gammas_opts, request);
  } else if (gram->parsed()) {
    request.command = "gram";
    fill_model(gram, gram_opts, request);
  } else if (classify->parsed()) {
    request.command = "classify";
    request.max_dim = classify_max_dim;
  } else if (bilinear->parsed()) {
    request.command = "bilinear";
    fill_model(bilinear, bilinear_opts, request);
    request.degree = bilinear_k;
    request.psi1 = psi1;
    request.psi2 = psi2;
  } else if (verify->parsed()) {
    request.command = "verify";
    fill_model(verify, verify_opts, request);
    request.samples = verify_samples;
  } else if (sweep->parsed()) {
    request.command = "sweep";
    request.max_dim = sweep_max_dim;
    if (sweep_threads > 0) request.threads = sweep_threads;
    request.samples = sweep_samples;
  }

  cliff::CommandResult result = cliff::run(request);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  return result.exit_code;
}
