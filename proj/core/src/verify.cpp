#include "cliffmodel/verify.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "cliffmodel/errors.hpp"
#include "cliffmodel/geometry.hpp"
#include "cliffmodel/pairing.hpp"
#include "cliffmodel/reality.hpp"
#include "cliffmodel/spin.hpp"

namespace cliff {

void VerificationReport::add(const std::string& name, bool check_ok,
                             const std::string& detail) {
  checks.push_back({name, check_ok, check_ok ? "" : detail});
  ok = ok && check_ok;
}

namespace {

// Wraps a check body so an unexpected exception turns into a failed record
// instead of aborting the whole battery.
template <typename Fn>
void guarded(VerificationReport& report, const std::string& name, Fn&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(name, false, std::string("exception: ") + e.what());
  }
}

bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Matrix stacked;
  for (const auto& v : a) stacked.push_back(v);
  int rank_a = rank(stacked);
  for (const auto& v : b) stacked.push_back(v);
  return rank(stacked) == rank_a;
}

void check_gram_structure(const ModelSpec& spec, VerificationReport& report) {
  Matrix g = gram(spec);
  int n = spec.dim();
  // Signed permutation: exactly one +/-1 entry per row and column, located at
  // the complementary monomial.
  std::vector<int> row_hits(n, 0), col_hits(n, 0);
  bool entries_ok = true;
  std::string detail;
  Mask top = (Mask{1} << spec.m) - 1;
  for (int i = 0; i < n && entries_ok; ++i)
    for (int j = 0; j < n && entries_ok; ++j) {
      const Scalar& e = g[i][j];
      if (e.is_zero()) continue;
      if (e != Scalar(1) && e != Scalar(-1)) {
        entries_ok = false;
        detail = "entry not 0 or +/-1";
        break;
      }
      ++row_hits[i];
      ++col_hits[j];
      if (spec.basis[i].first != (top & ~spec.basis[j].first)) {
        entries_ok = false;
        detail = "nonzero entry off the complementary-monomial pattern";
      }
    }
  for (int i = 0; i < n && entries_ok; ++i)
    if (row_hits[i] != 1 || col_hits[i] != 1) {
      entries_ok = false;
      detail = "pairing matrix is not a signed permutation";
    }
  report.add("gram-signed-permutation", entries_ok, detail);

  // Symmetry sign (-1)^{m(m-1)/2}.
  int sym = (spec.m * (spec.m - 1) / 2) % 2 == 0 ? 1 : -1;
  bool sym_ok = g == mat_scale(Scalar(sym), mat_transpose(g));
  std::ostringstream os;
  os << "expected transpose sign " << sym;
  report.add("gram-symmetry", sym_ok, os.str());
}

void check_spin_samples(const ModelSpec& spec, int samples,
                        VerificationReport& report) {
  SmallRng rng(model_seed(spec.r, spec.s, spec.t));
  bool hom_ok = true;
  std::string hom_detail;
  for (int i = 0; i < samples && hom_ok; ++i) {
    SpinParam x = rng.next_spin_param(spec.labels());
    SpinParam y = rng.next_spin_param(spec.labels());
    CheckResult res = check_homomorphism(spec, x, y);
    hom_ok = res.ok;
    hom_detail = res.detail;
  }
  report.add("spin-homomorphism", hom_ok, hom_detail);

  bool act_ok = true;
  std::string act_detail;
  for (int i = 0; i < samples && act_ok; ++i) {
    SpinParam x = rng.next_spin_param(spec.labels());
    std::vector<Scalar> y = rng.next_vector(spec.labels());
    std::vector<Scalar> via_spinors = vector_action(spec, x, y);
    for (int a = 0; a < spec.labels() && act_ok; ++a) {
      Scalar expected(0);
      for (int b = 0; b < spec.labels(); ++b)
        expected += Scalar(x[a][b]) * Scalar(spec.metric[b]) * y[b];
      if (via_spinors[a] != expected) {
        act_ok = false;
        std::ostringstream os;
        os << "component " << a + 1 << " is " << via_spinors[a]
           << ", metric contraction gives " << expected;
        act_detail = os.str();
      }
    }
  }
  report.add("vector-action-matches-metric-contraction", act_ok, act_detail);
}

void check_reality(const ModelSpec& spec, VerificationReport& report) {
  AntilinearOp r = build_R(spec);
  AntilinearOp rp = build_R_prime(spec);
  int r_sq = square_sign(spec, r);
  int rp_sq = square_sign(spec, rp);
  report.add("reality-squares", r_sq == 1 || r_sq == -1, "");
  int r_comm = commutation_sign(spec, r);
  int rp_comm = commutation_sign(spec, rp);
  bool one_commutes = (r_comm == 1) != (rp_comm == 1);
  std::ostringstream os;
  os << "commutation signs R: " << r_comm << ", R': " << rp_comm
     << " (exactly one should be +1); squares " << r_sq << ", " << rp_sq;
  report.add("reality-commutation", one_commutes, os.str());
}

void check_vacuum_geometry(const ModelSpec& spec, VerificationReport& report) {
  Polyform vacuum = vacuum_spinor(spec);
  Polyform top = top_spinor(spec);

  CheckResult cartan = cartan_check(spec, vacuum);
  report.add("vacuum-cartan", cartan.ok, cartan.detail);
  CheckResult cartan_top = cartan_check(spec, top);
  report.add("top-cartan", cartan_top.ok, cartan_top.detail);

  int vac_index = real_index(spec, vacuum);
  std::ostringstream os;
  os << "real index of the vacuum is " << vac_index << ", expected " << spec.t;
  report.add("vacuum-real-index", vac_index == spec.t, os.str());

  IndexReport ladder = index_constraints_check(spec, vacuum);
  report.add("vacuum-degree-ladder", ladder.ok && ladder.t_star == spec.t,
             ladder.detail);
}

void check_mixed_structure(const ModelSpec& spec, VerificationReport& report) {
  Polyform vacuum = vacuum_spinor(spec);
  Polyform top = top_spinor(spec);
  MixedStructure mixed = mixed_from_pair(spec, vacuum, top);
  report.add("mixed-normalized", mixed.normalized,
             "square scale " + mixed.square_scale.to_short_string() +
                 " admits no exact root");
  if (!mixed.normalized) return;

  ProductSplit split = decompose_mixed(spec, mixed);
  std::ostringstream os;
  os << "eigenspace dimensions (" << split.plus_basis.size() << ", "
     << split.minus_basis.size() << "), expected (" << 2 * spec.t << ", "
     << 2 * (spec.k + spec.l) << ")";
  report.add("mixed-split-dimensions",
             static_cast<int>(split.plus_basis.size()) == 2 * spec.t &&
                 static_cast<int>(split.minus_basis.size()) ==
                     2 * (spec.k + spec.l),
             os.str());

  // +1 / -1 eigenspaces of K itself against the two annihilators.
  Matrix id = mat_identity(spec.labels());
  auto plus_eigen = kernel_basis(mat_sub(mixed.k_matrix, id));
  auto minus_eigen = kernel_basis(mat_add(mixed.k_matrix, id));
  bool plus_ok = same_span(plus_eigen, annihilator(spec, top));
  bool minus_ok = same_span(minus_eigen, annihilator(spec, vacuum));
  report.add("mixed-eigenspaces-are-annihilators", plus_ok && minus_ok,
             "eigenspaces of the mixed structure do not match the two "
             "annihilators");
}

}  // namespace

VerificationReport verify_model(const ModelSpec& spec, int samples) {
  VerificationReport report;
  guarded(report, "spec-structure", [&] {
    validate_spec(spec);
    report.add("spec-structure", true, "");
  });
  guarded(report, "clifford-relations", [&] {
    CheckResult res = verify_clifford(spec);
    report.add("clifford-relations", res.ok, res.detail);
  });
  guarded(report, "gram-structure", [&] { check_gram_structure(spec, report); });
  guarded(report, "selfadjoint-invariant-pairing", [&] {
    CheckResult res = check_selfadjoint_gammas(spec);
    report.add("selfadjoint-invariant-pairing", res.ok, res.detail);
  });
  guarded(report, "spin-samples", [&] { check_spin_samples(spec, samples, report); });
  guarded(report, "reality-operators", [&] { check_reality(spec, report); });
  guarded(report, "vacuum-geometry", [&] { check_vacuum_geometry(spec, report); });
  guarded(report, "mixed-structure", [&] { check_mixed_structure(spec, report); });
  return report;
}

SweepReport verify_sweep(int max_dim, int threads, int samples) {
  SweepReport sweep;
  sweep.max_dim = max_dim;
  std::vector<ModelSpec> models = enumerate_models(max_dim);
  sweep.models.resize(models.size());

  if (threads <= 0) {
    if (const char* env = std::getenv("CLIFFMODEL_THREADS"))
      threads = std::atoi(env);
    if (threads <= 0)
      threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min<int>(threads, static_cast<int>(models.size()));
  threads = std::max(threads, 1);

  // Static striping keeps each slot's writer unique, so results land in
  // deterministic positions regardless of the thread count.
  auto worker = [&](int offset) {
    for (std::size_t idx = offset; idx < models.size();
         idx += static_cast<std::size_t>(threads)) {
      ModelReport& slot = sweep.models[idx];
      slot.r = models[idx].r;
      slot.s = models[idx].s;
      slot.t = models[idx].t;
      slot.name = models[idx].name;
      slot.report = verify_model(models[idx], samples);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (std::thread& th : pool) th.join();
  }

  for (const ModelReport& model : sweep.models)
    sweep.ok = sweep.ok && model.report.ok;

  // The Majorana class must agree across the admissible real indices of each
  // signature.
  std::map<std::pair<int, int>, std::vector<std::string>> classes;
  for (const ModelSpec& model : models)
    classes[{model.r, model.s}].push_back(
        to_string(classify(model).cls));
  for (const auto& [signature, seen] : classes) {
    bool agree = true;
    for (const std::string& cls : seen) agree = agree && cls == seen.front();
    std::ostringstream name;
    name << "class-independent-of-real-index-cl(" << signature.first << ","
         << signature.second << ")";
    std::ostringstream detail;
    if (!agree) {
      detail << "classes differ across real indices:";
      for (const std::string& cls : seen) detail << " " << cls;
    }
    CheckRecord record{name.str(), agree, detail.str()};
    sweep.ok = sweep.ok && agree;
    sweep.cross_checks.push_back(std::move(record));
  }
  return sweep;
}

}  // namespace cliff
