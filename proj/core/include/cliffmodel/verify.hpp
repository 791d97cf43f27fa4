#pragma once

#include <string>
#include <vector>

#include "cliffmodel/model.hpp"

namespace cliff {

struct CheckRecord {
  std::string name;
  bool ok = false;
  std::string detail;  // empty when ok
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  bool ok = true;

  void add(const std::string& name, bool check_ok, const std::string& detail);
};

// Full invariant battery for one model: Clifford relations, pairing structure,
// spin homomorphism and vector action on seeded random samples, reality
// operator squares and commutation, vacuum purity/real index, the mixed
// structure of the (vacuum, top) pair, and the degree-ladder constraints.
// Deterministic: randomness is seeded from (r, s, t) only.
VerificationReport verify_model(const ModelSpec& spec, int samples = 5);

struct ModelReport {
  int r = 0, s = 0, t = 0;
  std::string name;
  VerificationReport report;
};

struct SweepReport {
  int max_dim = 0;
  std::vector<ModelReport> models;
  std::vector<CheckRecord> cross_checks;  // per-(r,s) class agreement
  bool ok = true;
};

// Runs verify_model on every canonical model with r + s <= max_dim, splitting
// the models over `threads` workers (0 = CLIFFMODEL_THREADS env or hardware
// concurrency).  Output order and content are independent of the thread
// count.
SweepReport verify_sweep(int max_dim, int threads = 0, int samples = 3);

}  // namespace cliff
