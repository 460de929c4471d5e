#ifndef ELC_VERIFY_HPP
#define ELC_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "elc/tensor.hpp"

namespace elc {

// Deterministic random polynomial tensor fields for property runs: integer
// coefficients in [-9, 9] on every monomial up to the given coordinate
// degree, drawn from a seeded mt19937_64 so runs are reproducible.
Polynomial random_polynomial(std::mt19937_64& rng, int dim, int degree);
TensorField random_tensor(std::mt19937_64& rng, int dim, int order, int degree,
                          Variance v = Variance::covariant);

struct VerifyOptions {
  int N = 2;
  int k = 1;
  int dim = 3;
  int degree = 3;
  int trials = 20;
  std::uint64_t seed = 1;
};

struct VerifyItem {
  std::string name;
  int trials = 0;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyItem> items;
  bool ok = true;
};

// Exact randomized property suite at one complex position: projector
// idempotency, membership of the differential, d^{N+1} = 0, the explicit
// width-2 component formulas, the homotopy identities and the star
// roundtrip, as applicable to (N, k, dim).
VerifyReport run_verify(const VerifyOptions& opt);

std::string verify_report_json(const VerifyReport& report);

} // namespace elc

#endif
