#include "elc/verify.hpp"

#include <functional>

#include <nlohmann/json.hpp>

#include "elc/complex.hpp"
#include "elc/elasticity.hpp"
#include "elc/error.hpp"
#include "elc/hodge.hpp"
#include "elc/homotopy.hpp"

namespace elc {

namespace {

// Raw-engine draw: keeps the stream identical across standard libraries.
int coeff_draw(std::mt19937_64& rng) { return static_cast<int>(rng() % 19) - 9; }

void monomials_up_to(int dim, int degree, std::vector<Polynomial::Expo>& out) {
  Polynomial::Expo cur(dim + 2, 0);
  // lexicographic enumeration of coordinate exponents with total <= degree
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == dim) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[slot] = static_cast<unsigned>(e);
      rec(slot + 1, left - e);
    }
    cur[slot] = 0;
  };
  rec(0, degree);
}

} // namespace

Polynomial random_polynomial(std::mt19937_64& rng, int dim, int degree) {
  std::vector<Polynomial::Expo> monos;
  monomials_up_to(dim, degree, monos);
  Polynomial p(dim);
  for (const auto& e : monos) {
    int c = coeff_draw(rng);
    if (c == 0) continue;
    Polynomial term(dim);
    Polynomial unit = Polynomial::constant(dim, Rational(c));
    for (int v = 0; v < dim; ++v)
      for (unsigned rep = 0; rep < e[v]; ++rep) unit *= Polynomial::coordinate(dim, v);
    p += unit;
  }
  return p;
}

TensorField random_tensor(std::mt19937_64& rng, int dim, int order, int degree, Variance v) {
  TensorField t = TensorField::zero(dim, order, v);
  for (std::size_t i = 0; i < t.component_count(); ++i) t[i] = random_polynomial(rng, dim, degree);
  return t;
}

namespace {

struct Suite {
  VerifyReport report;

  VerifyItem& item(const std::string& name) {
    for (auto& it : report.items)
      if (it.name == name) return it;
    report.items.push_back({name, 0, true, ""});
    return report.items.back();
  }

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    VerifyItem& it = item(name);
    ++it.trials;
    if (!ok && it.ok) {
      it.ok = false;
      it.detail = detail;
      report.ok = false;
    }
  }
};

// The explicit component formulas of the width-2 differentials, used as an
// independent oracle against the generic projector pipeline.
TensorField explicit_d2_formula(int k, const TensorField& t) {
  const int n = t.dim();
  TensorField r = TensorField::zero(n, k + 1);
  if (k == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r.set({i, j}, (t.at({i}).derivative(j) + t.at({j}).derivative(i)) * Rational(1, 2));
  } else if (k == 2) {
    for (MultiIndex mi(n, 3); !mi.done(); mi.next()) {
      auto q = mi.get();
      int i = q[0], j = q[1], kk = q[2];
      r[r.flatten(q)] =
          (t.at({i, j}).derivative(kk) - t.at({j, kk}).derivative(i)) * Rational(2, 3);
    }
  } else if (k == 3) {
    for (MultiIndex mi(n, 4); !mi.done(); mi.next()) {
      auto q = mi.get();
      int i = q[0], j = q[1], kk = q[2], l = q[3];
      r[r.flatten(q)] = (t.at({i, j, kk}).derivative(l) + t.at({j, i, l}).derivative(kk) +
                         t.at({kk, l, i}).derivative(j) + t.at({l, kk, j}).derivative(i)) *
                        Rational(1, 4);
    }
  } else if (k == 4) {
    for (MultiIndex mi(n, 5); !mi.done(); mi.next()) {
      auto q = mi.get();
      int i = q[0], j = q[1], kk = q[2], l = q[3], m = q[4];
      r[r.flatten(q)] = (t.at({kk, j, m, l}).derivative(i) + t.at({m, j, i, l}).derivative(kk) +
                         t.at({i, j, kk, l}).derivative(m)) *
                        Rational(1, 2);
    }
  } else {
    throw invariant_error("no explicit formula at this degree");
  }
  return r;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.N < 1 || opt.k < 0 || opt.dim < 1 || opt.degree < 0 || opt.trials < 1)
    throw invariant_error("bad verify options");
  Suite suite;
  suite.report.options = opt;
  std::mt19937_64 rng(opt.seed);
  const ComplexPosition pos{opt.N, opt.k, opt.dim};

  for (int trial = 0; trial < opt.trials; ++trial) {
    TensorField raw = random_tensor(rng, opt.dim, opt.k, opt.degree);
    TensorField member = project_member(pos, raw);

    suite.record("projector_idempotent", project_member(pos, member) == member);
    suite.record("membership_fixed_point", is_member(pos, member));

    TensorField d = dv_differential(pos, member);
    suite.record("differential_lands_in_next_space", is_member({opt.N, opt.k + 1, opt.dim}, d));
    suite.record("nilpotency_d_pow_n_plus_1", nilpotency_composite(pos, member).is_zero());

    if (opt.N == 2 && opt.k >= 1 && opt.k <= 4)
      suite.record("explicit_formula_match", d == explicit_d2_formula(opt.k, member));

    if (opt.N == 2 && opt.k == 2)
      suite.record("elasticity_homotopy_identity", homotopy_residual(member).is_zero());

    if (opt.N == 1 && opt.k >= 1) {
      TensorField via_d = poincare_k(exterior_derivative(member));
      TensorField via_k = exterior_derivative(poincare_k(member));
      suite.record("poincare_homotopy_identity", via_d + via_k == member);
    }

    if (opt.N == 2 && opt.k <= 2 * opt.dim && opt.dim >= 2 && opt.dim <= 3 &&
        space_dimension(pos) > 0) {
      TensorField starred = hodge_star(pos, member);
      suite.record("star_roundtrip", hodge_star_inverse(pos, starred) == member);
    }
  }
  return suite.report;
}

std::string verify_report_json(const VerifyReport& report) {
  nlohmann::json doc;
  doc["options"] = {{"N", report.options.N},         {"k", report.options.k},
                    {"dim", report.options.dim},     {"degree", report.options.degree},
                    {"trials", report.options.trials}, {"seed", report.options.seed}};
  // the symmetry type under test, as rows of labels
  doc["tableau"] = dv_tableau(report.options.N, report.options.k).rows();
  doc["ok"] = report.ok;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : report.items) {
    nlohmann::json j{{"name", it.name}, {"trials", it.trials}, {"ok", it.ok}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    items.push_back(std::move(j));
  }
  doc["checks"] = items;
  return doc.dump(2);
}

} // namespace elc
