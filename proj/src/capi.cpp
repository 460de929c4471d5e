#include "elc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "elc/complex.hpp"
#include "elc/elasticity.hpp"
#include "elc/error.hpp"
#include "elc/fielddoc.hpp"
#include "elc/hodge.hpp"
#include "elc/homotopy.hpp"
#include "elc/verify.hpp"

struct elc_field {
  elc::TensorField value;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

elc_status fail(elc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

elc_status from_exception(const elc::Error& e) {
  switch (e.kind()) {
    case elc::ErrorKind::parse:
      return fail(ELC_ERR_PARSE, e.what());
    case elc::ErrorKind::invariant:
      return fail(ELC_ERR_INVARIANT, e.what());
    case elc::ErrorKind::math:
      return fail(ELC_ERR_MATH, e.what());
  }
  return fail(ELC_ERR_USAGE, e.what());
}

template <typename Fn>
elc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const elc::Error& e) {
    return from_exception(e);
  } catch (const std::exception& e) {
    return fail(ELC_ERR_USAGE, e.what());
  }
}

elc_status require(const void* p, const char* what) {
  if (p) return ELC_OK;
  return fail(ELC_ERR_USAGE, std::string("null ") + what);
}

elc_status emit(elc::TensorField value, elc_field** out) {
  *out = new elc_field{std::move(value)};
  return ELC_OK;
}

// unary field -> field operation
template <typename Fn>
elc_status unary(const elc_field* in, elc_field** out, Fn&& fn) {
  if (elc_status s = require(in, "input field"); s != ELC_OK) return s;
  if (elc_status s = require(out, "output pointer"); s != ELC_OK) return s;
  return guarded([&] { return emit(fn(in->value), out); });
}

} // namespace

extern "C" {

const char* elc_last_error(void) { return g_last_error.c_str(); }

void elc_string_free(char* s) { std::free(s); }

void elc_field_free(elc_field* f) { delete f; }

elc_status elc_field_parse(const char* json_text, elc_field** out) {
  if (elc_status s = require(json_text, "json text"); s != ELC_OK) return s;
  if (elc_status s = require(out, "output pointer"); s != ELC_OK) return s;
  return guarded([&] { return emit(elc::field_from_json(json_text), out); });
}

elc_status elc_field_to_json(const elc_field* f, char** out_json) {
  if (elc_status s = require(f, "field"); s != ELC_OK) return s;
  if (elc_status s = require(out_json, "output pointer"); s != ELC_OK) return s;
  return guarded([&] {
    *out_json = dup_string(elc::field_to_json(f->value));
    return *out_json ? ELC_OK : fail(ELC_ERR_USAGE, "allocation failure");
  });
}

elc_status elc_field_clone(const elc_field* f, elc_field** out) {
  return unary(f, out, [](const elc::TensorField& t) { return t; });
}

int elc_field_dim(const elc_field* f) { return f ? f->value.dim() : -1; }
int elc_field_order(const elc_field* f) { return f ? f->value.order() : -1; }
int elc_field_is_zero(const elc_field* f) { return f && f->value.is_zero() ? 1 : 0; }
int elc_field_equal(const elc_field* a, const elc_field* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

elc_status elc_sym_gradient(const elc_field* xi, elc_field** eps) {
  return unary(xi, eps, [](const elc::TensorField& t) { return elc::sym_gradient(t); });
}

elc_status elc_saint_venant(const elc_field* eps, elc_field** w) {
  return unary(eps, w, [](const elc::TensorField& t) { return elc::saint_venant(t); });
}

elc_status elc_incompatibility(const elc_field* eps, elc_field** inc) {
  return unary(eps, inc, [](const elc::TensorField& t) { return elc::incompatibility(t); });
}

elc_status elc_inc_from_w(const elc_field* w, elc_field** inc, char** scal) {
  if (elc_status s = require(w, "field"); s != ELC_OK) return s;
  if (elc_status s = require(inc, "inc output"); s != ELC_OK) return s;
  if (elc_status s = require(scal, "scal output"); s != ELC_OK) return s;
  return guarded([&] {
    auto [field, trace] = elc::inc_from_w(w->value);
    *scal = dup_string(trace.str());
    return emit(std::move(field), inc);
  });
}

elc_status elc_reconstruct_w(const elc_field* inc, elc_field** w) {
  return unary(inc, w, [](const elc::TensorField& t) { return elc::reconstruct_w(t); });
}

elc_status elc_kulkarni_nomizu(const elc_field* a, const elc_field* b, elc_field** out) {
  if (elc_status s = require(a, "first field"); s != ELC_OK) return s;
  if (elc_status s = require(b, "second field"); s != ELC_OK) return s;
  if (elc_status s = require(out, "output pointer"); s != ELC_OK) return s;
  return guarded([&] { return emit(elc::kulkarni_nomizu(a->value, b->value), out); });
}

elc_status elc_scal_2d(const elc_field* w, char** scal) {
  if (elc_status s = require(w, "field"); s != ELC_OK) return s;
  if (elc_status s = require(scal, "scal output"); s != ELC_OK) return s;
  return guarded([&] {
    *scal = dup_string(elc::scal_2d(w->value).str());
    return ELC_OK;
  });
}

elc_status elc_cesaro_volterra(const elc_field* eps, const elc_field* xi0,
                               const elc_field* omega0, elc_field** xi) {
  if (elc_status s = require(eps, "strain field"); s != ELC_OK) return s;
  if (elc_status s = require(xi, "output pointer"); s != ELC_OK) return s;
  return guarded([&] {
    return emit(elc::cesaro_volterra(eps->value, xi0 ? &xi0->value : nullptr,
                                     omega0 ? &omega0->value : nullptr),
                xi);
  });
}

elc_status elc_obstruction_k2(const elc_field* w, elc_field** out) {
  return unary(w, out, [](const elc::TensorField& t) { return elc::obstruction_k2(t); });
}

elc_status elc_homotopy_residual(const elc_field* eps, elc_field** out) {
  return unary(eps, out, [](const elc::TensorField& t) { return elc::homotopy_residual(t); });
}

elc_status elc_is_member(int n_width, const elc_field* t, int* out) {
  if (elc_status s = require(t, "field"); s != ELC_OK) return s;
  if (elc_status s = require(out, "output pointer"); s != ELC_OK) return s;
  return guarded([&] {
    *out = elc::is_member({n_width, t->value.order(), t->value.dim()}, t->value) ? 1 : 0;
    return ELC_OK;
  });
}

elc_status elc_project_member(int n_width, const elc_field* t, elc_field** out) {
  return unary(t, out, [n_width](const elc::TensorField& f) {
    return elc::project_member({n_width, f.order(), f.dim()}, f);
  });
}

elc_status elc_dv_differential(int n_width, const elc_field* t, elc_field** out) {
  return unary(t, out, [n_width](const elc::TensorField& f) {
    return elc::dv_differential({n_width, f.order(), f.dim()}, f);
  });
}

elc_status elc_hodge_star(const elc_field* t, elc_field** out) {
  return unary(t, out, [](const elc::TensorField& f) {
    return elc::hodge_star({2, f.order(), f.dim()}, f);
  });
}

elc_status elc_hodge_star_inverse(const elc_field* p, elc_field** out) {
  return unary(p, out, [](const elc::TensorField& f) {
    return elc::hodge_star_inverse({2, 2 * f.dim() - f.order(), f.dim()}, f);
  });
}

elc_status elc_codifferential(const elc_field* p, elc_field** out) {
  return unary(p, out, [](const elc::TensorField& f) { return elc::codifferential(f); });
}

elc_status elc_divergence(const elc_field* sigma, elc_field** out) {
  return unary(sigma, out, [](const elc::TensorField& f) { return elc::stress_divergence(f); });
}

elc_status elc_airy_stress(const elc_field* phi, elc_field** sigma) {
  return unary(phi, sigma, [](const elc::TensorField& f) {
    if (f.order() != 0) throw elc::invariant_error("the Airy potential is an order-0 field");
    return elc::airy_stress(f[0]);
  });
}

elc_status elc_beltrami_stress(const elc_field* phi, elc_field** sigma) {
  return unary(phi, sigma, [](const elc::TensorField& f) { return elc::beltrami_stress(f); });
}

elc_status elc_recover_potential(const elc_field* sigma, elc_field** phi,
                                 elc_field** divergence_out) {
  if (elc_status s = require(sigma, "stress field"); s != ELC_OK) return s;
  if (elc_status s = require(phi, "output pointer"); s != ELC_OK) return s;
  try {
    return emit(elc::recover_potential(sigma->value), phi);
  } catch (const elc::DivergenceError& e) {
    if (divergence_out) *divergence_out = new elc_field{e.divergence()};
    return fail(ELC_ERR_MATH, e.what());
  } catch (const elc::Error& e) {
    return from_exception(e);
  } catch (const std::exception& e) {
    return fail(ELC_ERR_USAGE, e.what());
  }
}

elc_status elc_verify(const char* options_json, char** report_json) {
  if (elc_status s = require(report_json, "report output"); s != ELC_OK) return s;
  try {
    elc::VerifyOptions opt;
    if (options_json && *options_json) {
      nlohmann::json doc = nlohmann::json::parse(options_json);
      if (!doc.is_object()) throw elc::parse_error("verify options must be a JSON object");
      if (doc.contains("N")) opt.N = doc["N"].get<int>();
      if (doc.contains("k")) opt.k = doc["k"].get<int>();
      if (doc.contains("dim")) opt.dim = doc["dim"].get<int>();
      if (doc.contains("degree")) opt.degree = doc["degree"].get<int>();
      if (doc.contains("trials")) opt.trials = doc["trials"].get<int>();
      if (doc.contains("seed")) opt.seed = doc["seed"].get<std::uint64_t>();
    }
    elc::VerifyReport report = elc::run_verify(opt);
    *report_json = dup_string(elc::verify_report_json(report));
    if (!report.ok) return fail(ELC_ERR_MATH, "property suite reported failures");
    return ELC_OK;
  } catch (const nlohmann::json::exception& e) {
    return fail(ELC_ERR_PARSE, std::string("bad verify options: ") + e.what());
  } catch (const elc::Error& e) {
    return from_exception(e);
  } catch (const std::exception& e) {
    return fail(ELC_ERR_USAGE, e.what());
  }
}

} // extern "C"
