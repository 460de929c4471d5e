// Command-line front end for the elc shared library. All tensor mathematics
// goes through the C API in elc.h; this translation unit only handles files,
// flags and report assembly.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "elc.h"

namespace {

using nlohmann::json;

struct FieldDeleter {
  void operator()(elc_field* f) const { elc_field_free(f); }
};
using FieldPtr = std::unique_ptr<elc_field, FieldDeleter>;

struct CliError {
  int exit_code;
  std::string message;
};

int status_to_exit(elc_status s) {
  switch (s) {
    case ELC_OK:
      return 0;
    case ELC_ERR_PARSE:
      return 1;
    case ELC_ERR_INVARIANT:
      return 2;
    case ELC_ERR_MATH:
      return 3;
    default:
      return 2;
  }
}

[[noreturn]] void bail(elc_status s) {
  throw CliError{status_to_exit(s), elc_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot open file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FieldPtr parse_field_file(const std::string& path) {
  std::string text = read_file(path);
  elc_field* raw = nullptr;
  if (elc_status s = elc_field_parse(text.c_str(), &raw); s != ELC_OK) bail(s);
  return FieldPtr(raw);
}

json field_json(const elc_field* f) {
  char* text = nullptr;
  if (elc_status s = elc_field_to_json(f, &text); s != ELC_OK) bail(s);
  json doc = json::parse(text);
  elc_string_free(text);
  return doc;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Builds a constant field document from comma-separated rational entries.
FieldPtr constant_field(int dim, int order, const std::string& csv, const char* flag) {
  std::vector<std::string> entries = split_list(csv);
  std::size_t want = 1;
  for (int i = 0; i < order; ++i) want *= static_cast<std::size_t>(dim);
  if (entries.size() != want)
    throw CliError{2, std::string(flag) + " needs " + std::to_string(want) +
                          " comma-separated entries for dimension " + std::to_string(dim)};
  json comps = json::object();
  std::size_t pos = 0;
  std::vector<int> idx(order, 0);
  for (;;) {
    std::string key;
    for (int v : idx) key += static_cast<char>('1' + v);
    if (entries[pos] != "0") comps[key] = entries[pos];
    ++pos;
    int slot = order - 1;
    while (slot >= 0 && ++idx[slot] == dim) idx[slot--] = 0;
    if (slot < 0) break;
  }
  json doc{{"dim", dim}, {"order", order}, {"variance", std::string(order, 'c')}, {"components", comps}};
  elc_field* raw = nullptr;
  std::string text = doc.dump();
  if (elc_status s = elc_field_parse(text.c_str(), &raw); s != ELC_OK) bail(s);
  return FieldPtr(raw);
}

int cmd_check(const std::string& eps_path) {
  FieldPtr eps = parse_field_file(eps_path);
  elc_field* wraw = nullptr;
  if (elc_status s = elc_saint_venant(eps.get(), &wraw); s != ELC_OK) bail(s);
  FieldPtr w(wraw);
  const bool compatible = elc_field_is_zero(w.get()) == 1;

  json out;
  out["compatible"] = compatible;
  out["verdict"] = compatible ? "COMPATIBLE" : "INCOMPATIBLE";
  out["W"] = field_json(w.get());
  if (elc_field_dim(eps.get()) == 3) {
    elc_field* incraw = nullptr;
    char* scal = nullptr;
    if (elc_status s = elc_inc_from_w(w.get(), &incraw, &scal); s != ELC_OK) bail(s);
    FieldPtr inc(incraw);
    out["Inc"] = field_json(inc.get());
    out["Scal"] = scal;
    elc_string_free(scal);
  } else {
    char* scal = nullptr;
    if (elc_status s = elc_scal_2d(w.get(), &scal); s != ELC_OK) bail(s);
    out["Scal"] = scal;
    elc_string_free(scal);
  }
  std::cout << out.dump(2) << "\n";
  if (!compatible) {
    std::cerr << "strain is incompatible: the Saint-Venant tensor does not vanish\n";
    return 3;
  }
  return 0;
}

int cmd_integrate(const std::string& eps_path, const std::string& xi0_csv,
                  const std::string& omega0_csv) {
  FieldPtr eps = parse_field_file(eps_path);
  const int dim = elc_field_dim(eps.get());

  FieldPtr xi0, omega0;
  if (!xi0_csv.empty()) xi0 = constant_field(dim, 1, xi0_csv, "--xi0");
  if (!omega0_csv.empty()) omega0 = constant_field(dim, 2, omega0_csv, "--omega0");

  elc_field* wraw = nullptr;
  if (elc_status s = elc_saint_venant(eps.get(), &wraw); s != ELC_OK) bail(s);
  FieldPtr w(wraw);
  const bool compatible = elc_field_is_zero(w.get()) == 1;

  elc_field* xiraw = nullptr;
  if (elc_status s = elc_cesaro_volterra(eps.get(), xi0.get(), omega0.get(), &xiraw); s != ELC_OK)
    bail(s);
  FieldPtr xi(xiraw);

  elc_field* checkraw = nullptr;
  if (elc_status s = elc_sym_gradient(xi.get(), &checkraw); s != ELC_OK) bail(s);
  FieldPtr check(checkraw);
  const bool matches = elc_field_equal(check.get(), eps.get()) == 1;

  json out;
  out["xi"] = field_json(xi.get());
  out["sym_gradient_matches"] = matches;
  if (!compatible) {
    elc_field* obsraw = nullptr;
    if (elc_status s = elc_obstruction_k2(w.get(), &obsraw); s != ELC_OK) bail(s);
    FieldPtr obs(obsraw);
    out["obstruction"] = field_json(obs.get());
    std::cerr << "warning: strain is incompatible; emitting the partial displacement "
                 "and the obstruction term\n";
  }
  std::cout << out.dump(2) << "\n";
  return compatible ? 0 : 3;
}

int cmd_potential(const std::string& sigma_path) {
  FieldPtr sigma = parse_field_file(sigma_path);
  elc_field* phiraw = nullptr;
  elc_field* divraw = nullptr;
  elc_status s = elc_recover_potential(sigma.get(), &phiraw, &divraw);
  if (s == ELC_ERR_MATH && divraw) {
    FieldPtr div(divraw);
    json out;
    out["divergence"] = field_json(div.get());
    std::cout << out.dump(2) << "\n";
    std::cerr << "stress is not divergence-free\n";
    return 3;
  }
  if (s != ELC_OK) bail(s);
  FieldPtr phi(phiraw);

  elc_field* forwardraw = nullptr;
  elc_status fs = elc_field_dim(sigma.get()) == 2 ? elc_airy_stress(phi.get(), &forwardraw)
                                                  : elc_beltrami_stress(phi.get(), &forwardraw);
  if (fs != ELC_OK) bail(fs);
  FieldPtr forward(forwardraw);

  json out;
  out["potential"] = field_json(phi.get());
  out["forward_matches"] = elc_field_equal(forward.get(), sigma.get()) == 1;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(int N, int k, int dim, int degree, int trials, std::uint64_t seed) {
  json opts{{"N", N}, {"k", k}, {"dim", dim}, {"degree", degree}, {"trials", trials}, {"seed", seed}};
  char* report = nullptr;
  elc_status s = elc_verify(opts.dump().c_str(), &report);
  if (report) {
    std::cout << report << "\n";
    elc_string_free(report);
  }
  if (s == ELC_OK) return 0;
  if (s == ELC_ERR_MATH) {
    std::cerr << "property suite reported failures\n";
    return 3;
  }
  bail(s);
}

int cmd_star(const std::string& path, bool inverse) {
  FieldPtr in = parse_field_file(path);
  elc_field* raw = nullptr;
  elc_status s = inverse ? elc_hodge_star_inverse(in.get(), &raw) : elc_hodge_star(in.get(), &raw);
  if (s != ELC_OK) bail(s);
  FieldPtr out(raw);
  std::cout << field_json(out.get()).dump(2) << "\n";
  return 0;
}

int cmd_d(const std::string& path, int N) {
  FieldPtr in = parse_field_file(path);
  elc_field* raw = nullptr;
  if (elc_status s = elc_dv_differential(N, in.get(), &raw); s != ELC_OK) bail(s);
  FieldPtr out(raw);
  std::cout << field_json(out.get()).dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact elasticity-complex toolkit"};
  app.require_subcommand(1);

  std::string eps_path, sigma_path, field_path;
  std::string xi0_csv, omega0_csv;
  bool star_inverse = false;
  int N = 2, k = 1, dim = 3, degree = 3, trials = 20;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Saint-Venant compatibility verdict for a strain file");
  check->add_option("eps", eps_path, "strain FieldDocument (JSON)")->required();

  auto* integrate =
      app.add_subcommand("integrate", "recover a displacement from a strain (Cesaro-Volterra)");
  integrate->add_option("eps", eps_path, "strain FieldDocument (JSON)")->required();
  integrate->add_option("--xi0", xi0_csv, "rigid translation, n comma-separated rationals");
  integrate->add_option("--omega0", omega0_csv,
                        "rigid rotation, n*n comma-separated rationals (antisymmetric)");

  auto* potential =
      app.add_subcommand("potential", "recover the Airy / Beltrami potential of a stress file");
  potential->add_option("sigma", sigma_path, "stress FieldDocument (JSON)")->required();

  auto* verify = app.add_subcommand("verify", "run the exact randomized property suite");
  verify->add_option("--N", N, "complex width");
  verify->add_option("--k", k, "degree");
  verify->add_option("--dim", dim, "ambient dimension");
  verify->add_option("--degree", degree, "max polynomial degree");
  verify->add_option("--trials", trials, "number of random trials");
  verify->add_option("--seed", seed, "random seed");

  auto* star = app.add_subcommand("star", "apply the generalized Hodge star to a member field");
  star->add_option("field", field_path, "FieldDocument (JSON)")->required();
  star->add_flag("--inverse", star_inverse, "apply the inverse star");

  auto* dcmd = app.add_subcommand("d", "apply the generalized differential to a member field");
  dcmd->add_option("field", field_path, "FieldDocument (JSON)")->required();
  dcmd->add_option("--N", N, "complex width (default 2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(eps_path);
    if (integrate->parsed()) return cmd_integrate(eps_path, xi0_csv, omega0_csv);
    if (potential->parsed()) return cmd_potential(sigma_path);
    if (verify->parsed()) return cmd_verify(N, k, dim, degree, trials, seed);
    if (star->parsed()) return cmd_star(field_path, star_inverse);
    if (dcmd->parsed()) return cmd_d(field_path, N);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return 0;
}
