// Copyright 2026 The appbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "appbasis/forms.hpp"
#include "appbasis/io.hpp"
#include "appbasis/knowndeg.hpp"
#include "appbasis/mbasis.hpp"
#include "appbasis/multiply.hpp"
#include "appbasis/oracle.hpp"
#include "appbasis/pmbasis.hpp"
#include "appbasis/solver.hpp"
#include "appbasis/unbalanced.hpp"

using namespace appbasis;

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAlgos{"mbasis1", "pmbasis", "popov-pm", "popov", "shift-min", "shift-max", "oracle"};

std::vector<long long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("malformed " + what + ": '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty " + what);
  return out;
}

Shift parse_shift(const std::string& text, std::size_t m, long long sigma) {
  if (text == "uniform") return Shift::uniform(m);
  if (text == "hermite") {
    std::vector<long long> s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = sigma * static_cast<long long>(i + 1);
    return Shift(std::move(s));
  }
  auto v = parse_list(text, "shift");
  if (v.size() != m) throw std::invalid_argument("shift has " + std::to_string(v.size()) + " entries, expected " +
                                                 std::to_string(m));
  return Shift(std::move(v));
}

Form parse_form(const std::string& name) {
  if (name == "reduced") return Form::kReduced;
  if (name == "owp") return Form::kOrderedWeakPopov;
  if (name == "popov") return Form::kPopov;
  throw std::invalid_argument("unknown form '" + name + "'");
}

PolyMat random_instance(Rng& rng, const Field& f, std::size_t m, const std::vector<long long>& d) {
  std::uniform_int_distribution<Elem> coeff(0, f.modulus() - 1);
  PolyMat a(f, m, d.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      std::vector<Elem> c(static_cast<std::size_t>(d[j]));
      for (auto& x : c) x = coeff(rng);
      a.at(i, j) = Poly(std::move(c));
    }
  }
  return a;
}

struct Instance {
  OrderTuple d;
  PolyMat f;
};

Instance load_instance(const std::string& path) {
  PolyMatFile file = read_polymat_file(path);
  if (!file.orders) throw std::invalid_argument(path + ": instance file needs an 'orders' line");
  return {OrderTuple(*file.orders), std::move(file.matrix)};
}

BasisResult run_algo(const std::string& algo, const Instance& in, const Shift& s) {
  const OrderTuple& d = in.d;
  if (algo == "mbasis1") {
    if (d.max() != 1 || d.sigma() != static_cast<long long>(d.size())) {
      throw std::invalid_argument("mbasis1 needs every order equal to 1");
    }
    return mbasis1(in.f.coefficient(0), s);
  }
  if (algo == "pmbasis") {
    if (d.size() && d.sigma() != d.max() * static_cast<long long>(d.size())) {
      throw std::invalid_argument("pmbasis needs uniform orders");
    }
    return pm_basis(d.size() ? d.max() : 0, in.f, s);
  }
  if (algo == "popov-pm") return popov_pm_basis(d, in.f, s);
  if (algo == "popov") return popov_appbasis(d.values(), in.f, s);
  if (algo == "shift-min") return shift_around_min(d, in.f, s);
  if (algo == "shift-max") return shift_around_max(d, in.f, s);
  if (algo == "oracle") return iterative_appbasis(d, in.f, s);
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

BasisResult canonicalize(const BasisResult& b, const Instance& in, const Shift& s) {
  if (b.form == Form::kPopov) return b;
  return known_deg_appbasis(in.d, in.f, s, diagonal_degrees(b.matrix));
}

int cmd_gen(std::size_t m, std::size_t n, const std::string& orders, std::uint64_t modulus, std::uint64_t seed,
            const std::string& out) {
  Field f(modulus);
  auto d = parse_list(orders, "orders");
  if (d.size() == 1) d.assign(n, d[0]);
  if (d.size() != n) throw std::invalid_argument("orders has " + std::to_string(d.size()) + " entries, expected " +
                                                 std::to_string(n));
  OrderTuple dt(d);
  Rng rng(seed);
  PolyMat a = random_instance(rng, f, m, d);
  if (out.empty()) {
    write_polymat(std::cout, a, d);
  } else {
    write_polymat_file(out, a, d);
  }
  return 0;
}

int cmd_solve(const std::string& in_path, const std::string& shift, const std::string& algo, bool canonical,
              const std::string& out) {
  Instance in = load_instance(in_path);
  Shift s = parse_shift(shift, in.f.rows(), in.d.sigma());
  auto t0 = Clock::now();
  BasisResult b = run_algo(algo, in, s);
  if (canonical) b = canonicalize(b, in, s);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  if (out.empty()) {
    write_polymat(std::cout, b.matrix);
  } else {
    write_polymat_file(out, b.matrix);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  summary << "algo=" << algo << " m=" << in.f.rows() << " sigma=" << in.d.sigma()
          << " delta=" << format_tuple(diagonal_degrees(b.matrix)) << " ms=" << buf << "\n";
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& basis_path, const std::string& shift,
               const std::string& form) {
  Instance in = load_instance(in_path);
  PolyMatFile basis = read_polymat_file(basis_path);
  if (!(basis.matrix.field() == in.f.field())) throw std::invalid_argument("basis and instance moduli differ");
  Shift s = parse_shift(shift, in.f.rows(), in.d.sigma());
  VerifyReport r = verify_basis(basis.matrix, in.d, in.f, s, parse_form(form));
  std::cout << r.line() << "\n";
  return r.all() ? 0 : 1;
}

int cmd_compare(const std::string& in_path, const std::string& shift) {
  Instance in = load_instance(in_path);
  Shift s = parse_shift(shift, in.f.rows(), in.d.sigma());
  std::string want = to_text(canonicalize(iterative_appbasis(in.d, in.f, s), in, s).matrix);
  bool all = true;
  for (const auto& algo : kAlgos) {
    std::string status;
    try {
      bool same = to_text(canonicalize(run_algo(algo, in, s), in, s).matrix) == want;
      status = same ? "same" : "DIFFERENT";
      all = all && same;
    } catch (const std::invalid_argument& e) {
      status = std::string("skipped (") + e.what() + ")";
    }
    std::cout << algo << ": " << status << "\n";
  }
  return all ? 0 : 1;
}

int cmd_bench(const std::string& sizes, std::size_t m, std::size_t n, const std::string& shift,
              const std::string& algos, std::uint64_t seed, std::uint64_t modulus) {
  auto colon = sizes.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--sizes expects lo:hi");
  long long lo = std::stoll(sizes.substr(0, colon)), hi = std::stoll(sizes.substr(colon + 1));
  if (lo < 1 || hi < lo) throw std::invalid_argument("--sizes expects 1 <= lo <= hi");
  std::vector<std::string> names;
  {
    std::stringstream ss(algos);
    std::string a;
    while (std::getline(ss, a, ',')) names.push_back(a);
  }
  Field f(modulus);
  std::cout << "algo,m,n,sigma,shift_class,ms\n";
  for (long long sigma = lo; sigma <= hi; sigma *= 2) {
    long long order = std::max<long long>(1, (sigma + static_cast<long long>(n) - 1) / static_cast<long long>(n));
    std::vector<long long> d(n, order);
    Rng rng(seed + static_cast<std::uint64_t>(sigma));
    Instance in{OrderTuple(d), random_instance(rng, f, m, d)};
    Shift s = parse_shift(shift, m, in.d.sigma());
    for (const auto& algo : names) {
      auto t0 = Clock::now();
      run_algo(algo, in, s);
      double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      std::cout << algo << "," << m << "," << n << "," << in.d.sigma() << "," << shift << "," << buf << "\n";
    }
  }
  return 0;
}

int cmd_matmul_demo(std::size_t n, long long deg, std::uint64_t seed, std::uint64_t modulus) {
  Field f(modulus);
  Rng rng(seed);
  std::vector<long long> len(n, deg + 1);
  PolyMat a = random_instance(rng, f, n, len), b = random_instance(rng, f, n, len);
  bool match = matmul_embed(a, b, deg) == multiply(a, b);
  std::cout << "match=" << (match ? "true" : "false") << "\n";
  return match ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Shifted Popov approximant bases over prime fields"};
  app.require_subcommand(1);
  std::uint64_t modulus = default_modulus_from_env();
  std::uint64_t seed = 0;

  std::size_t gm = 2, gn = 1;
  std::string orders = "2", gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--m", gm, "Rows")->check(CLI::PositiveNumber);
  gen->add_option("--n", gn, "Columns");
  gen->add_option("--orders", orders, "One order for all columns, or a comma list");
  gen->add_option("--modulus", modulus, "Prime modulus");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  std::string in_path, shift = "uniform", algo = "popov", solve_out;
  bool canonical = false;
  auto* solve = app.add_subcommand("solve", "Compute an approximant basis");
  solve->add_option("--in", in_path, "Instance file")->required();
  solve->add_option("--shift", shift, "uniform, hermite, or comma-separated integers");
  solve->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember(kAlgos));
  solve->add_flag("--canonical", canonical, "Normalize the output to the shifted Popov basis");
  solve->add_option("--out", solve_out, "Basis file (default stdout, summary then goes to stderr)");

  std::string basis_path, form = "popov";
  auto* verify = app.add_subcommand("verify", "Check a basis against an instance");
  verify->add_option("--in", in_path, "Instance file")->required();
  verify->add_option("--basis", basis_path, "Basis file")->required();
  verify->add_option("--shift", shift, "uniform, hermite, or comma-separated integers");
  verify->add_option("--form", form, "reduced, owp, or popov")->check(CLI::IsMember({"reduced", "owp", "popov"}));

  auto* compare = app.add_subcommand("compare", "Run every applicable algorithm and compare canonical outputs");
  compare->add_option("--in", in_path, "Instance file")->required();
  compare->add_option("--shift", shift, "uniform, hermite, or comma-separated integers");

  std::string sizes = "8:64", algos = "pmbasis,popov-pm,popov";
  std::size_t bm = 4, bn = 4;
  auto* bench = app.add_subcommand("bench", "Time algorithms over doubling sigma, CSV on stdout");
  bench->add_option("--sizes", sizes, "Sigma range lo:hi, doubled each step");
  bench->add_option("--m", bm, "Rows")->check(CLI::PositiveNumber);
  bench->add_option("--n", bn, "Columns")->check(CLI::PositiveNumber);
  bench->add_option("--shift", shift, "uniform or hermite");
  bench->add_option("--algos", algos, "Comma-separated algorithms");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--modulus", modulus, "Prime modulus");

  std::size_t mn = 2;
  long long mdeg = 2;
  auto* demo = app.add_subcommand("matmul-demo", "Multiply two matrices through an approximant basis");
  demo->add_option("--n", mn, "Dimension")->check(CLI::PositiveNumber);
  demo->add_option("--deg", mdeg, "Degree bound")->check(CLI::NonNegativeNumber);
  demo->add_option("--seed", seed, "Random seed");
  demo->add_option("--modulus", modulus, "Prime modulus");

  CLI11_PARSE(app, argc, argv);
  if (*gen) return cmd_gen(gm, gn, orders, modulus, seed, gen_out);
  if (*solve) return cmd_solve(in_path, shift, algo, canonical, solve_out);
  if (*verify) return cmd_verify(in_path, basis_path, shift, form);
  if (*compare) return cmd_compare(in_path, shift);
  if (*bench) return cmd_bench(sizes, bm, bn, shift, algos, seed, modulus);
  if (*demo) return cmd_matmul_demo(mn, mdeg, seed, modulus);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
