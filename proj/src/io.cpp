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

#include "appbasis/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace appbasis {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("POLYMAT line " + std::to_string(line) + ": " + what);
}

bool next_line(std::istream& is, std::string& s, std::size_t& lineno) {
  while (std::getline(is, s)) {
    ++lineno;
    if (s.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

void write_polymat(std::ostream& os, const PolyMat& p, const std::optional<std::vector<long long>>& orders) {
  os << "POLYMAT 1\n";
  os << "modulus " << p.field().modulus() << "\n";
  os << "dims " << p.rows() << " " << p.cols() << "\n";
  if (orders) {
    os << "orders";
    for (long long d : *orders) os << " " << d;
    os << "\n";
  }
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      os << i << " " << j << " :";
      for (Elem c : p(i, j).coeffs()) os << " " << c;
      os << "\n";
    }
  }
}

std::string to_text(const PolyMat& p, const std::optional<std::vector<long long>>& orders) {
  std::ostringstream os;
  write_polymat(os, p, orders);
  return os.str();
}

PolyMatFile read_polymat(std::istream& is) {
  std::string s;
  std::size_t ln = 0;
  if (!next_line(is, s, ln) || s.rfind("POLYMAT 1", 0) != 0) fail(ln, "expected 'POLYMAT 1'");

  std::uint64_t p = 0;
  if (!next_line(is, s, ln)) fail(ln, "missing modulus");
  {
    std::istringstream ss(s);
    std::string key;
    if (!(ss >> key >> p) || key != "modulus") fail(ln, "expected 'modulus <p>'");
  }
  Field f = [&] {
    try {
      return Field(p);
    } catch (const std::invalid_argument& e) {
      fail(ln, e.what());
    }
  }();

  std::size_t m = 0, n = 0;
  if (!next_line(is, s, ln)) fail(ln, "missing dims");
  {
    std::istringstream ss(s);
    std::string key;
    if (!(ss >> key >> m >> n) || key != "dims") fail(ln, "expected 'dims <m> <n>'");
  }
  PolyMatFile out{PolyMat(f, m, n), std::nullopt};

  std::size_t count = 0;
  while (next_line(is, s, ln)) {
    std::istringstream ss(s);
    if (s.rfind("orders", 0) == 0) {
      if (out.orders || count) fail(ln, "orders must follow dims");
      std::string key;
      ss >> key;
      std::vector<long long> d;
      long long x;
      while (ss >> x) d.push_back(x);
      if (!ss.eof() || d.size() != n) fail(ln, "expected " + std::to_string(n) + " orders");
      out.orders = std::move(d);
      continue;
    }
    long long i = -1, j = -1;
    std::string colon;
    if (!(ss >> i >> j >> colon) || colon != ":") fail(ln, "expected '<i> <j> : coefficients'");
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= m || static_cast<std::size_t>(j) >= n) {
      fail(ln, "entry index out of range");
    }
    std::size_t k = static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
    if (k != count) fail(ln, "entries must be listed once each in row-major order");
    std::vector<Elem> c;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        fail(ln, "bad coefficient '" + tok + "'");
      }
      if (used != tok.size() || tok[0] == '-') fail(ln, "bad coefficient '" + tok + "'");
      if (v >= p) fail(ln, "coefficient not reduced modulo p");
      c.push_back(v);
    }
    ++count;
    out.matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Poly(std::move(c));
  }
  if (count != m * n) fail(ln, "expected " + std::to_string(m * n) + " entries, got " + std::to_string(count));
  return out;
}

PolyMatFile read_polymat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_polymat(in);
}

void write_polymat_file(const std::string& path, const PolyMat& p,
                        const std::optional<std::vector<long long>>& orders) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_polymat(out, p, orders);
}

}  // namespace appbasis
