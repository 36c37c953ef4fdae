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

#include "appbasis/multiply.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace appbasis {
namespace {

constexpr std::size_t kKaratsubaCutoff = 32;
constexpr std::size_t kPolyTransformCutoff = 128;

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

void schoolbook(const Field& f, const Elem* a, std::size_t na, const Elem* b, std::size_t nb,
                Elem* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
}

// out += a * b; out has room for na + nb - 1 entries.
void karatsuba(const Field& f, const Elem* a, std::size_t na, const Elem* b, std::size_t nb,
               Elem* out) {
  if (na == 0 || nb == 0) return;
  if (std::min(na, nb) < kKaratsubaCutoff) {
    schoolbook(f, a, na, b, nb, out);
    return;
  }
  if (na != nb) {
    // Split the longer operand into chunks of the shorter length.
    if (na < nb) {
      std::swap(a, b);
      std::swap(na, nb);
    }
    for (std::size_t off = 0; off < na; off += nb) {
      karatsuba(f, a + off, std::min(nb, na - off), b, nb, out + off);
    }
    return;
  }
  std::size_t h = na / 2, hi = na - h;
  std::vector<Elem> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = f.add(i < h ? a[i] : 0, a[h + i]);
    sb[i] = f.add(i < h ? b[i] : 0, b[h + i]);
  }
  std::vector<Elem> lo(2 * h), high(2 * hi), mid(2 * hi);
  karatsuba(f, a, h, b, h, lo.data());
  karatsuba(f, a + h, hi, b + h, hi, high.data());
  karatsuba(f, sa.data(), hi, sb.data(), hi, mid.data());
  for (std::size_t i = 0; i + 1 < 2 * hi; ++i) {
    Elem m = f.sub(mid[i], high[i]);
    if (i + 1 < 2 * h) m = f.sub(m, lo[i]);
    out[h + i] = f.add(out[h + i], m);
  }
  for (std::size_t i = 0; i + 1 < 2 * h; ++i) out[i] = f.add(out[i], lo[i]);
  for (std::size_t i = 0; i + 1 < 2 * hi; ++i) out[2 * h + i] = f.add(out[2 * h + i], high[i]);
}

class Transform {
 public:
  Transform(const Field& f, std::size_t log_len) : f_(f), n_(std::size_t{1} << log_len) {
    Elem w = f.root_of_unity(static_cast<int>(log_len));
    roots_.resize(n_ / 2 + 1);
    iroots_.resize(n_ / 2 + 1);
    Elem wi = f.inv(w);
    roots_[0] = iroots_[0] = 1;
    for (std::size_t i = 1; i <= n_ / 2; ++i) {
      roots_[i] = f.mul(roots_[i - 1], w);
      iroots_[i] = f.mul(iroots_[i - 1], wi);
    }
    n_inv_ = f.inv(static_cast<Elem>(n_ % f.modulus()));
  }

  std::size_t size() const { return n_; }

  void forward(std::vector<Elem>& a) const { run(a, roots_); }
  void inverse(std::vector<Elem>& a) const {
    run(a, iroots_);
    for (auto& x : a) x = f_.mul(x, n_inv_);
  }

 private:
  void run(std::vector<Elem>& a, const std::vector<Elem>& rt) const {
    for (std::size_t i = 1, j = 0; i < n_; ++i) {
      std::size_t bit = n_ >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      std::size_t step = n_ / len;
      for (std::size_t i = 0; i < n_; i += len) {
        for (std::size_t k = 0; k < len / 2; ++k) {
          Elem u = a[i + k];
          Elem v = f_.mul(a[i + k + len / 2], rt[k * step]);
          a[i + k] = f_.add(u, v);
          a[i + k + len / 2] = f_.sub(u, v);
        }
      }
    }
  }

  const Field& f_;
  std::size_t n_;
  std::vector<Elem> roots_, iroots_;
  Elem n_inv_;
};

std::vector<Elem> padded(const Poly& p, std::size_t n) {
  std::vector<Elem> v(n, 0);
  auto c = p.coeffs();
  std::copy(c.begin(), c.end(), v.begin());
  return v;
}

PolyMat multiply_entrywise(const PolyMat& a, const PolyMat& b, PolyMulAlgo algo) {
  const Field& f = a.field();
  PolyMat c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<Elem> acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Poly& x = a(i, k);
        const Poly& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        std::size_t len = x.length() + y.length() - 1;
        if (acc.size() < len) acc.resize(len, 0);
        if (algo == PolyMulAlgo::kSchoolbook) {
          schoolbook(f, x.coeffs().data(), x.length(), y.coeffs().data(), y.length(), acc.data());
        } else if (algo == PolyMulAlgo::kKaratsuba) {
          karatsuba(f, x.coeffs().data(), x.length(), y.coeffs().data(), y.length(), acc.data());
        } else {
          Poly p = mul(f, x, y, algo);
          for (std::size_t t = 0; t < p.length(); ++t) acc[t] = f.add(acc[t], p.coeff(t));
        }
      }
      c.at(i, j) = Poly(std::move(acc));
    }
  }
  return c;
}

PolyMat multiply_transform(const PolyMat& a, const PolyMat& b) {
  const Field& f = a.field();
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  PolyMat c(f, m, n);
  Degree da = a.degree(), db = b.degree();
  if (!da.is_finite() || !db.is_finite()) return c;
  std::size_t len = static_cast<std::size_t>(da.value() + db.value() + 1);
  Transform t(f, ceil_log2(len));
  const std::size_t N = t.size();
  std::vector<std::vector<Elem>> ta(m * k), tb(k * n);
  for (std::size_t i = 0; i < m * k; ++i) {
    const Poly& p = a(i / k, i % k);
    if (p.is_zero()) continue;
    ta[i] = padded(p, N);
    t.forward(ta[i]);
  }
  for (std::size_t i = 0; i < k * n; ++i) {
    const Poly& p = b(i / n, i % n);
    if (p.is_zero()) continue;
    tb[i] = padded(p, N);
    t.forward(tb[i]);
  }
  std::vector<Elem> acc(N);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (std::size_t l = 0; l < k; ++l) {
        const auto& x = ta[i * k + l];
        const auto& y = tb[l * n + j];
        if (x.empty() || y.empty()) continue;
        any = true;
        for (std::size_t s = 0; s < N; ++s) acc[s] = f.add(acc[s], f.mul(x[s], y[s]));
      }
      if (!any) continue;
      t.inverse(acc);
      c.at(i, j) = Poly(std::vector<Elem>(acc.begin(), acc.begin() + static_cast<long>(len)));
    }
  }
  return c;
}

}  // namespace

bool transform_available(const Field& f, std::size_t length) {
  return ceil_log2(length) <= static_cast<std::size_t>(f.two_adicity());
}

Poly mul(const Field& f, const Poly& a, const Poly& b, PolyMulAlgo algo) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::size_t len = a.length() + b.length() - 1;
  if (algo == PolyMulAlgo::kAuto) {
    if (std::min(a.length(), b.length()) < kKaratsubaCutoff) {
      algo = PolyMulAlgo::kSchoolbook;
    } else if (len >= kPolyTransformCutoff && transform_available(f, len)) {
      algo = PolyMulAlgo::kTransform;
    } else {
      algo = PolyMulAlgo::kKaratsuba;
    }
  }
  if (algo == PolyMulAlgo::kTransform && !transform_available(f, len)) algo = PolyMulAlgo::kKaratsuba;
  std::vector<Elem> out(len, 0);
  switch (algo) {
    case PolyMulAlgo::kSchoolbook:
      schoolbook(f, a.coeffs().data(), a.length(), b.coeffs().data(), b.length(), out.data());
      break;
    case PolyMulAlgo::kKaratsuba:
      karatsuba(f, a.coeffs().data(), a.length(), b.coeffs().data(), b.length(), out.data());
      break;
    default: {
      Transform t(f, ceil_log2(len));
      auto x = padded(a, t.size());
      auto y = padded(b, t.size());
      t.forward(x);
      t.forward(y);
      for (std::size_t i = 0; i < t.size(); ++i) x[i] = f.mul(x[i], y[i]);
      t.inverse(x);
      std::copy(x.begin(), x.begin() + static_cast<long>(len), out.begin());
    }
  }
  return Poly(std::move(out));
}

PolyMat multiply(const PolyMat& a, const PolyMat& b, MatMulAlgo algo, const MulThresholds& th) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw std::invalid_argument("polynomial matrix product: dimension mismatch");
  }
  Degree da = a.degree(), db = b.degree();
  if (!da.is_finite() || !db.is_finite()) return PolyMat(a.field(), a.rows(), b.cols());
  std::size_t len = static_cast<std::size_t>(da.value() + db.value() + 1);
  if (algo == MatMulAlgo::kAuto) {
    bool big = len - 1 >= th.transform_min_degree && a.cols() >= th.transform_min_inner;
    algo = big && transform_available(a.field(), len) ? MatMulAlgo::kTransform : MatMulAlgo::kSchoolbook;
    if (algo == MatMulAlgo::kSchoolbook) return multiply_entrywise(a, b, PolyMulAlgo::kAuto);
  }
  switch (algo) {
    case MatMulAlgo::kSchoolbook:
      return multiply_entrywise(a, b, PolyMulAlgo::kSchoolbook);
    case MatMulAlgo::kKaratsuba:
      return multiply_entrywise(a, b, PolyMulAlgo::kKaratsuba);
    default:
      if (!transform_available(a.field(), len)) return multiply_entrywise(a, b, PolyMulAlgo::kKaratsuba);
      return multiply_transform(a, b);
  }
}

}  // namespace appbasis
