#include "premon/snf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "premon/families.hpp"
#include "premon/io.hpp"

namespace premon {

namespace {

void check_square(const IntMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw ShapeError("matrix must be square");
  if (a.empty()) throw ShapeError("matrix must be non-empty");
}

using Big = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<Big>>;

// Row and column operations applied to D while keeping U, V and their
// inverses. Intermediate entries can grow far beyond the final ones, so the
// reduction runs on arbitrary-precision integers.
struct Reducer {
  BigMatrix d, u, v, uinv, vinv;
  std::size_t n;

  explicit Reducer(const IntMatrix& a) : n(a.size()) {
    d.assign(n, std::vector<Big>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = a[i][j];
    u.assign(n, std::vector<Big>(n));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    v = uinv = vinv = u;
  }

  void row_add(std::size_t i, std::size_t j, const Big& c) {  // row_i += c row_j
    for (std::size_t k = 0; k < n; ++k) {
      d[i][k] += c * d[j][k];
      u[i][k] += c * u[j][k];
      uinv[k][j] -= c * uinv[k][i];
    }
  }
  void col_add(std::size_t i, std::size_t j, const Big& c) {  // col_i += c col_j
    for (std::size_t k = 0; k < n; ++k) {
      d[k][i] += c * d[k][j];
      v[k][i] += c * v[k][j];
      vinv[j][k] -= c * vinv[i][k];
    }
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
    for (std::size_t k = 0; k < n; ++k) std::swap(uinv[k][i], uinv[k][j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(d[k][i], d[k][j]);
      std::swap(v[k][i], v[k][j]);
    }
    std::swap(vinv[i], vinv[j]);
  }
  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) {
      d[i][k] = -d[i][k];
      u[i][k] = -u[i][k];
      uinv[k][i] = -uinv[k][i];
    }
  }

  // Rows t and i replaced by (x, y; -b/g, a/g) applied to them, where
  // g = gcd(a, b) = x a + y b; the column entry below the pivot becomes 0.
  void row_combine(std::size_t t, std::size_t i, const Big& x, const Big& y, const Big& ag, const Big& bg) {
    auto mix = [&](BigMatrix& m) {
      for (std::size_t k = 0; k < n; ++k) {
        const Big p = m[t][k], q = m[i][k];
        m[t][k] = x * p + y * q;
        m[i][k] = ag * q - bg * p;
      }
    };
    mix(d);
    mix(u);
    for (std::size_t k = 0; k < n; ++k) {
      const Big p = uinv[k][t], q = uinv[k][i];
      uinv[k][t] = ag * p + bg * q;
      uinv[k][i] = x * q - y * p;
    }
  }
  void col_combine(std::size_t t, std::size_t j, const Big& x, const Big& y, const Big& ag, const Big& bg) {
    auto mix = [&](BigMatrix& m) {
      for (std::size_t k = 0; k < n; ++k) {
        const Big p = m[k][t], q = m[k][j];
        m[k][t] = x * p + y * q;
        m[k][j] = ag * q - bg * p;
      }
    };
    mix(d);
    mix(v);
    for (std::size_t k = 0; k < n; ++k) {
      const Big p = vinv[t][k], q = vinv[j][k];
      vinv[t][k] = ag * p + bg * q;
      vinv[j][k] = x * q - y * p;
    }
  }

  // Extended Euclid: returns g > 0 with x a + y b = g.
  static Big ext_gcd(Big a, Big b, Big& x, Big& y) {
    Big x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      const Big q = a / b;
      Big t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
      t = y0 - q * y1;
      y0 = y1;
      y1 = t;
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
  }

  void col_negate(std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      d[k][j] = -d[k][j];
      v[k][j] = -v[k][j];
      vinv[j][k] = -vinv[j][k];
    }
  }

  static Big floor_div(const Big& b, const Big& a) {  // a > 0
    Big q = b / a;
    if (q * a > b) --q;
    return q;
  }

  // Row Hermite form: D upper triangular, positive diagonal, entries above
  // the diagonal reduced modulo it. For nonsingular A the accumulated row
  // transform equals H A^-1, so its size is tied to the adjugate.
  void row_hermite() {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        if (d[t][t] == 0) {
          row_swap(t, i);
          continue;
        }
        const Big a = d[t][t], b = d[i][t];
        if (b % a == 0) {
          row_add(i, t, -(b / a));
        } else {
          Big x, y;
          const Big g = ext_gcd(a, b, x, y);
          row_combine(t, i, x, y, a / g, b / g);
        }
      }
      if (d[t][t] == 0) throw Singular();
      if (d[t][t] < 0) row_negate(t);
      for (std::size_t i = 0; i < t; ++i)
        if (const Big q = floor_div(d[i][t], d[t][t]); q != 0) row_add(i, t, -q);
    }
  }

  // Column Hermite form: the transpose of the above.
  void col_hermite() {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        if (d[t][t] == 0) {
          col_swap(t, j);
          continue;
        }
        const Big a = d[t][t], b = d[t][j];
        if (b % a == 0) {
          col_add(j, t, -(b / a));
        } else {
          Big x, y;
          const Big g = ext_gcd(a, b, x, y);
          col_combine(t, j, x, y, a / g, b / g);
        }
      }
      if (d[t][t] == 0) throw Singular();
      if (d[t][t] < 0) col_negate(t);
      for (std::size_t j = 0; j < t; ++j)
        if (const Big q = floor_div(d[t][j], d[t][t]); q != 0) col_add(j, t, -q);
    }
  }

  bool diagonal() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && d[i][j] != 0) return false;
    return true;
  }

  // Alternates row and column Hermite forms until D is diagonal, then
  // repairs the divisibility chain by folding a column into an earlier one
  // and starting over.
  void run() {
    for (;;) {
      while (!diagonal()) {
        row_hermite();
        if (!diagonal()) col_hermite();
      }
      for (std::size_t i = 0; i < n; ++i)
        if (d[i][i] < 0) row_negate(i);
      bool fixed = false;
      for (std::size_t i = 0; i < n && !fixed; ++i)
        for (std::size_t j = i + 1; j < n && !fixed; ++j)
          if (d[j][j] % d[i][i] != 0) {
            col_add(i, j, 1);
            fixed = true;
          }
      if (!fixed) return;
    }
  }
};

BigMatrix widen(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

BigMatrix big_multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  BigMatrix c(n, std::vector<Big>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
  return c;
}

IntMatrix narrow(const BigMatrix& m) {
  static const Big lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
  IntMatrix out(m.size(), std::vector<std::int64_t>(m.empty() ? 0 : m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] < lo || m[i][j] > hi) throw Overflow();
      out[i][j] = static_cast<std::int64_t>(m[i][j]);
    }
  return out;
}


std::vector<std::int64_t> invariants_of(const IntMatrix& a) { return snf(a).diagonal(); }

IntMatrix diag(const std::vector<std::int64_t>& d) {
  IntMatrix m = identity_matrix(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Exact products; throws Overflow only when a result entry leaves 64 bits.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return narrow(big_multiply(widen(a), widen(b))); }

Int128 determinant(const IntMatrix& a) {
  check_square(a);
  const std::size_t n = a.size();
  BigMatrix m = widen(a);
  Big sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  const Big det = sign * m[n - 1][n - 1];
  static const Big lim = Big(1) << 126;
  if (abs(det) >= lim) throw Overflow();
  // Assemble the 128-bit value from two 63-bit halves.
  const Big mag = abs(det);
  const Int128 hi = static_cast<std::int64_t>(mag >> 63), lo = static_cast<std::int64_t>(mag & ((Big(1) << 63) - 1));
  const Int128 v = (hi << 63) | lo;
  return det < 0 ? -v : v;
}

std::vector<std::int64_t> SnfResult::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(d[i][i]);
  return out;
}

SnfResult snf(const IntMatrix& a) {
  check_square(a);
  if (determinant(a) == 0) throw Singular();
  Reducer r(a);
  r.run();
  const std::size_t n = a.size();
  // Checked on the exact values; an integer two-sided inverse makes U and V
  // unimodular.
  BigMatrix id(n, std::vector<Big>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  if (big_multiply(big_multiply(r.u, widen(a)), r.v) != r.d) throw Error("snf: U A V != D");
  if (big_multiply(r.u, r.uinv) != id || big_multiply(r.vinv, r.v) != id)
    throw Error("snf: inverse bookkeeping broken");
  SnfResult s{narrow(r.u), narrow(r.v), narrow(r.d), narrow(r.uinv), narrow(r.vinv)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && s.d[i][j] != 0) throw Error("snf: D not diagonal");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (s.d[i][i] <= 0 || s.d[i + 1][i + 1] % s.d[i][i]) throw Error("snf: divisibility chain broken");
  return s;
}

bool matrix_divides(const IntMatrix& b, const IntMatrix& a) {
  const auto sb = invariants_of(b), sa = invariants_of(a);
  if (sb.size() != sa.size()) throw ShapeError("matrices of different sizes");
  for (std::size_t i = 0; i < sb.size(); ++i)
    if (sa[i] % sb[i]) return false;
  return true;
}

namespace {

std::int64_t checked_abs_det(const IntMatrix& a, std::int64_t bound) {
  Int128 det = determinant(a);
  if (det == 0) throw Singular();
  if (det < 0) det = -det;
  if (det > bound) throw DetTooLarge(bound);
  return static_cast<std::int64_t>(det);
}

}  // namespace

MatrixDivisorReport matrix_divisor_classes(const IntMatrix& a, std::int64_t det_bound) {
  check_square(a);
  const std::size_t n = a.size();
  MatrixDivisorReport rep;
  rep.primes = prime_factors(checked_abs_det(a, det_bound));
  const std::size_t k = rep.primes.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= n + 1;
    if (total > 1'000'000) throw DetTooLarge(det_bound);
  }
  rep.candidates = total;
  std::map<std::vector<std::int64_t>, std::size_t> by_invariants;
  std::vector<std::size_t> slot(k, 0);  // 0 = unused, i = goes to entry i - 1
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t code = c;
    std::vector<std::int64_t> dg(n, 1);
    for (std::size_t i = 0; i < k; ++i) {
      slot[i] = code % (n + 1);
      code /= n + 1;
      if (slot[i]) dg[slot[i] - 1] *= rep.primes[i];
    }
    auto inv = invariants_of(diag(dg));
    auto [it, fresh] = by_invariants.emplace(inv, rep.classes.size());
    if (fresh) rep.classes.push_back({dg, inv, 0, matrix_divides(diag(dg), a)});
    ++rep.classes[it->second].candidates;
  }
  return rep;
}

MatrixLengths matrix_length_set(const IntMatrix& a, std::int64_t det_bound) {
  MatrixLengths out;
  out.abs_det = checked_abs_det(a, det_bound);
  const SnfResult s = snf(a);
  const std::size_t n = a.size();
  std::vector<IntMatrix> factors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::int64_t p : prime_factors(s.d[i][i])) {
      IntMatrix e = identity_matrix(n);
      e[i][i] = p;
      factors.push_back(std::move(e));
    }
  if (factors.empty()) {
    out.lengths = LengthSet::finite({});  // a unit: no factorization into non-units
    return out;
  }
  out.lengths = LengthSet::finite({factors.size()});
  factors.front() = multiply(s.uinv, factors.front());
  factors.back() = multiply(factors.back(), s.vinv);
  IntMatrix prod = identity_matrix(n);
  for (const auto& f : factors) prod = multiply(prod, f);
  if (prod != a) throw Error("matrix witness does not multiply back to A");
  out.witness = std::move(factors);
  return out;
}

bool associated_by_search(const IntMatrix& b, const IntMatrix& c, std::int64_t bound) {
  if (b.size() != 2 || c.size() != 2) throw ShapeError("associate search is implemented for 2x2 matrices");
  std::vector<IntMatrix> unimodular;
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q)
      for (std::int64_t r = -bound; r <= bound; ++r)
        for (std::int64_t t = -bound; t <= bound; ++t)
          if (p * t - q * r == 1 || p * t - q * r == -1) unimodular.push_back({{p, q}, {r, t}});
  for (const auto& x : unimodular) {
    const IntMatrix xb = multiply(x, b);
    for (const auto& y : unimodular)
      if (multiply(xb, y) == c) return true;
  }
  return false;
}

IntMatrix matrix_from_json_file(const std::string& path) {
  const json j = read_json_file(path);
  try {
    auto m = j.get<IntMatrix>();
    check_square(m);
    return m;
  } catch (const json::exception& e) {
    throw InputError(path + ": expected a square integer matrix [[int]]");
  }
}

}  // namespace premon
