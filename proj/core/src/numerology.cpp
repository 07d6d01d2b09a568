// Copyright 2026 The fatpoints Authors.
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

#include "fatpoints/numerology.hpp"

#include <string>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  return r < 0 ? r + m : r;
}

Rational ratio(const BigInt& a, const BigInt& b) { return Rational(a, b); }

// Lower end of the window holding s_{i-1}; it has exactly i members.
BigInt window_low(int i) { return BigInt(i * i - 3 * i - 2) / 2; }
BigInt window_high(int i) { return BigInt(i * i - i - 4) / 2; }

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

KValue k_value(int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("k(n,d) needs n >= 1 and d >= 1");
  KValue k;
  k.value = ratio(binomial(n + d, n), n + 1);
  k.integral = denominator(k.value) == 1;
  return k;
}

BigInt triple_point_bound(int n, int d) {
  if (n < 3 || d < 4) throw InvalidArgument("r(n,d) needs n >= 3 and d >= 4");
  if (n != 3 || d == 4) return ceil_div(binomial(n + d, n), n + 1) - n - 1;
  return ceil_div(binomial(d + 3, 3), 4) - 5;
}

BigInt simple_points_bound(int n, int d, int b) {
  if (d < 4) throw InvalidArgument("a(n,d) with simple points needs d >= 4");
  if (n < 3) throw InvalidArgument("a(n,d) with simple points needs n >= 3");
  if (b < 1 || Rational(b) >= ratio(binomial(d + 3, 3), 4) - 1) {
    throw InvalidArgument("simple point count b=" + std::to_string(b) + " out of range for d=" +
                          std::to_string(d));
  }
  const BigInt base = floor_div(binomial(n + d, n) - b - 1, n + 1);
  if (d == 4 && b == 5) return base - std::max(n - 7, 1);
  return base - std::max(0, n - 4);
}

BigInt a_seq(int i, int d) {
  if (i < 3 || d < 1) throw InvalidArgument("a(i,d) needs i >= 3 and d >= 1");
  // i^2 + 3i is always even.
  return binomial(i + d - 1, i - 1) - BigInt(i * i + 3 * i) / 2;
}

SequenceRow descend(int i, int d) {
  const BigInt a = a_seq(i, d);
  const BigInt lo = window_low(i);
  // Unique t in [lo, lo + i - 1] with t = a (mod i).
  const BigInt t = lo + mod_pos(a - lo, i);
  if (t > window_high(i)) throw Error("no residue in the window; cannot happen");
  return SequenceRow{i - 1, (a - t) / i, t};
}

SequenceTable hs_sequences(int n, int d) {
  if (d < 4 || n < d) throw InvalidArgument("sequences need n >= d >= 4");
  const KValue k = k_value(n, d);
  if (!k.integral) {
    throw InvalidArgument("k(" + std::to_string(n) + "," + std::to_string(d) +
                          ") is not an integer");
  }
  SequenceTable t;
  t.n = n;
  t.d = d;
  t.k = numerator(k.value);
  t.rows.resize(static_cast<std::size_t>(n - 1));
  t.rows.back() = SequenceRow{n, t.k - n - 2, binomial(n + 1, 2)};
  for (int i = n; i >= 3; --i) t.rows[static_cast<std::size_t>(i - 3)] = descend(i, d);
  return t;
}

SequenceVerdicts verify_sequence_properties(const SequenceTable& t) {
  const int n = t.n;
  const int d = t.d;
  if (n < 3 || static_cast<int>(t.rows.size()) != n - 1) {
    throw InvalidArgument("sequence table needs rows i = 2..n with n >= 3");
  }
  auto h = [&](int i) -> const BigInt& { return t.h(i); };
  auto s = [&](int i) -> const BigInt& { return t.s(i); };
  SequenceVerdicts v;

  v.hsa = true;
  v.kernel_expdim = true;
  v.trace_expdim = true;
  for (int i = 3; i <= n; ++i) {
    if (i * h(i - 1) + s(i - 1) != a_seq(i, d)) v.hsa = false;
    const BigInt exp_i = binomial(d - 1 + i, i) - 1 - (i + 1) * (h(i) - h(i - 1) + 1) -
                         (s(i) - s(i - 1)) - h(i - 1);
    if (exp_i != 0) v.kernel_expdim = false;
  }
  // expdim L_{j,d}(3[s_j], 2^{h_j}) = j for j = 2..n.
  for (int j = 2; j <= n; ++j) {
    const BigInt e = binomial(j + d, j) - 1 - binomial(j + 2, 2) - s(j) - (j + 1) * h(j);
    if (e != j) v.trace_expdim = false;
  }

  v.clause_i = h(n) == t.k - n - 2;
  {
    const Rational top = Rational(d - 1, n * (n + 1)) * Rational(binomial(n + d - 1, n - 1)) - 3;
    const Rational step = Rational(h(n) - h(n - 1));
    v.clause_i = v.clause_i && step >= top && step > 0;
  }
  for (int i = 2; i <= n - 2; ++i) {
    const Rational bound = Rational(d - 1, (i + 2) * (i + 1)) * Rational(binomial(i + d, i)) - 2;
    const Rational step = Rational(h(i + 1) - h(i));
    if (!(step >= bound && step > 0)) v.clause_i = false;
  }
  v.clause_i = v.clause_i && h(3) < binomial(d + 2, 3) - 4;

  v.clause_ii = s(n) == binomial(n + 1, 2);
  for (int i = 3; i <= n; ++i) {
    if (s(i - 1) < window_low(i) || s(i - 1) > window_high(i)) v.clause_ii = false;
  }

  v.clause_iii = s(2) >= 0;

  v.clause_iv = true;
  for (int i = 4; i <= n - 1; ++i) {
    if (s(i) < s(i - 1)) v.clause_iv = false;
  }

  v.clause_v = true;
  for (int i = 3; i <= n; ++i) {
    if (s(i) - s(i - 1) >= binomial(i + 1, 2)) v.clause_v = false;
  }

  v.clause_vi = true;
  for (int i = 5; i <= n; ++i) {
    const BigInt lhs = h(i - 1) - h(3) + s(i) - s(i - 1);
    if (d >= 5) {
      if (!(lhs > (i - 4) * (i + 1))) v.clause_vi = false;
    } else if (d == 4) {
      const int rhs = i <= 8 ? i + 1 : (i - 7) * (i + 1);
      if (!(lhs > rhs)) v.clause_vi = false;
    }
  }
  return v;
}

int collision_limit_degree(int n, int h) {
  if (n < 1) throw InvalidArgument("collision limit needs n >= 1");
  if (h < n + 1) {
    throw InvalidArgument("collision limit needs h >= n+1 (got h=" + std::to_string(h) + ")");
  }
  if ((n == 2 && h == 5) || (n == 3 && h == 9) || (n == 4 && h == 7) || (n == 4 && h == 14)) {
    throw InvalidArgument("(n,h)=(" + std::to_string(n) + "," + std::to_string(h) +
                          ") is a double-point exception; the collision-degree formula is "
                          "inapplicable");
  }
  const BigInt length = BigInt(h) * (n + 1);
  int j = 0;
  while (binomial(n + j, n) <= length) ++j;
  return j;
}

BigInt plane_genus(int d, std::span<const int> multiplicities) {
  if (d < 1) throw InvalidArgument("plane genus needs d >= 1");
  BigInt g = BigInt(d - 1) * (d - 2) / 2;
  for (int m : multiplicities) g -= BigInt(m) * (m - 1) / 2;
  return g;
}

}  // namespace fatpoints
