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

#include "fatpoints/polyspace.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fatpoints/error.hpp"

namespace fatpoints {

unsigned MultiIndex::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Point normalize(const PrimeField& field, Point pt) {
  auto lead = std::find_if(pt.begin(), pt.end(), [](Residue x) { return x != 0; });
  if (lead == pt.end()) throw InvalidArgument("zero vector is not a point");
  const Residue s = field.inv(*lead);
  for (Residue& x : pt) x = field.mul(x, s);
  return pt;
}

bool proportional(const PrimeField& field, std::span<const Residue> a,
                  std::span<const Residue> b) {
  if (a.size() != b.size()) return false;
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (field.mul(a[i], b[j]) != field.mul(a[j], b[i])) return false;
    }
  }
  return true;
}

namespace {

void fill_indices(std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
                  std::vector<MultiIndex>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(MultiIndex{cur});
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    fill_indices(var + 1, remaining - e, cur, out);
  }
}

void require_point(const MonomialBasis& basis, std::span<const Residue> pt) {
  if (pt.size() != static_cast<std::size_t>(basis.dimension()) + 1) {
    throw InvalidArgument("point has " + std::to_string(pt.size()) +
                          " coordinates, expected " +
                          std::to_string(basis.dimension() + 1));
  }
}

// Binomial coefficients mod p up to row `top`.
std::vector<std::vector<Residue>> pascal(const PrimeField& field, unsigned top) {
  std::vector<std::vector<Residue>> c(top + 1);
  for (unsigned i = 0; i <= top; ++i) {
    c[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) c[i][j] = field.add(c[i - 1][j - 1], c[i - 1][j]);
  }
  return c;
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t vars, unsigned degree) {
  std::vector<MultiIndex> out;
  if (vars == 0) return out;
  std::vector<unsigned> cur(vars, 0);
  fill_indices(0, degree, cur, out);
  return out;
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw InvalidArgument("ambient dimension must be at least 1");
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  order_ = multi_indices(static_cast<std::size_t>(n) + 1, static_cast<unsigned>(d));
}

std::size_t MonomialBasis::index_of(const MultiIndex& m) const {
  // order_ is strictly decreasing.
  auto it = std::lower_bound(order_.begin(), order_.end(), m,
                             [](const MultiIndex& a, const MultiIndex& b) { return a > b; });
  if (it == order_.end() || *it != m) throw InvalidArgument("monomial not in basis");
  return static_cast<std::size_t>(it - order_.begin());
}

BasisPtr monomial_basis(int n, int d) { return std::make_shared<const MonomialBasis>(n, d); }

Residue eval_monomial(const PrimeField& field, const MultiIndex& e,
                      std::span<const Residue> pt) {
  Residue v = 1;
  for (std::size_t i = 0; i < e.exponents.size(); ++i) {
    if (e.exponents[i] != 0) v = field.mul(v, field.pow(pt[i], e.exponents[i]));
  }
  return v;
}

Vector derivative_row(const PrimeField& field, const MonomialBasis& basis,
                      const MultiIndex& alpha, std::span<const Residue> pt) {
  require_point(basis, pt);
  if (alpha.variables() != pt.size()) throw InvalidArgument("multi-index length mismatch");
  if (alpha.degree() >= field.modulus()) {
    throw InvalidArgument("derivative order must be below the characteristic");
  }
  Vector row(basis.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& e = basis[j].exponents;
    Residue v = 1;
    for (std::size_t i = 0; i < e.size() && v != 0; ++i) {
      if (e[i] < alpha.exponents[i]) {
        v = 0;
        break;
      }
      // falling factorial e!/(e-a)!
      for (unsigned k = 0; k < alpha.exponents[i]; ++k) {
        v = field.mul(v, field.reduce(e[i] - k));
      }
      const unsigned rest = e[i] - alpha.exponents[i];
      if (rest != 0) v = field.mul(v, field.pow(pt[i], rest));
    }
    row[j] = v;
  }
  return row;
}

Vector tangent_direction_row(const PrimeField& field, const MonomialBasis& basis,
                             std::span<const Residue> pt, std::span<const Residue> v,
                             unsigned m) {
  require_point(basis, pt);
  require_point(basis, v);
  if (m >= field.modulus()) {
    throw InvalidArgument("multiplicity must be below the characteristic");
  }
  if (proportional(field, pt, v)) {
    throw InvalidArgument("tangent direction coincides with its point");
  }
  const auto binom = pascal(field, static_cast<unsigned>(basis.degree()));
  Vector row(basis.size(), 0);
  std::vector<Residue> poly;
  std::vector<Residue> next;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& e = basis[j].exponents;
    // Coefficients of prod_i (pt_i + t v_i)^{e_i}, truncated at t^m.
    poly.assign(m + 1, 0);
    poly[0] = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const unsigned top = std::min(e[i], m);
      std::vector<Residue> factor(top + 1);
      for (unsigned k = 0; k <= top; ++k) {
        factor[k] = field.mul(binom[e[i]][k],
                              field.mul(field.pow(pt[i], e[i] - k), field.pow(v[i], k)));
      }
      next.assign(m + 1, 0);
      for (unsigned a = 0; a <= m; ++a) {
        if (poly[a] == 0) continue;
        for (unsigned k = 0; k <= top && a + k <= m; ++k) {
          next[a + k] = field.add(next[a + k], field.mul(poly[a], factor[k]));
        }
      }
      poly.swap(next);
    }
    row[j] = poly[m];
  }
  return row;
}

std::vector<Vector> multiplicity_rows(const PrimeField& field, const MonomialBasis& basis,
                                      std::span<const Residue> pt, unsigned m) {
  std::vector<Vector> rows;
  if (m == 0) return rows;
  for (const auto& alpha : multi_indices(pt.size(), m - 1)) {
    rows.push_back(derivative_row(field, basis, alpha, pt));
  }
  return rows;
}

Residue eval_form(const PrimeField& field, const Form& f, std::span<const Residue> pt) {
  require_point(*f.basis, pt);
  if (f.coeffs.size() != f.basis->size()) throw InvalidArgument("form/basis size mismatch");
  Residue acc = 0;
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    if (f.coeffs[j] == 0) continue;
    acc = field.add(acc, field.mul(f.coeffs[j], eval_monomial(field, (*f.basis)[j], pt)));
  }
  return acc;
}

}  // namespace fatpoints
