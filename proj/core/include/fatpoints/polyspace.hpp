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

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fatpoints/field_matrix.hpp"
#include "fatpoints/prime_field.hpp"

namespace fatpoints {

// Exponent vector of a monomial in x_0..x_n.
struct MultiIndex {
  std::vector<unsigned> exponents;

  unsigned degree() const noexcept;
  std::size_t variables() const noexcept { return exponents.size(); }
  auto operator<=>(const MultiIndex&) const = default;
};

// A point of P^n(F_p) (or of F_p^{n+1}); not necessarily normalized.
using Point = std::vector<Residue>;

// Scales `pt` so that its first nonzero coordinate is 1. Throws on the zero
// vector.
Point normalize(const PrimeField& field, Point pt);
bool proportional(const PrimeField& field, std::span<const Residue> a,
                  std::span<const Residue> b);

// All monomials of degree d in n+1 variables in graded-lex order
// (x_0^d first, x_n^d last; exponent vectors strictly decreasing in lex).
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int dimension() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return order_.size(); }
  const MultiIndex& operator[](std::size_t j) const { return order_[j]; }
  const std::vector<MultiIndex>& order() const noexcept { return order_; }

  // Position of `m` in the basis; throws if `m` is not a degree-d monomial.
  std::size_t index_of(const MultiIndex& m) const;

 private:
  int n_;
  int d_;
  std::vector<MultiIndex> order_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

BasisPtr monomial_basis(int n, int d);

// All exponent vectors of total degree `degree` in `vars` variables, in the
// same graded-lex order as MonomialBasis.
std::vector<MultiIndex> multi_indices(std::size_t vars, unsigned degree);

// A degree-d form: coordinates with respect to a monomial basis.
struct Form {
  BasisPtr basis;
  Vector coeffs;
};

// Entry j is (d^alpha m_j)(pt). The rows for all |alpha| = m-1 state that a
// form has multiplicity >= m at pt (Euler's relation covers lower orders when
// p > d). Throws if |alpha| >= p.
Vector derivative_row(const PrimeField& field, const MonomialBasis& basis,
                      const MultiIndex& alpha, std::span<const Residue> pt);

// Entry j is the coefficient of t^m in m_j(pt + t v), i.e. the value at v of
// the degree-m leading form of m_j at pt. Together with the multiplicity-m
// rows at pt, its vanishing says the tangent cone at pt contains v.
Vector tangent_direction_row(const PrimeField& field,
                             const MonomialBasis& basis,
                             std::span<const Residue> pt,
                             std::span<const Residue> v, unsigned m);

// All binom(m-1+n, n) multiplicity rows at pt.
std::vector<Vector> multiplicity_rows(const PrimeField& field,
                                      const MonomialBasis& basis,
                                      std::span<const Residue> pt, unsigned m);

Residue eval_monomial(const PrimeField& field, const MultiIndex& e,
                      std::span<const Residue> pt);
Residue eval_form(const PrimeField& field, const Form& f,
                  std::span<const Residue> pt);

}  // namespace fatpoints
