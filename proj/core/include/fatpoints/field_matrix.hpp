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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "fatpoints/prime_field.hpp"

namespace fatpoints {

using Vector = std::vector<Residue>;

// Dense row-major matrix over a prime field. Entries are always reduced.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(PrimeField field, std::size_t size);
  // Entries may be any integers; they are reduced modulo p.
  static FieldMatrix from_rows(
      PrimeField field,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static FieldMatrix from_rows(PrimeField field,
                               const std::vector<Vector>& rows,
                               std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) {
    data_[r * cols_ + c] = v % field_.modulus();
  }

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  // Appends one row; `values` must have cols() entries, already reduced.
  void append_row(std::span<const Residue> values);

  Vector multiply(std::span<const Residue> v) const;

  bool operator==(const FieldMatrix& other) const noexcept {
    return field_ == other.field_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::size_t rank(const FieldMatrix& m);

// Reduced row-echelon form: every pivot is 1 and is the only nonzero entry of
// its column; zero rows are kept at the bottom.
FieldMatrix rref(const FieldMatrix& m);

// Basis of the right kernel, cols() - rank() vectors. Each vector is scaled so
// that its first nonzero entry is 1.
std::vector<Vector> kernel_basis(const FieldMatrix& m);

}  // namespace fatpoints
