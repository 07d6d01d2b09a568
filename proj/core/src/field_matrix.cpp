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

#include "fatpoints/field_matrix.hpp"

#include <algorithm>
#include <utility>

#include "fatpoints/error.hpp"

namespace fatpoints {

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t size) {
  FieldMatrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m.data_[i * size + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(
    PrimeField field,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  FieldMatrix m(field, 0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("ragged matrix rows");
    Vector reduced;
    reduced.reserve(cols);
    for (std::int64_t v : r) reduced.push_back(field.reduce(v));
    m.append_row(reduced);
  }
  return m;
}

FieldMatrix FieldMatrix::from_rows(PrimeField field,
                                   const std::vector<Vector>& rows,
                                   std::size_t cols) {
  FieldMatrix m(field, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("ragged matrix rows");
    Vector reduced(r.size());
    std::transform(r.begin(), r.end(), reduced.begin(),
                   [&](Residue v) { return v % field.modulus(); });
    m.append_row(reduced);
  }
  return m;
}

void FieldMatrix::append_row(std::span<const Residue> values) {
  if (values.size() != cols_) throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Vector FieldMatrix::multiply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw InvalidArgument("vector length mismatch");
  const std::uint64_t p = field_.modulus();
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Residue* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>(row[c]) * v[c]) % p;
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

namespace {

// In-place Gauss-Jordan elimination with first-nonzero pivoting. Returns the
// pivot columns; rows [0, pivots.size()) hold the reduced pivot rows.
std::vector<std::size_t> eliminate(FieldMatrix& m, bool reduce_above) {
  const PrimeField& f = m.field();
  const std::uint64_t p = f.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = next; r < rows; ++r) {
      if (m.at(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != next) {
      auto a = m.row(found);
      auto b = m.row(next);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto pivot = m.row(next);
    const Residue scale = f.inv(pivot[c]);
    for (std::size_t k = c; k < cols; ++k) pivot[k] = f.mul(pivot[k], scale);

    const std::size_t first = reduce_above ? 0 : next + 1;
    for (std::size_t r = first; r < rows; ++r) {
      if (r == next) continue;
      auto target = m.row(r);
      const Residue factor = target[c];
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t k = c; k < cols; ++k) {
        target[k] = static_cast<Residue>((target[k] + neg * pivot[k]) % p);
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  FieldMatrix work = m;
  return eliminate(work, /*reduce_above=*/false).size();
}

FieldMatrix rref(const FieldMatrix& m) {
  FieldMatrix work = m;
  eliminate(work, /*reduce_above=*/true);
  return work;
}

std::vector<Vector> kernel_basis(const FieldMatrix& m) {
  FieldMatrix work = m;
  const auto pivots = eliminate(work, /*reduce_above=*/true);
  const PrimeField& f = m.field();
  const std::size_t cols = m.cols();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(work.at(r, free));
    }
    // Normalize so the first nonzero entry is 1.
    for (Residue x : v) {
      if (x != 0) {
        const Residue s = f.inv(x);
        for (Residue& y : v) y = f.mul(y, s);
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fatpoints
