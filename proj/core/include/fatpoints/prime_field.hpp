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

#include <cstdint>
#include <vector>

namespace fatpoints {

using Residue = std::uint32_t;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Arithmetic in F_p for an odd prime p < 2^31. Residues are kept in [0, p),
// so a product of two residues always fits in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;
  static constexpr std::uint32_t kSecondaryPrime = 65521;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t exp) const noexcept;
  // Throws InvalidArgument on zero.
  Residue inv(Residue a) const;

  bool operator==(const PrimeField& other) const noexcept {
    return p_ == other.p_;
  }

 private:
  std::uint32_t p_;
};

// Table of inverses 1..p-1 (entry 0 is 0); used by the census hot loop.
std::vector<Residue> inverse_table(const PrimeField& field);

}  // namespace fatpoints
