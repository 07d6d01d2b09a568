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

#include "fatpoints/prime_field.hpp"

#include <string>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                    29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are sufficient for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) +
                          " is not an odd prime below 2^31");
  }
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const noexcept {
  return static_cast<Residue>(powmod64(base, exp, p_));
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero");
  return pow(a, p_ - 2);
}

std::vector<Residue> inverse_table(const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  std::vector<Residue> inv(p, 0);
  if (p > 1) inv[1] = 1;
  for (std::uint32_t i = 2; i < p; ++i) {
    // inv[i] = -(p / i) * inv[p % i]
    inv[i] = field.mul(p - p / i, inv[p % i]);
  }
  return inv;
}

}  // namespace fatpoints
