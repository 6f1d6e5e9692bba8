/*
 * Copyright 2026 The realcyclo Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "realcyclo/basis.h"

namespace realcyclo {

PowerPoly to_power_basis(const VPoly& v) {
  PowerPoly out(v_to_power(IntegerCoeffs{}, v.coeffs()));
  out.trim();
  return out;
}

VPoly to_v_basis(const PowerPoly& pw) {
  VPoly out(power_to_v(IntegerCoeffs{}, pw.coeffs()));
  out.trim();
  return out;
}

std::vector<u64> to_power_basis_mod(std::span<const u64> v, const Modulus& mod) {
  return v_to_power(ModCoeffs(mod), v);
}

std::vector<u64> to_v_basis_mod(std::span<const u64> pw, const Modulus& mod) {
  return power_to_v(ModCoeffs(mod), pw);
}

}  // namespace realcyclo
