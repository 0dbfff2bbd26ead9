// Copyright 2026 The holder-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>

#include "holder/numerics/real.hpp"

namespace holder {

/// pi correctly rounded to `prec` bits, so |result - pi| <= 2^(2-prec).
inline Real pi_value(Bits prec = kDefaultPrecision) {
  if (prec < kMinPrecision) throw std::invalid_argument("pi_value: precision below 32 bits");
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

}  // namespace holder
