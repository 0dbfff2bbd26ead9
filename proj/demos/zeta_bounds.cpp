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
// Odd zeta values next to sqrt(zeta(2k) zeta(2k+2)) and its exact radical.
#include <iostream>

#include "holder/zeta_bounds.hpp"

int main() {
  for (const holder::ZetaTableRow& r : holder::zeta_table(8)) {
    std::cout << "zeta(" << r.odd_index << ") = " << r.zeta_value.estimate.to_string(20)
              << "  <=  " << r.bound_numeric.to_string(20) << " = " << r.bound_closed.to_string() << "\n";
  }
}
