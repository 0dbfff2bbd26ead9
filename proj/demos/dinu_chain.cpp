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
// Replays the four-step Hölder chain for (ab)^(5/4) + (bc)^(5/4) + (ca)^(5/4)
// at a random point of the simplex, then evaluates it from the norm caps.
#include <iostream>
#include <vector>

#include "holder/holder.hpp"

int main() {
  using namespace holder;
  const std::vector<double> w = {0.2, 0.5, 0.3};
  SimplexPoint a = SimplexPoint::normalized(w);
  WeightedSequence g = leave_one_out_products(a);

  ChainCertificate cert = holder_chain(4, g);
  for (const ChainStep& st : cert.steps)
    std::cout << "step " << st.step_index << ": q=" << st.q.to_string() << " p=" << st.p.to_string()
              << "  S=" << st.step_value->to_string() << " <= " << st.intermediate_bound.to_string() << "\n";

  ChainCertificate caps = holder_chain_from_norms(4, Real(BigRational(1, 3)), Real(BigRational(1, 4)));
  std::cout << "with ||g||_1 <= 1/3, ||g||_inf <= 1/4: " << caps.final_bound.to_string() << "\n";
}
