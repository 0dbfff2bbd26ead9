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

#include "holder/numerics/bernoulli.hpp"
#include "holder/numerics/constants.hpp"
#include "holder/numerics/gamma.hpp"
#include "holder/numerics/quadrature.hpp"
#include "holder/numerics/rational.hpp"
#include "holder/numerics/real.hpp"
#include "holder/numerics/zeta.hpp"
