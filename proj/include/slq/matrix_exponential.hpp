// Copyright 2026 The SLQ Authors
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

#include "slq/core.hpp"

namespace slq {

/// exp(M t) by scaling and squaring around a diagonal Pade approximant
/// (degrees 3, 5, 7, 9 or 13 chosen from ||M t||_1, Higham 2005). The
/// degree/threshold pairs bound the relative backward error by the unit
/// roundoff, well inside 1e-12.
ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t = 1.0);

}  // namespace slq
