// Copyright 2026 The qforge Authors
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

#include "qforge/circuit.hpp"
#include "qforge/phase_gadget.hpp"

namespace qforge::detail {

/// Appends the per-class Gray walks for alpha onto qudits 0..alpha.n-1 of `out`.
void emit_gray_walks(const AlphaVector& alpha, Circuit& out);

}  // namespace qforge::detail
