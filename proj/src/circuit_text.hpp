// Copyright 2026 The btgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plain-text circuit format, one gate per line:
//
//     wires 5
//     name inversion
//     CNOT 1,0
//     TOFFOLI 3,1,2 pol=10
//     RZ 4 @0.35
//
// Wire lists give controls first, then targets. `pol=` lists control
// polarities (1 filled, 0 open) and defaults to all filled. Qudit circuits add
// a `dim N` header and use
//
//     QRX 0 @1.5707963 levels 3,5
//     SNAP 0 phases 0.1;0.2;...
//     DISP 0 alpha 0.3,-0.1
//     CSNAP 0,1 level 7 phases ...
//
// Lines starting with '#' are comments.

#include <string>
#include <string_view>

#include "qubit_circuit.hpp"
#include "qudit_circuit.hpp"

namespace btg {

std::string to_text(const QubitCircuit &c);
std::string to_text(const QuditCircuit &c);

/// Throws Error(kParse) with the offending line number.
QubitCircuit qubit_circuit_from_text(std::string_view text);
QuditCircuit qudit_circuit_from_text(std::string_view text);

/// True when the text carries a `dim` header.
bool text_is_qudit(std::string_view text);

/// CSV with header `gate_kind,count`, kinds in first-appearance order.
std::string gate_count_csv(const QubitCircuit &c);
std::string gate_count_csv(const QuditCircuit &c);

}  // namespace btg
