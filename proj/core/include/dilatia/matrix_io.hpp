// Copyright 2026 The Dilatia Authors
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

#include <string>
#include <string_view>

#include "dilatia/numerics.hpp"

namespace dilatia {

/// Parses the plain-text matrix format: one row per line, whitespace
/// separated entries written as `re`, `imj` or `re+imj` (`i` is accepted in
/// place of `j`). Text after `#` is ignored. Throws ParseError with 1-based
/// line/column positions.
ComplexMatrix parse_matrix(std::string_view text);

/// Parses a single entry such as "0.5-0.25j".
Complex parse_complex(std::string_view token);

/// Inverse of parse_matrix, entries written with 17 significant digits.
std::string format_matrix(const ComplexMatrix& m);

ComplexMatrix read_matrix_file(const std::string& path);

}  // namespace dilatia
