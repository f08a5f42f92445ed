/*
 * Copyright 2026 The latgauss Authors.
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

#ifndef LATGAUSS_BASIS_IO_H_
#define LATGAUSS_BASIS_IO_H_

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "latgauss/lattice.h"

namespace latgauss {

// Accepts either a JSON object {"vectors": [[...], ...]} whose entries are
// numbers or decimal strings, or a whitespace-separated matrix with one row
// vector per line. Blank lines and lines starting with '#' are ignored in
// the text form. Throws Error(kParseError) on malformed input.
LatticeBasis ParseBasis(std::string_view text);
LatticeBasis ReadBasisFile(const std::string& path);

// Comma- or whitespace-separated list of reals, e.g. "0.5,0.25".
Eigen::VectorXd ParseVector(std::string_view text);

}  // namespace latgauss

#endif  // LATGAUSS_BASIS_IO_H_
