/*
 * Copyright 2026 The codedmv Authors.
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


// Matrix and vector files.
//
// Sparse matrices use the Matrix Market coordinate format (real, integer or
// pattern; general or symmetric). Dense matrices are plain CSV, one row per
// line. Vectors are numbers separated by commas, whitespace or newlines.
// Writers emit shortest round-trip decimal, so files are reproducible.

#ifndef CODEDMV_MATRIX_IO_H_
#define CODEDMV_MATRIX_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "codedmv/numeric.h"

namespace codedmv {

// All readers throw ParseError on malformed input or unreadable files.
SparseMatrix ParseMatrixMarket(std::string_view text);
SparseMatrix ReadMatrixMarket(const std::filesystem::path& path);
std::string FormatMatrixMarket(const SparseMatrix& m);
void WriteMatrixMarket(const std::filesystem::path& path,
                       const SparseMatrix& m);

DenseMatrix ParseDenseCsv(std::string_view text);
DenseMatrix ReadDenseCsv(const std::filesystem::path& path);
std::string FormatDenseCsv(const DenseMatrix& m);
void WriteDenseCsv(const std::filesystem::path& path, const DenseMatrix& m);

Eigen::VectorXd ParseVector(std::string_view text);
Eigen::VectorXd ReadVector(const std::filesystem::path& path);
// One entry per line.
std::string FormatVector(const Eigen::VectorXd& v);
void WriteVector(const std::filesystem::path& path, const Eigen::VectorXd& v);

// Shortest decimal that reads back as the same double; "inf", "-inf", "nan"
// for non-finite values.
std::string FormatDouble(double value);

}  // namespace codedmv

#endif  // CODEDMV_MATRIX_IO_H_
