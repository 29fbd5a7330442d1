#pragma once

#include <istream>
#include <string>

#include "tropcram/linalg.hpp"

namespace tropcram {

// Shared text format: a `semiring <name>` header, a `rows cols` line, then
// row-major whitespace-separated element tokens. `#` starts a comment.
// Vectors are matrices with a single column (a single row is accepted and
// transposed on load).

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

struct MatrixFile {
  std::string semiring_name;  // may be "rmax"
  int rows = 0, cols = 0;
  std::vector<std::string> tokens;  // row-major
};

MatrixFile read_matrix_file(std::istream& in, const std::string& display_name);
MatrixFile read_matrix_file_path(const std::string& path);

Mat to_mat(const MatrixFile& f);                        // semiring value matrices
MpMat to_mpmat(const MatrixFile& f);                    // "rmax" matrices
std::vector<Elem> to_vec(const MatrixFile& f, Semiring* out_s = nullptr);
std::vector<MaxPlus> to_mpvec(const MatrixFile& f);

std::string format_matrix(const Mat& A);
std::string format_mpmat(const MpMat& A);
std::string format_vec(const Semiring& S, const std::vector<Elem>& x);
std::string format_mpvec(const std::vector<MaxPlus>& x);
std::string format_tokens(const Semiring& S, const std::vector<Elem>& x);  // one line
std::string format_mp_tokens(const std::vector<MaxPlus>& x);

}  // namespace tropcram
