#pragma once

#include <cstdint>
#include <vector>

namespace tqf::modmat {

// Dense row-major matrices over F_p. Dimensions stay small (a few dozen),
// so plain O(n^3) routines are fine.
using Mat = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

Mat identity(std::uint32_t n);
Mat mul(const Mat& A, const Mat& B, std::uint32_t n, std::uint32_t p);
Mat mat_pow(Mat A, std::uint64_t e, std::uint32_t n, std::uint32_t p);
Mat add(const Mat& A, const Mat& B, std::uint32_t n, std::uint32_t p);
Mat sub(const Mat& A, const Mat& B, std::uint32_t n, std::uint32_t p);

void apply(const Mat& A, const std::uint32_t* x, std::uint32_t* out,
           std::uint32_t n, std::uint32_t p);

// Rank of an r x c matrix (destroys a copy).
std::uint32_t rank(Mat A, std::uint32_t rows, std::uint32_t cols, std::uint32_t p);

// Basis of the right kernel of an r x c matrix, one column vector per entry.
std::vector<std::vector<std::uint32_t>> kernel_basis(Mat A, std::uint32_t rows,
                                                     std::uint32_t cols, std::uint32_t p);

} // namespace tqf::modmat
