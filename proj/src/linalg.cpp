#include "tqf/linalg.hpp"

#include <stdexcept>

namespace tqf::modmat {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t quo = r / newr;
        std::int64_t tmp = t - quo * newt;
        t = newt;
        newt = tmp;
        tmp = r - quo * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

Mat identity(std::uint32_t n) {
    Mat I(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) I[static_cast<std::size_t>(i) * n + i] = 1;
    return I;
}

Mat mul(const Mat& A, const Mat& B, std::uint32_t n, std::uint32_t p) {
    Mat C(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t k = 0; k < n; ++k) {
            std::uint64_t a = A[static_cast<std::size_t>(i) * n + k];
            if (!a) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                std::uint64_t v = C[static_cast<std::size_t>(i) * n + j] +
                                  a * B[static_cast<std::size_t>(k) * n + j];
                C[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint32_t>(v % p);
            }
        }
    }
    return C;
}

Mat mat_pow(Mat A, std::uint64_t e, std::uint32_t n, std::uint32_t p) {
    Mat R = identity(n);
    while (e) {
        if (e & 1) R = mul(R, A, n, p);
        A = mul(A, A, n, p);
        e >>= 1;
    }
    return R;
}

Mat add(const Mat& A, const Mat& B, std::uint32_t n, std::uint32_t p) {
    Mat C(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) C[i] = (A[i] + B[i]) % p;
    return C;
}

Mat sub(const Mat& A, const Mat& B, std::uint32_t n, std::uint32_t p) {
    Mat C(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) C[i] = (A[i] + p - B[i] % p) % p;
    return C;
}

void apply(const Mat& A, const std::uint32_t* x, std::uint32_t* out,
           std::uint32_t n, std::uint32_t p) {
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        const std::uint32_t* row = &A[static_cast<std::size_t>(i) * n];
        for (std::uint32_t j = 0; j < n; ++j) acc += static_cast<std::uint64_t>(row[j]) * x[j];
        out[i] = static_cast<std::uint32_t>(acc % p);
    }
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::uint32_t> rref(Mat& A, std::uint32_t rows, std::uint32_t cols,
                                std::uint32_t p) {
    std::vector<std::uint32_t> pivots;
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
        std::uint32_t piv = rows;
        for (std::uint32_t i = r; i < rows; ++i) {
            if (A[static_cast<std::size_t>(i) * cols + c] % p) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        for (std::uint32_t j = 0; j < cols; ++j)
            std::swap(A[static_cast<std::size_t>(r) * cols + j],
                      A[static_cast<std::size_t>(piv) * cols + j]);
        std::uint32_t inv = inv_mod(A[static_cast<std::size_t>(r) * cols + c] % p, p);
        for (std::uint32_t j = 0; j < cols; ++j) {
            auto& v = A[static_cast<std::size_t>(r) * cols + j];
            v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * inv) % p);
        }
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t f = A[static_cast<std::size_t>(i) * cols + c] % p;
            if (!f) continue;
            for (std::uint32_t j = 0; j < cols; ++j) {
                auto& v = A[static_cast<std::size_t>(i) * cols + j];
                std::uint64_t sub = f * A[static_cast<std::size_t>(r) * cols + j] % p;
                v = static_cast<std::uint32_t>((v + p - sub) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::uint32_t rank(Mat A, std::uint32_t rows, std::uint32_t cols, std::uint32_t p) {
    return static_cast<std::uint32_t>(rref(A, rows, cols, p).size());
}

std::vector<std::vector<std::uint32_t>> kernel_basis(Mat A, std::uint32_t rows,
                                                     std::uint32_t cols, std::uint32_t p) {
    auto pivots = rref(A, rows, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint32_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::uint32_t coeff = A[i * cols + c] % p;
            if (coeff) v[pivots[i]] = p - coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace tqf::modmat
