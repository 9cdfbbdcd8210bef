#pragma once

#include <vector>

#include "editctrl/tensor.hpp"

namespace editctrl {

/*--------------------------------- raw kernels ---------------------------------*/
// Deterministic GEMM: each output element accumulates over k in strictly
// ascending order, independent of the surrounding tile, so per-row results do
// not depend on how many rows are computed (row subsets are bit-stable).
namespace kernels {

template <typename T>
void gemm_nn(int m, int k, int n, const T* a, const T* b, T* c, bool accumulate);

template <typename T>
void transpose(int rows, int cols, const T* src, T* dst);

float fast_expf(float x);
float fast_tanhf(float x);

}  // namespace kernels

/*--------------------------------- autodiff ops --------------------------------*/

// a[m×k] · b[k×n] -> [m×n]; counts 2·m·k·n FLOPs.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose2d(const Tensor& a);

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);

// x[n×d] + bias[d] broadcast over rows.
Tensor add_bias(const Tensor& x, const Tensor& bias);
// y[i,j] = x[i,j] * (1 + s[j]) + b[j]  (timestep scale/shift)
Tensor rowwise_affine(const Tensor& x, const Tensor& s, const Tensor& b);
// y[i,j] = x[i,j] * w[i]
Tensor scale_rows(const Tensor& x, const Tensor& w);

// Row softmax; -inf entries act as masked keys; a fully masked row is an error.
Tensor softmax_rows(const Tensor& x);
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias, double eps = 1e-5);
Tensor gelu(const Tensor& x);

Tensor gather_rows(const Tensor& x, const std::vector<int>& idx);
Tensor concat_rows(const Tensor& a, const Tensor& b);
Tensor slice_rows(const Tensor& x, int r0, int r1);
Tensor slice_cols(const Tensor& x, int c0, int c1);
Tensor concat_cols(const std::vector<Tensor>& parts);
Tensor embedding_rows(const Tensor& table, const std::vector<int>& ids);
Tensor reshape(const Tensor& x, std::vector<int> shape);

Tensor sum_all(const Tensor& x);
Tensor mean_all(const Tensor& x);

/*--------------------------------- gradient checking ---------------------------*/

// Central finite differences against backward(); returns the max relative
// error over all sampled parameter entries. `f` must rebuild the graph from
// scratch on every call. 64-bit tensors expected.
struct FdCheckConfig {
    double step = 1e-5;
    // entries checked per tensor; <=0 means every entry
    int max_entries_per_tensor = 0;
    int max_total_entries = 0;
    uint64_t sample_seed = 17;
};

double finite_difference_check(const std::function<Tensor()>& f,
                               std::vector<Tensor> params,
                               const FdCheckConfig& cfg = {});

}  // namespace editctrl
