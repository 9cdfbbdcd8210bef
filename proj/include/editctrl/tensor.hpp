#pragma once

#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "editctrl/common.hpp"
#include "editctrl/flops.hpp"
#include "editctrl/rng.hpp"

namespace editctrl {

// Dual-precision storage. f32 is the working precision; f64 exists for
// gradient checking, where the whole graph runs in doubles.
struct TensorData {
    DType dtype = DType::f32;
    std::vector<float> f32;
    std::vector<double> f64;

    size_t size() const { return dtype == DType::f32 ? f32.size() : f64.size(); }
    bool empty() const { return size() == 0; }

    void assign_zero(size_t n) {
        if (dtype == DType::f32)
            f32.assign(n, 0.0f);
        else
            f64.assign(n, 0.0);
    }

    double get(size_t i) const { return dtype == DType::f32 ? (double)f32[i] : f64[i]; }
    void set(size_t i, double v) {
        if (dtype == DType::f32)
            f32[i] = (float)v;
        else
            f64[i] = v;
    }
};

class GradTape;

struct TensorNode {
    std::vector<int> shape;
    size_t numel = 0;
    TensorData value;
    TensorData grad;  // empty until first accumulation
    bool requires_grad = false;
    bool frozen = false;
    std::string name;
    GradTape* tape = nullptr;  // tape that recorded the producing op, if any

    bool wants_grad() const { return requires_grad && !frozen; }

    void ensure_grad() {
        if (grad.size() != numel) {
            grad.dtype = value.dtype;
            grad.assign_zero(numel);
        }
    }
};

// Value-semantic handle to a shared node.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(std::vector<int> shape, DType dt = DType::f32);
    static Tensor full(std::vector<int> shape, double v, DType dt = DType::f32);
    static Tensor from_floats(std::vector<int> shape, std::vector<float> data);
    static Tensor from_doubles(std::vector<int> shape, std::vector<double> data, DType dt = DType::f64);
    static Tensor scalar(double v, DType dt = DType::f32);
    static Tensor randn(RngState& rng, std::vector<int> shape, double stddev, DType dt = DType::f32);

    bool defined() const { return node_ != nullptr; }

    const std::vector<int>& shape() const { return node_->shape; }
    int dim(int i) const { return node_->shape[(size_t)i]; }
    int rank() const { return (int)node_->shape.size(); }
    size_t numel() const { return node_->numel; }
    DType dtype() const { return node_->value.dtype; }

    double at(size_t i) const { return node_->value.get(i); }
    void set(size_t i, double v) { node_->value.set(i, v); }
    double at2(int i, int j) const { return at((size_t)i * (size_t)dim(1) + (size_t)j); }

    double item() const {
        require(numel() == 1, ErrorKind::bad_input, "item() on non-scalar tensor");
        return at(0);
    }

    float* f32() { return node_->value.f32.data(); }
    const float* f32() const { return node_->value.f32.data(); }
    double* f64() { return node_->value.f64.data(); }
    const double* f64() const { return node_->value.f64.data(); }

    TensorData& data() { return node_->value; }
    const TensorData& data() const { return node_->value; }

    bool requires_grad() const { return node_->requires_grad; }
    Tensor& set_requires_grad(bool b) {
        node_->requires_grad = b;
        return *this;
    }
    bool frozen() const { return node_->frozen; }
    Tensor& set_frozen(bool b) {
        node_->frozen = b;
        return *this;
    }
    const std::string& name() const { return node_->name; }
    Tensor& set_name(std::string n) {
        node_->name = std::move(n);
        return *this;
    }

    // Gradient access; allocates a zero buffer on first use so frozen
    // tensors report an all-zero gradient.
    TensorData& grad_data() {
        node_->ensure_grad();
        return node_->grad;
    }
    double grad_at(size_t i) const { return node_->grad.size() ? node_->grad.get(i) : 0.0; }
    bool has_grad() const { return node_->grad.size() != 0; }
    void zero_grad() {
        if (node_->grad.size()) node_->grad.assign_zero(node_->numel);
    }

    // Deep copy of values only (fresh leaf, grad state dropped).
    Tensor clone_detached() const;
    // Same values re-expressed in another precision.
    Tensor to_dtype(DType dt) const;

    std::shared_ptr<TensorNode> node() const { return node_; }

    bool same_node(const Tensor& other) const { return node_ == other.node_; }

private:
    explicit Tensor(std::shared_ptr<TensorNode> n) : node_(std::move(n)) {}
    std::shared_ptr<TensorNode> node_;

    friend Tensor make_tensor(std::vector<int> shape, DType dt);
};

Tensor make_tensor(std::vector<int> shape, DType dt);

size_t shape_numel(const std::vector<int>& shape);

// Ordered record of executed ops; backward() replays it once, in reverse.
class GradTape {
public:
    struct Op {
        const char* kind;
        std::function<void()> backward;
    };

    void record(const char* kind, std::function<void()> fn) {
        ops_.push_back(Op{kind, std::move(fn)});
    }

    size_t size() const { return ops_.size(); }

    // Seeds d(loss)/d(loss) = 1 and walks the tape backwards exactly once.
    void backward(const Tensor& loss);

    void clear() { ops_.clear(); }

private:
    std::vector<Op> ops_;
};

GradTape* active_tape();

class TapeScope {
public:
    explicit TapeScope(GradTape& tape);
    ~TapeScope();
    TapeScope(const TapeScope&) = delete;
    TapeScope& operator=(const TapeScope&) = delete;

private:
    GradTape* prev_;
};

}  // namespace editctrl
