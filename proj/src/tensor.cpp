#include "editctrl/tensor.hpp"

namespace editctrl {

namespace {
thread_local FlopCounter* t_flop_counter = nullptr;
thread_local GradTape* t_tape = nullptr;
}  // namespace

FlopCounter* active_flop_counter() { return t_flop_counter; }

FlopScope::FlopScope(FlopCounter& counter) : prev_(t_flop_counter) { t_flop_counter = &counter; }
FlopScope::~FlopScope() { t_flop_counter = prev_; }

GradTape* active_tape() { return t_tape; }

TapeScope::TapeScope(GradTape& tape) : prev_(t_tape) { t_tape = &tape; }
TapeScope::~TapeScope() { t_tape = prev_; }

size_t shape_numel(const std::vector<int>& shape) {
    size_t n = 1;
    for (int e : shape) {
        require(e >= 0, ErrorKind::bad_input, "negative extent");
        n *= (size_t)e;
    }
    return n;
}

Tensor make_tensor(std::vector<int> shape, DType dt) {
    auto node = std::make_shared<TensorNode>();
    node->numel = shape_numel(shape);
    node->shape = std::move(shape);
    node->value.dtype = dt;
    node->value.assign_zero(node->numel);
    return Tensor(std::move(node));
}

Tensor Tensor::zeros(std::vector<int> shape, DType dt) { return make_tensor(std::move(shape), dt); }

Tensor Tensor::full(std::vector<int> shape, double v, DType dt) {
    Tensor t = make_tensor(std::move(shape), dt);
    for (size_t i = 0; i < t.numel(); ++i) t.set(i, v);
    return t;
}

Tensor Tensor::from_floats(std::vector<int> shape, std::vector<float> data) {
    size_t n = shape_numel(shape);
    require(n == data.size(), ErrorKind::bad_input, "from_floats: size mismatch");
    Tensor t = make_tensor(std::move(shape), DType::f32);
    t.node()->value.f32 = std::move(data);
    return t;
}

Tensor Tensor::from_doubles(std::vector<int> shape, std::vector<double> data, DType dt) {
    size_t n = shape_numel(shape);
    require(n == data.size(), ErrorKind::bad_input, "from_doubles: size mismatch");
    Tensor t = make_tensor(std::move(shape), dt);
    for (size_t i = 0; i < n; ++i) t.set(i, data[i]);
    return t;
}

Tensor Tensor::scalar(double v, DType dt) { return full({1}, v, dt); }

Tensor Tensor::randn(RngState& rng, std::vector<int> shape, double stddev, DType dt) {
    Tensor t = make_tensor(std::move(shape), dt);
    for (size_t i = 0; i < t.numel(); ++i) t.set(i, rng.normal() * stddev);
    return t;
}

Tensor Tensor::clone_detached() const {
    Tensor t = make_tensor(node_->shape, dtype());
    t.node()->value = node_->value;
    t.node()->name = node_->name;
    return t;
}

Tensor Tensor::to_dtype(DType dt) const {
    if (dt == dtype()) return clone_detached();
    Tensor t = make_tensor(node_->shape, dt);
    for (size_t i = 0; i < numel(); ++i) t.set(i, at(i));
    t.node()->name = node_->name;
    return t;
}

void GradTape::backward(const Tensor& loss) {
    require(loss.defined() && loss.numel() == 1, ErrorKind::bad_input,
            "backward: loss must be a scalar");
    require(loss.node()->tape == this, ErrorKind::bad_input,
            "backward: loss was not recorded on this tape");
    loss.node()->ensure_grad();
    loss.node()->grad.set(0, loss.node()->grad.get(0) + 1.0);
    for (size_t i = ops_.size(); i-- > 0;) ops_[i].backward();
}

}  // namespace editctrl
