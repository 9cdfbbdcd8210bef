#pragma once

#include <array>
#include <cstdint>

namespace editctrl {

// Cost convention (also stated in bench report headers):
// one multiply-add = 2 FLOPs; softmax, normalization and GELU are
// charged 5 FLOPs per element; plain elementwise ops 1 FLOP per element.
enum class OpCost : int {
    matmul = 0,
    softmax,
    norm,
    gelu,
    elementwise,
    kind_count,
};

inline const char* op_cost_name(OpCost k) {
    switch (k) {
        case OpCost::matmul: return "matmul";
        case OpCost::softmax: return "softmax";
        case OpCost::norm: return "norm";
        case OpCost::gelu: return "gelu";
        case OpCost::elementwise: return "elementwise";
        default: return "?";
    }
}

constexpr int kOpCostKinds = (int)OpCost::kind_count;

// Per-kind accumulated FLOPs. Single-writer; attach to the current thread
// with FlopScope to collect counts from every op executed inside the scope.
class FlopCounter {
public:
    void add(OpCost kind, uint64_t flops) { counts_[(int)kind] += flops; }

    uint64_t by_kind(OpCost kind) const { return counts_[(int)kind]; }

    uint64_t total() const {
        uint64_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    void reset() { counts_.fill(0); }

    FlopCounter& operator+=(const FlopCounter& other) {
        for (int i = 0; i < kOpCostKinds; ++i) counts_[i] += other.counts_[i];
        return *this;
    }

private:
    std::array<uint64_t, kOpCostKinds> counts_{};
};

FlopCounter* active_flop_counter();

class FlopScope {
public:
    explicit FlopScope(FlopCounter& counter);
    ~FlopScope();
    FlopScope(const FlopScope&) = delete;
    FlopScope& operator=(const FlopScope&) = delete;

private:
    FlopCounter* prev_;
};

inline void count_flops(OpCost kind, uint64_t flops) {
    if (FlopCounter* c = active_flop_counter()) c->add(kind, flops);
}

}  // namespace editctrl
