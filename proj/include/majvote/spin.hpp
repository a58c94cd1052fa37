#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace majvote {

using Spin = std::int8_t;  // -1 or +1

/// A configuration in {-1, +1}^n.
class SpinVector {
public:
    SpinVector() = default;
    /// Throws std::invalid_argument on any entry other than -1 or +1.
    explicit SpinVector(std::vector<Spin> spins);
    SpinVector(std::initializer_list<int> spins);

    /// n copies of +1.
    static SpinVector all_up(int n) { return SpinVector(std::vector<Spin>(static_cast<std::size_t>(n), 1)); }

    int size() const noexcept { return static_cast<int>(spins_.size()); }
    std::span<const Spin> values() const noexcept { return spins_; }
    Spin operator[](int i) const noexcept { return spins_[static_cast<std::size_t>(i)]; }

    /// 1ᵀx
    long sum() const noexcept;
    /// Number of +1 entries.
    int plus_count() const noexcept;

    SpinVector operator-() const;
    bool operator==(const SpinVector&) const = default;

private:
    std::vector<Spin> spins_;
};

long spin_sum(std::span<const Spin> spins) noexcept;

struct Magnetization {
    double mean;    // X̄ = (1/n) Σ x_i
    double scaled;  // √n · X̄
};

Magnetization magnetization(const SpinVector& x);

}  // namespace majvote
