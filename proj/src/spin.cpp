#include "majvote/spin.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace majvote {

SpinVector::SpinVector(std::vector<Spin> spins) : spins_(std::move(spins)) {
    for (std::size_t i = 0; i < spins_.size(); ++i)
        if (spins_[i] != 1 && spins_[i] != -1)
            throw std::invalid_argument("spin " + std::to_string(i) + " is " +
                                        std::to_string(int{spins_[i]}) + ", expected -1 or +1");
}

SpinVector::SpinVector(std::initializer_list<int> spins) {
    spins_.reserve(spins.size());
    for (int s : spins) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("spin value " + std::to_string(s) + ", expected -1 or +1");
        spins_.push_back(static_cast<Spin>(s));
    }
}

long spin_sum(std::span<const Spin> spins) noexcept {
    long s = 0;
    for (Spin v : spins) s += v;
    return s;
}

long SpinVector::sum() const noexcept { return spin_sum(spins_); }

int SpinVector::plus_count() const noexcept { return static_cast<int>((size() + sum()) / 2); }

SpinVector SpinVector::operator-() const {
    SpinVector out;
    out.spins_.resize(spins_.size());
    for (std::size_t i = 0; i < spins_.size(); ++i) out.spins_[i] = static_cast<Spin>(-spins_[i]);
    return out;
}

Magnetization magnetization(const SpinVector& x) {
    if (x.size() == 0) throw std::invalid_argument("magnetization of an empty configuration");
    const double n = x.size();
    const double mean = static_cast<double>(x.sum()) / n;
    return {mean, std::sqrt(n) * mean};
}

}  // namespace majvote
