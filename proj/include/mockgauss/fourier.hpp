#pragma once

#include <cstdlib>
#include <map>
#include <vector>

namespace mockgauss {

/// Finite Fourier coefficient map k -> g_k of g(theta) = sum_k g_k e^{i k theta}.
/// With `even` set, assignments are mirrored so that g_k = g_{-k} always holds.
template <class T>
class FourierCoefficients {
public:
    FourierCoefficients() = default;
    explicit FourierCoefficients(bool even) : even_(even) {}

    bool requires_even() const { return even_; }

    void set(int k, const T& value) {
        store(k, value);
        if (even_ && k != 0) store(-k, value);
    }

    T operator[](int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? T(0) : it->second;
    }

    /// Sorted modes with a nonzero coefficient.
    std::vector<int> support() const {
        std::vector<int> ks;
        for (const auto& [k, v] : coeffs_)
            if (v != T(0)) ks.push_back(k);
        return ks;
    }

    int max_mode() const {
        int m = 0;
        for (const auto& [k, v] : coeffs_)
            if (v != T(0)) m = std::max(m, std::abs(k));
        return m;
    }

    bool is_even() const {
        for (const auto& [k, v] : coeffs_)
            if ((*this)[-k] != v) return false;
        return true;
    }

    FourierCoefficients scaled(const T& c) const {
        FourierCoefficients out(even_);
        for (const auto& [k, v] : coeffs_) out.coeffs_[k] = v * c;
        return out;
    }

    template <class U>
    FourierCoefficients<U> cast() const {
        FourierCoefficients<U> out(even_);
        for (const auto& [k, v] : coeffs_) out.set(k, static_cast<U>(v));
        return out;
    }

    const std::map<int, T>& entries() const { return coeffs_; }

private:
    void store(int k, const T& value) {
        if (value == T(0))
            coeffs_.erase(k);
        else
            coeffs_[k] = value;
    }

    bool even_ = false;
    std::map<int, T> coeffs_;
};

}  // namespace mockgauss
