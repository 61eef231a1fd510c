#pragma once

#include <cstdint>
#include <map>

#include "su3sl/generator_space.hpp"
#include "su3sl/rational.hpp"

namespace su3sl {

/// A tangent vector given by its pairings with the generators: component[i]
/// is the value of generator i on the vector. Finitely supported, exact.
class VectorSlot {
public:
    VectorSlot() = default;

    VectorSlot& set(std::uint32_t gen, GQ value) {
        if (value.is_zero()) comps_.erase(gen);
        else comps_[gen] = std::move(value);
        return *this;
    }

    GQ pair(std::uint32_t gen) const {
        auto it = comps_.find(gen);
        return it == comps_.end() ? GQ(0) : it->second;
    }

    const std::map<std::uint32_t, GQ>& components() const { return comps_; }

    /// Component-wise complex conjugate: the pairing with g becomes the
    /// conjugated pairing with conj(g).
    VectorSlot conj(const GeneratorSpace& sp) const {
        VectorSlot r;
        for (auto& [i, v] : comps_) r.set(sp.conj_index(i), v.conj());
        return r;
    }

    VectorSlot& operator+=(const VectorSlot& o) {
        for (auto& [i, v] : o.comps_) set(i, pair(i) + v);
        return *this;
    }
    friend VectorSlot operator+(VectorSlot a, const VectorSlot& b) { return a += b; }

    friend VectorSlot operator*(const GQ& c, const VectorSlot& v) {
        VectorSlot r;
        for (auto& [i, x] : v.components()) r.set(i, c * x);
        return r;
    }

    friend bool operator==(const VectorSlot& a, const VectorSlot& b) { return a.comps_ == b.comps_; }

private:
    std::map<std::uint32_t, GQ> comps_;
};

/// d/dx_j on a standard real space (indices 0..m-1 are x, m..2m-1 are y).
inline VectorSlot real_axis_vector(const SpaceRef& sp, unsigned j) {
    (void)sp;
    return VectorSlot().set(j, GQ(1));
}

/// d/dx_j and d/dy_j expressed against the complex model space
/// (z_j = x_j + i y_j, so z_j(d/dx_j) = 1, z_j(d/dy_j) = i).
inline VectorSlot dx_on_complex(const SpaceRef& sp, unsigned m, unsigned j) {
    (void)sp;
    VectorSlot v;
    v.set(j, GQ(1));
    v.set(m + j, GQ(1));
    return v;
}

inline VectorSlot dy_on_complex(const SpaceRef& sp, unsigned m, unsigned j) {
    (void)sp;
    VectorSlot v;
    v.set(j, GQ::i());
    v.set(m + j, -GQ::i());
    return v;
}

} // namespace su3sl
