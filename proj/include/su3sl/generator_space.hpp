#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "su3sl/errors.hpp"
#include "su3sl/param.hpp"

namespace su3sl {

struct Generator {
    std::string name;
    std::uint32_t conj = 0;   // index of the conjugate generator; self for real ones
    bool independence = false;
};

/// An ordered list of 1-form generators with an involutive conjugation
/// pairing and an independence subset. Immutable once built; forms keep a
/// shared_ptr to it.
class GeneratorSpace {
public:
    static std::shared_ptr<const GeneratorSpace> make(std::vector<Generator> gens,
                                                      ParamTable params = {},
                                                      bool standard_real = false) {
        auto sp = std::shared_ptr<GeneratorSpace>(new GeneratorSpace);
        sp->gens_ = std::move(gens);
        sp->params_ = std::move(params);
        sp->standard_real_ = standard_real;
        sp->validate();
        return sp;
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::uint32_t i) const { return gens_.at(i); }
    std::uint32_t conj_index(std::uint32_t i) const { return gens_.at(i).conj; }
    bool is_real_generator(std::uint32_t i) const { return gens_.at(i).conj == i; }
    const std::vector<Generator>& generators() const { return gens_; }

    std::uint32_t index_of(const std::string& name) const {
        for (std::uint32_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        throw Error("no generator named '" + name + "'");
    }

    const ParamTable& params() const { return params_; }

    /// True for the standard oriented orthonormal real spaces that hodge_star accepts.
    bool standard_real() const { return standard_real_; }

    bool structurally_equal(const GeneratorSpace& o) const {
        if (gens_.size() != o.gens_.size() || standard_real_ != o.standard_real_) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name != o.gens_[i].name || gens_[i].conj != o.gens_[i].conj ||
                gens_[i].independence != o.gens_[i].independence)
                return false;
        }
        return true;
    }

private:
    GeneratorSpace() = default;

    void validate() const {
        for (std::uint32_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].conj >= gens_.size()) throw Error("conjugation index out of range");
            if (gens_[gens_[i].conj].conj != i) throw Error("conjugation pairing is not involutive");
            if (gens_[i].independence != gens_[gens_[i].conj].independence)
                throw Error("independence set is not closed under conjugation");
        }
    }

    std::vector<Generator> gens_;
    ParamTable params_;
    bool standard_real_ = false;
};

using SpaceRef = std::shared_ptr<const GeneratorSpace>;

inline bool same_space(const SpaceRef& a, const SpaceRef& b) {
    return a == b || (a && b && a->structurally_equal(*b));
}

/// R^dim with generators x1..xm, y1..ym in that order; dz_j = x_j + i*y_j and
/// the orientation is the listed order x1 ^ .. ^ xm ^ y1 ^ .. ^ ym.
inline SpaceRef standard_real_space(unsigned dim) {
    if (dim % 2 != 0) throw UnsupportedSpace("odd dimension");
    unsigned m = dim / 2;
    std::vector<Generator> g(dim);
    for (unsigned j = 0; j < m; ++j) {
        g[j] = {"x" + std::to_string(j + 1), j, false};
        g[m + j] = {"y" + std::to_string(j + 1), m + j, false};
    }
    return GeneratorSpace::make(std::move(g), {}, true);
}

/// Complexified coframe of C^m: z1..zm, z1bar..zmbar with conj pairing.
inline SpaceRef complex_model_space(unsigned m) {
    std::vector<Generator> g(2 * m);
    for (unsigned j = 0; j < m; ++j) {
        g[j] = {"z" + std::to_string(j + 1), m + j, false};
        g[m + j] = {"z" + std::to_string(j + 1) + "bar", j, false};
    }
    return GeneratorSpace::make(std::move(g));
}

} // namespace su3sl
