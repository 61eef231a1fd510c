#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "su3sl/errors.hpp"
#include "su3sl/rational.hpp"

namespace su3sl {

/// Registry of parameter symbols with their declared complex conjugates.
/// A symbol whose conjugate is itself is real-valued.
class ParamTable {
public:
    /// Declare a complex symbol pair (name, conj name). Pass name == conj for a real symbol.
    void declare(const std::string& name, const std::string& conj_name) {
        conj_[name] = conj_name;
        conj_[conj_name] = name;
    }
    void declare_real(const std::string& name) { conj_[name] = name; }

    bool known(const std::string& name) const { return conj_.count(name) != 0; }

    const std::string& conj(const std::string& name) const {
        auto it = conj_.find(name);
        if (it == conj_.end()) throw Error("unknown parameter symbol '" + name + "'");
        return it->second;
    }

    bool is_real_symbol(const std::string& name) const { return conj(name) == name; }

    const std::map<std::string, std::string>& all() const { return conj_; }

private:
    std::map<std::string, std::string> conj_;
};

/// A scalar that is affine-linear in parameter symbols over the Gaussian
/// rationals: constant + sum coeff_s * s. The linear map never stores zeros.
class ParamCoeff {
public:
    ParamCoeff() = default;
    ParamCoeff(GQ constant) : constant_(std::move(constant)) {}
    ParamCoeff(long v) : constant_(GQ(v)) {}

    static ParamCoeff symbol(const std::string& name, GQ coeff = GQ(1)) {
        ParamCoeff p;
        if (!coeff.is_zero()) p.linear_[name] = std::move(coeff);
        return p;
    }

    const GQ& constant() const { return constant_; }
    const std::map<std::string, GQ>& linear() const { return linear_; }

    bool is_zero() const { return constant_.is_zero() && linear_.empty(); }
    bool is_constant() const { return linear_.empty(); }

    ParamCoeff operator-() const {
        ParamCoeff r;
        r.constant_ = -constant_;
        for (auto& [k, v] : linear_) r.linear_[k] = -v;
        return r;
    }

    ParamCoeff& operator+=(const ParamCoeff& o) {
        constant_ += o.constant_;
        for (auto& [k, v] : o.linear_) {
            auto it = linear_.find(k);
            if (it == linear_.end()) {
                linear_[k] = v;
            } else {
                it->second += v;
                if (it->second.is_zero()) linear_.erase(it);
            }
        }
        return *this;
    }
    ParamCoeff& operator-=(const ParamCoeff& o) { return *this += -o; }

    friend ParamCoeff operator+(ParamCoeff a, const ParamCoeff& b) { return a += b; }
    friend ParamCoeff operator-(ParamCoeff a, const ParamCoeff& b) { return a -= b; }

    /// Product in the affine ring; throws if both factors carry parameters.
    friend ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b) {
        if (!a.linear_.empty() && !b.linear_.empty())
            throw AffineOverflow("product of two parameter-carrying coefficients");
        const ParamCoeff& lin = a.linear_.empty() ? b : a;
        const GQ& c = a.linear_.empty() ? a.constant_ : b.constant_;
        ParamCoeff r;
        r.constant_ = lin.constant_ * c;
        if (!c.is_zero()) {
            for (auto& [k, v] : lin.linear_) r.linear_[k] = v * c;
        }
        return r;
    }

    ParamCoeff& operator*=(const GQ& c) {
        constant_ *= c;
        if (c.is_zero()) {
            linear_.clear();
        } else {
            for (auto& [k, v] : linear_) v *= c;
        }
        return *this;
    }
    friend ParamCoeff operator*(ParamCoeff a, const GQ& c) { return a *= c; }
    friend ParamCoeff operator*(const GQ& c, ParamCoeff a) { return a *= c; }

    ParamCoeff conj(const ParamTable& table) const {
        ParamCoeff r;
        r.constant_ = constant_.conj();
        for (auto& [k, v] : linear_) {
            const std::string& kc = table.conj(k);
            auto it = r.linear_.find(kc);
            if (it == r.linear_.end()) r.linear_[kc] = v.conj();
            else it->second += v.conj();
        }
        return r;
    }

    /// Evaluate at a parameter assignment; symbols absent from `values` count as zero.
    GQ evaluate(const std::map<std::string, GQ>& values) const {
        GQ r = constant_;
        for (auto& [k, v] : linear_) {
            auto it = values.find(k);
            if (it != values.end()) r += v * it->second;
        }
        return r;
    }

    friend bool operator==(const ParamCoeff& a, const ParamCoeff& b) {
        return a.constant_ == b.constant_ && a.linear_ == b.linear_;
    }
    friend bool operator!=(const ParamCoeff& a, const ParamCoeff& b) { return !(a == b); }

    std::string str() const {
        std::string s = constant_.str();
        for (auto& [k, v] : linear_) s += " + (" + v.str() + ")*" + k;
        return s;
    }

private:
    GQ constant_;
    std::map<std::string, GQ> linear_;
};

} // namespace su3sl
