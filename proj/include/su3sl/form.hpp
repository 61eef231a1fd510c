#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "su3sl/generator_space.hpp"
#include "su3sl/param.hpp"
#include "su3sl/vector_slot.hpp"

namespace su3sl {

using IndexTuple = std::vector<std::uint32_t>;

/// Exterior form over a generator space. Terms map strictly increasing index
/// tuples to affine coefficients; mixed degree is allowed and zero
/// coefficients are never stored. All operations are pure.
class Form {
public:
    Form() = default;
    explicit Form(SpaceRef space) : space_(std::move(space)) {}

    static Form zero(SpaceRef space) { return Form(std::move(space)); }
    static Form scalar(SpaceRef space, ParamCoeff c);
    static Form generator(SpaceRef space, std::uint32_t idx);
    /// c * g_{i1} ^ ... ^ g_{ik}; indices need not be sorted, repeats give zero.
    static Form monomial(SpaceRef space, IndexTuple idx, ParamCoeff c);

    const SpaceRef& space() const { return space_; }
    const std::map<IndexTuple, ParamCoeff>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool has_parameters() const;
    /// Degrees present (a scalar counts as degree 0).
    std::set<unsigned> degrees() const;
    bool pure_degree(unsigned k) const;

    ParamCoeff coeff(const IndexTuple& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? ParamCoeff() : it->second;
    }

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form& operator*=(const ParamCoeff& c);
    friend Form operator*(Form f, const ParamCoeff& c) { return f *= c; }
    friend Form operator*(const ParamCoeff& c, Form f) { return f *= c; }
    friend Form operator*(Form f, const GQ& c) { return f *= ParamCoeff(c); }
    friend Form operator*(const GQ& c, Form f) { return f *= ParamCoeff(c); }

    friend bool operator==(const Form& a, const Form& b) {
        return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Graded-antisymmetric product (determinant convention, v^w = v(x)w - w(x)v).
    Form wedge(const Form& g) const;

    /// Interior product: contraction in the first slot, antiderivation signs after.
    Form interior(const VectorSlot& v) const;

    /// Complex conjugation: conjugate coefficients, map generators and
    /// parameter symbols by their declared pairings.
    Form conjugate() const;

    /// Full alternating evaluation; terms of other degrees contribute zero.
    ParamCoeff evaluate(const std::vector<VectorSlot>& vs) const;

    /// Euclidean Hodge dual on a standard real space, orientation
    /// x1 ^ ... ^ xm ^ y1 ^ ... ^ ym positive.
    Form hodge_star() const;

    /// Rebuild the form over `target` by sending every generator through
    /// `images` (a complete map index -> degree-<=1 form on target).
    Form map_generators(const SpaceRef& target, const std::map<std::uint32_t, Form>& images) const;

    /// Like map_generators but within the same space: generators absent from
    /// the map stay themselves.
    Form substitute(const std::map<std::uint32_t, Form>& images) const;

    /// Keep only terms whose indices all satisfy the predicate.
    template <class Pred>
    Form filter(Pred keep) const {
        Form r(space_);
        for (auto& [idx, c] : terms_) {
            bool ok = true;
            for (auto i : idx)
                if (!keep(i)) { ok = false; break; }
            if (ok) r.terms_[idx] = c;
        }
        return r;
    }

    /// Evaluate every parameter symbol, producing a constant-coefficient form.
    Form evaluate_parameters(const std::map<std::string, GQ>& values) const;

    std::string str() const;

private:
    void add_term(IndexTuple idx, ParamCoeff c);
    void check_space(const Form& o) const;

    SpaceRef space_;
    std::map<IndexTuple, ParamCoeff> terms_;
};

/// Rank over the Gaussian rationals of a family of constant degree-1 forms.
int rank_one_forms(const std::vector<Form>& forms);

/// Wedge of a list of forms, left to right.
Form wedge_all(const std::vector<Form>& fs);

} // namespace su3sl
