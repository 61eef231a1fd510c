#include "su3sl/form.hpp"

#include <algorithm>

#include "su3sl/errors.hpp"
#include "su3sl/linalg.hpp"

namespace su3sl {
namespace {

// Sorts idx in place, returns the permutation sign, or 0 on a repeated index.
int sort_sign(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > idx[j]) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && idx[j - 1] == idx[j]) return 0;
    }
    return sign;
}

// Sign of merging two strictly increasing tuples; 0 if they share an index.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long transpositions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a entries
            transpositions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (transpositions % 2 == 0) ? 1 : -1;
}

} // namespace

Form Form::scalar(SpaceRef space, ParamCoeff c) {
    Form f(std::move(space));
    f.add_term({}, std::move(c));
    return f;
}

Form Form::generator(SpaceRef space, std::uint32_t idx) {
    Form f(std::move(space));
    f.add_term({idx}, ParamCoeff(GQ(1)));
    return f;
}

Form Form::monomial(SpaceRef space, IndexTuple idx, ParamCoeff c) {
    Form f(std::move(space));
    int s = sort_sign(idx);
    if (s == 0) return f;
    if (s < 0) c = -c;
    f.add_term(std::move(idx), std::move(c));
    return f;
}

void Form::add_term(IndexTuple idx, ParamCoeff c) {
    if (c.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Form::check_space(const Form& o) const {
    if (!same_space(space_, o.space_)) throw SpaceMismatch();
}

bool Form::has_parameters() const {
    for (auto& [idx, c] : terms_)
        if (!c.is_constant()) return true;
    return false;
}

std::set<unsigned> Form::degrees() const {
    std::set<unsigned> d;
    for (auto& [idx, c] : terms_) d.insert(static_cast<unsigned>(idx.size()));
    return d;
}

bool Form::pure_degree(unsigned k) const {
    for (auto& [idx, c] : terms_)
        if (idx.size() != k) return false;
    return true;
}

Form Form::operator-() const {
    Form r(space_);
    for (auto& [idx, c] : terms_) r.terms_[idx] = -c;
    return r;
}

Form& Form::operator+=(const Form& o) {
    check_space(o);
    for (auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    check_space(o);
    for (auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
}

Form& Form::operator*=(const ParamCoeff& c) {
    std::map<IndexTuple, ParamCoeff> out;
    for (auto& [idx, v] : terms_) {
        ParamCoeff p = v * c;
        if (!p.is_zero()) out.emplace(idx, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

Form Form::wedge(const Form& g) const {
    check_space(g);
    Form r(space_);
    IndexTuple merged;
    for (auto& [ia, ca] : terms_) {
        for (auto& [ib, cb] : g.terms_) {
            int s = merge_sign(ia, ib, merged);
            if (s == 0) continue;
            ParamCoeff c = ca * cb; // throws AffineOverflow when both carry parameters
            if (s < 0) c = -c;
            r.add_term(merged, std::move(c));
        }
    }
    return r;
}

Form Form::interior(const VectorSlot& v) const {
    Form r(space_);
    for (auto& [idx, c] : terms_) {
        int sign = 1;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            GQ val = v.pair(idx[t]);
            if (!val.is_zero()) {
                IndexTuple rest;
                rest.reserve(idx.size() - 1);
                for (std::size_t u = 0; u < idx.size(); ++u)
                    if (u != t) rest.push_back(idx[u]);
                r.add_term(std::move(rest), c * (sign < 0 ? -val : val));
            }
            sign = -sign;
        }
    }
    return r;
}

Form Form::conjugate() const {
    const auto& table = space_->params();
    Form r(space_);
    for (auto& [idx, c] : terms_) {
        IndexTuple mapped(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) mapped[t] = space_->conj_index(idx[t]);
        int s = sort_sign(mapped);
        if (s == 0) continue; // cannot happen: conjugation is a bijection
        ParamCoeff cc = c.conj(table);
        if (s < 0) cc = -cc;
        r.add_term(std::move(mapped), std::move(cc));
    }
    return r;
}

ParamCoeff Form::evaluate(const std::vector<VectorSlot>& vs) const {
    const std::size_t p = vs.size();
    ParamCoeff total;
    for (auto& [idx, c] : terms_) {
        if (idx.size() != p) continue;
        // det of the pairing matrix M[t][u] = g_{idx[t]}(vs[u]), expanded by
        // permutations; p <= 6 throughout this project.
        std::vector<std::vector<GQ>> m(p, std::vector<GQ>(p));
        for (std::size_t t = 0; t < p; ++t)
            for (std::size_t u = 0; u < p; ++u) m[t][u] = vs[u].pair(idx[t]);
        total += c * det_gq(m);
    }
    return total;
}

Form Form::hodge_star() const {
    if (!space_->standard_real())
        throw UnsupportedSpace("hodge_star needs the standard oriented real space");
    if (has_parameters()) throw ParametricInput();
    const std::uint32_t n = static_cast<std::uint32_t>(space_->size());
    Form r(space_);
    for (auto& [idx, c] : terms_) {
        IndexTuple comp;
        comp.reserve(n - idx.size());
        std::size_t t = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (t < idx.size() && idx[t] == i) {
                ++t;
            } else {
                comp.push_back(i);
            }
        }
        // sign of the permutation (idx, comp) against the oriented order
        IndexTuple merged;
        int s = merge_sign(idx, comp, merged);
        ParamCoeff cc = c;
        if (s < 0) cc = -cc;
        r.add_term(std::move(comp), std::move(cc));
    }
    return r;
}

Form Form::map_generators(const SpaceRef& target, const std::map<std::uint32_t, Form>& images) const {
    Form r(target);
    for (auto& [idx, c] : terms_) {
        Form acc = Form::scalar(target, c);
        for (auto i : idx) {
            auto it = images.find(i);
            if (it == images.end())
                throw Error("map_generators: no image for generator '" + space_->gen(i).name + "'");
            acc = acc.wedge(it->second);
            if (acc.is_zero()) break;
        }
        r += acc;
    }
    return r;
}

Form Form::substitute(const std::map<std::uint32_t, Form>& images) const {
    Form r(space_);
    for (auto& [idx, c] : terms_) {
        Form acc = Form::scalar(space_, c);
        for (auto i : idx) {
            auto it = images.find(i);
            acc = acc.wedge(it == images.end() ? Form::generator(space_, i) : it->second);
            if (acc.is_zero()) break;
        }
        r += acc;
    }
    return r;
}

Form Form::evaluate_parameters(const std::map<std::string, GQ>& values) const {
    Form r(space_);
    for (auto& [idx, c] : terms_) r.add_term(idx, ParamCoeff(c.evaluate(values)));
    return r;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [idx, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (auto i : idx) s += " " + space_->gen(i).name;
    }
    return s;
}

int rank_one_forms(const std::vector<Form>& forms) {
    std::size_t n = 0;
    std::vector<std::vector<GQ>> rows;
    rows.reserve(forms.size());
    for (auto& f : forms) {
        if (!f.pure_degree(1)) throw NotDegreeOne();
        if (f.has_parameters()) throw ParametricInput();
        n = f.space()->size();
        std::vector<GQ> row(n, GQ(0));
        for (auto& [idx, c] : f.terms()) row[idx[0]] = c.constant();
        rows.push_back(std::move(row));
    }
    return rank_gq(rows);
}

Form wedge_all(const std::vector<Form>& fs) {
    if (fs.empty()) throw Error("wedge_all: empty list");
    Form r = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) r = r.wedge(fs[i]);
    return r;
}

} // namespace su3sl
