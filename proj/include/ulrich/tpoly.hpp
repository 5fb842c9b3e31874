#ifndef ULRICH_TPOLY_HPP
#define ULRICH_TPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/multipoly.hpp"

namespace ulrich {

// Polynomial in the auxiliary variable t with MultiPoly coefficients,
// stored densely by power of t with a nonzero leading coefficient.
// This is where characteristic polynomials like (t^d - b)^r live.
template <class D>
class TPoly {
public:
    using Coeff = MultiPoly<D>;

    TPoly(const D& dom, int nvars) : dom_(dom), nvars_(nvars) {}

    static TPoly zero(const D& dom, int nvars) { return TPoly(dom, nvars); }

    static TPoly constant(const Coeff& c) {
        TPoly p(c.domain(), c.nvars());
        if (!c.is_zero()) p.coeffs_.push_back(c);
        return p;
    }

    // t^k with an optional MultiPoly coefficient
    static TPoly t_power(const D& dom, int nvars, unsigned k, const Coeff& c) {
        TPoly p(dom, nvars);
        if (c.is_zero()) return p;
        p.coeffs_.assign(k + 1, Coeff::zero(dom, nvars));
        p.coeffs_[k] = c;
        return p;
    }

    static TPoly t(const D& dom, int nvars) { return t_power(dom, nvars, 1, Coeff::one(dom, nvars)); }

    const D& domain() const { return dom_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // coefficient of t^k (zero polynomial beyond the degree)
    Coeff coeff(unsigned k) const {
        if (k < coeffs_.size()) return coeffs_[k];
        return Coeff::zero(dom_, nvars_);
    }

    TPoly make_zero() const { return TPoly(dom_, nvars_); }
    TPoly make_one() const { return constant(Coeff::one(dom_, nvars_)); }

    TPoly operator+(const TPoly& o) const {
        check_compatible(o);
        TPoly r(dom_, nvars_);
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        r.coeffs_.assign(n, Coeff::zero(dom_, nvars_));
        for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = coeff(static_cast<unsigned>(i)) + o.coeff(static_cast<unsigned>(i));
        r.trim();
        return r;
    }

    TPoly operator-(const TPoly& o) const {
        check_compatible(o);
        TPoly r(dom_, nvars_);
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        r.coeffs_.assign(n, Coeff::zero(dom_, nvars_));
        for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = coeff(static_cast<unsigned>(i)) - o.coeff(static_cast<unsigned>(i));
        r.trim();
        return r;
    }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    // exact convolution in t
    TPoly operator*(const TPoly& o) const {
        check_compatible(o);
        TPoly r(dom_, nvars_);
        if (is_zero() || o.is_zero()) return r;
        r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Coeff::zero(dom_, nvars_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        r.trim();
        return r;
    }

    TPoly pow(unsigned e) const {
        TPoly r = make_one();
        TPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // evaluation at t = 0
    Coeff at_zero() const { return coeff(0); }

    bool operator==(const TPoly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != o.coeffs_[i]) return false;
        return true;
    }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    std::string format(const std::vector<std::string>& names) const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Coeff& c = coeffs_[k];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c.format(names);
            std::string ts = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
            if (ts.empty()) {
                out += needs_parens(c) ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += ts;
            } else {
                out += (needs_parens(c) ? "(" + cs + ")" : cs) + "*" + ts;
            }
        }
        return out.empty() ? "0" : out;
    }

    std::string format() const { return format(default_var_names(nvars_)); }

private:
    static bool needs_parens(const Coeff& c) { return c.term_count() > 1; }

    void check_compatible(const TPoly& o) const {
        if (!(dom_ == o.dom_)) throw std::invalid_argument("TPoly: coefficient domain mismatch");
        if (nvars_ != o.nvars_) throw std::invalid_argument("TPoly: variable count mismatch");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    D dom_;
    int nvars_;
    std::vector<Coeff> coeffs_;
};

}  // namespace ulrich

#endif
