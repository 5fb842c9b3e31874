#ifndef ULRICH_MULTIPOLY_HPP
#define ULRICH_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ulrich/domain.hpp"
#include "ulrich/monomial.hpp"

namespace ulrich {

// Sparse multivariate polynomial over a coefficient ring D (QQ, ZZ or
// GFp).  Terms are kept in a map under descending graded-lex order and
// never store a zero coefficient, so equality is structural and
// formatting is deterministic.  Values are immutable in spirit: all
// operations return fresh polynomials.
template <class D>
class MultiPoly {
public:
    using Domain = D;
    using Elem = typename D::Elem;
    using TermMap = std::map<Monomial, Elem, GradedLexDesc>;

    MultiPoly(const D& dom, int nvars) : dom_(dom), nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("MultiPoly: need at least one variable");
    }

    static MultiPoly zero(const D& dom, int nvars) { return MultiPoly(dom, nvars); }

    static MultiPoly constant(const D& dom, int nvars, const Elem& c) {
        MultiPoly p(dom, nvars);
        p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static MultiPoly one(const D& dom, int nvars) { return constant(dom, nvars, dom.one()); }

    static MultiPoly variable(const D& dom, int nvars, int idx, std::uint32_t exp = 1) {
        if (idx < 0 || idx >= nvars) throw std::invalid_argument("MultiPoly: variable index out of range");
        MultiPoly p(dom, nvars);
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m[static_cast<std::size_t>(idx)] = exp;
        p.add_term(m, dom.one());
        return p;
    }

    const D& domain() const { return dom_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly make_zero() const { return MultiPoly(dom_, nvars_); }
    MultiPoly make_one() const { return one(dom_, nvars_); }

    // Accumulate c on monomial m, erasing the term if it cancels.
    void add_term(const Monomial& m, const Elem& c) {
        if (m.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        if (dom_.is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            Elem s = dom_.add(it->second, c);
            if (dom_.is_zero(s))
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int dm = static_cast<int>(total_degree(m));
            if (d < 0)
                d = dm;
            else if (d != dm)
                return false;
        }
        return true;
    }

    bool is_homogeneous_of_degree(int deg) const {
        for (const auto& [m, c] : terms_)
            if (static_cast<int>(total_degree(m)) != deg) return false;
        return true;
    }

    std::optional<int> homogeneous_degree() const {
        if (!is_homogeneous()) return std::nullopt;
        return degree();
    }

    Elem coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? dom_.zero() : it->second;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, dom_.neg(c));
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(dom_, nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, dom_.neg(c));
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(dom_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), dom_.mul(ca, cb));
        return r;
    }

    MultiPoly scaled(const Elem& c) const {
        MultiPoly r(dom_, nvars_);
        if (dom_.is_zero(c)) return r;
        for (const auto& [m, cc] : terms_) r.add_term(m, dom_.mul(cc, c));
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = make_one();
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (!(dom_ == o.dom_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || !dom_.eq(it->second, jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Canonical text form; parse(format(p)) == p under the CLI grammar.
    std::string format(const std::vector<std::string>& names) const {
        if (names.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("format: variable name count mismatch");
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string mono = format_monomial(m, names);
            Elem val = c;
            if (first) {
                first = false;
            } else {
                if constexpr (std::is_same_v<D, GFp>) {
                    out += " + ";
                } else {
                    if (sgn_of(val) < 0) {
                        out += " - ";
                        val = dom_.neg(val);
                    } else {
                        out += " + ";
                    }
                }
            }
            std::string cs = dom_.to_string(val);
            if (mono.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += cs + "*" + mono;
            }
        }
        return out;
    }

    std::string format() const { return format(default_var_names(nvars_)); }

private:
    void check_compatible(const MultiPoly& o) const {
        if (!(dom_ == o.dom_)) throw std::invalid_argument("MultiPoly: coefficient domain mismatch");
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    template <class E>
    static int sgn_of(const E& v) {
        return sgn(v);
    }

    D dom_;
    int nvars_;
    TermMap terms_;
};

// deg(a*b) = deg(a) + deg(b) holds for these coefficient domains (no
// zero divisors), which the property tests rely on.

}  // namespace ulrich

#endif
