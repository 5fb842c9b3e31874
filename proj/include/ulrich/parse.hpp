#ifndef ULRICH_PARSE_HPP
#define ULRICH_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/multipoly.hpp"

namespace ulrich {

// Syntax or domain error in polynomial text, carrying the byte offset
// of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

// One additive term as scanned from the input, before coefficients are
// interpreted in a concrete domain.
struct RawTerm {
    std::string num;        // integer part of the coefficient ("" means 1)
    std::string den;        // denominator digits ("" if absent)
    std::size_t slash_pos;  // position of '/', meaningful when den nonempty
    bool negated;           // separator sign in front of this term
    Monomial mono;
};

// Grammar (whitespace insignificant):
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int | int '/' uint
//   var    := [a-zA-Z][a-zA-Z0-9]*
std::vector<RawTerm> parse_raw_poly(const std::string& text, const std::vector<std::string>& var_names);

}  // namespace detail

template <class D>
MultiPoly<D> parse_poly(const std::string& text, const D& dom, const std::vector<std::string>& var_names) {
    auto raw = detail::parse_raw_poly(text, var_names);
    MultiPoly<D> p(dom, static_cast<int>(var_names.size()));
    for (const auto& t : raw) {
        typename D::Elem c = dom.one();
        if constexpr (std::is_same_v<D, QQ>) {
            if (!t.num.empty()) {
                mpq_class q;
                if (t.den.empty()) {
                    q = mpq_class(mpz_class(t.num));
                } else {
                    mpz_class den(t.den);
                    if (den == 0) throw ParseError("zero denominator", t.slash_pos);
                    q = mpq_class(mpz_class(t.num), den);
                    q.canonicalize();
                }
                c = q;
            }
        } else {
            if (!t.den.empty()) throw ParseError("rational coefficient only allowed over Q", t.slash_pos);
            if constexpr (std::is_same_v<D, ZZ>) {
                if (!t.num.empty()) c = mpz_class(t.num);
            } else {  // GFp
                if (!t.num.empty()) {
                    mpz_class z(t.num);
                    mpz_class r = z % mpz_class(static_cast<unsigned long>(dom.modulus()));
                    if (r < 0) r += mpz_class(static_cast<unsigned long>(dom.modulus()));
                    c = static_cast<typename D::Elem>(r.get_ui());
                }
            }
        }
        if (t.negated) c = dom.neg(c);
        p.add_term(t.mono, c);
    }
    return p;
}

template <class D>
MultiPoly<D> parse_poly(const std::string& text, const D& dom, int nvars) {
    return parse_poly(text, dom, default_var_names(nvars));
}

}  // namespace ulrich

#endif
