#include "ulrich/parse.hpp"

#include <cctype>

namespace ulrich::detail {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    std::vector<RawTerm> run() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", 0);
        terms.push_back(term(false));
        skip_ws();
        while (!eof()) {
            char c = peek();
            bool neg;
            if (c == '+')
                neg = false;
            else if (c == '-')
                neg = true;
            else
                throw ParseError(std::string("expected '+', '-' or end of input, got '") + c + "'", pos_);
            ++pos_;
            skip_ws();
            terms.push_back(term(neg));
            skip_ws();
        }
        return terms;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    RawTerm term(bool negated) {
        RawTerm t;
        t.negated = negated;
        t.slash_pos = 0;
        t.mono.assign(vars_.size(), 0);
        if (eof()) throw ParseError("expected term", pos_);
        char c = peek();
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            coeff(t);
            saw_coeff = true;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            factor(t);
        } else {
            throw ParseError(std::string("expected coefficient or variable, got '") + c + "'", pos_);
        }
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            skip_ws();
            factor(t);
            skip_ws();
        }
        // a bare coefficient is a constant term; '3 x' without '*' is not allowed
        if (!eof() && std::isalnum(static_cast<unsigned char>(peek())) && saw_coeff) {
            throw ParseError("expected '*' before variable", pos_);
        }
        return t;
    }

    void coeff(RawTerm& t) {
        std::size_t start = pos_;
        std::string num;
        if (peek() == '-' || peek() == '+') {
            if (peek() == '-') num += '-';
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected digit after sign", pos_);
        }
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected digit", pos_);
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) num += s_[pos_++];
        t.num = num;
        std::size_t save = pos_;
        skip_ws();
        if (!eof() && peek() == '/') {
            t.slash_pos = pos_;
            ++pos_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected digits in denominator", pos_);
            std::string den;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) den += s_[pos_++];
            t.den = den;
        } else {
            pos_ = save;
        }
        (void)start;
    }

    void factor(RawTerm& t) {
        if (eof() || !std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError("expected variable", pos_);
        std::size_t start = pos_;
        std::string name;
        name += s_[pos_++];
        while (!eof() && std::isalnum(static_cast<unsigned char>(peek()))) name += s_[pos_++];
        int idx = -1;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == name) {
                idx = static_cast<int>(i);
                break;
            }
        }
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        unsigned long long exp = 1;
        std::size_t save = pos_;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected non-negative integer exponent after '^'", pos_);
            exp = 0;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                exp = exp * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
                if (exp > 1000000) throw ParseError("exponent too large", pos_);
                ++pos_;
            }
        } else {
            pos_ = save;
        }
        t.mono[static_cast<std::size_t>(idx)] += static_cast<std::uint32_t>(exp);
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawTerm> parse_raw_poly(const std::string& text, const std::vector<std::string>& var_names) {
    return Scanner(text, var_names).run();
}

}  // namespace ulrich::detail
