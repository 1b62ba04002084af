#include "sphcox/parser.hpp"

#include <cctype>

#include "sphcox/errors.hpp"

namespace sphcox {

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& text, const VarTablePtr& table)
        : text_(text), table_(table) {}

    LaurentPoly run() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (!p.table()) p = LaurentPoly::zero(table_);
        return p;
    }

  private:
    const std::string& text_;
    const VarTablePtr& table_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("polynomial parse error at position " + std::to_string(pos_) +
                         ": " + msg + " in \"" + text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Int integer(bool allow_sign) {
        skip_ws();
        bool neg = false;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        Int v(text_.substr(start, pos_ - start));
        return neg ? Int(-v) : v;
    }

    LaurentPoly expr() {
        bool lead_neg = eat('-');
        LaurentPoly p = term();
        if (lead_neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p = p + term();
            } else if (c == '-') {
                ++pos_;
                p = p - term();
            } else {
                return p;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    LaurentPoly factor() {
        LaurentPoly p = atom();
        if (eat('^')) {
            Int e = integer(true);
            if (!e.fits_slong_p()) fail("exponent out of range");
            p = p.pow(e.get_si());
        }
        return p;
    }

    LaurentPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
            return LaurentPoly::constant(table_, Rat(integer(true)));
        if (auto kind = kind_from_letter(c)) {
            ++pos_;
            if (!eat('[')) fail("expected '[' after variable letter");
            Var v;
            v.kind = *kind;
            Int i = integer(false);
            if (!i.fits_sint_p() || i < 1) fail("bad variable index");
            v.i = static_cast<int>(i.get_si());
            if (eat(',')) {
                Int j = integer(false);
                if (!j.fits_sint_p() || j < 1) fail("bad variable index");
                v.j = static_cast<int>(j.get_si());
                v.two_index = true;
            }
            if (!eat(']')) fail("expected ']' after variable indices");
            auto idx = table_->find(v);
            if (!idx) fail("unknown variable " + v.name());
            Vec exps(table_->size(), 0);
            exps[*idx] = 1;
            return LaurentPoly::monomial(table_, exps, 1);
        }
        fail("expected integer, variable, or '('");
    }
};

} // namespace

LaurentPoly parse_poly(const std::string& text, const VarTablePtr& table) {
    if (!table) throw InputError("parse: missing variable table");
    return PolyParser(text, table).run();
}

} // namespace sphcox
