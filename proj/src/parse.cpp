#include "parse.hpp"

#include <cctype>
#include <stdexcept>

namespace lenard {

std::map<std::string, int> default_comp_names(int comps) {
    std::map<std::string, int> names;
    if (comps == 2) {
        names["u"] = 0;
        names["v"] = 1;
    }
    for (int m = 0; m < comps; ++m) names["u" + std::to_string(m)] = m;
    return names;
}

namespace {

class Parser {
public:
    Parser(int comps, const std::string& text, const std::map<std::string, int>& comp_names)
        : comps_(comps), text_(text), names_(comp_names) {}

    DiffPoly parse() {
        DiffPoly out = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos_) + ": " + message);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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

    DiffPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        DiffPoly out = term();
        if (neg) out = -out;
        while (true) {
            if (eat('+'))
                out += term();
            else if (eat('-'))
                out -= term();
            else
                break;
        }
        return out;
    }

    DiffPoly term() {
        DiffPoly out = factor();
        while (eat('*')) out = out * factor();
        return out;
    }

    DiffPoly factor() {
        DiffPoly base = primary();
        if (eat('^')) {
            int e = uint_lit();
            base = base.pow(e);
        }
        return base;
    }

    int uint_lit() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) fail("integer literal too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    DiffPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            DiffPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_lit();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character");
    }

    DiffPoly rational_lit() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (dstart == pos_) fail("expected denominator");
            return DiffPoly::constant(comps_, rat_parse(num + "/" + text_.substr(dstart, pos_ - dstart)));
        }
        pos_ = save;
        return DiffPoly::constant(comps_, rat_parse(num));
    }

    DiffPoly identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);

        if (name == "x") return DiffPoly::x(comps_);

        // u[m,j] with two indices addresses a component directly.
        if (name == "u" && peek() == '[') {
            std::size_t save = pos_;
            eat('[');
            int first = uint_lit();
            if (eat(',')) {
                int order = uint_lit();
                if (!eat(']')) fail("expected ']'");
                return DiffPoly::jet(comps_, first, order);
            }
            pos_ = save;  // fall through: one index means derivative of component "u"
            (void)first;
        }

        auto it = names_.find(name);
        if (it != names_.end()) {
            int order = 0;
            if (eat('[')) {
                order = uint_lit();
                if (!eat(']')) fail("expected ']'");
            }
            return DiffPoly::jet(comps_, it->second, order);
        }

        if (eat('[')) fail("unknown component name: " + name);
        return DiffPoly::param(comps_, name);
    }

    int comps_;
    const std::string& text_;
    std::map<std::string, int> names_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_poly(int comps, const std::string& text,
                    const std::map<std::string, int>& comp_names) {
    return Parser(comps, text, comp_names).parse();
}

DiffPoly parse_poly(int comps, const std::string& text) {
    return parse_poly(comps, text, default_comp_names(comps));
}

}  // namespace lenard
