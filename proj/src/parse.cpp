#include <catalg/parse.hpp>

#include <cctype>

namespace catalg {

namespace {

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(pos_) + " in '" + s_ + "'");
    }
    bool starts_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected identifier in '" + s_ + "'");
        return s_.substr(start, pos_ - start);
    }
    Int number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected number in '" + s_ + "'");
        return Int(s_.substr(start, pos_ - start));
    }
    bool starts_number() { return std::isdigit(static_cast<unsigned char>(peek())); }
    size_t pos() const { return pos_; }
    const std::string& text() const { return s_; }

  private:
    const std::string& s_;
    size_t pos_ = 0;
};

class PolyParser {
  public:
    PolyParser(Lexer& lx, const std::vector<std::string>& vars, unsigned long p)
        : lx_(lx), vars_(vars), p_(p) {}

    Polynomial expr() {
        Polynomial r = lx_.accept('-') ? -term() : term();
        while (true) {
            if (lx_.accept('+')) r = r + term();
            else if (lx_.accept('-')) r = r - term();
            else return r;
        }
    }

  private:
    Polynomial term() {
        Polynomial r = factor();
        while (true) {
            if (lx_.accept('*')) r = r * factor();
            else if (lx_.starts_ident() || lx_.peek() == '(')
                r = r * factor();  // implicit multiplication, e.g. 2x or x(y+1)
            else if (lx_.accept('/')) {
                // Division by a nonzero constant only.
                Polynomial d = factor();
                if (d.degree() > 0 || d.is_zero())
                    throw ParseError("polynomial division only by constants");
                r = r * d.leading_coef().inverse();
            } else
                return r;
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lx_.accept('^')) {
            Int e = lx_.number();
            if (e < 0 || e > 1000) throw ParseError("exponent out of range");
            return b.pow(static_cast<int>(e.get_si()));
        }
        return b;
    }

    Polynomial base() {
        if (lx_.accept('(')) {
            Polynomial r = expr();
            lx_.expect(')');
            return r;
        }
        if (lx_.starts_number())
            return Polynomial::constant(Coef(Rat(lx_.number()), p_), vars_.size());
        std::string name = lx_.ident();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return Polynomial::variable(i, vars_.size(), p_);
        throw ParseError("unknown variable '" + name + "'");
    }

    Lexer& lx_;
    const std::vector<std::string>& vars_;
    unsigned long p_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            unsigned long p) {
    Lexer lx(text);
    PolyParser pp(lx, vars, p);
    Polynomial r = pp.expr();
    if (!lx.eof()) throw ParseError("trailing input in polynomial '" + text + "'");
    return r;
}

Ring parse_ring(const std::string& text) {
    Lexer lx(text);
    std::string head = lx.ident();
    unsigned long char_p = 0;
    bool base_is_mod = false;
    Int n;
    if (head == "QQ") {
        // rationals or a polynomial ring over QQ
    } else if (head == "ZZ") {
        if (lx.accept('/')) {
            n = lx.number();
            base_is_mod = true;
        } else if (lx.eof()) {
            return RingDescriptor::integers();
        } else {
            throw ParseError("polynomial rings over ZZ are not supported");
        }
    } else if (head == "GF") {
        lx.expect('(');
        n = lx.number();
        lx.expect(')');
        base_is_mod = true;
    } else {
        throw ParseError("unknown ring '" + head + "'");
    }

    if (!lx.accept('[')) {
        if (!lx.eof()) throw ParseError("trailing input in ring literal '" + text + "'");
        if (base_is_mod) return RingDescriptor::integers_mod(n);
        return RingDescriptor::rationals();
    }

    if (base_is_mod) {
        if (!is_probable_prime(n)) throw ParseError("polynomial base ZZ/n requires n prime");
        char_p = n.get_ui();
    }
    std::vector<std::string> vars;
    vars.push_back(lx.ident());
    while (lx.accept(',')) vars.push_back(lx.ident());
    lx.expect(']');

    std::vector<Polynomial> gens;
    if (lx.accept('/')) {
        lx.expect('(');
        if (lx.peek() != ')') {
            PolyParser pp(lx, vars, char_p);
            gens.push_back(pp.expr());
            while (lx.accept(',')) gens.push_back(pp.expr());
        }
        lx.expect(')');
    }
    if (!lx.eof()) throw ParseError("trailing input in ring literal '" + text + "'");
    return RingDescriptor::poly_quotient(char_p, std::move(vars), std::move(gens));
}

}  // namespace catalg
