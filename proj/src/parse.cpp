#include "exdef/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "exdef/errors.hpp"

namespace exdef {

namespace {

enum class Tok {
    number,   // integer or p/q
    var,      // x<i>
    dx,       // dx<i>
    ddx,      // d/dx<i>
    plus, minus, star, caret,
    lparen, rparen, lbracket, rbracket,
    at, comma, equals,
    name,     // identifier (L, i, lm, idop, d, key names)
    end
};

struct Token {
    Tok kind;
    std::string text;
    int index = 0;  // variable index for var/dx/ddx
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { tokenize(); }

    const std::vector<Token>& tokens() const { return tokens_; }

private:
    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = read_digits(i);
                if (i < text_.size() && text_[i] == '/' && i + 1 < text_.size() &&
                    std::isdigit(static_cast<unsigned char>(text_[i + 1]))) {
                    ++i;
                    num += "/" + read_digits(i);
                }
                tokens_.push_back({Tok::number, num, 0, start});
                continue;
            }
            if (text_.compare(i, 4, "d/dx") == 0 && i + 4 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[i + 4]))) {
                i += 4;
                int idx = std::stoi(read_digits(i));
                tokens_.push_back({Tok::ddx, "d/dx", idx, start});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string word;
                while (i < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[i]))))
                    word += text_[i++];
                if (word.size() > 1 && word[0] == 'x' && all_digits(word, 1)) {
                    tokens_.push_back(
                        {Tok::var, word, std::stoi(word.substr(1)), start});
                } else if (word.size() > 2 && word.compare(0, 2, "dx") == 0 &&
                           all_digits(word, 2)) {
                    tokens_.push_back(
                        {Tok::dx, word, std::stoi(word.substr(2)), start});
                } else {
                    tokens_.push_back({Tok::name, word, 0, start});
                }
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::plus; break;
                case '-': kind = Tok::minus; break;
                case '*': kind = Tok::star; break;
                case '^': kind = Tok::caret; break;
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case '[': kind = Tok::lbracket; break;
                case ']': kind = Tok::rbracket; break;
                case '@': kind = Tok::at; break;
                case ',': kind = Tok::comma; break;
                case '=': kind = Tok::equals; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'",
                                     i);
            }
            tokens_.push_back({kind, std::string(1, c), 0, i});
            ++i;
        }
        tokens_.push_back({Tok::end, "", 0, text_.size()});
    }

    std::string read_digits(std::size_t& i) {
        std::string out;
        while (i < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i])))
            out += text_[i++];
        return out;
    }

    static bool all_digits(const std::string& s, std::size_t from) {
        for (std::size_t i = from; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    }

    const std::string& text_;
    std::vector<Token> tokens_;
};

struct RawTerm {
    Rational coeff = 1;
    MultiIndex gamma;
    std::vector<int> dx_list;  // in written order, sign folded on insert
    std::size_t pos = 0;
};

class Parser {
public:
    Parser(const std::string& text, int var_count)
        : lexer_(text), var_count_(var_count) {}

    const Token& peek() const { return lexer_.tokens()[cursor_]; }
    const Token& next() { return lexer_.tokens()[cursor_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++cursor_;
        return true;
    }

    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError("expected " + what + ", found '" + peek().text + "'",
                             peek().pos);
        return next();
    }

    void expect_end() {
        if (peek().kind != Tok::end)
            throw ParseError("unexpected trailing input '" + peek().text + "'",
                             peek().pos);
    }

    int check_var(const Token& tok) const {
        if (tok.index < 1 || tok.index > var_count_)
            throw ParseError("variable index " + std::to_string(tok.index) +
                                 " out of range 1.." + std::to_string(var_count_),
                             tok.pos);
        return tok.index;
    }

    /// One `coef? monomial? wedgechain?` group.
    RawTerm parse_term() {
        RawTerm term;
        term.gamma = MultiIndex(var_count_);
        term.pos = peek().pos;
        bool any = false;

        if (peek().kind == Tok::number) {
            term.coeff = rational_from_string(next().text);
            any = true;
            accept(Tok::star);
        }
        while (peek().kind == Tok::var) {
            int var = check_var(next());
            int exp = 1;
            if (accept(Tok::caret)) {
                Token e = expect(Tok::number, "integer exponent");
                if (e.text.find('/') != std::string::npos)
                    throw ParseError("exponent must be an integer", e.pos);
                exp = std::stoi(e.text);
                if (exp < 0) throw ParseError("negative exponent", e.pos);
            }
            for (int j = 0; j < exp; ++j) term.gamma = term.gamma.plus(var);
            any = true;
            if (peek().kind == Tok::star) {
                // '*' joins another variable or the dx chain
                if (lexer_.tokens()[cursor_ + 1].kind == Tok::var ||
                    lexer_.tokens()[cursor_ + 1].kind == Tok::dx)
                    next();
                else
                    break;
            }
        }
        if (peek().kind == Tok::dx) {
            while (peek().kind == Tok::dx) {
                term.dx_list.push_back(check_var(next()));
                if (!accept(Tok::caret)) break;
                if (peek().kind != Tok::dx)
                    throw ParseError("expected dx<i> after '^' in wedge chain",
                                     peek().pos);
            }
            any = true;
        }
        if (!any)
            throw ParseError("expected a term (coefficient, monomial or dx chain)",
                             peek().pos);
        return term;
    }

    /// Collects signed terms of `form := ['-'] term (('+'|'-') term)*`.
    std::vector<RawTerm> parse_form_terms() {
        std::vector<RawTerm> terms;
        bool negate = accept(Tok::minus);
        while (true) {
            RawTerm t = parse_term();
            if (negate) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            if (accept(Tok::plus))
                negate = false;
            else if (accept(Tok::minus))
                negate = true;
            else
                break;
        }
        return terms;
    }

    HomogeneousForm build_form(const std::vector<RawTerm>& terms) {
        const int r = static_cast<int>(terms.front().dx_list.size());
        const int b = terms.front().gamma.degree() + r;
        for (const auto& t : terms) {
            int tr = static_cast<int>(t.dx_list.size());
            int tb = t.gamma.degree() + tr;
            if (tr != r || tb != b)
                throw ParseError(
                    "inhomogeneous form: term of bidegree (r=" +
                        std::to_string(tr) + ", b=" + std::to_string(tb) +
                        ") mixed with (r=" + std::to_string(r) + ", b=" +
                        std::to_string(b) + ")",
                    t.pos);
        }
        HomogeneousForm form(var_count_, r, b);
        for (const auto& t : terms)
            form.add_term_signed(t.gamma, t.dx_list, t.coeff);
        return form;
    }

    HomogeneousForm parse_form_expr() { return build_form(parse_form_terms()); }

    HomogeneousField parse_field_expr() {
        struct RawFieldTerm {
            Rational coeff;
            MultiIndex gamma;
            int dir;
            std::size_t pos;
        };
        std::vector<RawFieldTerm> terms;
        bool negate = accept(Tok::minus);
        while (true) {
            RawTerm head = parse_term_no_dx();
            Token ddx = expect(Tok::ddx, "d/dx<i>");
            terms.push_back({negate ? -head.coeff : head.coeff, head.gamma,
                             check_var(ddx), head.pos});
            if (accept(Tok::plus))
                negate = false;
            else if (accept(Tok::minus))
                negate = true;
            else
                break;
        }
        const int b = terms.front().gamma.degree() - 1;
        for (const auto& t : terms)
            if (t.gamma.degree() - 1 != b)
                throw ParseError("inhomogeneous field: weights " +
                                     std::to_string(t.gamma.degree() - 1) +
                                     " and " + std::to_string(b) + " mixed",
                                 t.pos);
        HomogeneousField field(var_count_, b);
        for (const auto& t : terms) field.add_term(t.gamma, t.dir, t.coeff);
        return field;
    }

    VectorValuedForm parse_vvform_expr() {
        std::vector<std::pair<HomogeneousForm, HomogeneousField>> pairs;
        while (true) {
            HomogeneousForm form(var_count_, 0, 0);
            if (accept(Tok::lparen)) {
                form = parse_form_expr();
                expect(Tok::rparen, "')'");
            } else {
                form = build_form({parse_term()});
            }
            Token at = expect(Tok::at, "'@'");
            (void)at;
            Token ddx = expect(Tok::ddx, "d/dx<i>");
            pairs.emplace_back(form, HomogeneousField::coordinate(
                                         var_count_, check_var(ddx)));
            if (!accept(Tok::plus)) break;
        }
        // common bidegree from the first nonzero pair
        int p = 0, a = 0;
        bool found = false;
        for (const auto& [form, field] : pairs)
            if (!form.is_zero()) {
                p = form.form_degree();
                a = form.weight() + field.weight();
                found = true;
                break;
            }
        if (!found) return VectorValuedForm::zero(var_count_, p, a);
        return VectorValuedForm::from_pairs(var_count_, p, a, pairs);
    }

    /// Term with no dx chain allowed (used by field syntax).
    RawTerm parse_term_no_dx() {
        RawTerm term;
        term.gamma = MultiIndex(var_count_);
        term.pos = peek().pos;
        if (peek().kind == Tok::number) {
            term.coeff = rational_from_string(next().text);
            accept(Tok::star);
        }
        while (peek().kind == Tok::var) {
            int var = check_var(next());
            int exp = 1;
            if (accept(Tok::caret)) {
                Token e = expect(Tok::number, "integer exponent");
                exp = std::stoi(e.text);
            }
            for (int j = 0; j < exp; ++j) term.gamma = term.gamma.plus(var);
            if (peek().kind == Tok::star &&
                lexer_.tokens()[cursor_ + 1].kind == Tok::var)
                next();
            else
                break;
        }
        return term;
    }

    DiffOperator parse_operator_expr() {
        std::optional<DiffOperator> result;
        while (true) {
            DiffOperator piece = parse_operator_term();
            if (!result) {
                result = piece;
            } else {
                if (!(result->bidegree() == piece.bidegree()))
                    throw ParseError("operator summands have different bidegrees",
                                     peek().pos);
                result = DiffOperator(vv_add(result->K(), piece.K()),
                                      vv_add(result->L(), piece.L()),
                                      form_add(result->mu(), piece.mu()));
            }
            if (!accept(Tok::plus)) break;
        }
        return *result;
    }

    DiffOperator parse_operator_term() {
        Token head = expect(Tok::name, "operator term (L, i, lm, idop or d)");
        if (head.text == "d") return exterior_differential(var_count_);
        if (head.text == "L" || head.text == "i") {
            expect(Tok::lbracket, "'['");
            VectorValuedForm vv = parse_vvform_expr();
            expect(Tok::rbracket, "']'");
            if (head.text == "L") {
                int q = vv.form_degree();
                int a = vv.weight();
                return DiffOperator(vv, VectorValuedForm::zero(var_count_, q + 1, a),
                                    HomogeneousForm::zero(var_count_, q, a));
            }
            int q = vv.form_degree() - 1;
            int a = vv.weight();
            return DiffOperator(VectorValuedForm::zero(var_count_, q, a), vv,
                                HomogeneousForm::zero(var_count_, q, a));
        }
        if (head.text == "lm") {
            expect(Tok::lbracket, "'['");
            HomogeneousForm mu = parse_form_expr();
            expect(Tok::rbracket, "']'");
            int q = mu.form_degree();
            int a = mu.weight();
            return DiffOperator(VectorValuedForm::zero(var_count_, q, a),
                                VectorValuedForm::zero(var_count_, q + 1, a), mu);
        }
        if (head.text == "idop") return parse_idop();
        throw ParseError("unknown operator constructor '" + head.text + "'",
                         head.pos);
    }

    DiffOperator parse_idop() {
        expect(Tok::lparen, "'('");
        std::optional<int> q, a;
        std::optional<HomogeneousForm> w1, w2, mu;
        while (true) {
            Token key = expect(Tok::name, "idop key (q, a, w1, w2, mu)");
            expect(Tok::equals, "'='");
            if (key.text == "q" || key.text == "a") {
                Token v = expect(Tok::number, "integer");
                (key.text == "q" ? q : a) = std::stoi(v.text);
            } else if (key.text == "w1" || key.text == "w2" || key.text == "mu") {
                HomogeneousForm f = parse_form_expr();
                (key.text == "w1" ? w1 : key.text == "w2" ? w2 : mu) = f;
            } else {
                throw ParseError("unknown idop key '" + key.text + "'", key.pos);
            }
            if (accept(Tok::comma)) continue;
            expect(Tok::rparen, "')'");
            break;
        }
        if (!q || !a)
            throw ParseError("idop needs q= and a=", peek().pos);
        HomogeneousForm zero_w1 = HomogeneousForm::zero(var_count_, *q - 1, *a);
        HomogeneousForm zero_qa = HomogeneousForm::zero(var_count_, *q, *a);
        return from_id_family(w1.value_or(zero_w1), w2.value_or(zero_qa),
                              mu.value_or(zero_qa), *q);
    }

private:
    Lexer lexer_;
    int var_count_;
    std::size_t cursor_ = 0;
};

}  // namespace

HomogeneousForm parse_form(const std::string& text, int var_count) {
    Parser p(text, var_count);
    HomogeneousForm f = p.parse_form_expr();
    p.expect_end();
    return f;
}

HomogeneousField parse_field(const std::string& text, int var_count) {
    Parser p(text, var_count);
    HomogeneousField f = p.parse_field_expr();
    p.expect_end();
    return f;
}

VectorValuedForm parse_vvform(const std::string& text, int var_count) {
    Parser p(text, var_count);
    VectorValuedForm f = p.parse_vvform_expr();
    p.expect_end();
    return f;
}

DiffOperator parse_operator(const std::string& text, int var_count) {
    Parser p(text, var_count);
    DiffOperator op = p.parse_operator_expr();
    p.expect_end();
    return op;
}

}  // namespace exdef
