#include "akinv/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "akinv/algebra.hpp"

namespace akinv::dsl {

// ---------------------------------------------------------------------------
// Expressions

ExprPtr Expr::make_number(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    v.canonicalize();
    e->number = std::move(v);
    return e;
}

ExprPtr Expr::make_variable(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Variable;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::make_add(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Add;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr Expr::make_sub(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Sub;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr Expr::make_neg(ExprPtr inner) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Neg;
    e->lhs = std::move(inner);
    return e;
}

ExprPtr Expr::make_mul(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Mul;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr Expr::make_pow(ExprPtr base, unsigned exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::Number: return a->number == b->number;
        case Expr::Kind::Variable: return a->name == b->name;
        case Expr::Kind::Neg: return expr_equal(a->lhs, b->lhs);
        case Expr::Kind::Pow:
            return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

namespace {

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

void print_expr_rec(const Expr& e, int parent, std::ostream& os) {
    int prec = precedence(e);
    bool parens = prec < parent;
    if (parens) os << "(";
    switch (e.kind) {
        case Expr::Kind::Number: os << e.number.get_str(); break;
        case Expr::Kind::Variable: os << e.name; break;
        case Expr::Kind::Add:
            print_expr_rec(*e.lhs, 1, os);
            os << " + ";
            print_expr_rec(*e.rhs, 2, os);
            break;
        case Expr::Kind::Sub:
            print_expr_rec(*e.lhs, 1, os);
            os << " - ";
            print_expr_rec(*e.rhs, 2, os);
            break;
        case Expr::Kind::Mul:
            print_expr_rec(*e.lhs, 2, os);
            os << "*";
            print_expr_rec(*e.rhs, 3, os);
            break;
        case Expr::Kind::Neg:
            os << "-";
            print_expr_rec(*e.lhs, 3, os);
            break;
        case Expr::Kind::Pow:
            print_expr_rec(*e.lhs, 5, os);
            os << "^" << e.exponent;
            break;
    }
    if (parens) os << ")";
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
    std::ostringstream os;
    print_expr_rec(*e, 0, os);
    return os.str();
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Ident,
    Number,
    Keyword,  // hyphenated command keywords
    Semi,
    Comma,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Arrow,
    Equals,
    Slash,
    Star,
    Plus,
    Minus,
    Caret,
    Colon,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const std::set<std::string> kCompoundKeywords = {"check-exp", "tensor-extend", "ak-upper-bound",
                                                 "pool-degree"};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string text, int l, int c) {
        out.push_back({k, std::move(text), l, c});
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            ++col;
            continue;
        }
        if (ch == '#') {  // comment to end of line
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        int l = line, c = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string word = src.substr(i, j - i);
            // Maximal munch for known hyphenated keywords.
            size_t k = j;
            std::string compound = word;
            while (k < src.size() && src[k] == '-') {
                size_t m = k + 1;
                while (m < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[m])) || src[m] == '_'))
                    ++m;
                if (m == k + 1) break;
                compound += src.substr(k, m - k);
                k = m;
            }
            if (compound != word && kCompoundKeywords.count(compound)) {
                col += static_cast<int>(k - i);
                i = k;
                push(Tok::Keyword, compound, l, c);
                continue;
            }
            col += static_cast<int>(j - i);
            i = j;
            push(Tok::Ident, word, l, c);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            push(Tok::Number, src.substr(i, j - i), l, c);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            push(Tok::Arrow, "->", l, c);
            i += 2;
            col += 2;
            continue;
        }
        Tok k;
        switch (ch) {
            case ';': k = Tok::Semi; break;
            case ',': k = Tok::Comma; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case '=': k = Tok::Equals; break;
            case '/': k = Tok::Slash; break;
            case '*': k = Tok::Star; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '^': k = Tok::Caret; break;
            case ':': k = Tok::Colon; break;
            default:
                throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
        }
        push(k, std::string(1, ch), l, c);
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
  public:
    explicit Parser(const std::string& src) : tokens_(lex(src)) {}

    Script parse_script() {
        Script script;
        while (!peek_is(Tok::End)) {
            script.statements.push_back(parse_statement());
            expect(Tok::Semi, "';'");
        }
        check_names(script);
        return script;
    }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    bool peek_is(Tok k) const { return tokens_[pos_].kind == k; }
    bool peek_word(const std::string& w) const {
        return tokens_[pos_].kind == Tok::Ident && tokens_[pos_].text == w;
    }
    Token advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, "expected " + expected + ", got " + got);
    }

    Token expect(Tok k, const std::string& expected) {
        if (!peek_is(k)) fail(expected);
        return advance();
    }

    Token expect_word(const std::string& w) {
        if (!peek_word(w)) fail("'" + w + "'");
        return advance();
    }

    std::string expect_name() {
        Token t = expect(Tok::Ident, "identifier");
        return t.text;
    }

    unsigned expect_natural() {
        Token t = expect(Tok::Number, "natural number");
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Statement parse_statement() {
        if (peek_is(Tok::Keyword)) return parse_command();
        if (!peek_is(Tok::Ident)) fail("statement");
        const std::string& w = peek().text;
        if (w == "field") return parse_field();
        if (w == "ring") return parse_ring();
        if (w == "expmap") return parse_expmap();
        if (w == "subalgebra") return parse_subalgebra();
        if (w == "hom") return parse_hom();
        return parse_command();
    }

    FieldSpec parse_fieldspec() {
        if (peek_word("Q")) {
            advance();
            return FieldSpec{0};
        }
        if (peek_word("Fp")) {
            advance();
            expect(Tok::LParen, "'('");
            unsigned p = expect_natural();
            expect(Tok::RParen, "')'");
            return FieldSpec{static_cast<long>(p)};
        }
        fail("field ('Q' or 'Fp(p)')");
    }

    Statement parse_field() {
        expect_word("field");
        return FieldDecl{parse_fieldspec()};
    }

    Statement parse_ring() {
        expect_word("ring");
        RingDecl decl;
        decl.name = expect_name();
        expect(Tok::Equals, "'='");
        if (peek_word("tensor")) {
            advance();
            decl.is_tensor = true;
            decl.left = expect_name();
            decl.right = expect_name();
            return decl;
        }
        decl.field = parse_fieldspec();
        expect(Tok::LBracket, "'['");
        decl.vars.push_back(expect_name());
        while (peek_is(Tok::Comma)) {
            advance();
            decl.vars.push_back(expect_name());
        }
        expect(Tok::RBracket, "']'");
        if (peek_is(Tok::Slash)) {
            advance();
            expect(Tok::LParen, "'('");
            if (!peek_is(Tok::RParen)) {
                decl.relations.push_back(parse_expr());
                while (peek_is(Tok::Comma)) {
                    advance();
                    decl.relations.push_back(parse_expr());
                }
            }
            expect(Tok::RParen, "')'");
        }
        return decl;
    }

    std::vector<std::pair<std::string, ExprPtr>> parse_image_list() {
        std::vector<std::pair<std::string, ExprPtr>> images;
        expect(Tok::LBrace, "'{'");
        if (!peek_is(Tok::RBrace)) {
            while (true) {
                std::string v = expect_name();
                expect(Tok::Arrow, "'->'");
                images.emplace_back(v, parse_expr());
                if (!peek_is(Tok::Comma)) break;
                advance();
            }
        }
        expect(Tok::RBrace, "'}'");
        return images;
    }

    Statement parse_expmap() {
        expect_word("expmap");
        ExpmapDecl decl;
        decl.name = expect_name();
        expect_word("on");
        decl.ring = expect_name();
        if (peek_word("from")) {
            advance();
            expect_word("derivation");
            decl.from_derivation = true;
            decl.images = parse_image_list();
            if (peek_word("bound")) {
                advance();
                decl.has_bound = true;
                decl.bound = expect_natural();
            }
            return decl;
        }
        expect(Tok::Equals, "'='");
        decl.images = parse_image_list();
        return decl;
    }

    Statement parse_subalgebra() {
        expect_word("subalgebra");
        SubalgebraDecl decl;
        decl.name = expect_name();
        expect_word("over");
        decl.field = parse_fieldspec();
        expect(Tok::Equals, "'='");
        expect(Tok::LBrace, "'{'");
        if (!peek_is(Tok::RBrace)) {
            decl.gens.push_back(parse_expr());
            while (peek_is(Tok::Comma)) {
                advance();
                decl.gens.push_back(parse_expr());
            }
        }
        expect(Tok::RBrace, "'}'");
        return decl;
    }

    Statement parse_hom() {
        expect_word("hom");
        HomDecl decl;
        decl.name = expect_name();
        expect(Tok::Colon, "':'");
        decl.source = expect_name();
        expect(Tok::Arrow, "'->'");
        decl.target = expect_name();
        expect(Tok::Equals, "'='");
        decl.images = parse_image_list();
        return decl;
    }

    std::vector<ExprPtr> parse_expr_list_braced() {
        std::vector<ExprPtr> out;
        expect(Tok::LBrace, "'{'");
        if (!peek_is(Tok::RBrace)) {
            out.push_back(parse_expr());
            while (peek_is(Tok::Comma)) {
                advance();
                out.push_back(parse_expr());
            }
        }
        expect(Tok::RBrace, "'}'");
        return out;
    }

    void parse_command_options(Command& cmd) {
        while (true) {
            if (peek_word("bound")) {
                advance();
                cmd.has_bound = true;
                cmd.bound = expect_natural();
            } else if (peek_is(Tok::Keyword) && peek().text == "pool-degree") {
                advance();
                cmd.has_pool_degree = true;
                cmd.pool_degree = expect_natural();
            } else {
                break;
            }
        }
    }

    Statement parse_command() {
        Command cmd;
        if (peek_is(Tok::Keyword)) {
            std::string kw = advance().text;
            if (kw == "check-exp") {
                cmd.kind = Command::Kind::CheckExp;
                cmd.names.push_back(expect_name());
                return cmd;
            }
            if (kw == "tensor-extend") {
                cmd.kind = Command::Kind::TensorExtend;
                cmd.names.push_back(expect_name());
                expect_word("to");
                cmd.names.push_back(expect_name());
                expect_word("as");
                cmd.result_name = expect_name();
                return cmd;
            }
            if (kw == "ak-upper-bound") {
                cmd.kind = Command::Kind::AkUpperBound;
                expect(Tok::LBrace, "'{'");
                cmd.names.push_back(expect_name());
                while (peek_is(Tok::Comma)) {
                    advance();
                    cmd.names.push_back(expect_name());
                }
                expect(Tok::RBrace, "'}'");
                cmd.args.push_back(parse_expr());
                return cmd;
            }
            fail("command");
        }
        std::string word = expect_name();
        if (word == "deg") {
            cmd.kind = Command::Kind::Deg;
            cmd.names.push_back(expect_name());
            cmd.args.push_back(parse_expr());
        } else if (word == "dcoeff") {
            cmd.kind = Command::Kind::DCoeff;
            cmd.names.push_back(expect_name());
            cmd.args.push_back(parse_expr());
            cmd.has_index = true;
            cmd.index = expect_natural();
        } else if (word == "invariant") {
            cmd.kind = Command::Kind::Invariant;
            cmd.names.push_back(expect_name());
            cmd.args.push_back(parse_expr());
        } else if (word == "iterative") {
            cmd.kind = Command::Kind::Iterative;
            cmd.names.push_back(expect_name());
            cmd.args = parse_expr_list_braced();
            parse_command_options(cmd);
        } else if (word == "rewrite") {
            cmd.kind = Command::Kind::Rewrite;
            cmd.names.push_back(expect_name());
            cmd.args.push_back(parse_expr());
            parse_command_options(cmd);
        } else if (word == "conductor") {
            cmd.kind = Command::Kind::Conductor;
            cmd.names.push_back(expect_name());
        } else if (word == "specialize") {
            cmd.kind = Command::Kind::Specialize;
            cmd.names.push_back(expect_name());
            expect_word("at");
            cmd.bindings = parse_image_list();
            expect_word("as");
            cmd.result_name = expect_name();
        } else if (word == "push") {
            cmd.kind = Command::Kind::Push;
            cmd.names.push_back(expect_name());
            expect_word("via");
            cmd.names.push_back(expect_name());
            expect_word("as");
            cmd.result_name = expect_name();
            parse_command_options(cmd);
        } else {
            throw ParseError(peek().line, peek().column, "unknown statement '" + word + "'");
        }
        return cmd;
    }

    // expr := term { (+|-) term }; term := unary { * unary };
    // unary := - unary | power; power := primary [^ natural];
    // primary := number [/ number] | ident | ( expr )
    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek_is(Tok::Plus) || peek_is(Tok::Minus)) {
            bool plus = advance().kind == Tok::Plus;
            ExprPtr r = parse_term();
            e = plus ? Expr::make_add(e, r) : Expr::make_sub(e, r);
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (peek_is(Tok::Star)) {
            advance();
            e = Expr::make_mul(e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (peek_is(Tok::Minus)) {
            advance();
            return Expr::make_neg(parse_unary());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (peek_is(Tok::Caret)) {
            advance();
            return Expr::make_pow(base, expect_natural());
        }
        return base;
    }

    ExprPtr parse_primary() {
        if (peek_is(Tok::Number)) {
            std::string num = advance().text;
            if (peek_is(Tok::Slash)) {
                advance();
                std::string den = expect(Tok::Number, "denominator").text;
                if (Rational(den) == 0)
                    throw ParseError(peek().line, peek().column, "zero denominator");
                return Expr::make_number(Rational(num) / Rational(den));
            }
            return Expr::make_number(Rational(num));
        }
        if (peek_is(Tok::Ident)) return Expr::make_variable(advance().text);
        if (peek_is(Tok::LParen)) {
            advance();
            ExprPtr e = parse_expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail("expression");
    }

    // Declared-before-use, no shadowing, reserved names.
    void check_names(const Script& script) {
        std::set<long> fields;
        enum class NameKind { Ring, Expmap, Subalgebra, Hom };
        std::map<std::string, NameKind> names;
        std::map<std::string, bool> ring_is_tensor;

        auto declare = [&](const std::string& n, NameKind k) {
            if (is_reserved_variable(n))
                throw ParseError(0, 0, "reserved name '" + n + "' cannot be declared");
            if (names.count(n)) throw ParseError(0, 0, "name '" + n + "' already declared");
            names.emplace(n, k);
        };
        auto require = [&](const std::string& n, NameKind k, const std::string& what) {
            auto it = names.find(n);
            if (it == names.end())
                throw ParseError(0, 0, "undeclared identifier '" + n + "'");
            if (it->second != k)
                throw ParseError(0, 0, "'" + n + "' is not a " + what);
        };
        auto require_field = [&](const FieldSpec& f) {
            if (!fields.count(f.p))
                throw ParseError(0, 0, "field " + f.str() + " used before declaration");
        };

        for (const auto& st : script.statements) {
            if (const auto* fd = std::get_if<FieldDecl>(&st)) {
                if (fd->spec.p != 0 && !is_prime(fd->spec.p))
                    throw ParseError(0, 0, "Fp(" + std::to_string(fd->spec.p) +
                                               "): modulus is not prime");
                fields.insert(fd->spec.p);
            } else if (const auto* rd = std::get_if<RingDecl>(&st)) {
                if (rd->is_tensor) {
                    require(rd->left, NameKind::Ring, "ring");
                    require(rd->right, NameKind::Ring, "ring");
                } else {
                    require_field(rd->field);
                    for (const auto& v : rd->vars)
                        if (is_reserved_variable(v))
                            throw ParseError(0, 0, "reserved variable '" + v +
                                                       "' in ring declaration");
                }
                declare(rd->name, NameKind::Ring);
                ring_is_tensor[rd->name] = rd->is_tensor;
            } else if (const auto* ed = std::get_if<ExpmapDecl>(&st)) {
                require(ed->ring, NameKind::Ring, "ring");
                declare(ed->name, NameKind::Expmap);
            } else if (const auto* sd = std::get_if<SubalgebraDecl>(&st)) {
                require_field(sd->field);
                declare(sd->name, NameKind::Subalgebra);
            } else if (const auto* hd = std::get_if<HomDecl>(&st)) {
                require(hd->source, NameKind::Ring, "ring");
                require(hd->target, NameKind::Ring, "ring");
                declare(hd->name, NameKind::Hom);
            } else if (const auto* cmd = std::get_if<Command>(&st)) {
                switch (cmd->kind) {
                    case Command::Kind::CheckExp:
                    case Command::Kind::Deg:
                    case Command::Kind::DCoeff:
                    case Command::Kind::Invariant:
                    case Command::Kind::Iterative:
                    case Command::Kind::Rewrite:
                        require(cmd->names[0], NameKind::Expmap, "expmap");
                        break;
                    case Command::Kind::Conductor:
                        require(cmd->names[0], NameKind::Subalgebra, "subalgebra");
                        break;
                    case Command::Kind::TensorExtend:
                        require(cmd->names[0], NameKind::Expmap, "expmap");
                        require(cmd->names[1], NameKind::Ring, "ring");
                        declare(cmd->result_name, NameKind::Expmap);
                        break;
                    case Command::Kind::Specialize:
                        require(cmd->names[0], NameKind::Ring, "ring");
                        declare(cmd->result_name, NameKind::Hom);
                        break;
                    case Command::Kind::Push:
                        require(cmd->names[0], NameKind::Expmap, "expmap");
                        require(cmd->names[1], NameKind::Hom, "hom");
                        declare(cmd->result_name, NameKind::Expmap);
                        break;
                    case Command::Kind::AkUpperBound:
                        for (const auto& n : cmd->names)
                            require(n, NameKind::Expmap, "expmap");
                        break;
                }
            }
        }
    }
};

}  // namespace

Script parse(const std::string& source) { return Parser(source).parse_script(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

void print_images(const std::vector<std::pair<std::string, ExprPtr>>& images, std::ostream& os) {
    os << "{ ";
    for (size_t i = 0; i < images.size(); ++i) {
        if (i > 0) os << ", ";
        os << images[i].first << " -> " << print_expr(images[i].second);
    }
    os << " }";
}

struct StatementPrinter {
    std::ostream& os;

    void operator()(const FieldDecl& d) { os << "field " << d.spec.str(); }

    void operator()(const RingDecl& d) {
        os << "ring " << d.name << " = ";
        if (d.is_tensor) {
            os << "tensor " << d.left << " " << d.right;
            return;
        }
        os << d.field.str() << "[";
        for (size_t i = 0; i < d.vars.size(); ++i) {
            if (i > 0) os << ", ";
            os << d.vars[i];
        }
        os << "]";
        if (!d.relations.empty()) {
            os << "/(";
            for (size_t i = 0; i < d.relations.size(); ++i) {
                if (i > 0) os << ", ";
                os << print_expr(d.relations[i]);
            }
            os << ")";
        }
    }

    void operator()(const ExpmapDecl& d) {
        os << "expmap " << d.name << " on " << d.ring;
        if (d.from_derivation) {
            os << " from derivation ";
            print_images(d.images, os);
            if (d.has_bound) os << " bound " << d.bound;
        } else {
            os << " = ";
            print_images(d.images, os);
        }
    }

    void operator()(const SubalgebraDecl& d) {
        os << "subalgebra " << d.name << " over " << d.field.str() << " = { ";
        for (size_t i = 0; i < d.gens.size(); ++i) {
            if (i > 0) os << ", ";
            os << print_expr(d.gens[i]);
        }
        os << " }";
    }

    void operator()(const HomDecl& d) {
        os << "hom " << d.name << " : " << d.source << " -> " << d.target << " = ";
        print_images(d.images, os);
    }

    void operator()(const Command& c) {
        switch (c.kind) {
            case Command::Kind::CheckExp: os << "check-exp " << c.names[0]; break;
            case Command::Kind::Deg:
                os << "deg " << c.names[0] << " " << print_expr(c.args[0]);
                break;
            case Command::Kind::DCoeff:
                os << "dcoeff " << c.names[0] << " " << print_expr(c.args[0]) << " " << c.index;
                break;
            case Command::Kind::Invariant:
                os << "invariant " << c.names[0] << " " << print_expr(c.args[0]);
                break;
            case Command::Kind::Iterative:
                os << "iterative " << c.names[0] << " { ";
                for (size_t i = 0; i < c.args.size(); ++i) {
                    if (i > 0) os << ", ";
                    os << print_expr(c.args[i]);
                }
                os << " }";
                if (c.has_bound) os << " bound " << c.bound;
                break;
            case Command::Kind::Rewrite:
                os << "rewrite " << c.names[0] << " " << print_expr(c.args[0]);
                if (c.has_pool_degree) os << " pool-degree " << c.pool_degree;
                if (c.has_bound) os << " bound " << c.bound;
                break;
            case Command::Kind::Conductor: os << "conductor " << c.names[0]; break;
            case Command::Kind::TensorExtend:
                os << "tensor-extend " << c.names[0] << " to " << c.names[1] << " as "
                   << c.result_name;
                break;
            case Command::Kind::Specialize:
                os << "specialize " << c.names[0] << " at ";
                print_images(c.bindings, os);
                os << " as " << c.result_name;
                break;
            case Command::Kind::Push:
                os << "push " << c.names[0] << " via " << c.names[1] << " as " << c.result_name;
                if (c.has_bound) os << " bound " << c.bound;
                break;
            case Command::Kind::AkUpperBound:
                os << "ak-upper-bound { ";
                for (size_t i = 0; i < c.names.size(); ++i) {
                    if (i > 0) os << ", ";
                    os << c.names[i];
                }
                os << " } " << print_expr(c.args[0]);
                break;
        }
    }
};

}  // namespace

std::string print_statement(const Statement& s) {
    std::ostringstream os;
    StatementPrinter printer{os};
    std::visit(printer, s);
    os << ";";
    return os.str();
}

std::string print_script(const Script& s) {
    std::ostringstream os;
    for (const auto& st : s.statements) os << print_statement(st) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Structural equality

namespace {

bool images_equal(const std::vector<std::pair<std::string, ExprPtr>>& a,
                  const std::vector<std::pair<std::string, ExprPtr>>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || !expr_equal(a[i].second, b[i].second)) return false;
    return true;
}

bool exprs_equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!expr_equal(a[i], b[i])) return false;
    return true;
}

}  // namespace

bool statement_equal(const Statement& a, const Statement& b) {
    if (a.index() != b.index()) return false;
    if (const auto* x = std::get_if<FieldDecl>(&a))
        return x->spec == std::get<FieldDecl>(b).spec;
    if (const auto* x = std::get_if<RingDecl>(&a)) {
        const auto& y = std::get<RingDecl>(b);
        return x->name == y.name && x->is_tensor == y.is_tensor && x->field == y.field &&
               x->vars == y.vars && exprs_equal(x->relations, y.relations) && x->left == y.left &&
               x->right == y.right;
    }
    if (const auto* x = std::get_if<ExpmapDecl>(&a)) {
        const auto& y = std::get<ExpmapDecl>(b);
        return x->name == y.name && x->ring == y.ring &&
               x->from_derivation == y.from_derivation && images_equal(x->images, y.images) &&
               x->has_bound == y.has_bound && (!x->has_bound || x->bound == y.bound);
    }
    if (const auto* x = std::get_if<SubalgebraDecl>(&a)) {
        const auto& y = std::get<SubalgebraDecl>(b);
        return x->name == y.name && x->field == y.field && exprs_equal(x->gens, y.gens);
    }
    if (const auto* x = std::get_if<HomDecl>(&a)) {
        const auto& y = std::get<HomDecl>(b);
        return x->name == y.name && x->source == y.source && x->target == y.target &&
               images_equal(x->images, y.images);
    }
    const auto& x = std::get<Command>(a);
    const auto& y = std::get<Command>(b);
    return x.kind == y.kind && x.names == y.names && exprs_equal(x.args, y.args) &&
           images_equal(x.bindings, y.bindings) && x.has_index == y.has_index &&
           (!x.has_index || x.index == y.index) && x.has_bound == y.has_bound &&
           (!x.has_bound || x.bound == y.bound) && x.has_pool_degree == y.has_pool_degree &&
           (!x.has_pool_degree || x.pool_degree == y.pool_degree) &&
           x.result_name == y.result_name;
}

bool script_equal(const Script& a, const Script& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (size_t i = 0; i < a.statements.size(); ++i)
        if (!statement_equal(a.statements[i], b.statements[i])) return false;
    return true;
}

}  // namespace akinv::dsl
