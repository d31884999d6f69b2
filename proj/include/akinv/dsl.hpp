#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "akinv/scalar.hpp"

namespace akinv::dsl {

struct ParseError : Error {
    ParseError(int line, int column, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                message),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Expression tree for polynomial syntax: `^` power (natural exponent),
/// explicit `*`, `+`/`-`/unary minus, integer and a/b literals.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow };
    Kind kind;
    Rational number;    // Number
    std::string name;   // Variable
    ExprPtr lhs, rhs;   // binary nodes; Neg and Pow use lhs
    unsigned exponent = 0;  // Pow

    static ExprPtr make_number(Rational v);
    static ExprPtr make_variable(std::string name);
    static ExprPtr make_add(ExprPtr l, ExprPtr r);
    static ExprPtr make_sub(ExprPtr l, ExprPtr r);
    static ExprPtr make_neg(ExprPtr e);
    static ExprPtr make_mul(ExprPtr l, ExprPtr r);
    static ExprPtr make_pow(ExprPtr base, unsigned exponent);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
std::string print_expr(const ExprPtr& e);

/// Base field named in declarations: Q or Fp(p).
struct FieldSpec {
    long p = 0;
    bool operator==(const FieldSpec& o) const { return p == o.p; }
    std::string str() const { return p == 0 ? "Q" : "Fp(" + std::to_string(p) + ")"; }
};

struct FieldDecl {
    FieldSpec spec;
};

struct RingDecl {
    std::string name;
    bool is_tensor = false;
    // presentation form
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<ExprPtr> relations;
    // tensor form
    std::string left, right;
};

struct ExpmapDecl {
    std::string name;
    std::string ring;
    bool from_derivation = false;
    std::vector<std::pair<std::string, ExprPtr>> images;
    bool has_bound = false;
    unsigned bound = 0;
};

struct SubalgebraDecl {
    std::string name;
    FieldSpec field;
    std::vector<ExprPtr> gens;
};

struct HomDecl {
    std::string name;
    std::string source, target;
    std::vector<std::pair<std::string, ExprPtr>> images;
};

struct Command {
    enum class Kind {
        CheckExp,
        Deg,
        DCoeff,
        Invariant,
        Iterative,
        Rewrite,
        Conductor,
        TensorExtend,
        Specialize,
        Push,
        AkUpperBound,
    };
    Kind kind;
    std::vector<std::string> names;  // referenced entity names, in order
    std::vector<ExprPtr> args;       // expression arguments / sample list
    std::vector<std::pair<std::string, ExprPtr>> bindings;  // specialize values
    bool has_index = false;
    unsigned index = 0;  // dcoeff
    bool has_bound = false;
    unsigned bound = 0;
    bool has_pool_degree = false;
    unsigned pool_degree = 0;
    std::string result_name;  // `as` binding
};

using Statement = std::variant<FieldDecl, RingDecl, ExpmapDecl, SubalgebraDecl, HomDecl, Command>;

struct Script {
    std::vector<Statement> statements;
};

bool statement_equal(const Statement& a, const Statement& b);
bool script_equal(const Script& a, const Script& b);

/// Parse with name-use checking: names must be declared before use, no
/// shadowing, reserved variables t and s rejected in declarations. Errors
/// report line, column and the expected tokens.
Script parse(const std::string& source);

std::string print_statement(const Statement& s);
std::string print_script(const Script& s);

}  // namespace akinv::dsl
