#pragma once

// A small expression language for sequences k |-> x_k in R^d.
//
// Grammar (precedence low to high: or, and, not, comparisons, +/-, * / %,
// unary minus, ^ right-assoc):
//
//   expr    := or_expr
//   or_expr := and_expr ("or" and_expr)*
//   and_expr:= not_expr ("and" not_expr)*
//   not_expr:= ["not"] cmp
//   cmp     := sum [("=="|"!="|"<"|"<="|">"|">=") sum]
//   sum     := prod (("+"|"-") prod)*
//   prod    := unary (("*"|"/"|"%") unary)*
//   unary   := ["-"] power
//   power   := atom ["^" unary]
//   atom    := number | "n" | "(" expr ("," expr)* ")" | ident "(" args ")"
//            | "if" expr "then" expr "else" expr
//
// Functions: sin, cos, abs, sqrt, ln, floor, pow(b, e), is_square, is_cube,
// is_power(v, p). The index variable `n` is 1-based. A top-level tuple
// "(e1, e2)" defines a multi-component sequence and fixes the dimension;
// tuples anywhere else are rejected.

#include <memory>
#include <string>
#include <vector>

#include "roughstat/core.hpp"
#include "roughstat/errors.hpp"

namespace roughstat::dsl {

enum class BinOp { Add, Sub, Mul, Div, Mod, Pow, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnOp { Neg, Not };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Index, Unary, Binary, Call, If, Tuple };

    Kind kind;
    double number = 0.0;              // Kind::Number
    UnOp un_op = UnOp::Neg;           // Kind::Unary
    BinOp bin_op = BinOp::Add;        // Kind::Binary
    std::string callee;               // Kind::Call
    std::vector<ExprPtr> children;    // operands; If = {cond, then, else}
};

ExprPtr make_number(double v);
ExprPtr make_index();
ExprPtr make_unary(UnOp op, ExprPtr e);
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(std::string callee, std::vector<ExprPtr> args);
ExprPtr make_if(ExprPtr cond, ExprPtr then_e, ExprPtr else_e);

bool expr_equal(const Expr& a, const Expr& b);
std::string pretty_print(const Expr& e);

// A parsed sequence k |-> x_k: one component expression per dimension.
struct SequenceSpec {
    std::vector<ExprPtr> components;
    std::string source_text;

    int dim() const { return static_cast<int>(components.size()); }
};

// A boolean expression over the index symbol `n` (values != 0 are true).
struct IndexPredicateSpec {
    ExprPtr ast;
    std::string source_text;
};

bool spec_equal(const SequenceSpec& a, const SequenceSpec& b);
std::string pretty_print(const SequenceSpec& spec);

SequenceSpec parse_sequence(const std::string& text);
IndexPredicateSpec parse_predicate(const std::string& text);

// Pure and deterministic; throws EvalError on division by zero, ln of a
// nonpositive value and the like, naming the offending subexpression and k.
Point eval_sequence(const SequenceSpec& spec, index_t k);
bool eval_predicate(const IndexPredicateSpec& pred, index_t k);
double eval_component(const Expr& e, index_t k);

// Builtin families:
//   EX_A, CUBE_INDICATOR, SQUARE_INDICATOR, LINEAR,
//   CONST:<v>, CONST:<v1>,<v2>, ALT:<a>,<b>, NOISY2D:<cx>,<cy>
// Unknown names throw NotFound.
SequenceSpec builtin(const std::string& name);

// Resolves a builtin name if it matches one, otherwise parses as DSL text.
SequenceSpec sequence_from_text_or_builtin(const std::string& text);

} // namespace roughstat::dsl
