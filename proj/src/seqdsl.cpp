#include "roughstat/seqdsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

namespace roughstat::dsl {

namespace {

// ---------------------------------------------------------------- lexer ---

enum class Tok {
    Number, Ident, KwIf, KwThen, KwElse, KwAnd, KwOr, KwNot,
    Plus, Minus, Star, Slash, Percent, Caret,
    Eq, Ne, Lt, Le, Gt, Ge,
    LParen, RParen, Comma, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
    double number = 0.0;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::KwIf: return "'if'";
        case Tok::KwThen: return "'then'";
        case Tok::KwElse: return "'else'";
        case Tok::KwAnd: return "'and'";
        case Tok::KwOr: return "'or'";
        case Tok::KwNot: return "'not'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Percent: return "'%'";
        case Tok::Caret: return "'^'";
        case Tok::Eq: return "'=='";
        case Tok::Ne: return "'!='";
        case Tok::Lt: return "'<'";
        case Tok::Le: return "'<='";
        case Tok::Gt: return "'>'";
        case Tok::Ge: return "'>='";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::End: return "end of input";
    }
    return "?";
}

[[noreturn]] void fail(std::size_t offset, const std::string& expected,
                       const std::string& found) {
    std::ostringstream msg;
    msg << "parse error at offset " << offset << ": expected " << expected
        << ", found " << found;
    throw ParseError(offset, expected, msg.str());
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < n && text[i] == '.') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(i, "digit after decimal point", i < n ? std::string(1, text[i]) : "end of input");
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            if (i < n && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t e = i + 1;
                if (e < n && (text[e] == '+' || text[e] == '-')) ++e;
                if (e < n && std::isdigit(static_cast<unsigned char>(text[e]))) {
                    i = e;
                    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                }
            }
            std::string lit = text.substr(start, i - start);
            double v;
            try {
                v = std::stod(lit);
            } catch (const std::out_of_range&) {
                fail(start, "representable number literal", lit);
            }
            out.push_back({Tok::Number, lit, start, v});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            std::string word = text.substr(start, i - start);
            Tok kind = Tok::Ident;
            if (word == "if") kind = Tok::KwIf;
            else if (word == "then") kind = Tok::KwThen;
            else if (word == "else") kind = Tok::KwElse;
            else if (word == "and") kind = Tok::KwAnd;
            else if (word == "or") kind = Tok::KwOr;
            else if (word == "not") kind = Tok::KwNot;
            out.push_back({kind, word, start});
            continue;
        }
        auto push1 = [&](Tok k) { out.push_back({k, text.substr(start, 1), start}); ++i; };
        auto push2 = [&](Tok k) { out.push_back({k, text.substr(start, 2), start}); i += 2; };
        switch (c) {
            case '+': push1(Tok::Plus); break;
            case '-': push1(Tok::Minus); break;
            case '*': push1(Tok::Star); break;
            case '/': push1(Tok::Slash); break;
            case '%': push1(Tok::Percent); break;
            case '^': push1(Tok::Caret); break;
            case '(': push1(Tok::LParen); break;
            case ')': push1(Tok::RParen); break;
            case ',': push1(Tok::Comma); break;
            case '=':
                if (i + 1 < n && text[i + 1] == '=') push2(Tok::Eq);
                else fail(start, "'=='", "'='");
                break;
            case '!':
                if (i + 1 < n && text[i + 1] == '=') push2(Tok::Ne);
                else fail(start, "'!='", "'!'");
                break;
            case '<':
                if (i + 1 < n && text[i + 1] == '=') push2(Tok::Le);
                else push1(Tok::Lt);
                break;
            case '>':
                if (i + 1 < n && text[i + 1] == '=') push2(Tok::Ge);
                else push1(Tok::Gt);
                break;
            default:
                fail(start, "token", "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::End, "", n});
    return out;
}

// --------------------------------------------------------------- parser ---

struct FunctionSig {
    int arity;
};

const std::map<std::string, FunctionSig>& function_table() {
    static const std::map<std::string, FunctionSig> table = {
        {"sin", {1}}, {"cos", {1}}, {"abs", {1}}, {"sqrt", {1}}, {"ln", {1}},
        {"floor", {1}}, {"pow", {2}}, {"is_square", {1}}, {"is_cube", {1}},
        {"is_power", {2}},
    };
    return table;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    // Top-level entry; allow_tuple permits "(e1, e2, ...)" as the whole input.
    ExprPtr parse_top(bool allow_tuple) {
        top_tuple_ok_ = allow_tuple;
        ExprPtr e = parse_expr(true);
        if (peek().kind != Tok::End)
            fail(peek().offset, "end of input", tok_name(peek().kind));
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) { ++pos_; return true; }
        return false;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(peek().offset, what, tok_name(peek().kind));
        return advance();
    }

    ExprPtr parse_expr(bool top = false) {
        ExprPtr lhs = parse_and(top);
        while (peek().kind == Tok::KwOr) {
            advance();
            lhs = make_binary(BinOp::Or, lhs, parse_and());
        }
        return lhs;
    }

    ExprPtr parse_and(bool top = false) {
        ExprPtr lhs = parse_not(top);
        while (peek().kind == Tok::KwAnd) {
            advance();
            lhs = make_binary(BinOp::And, lhs, parse_not());
        }
        return lhs;
    }

    ExprPtr parse_not(bool top = false) {
        if (peek().kind == Tok::KwNot) {
            advance();
            return make_unary(UnOp::Not, parse_cmp());
        }
        return parse_cmp(top);
    }

    ExprPtr parse_cmp(bool top = false) {
        ExprPtr lhs = parse_sum(top);
        BinOp op;
        switch (peek().kind) {
            case Tok::Eq: op = BinOp::Eq; break;
            case Tok::Ne: op = BinOp::Ne; break;
            case Tok::Lt: op = BinOp::Lt; break;
            case Tok::Le: op = BinOp::Le; break;
            case Tok::Gt: op = BinOp::Gt; break;
            case Tok::Ge: op = BinOp::Ge; break;
            default: return lhs;
        }
        advance();
        return make_binary(op, lhs, parse_sum());
    }

    ExprPtr parse_sum(bool top = false) {
        ExprPtr lhs = parse_prod(top);
        for (;;) {
            if (accept(Tok::Plus)) lhs = make_binary(BinOp::Add, lhs, parse_prod());
            else if (accept(Tok::Minus)) lhs = make_binary(BinOp::Sub, lhs, parse_prod());
            else return lhs;
        }
    }

    ExprPtr parse_prod(bool top = false) {
        ExprPtr lhs = parse_unary(top);
        for (;;) {
            if (accept(Tok::Star)) lhs = make_binary(BinOp::Mul, lhs, parse_unary());
            else if (accept(Tok::Slash)) lhs = make_binary(BinOp::Div, lhs, parse_unary());
            else if (accept(Tok::Percent)) lhs = make_binary(BinOp::Mod, lhs, parse_unary());
            else return lhs;
        }
    }

    ExprPtr parse_unary(bool top = false) {
        if (accept(Tok::Minus)) return make_unary(UnOp::Neg, parse_power());
        return parse_power(top);
    }

    ExprPtr parse_power(bool top = false) {
        ExprPtr base = parse_atom(top);
        if (accept(Tok::Caret)) return make_binary(BinOp::Pow, base, parse_unary());
        return base;
    }

    ExprPtr parse_atom(bool top = false) {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number:
                advance();
                return make_number(t.number);
            case Tok::KwIf: {
                advance();
                ExprPtr cond = parse_expr();
                expect(Tok::KwThen, "'then'");
                ExprPtr then_e = parse_expr();
                expect(Tok::KwElse, "'else'");
                ExprPtr else_e = parse_expr();
                return make_if(cond, then_e, else_e);
            }
            case Tok::LParen: {
                advance();
                ExprPtr first = parse_expr();
                if (peek().kind == Tok::Comma) {
                    if (!top || !top_tuple_ok_)
                        fail(peek().offset,
                             "')' (tuples are only allowed at the top level)",
                             tok_name(peek().kind));
                    auto tuple = std::make_shared<Expr>();
                    tuple->kind = Expr::Kind::Tuple;
                    tuple->children.push_back(first);
                    while (accept(Tok::Comma)) tuple->children.push_back(parse_expr());
                    expect(Tok::RParen, "')'");
                    return tuple;
                }
                expect(Tok::RParen, "')'");
                return first;
            }
            case Tok::Ident: {
                advance();
                if (t.text == "n" && peek().kind != Tok::LParen) return make_index();
                auto it = function_table().find(t.text);
                if (it == function_table().end())
                    fail(t.offset, "known identifier ('n' or a function name)",
                         "'" + t.text + "'");
                expect(Tok::LParen, "'(' after function name");
                std::vector<ExprPtr> args;
                if (peek().kind != Tok::RParen) {
                    args.push_back(parse_expr());
                    while (accept(Tok::Comma)) args.push_back(parse_expr());
                }
                expect(Tok::RParen, "')'");
                if (static_cast<int>(args.size()) != it->second.arity) {
                    std::ostringstream msg;
                    msg << "parse error at offset " << t.offset << ": function '"
                        << t.text << "' expects " << it->second.arity
                        << " argument(s), got " << args.size();
                    throw ParseError(t.offset, "correct argument count", msg.str());
                }
                return make_call(t.text, std::move(args));
            }
            default:
                fail(t.offset, "number, 'n', '(', 'if' or function call",
                     tok_name(t.kind));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool top_tuple_ok_ = false;
};

bool is_integral(double v) {
    return std::isfinite(v) && std::nearbyint(v) == v && std::abs(v) < 9.007199254740992e15;
}

[[noreturn]] void eval_fail(const Expr& where, index_t k, const std::string& reason) {
    std::string sub = pretty_print(where);
    throw EvalError(sub, k, "eval error at k=" + std::to_string(k) + " in " + sub +
                                ": " + reason);
}

// Exact binary exponentiation for integral exponents; pow(-1, n) must come
// out as exactly +-1 so parity predicates stay exact.
double eval_pow(const Expr& node, index_t k, double base, double expo) {
    double result;
    if (is_integral(expo)) {
        auto e = static_cast<std::int64_t>(expo);
        bool negative = e < 0;
        std::uint64_t m = negative ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
        result = 1.0;
        double b = base;
        while (m != 0) {
            if (m & 1u) result *= b;
            m >>= 1;
            if (m != 0) b *= b;
        }
        if (negative) result = 1.0 / result;
    } else {
        result = std::pow(base, expo);
    }
    if (!std::isfinite(result)) eval_fail(node, k, "non-finite power result");
    return result;
}

std::int64_t integer_sqrt(std::int64_t v) {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

std::int64_t integer_cbrt(std::int64_t v) {
    auto s = static_cast<std::int64_t>(std::llround(std::cbrt(static_cast<double>(v))));
    while (s > 0 && s * s * s > v) --s;
    while ((s + 1) * (s + 1) * (s + 1) <= v) ++s;
    return s;
}

bool is_perfect_square(double v) {
    if (!is_integral(v) || v < 0.0) return false;
    auto n = static_cast<std::int64_t>(v);
    std::int64_t s = integer_sqrt(n);
    return s * s == n;
}

bool is_perfect_cube(double v) {
    if (!is_integral(v)) return false;
    auto n = static_cast<std::int64_t>(v);
    std::int64_t m = n < 0 ? -n : n;
    std::int64_t s = integer_cbrt(m);
    return s * s * s == m;
}

// m^p with overflow guard; returns > limit as soon as it exceeds it.
std::int64_t checked_ipow(std::int64_t m, int p, std::int64_t limit) {
    __int128 acc = 1;
    for (int i = 0; i < p; ++i) {
        acc *= m;
        if (acc > limit) return limit + 1;
    }
    return static_cast<std::int64_t>(acc);
}

bool is_perfect_power(const Expr& node, index_t k, double v, double pv) {
    if (!is_integral(pv) || pv < 1.0 || pv > 63.0)
        eval_fail(node, k, "is_power exponent must be an integer in [1, 63]");
    int p = static_cast<int>(pv);
    if (!is_integral(v)) return false;
    auto n = static_cast<std::int64_t>(v);
    if (n < 0) {
        if (p % 2 == 0) return false;
        n = -n;
    }
    if (p == 1) return true;
    auto root = static_cast<std::int64_t>(
        std::llround(std::pow(static_cast<double>(n), 1.0 / p)));
    for (std::int64_t m = std::max<std::int64_t>(root - 2, 0); m <= root + 2; ++m)
        if (checked_ipow(m, p, n) == n) return true;
    return false;
}

double eval_call(const Expr& e, index_t k) {
    double a0 = eval_component(*e.children[0], k);
    const std::string& f = e.callee;
    if (f == "sin") return std::sin(a0);
    if (f == "cos") return std::cos(a0);
    if (f == "abs") return std::abs(a0);
    if (f == "floor") return std::floor(a0);
    if (f == "sqrt") {
        if (a0 < 0.0) eval_fail(e, k, "sqrt of negative value");
        return std::sqrt(a0);
    }
    if (f == "ln") {
        if (a0 <= 0.0) eval_fail(e, k, "ln of nonpositive value");
        return std::log(a0);
    }
    if (f == "is_square") return is_perfect_square(a0) ? 1.0 : 0.0;
    if (f == "is_cube") return is_perfect_cube(a0) ? 1.0 : 0.0;
    double a1 = eval_component(*e.children[1], k);
    if (f == "pow") return eval_pow(e, k, a0, a1);
    if (f == "is_power") return is_perfect_power(e, k, a0, a1) ? 1.0 : 0.0;
    eval_fail(e, k, "unknown function");
}

} // namespace

// ------------------------------------------------------------ AST nodes ---

ExprPtr make_number(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Number;
    e->number = v;
    return e;
}

ExprPtr make_index() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Index;
    return e;
}

ExprPtr make_unary(UnOp op, ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unary;
    e->un_op = op;
    e->children.push_back(std::move(child));
    return e;
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->bin_op = op;
    e->children.push_back(std::move(lhs));
    e->children.push_back(std::move(rhs));
    return e;
}

ExprPtr make_call(std::string callee, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Call;
    e->callee = std::move(callee);
    e->children = std::move(args);
    return e;
}

ExprPtr make_if(ExprPtr cond, ExprPtr then_e, ExprPtr else_e) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::If;
    e->children = {std::move(cond), std::move(then_e), std::move(else_e)};
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Number:
            // bitwise compare; round-trip printing must preserve the value
            return a.number == b.number ||
                   (std::isnan(a.number) && std::isnan(b.number));
        case Expr::Kind::Index: return true;
        case Expr::Kind::Unary:
            if (a.un_op != b.un_op) return false;
            break;
        case Expr::Kind::Binary:
            if (a.bin_op != b.bin_op) return false;
            break;
        case Expr::Kind::Call:
            if (a.callee != b.callee) return false;
            break;
        case Expr::Kind::If:
        case Expr::Kind::Tuple: break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!expr_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

namespace {

const char* bin_op_text(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "%";
        case BinOp::Pow: return "^";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::And: return "and";
        case BinOp::Or: return "or";
    }
    return "?";
}

void print_number(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

// Fully parenthesized so that reparsing yields a structurally equal AST.
void print_expr(std::ostream& os, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number:
            print_number(os, e.number);
            break;
        case Expr::Kind::Index:
            os << 'n';
            break;
        case Expr::Kind::Unary:
            os << '(' << (e.un_op == UnOp::Neg ? "-" : "not ");
            print_expr(os, *e.children[0]);
            os << ')';
            break;
        case Expr::Kind::Binary:
            os << '(';
            print_expr(os, *e.children[0]);
            os << ' ' << bin_op_text(e.bin_op) << ' ';
            print_expr(os, *e.children[1]);
            os << ')';
            break;
        case Expr::Kind::Call:
            os << e.callee << '(';
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) os << ", ";
                print_expr(os, *e.children[i]);
            }
            os << ')';
            break;
        case Expr::Kind::If:
            os << "(if ";
            print_expr(os, *e.children[0]);
            os << " then ";
            print_expr(os, *e.children[1]);
            os << " else ";
            print_expr(os, *e.children[2]);
            os << ')';
            break;
        case Expr::Kind::Tuple:
            os << '(';
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) os << ", ";
                print_expr(os, *e.children[i]);
            }
            os << ')';
            break;
    }
}

} // namespace

std::string pretty_print(const Expr& e) {
    std::ostringstream os;
    print_expr(os, e);
    return os.str();
}

std::string pretty_print(const SequenceSpec& spec) {
    if (spec.dim() == 1) return pretty_print(*spec.components[0]);
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < spec.dim(); ++i) {
        if (i) os << ", ";
        print_expr(os, *spec.components[static_cast<std::size_t>(i)]);
    }
    os << ')';
    return os.str();
}

bool spec_equal(const SequenceSpec& a, const SequenceSpec& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        auto idx = static_cast<std::size_t>(i);
        if (!expr_equal(*a.components[idx], *b.components[idx])) return false;
    }
    return true;
}

// -------------------------------------------------------------- parsing ---

SequenceSpec parse_sequence(const std::string& text) {
    if (text.empty()) throw ParseError(0, "nonempty input", "parse error: empty input");
    Parser parser(text);
    ExprPtr root = parser.parse_top(/*allow_tuple=*/true);
    SequenceSpec spec;
    spec.source_text = text;
    if (root->kind == Expr::Kind::Tuple) spec.components = root->children;
    else spec.components = {root};
    return spec;
}

IndexPredicateSpec parse_predicate(const std::string& text) {
    if (text.empty()) throw ParseError(0, "nonempty input", "parse error: empty input");
    Parser parser(text);
    return IndexPredicateSpec{parser.parse_top(/*allow_tuple=*/false), text};
}

// ------------------------------------------------------------ evaluation ---

double eval_component(const Expr& e, index_t k) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.number;
        case Expr::Kind::Index: return static_cast<double>(k);
        case Expr::Kind::Unary: {
            double v = eval_component(*e.children[0], k);
            return e.un_op == UnOp::Neg ? -v : (v == 0.0 ? 1.0 : 0.0);
        }
        case Expr::Kind::Binary: {
            if (e.bin_op == BinOp::And) {
                if (eval_component(*e.children[0], k) == 0.0) return 0.0;
                return eval_component(*e.children[1], k) != 0.0 ? 1.0 : 0.0;
            }
            if (e.bin_op == BinOp::Or) {
                if (eval_component(*e.children[0], k) != 0.0) return 1.0;
                return eval_component(*e.children[1], k) != 0.0 ? 1.0 : 0.0;
            }
            double lhs = eval_component(*e.children[0], k);
            double rhs = eval_component(*e.children[1], k);
            switch (e.bin_op) {
                case BinOp::Add: return lhs + rhs;
                case BinOp::Sub: return lhs - rhs;
                case BinOp::Mul: return lhs * rhs;
                case BinOp::Div:
                    if (rhs == 0.0) eval_fail(e, k, "division by zero");
                    return lhs / rhs;
                case BinOp::Mod: {
                    if (!is_integral(lhs) || !is_integral(rhs))
                        eval_fail(e, k, "'%' requires integral operands");
                    if (rhs == 0.0) eval_fail(e, k, "modulo by zero");
                    auto li = static_cast<std::int64_t>(lhs);
                    auto ri = static_cast<std::int64_t>(rhs);
                    return static_cast<double>(li % ri);
                }
                case BinOp::Pow: return eval_pow(e, k, lhs, rhs);
                case BinOp::Eq: return lhs == rhs ? 1.0 : 0.0;
                case BinOp::Ne: return lhs != rhs ? 1.0 : 0.0;
                case BinOp::Lt: return lhs < rhs ? 1.0 : 0.0;
                case BinOp::Le: return lhs <= rhs ? 1.0 : 0.0;
                case BinOp::Gt: return lhs > rhs ? 1.0 : 0.0;
                case BinOp::Ge: return lhs >= rhs ? 1.0 : 0.0;
                default: break;
            }
            eval_fail(e, k, "unhandled binary operator");
        }
        case Expr::Kind::Call: return eval_call(e, k);
        case Expr::Kind::If:
            return eval_component(*e.children[0], k) != 0.0
                       ? eval_component(*e.children[1], k)
                       : eval_component(*e.children[2], k);
        case Expr::Kind::Tuple:
            eval_fail(e, k, "tuple in scalar context");
    }
    eval_fail(e, k, "unhandled expression kind");
}

Point eval_sequence(const SequenceSpec& spec, index_t k) {
    if (k < 1) throw InvalidInput("eval_sequence: index must be >= 1");
    Point p;
    p.coords.reserve(spec.components.size());
    for (const ExprPtr& component : spec.components) {
        double v = eval_component(*component, k);
        if (!std::isfinite(v)) eval_fail(*component, k, "non-finite component value");
        p.coords.push_back(v);
    }
    return p;
}

bool eval_predicate(const IndexPredicateSpec& pred, index_t k) {
    return eval_component(*pred.ast, k) != 0.0;
}

// -------------------------------------------------------------- builtins ---

namespace {

// "NAME:payload" -> payload split on commas; empty when no payload.
bool split_builtin(const std::string& name, const std::string& prefix,
                   std::vector<std::string>& parts) {
    if (name.rfind(prefix, 0) != 0) return false;
    parts.clear();
    std::string payload = name.substr(prefix.size());
    std::size_t start = 0;
    while (true) {
        std::size_t comma = payload.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(payload.substr(start));
            break;
        }
        parts.push_back(payload.substr(start, comma - start));
        start = comma + 1;
    }
    return true;
}

} // namespace

SequenceSpec builtin(const std::string& name) {
    if (name == "EX_A")
        return parse_sequence("if is_square(n) then n else pow(-1, n)");
    if (name == "CUBE_INDICATOR")
        return parse_sequence("if is_cube(n) then 1 else 0");
    if (name == "SQUARE_INDICATOR")
        return parse_sequence("if is_square(n) then 1 else 0");
    if (name == "LINEAR") return parse_sequence("n");

    std::vector<std::string> parts;
    if (split_builtin(name, "CONST:", parts)) {
        if (parts.size() == 1) return parse_sequence(parts[0]);
        if (parts.size() == 2)
            return parse_sequence("(" + parts[0] + ", " + parts[1] + ")");
        throw NotFound("builtin CONST supports 1 or 2 components: " + name);
    }
    if (split_builtin(name, "ALT:", parts)) {
        if (parts.size() != 2) throw NotFound("builtin ALT needs two values: " + name);
        return parse_sequence("if n % 2 == 1 then (" + parts[0] + ") else (" +
                              parts[1] + ")");
    }
    // Noisy statistically-convergent pair: shrinking alternating perturbation
    // around the centre, with a fixed off-centre excursion on the squares.
    if (split_builtin(name, "NOISY2D:", parts)) {
        if (parts.size() != 2)
            throw NotFound("builtin NOISY2D needs a centre cx,cy: " + name);
        const std::string& cx = parts[0];
        const std::string& cy = parts[1];
        return parse_sequence(
            "((" + cx + ") + (if is_square(n) then 3 else pow(-1, n) / n), (" +
            cy + ") + (if is_square(n) then -2 else pow(-1, n + 1) / n))");
    }
    throw NotFound("unknown builtin sequence: " + name);
}

SequenceSpec sequence_from_text_or_builtin(const std::string& text) {
    try {
        return builtin(text);
    } catch (const NotFound&) {
        return parse_sequence(text);
    }
}

} // namespace roughstat::dsl
