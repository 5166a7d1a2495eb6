#include "tlab/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

namespace tlab {

const char* func_name(FuncKind f) {
    switch (f) {
        case FuncKind::exp: return "exp";
        case FuncKind::ln: return "ln";
        case FuncKind::sinh: return "sinh";
        case FuncKind::cosh: return "cosh";
        case FuncKind::tanh: return "tanh";
        case FuncKind::sech: return "sech";
        case FuncKind::sqrt: return "sqrt";
    }
    return "?";
}

namespace {

std::optional<FuncKind> lookup_func(const std::string& name) {
    static const std::map<std::string, FuncKind> table = {
        {"exp", FuncKind::exp},   {"ln", FuncKind::ln},     {"sinh", FuncKind::sinh},
        {"cosh", FuncKind::cosh}, {"tanh", FuncKind::tanh}, {"sech", FuncKind::sech},
        {"sqrt", FuncKind::sqrt},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    double number = 0.0;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_.line = line_;
        current_.column = col_;
        if (pos_ >= src_.size()) {
            current_.kind = Token::Kind::end;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': single(Token::Kind::plus); return;
            case '-': single(Token::Kind::minus); return;
            case '*': single(Token::Kind::star); return;
            case '/': single(Token::Kind::slash); return;
            case '^': single(Token::Kind::caret); return;
            case '(': single(Token::Kind::lparen); return;
            case ')': single(Token::Kind::rparen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            lex_ident();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void single(Token::Kind k) {
        current_.kind = k;
        current_.text = src_[pos_];
        ++pos_;
        ++col_;
    }

    void lex_number() {
        const size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            size_t probe = pos_ + 1;
            if (probe < src_.size() && (src_[probe] == '+' || src_[probe] == '-')) ++probe;
            if (probe < src_.size() && std::isdigit(static_cast<unsigned char>(src_[probe]))) {
                pos_ = probe;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
        }
        const std::string text(src_.substr(start, pos_ - start));
        if (text == ".") throw ParseError(line_, col_, "malformed number");
        try {
            current_.number = std::stod(text);
        } catch (const std::exception&) {
            throw ParseError(line_, col_, "malformed number '" + text + "'");
        }
        current_.kind = Token::Kind::number;
        current_.text = text;
        col_ += static_cast<int>(pos_ - start);
    }

    void lex_ident() {
        const size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_'))
            ++pos_;
        current_.kind = Token::Kind::ident;
        current_.text = std::string(src_.substr(start, pos_ - start));
        col_ += static_cast<int>(pos_ - start);
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view src, int num_vars) : lex_(src), num_vars_(num_vars) {}

    Expression::NodePtr parse() {
        auto node = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError(t.line, t.column, "unexpected trailing input '" + t.text + "'");
        return node;
    }

private:
    using Node = Expression::Node;
    using NodeKind = Expression::NodeKind;
    using NodePtr = Expression::NodePtr;

    static NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->has_vars = lhs->has_vars || rhs->has_vars;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    NodePtr parse_expr() {
        NodePtr node = parse_term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::plus || t.kind == Token::Kind::minus) {
                const bool add = t.kind == Token::Kind::plus;
                lex_.take();
                node = make_binary(add ? NodeKind::add : NodeKind::sub, node, parse_term());
            } else {
                return node;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr node = parse_factor();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::star || t.kind == Token::Kind::slash) {
                const bool mul = t.kind == Token::Kind::star;
                lex_.take();
                node = make_binary(mul ? NodeKind::mul : NodeKind::div, node, parse_factor());
            } else {
                return node;
            }
        }
    }

    NodePtr parse_factor() {
        NodePtr node = parse_base();
        if (lex_.peek().kind == Token::Kind::caret) {
            lex_.take();
            node = make_binary(NodeKind::pow, node, parse_factor()); // right-associative
        }
        return node;
    }

    NodePtr parse_base() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number: {
                auto n = std::make_shared<Node>();
                n->kind = NodeKind::number;
                n->number = t.number;
                return n;
            }
            case Token::Kind::minus: {
                auto n = std::make_shared<Node>();
                n->kind = NodeKind::neg;
                n->lhs = parse_base();
                n->has_vars = n->lhs->has_vars;
                return n;
            }
            case Token::Kind::lparen: {
                auto inner = parse_expr();
                expect_rparen();
                return inner;
            }
            case Token::Kind::ident: return parse_ident(t);
            default:
                throw ParseError(t.line, t.column,
                                 "expected a number, identifier or '(', got '" + t.text + "'");
        }
    }

    NodePtr parse_ident(const Token& t) {
        const auto func = lookup_func(t.text);
        const bool has_call = lex_.peek().kind == Token::Kind::lparen;
        if (func) {
            if (!has_call)
                throw ParseError(t.line, t.column,
                                 "function '" + t.text + "' requires an argument list");
            lex_.take();
            auto arg = parse_expr();
            expect_rparen();
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::call;
            n->func = *func;
            n->lhs = std::move(arg);
            n->has_vars = n->lhs->has_vars;
            return n;
        }
        const int index = variable_index(t);
        if (has_call)
            throw ParseError(t.line, t.column, "variable '" + t.text + "' is not callable");
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::variable;
        n->var_index = index;
        n->has_vars = true;
        return n;
    }

    int variable_index(const Token& t) {
        const std::string& name = t.text;
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits && name[1] != '0') {
                const int idx = std::stoi(name.substr(1));
                if (idx >= 1 && idx <= num_vars_) return idx - 1;
                throw ParseError(t.line, t.column,
                                 "unknown identifier '" + name + "': only x1..x" +
                                     std::to_string(num_vars_) + " are in scope");
            }
        }
        throw ParseError(t.line, t.column, "unknown identifier '" + name + "'");
    }

    void expect_rparen() {
        const Token t = lex_.take();
        if (t.kind != Token::Kind::rparen)
            throw ParseError(t.line, t.column, "expected ')', got '" + t.text + "'");
    }

    Lexer lex_;
    int num_vars_;
};

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Expression Expression::parse(std::string_view source, int num_vars) {
    if (num_vars < 1) throw InvalidInputError("expression needs at least one variable in scope");
    Parser parser(source, num_vars);
    return Expression(parser.parse(), num_vars);
}

// Levels follow the grammar: expr=1, term=2, factor(pow)=3, base=4.
std::string Expression::print_node(const Node& node, int min_level) {
    auto wrap = [&](const std::string& text, int level) {
        return level < min_level ? "(" + text + ")" : text;
    };
    switch (node.kind) {
        case NodeKind::number: return format_number(node.number);
        case NodeKind::variable: return "x" + std::to_string(node.var_index + 1);
        case NodeKind::add:
            return wrap(print_node(*node.lhs, 1) + "+" + print_node(*node.rhs, 2), 1);
        case NodeKind::sub:
            return wrap(print_node(*node.lhs, 1) + "-" + print_node(*node.rhs, 2), 1);
        case NodeKind::mul:
            return wrap(print_node(*node.lhs, 2) + "*" + print_node(*node.rhs, 3), 2);
        case NodeKind::div:
            return wrap(print_node(*node.lhs, 2) + "/" + print_node(*node.rhs, 3), 2);
        case NodeKind::pow:
            return wrap(print_node(*node.lhs, 4) + "^" + print_node(*node.rhs, 3), 3);
        case NodeKind::neg: return wrap("-" + print_node(*node.lhs, 4), 4);
        case NodeKind::call:
            return std::string(func_name(node.func)) + "(" + print_node(*node.lhs, 1) + ")";
    }
    return "?";
}

std::string Expression::print() const {
    if (!root_) return "";
    return print_node(*root_, 1);
}

namespace {

bool nodes_equal(const Expression::Node& a, const Expression::Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expression::NodeKind::number: return a.number == b.number;
        case Expression::NodeKind::variable: return a.var_index == b.var_index;
        case Expression::NodeKind::call:
            return a.func == b.func && nodes_equal(*a.lhs, *b.lhs);
        case Expression::NodeKind::neg: return nodes_equal(*a.lhs, *b.lhs);
        default: return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    }
}

} // namespace

bool Expression::structurally_equal(const Expression& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return nodes_equal(*root_, *other.root_);
}

void Expression::rethrow_with_context(const EvalDomainError& e, const Node& node) {
    if (!e.subexpression().empty()) throw e;
    throw EvalDomainError(e.message(), print_node(node, 1));
}

double Expression::constant_fold(const Node& node) {
    const std::vector<double> empty{0.0};
    return eval_node<double>(node, empty);
}

Jet2 analytic_jet(const std::vector<Expression>& exprs, const std::vector<double>& x,
                  const SpaceSignature& sig) {
    if (static_cast<int>(exprs.size()) != sig.n)
        throw InvalidInputError("analytic_jet: expected n graph functions");
    if (static_cast<int>(x.size()) != sig.m)
        throw InvalidInputError("analytic_jet: expected m coordinates");
    const int m = sig.m;
    std::vector<Taylor2<double>> seeds;
    seeds.reserve(m);
    for (int i = 0; i < m; ++i) seeds.push_back(Taylor2<double>::variable(x[i], i, m));

    Jet2 jet(sig);
    jet.base = x;
    for (int a = 0; a < sig.n; ++a) {
        const auto r = exprs[a].eval(seeds);
        if (!std::isfinite(r.v)) throw EvalDomainError("non-finite value", exprs[a].print());
        jet.value[a] = r.v;
        for (int i = 0; i < m; ++i) {
            if (!std::isfinite(r.d1[i])) throw EvalDomainError("non-finite derivative", exprs[a].print());
            jet.du(a, i) = r.d1[i];
            for (int j = 0; j < m; ++j) {
                if (!std::isfinite(r.hess(i, j)))
                    throw EvalDomainError("non-finite second derivative", exprs[a].print());
                jet.d2u(a, i, j) = r.hess(i, j);
            }
        }
    }
    return jet;
}

PointJet<Taylor2<double>> analytic_nested_jet(const std::vector<Expression>& exprs,
                                              const std::vector<double>& x,
                                              const SpaceSignature& sig) {
    if (static_cast<int>(exprs.size()) != sig.n)
        throw InvalidInputError("analytic_nested_jet: expected n graph functions");
    if (static_cast<int>(x.size()) != sig.m)
        throw InvalidInputError("analytic_nested_jet: expected m coordinates");
    using T2 = Taylor2<double>;
    using N2 = Taylor2<T2>;
    const int m = sig.m;

    std::vector<N2> seeds;
    seeds.reserve(m);
    for (int i = 0; i < m; ++i)
        seeds.push_back(N2::variable(T2::variable(x[i], i, m), i, m));

    PointJet<T2> jet(sig);
    for (int i = 0; i < m; ++i) jet.base[i] = T2::variable(x[i], i, m);

    // A component selected from each layer of the nested result gives the
    // germ of that component as a function of x.
    auto project = [&](const N2& r, auto&& sel) {
        T2 out = T2::constant(sel(r.v), m);
        for (int k = 0; k < m; ++k) out.d1[k] = sel(r.d1[k]);
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) out.hess(k, l) = sel(r.hess(k, l));
        return out;
    };

    for (int a = 0; a < sig.n; ++a) {
        const N2 r = exprs[a].eval(seeds);
        jet.value[a] = project(r, [](const T2& t) { return t.v; });
        for (int i = 0; i < m; ++i)
            jet.du(a, i) = project(r, [i](const T2& t) { return t.d1[i]; });
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                jet.d2u(a, i, j) = project(r, [i, j](const T2& t) { return t.hess(i, j); });
    }
    return jet;
}

} // namespace tlab
