#pragma once

// A small arithmetic expression language for graph functions and boundary
// data. Grammar (^ right-associative, implicit multiplication rejected):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' factor)?
//   base   := number | ident | ident '(' expr ')' | '(' expr ')' | '-' base
//
// Identifiers: x1..xm plus exp, ln, sinh, cosh, tanh, sech, sqrt.
// Evaluation is templated on the scalar, so jets of any order come out of the
// same tree; out-of-domain evaluation throws EvalDomainError naming the
// offending subexpression instead of producing NaN.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/jet2.hpp"
#include "tlab/taylor2.hpp"

namespace tlab {

enum class FuncKind { exp, ln, sinh, cosh, tanh, sech, sqrt };

const char* func_name(FuncKind f);

class Expression {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class NodeKind { number, variable, add, sub, mul, div, pow, neg, call };

    struct Node {
        NodeKind kind;
        double number = 0.0;   // NodeKind::number
        int var_index = -1;    // NodeKind::variable
        FuncKind func{};       // NodeKind::call
        NodePtr lhs, rhs;      // binary ops; unary ops use lhs only
        bool has_vars = false;
    };

    Expression() = default;

    /// Throws ParseError (with line/column) on malformed input, including
    /// unknown identifiers and function-arity misuse.
    static Expression parse(std::string_view source, int num_vars);

    std::string print() const;
    int num_vars() const { return num_vars_; }
    bool has_variables() const { return root_ && root_->has_vars; }
    bool structurally_equal(const Expression& other) const;

    template <class S>
    S eval(const std::vector<S>& x) const {
        if (!root_) throw InvalidInputError("empty expression");
        if (static_cast<int>(x.size()) < num_vars_)
            throw InvalidInputError("expression evaluated with too few variables");
        return eval_node<S>(*root_, x);
    }

    double operator()(const std::vector<double>& x) const { return eval(x); }

private:
    explicit Expression(NodePtr root, int num_vars) : root_(std::move(root)), num_vars_(num_vars) {}

    static std::string print_node(const Node& node, int min_level);

    template <class S>
    static S eval_node(const Node& node, const std::vector<S>& x) {
        switch (node.kind) {
            case NodeKind::number: return from_constant(node.number, x[0]);
            case NodeKind::variable: return x[node.var_index];
            case NodeKind::add: return eval_node<S>(*node.lhs, x) + eval_node<S>(*node.rhs, x);
            case NodeKind::sub: return eval_node<S>(*node.lhs, x) - eval_node<S>(*node.rhs, x);
            case NodeKind::mul: return eval_node<S>(*node.lhs, x) * eval_node<S>(*node.rhs, x);
            case NodeKind::neg: return -eval_node<S>(*node.lhs, x);
            case NodeKind::div: {
                const S num = eval_node<S>(*node.lhs, x);
                const S den = eval_node<S>(*node.rhs, x);
                try {
                    return num / den;
                } catch (const EvalDomainError& e) {
                    rethrow_with_context(e, node);
                }
            }
            case NodeKind::pow: {
                const S base = eval_node<S>(*node.lhs, x);
                try {
                    if (!node.rhs->has_vars) {
                        return pow_const(base, constant_fold(*node.rhs));
                    }
                    const S expo = eval_node<S>(*node.rhs, x);
                    return exp(expo * log(base));
                } catch (const EvalDomainError& e) {
                    rethrow_with_context(e, node);
                }
            }
            case NodeKind::call: {
                const S arg = eval_node<S>(*node.lhs, x);
                try {
                    switch (node.func) {
                        case FuncKind::exp: return exp(arg);
                        case FuncKind::ln: return log(arg);
                        case FuncKind::sinh: return sinh(arg);
                        case FuncKind::cosh: return cosh(arg);
                        case FuncKind::tanh: return tanh(arg);
                        case FuncKind::sech: return sech(arg);
                        case FuncKind::sqrt: return sqrt(arg);
                    }
                    throw InvalidInputError("unhandled function");
                } catch (const EvalDomainError& e) {
                    rethrow_with_context(e, node);
                }
            }
        }
        throw InvalidInputError("unhandled node kind");
    }

    [[noreturn]] static void rethrow_with_context(const EvalDomainError& e, const Node& node);
    static double constant_fold(const Node& node);

    NodePtr root_;
    int num_vars_ = 0;
};

/// Exact second-order jet of the n graph functions at x.
Jet2 analytic_jet(const std::vector<Expression>& exprs, const std::vector<double>& x,
                  const SpaceSignature& sig);

/// The same jet with every entry carrying its own first and second
/// x-derivatives (fourth-order information overall). Feeding this into the
/// geometry kernel differentiates derived scalar fields exactly.
PointJet<Taylor2<double>> analytic_nested_jet(const std::vector<Expression>& exprs,
                                              const std::vector<double>& x,
                                              const SpaceSignature& sig);

} // namespace tlab
