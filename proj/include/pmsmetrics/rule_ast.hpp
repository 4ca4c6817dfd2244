#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pmsmetrics::rules {

// Identifier names in the AST are canonicalized to upper case. Read vs.
// write role is positional: VarRef and call arguments are reads, action
// and equation targets and loop variables are writes.

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinaryOp {
    Or,
    And,
    Less,
    LessEq,
    Greater,
    GreaterEq,
    Equal,
    NotEqual,
    Add,
    Subtract,
    Multiply,
    Divide,
};

enum class UnaryOp { Not, Negate };

struct NumberLiteral {
    double value = 0.0;
};

struct BoolLiteral {
    bool value = false;
};

struct VarRef {
    std::string name;
};

struct Call {
    std::string callee;
    std::vector<ExprPtr> args;
};

struct Unary {
    UnaryOp op;
    ExprPtr operand;
};

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<NumberLiteral, BoolLiteral, VarRef, Call, Unary, Binary> node;
};

/// `SET target = value` (the SET keyword is optional in action position).
struct Action {
    std::string target;
    ExprPtr value;
};

struct IfStatement {
    ExprPtr condition;
    std::vector<Action> then_actions;
    std::optional<std::vector<Action>> else_actions;
};

struct SwitchCase {
    ExprPtr guard;
    std::vector<Action> actions;
};

struct SwitchStatement {
    ExprPtr scrutinee;
    std::vector<SwitchCase> cases; // at least one
    std::optional<std::vector<Action>> default_actions;
};

/// `TARGET = expr` or `TARGET(PARAM) = expr`. With a parameter this defines
/// a reusable equation whose formal binds at each call site.
struct EquationStatement {
    std::string target;
    std::optional<std::string> parameter;
    ExprPtr expression;
};

struct ActionStatement {
    Action action;
};

enum class LoopKind { While, For };

struct Statement;

struct LoopStatement {
    LoopKind kind;
    std::optional<std::string> variable; // For only
    ExprPtr condition;                   // While condition, or For start value
    ExprPtr limit;                       // For only
    std::vector<Statement> body;
};

struct Statement {
    std::variant<IfStatement, SwitchStatement, EquationStatement, ActionStatement, LoopStatement> node;
};

struct RuleModuleAst {
    std::vector<Statement> statements;
};

} // namespace pmsmetrics::rules
