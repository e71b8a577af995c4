#ifndef LGS_ALGEBRA_HH
#define LGS_ALGEBRA_HH

#include <lgs/guest.hh>

#include <memory>
#include <variant>

namespace lgs
{
    /* Node decorations: membership of the must / unique / exclusive sets,
     * and `nil` meaning the empty set belongs to the node's choice family. */
    struct Flags
    {
        bool must = false;
        bool uniq = false;
        bool excl = false;
        bool nil = false;

        auto operator<=>(const Flags &) const = default;
    };

    struct UnaryTerm
    {
        NodeId name;
        Flags flags;

        auto operator<=>(const UnaryTerm &) const = default;
    };

    struct GuestExpr;
    using GuestExprPtr = std::shared_ptr<const GuestExpr>;

    struct ExprEmpty
    {
    };

    struct ExprUnary
    {
        UnaryTerm node;
    };

    struct ExprArrow
    {
        UnaryTerm src;
        Symbol label;
        UnaryTerm dst;
    };

    struct ExprAdd
    {
        GuestExprPtr left, right;
    };

    struct ExprMul
    {
        GuestExprPtr left, right;
    };

    struct ExprRename
    {
        GuestExprPtr inner;
        NodeId from, to;
    };

    struct GuestExpr
    {
        std::variant<ExprEmpty, ExprUnary, ExprArrow, ExprAdd, ExprMul, ExprRename> term;
    };

    auto expr_empty() -> GuestExprPtr;
    auto expr_unary(UnaryTerm) -> GuestExprPtr;
    auto expr_arrow(UnaryTerm src, Symbol label, UnaryTerm dst) -> GuestExprPtr;
    auto expr_add(GuestExprPtr, GuestExprPtr) -> GuestExprPtr;
    auto expr_mul(GuestExprPtr, GuestExprPtr) -> GuestExprPtr;
    auto expr_rename(GuestExprPtr, NodeId from, NodeId to) -> GuestExprPtr;

    auto unary(const NodeId & name, const Flags & flags) -> Guest;
    auto arrow(const UnaryTerm & src, const Symbol & label, const UnaryTerm & dst) -> Guest;

    // componentwise union; choice families of shared nodes are unioned
    auto add(const Guest & g1, const Guest & g2) -> Guest;

    // as add, but choice families of shared nodes combine by pairwise union
    auto mul(const Guest & g1, const Guest & g2) -> Guest;

    enum class RenameMode
    {
        strict, // target name must be fresh
        merge   // target may exist: edges are redirected, choices unioned
    };

    auto rename(const Guest & g, const NodeId & from, const NodeId & to,
        RenameMode mode = RenameMode::strict) -> Guest;

    // evaluation without the final invariant check, for algebraic-law work
    auto eval_unchecked(const GuestExprPtr & expr) -> Guest;

    // evaluates and verifies the result is a well-formed guest
    auto eval(const GuestExprPtr & expr) -> Guest;

    /* Sum-of-products expression denoting g: one decorated unary per node
     * plus one product of arrows per nonempty choice set. Round-trips
     * exactly when the alphabet carries no unused symbols. */
    auto normal_form(const Guest & g) -> GuestExprPtr;

    auto is_normal_form(const GuestExprPtr & expr) -> bool;

    // guest over graph whose choice picks one out-edge at a time
    auto linear_choice(const HostGraph & graph, const std::set<NodeId> & must) -> Guest;
}

#endif
