#ifndef LGS_REGEX_HH
#define LGS_REGEX_HH

#include <lgs/graph.hh>

#include <memory>
#include <set>
#include <string>
#include <variant>

namespace lgs
{
    /* Syntax of epsilon-free regular expressions: the empty language,
     * single symbols, concatenation, union and plus. No construct produces
     * the empty word. */
    struct RegexAst;
    using RegexPtr = std::shared_ptr<const RegexAst>;

    struct ReEmpty
    {
    };

    struct ReLit
    {
        Symbol sym;
    };

    struct ReConcat
    {
        RegexPtr left, right;
    };

    struct ReUnion
    {
        RegexPtr left, right;
    };

    struct RePlus
    {
        RegexPtr inner;
    };

    struct RegexAst
    {
        std::variant<ReEmpty, ReLit, ReConcat, ReUnion, RePlus> term;
    };

    auto re_empty() -> RegexPtr;
    auto re_lit(Symbol) -> RegexPtr;
    auto re_concat(RegexPtr, RegexPtr) -> RegexPtr;
    auto re_union(RegexPtr, RegexPtr) -> RegexPtr;
    auto re_plus(RegexPtr) -> RegexPtr;

    /* Grammar: expr := alt; alt := cat ('|' cat)*; cat := rep+;
     * rep := atom '+'*; atom := LITERAL | '(' expr ')' | '∅'.
     * LITERAL is one alphanumeric symbol; whitespace is skipped.
     * '*', '?' and 'ε' are rejected with a hint. */
    auto parse_regex(const std::string & text) -> RegexPtr;

    /* Rewrites the empty language out of composites: ∅·A = A·∅ = ∅,
     * ∅|A = A|∅ = A, ∅⁺ = ∅. The result is either ReEmpty or ∅-free. */
    auto simplify_empty(const RegexPtr & r) -> RegexPtr;

    auto is_empty_language(const RegexPtr & r) -> bool;

    auto regex_alphabet(const RegexPtr & r) -> std::set<Symbol>;

    auto regex_to_string(const RegexPtr & r) -> std::string;
}

#endif
