#include <lgs/errors.hh>
#include <lgs/regex.hh>

#include <cctype>

using std::move;
using std::make_shared;
using std::set;
using std::string;

namespace lgs
{
    auto re_empty() -> RegexPtr
    {
        return make_shared<const RegexAst>(RegexAst{ReEmpty{}});
    }

    auto re_lit(Symbol s) -> RegexPtr
    {
        return make_shared<const RegexAst>(RegexAst{ReLit{move(s)}});
    }

    auto re_concat(RegexPtr l, RegexPtr r) -> RegexPtr
    {
        return make_shared<const RegexAst>(RegexAst{ReConcat{move(l), move(r)}});
    }

    auto re_union(RegexPtr l, RegexPtr r) -> RegexPtr
    {
        return make_shared<const RegexAst>(RegexAst{ReUnion{move(l), move(r)}});
    }

    auto re_plus(RegexPtr inner) -> RegexPtr
    {
        return make_shared<const RegexAst>(RegexAst{RePlus{move(inner)}});
    }

    namespace
    {
        struct Parser
        {
            const string & text;
            std::size_t pos = 0;

            auto skip_space() -> void
            {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
            }

            auto at_end() -> bool
            {
                skip_space();
                return pos >= text.size();
            }

            auto peek() -> char
            {
                skip_space();
                return pos < text.size() ? text[pos] : '\0';
            }

            auto reject_foreign_token() -> void
            {
                skip_space();
                if (pos >= text.size())
                    return;
                if (text[pos] == '*')
                    throw SyntaxError{"'*' is outside the epsilon-free fragment; a*b is expressible as b|a+b", pos};
                if (text[pos] == '?')
                    throw SyntaxError{"'?' is outside the epsilon-free fragment; a?b is expressible as b|ab", pos};
                if (text.compare(pos, 2, "\xce\xb5") == 0 || text.compare(pos, 2, "\xcf\xb5") == 0)
                    throw SyntaxError{"the empty word is outside the epsilon-free fragment", pos};
            }

            auto parse_atom() -> RegexPtr
            {
                reject_foreign_token();
                skip_space();
                if (pos >= text.size())
                    throw SyntaxError{"expected a symbol, '(' or '∅'", pos};
                char c = text[pos];
                if (c == '(') {
                    ++pos;
                    auto inner = parse_alt();
                    skip_space();
                    if (pos >= text.size() || text[pos] != ')')
                        throw SyntaxError{"expected ')'", pos};
                    ++pos;
                    return inner;
                }
                if (text.compare(pos, 3, "\xe2\x88\x85") == 0) {
                    pos += 3;
                    return re_empty();
                }
                if (std::isalnum(static_cast<unsigned char>(c))) {
                    ++pos;
                    return re_lit(string(1, c));
                }
                throw SyntaxError{string{"unexpected character '"} + c + "'", pos};
            }

            auto parse_rep() -> RegexPtr
            {
                auto r = parse_atom();
                while (peek() == '+') {
                    ++pos;
                    r = re_plus(r);
                }
                return r;
            }

            auto starts_atom() -> bool
            {
                skip_space();
                if (pos >= text.size())
                    return false;
                char c = text[pos];
                return c == '(' || std::isalnum(static_cast<unsigned char>(c)) ||
                    text.compare(pos, 3, "\xe2\x88\x85") == 0 ||
                    c == '*' || c == '?' || text.compare(pos, 2, "\xce\xb5") == 0 ||
                    text.compare(pos, 2, "\xcf\xb5") == 0;
            }

            auto parse_cat() -> RegexPtr
            {
                auto r = parse_rep();
                while (starts_atom())
                    r = re_concat(r, parse_rep());
                return r;
            }

            auto parse_alt() -> RegexPtr
            {
                auto r = parse_cat();
                while (peek() == '|') {
                    ++pos;
                    r = re_union(r, parse_cat());
                }
                return r;
            }
        };
    }

    auto parse_regex(const string & text) -> RegexPtr
    {
        Parser p{text};
        auto r = p.parse_alt();
        if (! p.at_end())
            throw SyntaxError{"trailing input after expression", p.pos};
        return r;
    }

    auto simplify_empty(const RegexPtr & r) -> RegexPtr
    {
        struct Visitor
        {
            auto operator()(const ReEmpty &) -> RegexPtr
            {
                return re_empty();
            }

            auto operator()(const ReLit & l) -> RegexPtr
            {
                return re_lit(l.sym);
            }

            auto operator()(const ReConcat & c) -> RegexPtr
            {
                auto l = simplify_empty(c.left), r = simplify_empty(c.right);
                if (std::holds_alternative<ReEmpty>(l->term) || std::holds_alternative<ReEmpty>(r->term))
                    return re_empty();
                return re_concat(l, r);
            }

            auto operator()(const ReUnion & u) -> RegexPtr
            {
                auto l = simplify_empty(u.left), r = simplify_empty(u.right);
                if (std::holds_alternative<ReEmpty>(l->term))
                    return r;
                if (std::holds_alternative<ReEmpty>(r->term))
                    return l;
                return re_union(l, r);
            }

            auto operator()(const RePlus & p) -> RegexPtr
            {
                auto i = simplify_empty(p.inner);
                if (std::holds_alternative<ReEmpty>(i->term))
                    return re_empty();
                return re_plus(i);
            }
        };
        return std::visit(Visitor{}, r->term);
    }

    auto is_empty_language(const RegexPtr & r) -> bool
    {
        return std::holds_alternative<ReEmpty>(simplify_empty(r)->term);
    }

    auto regex_alphabet(const RegexPtr & r) -> set<Symbol>
    {
        set<Symbol> result;
        struct Visitor
        {
            set<Symbol> & result;

            auto operator()(const ReEmpty &) -> void
            {
            }

            auto operator()(const ReLit & l) -> void
            {
                result.insert(l.sym);
            }

            auto operator()(const ReConcat & c) -> void
            {
                std::visit(*this, c.left->term);
                std::visit(*this, c.right->term);
            }

            auto operator()(const ReUnion & u) -> void
            {
                std::visit(*this, u.left->term);
                std::visit(*this, u.right->term);
            }

            auto operator()(const RePlus & p) -> void
            {
                std::visit(*this, p.inner->term);
            }
        };
        std::visit(Visitor{result}, r->term);
        return result;
    }

    auto regex_to_string(const RegexPtr & r) -> string
    {
        struct Visitor
        {
            // parent binding strength: 0 = union, 1 = concat, 2 = plus
            int context;

            auto wrap(const string & s, int mine) const -> string
            {
                return mine < context ? "(" + s + ")" : s;
            }

            auto operator()(const ReEmpty &) -> string
            {
                return "\xe2\x88\x85";
            }

            auto operator()(const ReLit & l) -> string
            {
                return l.sym;
            }

            auto operator()(const ReConcat & c) -> string
            {
                // right operands get a tighter context so the printed text
                // reparses to the same left-leaning tree
                auto s = std::visit(Visitor{1}, c.left->term) + std::visit(Visitor{2}, c.right->term);
                return wrap(s, 1);
            }

            auto operator()(const ReUnion & u) -> string
            {
                auto s = std::visit(Visitor{0}, u.left->term) + "|" + std::visit(Visitor{1}, u.right->term);
                return wrap(s, 0);
            }

            auto operator()(const RePlus & p) -> string
            {
                return std::visit(Visitor{2}, p.inner->term) + "+";
            }
        };
        return std::visit(Visitor{0}, r->term);
    }
}
