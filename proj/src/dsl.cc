#include <lgs/errors.hh>
#include <lgs/io.hh>

#include <cctype>

using std::string;

namespace lgs
{
    namespace
    {
        auto ident_char(char c) -> bool
        {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        }

        struct DslParser
        {
            const string & text;
            std::size_t pos = 0;

            auto skip_space() -> void
            {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
            }

            auto peek() -> char
            {
                skip_space();
                return pos < text.size() ? text[pos] : '\0';
            }

            auto expect(char c) -> void
            {
                if (peek() != c)
                    throw SyntaxError{string{"expected '"} + c + "'", pos};
                ++pos;
            }

            auto parse_ident() -> string
            {
                skip_space();
                std::size_t start = pos;
                while (pos < text.size() && ident_char(text[pos]))
                    ++pos;
                if (pos == start)
                    throw SyntaxError{"expected a node name", pos};
                return text.substr(start, pos - start);
            }

            auto parse_flags() -> Flags
            {
                Flags flags;
                if (peek() != '{')
                    return flags;
                ++pos;
                if (peek() == '}') {
                    ++pos;
                    return flags;
                }
                while (true) {
                    std::size_t start = pos;
                    auto word = parse_ident();
                    if (word == "must")
                        flags.must = true;
                    else if (word == "uniq")
                        flags.uniq = true;
                    else if (word == "excl")
                        flags.excl = true;
                    else if (word == "nil")
                        flags.nil = true;
                    else
                        throw SyntaxError{"unknown flag '" + word + "' (expected must, uniq, excl or nil)", start};
                    if (peek() == ',') {
                        ++pos;
                        continue;
                    }
                    expect('}');
                    return flags;
                }
            }

            auto parse_node() -> UnaryTerm
            {
                auto name = parse_ident();
                return UnaryTerm{name, parse_flags()};
            }

            auto parse_atom() -> GuestExprPtr
            {
                if (peek() == '(') {
                    ++pos;
                    auto inner = parse_expr();
                    expect(')');
                    return inner;
                }
                auto src = parse_node();
                if (peek() != '-')
                    return expr_unary(src);
                ++pos;
                // arrow: '-' LABEL '->'
                skip_space();
                if (pos >= text.size() || ! std::isalnum(static_cast<unsigned char>(text[pos])))
                    throw SyntaxError{"expected a single-symbol edge label", pos};
                Symbol label(1, text[pos]);
                ++pos;
                expect('-');
                if (pos >= text.size() || text[pos] != '>')
                    throw SyntaxError{"expected '->'", pos};
                ++pos;
                auto dst = parse_node();
                return expr_arrow(src, label, dst);
            }

            auto parse_mul() -> GuestExprPtr
            {
                auto e = parse_atom();
                while (peek() == '*') {
                    ++pos;
                    e = expr_mul(e, parse_atom());
                }
                return e;
            }

            auto parse_expr() -> GuestExprPtr
            {
                auto e = parse_mul();
                while (peek() == '+') {
                    ++pos;
                    e = expr_add(e, parse_mul());
                }
                return e;
            }
        };
    }

    auto parse_guest_dsl(const string & text) -> GuestExprPtr
    {
        DslParser p{text};
        auto e = p.parse_expr();
        p.skip_space();
        if (p.pos < text.size())
            throw SyntaxError{"trailing input after expression", p.pos};
        return e;
    }

    namespace
    {
        auto print_flags(const Flags & f) -> string
        {
            string inner;
            auto append = [&](const char * name) {
                if (! inner.empty())
                    inner += ",";
                inner += name;
            };
            if (f.must)
                append("must");
            if (f.uniq)
                append("uniq");
            if (f.excl)
                append("excl");
            if (f.nil)
                append("nil");
            return inner.empty() ? "" : "{" + inner + "}";
        }

        auto print_node(const UnaryTerm & t) -> string
        {
            return t.name + print_flags(t.flags);
        }

        // binding strengths: 0 = sum, 1 = product, 2 = atom
        auto print_level(const GuestExprPtr & e, int context) -> string
        {
            struct Visitor
            {
                int context;

                auto wrap(const string & s, int mine) const -> string
                {
                    return mine < context ? "(" + s + ")" : s;
                }

                auto operator()(const ExprEmpty &) -> string
                {
                    // the grammar has no term for the empty guest
                    return "";
                }

                auto operator()(const ExprUnary & u) -> string
                {
                    return print_node(u.node);
                }

                auto operator()(const ExprArrow & a) -> string
                {
                    return print_node(a.src) + " -" + a.label + "-> " + print_node(a.dst);
                }

                auto operator()(const ExprAdd & a) -> string
                {
                    return wrap(print_level(a.left, 0) + " + " + print_level(a.right, 1), 0);
                }

                auto operator()(const ExprMul & m) -> string
                {
                    return wrap(print_level(m.left, 1) + " * " + print_level(m.right, 2), 1);
                }

                auto operator()(const ExprRename &) -> string
                {
                    throw PreconditionError{"renaming has no concrete syntax"};
                }
            };
            return std::visit(Visitor{context}, e->term);
        }
    }

    auto print_guest_expr(const GuestExprPtr & expr) -> string
    {
        return print_level(expr, 0);
    }
}
