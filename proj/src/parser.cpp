#include "pie/parser.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "pie/diagnostic.hpp"

namespace pie {

const Name& declName(const Decl& d) {
    return std::visit([](const auto& x) -> const Name& { return x.name; }, d);
}

const SourceSpan& declSpan(const Decl& d) {
    return std::visit([](const auto& x) -> const SourceSpan& { return x.span; }, d);
}

namespace {

enum class Tok {
    Ident,
    Number,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Less,
    Greater,
    Colon,
    Semi,
    Comma,
    Dot,
    Bar,
    Arrow,    // -> →
    FatArrow, // =>
    Define,   // :=
    Lambda,   // λ lam
    PiSym,    // Π Pi
    KwAxiom,
    KwDef,
    KwInductive,
    KwMatch,
    KwWith,
    KwSet,
    KwProp,
    KwType,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "`" + t.text + "`";
}

[[noreturn]] void fail(const std::string& msg, SourceSpan span) { throw KernelError(Rule::Parse, msg, span); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skipSpace();
            Token t = next();
            bool end = t.kind == Tok::End;
            out.push_back(std::move(t));
            if (end) return out;
        }
    }

private:
    // Decodes the code point at pos_ without consuming it; returns its length.
    std::pair<char32_t, std::size_t> peek() const {
        auto b = static_cast<unsigned char>(src_[pos_]);
        std::size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : (b >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || pos_ + len > src_.size()) fail("invalid UTF-8 in source", here());
        char32_t cp = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
        for (std::size_t i = 1; i < len; ++i) {
            auto c = static_cast<unsigned char>(src_[pos_ + i]);
            if ((c >> 6) != 0x2) fail("invalid UTF-8 in source", here());
            cp = (cp << 6) | (c & 0x3F);
        }
        static constexpr char32_t minFor[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < minFor[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            fail("invalid UTF-8 in source", here());
        return {cp, len};
    }

    void advance(std::size_t len, char32_t cp) {
        pos_ += len;
        if (cp == U'\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
    }

    SourceSpan here() const { return {line_, col_, line_, col_}; }

    bool at(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    void skipSpace() {
        while (pos_ < src_.size()) {
            if (at("--")) {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    auto [cp, len] = peek();
                    advance(len, cp);
                }
                continue;
            }
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance(1, static_cast<char32_t>(c));
                continue;
            }
            auto [cp, len] = peek();
            if (cp == 0xA0 || cp == 0xFEFF) {
                advance(len, cp);
                continue;
            }
            return;
        }
    }

    static bool isDelimiter(char32_t cp) {
        switch (cp) {
        case U'(': case U')': case U'{': case U'}': case U'<': case U'>': case U':': case U';': case U',':
        case U'.': case U'|': case U'=': case U'λ': case U'Π': case U'→': case U' ': case U'\t': case U'\r':
        case U'\n': case U'\f': case U'\v': case 0xA0: case 0xFEFF:
            return true;
        default:
            return false;
        }
    }

    Token next() {
        SourceSpan span = here();
        if (pos_ >= src_.size()) return {Tok::End, "", span};
        std::size_t start = pos_;
        auto finish = [&](Tok k) {
            span.endLine = line_;
            span.endCol = col_ > 1 ? col_ - 1 : col_;
            return Token{k, std::string(src_.substr(start, pos_ - start)), span};
        };
        auto take = [&](std::size_t n, Tok k) {
            for (std::size_t i = 0; i < n; ++i) {
                auto [cp, len] = peek();
                advance(len, cp);
            }
            return finish(k);
        };
        if (at("->")) return take(2, Tok::Arrow);
        if (at("=>")) return take(2, Tok::FatArrow);
        if (at(":=")) return take(2, Tok::Define);
        auto [cp, len] = peek();
        switch (cp) {
        case U'(': return take(1, Tok::LParen);
        case U')': return take(1, Tok::RParen);
        case U'{': return take(1, Tok::LBrace);
        case U'}': return take(1, Tok::RBrace);
        case U'<': return take(1, Tok::Less);
        case U'>': return take(1, Tok::Greater);
        case U':': return take(1, Tok::Colon);
        case U';': return take(1, Tok::Semi);
        case U',': return take(1, Tok::Comma);
        case U'.': return take(1, Tok::Dot);
        case U'|': return take(1, Tok::Bar);
        case U'λ': return take(1, Tok::Lambda);
        case U'Π': return take(1, Tok::PiSym);
        case U'→': return take(1, Tok::Arrow);
        case U'=': fail("unexpected `=`", span);
        default: break;
        }
        if (cp < 0x20 || cp == 0x7F) fail("unexpected control character", span);
        while (pos_ < src_.size() && !at("->") && !at("--")) {
            auto [c, l] = peek();
            if (isDelimiter(c)) break;
            advance(l, c);
        }
        Token t = finish(Tok::Ident);
        static const std::pair<std::string_view, Tok> keywords[] = {
            {"Axiom", Tok::KwAxiom}, {"def", Tok::KwDef},  {"Inductive", Tok::KwInductive},
            {"match", Tok::KwMatch}, {"with", Tok::KwWith}, {"Set", Tok::KwSet},
            {"Prop", Tok::KwProp},   {"Type", Tok::KwType}, {"lam", Tok::Lambda},
            {"Pi", Tok::PiSym},
        };
        for (const auto& [kw, k] : keywords)
            if (t.text == kw) t.kind = k;
        if (t.kind == Tok::Ident && std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }))
            t.kind = Tok::Number;
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t col_ = 1;
};

constexpr std::size_t kMaxDepth = 500;

SourceSpan join(const SourceSpan& a, const SourceSpan& b) { return {a.startLine, a.startCol, b.endLine, b.endCol}; }

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program(std::string sourceName) {
        Program p;
        p.sourceName = std::move(sourceName);
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Semi) {
                ++pos_;
                continue;
            }
            p.decls.push_back(decl());
        }
        return p;
    }

    TermPtr wholeTerm() {
        auto t = expr();
        expect(Tok::End, "end of input");
        return t;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what + ", found " + describe(peek()), peek().span);
        return toks_[pos_++];
    }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    const SourceSpan& prevSpan() const { return toks_[pos_ - 1].span; }

    Name ident(const char* what) { return Name{expect(Tok::Ident, what).text}; }

    struct DepthGuard {
        DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxDepth) fail("expression nesting is too deep", p_.peek().span);
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    Decl decl() {
        const Token& kw = peek();
        switch (kw.kind) {
        case Tok::KwAxiom: {
            ++pos_;
            Name n = ident("a name after `Axiom`");
            expect(Tok::Colon, "`:`");
            auto t = expr();
            return AxiomDecl{n, t, join(kw.span, prevSpan())};
        }
        case Tok::KwDef: {
            ++pos_;
            Name n = ident("a name after `def`");
            std::vector<Param> params;
            if (accept(Tok::LParen)) {
                std::set<Name> seen;
                if (!accept(Tok::RParen)) {
                    do {
                        const Token& pt = peek();
                        Name pn = ident("a parameter name");
                        if (!seen.insert(pn).second) fail("duplicate parameter `" + pn.str() + "`", pt.span);
                        expect(Tok::Colon, "`:`");
                        params.push_back({pn, expr()});
                    } while (accept(Tok::Comma));
                    expect(Tok::RParen, "`)` or `,`");
                }
            }
            expect(Tok::Colon, "`:` before the result type");
            auto result = expr();
            expect(Tok::LBrace, "`{`");
            auto body = expr();
            expect(Tok::RBrace, "`}`");
            return DefDecl{n, std::move(params), result, body, join(kw.span, prevSpan())};
        }
        case Tok::KwInductive: {
            ++pos_;
            Name n = ident("a name after `Inductive`");
            expect(Tok::Colon, "`:`");
            auto arity = expr();
            expect(Tok::Define, "`:=`");
            std::vector<CtorDecl> ctors;
            std::set<Name> seen;
            bool first = true;
            while (peek().kind == Tok::Bar || (first && peek().kind == Tok::Ident)) {
                accept(Tok::Bar);
                first = false;
                const Token& ct = peek();
                Name cn = ident("a constructor name");
                if (!seen.insert(cn).second) fail("duplicate constructor `" + cn.str() + "`", ct.span);
                expect(Tok::Colon, "`:`");
                ctors.push_back({cn, expr()});
            }
            return InductiveDeclSrc{n, arity, std::move(ctors), join(kw.span, prevSpan())};
        }
        default:
            fail("expected `Axiom`, `def` or `Inductive`, found " + describe(kw), kw.span);
        }
    }

    static bool startsAtom(Tok k) {
        switch (k) {
        case Tok::Ident: case Tok::LParen: case Tok::Less: case Tok::Lambda: case Tok::PiSym: case Tok::KwSet:
        case Tok::KwProp: case Tok::KwType:
            return true;
        default:
            return false;
        }
    }

    // expr := atom+ ('->' expr)?
    TermPtr expr() {
        DepthGuard guard(*this);
        if (!startsAtom(peek().kind)) fail("expected an expression, found " + describe(peek()), peek().span);
        TermPtr t = atom();
        while (startsAtom(peek().kind)) {
            auto a = atom();
            t = mk::app(t, a, join(t->span(), a->span()));
        }
        if (accept(Tok::Arrow)) {
            auto rhs = expr();
            t = mk::pi(Name{"_", ++arrowCounter_}, t, rhs, join(t->span(), rhs->span()));
        }
        return t;
    }

    TermPtr atom() {
        DepthGuard guard(*this);
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident:
            ++pos_;
            return mk::var(Name{t.text}, t.span);
        case Tok::KwSet:
            ++pos_;
            return mk::universe(0, t.span);
        case Tok::KwProp:
            ++pos_;
            return mk::universe(1, t.span);
        case Tok::KwType: {
            ++pos_;
            if (peek().kind == Tok::Number) {
                const Token& n = toks_[pos_++];
                if (n.text.size() > 6) fail("universe level is too large", n.span);
                return mk::universe(static_cast<std::uint32_t>(std::stoul(n.text)), join(t.span, n.span));
            }
            return mk::universe(1, t.span);
        }
        case Tok::LParen: {
            ++pos_;
            auto e = expr();
            expect(Tok::RParen, "`)`");
            return e;
        }
        case Tok::Lambda:
        case Tok::PiSym: {
            ++pos_;
            Name x = ident("a binder name");
            expect(Tok::Colon, "`:`");
            auto dom = expr();
            expect(Tok::Dot, "`.`");
            auto body = expr();
            auto span = join(t.span, body->span());
            return t.kind == Tok::Lambda ? mk::lam(x, dom, body, span) : mk::pi(x, dom, body, span);
        }
        case Tok::Less:
            return matchExpr();
        default:
            fail("expected an expression, found " + describe(t), t.span);
        }
    }

    TermPtr matchExpr() {
        const Token& open = expect(Tok::Less, "`<`");
        auto carrier = expr();
        expect(Tok::Greater, "`>`");
        expect(Tok::KwMatch, "`match`");
        auto scrut = expr();
        expect(Tok::KwWith, "`with`");
        expect(Tok::LBrace, "`{`");
        std::vector<Branch> branches;
        std::set<Name> seen;
        while (peek().kind != Tok::RBrace) {
            const Token& bt = peek();
            Name c;
            if (accept(Tok::LParen)) {
                // `(C x y)`: the argument names are documentation only.
                c = ident("a constructor name");
                while (accept(Tok::Ident)) {
                }
                expect(Tok::RParen, "`)`");
            } else {
                c = ident("a constructor name");
            }
            if (!seen.insert(c).second) fail("duplicate branch `" + c.str() + "`", bt.span);
            expect(Tok::FatArrow, "`=>`");
            branches.push_back({c, expr()});
            if (!accept(Tok::Semi)) break;
        }
        expect(Tok::RBrace, "`}`");
        return mk::match(carrier, scrut, std::move(branches), join(open.span, prevSpan()));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
    std::uint32_t arrowCounter_ = 0;
};

} // namespace

Program parseProgram(std::string_view source, std::string sourceName) {
    return Parser(Lexer(source).run()).program(std::move(sourceName));
}

TermPtr parseTerm(std::string_view source) { return Parser(Lexer(source).run()).wholeTerm(); }

Program prelude() { return parseProgram("Axiom Void : Set;\nAxiom Null : Void;\n", "<prelude>"); }

Program withPrelude(const Program& p) {
    Program out = prelude();
    out.sourceName = p.sourceName;
    out.decls.insert(out.decls.end(), p.decls.begin(), p.decls.end());
    return out;
}

} // namespace pie
