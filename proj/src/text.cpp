#include "ita/text.hpp"

#include <cctype>
#include <vector>

#include "ita/error.hpp"

namespace ita {

namespace {

enum class Tok {
  Ident,
  Directive,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Arrow,
  Bang,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan at;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Directive: return "section header";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Bang: return "'!'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourceSpan pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourceSpan start = pos;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (c == '@') {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      if (word != "@tbox" && word != "@abox")
        throw ParseError("unknown section '" + word + "'", start);
      out.push_back({Tok::Directive, word, start});
      advance(j - i);
      continue;
    }
    if (c == '-') {
      if (i + 1 < src.size() && src[i + 1] == '>') {
        out.push_back({Tok::Arrow, "->", start});
        advance(2);
        continue;
      }
      throw ParseError("expected '->'", start);
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '!': kind = Tok::Bang; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, {}, pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  KnowledgeBase kb() {
    std::vector<PositiveAxiom> positives;
    std::vector<NegativeConstraint> negatives;
    std::vector<Atom> assertions;
    enum { None, InTBox, InABox } section = None;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Directive) {
        section = take().text == "@tbox" ? InTBox : InABox;
        continue;
      }
      if (section == None) fail("expected '@tbox' or '@abox'");
      if (section == InTBox) {
        auto body = atoms();
        expect(Tok::Arrow);
        if (peek().kind == Tok::Bang) {
          take();
          expect(Tok::Dot);
          negatives.emplace_back(std::move(body));
        } else {
          auto head = atoms();
          expect(Tok::Dot);
          positives.emplace_back(std::move(body), std::move(head));
        }
      } else {
        const Token& first = peek();
        Atom a = atom();
        if (!a.is_ground())
          throw ParseError("variable in ABox assertion " + a.to_string(), first.at);
        expect(Tok::Dot);
        assertions.push_back(std::move(a));
      }
    }
    return KnowledgeBase(TBox(std::move(positives), std::move(negatives)),
                         MBox({ABox(std::move(assertions))}));
  }

  Query query() {
    if (peek().kind == Tok::End) fail("empty query");
    auto q = atoms();
    if (peek().kind == Tok::Dot) take();
    expect(Tok::End);
    return Query(std::move(q));
  }

  MBox mbox() {
    std::vector<ABox> members;
    expect(Tok::LBracket);
    if (peek().kind != Tok::RBracket) {
      members.push_back(abox_literal());
      while (peek().kind == Tok::Comma) {
        take();
        members.push_back(abox_literal());
      }
    }
    expect(Tok::RBracket);
    expect(Tok::End);
    return MBox(std::move(members));
  }

 private:
  ABox abox_literal() {
    expect(Tok::LBrace);
    std::vector<Atom> out;
    if (peek().kind != Tok::RBrace) {
      for (;;) {
        const Token& first = peek();
        Atom a = atom();
        if (!a.is_ground())
          throw ParseError("variable in ABox assertion " + a.to_string(), first.at);
        out.push_back(std::move(a));
        if (peek().kind != Tok::Comma) break;
        take();
      }
    }
    expect(Tok::RBrace);
    return ABox(std::move(out));
  }

  std::vector<Atom> atoms() {
    std::vector<Atom> out;
    out.push_back(atom());
    while (peek().kind == Tok::Comma) {
      take();
      out.push_back(atom());
    }
    return out;
  }

  Atom atom() {
    const Token& name = expect(Tok::Ident);
    expect(Tok::LParen);
    std::vector<Term> args;
    if (peek().kind == Tok::RParen) fail("atom '" + name.text + "' has no arguments");
    for (;;) {
      const Token& t = expect(Tok::Ident);
      if (std::isupper(static_cast<unsigned char>(t.text[0])))
        args.push_back(Term::variable(t.text));
      else
        args.push_back(Term::constant(t.text));
      if (peek().kind != Tok::Comma) break;
      take();
    }
    expect(Tok::RParen);
    auto [it, inserted] = arities_.emplace(name.text, args.size());
    if (!inserted && it->second != args.size())
      throw ParseError("arity clash for predicate '" + name.text + "': " +
                           std::to_string(it->second) + " vs " +
                           std::to_string(args.size()),
                       name.at, ErrorKind::ArityClash);
    return Atom(name.text, std::move(args));
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  const Token& expect(Tok kind) {
    if (peek().kind != kind)
      fail(std::string("expected ") + describe(kind) + ", found " +
           describe(peek().kind) +
           (peek().text.empty() ? "" : " '" + peek().text + "'"));
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().at);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature arities_;
};

std::string lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

}  // namespace

KnowledgeBase parse_kb(std::string_view text) { return Parser(text).kb(); }

Query parse_query(std::string_view text) { return Parser(text).query(); }

MBox parse_mbox(std::string_view text) { return Parser(text).mbox(); }

std::string serialize_mbox(const MBox& m) { return m.to_string(); }

std::string serialize_tbox(const TBox& tbox) {
  std::vector<std::string> out{"@tbox"};
  for (const auto& ax : tbox.positives()) out.push_back(ax.to_string());
  for (const auto& nc : tbox.negatives()) out.push_back(nc.to_string());
  return lines(out);
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::vector<std::string> out{"@abox"};
  for (const Atom& a : kb.abox()) out.push_back(a.to_string() + ".");
  return serialize_tbox(kb.tbox) + lines(out);
}

nlohmann::json abox_to_json(const ABox& a) {
  auto out = nlohmann::json::array();
  for (const Atom& atom : a) out.push_back(atom.to_string());
  return out;
}

nlohmann::json mbox_to_json(const MBox& m, std::optional<std::string> modifier) {
  nlohmann::json out;
  out["modifier"] = modifier ? nlohmann::json(*modifier) : nlohmann::json(nullptr);
  auto members = nlohmann::json::array();
  for (const ABox& a : m) members.push_back(abox_to_json(a));
  out["aboxes"] = std::move(members);
  return out;
}

}  // namespace ita
