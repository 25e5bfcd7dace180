#include "tamedgk/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace tgk {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Equals, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& line, int line_no) : s_(line), line_(line_no) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size() || s_[pos_] == '#') {
      cur_ = {Tok::End, "", line_, col};
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      cur_ = {Tok::Ident, s_.substr(start, pos_ - start), line_, col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      cur_ = {Tok::Int, s_.substr(start, pos_ - start), line_, col};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': cur_ = {Tok::Plus, "+", line_, col}; return;
      case '-': cur_ = {Tok::Minus, "-", line_, col}; return;
      case '*': cur_ = {Tok::Star, "*", line_, col}; return;
      case '/': cur_ = {Tok::Slash, "/", line_, col}; return;
      case '=': cur_ = {Tok::Equals, "=", line_, col}; return;
      case '(': cur_ = {Tok::LParen, "(", line_, col}; return;
      case ')': cur_ = {Tok::RParen, ")", line_, col}; return;
      case ',': cur_ = {Tok::Comma, ",", line_, col}; return;
      default: throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
    }
  }

  std::string s_;
  int line_;
  size_t pos_ = 0;
  Token cur_{Tok::End, "", 0, 0};
};

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

int parse_int(Lexer& lx, const char* what) {
  Token t = lx.take();
  if (t.kind != Tok::Int) fail(t, std::string("expected ") + what);
  return std::stoi(t.text);
}

void expect(Lexer& lx, Tok kind, const char* what) {
  Token t = lx.take();
  if (t.kind != kind) fail(t, std::string("expected ") + what);
}

// [INT [/ POSINT] *]  — present iff the next token is an integer.
std::optional<Rational> try_coefficient(Lexer& lx) {
  if (lx.peek().kind != Tok::Int) return std::nullopt;
  Token num = lx.take();
  Rational c(num.text);
  if (lx.peek().kind == Tok::Slash) {
    lx.take();
    Token den = lx.take();
    if (den.kind != Tok::Int) fail(den, "expected denominator");
    if (den.text == "0") fail(den, "zero denominator");
    c = Rational(num.text + "/" + den.text);
  }
  c.canonicalize();
  expect(lx, Tok::Star, "'*' after coefficient");
  return c;
}

bool is_e_atom(const Token& t) {
  return t.kind == Tok::Ident && t.text.size() >= 1 && t.text[0] == 'e' &&
         (t.text.size() == 1 || std::all_of(t.text.begin() + 1, t.text.end(),
                                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }));
}

// Index list after the "e": digit string (dim <= 9) or "(i,j,...)".
IndexTuple parse_indices(Lexer& lx, const Token& e_tok, int dim) {
  IndexTuple idx;
  if (e_tok.text.size() > 1) {
    if (dim > 9) fail(e_tok, "digit-string indices require dim <= 9; use e(i,j,...)");
    for (size_t i = 1; i < e_tok.text.size(); ++i) idx.push_back(e_tok.text[i] - '0');
  } else {
    expect(lx, Tok::LParen, "'(' after e");
    idx.push_back(parse_int(lx, "index"));
    while (lx.peek().kind == Tok::Comma) {
      lx.take();
      idx.push_back(parse_int(lx, "index"));
    }
    expect(lx, Tok::RParen, "')'");
  }
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > dim) fail(e_tok, "index out of range");
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] == idx[j]) fail(e_tok, "repeated index in term");
  }
  return idx;
}

// form-expr: "0" | term (('+'|'-') term)*
Form parse_form_expr(Lexer& lx, int dim) {
  if (lx.peek().kind == Tok::Int && lx.peek().text == "0") {
    Token zero = lx.take();
    if (lx.peek().kind != Tok::End) fail(lx.peek(), "unexpected token after 0");
    return Form(dim, 2);  // zero literal; grade only matters for d-declarations
  }
  std::optional<Form> total;
  Rational sign(1);
  bool first = true;
  while (true) {
    if (lx.peek().kind == Tok::Minus) {
      lx.take();
      sign = -1;
    } else if (lx.peek().kind == Tok::Plus) {
      lx.take();
      sign = 1;
    } else if (!first) {
      fail(lx.peek(), "expected '+' or '-'");
    }
    Rational coeff = sign;
    if (auto c = try_coefficient(lx)) coeff *= *c;
    Token e_tok = lx.take();
    if (!is_e_atom(e_tok)) fail(e_tok, "unknown name in expression (expected basis form)");
    IndexTuple idx = parse_indices(lx, e_tok, dim);
    if (!total) total = Form(dim, static_cast<int>(idx.size()));
    if (static_cast<int>(idx.size()) != total->grade()) fail(e_tok, "mixed grades in form expression");
    total->add_term(idx, coeff);
    first = false;
    if (lx.peek().kind == Tok::End) break;
    if (lx.peek().kind != Tok::Plus && lx.peek().kind != Tok::Minus) fail(lx.peek(), "expected '+' or '-'");
  }
  return *total;
}

// vec-expr: "0" | [rational *] e INT (('+'|'-') ...)*
Vec parse_vec_expr(Lexer& lx, int dim) {
  Vec v = zero_vec(dim);
  if (lx.peek().kind == Tok::Int && lx.peek().text == "0") {
    Token zero = lx.take();
    if (lx.peek().kind != Tok::End) fail(lx.peek(), "unexpected token after 0");
    return v;
  }
  Rational sign(1);
  bool first = true;
  while (true) {
    if (lx.peek().kind == Tok::Minus) {
      lx.take();
      sign = -1;
    } else if (lx.peek().kind == Tok::Plus) {
      lx.take();
      sign = 1;
    } else if (!first) {
      fail(lx.peek(), "expected '+' or '-'");
    }
    Rational coeff = sign;
    if (auto c = try_coefficient(lx)) coeff *= *c;
    Token e_tok = lx.take();
    if (!is_e_atom(e_tok)) fail(e_tok, "unknown name in expression (expected basis vector)");
    int label = 0;
    if (e_tok.text.size() > 1) {
      label = std::stoi(e_tok.text.substr(1));
    } else {
      expect(lx, Tok::LParen, "'(' after e");
      label = parse_int(lx, "index");
      expect(lx, Tok::RParen, "')'");
    }
    if (label < 1 || label > dim) fail(e_tok, "index out of range");
    v[static_cast<size_t>(label - 1)] += coeff;
    first = false;
    if (lx.peek().kind == Tok::End) break;
    if (lx.peek().kind != Tok::Plus && lx.peek().kind != Tok::Minus) fail(lx.peek(), "expected '+' or '-'");
  }
  return v;
}

}  // namespace

StructurePackage parse_structure_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  int dim = -1;
  std::vector<std::optional<Form>> d_decls;
  std::map<std::string, RatMatrix> endos;
  std::map<std::string, std::vector<bool>> endo_cols_set;
  std::map<std::string, Form> forms;

  while (std::getline(in, line)) {
    ++line_no;
    Lexer lx(line, line_no);
    if (lx.peek().kind == Tok::End) continue;
    Token head = lx.take();
    if (head.kind != Tok::Ident) fail(head, "expected declaration");

    if (head.text == "dim") {
      if (dim >= 0) fail(head, "duplicate dim declaration");
      expect(lx, Tok::Equals, "'='");
      dim = parse_int(lx, "dimension");
      if (dim < 1) fail(head, "dimension must be positive");
      if (lx.peek().kind != Tok::End) fail(lx.peek(), "unexpected token after dim declaration");
      d_decls.assign(static_cast<size_t>(dim), std::nullopt);
      continue;
    }
    if (dim < 0) fail(head, "missing dim declaration");

    // d-declaration: "d e1 = ..." or compact "de1 = ..."
    int d_label = 0;
    bool is_d = false;
    if (head.text == "d") {
      Token e_tok = lx.take();
      if (!is_e_atom(e_tok)) fail(e_tok, "expected basis 1-form after d");
      if (e_tok.text.size() > 1) {
        d_label = std::stoi(e_tok.text.substr(1));
      } else {
        expect(lx, Tok::LParen, "'(' after e");
        d_label = parse_int(lx, "index");
        expect(lx, Tok::RParen, "')'");
      }
      is_d = true;
    } else if (head.text.size() > 2 && head.text[0] == 'd' && head.text[1] == 'e' &&
               std::all_of(head.text.begin() + 2, head.text.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      d_label = std::stoi(head.text.substr(2));
      is_d = true;
    }
    if (is_d) {
      if (d_label < 1 || d_label > dim) fail(head, "index out of range");
      if (d_decls[static_cast<size_t>(d_label - 1)]) fail(head, "duplicate declaration of d e" + std::to_string(d_label));
      expect(lx, Tok::Equals, "'='");
      Form f = parse_form_expr(lx, dim);
      if (!f.zero() && f.grade() != 2) fail(head, "d of a basis 1-form must be a 2-form");
      if (f.zero()) f = Form(dim, 2);
      d_decls[static_cast<size_t>(d_label - 1)] = std::move(f);
      continue;
    }

    if (is_e_atom(head)) fail(head, "basis symbols cannot be declared");

    if (lx.peek().kind == Tok::LParen) {
      // endomorphism column: NAME(ei) = vec-expr
      lx.take();
      Token e_tok = lx.take();
      if (!is_e_atom(e_tok)) fail(e_tok, "expected basis vector");
      int label = 0;
      if (e_tok.text.size() > 1) {
        label = std::stoi(e_tok.text.substr(1));
      } else {
        expect(lx, Tok::LParen, "'(' after e");
        label = parse_int(lx, "index");
        expect(lx, Tok::RParen, "')'");
      }
      if (label < 1 || label > dim) fail(e_tok, "index out of range");
      expect(lx, Tok::RParen, "')'");
      expect(lx, Tok::Equals, "'='");
      Vec v = parse_vec_expr(lx, dim);
      if (forms.count(head.text)) fail(head, "name already declared as a form: " + head.text);
      auto [it, inserted] = endos.try_emplace(head.text, RatMatrix(dim, dim));
      auto& set_flags = endo_cols_set.try_emplace(head.text, std::vector<bool>(static_cast<size_t>(dim), false)).first->second;
      if (set_flags[static_cast<size_t>(label - 1)])
        fail(head, "duplicate declaration of " + head.text + "(e" + std::to_string(label) + ")");
      set_flags[static_cast<size_t>(label - 1)] = true;
      for (int i = 0; i < dim; ++i) it->second.at(i, label - 1) = v[static_cast<size_t>(i)];
      continue;
    }

    // named form: NAME = form-expr
    expect(lx, Tok::Equals, "'='");
    if (endos.count(head.text)) fail(head, "name already declared as an endomorphism: " + head.text);
    if (forms.count(head.text)) fail(head, "duplicate declaration of " + head.text);
    forms.emplace(head.text, parse_form_expr(lx, dim));
  }

  if (dim < 0) throw ParseError(line_no + 1, 1, "missing dim declaration");
  std::vector<Form> d_basis;
  d_basis.reserve(static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k)
    d_basis.push_back(d_decls[static_cast<size_t>(k)] ? *d_decls[static_cast<size_t>(k)] : Form(dim, 2));
  return StructurePackage{LieAlgebra(dim, std::move(d_basis)), std::move(endos), std::move(forms)};
}

std::string serialize_structure_file(const StructurePackage& p) {
  std::ostringstream os;
  const int dim = p.algebra.dim();
  os << "dim = " << dim << "\n";
  for (int k = 1; k <= dim; ++k) os << "d e" << k << " = " << p.algebra.d_basis_oneform(k).str() << "\n";
  for (const auto& [name, m] : p.endomorphisms)
    for (int j = 0; j < dim; ++j) os << name << "(e" << j + 1 << ") = " << vec_str(m.col(j)) << "\n";
  for (const auto& [name, f] : p.forms) os << name << " = " << f.str() << "\n";
  return os.str();
}

}  // namespace tgk
