#include "omq/syntax.h"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace omq {

namespace {

struct Tok {
  enum Kind { Ident, Sym, End } kind;
  std::string text;
  int line, col;
};

// Splits one line into identifiers and punctuation; '#' starts a comment.
std::vector<Tok> lex(const std::string& src, int line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), line, col});
      i = j;
      continue;
    }
    if (ch == ':' && i + 1 < src.size() && src[i + 1] == '-') {
      out.push_back({Tok::Sym, ":-", line, col});
      i += 2;
      continue;
    }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", line, col});
      i += 2;
      continue;
    }
    if (std::string("().,-").find(ch) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, ch), line, col});
      ++i;
      continue;
    }
    throw InputError("unknown token '" + std::string(1, ch) + "'", line, col, 1);
  }
  out.push_back({Tok::End, "", line, static_cast<int>(src.size()) + 1});
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur)) {
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

bool is_keyword(const std::string& s) {
  static const std::set<std::string> kw = {"top", "bot", "not", "and", "or", "imp", "exists", "forall", "sub"};
  return kw.count(s) > 0;
}

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : t_(std::move(toks)) {}

  const Tok& peek() const { return t_[p_]; }
  bool at_end() const { return t_[p_].kind == Tok::End; }
  bool is(const std::string& s) const { return t_[p_].kind != Tok::End && t_[p_].text == s; }
  Tok next() { return t_[p_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Tok& k = peek();
    throw InputError(msg + (k.kind == Tok::End ? " at end of line" : " near '" + k.text + "'"), k.line, k.col,
                     static_cast<int>(std::max<size_t>(1, k.text.size())));
  }

  void expect(const std::string& s) {
    if (!is(s)) fail("expected '" + s + "'");
    ++p_;
  }

  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  Role role() {
    std::string n = ident("role name");
    if (is_keyword(n)) fail("keyword used as role name");
    if (n == "u") return Role::u();
    if (is("-")) {
      next();
      return Role::named(n, true);
    }
    return Role::named(n);
  }

  CPtr unary() {
    if (peek().kind == Tok::Ident) {
      std::string w = peek().text;
      if (w == "top") {
        next();
        return c_top();
      }
      if (w == "bot") {
        next();
        return c_bot();
      }
      if (w == "not") {
        next();
        return c_not(unary());
      }
      if (w == "exists" || w == "forall") {
        next();
        Role r = role();
        expect(".");
        CPtr c = unary();
        return w == "exists" ? c_exists(r, c) : c_forall(r, c);
      }
      if (is_keyword(w)) fail("unexpected keyword");
      next();
      return c_name(w);
    }
    if (is("(")) {
      next();
      CPtr c = concept_expr();
      expect(")");
      return c;
    }
    fail("expected concept");
  }

  CPtr conj() {
    CPtr c = unary();
    while (is("and")) {
      next();
      c = c_and(c, unary());
    }
    return c;
  }

  CPtr disj() {
    CPtr c = conj();
    while (is("or")) {
      next();
      c = c_or(c, conj());
    }
    return c;
  }

  CPtr concept_expr() {
    CPtr c = disj();
    if (is("imp")) {
      next();
      return c_imp(c, concept_expr());
    }
    return c;
  }

  Atom atom() {
    Atom a;
    a.pred = ident("predicate name");
    expect("(");
    a.x = ident("argument");
    if (is(",")) {
      next();
      a.y = ident("argument");
    }
    expect(")");
    return a;
  }

 private:
  std::vector<Tok> t_;
  size_t p_ = 0;
};

}  // namespace

CPtr parse_concept(const std::string& text) {
  Parser p(lex(text, 1));
  CPtr c = p.concept_expr();
  if (!p.at_end()) p.fail("trailing input");
  return c;
}

Ontology parse_ontology(const std::string& text) {
  Ontology o;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    Parser p(lex(lines[i], static_cast<int>(i) + 1));
    if (p.at_end()) continue;
    CPtr l = p.concept_expr();
    p.expect("sub");
    CPtr r = p.concept_expr();
    if (!p.at_end()) p.fail("trailing input");
    o.cis.push_back({l, r});
  }
  return o;
}

Database parse_database(const std::string& text) {
  Database d;
  std::map<std::string, int> arity;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    Parser p(lex(lines[i], static_cast<int>(i) + 1));
    while (!p.at_end()) {
      int col = p.peek().col;
      Atom a = p.atom();
      int ar = a.binary() ? 2 : 1;
      auto [it, fresh] = arity.emplace(a.pred, ar);
      if (!fresh && it->second != ar)
        throw InputError("arity mismatch for '" + a.pred + "'", static_cast<int>(i) + 1, col,
                         static_cast<int>(a.pred.size()));
      if (a.pred == kTop && ar == 2) throw InputError("top is unary", static_cast<int>(i) + 1, col, 3);
      if (ar == 1)
        d.add_concept(a.pred, a.x);
      else
        d.add_role(a.pred, a.x, a.y);
      if (p.is(".") || p.is(",")) p.next();
    }
  }
  return d;
}

namespace {
void check_cq(const CQ& q, int line) {
  auto vs = q.vars();
  std::set<std::string> used;
  for (const auto& a : q.atoms) {
    used.insert(a.x);
    if (a.binary()) used.insert(a.y);
  }
  for (const auto& v : q.answer)
    if (!used.count(v)) throw InputError("answer variable '" + v + "' absent from body", line, 1, 1);
}
}  // namespace

UCQ parse_query(const std::string& text) {
  UCQ u;
  auto lines = split_lines(text);
  std::vector<Tok> all;
  for (size_t i = 0; i < lines.size(); ++i) {
    auto ts = lex(lines[i], static_cast<int>(i) + 1);
    ts.pop_back();
    all.insert(all.end(), ts.begin(), ts.end());
  }
  int last_line = static_cast<int>(lines.size());
  all.push_back({Tok::End, "", last_line, 1});
  Parser p(all);
  while (!p.at_end()) {
    int line = p.peek().line;
    CQ q;
    p.ident("query head");
    p.expect("(");
    if (!p.is(")")) {
      q.answer.push_back(p.ident("variable"));
      while (p.is(",")) {
        p.next();
        q.answer.push_back(p.ident("variable"));
      }
    }
    p.expect(")");
    p.expect(":-");
    q.atoms.push_back(p.atom());
    while (p.is(",")) {
      p.next();
      q.atoms.push_back(p.atom());
    }
    p.expect(".");
    std::set<std::string> seen;
    for (const auto& v : q.answer)
      if (!seen.insert(v).second) throw InputError("repeated answer variable '" + v + "'", line, 1, 1);
    check_cq(q, line);
    q.normalize();
    if (!u.empty() && u.front().answer.size() != q.answer.size())
      throw InputError("mismatched head tuples across rules", line, 1, 1);
    u.push_back(q);
  }
  if (u.empty()) throw InputError("empty query", 1, 1, 1);
  // Rules may name their head variables differently; align them to the first rule.
  for (size_t i = 1; i < u.size(); ++i) {
    if (u[i].answer == u[0].answer) continue;
    std::map<std::string, std::string> ren;
    auto vs = u[i].vars();
    int fresh = 0;
    std::set<std::string> taken(u[0].answer.begin(), u[0].answer.end());
    for (size_t j = 0; j < u[i].answer.size(); ++j) ren[u[i].answer[j]] = u[0].answer[j];
    for (const auto& v : vs) {
      if (ren.count(v)) continue;
      std::string n = v;
      while (taken.count(n)) n = "_v" + std::to_string(fresh++);
      ren[v] = n;
      taken.insert(n);
    }
    CQ r;
    r.answer = u[0].answer;
    for (auto a : u[i].atoms) {
      a.x = ren[a.x];
      if (a.binary()) a.y = ren[a.y];
      r.atoms.push_back(a);
    }
    r.normalize();
    u[i] = r;
  }
  return u;
}

std::vector<TGD> parse_tgds(const std::string& text) {
  std::vector<TGD> out;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    Parser p(lex(lines[i], static_cast<int>(i) + 1));
    if (p.at_end()) continue;
    TGD t;
    t.body.atoms.push_back(p.atom());
    while (p.is(",")) {
      p.next();
      t.body.atoms.push_back(p.atom());
    }
    p.expect("->");
    if (p.is("false")) {
      p.next();
    } else {
      CQ h;
      h.atoms.push_back(p.atom());
      while (p.is(",")) {
        p.next();
        h.atoms.push_back(p.atom());
      }
      t.head = h;
    }
    if (p.is(".")) p.next();
    if (!p.at_end()) p.fail("trailing input");
    auto bv = t.body.vars();
    if (t.head) {
      for (const auto& v : t.head->vars())
        if (bv.count(v)) t.frontier.insert(v);
      t.head->answer.assign(t.frontier.begin(), t.frontier.end());
      t.head->normalize();
    }
    t.body.answer.assign(t.frontier.begin(), t.frontier.end());
    t.body.normalize();
    out.push_back(t);
  }
  return out;
}

std::string print_ontology(const Ontology& o) {
  std::string s;
  for (const auto& ci : o.cis) s += to_string(ci.lhs) + " sub " + to_string(ci.rhs) + "\n";
  return s;
}

std::string print_database(const Database& d) {
  std::string s;
  for (const auto& f : d.cfacts) s += f.name + "(" + f.c + ")\n";
  for (const auto& f : d.rfacts) s += f.name + "(" + f.a + "," + f.b + ")\n";
  return s;
}

namespace {
std::string atom_str(const Atom& a) { return a.pred + "(" + a.x + (a.binary() ? "," + a.y : "") + ")"; }
}  // namespace

std::string print_cq(const CQ& q, const std::string& head) {
  std::string s = head + "(";
  for (size_t i = 0; i < q.answer.size(); ++i) s += (i ? "," : "") + q.answer[i];
  s += ") :- ";
  for (size_t i = 0; i < q.atoms.size(); ++i) s += (i ? ", " : "") + atom_str(q.atoms[i]);
  return s + ".";
}

std::string print_query(const UCQ& q) {
  std::string s;
  for (const auto& c : q) s += print_cq(c) + "\n";
  return s;
}

std::string print_tgds(const std::vector<TGD>& ts) {
  std::string s;
  for (const auto& t : ts) {
    for (size_t i = 0; i < t.body.atoms.size(); ++i) s += (i ? ", " : "") + atom_str(t.body.atoms[i]);
    s += " -> ";
    if (!t.head) {
      s += "false";
    } else {
      for (size_t i = 0; i < t.head->atoms.size(); ++i) s += (i ? ", " : "") + atom_str(t.head->atoms[i]);
    }
    s += "\n";
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace omq
