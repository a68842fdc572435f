// Copyright 2026 The dpsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpsynth/ltl.h"

#include <cctype>
#include <fstream>
#include <map>

#include "dpsynth/error.h"
#include "dpsynth/io.h"

namespace dpsynth {

struct LtlFormula::Node {
  LtlOp op;
  std::string atom;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

LtlFormula LtlFormula::True() {
  return LtlFormula(std::make_shared<const Node>(Node{LtlOp::kTrue, {}, {}, {}}));
}

LtlFormula LtlFormula::Atom(std::string name) {
  return LtlFormula(std::make_shared<const Node>(
      Node{LtlOp::kAtom, std::move(name), {}, {}}));
}

LtlFormula LtlFormula::Not(const LtlFormula& f) {
  if (f.op() == LtlOp::kNot) return f.left();
  return LtlFormula(
      std::make_shared<const Node>(Node{LtlOp::kNot, {}, f.node_, {}}));
}

LtlFormula LtlFormula::And(const LtlFormula& f, const LtlFormula& g) {
  return LtlFormula(
      std::make_shared<const Node>(Node{LtlOp::kAnd, {}, f.node_, g.node_}));
}

LtlFormula LtlFormula::Or(const LtlFormula& f, const LtlFormula& g) {
  return Not(And(Not(f), Not(g)));
}

LtlFormula LtlFormula::Next(const LtlFormula& f) {
  return LtlFormula(
      std::make_shared<const Node>(Node{LtlOp::kNext, {}, f.node_, {}}));
}

LtlFormula LtlFormula::Until(const LtlFormula& f, const LtlFormula& g) {
  return LtlFormula(
      std::make_shared<const Node>(Node{LtlOp::kUntil, {}, f.node_, g.node_}));
}

LtlFormula LtlFormula::Eventually(const LtlFormula& f) {
  return Until(True(), f);
}

LtlFormula LtlFormula::Always(const LtlFormula& f) {
  return Not(Eventually(Not(f)));
}

LtlOp LtlFormula::op() const { return node_->op; }
const std::string& LtlFormula::atom() const { return node_->atom; }
LtlFormula LtlFormula::left() const { return LtlFormula(node_->left); }
LtlFormula LtlFormula::right() const { return LtlFormula(node_->right); }

std::string LtlFormula::ToString() const {
  switch (op()) {
    case LtlOp::kTrue:
      return "T";
    case LtlOp::kAtom:
      return atom();
    case LtlOp::kNot:
      return "!" + left().ToString();
    case LtlOp::kNext:
      return "X " + left().ToString();
    case LtlOp::kAnd:
      return "(" + left().ToString() + " & " + right().ToString() + ")";
    case LtlOp::kUntil:
      return "(" + left().ToString() + " U " + right().ToString() + ")";
  }
  return {};
}

bool operator==(const LtlFormula& f, const LtlFormula& g) {
  if (f.node_ == g.node_) return true;
  if (f.op() != g.op() || f.atom() != g.atom()) return false;
  switch (f.op()) {
    case LtlOp::kTrue:
    case LtlOp::kAtom:
      return true;
    case LtlOp::kNot:
    case LtlOp::kNext:
      return f.left() == g.left();
    case LtlOp::kAnd:
    case LtlOp::kUntil:
      return f.left() == g.left() && f.right() == g.right();
  }
  return false;
}

namespace {

enum class Tok { kIdent, kNot, kAnd, kOr, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (c == '!' || c == '~') {
      out.push_back({Tok::kNot, "!", col});
      ++i;
    } else if (c == '&' || c == '|') {
      out.push_back({c == '&' ? Tok::kAnd : Tok::kOr, std::string(1, c), col});
      i += (i + 1 < text.size() && text[i + 1] == c) ? 2 : 1;
    } else if (c == '(') {
      out.push_back({Tok::kLParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 1,
                       col);
    }
  }
  out.push_back({Tok::kEnd, "", text.size() + 1});
  return out;
}

bool IsTemporalPrefix(const std::string& word) {
  for (char c : word) {
    if (c != 'X' && c != 'F' && c != 'G') return false;
  }
  return !word.empty();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  LtlFormula Parse() {
    LtlFormula f = ParseOr();
    if (Peek().kind != Tok::kEnd) Fail("unexpected '" + Peek().text + "'");
    return f;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, 1, Peek().column);
  }

  LtlFormula ParseOr() {
    LtlFormula f = ParseAnd();
    while (Peek().kind == Tok::kOr) {
      ++pos_;
      f = LtlFormula::Or(f, ParseAnd());
    }
    return f;
  }

  LtlFormula ParseAnd() {
    LtlFormula f = ParseUntil();
    while (Peek().kind == Tok::kAnd) {
      ++pos_;
      f = LtlFormula::And(f, ParseUntil());
    }
    return f;
  }

  LtlFormula ParseUntil() {
    LtlFormula f = ParseUnary();
    if (Peek().kind == Tok::kIdent && Peek().text == "U") {
      ++pos_;
      return LtlFormula::Until(f, ParseUntil());
    }
    return f;
  }

  LtlFormula ParseUnary() {
    const Token& t = Peek();
    if (t.kind == Tok::kNot) {
      ++pos_;
      return LtlFormula::Not(ParseUnary());
    }
    if (t.kind == Tok::kIdent && IsTemporalPrefix(t.text)) {
      std::string ops = t.text;
      ++pos_;
      LtlFormula f = ParseUnary();
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (*it == 'X') f = LtlFormula::Next(f);
        if (*it == 'F') f = LtlFormula::Eventually(f);
        if (*it == 'G') f = LtlFormula::Always(f);
      }
      return f;
    }
    return ParsePrimary();
  }

  LtlFormula ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kLParen: {
        ++pos_;
        LtlFormula f = ParseOr();
        if (Peek().kind != Tok::kRParen) Fail("expected ')'");
        ++pos_;
        return f;
      }
      case Tok::kIdent:
        if (t.text == "U") Fail("'U' needs a left operand");
        ++pos_;
        if (t.text == "T") return LtlFormula::True();
        return LtlFormula::Atom(t.text);
      case Tok::kEnd:
        Fail("unexpected end of formula");
      default:
        Fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Truth values of a subformula at every lasso position. Positions past the
// last wrap to the start of the cycle.
class LassoEvaluator {
 public:
  explicit LassoEvaluator(const LassoWord& word) : word_(word) {
    size_ = word.prefix.size() + word.cycle.size();
  }

  const std::vector<bool>& Eval(const LtlFormula& f) {
    std::string key = f.ToString();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<bool> v(size_, false);
    switch (f.op()) {
      case LtlOp::kTrue:
        v.assign(size_, true);
        break;
      case LtlOp::kAtom:
        for (std::size_t i = 0; i < size_; ++i) v[i] = Letter(i) == f.atom();
        break;
      case LtlOp::kNot: {
        const auto& a = Eval(f.left());
        for (std::size_t i = 0; i < size_; ++i) v[i] = !a[i];
        break;
      }
      case LtlOp::kAnd: {
        std::vector<bool> a = Eval(f.left());
        const auto& b = Eval(f.right());
        for (std::size_t i = 0; i < size_; ++i) v[i] = a[i] && b[i];
        break;
      }
      case LtlOp::kNext: {
        const auto& a = Eval(f.left());
        for (std::size_t i = 0; i < size_; ++i) v[i] = a[Succ(i)];
        break;
      }
      case LtlOp::kUntil: {
        std::vector<bool> a = Eval(f.left());
        const auto& b = Eval(f.right());
        // Least fixpoint of v = b | (a & X v); two backward passes suffice
        // because the wrap edge is the only back edge.
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t k = size_; k-- > 0;) {
            v[k] = b[k] || (a[k] && v[Succ(k)]);
          }
        }
        break;
      }
    }
    return cache_.emplace(std::move(key), std::move(v)).first->second;
  }

 private:
  const std::string& Letter(std::size_t i) const {
    return i < word_.prefix.size() ? word_.prefix[i]
                                   : word_.cycle[i - word_.prefix.size()];
  }
  std::size_t Succ(std::size_t i) const {
    return i + 1 < size_ ? i + 1 : word_.prefix.size();
  }

  const LassoWord& word_;
  std::size_t size_;
  std::map<std::string, std::vector<bool>> cache_;
};

// G !b  ==  !(T U b)
bool MatchAlwaysNot(const LtlFormula& f, std::string* b) {
  if (f.op() != LtlOp::kNot) return false;
  LtlFormula u = f.left();
  if (u.op() != LtlOp::kUntil || u.left().op() != LtlOp::kTrue) return false;
  if (u.right().op() != LtlOp::kAtom) return false;
  *b = u.right().atom();
  return true;
}

// F a  ==  T U a
bool MatchEventually(const LtlFormula& f, std::string* a) {
  if (f.op() != LtlOp::kUntil || f.left().op() != LtlOp::kTrue) return false;
  if (f.right().op() != LtlOp::kAtom) return false;
  *a = f.right().atom();
  return true;
}

// GF a  ==  !(T U !(T U a))
bool MatchAlwaysEventually(const LtlFormula& f, std::string* a) {
  if (f.op() != LtlOp::kNot) return false;
  LtlFormula u = f.left();
  if (u.op() != LtlOp::kUntil || u.left().op() != LtlOp::kTrue) return false;
  if (u.right().op() != LtlOp::kNot) return false;
  return MatchEventually(u.right().left(), a);
}

std::size_t Letter(const std::vector<std::string>& alphabet,
                   const std::string& atom) {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == atom) return i;
  }
  throw ModelError("atom '" + atom + "' is not in the alphabet");
}

}  // namespace

LtlFormula ParseLtl(std::string_view text) {
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) throw ParseError("empty formula", 1, 1);
  return Parser(Tokenize(text)).Parse();
}

bool EvalLtlOnLasso(const LtlFormula& formula, const LassoWord& word) {
  if (word.cycle.empty()) throw ModelError("lasso cycle must be non-empty");
  LassoEvaluator eval(word);
  return eval.Eval(formula)[0];
}

RabinAutomaton DraFromTemplate(const LtlFormula& formula,
                               const std::vector<std::string>& alphabet) {
  const std::size_t k = alphabet.size();
  std::string a, b;
  enum class Shape { kRecurrence, kReach, kSafety } shape;

  if (MatchAlwaysNot(formula, &b)) {
    shape = Shape::kSafety;
  } else if (formula.op() == LtlOp::kAnd) {
    LtlFormula f = formula.left();
    LtlFormula g = formula.right();
    if (!MatchAlwaysNot(g, &b)) std::swap(f, g);
    if (!MatchAlwaysNot(g, &b)) {
      throw ModelError("formula " + formula.ToString() +
                       " has no built-in automaton; supply one with --dra");
    }
    if (MatchAlwaysEventually(f, &a)) {
      shape = Shape::kRecurrence;
    } else if (MatchEventually(f, &a)) {
      shape = Shape::kReach;
    } else {
      throw ModelError("formula " + formula.ToString() +
                       " has no built-in automaton; supply one with --dra");
    }
  } else {
    throw ModelError("formula " + formula.ToString() +
                     " has no built-in automaton; supply one with --dra");
  }

  const std::size_t lb = Letter(alphabet, b);
  if (shape == Shape::kSafety) {
    std::vector<std::size_t> step(2 * k);
    for (std::size_t l = 0; l < k; ++l) {
      step[0 * k + l] = l == lb ? 1 : 0;
      step[1 * k + l] = 1;
    }
    return RabinAutomaton(2, alphabet, std::move(step), 0,
                          {RabinPair{{1}, {0}}});
  }

  const std::size_t la = Letter(alphabet, a);
  if (la == lb) {
    throw ModelError("template atoms must differ, got '" + a + "' twice");
  }
  std::vector<std::size_t> step(3 * k);
  for (std::size_t l = 0; l < k; ++l) {
    step[2 * k + l] = 2;
    if (l == lb) {
      step[0 * k + l] = step[1 * k + l] = 2;
    } else if (shape == Shape::kRecurrence) {
      step[0 * k + l] = step[1 * k + l] = l == la ? 1 : 0;
    } else {
      step[0 * k + l] = l == la ? 1 : 0;
      step[1 * k + l] = 1;
    }
  }
  RabinPair pair = shape == Shape::kRecurrence ? RabinPair{{}, {1}}
                                               : RabinPair{{2}, {1}};
  return RabinAutomaton(3, alphabet, std::move(step), 0, {pair});
}

RabinAutomaton LoadDra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open automaton file '" + path + "'");
  return ReadAutomaton(in);
}

void SaveDra(const RabinAutomaton& automaton, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write automaton file '" + path + "'");
  WriteAutomaton(automaton, out);
}

}  // namespace dpsynth
