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

#ifndef DPSYNTH_LTL_H_
#define DPSYNTH_LTL_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dpsynth/rabin.h"

namespace dpsynth {

enum class LtlOp { kTrue, kAtom, kNot, kAnd, kNext, kUntil };

// Immutable LTL syntax tree over the primitive operators. Derived operators
// are expanded on construction: F p = T U p, G p = !F !p,
// p | q = !(!p & !q). Not() removes double negations.
class LtlFormula {
 public:
  static LtlFormula True();
  static LtlFormula Atom(std::string name);
  static LtlFormula Not(const LtlFormula& f);
  static LtlFormula And(const LtlFormula& f, const LtlFormula& g);
  static LtlFormula Or(const LtlFormula& f, const LtlFormula& g);
  static LtlFormula Next(const LtlFormula& f);
  static LtlFormula Until(const LtlFormula& f, const LtlFormula& g);
  static LtlFormula Eventually(const LtlFormula& f);
  static LtlFormula Always(const LtlFormula& f);

  LtlOp op() const;
  // Atom name; empty for other operators.
  const std::string& atom() const;
  // Operand of unary operators, left operand of binary ones.
  LtlFormula left() const;
  LtlFormula right() const;

  // Fully parenthesized text in the primitive operators; parses back to an
  // equal formula.
  std::string ToString() const;

  friend bool operator==(const LtlFormula& f, const LtlFormula& g);

 private:
  struct Node;
  explicit LtlFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar, loosest binding first: '|' (or '||'), '&' (or '&&'), 'U' (right
// associative), then the prefix operators '!' (or '~'), X, F, G. Letter runs
// made only of X, F and G such as "GF" are read as stacked prefix operators.
// "T" is true. Throws ParseError with the 1-based column of the offending
// token.
LtlFormula ParseLtl(std::string_view text);

// Eventually periodic word prefix . cycle^omega; one proposition per letter.
struct LassoWord {
  std::vector<std::string> prefix;
  std::vector<std::string> cycle;
};

// An atom holds at a position iff it equals the letter there. Throws
// ModelError if the cycle is empty.
bool EvalLtlOnLasso(const LtlFormula& formula, const LassoWord& word);

// Hand-built automata for the supported shapes (either conjunct order):
//   GF a & G !b   states {q0, q1 (just saw a), q2 (sink)}, pair ({}, {q1})
//   F a & G !b    states {q0, q1 (reached), q2 (sink)}, pair ({q2}, {q1})
//   G !b          states {q0, q1 (sink)}, pair ({q1}, {q0})
// Atoms must be letters of `alphabet`. Other shapes throw ModelError
// suggesting an automaton file instead.
RabinAutomaton DraFromTemplate(const LtlFormula& formula,
                               const std::vector<std::string>& alphabet);

// Automaton file I/O in the line format documented in io.h.
RabinAutomaton LoadDra(const std::string& path);
void SaveDra(const RabinAutomaton& automaton, const std::string& path);

}  // namespace dpsynth

#endif  // DPSYNTH_LTL_H_
