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

#include "dpsynth/io.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

#include "dpsynth/error.h"

namespace dpsynth {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> Lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw.substr(0, raw.find('#')));
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void Fail(const Line& line, const std::string& message) {
  throw ParseError(message, line.number, 0);
}

void ExpectArity(const Line& line, std::size_t n) {
  if (line.words.size() != n) {
    Fail(line, "'" + line.words[0] + "' expects " + std::to_string(n - 1) +
                   " argument(s)");
  }
}

std::size_t ParseIndex(const Line& line, const std::string& word,
                       std::size_t limit, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(word, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != word.size() || word.empty() || word[0] == '-') {
    Fail(line, std::string("invalid ") + what + " '" + word + "'");
  }
  if (v >= limit) {
    Fail(line, std::string(what) + " " + word + " is out of range");
  }
  return static_cast<std::size_t>(v);
}

double ParseProbability(const Line& line, const std::string& word) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(word, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != word.size()) Fail(line, "invalid number '" + word + "'");
  return v;
}

std::size_t Lookup(const Line& line, const std::vector<std::string>& names,
                   const std::string& word, const char* what) {
  auto it = std::find(names.begin(), names.end(), word);
  if (it == names.end()) {
    Fail(line, std::string("unknown ") + what + " '" + word + "'");
  }
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

std::string FormatDouble(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

StochasticGame ReadGame(std::istream& in) {
  std::vector<Line> lines = Lines(in);
  std::optional<std::size_t> num_states;
  std::vector<std::string> def, adv, props;
  bool have_def = false, have_adv = false, have_props = false;
  for (const Line& line : lines) {
    const std::string& key = line.words[0];
    auto names = [&](std::vector<std::string>& into, bool& seen) {
      if (seen) Fail(line, "duplicate '" + key + "' line");
      if (line.words.size() < 2) Fail(line, "'" + key + "' needs names");
      into.assign(line.words.begin() + 1, line.words.end());
      seen = true;
    };
    if (key == "states") {
      ExpectArity(line, 2);
      if (num_states) Fail(line, "duplicate 'states' line");
      num_states = ParseIndex(line, line.words[1], static_cast<std::size_t>(-1),
                              "state count");
    } else if (key == "def_actions") {
      names(def, have_def);
    } else if (key == "adv_actions") {
      names(adv, have_adv);
    } else if (key == "props") {
      names(props, have_props);
    } else if (key != "label" && key != "t") {
      Fail(line, "unknown keyword '" + key + "'");
    }
  }
  const std::size_t last = lines.empty() ? 0 : lines.back().number;
  if (!num_states || *num_states == 0) {
    throw ParseError("missing or zero 'states' line", last, 0);
  }
  if (!have_def || !have_adv || !have_props) {
    throw ParseError("missing def_actions, adv_actions or props line", last,
                     0);
  }
  const std::size_t n = *num_states;
  const std::size_t nd = def.size();
  const std::size_t na = adv.size();

  std::vector<std::optional<std::size_t>> labels(n);
  std::vector<std::vector<Successor>> entries(n * nd * na);
  std::vector<std::size_t> first_line(n * nd * na, 0);
  for (const Line& line : lines) {
    if (line.words[0] == "label") {
      ExpectArity(line, 3);
      std::size_t s = ParseIndex(line, line.words[1], n, "state");
      if (labels[s]) Fail(line, "state " + line.words[1] + " labeled twice");
      labels[s] = Lookup(line, props, line.words[2], "proposition");
    } else if (line.words[0] == "t") {
      ExpectArity(line, 6);
      std::size_t s = ParseIndex(line, line.words[1], n, "state");
      std::size_t d = Lookup(line, def, line.words[2], "defender action");
      std::size_t a = Lookup(line, adv, line.words[3], "adversary action");
      std::size_t next = ParseIndex(line, line.words[4], n, "state");
      double p = ParseProbability(line, line.words[5]);
      std::size_t row = (s * nd + d) * na + a;
      if (first_line[row] == 0) first_line[row] = line.number;
      entries[row].push_back({next, p});
    }
  }
  std::vector<std::size_t> label_vec(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (!labels[s]) {
      throw ParseError("state " + std::to_string(s) + " has no label", last,
                       0);
    }
    label_vec[s] = *labels[s];
  }
  std::vector<Distribution> rows(n * nd * na);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t d = 0; d < nd; ++d) {
      for (std::size_t a = 0; a < na; ++a) {
        std::size_t row = (s * nd + d) * na + a;
        std::string what = "row (" + std::to_string(s) + ", " + def[d] + ", " +
                           adv[a] + ")";
        try {
          rows[row] = MakeDistribution(std::move(entries[row]), n, what);
        } catch (const ModelError& e) {
          throw ParseError(e.what(), first_line[row], 0);
        }
      }
    }
  }
  try {
    return StochasticGame(def, adv, props, std::move(label_vec),
                          std::move(rows));
  } catch (const ModelError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

void WriteGame(const StochasticGame& game, std::ostream& out) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& w : v) s += " " + w;
    return s;
  };
  out << "states " << game.num_states() << "\n";
  out << "def_actions" << join(game.def_actions()) << "\n";
  out << "adv_actions" << join(game.adv_actions()) << "\n";
  out << "props" << join(game.props()) << "\n";
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    out << "label " << s << " " << game.label_name(s) << "\n";
  }
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    for (std::size_t d = 0; d < game.num_def_actions(); ++d) {
      for (std::size_t a = 0; a < game.num_adv_actions(); ++a) {
        for (const Successor& e : game.transition(s, d, a)) {
          out << "t " << s << " " << game.def_actions()[d] << " "
              << game.adv_actions()[a] << " " << e.state << " "
              << FormatDouble(e.prob) << "\n";
        }
      }
    }
  }
}

RabinAutomaton ReadAutomaton(std::istream& in) {
  std::vector<Line> lines = Lines(in);
  const std::size_t last = lines.empty() ? 0 : lines.back().number;
  std::optional<std::size_t> num_states;
  std::optional<std::size_t> initial;
  for (const Line& line : lines) {
    if (line.words[0] == "aut_states") {
      ExpectArity(line, 2);
      if (num_states) Fail(line, "duplicate 'aut_states' line");
      num_states = ParseIndex(line, line.words[1], static_cast<std::size_t>(-1),
                              "state count");
      if (*num_states == 0) Fail(line, "automaton needs at least one state");
    }
  }
  if (!num_states) throw ParseError("missing 'aut_states' line", last, 0);
  const std::size_t nq = *num_states;

  std::vector<std::string> alphabet;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> steps;
  std::map<std::size_t, RabinPair> pairs;
  for (const Line& line : lines) {
    const std::string& key = line.words[0];
    if (key == "aut_states") continue;
    if (key == "initial") {
      ExpectArity(line, 2);
      if (initial) Fail(line, "duplicate 'initial' line");
      initial = ParseIndex(line, line.words[1], nq, "automaton state");
    } else if (key == "step") {
      ExpectArity(line, 4);
      std::size_t q = ParseIndex(line, line.words[1], nq, "automaton state");
      const std::string& letter = line.words[2];
      auto it = std::find(alphabet.begin(), alphabet.end(), letter);
      std::size_t l = static_cast<std::size_t>(it - alphabet.begin());
      if (it == alphabet.end()) alphabet.push_back(letter);
      std::size_t q2 = ParseIndex(line, line.words[3], nq, "automaton state");
      if (!steps.emplace(std::make_pair(q, l), q2).second) {
        Fail(line, "duplicate step for (" + line.words[1] + ", " + letter +
                       ")");
      }
    } else if (key == "pair") {
      if (line.words.size() < 4 || line.words[2] != "L:") {
        Fail(line, "expected 'pair <i> L: <q>... K: <q>...'");
      }
      std::size_t i = ParseIndex(line, line.words[1],
                                 static_cast<std::size_t>(-1), "pair index");
      if (pairs.count(i)) Fail(line, "duplicate pair " + line.words[1]);
      RabinPair pair;
      bool in_k = false;
      for (std::size_t w = 3; w < line.words.size(); ++w) {
        if (line.words[w] == "K:") {
          if (in_k) Fail(line, "repeated 'K:'");
          in_k = true;
          continue;
        }
        std::size_t q = ParseIndex(line, line.words[w], nq, "automaton state");
        (in_k ? pair.inf : pair.fin).push_back(q);
      }
      if (!in_k) Fail(line, "pair is missing 'K:'");
      pairs.emplace(i, std::move(pair));
    } else {
      Fail(line, "unknown keyword '" + key + "'");
    }
  }
  if (!initial) throw ParseError("missing 'initial' line", last, 0);
  if (alphabet.empty()) throw ParseError("automaton has no step lines", last, 0);
  if (pairs.empty()) throw ParseError("automaton has no pair lines", last, 0);
  std::vector<std::size_t> step(nq * alphabet.size());
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      auto it = steps.find({q, l});
      if (it == steps.end()) {
        throw ParseError("step function is not total: no step for (" +
                             std::to_string(q) + ", " + alphabet[l] + ")",
                         last, 0);
      }
      step[q * alphabet.size() + l] = it->second;
    }
  }
  std::vector<RabinPair> pair_list;
  std::size_t expected = 0;
  for (auto& [i, pair] : pairs) {
    if (i != expected++) {
      throw ParseError("pair indices must be 0, 1, ... without gaps", last, 0);
    }
    pair_list.push_back(std::move(pair));
  }
  try {
    return RabinAutomaton(nq, std::move(alphabet), std::move(step), *initial,
                          std::move(pair_list));
  } catch (const ModelError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

void WriteAutomaton(const RabinAutomaton& automaton, std::ostream& out) {
  out << "aut_states " << automaton.num_states() << "\n";
  out << "initial " << automaton.initial() << "\n";
  for (std::size_t q = 0; q < automaton.num_states(); ++q) {
    for (std::size_t l = 0; l < automaton.alphabet().size(); ++l) {
      out << "step " << q << " " << automaton.alphabet()[l] << " "
          << automaton.Step(q, l) << "\n";
    }
  }
  for (std::size_t i = 0; i < automaton.pairs().size(); ++i) {
    out << "pair " << i << " L:";
    for (std::size_t q : automaton.pairs()[i].fin) out << " " << q;
    out << " K:";
    for (std::size_t q : automaton.pairs()[i].inf) out << " " << q;
    out << "\n";
  }
}

void WritePolicy(const MixedPolicy& policy,
                 const std::vector<std::string>& actions, std::ostream& out) {
  for (std::size_t s = 0; s < policy.num_states(); ++s) {
    for (std::size_t a = 0; a < policy.num_actions(); ++a) {
      if (policy(s, a) > 0.0) {
        out << "policy " << s << " " << actions[a] << " "
            << FormatDouble(policy(s, a)) << "\n";
      }
    }
  }
}

MixedPolicy ReadPolicy(std::istream& in, std::size_t num_states,
                       const std::vector<std::string>& actions) {
  std::vector<std::vector<double>> p(num_states,
                                     std::vector<double>(actions.size(), 0.0));
  for (const Line& line : Lines(in)) {
    if (line.words[0] != "policy") {
      Fail(line, "unknown keyword '" + line.words[0] + "'");
    }
    ExpectArity(line, 4);
    std::size_t s = ParseIndex(line, line.words[1], num_states, "state");
    std::size_t a = Lookup(line, actions, line.words[2], "action");
    p[s][a] += ParseProbability(line, line.words[3]);
  }
  try {
    return MixedPolicy(std::move(p), actions.size());
  } catch (const ModelError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

void WriteValues(const std::vector<double>& values, std::ostream& out) {
  out << "state,value\n";
  for (std::size_t s = 0; s < values.size(); ++s) {
    out << s << "," << FormatDouble(values[s]) << "\n";
  }
}

std::vector<double> ReadValues(std::istream& in) {
  std::vector<double> values;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (number == 1) {
      if (raw != "state,value") throw ParseError("bad CSV header", 1, 1);
      continue;
    }
    if (raw.empty()) continue;
    std::size_t comma = raw.find(',');
    Line line{number, {raw}};
    if (comma == std::string::npos) Fail(line, "expected 'state,value'");
    std::size_t s = ParseIndex(line, raw.substr(0, comma),
                               static_cast<std::size_t>(-1), "state");
    if (s != values.size()) Fail(line, "states must be listed in order");
    values.push_back(ParseProbability(line, raw.substr(comma + 1)));
  }
  return values;
}

void WriteAcceptingSet(const AcceptingSet& e, const ProductGame& product,
                       std::ostream& out) {
  out << "state,game_state,aut_state\n";
  for (std::size_t x : e.States()) {
    out << x << "," << product.game_state(x) << "," << product.aut_state(x)
        << "\n";
  }
}

void WriteRelation(const Relation& relation,
                   const std::vector<std::size_t>& states, std::ostream& out) {
  for (const auto& p : relation.pairs()) {
    out << "pair " << states.at(p.s) << " " << states.at(p.t) << " "
        << FormatDouble(p.distance) << "\n";
  }
}

void WriteCertificate(const DpCertificate& cert, std::ostream& out) {
  out << "epsilon " << FormatDouble(cert.epsilon) << "\n";
  out << "alpha " << FormatDouble(cert.alpha) << "\n";
  out << "M " << FormatDouble(cert.m) << "\n";
  out << "delta_min "
      << (cert.defined ? FormatDouble(cert.delta_min) : "undefined") << "\n";
  out << "pairs " << cert.pairs << "\n";
  out << "off_diagonal_pairs " << cert.off_diagonal_pairs << "\n";
}

void WriteSweep(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "epsilon,delta,M,num_dp_trajectories\n";
  for (const SweepRow& r : rows) {
    out << FormatDouble(r.epsilon) << "," << FormatDouble(r.delta) << ","
        << FormatDouble(r.m) << "," << r.count << "\n";
  }
}

}  // namespace dpsynth
