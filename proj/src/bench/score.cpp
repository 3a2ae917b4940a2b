#include "etr/bench/score.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "etr/error.hpp"
#include "etr/text.hpp"

namespace etr::bench {

std::string Normalize(std::string_view s) {
  std::string spaced;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c >= 0x80 || c == '&' || c == '$')
      spaced += static_cast<char>(std::tolower(c));
    else
      spaced += ' ';
  }
  std::istringstream in(spaced);
  std::string out;
  for (std::string w; in >> w;) {
    if (w == "a" || w == "an" || w == "the") continue;
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

namespace {

bool ContainsNormalized(const std::string& hay, const std::string& needle) {
  if (needle.empty()) return false;
  return (" " + hay + " ").find(" " + needle + " ") != std::string::npos;
}

bool MatchesNormalized(const std::string& hay, const Pattern& p) {
  if (p.empty()) return false;
  return std::all_of(p.begin(), p.end(), [&](const std::vector<std::string>& group) {
    return std::any_of(group.begin(), group.end(),
                       [&](const std::string& phrase) { return ContainsNormalized(hay, Normalize(phrase)); });
  });
}

}  // namespace

bool ContainsPhrase(std::string_view haystack, std::string_view phrase) {
  return ContainsNormalized(Normalize(haystack), Normalize(phrase));
}

bool Matches(std::string_view response, const Pattern& p) { return MatchesNormalized(Normalize(response), p); }

const std::vector<std::string>& NothingFollows() {
  static const std::vector<std::string> v{
      "nothing follows",       "nothing else follows",  "nothing further follows",
      "nothing new follows",   "nothing can be concluded", "nothing can be inferred",
      "nothing definite",      "nothing with certainty", "no conclusion",
      "no further conclusion", "cannot conclude",       "can not conclude",
      "can t conclude",        "does not follow",       "doesn t follow",
      "nothing in particular follows"};
  return v;
}

namespace {

std::string Words(const std::string& id) {
  std::string out = id;
  std::replace(out.begin(), out.end(), '-', ' ');
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::vector<std::string> LiteralVariants(const Problem& p, const Literal& l) {
  if (p.glosses.count(l.atom.id())) return {Phrase(p, l)};
  const std::string w = Words(l.atom.id());
  if (l.positive) return {"there is " + w, w + " is in the hand"};
  return {"there is no " + w, "there is not " + w, "there isn't " + w, "it is not the case that there is " + w};
}

Pattern StatePattern(const Problem& p, const State& s) {
  if (s.empty()) return {NothingFollows()};
  Pattern out;
  for (const Literal& l : s.literals()) out.push_back(LiteralVariants(p, l));
  return out;
}

std::vector<std::string> ReadbackVariants(const Problem& p, const QuantPremise& q) {
  const std::string noun = p.noun.value_or("things");
  const std::string s = Words(q.subject), t = Words(q.predicate);
  return {"some " + s + " " + noun + " are " + t, "some " + s + " are " + t,
          "some " + t + " " + noun + " are " + s, "some " + t + " are " + s};
}

}  // namespace

ScoreKey BuildScoreKey(const std::vector<Problem>& problems) {
  ScoreKey key;
  for (const Problem& p : problems) {
    KeyEntry e;
    e.problem = p;
    e.prediction = Predict(p);
    e.classical = Classify(p, e.prediction);
    e.fallacious = !e.classical.sanctioned;
    if (p.kind != ProblemKind::kDecision) e.query = QueryFor(p, e.prediction, e.classical);
    if (p.kind == ProblemKind::kInference) {
      e.etr_pattern = StatePattern(p, e.prediction.conclusion);
      e.correct_pattern = StatePattern(p, e.classical.consequences);
    } else if (p.kind == ProblemKind::kQuantified) {
      for (const std::string& r : e.prediction.readbacks)
        e.etr_pattern.push_back(ReadbackVariants(p, ParseQuantPremise(r)));
      for (const QuantPremise& q : e.classical.valid_readbacks)
        e.correct_pattern.push_back(ReadbackVariants(p, q));
      if (e.etr_pattern.empty()) e.etr_pattern = {NothingFollows()};
      if (e.correct_pattern.empty()) e.correct_pattern = {NothingFollows()};
    }
    if (!key.entries.emplace(p.id, std::move(e)).second) throw ConfigError("duplicate problem id " + p.id);
  }
  return key;
}

std::vector<Override> ParseOverrides(const std::string& jsonl) {
  std::vector<Override> out;
  std::istringstream in(jsonl);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      Override o;
      o.problem = j.at("problem").get<std::string>();
      auto c = ParseCondition(j.at("condition").get<std::string>());
      if (!c) throw ConfigError("unknown condition");
      o.condition = *c;
      if (j.contains("template")) {
        o.tmpl = ParseTemplate(j["template"].get<std::string>());
        if (!o.tmpl) throw ConfigError("unknown template");
      }
      if (j.contains("correct")) o.correct = j["correct"].get<bool>();
      if (j.contains("etr")) o.etr = j["etr"].get<bool>();
      o.note = j.value("note", "");
      out.push_back(std::move(o));
    } catch (const std::exception& e) {
      throw ConfigError("overrides line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::optional<bool> ExtractYesNo(std::string_view response) {
  const std::string n = Normalize(response);
  const std::string first = n.substr(0, n.find(' '));
  if (first == "yes") return true;
  if (first == "no") return false;
  for (const char* neg : {"does not follow", "doesn t follow", "not follow", "not necessarily",
                          "cannot conclude", "can not conclude", "cannot be concluded", "not valid"})
    if (ContainsNormalized(n, neg)) return false;
  for (const char* pos : {"it follows", "does follow", "yes"})
    if (ContainsNormalized(n, pos)) return true;
  return std::nullopt;
}

std::vector<std::string> ExtractCards(std::string_view response, const std::vector<std::string>& cards) {
  static const char* kNumbers[] = {"zero", "one", "two",   "three", "four", "five",
                                   "six",  "seven", "eight", "nine", "ten"};
  std::set<std::string> words;
  std::istringstream in(Normalize(response));
  for (std::string w; in >> w;) {
    for (int i = 0; i <= 10; ++i)
      if (w == kNumbers[i]) w = std::to_string(i);
    words.insert(w);
  }
  std::vector<std::string> out;
  for (const std::string& c : cards)
    if (words.count(text::Lower(c)) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Finds each candidate, longest first, masking what was matched so shorter
// labels cannot match inside longer ones. Returns first position per owner.
std::map<std::string, std::size_t> Locate(const std::string& normalized,
                                          std::vector<std::pair<std::string, std::string>> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() > b.first.size() : a < b;
  });
  std::string hay = " " + normalized + " ";
  std::map<std::string, std::size_t> first;
  for (const auto& [phrase, owner] : candidates) {
    if (phrase.empty()) continue;
    const std::string needle = " " + phrase + " ";
    for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
      auto it = first.find(owner);
      if (it == first.end() || pos < it->second) first[owner] = pos;
      std::fill(hay.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                hay.begin() + static_cast<std::ptrdiff_t>(pos + needle.size() - 1), '\x01');
    }
  }
  return first;
}

}  // namespace

std::optional<std::vector<std::string>> ExtractRanking(std::string_view response, const Problem& p) {
  std::vector<std::pair<std::string, std::string>> candidates;
  for (const Hypothesis& h : p.hypotheses) {
    candidates.push_back({Normalize(text::StripPeriod(LabelOf(p, h.name))), h.name});
    candidates.push_back({Normalize(h.name), h.name});
  }
  const auto first = Locate(Normalize(response), candidates);
  if (first.size() != p.hypotheses.size()) return std::nullopt;
  std::vector<std::string> order;
  for (const auto& [name, _] : first) order.push_back(name);
  std::sort(order.begin(), order.end(),
            [&](const std::string& a, const std::string& b) { return first.at(a) < first.at(b); });
  return order;
}

std::optional<std::vector<std::string>> ExtractChoice(std::string_view response, const Problem& p,
                                                      const std::string& menu) {
  const Menu* m = nullptr;
  for (const Menu& x : p.menus)
    if (x.name == menu) m = &x;
  if (!m) return std::nullopt;
  const std::string n = Normalize(response);
  std::vector<std::string> all;
  for (const Option& o : m->options) all.push_back(o.name);
  std::sort(all.begin(), all.end());
  for (const char* tie : {"indifferent", "no preference", "either option", "equally good"})
    if (ContainsNormalized(n, tie)) return all;
  std::vector<std::pair<std::string, std::string>> candidates;
  for (const Option& o : m->options) {
    candidates.push_back({Normalize(text::StripPeriod(LabelOf(p, o.name, menu))), o.name});
    candidates.push_back({Normalize(o.name), o.name});
  }
  const auto found = Locate(n, candidates);
  if (found.size() != 1) return std::nullopt;
  return std::vector<std::string>{found.begin()->first};
}

namespace {

struct Verdict {
  bool correct = false;
  bool etr = false;
  bool review = false;
  std::vector<std::string> notes;
};

const TranscriptRecord* PartOf(const std::vector<const TranscriptRecord*>& ts, const std::string& part) {
  for (const TranscriptRecord* t : ts)
    if (t->part == part) return t;
  return nullptr;
}

bool Unusable(const TranscriptRecord* t, Verdict& v) {
  if (!t) {
    v.review = true;
    v.notes.push_back("missing transcript");
    return true;
  }
  if (!t->error.empty()) v.notes.push_back(t->part.empty() ? t->error : t->part + ": " + t->error);
  if (text::Trim(t->response).empty()) {
    v.review = true;
    v.notes.push_back("empty response");
    return true;
  }
  return false;
}

Verdict ScoreProduction(const KeyEntry& e, const std::vector<const TranscriptRecord*>& ts) {
  Verdict v;
  const Problem& p = e.problem;
  if (p.kind == ProblemKind::kDecision) {
    std::vector<MenuChoice> got;
    bool etr = true;
    for (std::size_t i = 0; i < p.menus.size(); ++i) {
      const TranscriptRecord* t = PartOf(ts, p.menus[i].name);
      if (Unusable(t, v)) continue;
      auto chosen = ExtractChoice(t->response, p, p.menus[i].name);
      if (!chosen) {
        v.review = true;
        v.notes.push_back(p.menus[i].name + ": no choice recognised");
        continue;
      }
      std::vector<std::string> options;
      for (const Option& o : p.menus[i].options) options.push_back(o.name);
      etr = etr && *chosen == e.prediction.choices[i].chosen;
      got.push_back({p.menus[i].name, options, *chosen});
    }
    if (got.size() == p.menus.size()) {
      v.etr = etr;
      v.correct = ChoiceConsistency(got).empty();
    }
    return v;
  }
  const TranscriptRecord* t = PartOf(ts, "");
  if (Unusable(t, v)) return v;
  const std::string n = Normalize(t->response);
  switch (p.kind) {
    case ProblemKind::kInference:
    case ProblemKind::kQuantified: {
      const bool nothing = MatchesNormalized(n, {NothingFollows()});
      auto judge = [&](const Pattern& pat) {
        if (pat.size() == 1 && pat.front() == NothingFollows()) return nothing;
        const bool m = MatchesNormalized(n, pat);
        if (m && nothing) {
          v.review = true;
          v.notes.push_back("states a conclusion and that nothing follows");
          return false;
        }
        return m;
      };
      v.etr = judge(e.etr_pattern);
      v.correct = judge(e.correct_pattern);
      if (!v.etr && !v.correct && !v.review) {
        // Implied but unstated conclusions need a human look.
        v.review = true;
        v.notes.push_back("no expected answer recognised");
      }
      break;
    }
    case ProblemKind::kSelection: {
      const auto cards = ExtractCards(t->response, p.cards);
      if (cards.empty()) {
        v.review = true;
        v.notes.push_back("no card recognised");
        break;
      }
      v.etr = cards == e.prediction.selected;
      v.correct = cards == e.classical.correct_cards;
      break;
    }
    case ProblemKind::kProbability: {
      const auto order = ExtractRanking(t->response, p);
      if (!order) {
        v.review = true;
        v.notes.push_back("ranking not recognised");
        break;
      }
      RankingJudgment got;
      for (std::size_t i = 0; i < order->size(); ++i) {
        for (const Hypothesis& h : p.hypotheses)
          if (h.name == (*order)[i]) got.hypotheses.push_back(h);
        got.rank.push_back(static_cast<int>(order->size() - i));
      }
      v.correct = CoherenceViolations(got).empty();
      auto predicted_rank = [&](const std::string& name) {
        for (std::size_t i = 0; i < e.prediction.ranking.hypotheses.size(); ++i)
          if (e.prediction.ranking.hypotheses[i].name == name) return e.prediction.ranking.rank[i];
        return 0;
      };
      v.etr = true;
      for (std::size_t i = 0; i + 1 < order->size(); ++i)
        if (predicted_rank((*order)[i]) < predicted_rank((*order)[i + 1])) v.etr = false;
      break;
    }
    case ProblemKind::kDecision:
      break;
  }
  return v;
}

Verdict ScoreQuery(const KeyEntry& e, const std::vector<const TranscriptRecord*>& ts) {
  Verdict v;
  bool etr_answer = true, correct_answer = e.classical.sanctioned;
  if (e.query) {
    etr_answer = e.query->etr_answer;
    correct_answer = e.query->correct_answer;
  }
  bool yes = true;
  for (const std::string& part : PromptParts(e.problem)) {
    const TranscriptRecord* t = PartOf(ts, part);
    if (Unusable(t, v)) continue;
    const auto answer = ExtractYesNo(t->response);
    if (!answer) {
      v.review = true;
      v.notes.push_back((part.empty() ? "" : part + ": ") + std::string("no yes/no recognised"));
      continue;
    }
    yes = yes && *answer;
  }
  if (!v.review) {
    v.etr = yes == etr_answer;
    v.correct = yes == correct_answer;
  }
  return v;
}

}  // namespace

ScoreResult Score(const std::vector<TranscriptRecord>& ts, const ScoreKey& key, const std::string& group) {
  using CellKey = std::pair<std::string, std::string>;  // problem, template
  std::map<CellKey, std::map<Condition, std::vector<const TranscriptRecord*>>> cells;
  for (const TranscriptRecord& t : ts) cells[{t.problem, std::string(ToString(t.tmpl))}][t.condition].push_back(&t);

  ScoreResult out;
  for (const auto& [cell, by_condition] : cells) {
    auto it = key.entries.find(cell.first);
    if (it == key.entries.end()) {
      out.log.push_back("skipped transcripts for unknown problem '" + cell.first + "'");
      continue;
    }
    const KeyEntry& e = it->second;
    ScoreRecord r;
    r.problem = cell.first;
    r.tmpl = cell.second;
    r.group = group.empty() ? cell.second : group;
    r.fallacious = e.fallacious;
    bool review_production = false, review_query = false;
    if (auto c = by_condition.find(Condition::kProduction); c != by_condition.end()) {
      const Verdict v = ScoreProduction(e, c->second);
      r.has_production = true;
      r.correct_produced = v.correct;
      r.etr_produced = v.etr;
      review_production = v.review;
      for (const std::string& n : v.notes) r.notes.push_back("production: " + n);
    }
    if (auto c = by_condition.find(Condition::kQuery); c != by_condition.end()) {
      const Verdict v = ScoreQuery(e, c->second);
      r.has_query = true;
      r.correct_endorsed = v.correct;
      r.etr_endorsed = v.etr;
      review_query = v.review;
      for (const std::string& n : v.notes) r.notes.push_back("query: " + n);
    }
    for (const Override& o : key.overrides) {
      if (o.problem != r.problem) continue;
      if (o.tmpl && ToString(*o.tmpl) != r.tmpl) continue;
      const bool production = o.condition == Condition::kProduction;
      if (production ? !r.has_production : !r.has_query) continue;
      bool& correct = production ? r.correct_produced : r.correct_endorsed;
      bool& etr = production ? r.etr_produced : r.etr_endorsed;
      if (o.correct) correct = *o.correct;
      if (o.etr) etr = *o.etr;
      (production ? review_production : review_query) = false;
      const std::string what = std::string(ToString(o.condition)) + " override for " + r.problem + "/" + r.tmpl +
                               (o.note.empty() ? "" : " (" + o.note + ")");
      r.notes.push_back(what);
      out.log.push_back("applied " + what);
    }
    r.needs_review = review_production || review_query;
    r.fallacy_produced = r.etr_produced && r.fallacious;
    r.fallacy_endorsed = r.etr_endorsed && r.fallacious;
    out.records.push_back(std::move(r));
  }
  return out;
}

std::string ToJsonLine(const ScoreRecord& r) {
  nlohmann::json j;
  j["problem"] = r.problem;
  j["template"] = r.tmpl;
  j["group"] = r.group;
  j["fallacious"] = r.fallacious;
  j["has_production"] = r.has_production;
  j["has_query"] = r.has_query;
  j["correct_produced"] = r.correct_produced;
  j["etr_produced"] = r.etr_produced;
  j["fallacy_produced"] = r.fallacy_produced;
  j["correct_endorsed"] = r.correct_endorsed;
  j["etr_endorsed"] = r.etr_endorsed;
  j["fallacy_endorsed"] = r.fallacy_endorsed;
  j["needs_review"] = r.needs_review;
  j["notes"] = r.notes;
  return j.dump();
}

ScoreRecord ScoreFromJsonLine(const std::string& line) {
  try {
    const nlohmann::json j = nlohmann::json::parse(line);
    ScoreRecord r;
    r.problem = j.at("problem").get<std::string>();
    r.tmpl = j.at("template").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.fallacious = j.at("fallacious").get<bool>();
    r.has_production = j.at("has_production").get<bool>();
    r.has_query = j.at("has_query").get<bool>();
    r.correct_produced = j.at("correct_produced").get<bool>();
    r.etr_produced = j.at("etr_produced").get<bool>();
    r.fallacy_produced = j.at("fallacy_produced").get<bool>();
    r.correct_endorsed = j.at("correct_endorsed").get<bool>();
    r.etr_endorsed = j.at("etr_endorsed").get<bool>();
    r.fallacy_endorsed = j.at("fallacy_endorsed").get<bool>();
    r.needs_review = j.at("needs_review").get<bool>();
    r.notes = j.value("notes", std::vector<std::string>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad score record: ") + e.what());
  }
}

std::vector<ScoreRecord> ReadScores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::vector<ScoreRecord> out;
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(ScoreFromJsonLine(line));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace etr::bench
