#include "etr/bench/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <set>

namespace etr::bench {

std::string_view ToString(Measure m) {
  switch (m) {
    case Measure::kCorrectProduced: return "correct_produced";
    case Measure::kCorrectEndorsed: return "correct_endorsed";
    case Measure::kCorrectBoth: return "correct_both";
    case Measure::kEtrProduced: return "etr_produced";
    case Measure::kEtrEndorsed: return "etr_endorsed";
    case Measure::kEtrEither: return "etr_either";
    case Measure::kFallacyProduced: return "fallacy_produced";
    case Measure::kFallacyEndorsed: return "fallacy_endorsed";
    case Measure::kFallacyEither: return "fallacy_either";
  }
  return "?";
}

std::string_view Caption(Measure m) {
  switch (m) {
    case Measure::kCorrectProduced: return "Correct answer produced";
    case Measure::kCorrectEndorsed: return "Correct answer endorsed";
    case Measure::kCorrectBoth: return "Correct production and endorsement";
    case Measure::kEtrProduced: return "Production predicted by ETR";
    case Measure::kEtrEndorsed: return "Endorsement predicted by ETR";
    case Measure::kEtrEither: return "Either above predicted by ETR";
    case Measure::kFallacyProduced: return "Production fallacious";
    case Measure::kFallacyEndorsed: return "Fallacy endorsed";
    case Measure::kFallacyEither: return "Fallacy produced or endorsed";
  }
  return "?";
}

std::optional<bool> Value(const ScoreRecord& r, Measure m) {
  const bool p = r.has_production, q = r.has_query;
  switch (m) {
    case Measure::kCorrectProduced: return p ? std::optional(r.correct_produced) : std::nullopt;
    case Measure::kCorrectEndorsed: return q ? std::optional(r.correct_endorsed) : std::nullopt;
    case Measure::kCorrectBoth:
      return p && q ? std::optional(r.correct_produced && r.correct_endorsed) : std::nullopt;
    case Measure::kEtrProduced: return p ? std::optional(r.etr_produced) : std::nullopt;
    case Measure::kEtrEndorsed: return q ? std::optional(r.etr_endorsed) : std::nullopt;
    case Measure::kEtrEither:
      return p && q ? std::optional(r.etr_produced || r.etr_endorsed) : std::nullopt;
    case Measure::kFallacyProduced: return p ? std::optional(r.fallacy_produced) : std::nullopt;
    case Measure::kFallacyEndorsed: return q ? std::optional(r.fallacy_endorsed) : std::nullopt;
    case Measure::kFallacyEither:
      return p && q ? std::optional(r.fallacy_produced || r.fallacy_endorsed) : std::nullopt;
  }
  return std::nullopt;
}

Report Aggregate(const std::vector<ScoreRecord>& rs, ZeroMethod zeros) {
  std::map<std::string, std::map<std::string, const ScoreRecord*>> by_group;  // group -> item -> record
  for (const ScoreRecord& r : rs) by_group[r.group][r.problem + "\x1f" + r.tmpl] = &r;

  Report out;
  for (const auto& [group, items] : by_group) {
    GroupSummary s;
    s.group = group;
    s.items = items.size();
    for (Measure m : kAllMeasures) {
      Fraction f;
      for (const auto& [_, r] : items)
        if (auto v = Value(*r, m)) {
          ++f.den;
          f.num += *v;
        }
      s.measures.push_back(f);
    }
    for (const auto& [_, r] : items) s.needs_review += r->needs_review;
    out.groups.push_back(std::move(s));

    const std::pair<Measure, Measure> pairs[] = {{Measure::kEtrProduced, Measure::kEtrEndorsed},
                                                 {Measure::kCorrectProduced, Measure::kCorrectEndorsed},
                                                 {Measure::kFallacyProduced, Measure::kFallacyEndorsed}};
    for (auto [a, b] : pairs) {
      std::vector<double> x, y;
      for (const auto& [_, r] : items) {
        auto va = Value(*r, a), vb = Value(*r, b);
        if (!va || !vb) continue;
        x.push_back(*va);
        y.push_back(*vb);
      }
      Contrast c{group, a, b, {}};
      if (x.empty()) {
        c.test.note = "no items with both conditions";
      } else {
        c.test = WilcoxonSignedRank(x, y, zeros);
      }
      out.contrasts.push_back(std::move(c));
    }
  }

  // Groups are paired item by item on the problem id (and template when
  // both groups share it).
  for (auto a = by_group.begin(); a != by_group.end(); ++a)
    for (auto b = std::next(a); b != by_group.end(); ++b)
      for (Measure m : kAllMeasures) {
        auto key_of = [](const ScoreRecord* r) { return r->problem; };
        std::map<std::string, std::vector<const ScoreRecord*>> left, right;
        for (const auto& [_, r] : a->second) left[key_of(r)].push_back(r);
        for (const auto& [_, r] : b->second) right[key_of(r)].push_back(r);
        std::vector<double> x, y;
        for (const auto& [id, ls] : left) {
          auto rit = right.find(id);
          if (rit == right.end() || ls.size() != 1 || rit->second.size() != 1) continue;
          auto va = Value(*ls.front(), m), vb = Value(*rit->second.front(), m);
          if (!va || !vb) continue;
          x.push_back(*va);
          y.push_back(*vb);
        }
        PairwiseTest t{m, a->first, b->first, x.size(), {}};
        if (x.empty()) {
          t.test.note = "no paired items";
        } else {
          t.test = WilcoxonSignedRank(x, y, zeros);
        }
        out.pairwise.push_back(std::move(t));
      }
  return out;
}

namespace {

std::string Percent(const Fraction& f) {
  if (!f.den) return "-";
  return std::to_string(static_cast<long>(std::lround(100.0 * f.value()))) + "%";
}

std::string PValue(const WilcoxonResult& w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", w.p);
  std::string s = buf;
  const std::string mark = SignificanceMark(w.p);
  if (!mark.empty() && w.n) s += " (" + mark + ")";
  return s;
}

std::string Pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string RenderText(const Report& r) {
  std::string out;
  std::size_t col = 12;
  for (const GroupSummary& g : r.groups) col = std::max(col, g.group.size() + 2);
  out += Pad("measure", 38);
  for (const GroupSummary& g : r.groups) out += Pad(g.group, col);
  out += "\n";
  for (std::size_t i = 0; i < std::size(kAllMeasures); ++i) {
    out += Pad(std::string(Caption(kAllMeasures[i])), 38);
    for (const GroupSummary& g : r.groups) out += Pad(Percent(g.measures[i]), col);
    out += "\n";
  }
  out += Pad("items (needs review)", 38);
  for (const GroupSummary& g : r.groups)
    out += Pad(std::to_string(g.items) + " (" + std::to_string(g.needs_review) + ")", col);
  out += "\n\nproduction vs endorsement (Wilcoxon signed-rank, two-sided p)\n";
  for (const Contrast& c : r.contrasts)
    out += "  " + Pad(c.group, col) + Pad(std::string(ToString(c.a)) + " vs " + std::string(ToString(c.b)), 40) +
           PValue(c.test) + "\n";
  if (!r.pairwise.empty()) {
    out += "\nbetween groups (Wilcoxon signed-rank, two-sided p)\n";
    for (const PairwiseTest& t : r.pairwise)
      out += "  " + Pad(t.group_a + " vs " + t.group_b, 2 * col + 4) + Pad(std::string(ToString(t.measure)), 20) +
             PValue(t.test) + "\n";
  }
  return out;
}

std::string RenderJsonl(const Report& r) {
  std::string out;
  auto test_json = [](const WilcoxonResult& w) {
    nlohmann::json j;
    j["p"] = w.p;
    j["n"] = w.n;
    j["w_plus"] = w.w_plus;
    j["w_minus"] = w.w_minus;
    j["exact"] = w.exact;
    j["significance"] = w.n ? SignificanceMark(w.p) : "";
    if (!w.note.empty()) j["note"] = w.note;
    return j;
  };
  for (const GroupSummary& g : r.groups) {
    for (std::size_t i = 0; i < std::size(kAllMeasures); ++i) {
      nlohmann::json j;
      j["type"] = "measure";
      j["group"] = g.group;
      j["measure"] = std::string(ToString(kAllMeasures[i]));
      j["num"] = g.measures[i].num;
      j["den"] = g.measures[i].den;
      j["fraction"] = g.measures[i].value();
      out += j.dump() + "\n";
    }
    nlohmann::json j;
    j["type"] = "group";
    j["group"] = g.group;
    j["items"] = g.items;
    j["needs_review"] = g.needs_review;
    out += j.dump() + "\n";
  }
  for (const Contrast& c : r.contrasts) {
    nlohmann::json j = test_json(c.test);
    j["type"] = "contrast";
    j["group"] = c.group;
    j["a"] = std::string(ToString(c.a));
    j["b"] = std::string(ToString(c.b));
    out += j.dump() + "\n";
  }
  for (const PairwiseTest& t : r.pairwise) {
    nlohmann::json j = test_json(t.test);
    j["type"] = "pairwise";
    j["measure"] = std::string(ToString(t.measure));
    j["group_a"] = t.group_a;
    j["group_b"] = t.group_b;
    j["paired"] = t.paired;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace etr::bench
