#include "etr/corpus.hpp"

namespace etr {

namespace {

constexpr std::string_view kCorpus = R"dsl(# Propositional inference.

problem illusory-ace-queen
kind: inference
english: You have a hand of several cards. There is at least an ace and a queen in the hand or at least a king and a jack. There is an ace in the hand.
premise: (ace & queen) | (king & jack)
premise: ace
ask: production
expect: queen

problem illusory-ace-queen-reversed
kind: inference
english: You have a hand of several cards. There is an ace in the hand. There is at least an ace and a queen in the hand or at least a king and a jack.
premise: ace
premise: (ace & queen) | (king & jack)
ask: query queen
expect: nothing

problem modus-ponens
kind: inference
english: If there is an ace in the hand, then there is a king in the hand. There is an ace in the hand.
premise: if ace then king
premise: ace
ask: production
expect: king

problem jane-mark
kind: inference
english: Either Jane is kneeling by the fire and she is looking at the TV or else Mark is standing at the window and he is peering into the garden. Jane is kneeling by the fire.
gloss jane-kneeling: Jane is kneeling by the fire
gloss jane-tv: Jane is looking at the TV
gloss mark-garden: Mark is peering into the garden
gloss mark-window: Mark is standing at the window
premise: (jane-kneeling & jane-tv) | (mark-window & mark-garden)
premise: jane-kneeling
ask: production
expect: jane-tv

problem king-ten
kind: inference
english: There is an ace and a queen, or else a king and a ten. There is a king.
premise: (ace & queen) | (king & ten)
premise: king
ask: production
expect: ten

problem king-ten-reversed
kind: inference
english: There is a king. There is an ace and a queen, or else a king and a ten.
premise: king
premise: (ace & queen) | (king & ten)
ask: query ten
expect: nothing

# Monadic quantifiers.

problem syllogism-blue-square
kind: quantified
english: Some blue cards are textured. All square cards are blue.
noun: cards
premise: some blue are textured
premise: all square are blue
ask: production
expect: some square are textured

# Card selection.

problem wason-E4
kind: selection
english: There are several cards on the table, which have a letter on one side and a number on the other side. One card shows an E, one card shows a C, one card shows a 4, and one card shows a 5. Which cards do you have to turn over to determine if the following statement is true? If a card has an E on one side then it has a four on the other side.
label 4: a four
label E: an E
cards: E C 4 5
rule: if E then 4
ask: production
expect: 4 E

# Probability ranking.

problem linda
kind: probability
english: Linda is thirty-one years old. She majored in philosophy. As a student, she was deeply concerned with issues of discrimination and social justice. Please rank order by probability (highest to lowest) the following: Linda is a bank teller. Linda is a bank teller and is active in the feminist movement.
label teller: Linda is a bank teller
label teller-feminist: Linda is a bank teller and is active in the feminist movement
evidence: philosophy & social-justice
hyp teller: teller
hyp teller-feminist: teller & feminist
congruent: social-justice -> feminist
ask: production
expect: teller-feminist > teller

problem math-genius
kind: probability
gloss climber: the person is active in the climbing community
gloss computer-scientist: the person is a computer scientist
gloss math-genius: the person is a math genius
gloss outdoorswoman: the person is an athletic outdoorswoman
label climber: The person is active in the climbing community
label scientist-climber: The person is a computer scientist and is active in the climbing community
evidence: math-genius & outdoorswoman
hyp climber: climber
hyp scientist-climber: computer-scientist & climber
congruent: math-genius -> computer-scientist
congruent: outdoorswoman -> climber
ask: production
expect: scientist-climber > climber

# Decisions across framings.

problem economist
kind: decision
english without-print: Which of the following subscription would you be most likely to purchase. 1. Economist.com subscription - US $59.00. One-year subscription to Economist.com. Includes online access to all articles from The Economist since 1997. 2. Print & web subscription - US $125.00. One-year subscription to the print edition of The Economist and online access to all articles from The Economist since 1997.
english with-print: Which of the following subscription would you be most likely to purchase. 1. Economist.com subscription - US $59.00. One-year subscription to Economist.com. Includes online access to all articles from The Economist since 1997. 2. Print subscription - US $ 125.00. One-year subscription to the print edition of The Economist. 3. Print & web subscription - US $125.00. One-year subscription to the print edition of The Economist and online access to all articles from The Economist since 1997.
label print-only: the print subscription
label print-web: the print & web subscription
label web-only: the Economist.com subscription
menu without-print: opt web-only: web & cheap
menu without-print: opt print-web: print & web
mode without-print: decoy
menu with-print: opt web-only: web & cheap
menu with-print: opt print-only: print
menu with-print: opt print-web: print & web
mode with-print: decoy
priorities: web
ask: production
expect: without-print: indifferent(print-web,web-only); with-print: print-web

problem video-opportunity-cost
kind: decision
english plain: You have saved some money for fun. Buy an entertaining video or don't buy an entertaining video?
english explicit: You have saved some money for fun. Buy an entertaining video or save your money for other purchases?
label buy: buying the entertaining video
label not-buy: not buying the entertaining video
label explicit/not-buy: saving your money for other purchases
menu plain: opt buy: fun
menu plain: opt not-buy: none
menu explicit: opt buy: fun
menu explicit: opt not-buy: none
mode explicit: expanded
priorities: fun
expand not-buy: fun
ask: production
expect: plain: buy; explicit: indifferent(buy,not-buy)
)dsl";

}  // namespace

std::string_view CorpusText() { return kCorpus; }

const std::vector<Problem>& Corpus() {
  static const std::vector<Problem> corpus = ParseProblems(kCorpus);
  return corpus;
}

const Problem* FindProblem(const std::vector<Problem>& ps, std::string_view id) {
  for (const Problem& p : ps)
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace etr
