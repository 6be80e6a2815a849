#include <doctest.h>

#include <random>

#include "domino/reductions.hpp"
#include "domino/strategies.hpp"
#include "domino/verifier.hpp"

using namespace domino;

namespace {

Color C(int i) { return Color{static_cast<std::uint16_t>(i)}; }

Pattern word(std::initializer_list<int> colors) {
  std::vector<Pattern::Entry> e;
  std::int32_t x = 0;
  for (int c : colors) e.emplace_back(Cell(x++), C(c));
  return Pattern(std::move(e));
}

Sft eleven() { return Sft(1, {"0", "1"}, {word({1, 1})}); }

// Move chosen by `s` after the scripted history, replayed through observe.
Move reply(Strategy& s, const Sft& sft, const std::vector<TracePly>& history, const TurnWord& turns,
           Variant variant = Variant::PassAllowed) {
  Pattern p;
  std::uint64_t ply = 0;
  for (const auto& h : history) {
    if (!h.move.is_pass()) p.insert(h.move.cell, h.move.color);
    ++ply;
    s.observe(h.move, h.who, GameView{sft, p, ply, turns, variant});
  }
  return s.choose(GameView{sft, p, ply, turns, variant});
}

}  // namespace

TEST_CASE("run_game basics") {
  const Sft single(1, {"x"}, {word({0})});
  auto a = scripted_strategy({Move::place(Cell(4), C(0))});
  auto b = pass_strategy();
  const auto t = run_game(single, *a, *b, TurnWord::alternating());
  CHECK(t.outcome == GameTrace::Outcome::AFinal);
  CHECK(t.end_ply == 1);
  REQUIRE(t.witness);
  CHECK(t.witness->offset == Cell(4));

  // A final pattern counts for A even when B completes it.
  auto a2 = pass_strategy();
  auto b2 = scripted_strategy({Move::place(Cell(0), C(0))});
  CHECK(run_game(single, *a2, *b2, TurnWord::alternating()).outcome == GameTrace::Outcome::AFinal);

  auto p1 = pass_strategy(), p2 = pass_strategy();
  RunOptions ro;
  ro.max_plies = 7;
  const auto s = run_game(single, *p1, *p2, TurnWord::alternating(), ro);
  CHECK(s.outcome == GameTrace::Outcome::Survived);
  CHECK(s.end_ply == 7);

  ro.variant = Variant::NoPass;
  auto p3 = pass_strategy(), p4 = pass_strategy();
  const auto ill = run_game(single, *p3, *p4, TurnWord::alternating(), ro);
  CHECK(ill.outcome == GameTrace::Outcome::IllegalMove);
  CHECK(ill.faulting == Player::A);
}

TEST_CASE("black strategy") {
  const ArrowLayout L{2};
  const Sft g = build_arrow_game(eleven());
  auto a = a_black_strategy(L, 1);
  const auto turns = TurnWord::alternating();
  CHECK(reply(*a, g, {}, turns) == Move::place(Cell(0), L.black()));

  auto a2 = a_black_strategy(L, 1);
  CHECK(reply(*a2, g, {{Player::A, Move::place(Cell(0), L.black())}, {Player::B, Move::pass()}}, turns) ==
        Move::place(Cell(1), L.black()));

  // B answering every black tile with an arrow pointing at it.
  class Feeder final : public Strategy {
   public:
    explicit Feeder(ArrowLayout l) : l_(l) {}
    std::string name() const override { return "feeder"; }
    Move choose(const GameView& v) override {
      for (const auto& [cell, col] : v.pattern) {
        if (!l_.is_black(col)) continue;
        if (!v.pattern.contains(cell + Cell(1))) return Move::place(cell + Cell(1), l_.arrow(C(0), C(0), Direction::Left));
        if (!v.pattern.contains(cell - Cell(1))) return Move::place(cell - Cell(1), l_.arrow(C(0), C(0), Direction::Right));
      }
      return Move::pass();
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Feeder>(*this); }

   private:
    ArrowLayout l_;
  };
  Feeder feeder(L);
  auto a3 = a_black_strategy(L, 1);
  RunOptions ro;
  ro.max_plies = 60;
  ro.monitors = {no_interpretation_monitor(L)};
  CHECK(run_game(g, *a3, feeder, turns, ro).outcome == GameTrace::Outcome::AFinal);
  ro.monitors.clear();

  // A passing B leaves black tiles uninterpreted, which A turns into a win.
  auto a4 = a_black_strategy(L, 1);
  auto pass = pass_strategy();
  CHECK(run_game(g, *a4, *pass, turns, ro).outcome == GameTrace::Outcome::AFinal);
}

TEST_CASE("parity strategy") {
  const ArrowLayout L{2};
  const Sft g = build_arrow_game(eleven());
  const PeriodicConfiguration x{{C(0), C(1)}, 0};
  auto b = b_parity_strategy(eleven(), x);
  // A plays black at 0; B points x_1 = 1 back at x_0 = 0 from cell 1.
  CHECK(reply(*b, g, {{Player::A, Move::place(Cell(0), L.black())}}, TurnWord::alternating()) ==
        Move::place(Cell(1), L.arrow(C(1), C(0), Direction::Left)));
  CHECK_THROWS_AS(b_parity_strategy(eleven(), PeriodicConfiguration{{C(1)}, 0}), InputError);

  std::vector<InvariantMonitor> mons{parity_monitor()};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto bb = b_parity_strategy(eleven(), x);
    auto ra = random_strategy(seed, 3);
    RunOptions ro;
    ro.max_plies = 50;
    ro.monitors = mons;
    const auto t = run_game(g, *ra, *bb, TurnWord::alternating(), ro);
    CHECK_MESSAGE(t.outcome == GameTrace::Outcome::Survived, std::string(to_string(t.outcome) + " " + t.message));
  }
}

TEST_CASE("isolation strategy") {
  CHECK(isolation_turns(2, 1, 1) == v_bound(2, 1, 1));
  const auto turns = parse_turn_word("(AAB)*");
  const Sft none(1, {"0", "1"}, {});
  const std::vector<Color> w{C(1), C(0), C(1)};
  const std::int64_t c = 2, delta = 2;
  const auto v = isolation_turns(w.size(), c, 1);

  // Counts occurrences of w at least delta away from every other tile.
  auto isolated = [&](const Pattern& p) {
    int count = 0;
    for (const auto& [cell, col] : p) {
      bool match = true;
      for (std::size_t j = 0; j < w.size() && match; ++j) match = p.at(cell + Cell(static_cast<std::int32_t>(j))) == w[j];
      if (!match) continue;
      bool alone = true;
      for (const auto& [o, oc] : p) {
        if (o[0] >= cell[0] && o[0] < cell[0] + static_cast<std::int32_t>(w.size())) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
          alone = alone && l1_distance(o, cell + Cell(static_cast<std::int32_t>(j))) > delta;
      }
      count += alone;
    }
    return count;
  };

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto a = a_isolation_strategy(turns, IsolationConfig{w, c, delta, 1});
    auto b = random_strategy(seed, 4);
    RunOptions ro;
    ro.max_plies = static_cast<std::uint64_t>(v);
    const auto t = run_game(none, *a, *b, turns, ro);
    REQUIRE(t.outcome == GameTrace::Outcome::Survived);
    CHECK(t.end_ply <= static_cast<std::uint64_t>(v));
    CHECK(isolated(t.final_pattern) >= c);
  }

  CHECK_THROWS_AS(a_isolation_strategy(parse_turn_word("(AB)*"), IsolationConfig{w, 1, 1, std::nullopt}), InputError);
  CHECK_THROWS_AS(a_isolation_strategy(turns, IsolationConfig{w, 0, 1, 1}), InputError);
}

TEST_CASE("isolation against every B reply") {
  const auto turns = parse_turn_word("(AAB)*");
  const Sft none(1, {"0", "1"}, {});
  const std::vector<Color> w{C(1), C(1)};
  const auto v = isolation_turns(w.size(), 1, 1);
  InvariantMonitor end{"isolated-at-end", [&](const Pattern& p, Player, std::uint64_t ply) -> std::optional<std::string> {
                         if (ply != static_cast<std::uint64_t>(v)) return std::nullopt;
                         for (const auto& [cell, col] : p) {
                           if (col != C(1) || p.at(cell + Cell(1)) != C(1)) continue;
                           bool alone = true;
                           for (const auto& [o, oc] : p)
                             if (o != cell && o != cell + Cell(1))
                               alone = alone && l1_distance(o, cell) > 1 && l1_distance(o, cell + Cell(1)) > 1;
                           if (alone) return std::nullopt;
                         }
                         return "no isolated occurrence";
                       }};
  VerifySpec spec{none};
  spec.strategy = std::shared_ptr<const Strategy>(a_isolation_strategy(turns, IsolationConfig{w, 1, 1, 1}));
  spec.turns = turns;
  spec.depth = static_cast<int>(v);
  spec.locality = 3;
  spec.objective = Objective::MonitorHolds;
  spec.monitors = {end};
  const auto rep = exhaust(spec);
  CHECK_MESSAGE(rep.verdict == Verdict::Verified, rep.reason);
}

TEST_CASE("four-rule strategy") {
  const Sft f2 = marking_game(Marking::F2);
  const auto turns = TurnWord::alternating();
  auto b = b_four_rule_strategy();
  CHECK(reply(*b, f2, {{Player::A, Move::place(Cell(5), C(0))}}, turns) == Move::place(Cell(4), C(1)));

  // After b a _ : the empty cell right of the a.
  auto b2 = b_four_rule_strategy();
  CHECK(reply(*b2, f2, {{Player::A, Move::place(Cell(1), C(0))}, {Player::B, Move::place(Cell(0), C(1))}, {Player::A, Move::pass()}},
              turns) == Move::place(Cell(2), C(1)));

  // Left of b a b a when every a is already guarded.
  auto b3 = b_four_rule_strategy();
  CHECK(reply(*b3, f2,
              {{Player::A, Move::place(Cell(1), C(0))},
               {Player::B, Move::place(Cell(0), C(1))},
               {Player::A, Move::place(Cell(3), C(0))},
               {Player::B, Move::place(Cell(2), C(1))},
               {Player::A, Move::place(Cell(4), C(1))}},
              turns) == Move::place(Cell(-1), C(1)));

  auto b4 = b_four_rule_strategy();
  CHECK(reply(*b4, f2, {}, turns) == Move::pass());
  auto b5 = b_four_rule_strategy();
  CHECK_THROWS_AS(reply(*b5, f2, {}, turns, Variant::NoPass), StrategyUndefined);
}

TEST_CASE("palindrome strategy") {
  const Sft g = palindrome_game(1);
  const auto turns = TurnWord::alternating();
  auto a = a_palindrome_strategy(1);
  CHECK(reply(*a, g, {}, turns) == Move::place(Cell(0), C(0)));

  // B next to the coloured block is mirrored.
  auto a2 = a_palindrome_strategy(1);
  CHECK(reply(*a2, g,
              {{Player::A, Move::place(Cell(0), C(0))},
               {Player::B, Move::place(Cell(1), C(1))},
               {Player::A, Move::place(Cell(-1), C(1))},
               {Player::B, Move::place(Cell(2), C(0))},
               {Player::A, Move::place(Cell(-2), C(0))},
               {Player::B, Move::place(Cell(3), C(1))}},
              turns) == Move::place(Cell(-3), C(1)));

  // B with a gap before it: A copies its colour beyond it, then fills a side.
  auto a3 = a_palindrome_strategy(1);
  const std::vector<TracePly> h{{Player::A, Move::place(Cell(0), C(0))}, {Player::B, Move::place(Cell(-2), C(1))}};
  CHECK(reply(*a3, g, h, turns) == Move::place(Cell(-3), C(1)));
  auto a4 = a_palindrome_strategy(1);
  auto b4 = scripted_strategy({Move::place(Cell(-2), C(1)), Move::place(Cell(-4), C(0))});
  RunOptions ro;
  ro.max_plies = 5;
  const auto t = run_game(g, *a4, *b4, turns, ro);
  REQUIRE(t.plies.size() >= 5);
  CHECK(t.plies[2].move == Move::place(Cell(-3), C(1)));
  CHECK(t.plies[4].move == Move::place(Cell(-1), C(1)));

  auto a5 = a_palindrome_strategy(1);
  CHECK_THROWS_AS(reply(*a5, g, {{Player::A, Move::place(Cell(0), C(0))}, {Player::B, Move::pass()}}, turns),
                  StrategyUndefined);
  CHECK(palindrome_game(2).alphabet_size() == 3);
  CHECK_THROWS_AS(palindrome_game(0), InputError);
}

TEST_CASE("1234 strategies") {
  const Sft g = game_1234();
  CHECK(g.alphabet_size() == 5);
  const Pattern p({{Cell(0), C(1)}, {Cell(1), C(2)}});
  const auto c = census_1234(p);
  CHECK(c.two_or_more == 1);
  CHECK(c.one == 0);  // every other window through 0 or 1 is dead
  CHECK(census_1234(Pattern({{Cell(0), C(1)}})).one == 1);
  CHECK(census_1234(Pattern({{Cell(0), C(2)}})).one == 1);

  // B kills the two-tile window first.
  auto b = b_1234_strategy();
  const auto m = reply(*b, g, {{Player::A, Move::place(Cell(0), C(1))}, {Player::B, Move::pass()}, {Player::A, Move::place(Cell(1), C(2))}},
                       TurnWord::s2());
  Pattern after = p;
  after.insert(m.cell, m.color);
  CHECK(census_1234(after).two_or_more == 0);

  auto a = a_greedy_1234_strategy();
  auto bb = b_1234_strategy();
  RunOptions ro;
  ro.max_plies = 30;
  ro.monitors = {checkpoint_1234_monitor()};
  const auto t = run_game(g, *a, *bb, TurnWord::s2(), ro);
  CHECK_MESSAGE(t.outcome == GameTrace::Outcome::Survived, t.message);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto ra = random_strategy(seed, 3);
    auto rb = b_1234_strategy();
    const auto rt = run_game(g, *ra, *rb, TurnWord::s2(), ro);
    CHECK_MESSAGE(rt.outcome == GameTrace::Outcome::Survived, rt.message);
  }
}
