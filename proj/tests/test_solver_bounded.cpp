#include <doctest.h>

#include <random>
#include <set>

#include "domino/solver_bounded.hpp"
#include "domino/strategies.hpp"
#include "domino/verifier.hpp"
#include "oracles/flat_game.hpp"

using namespace domino;

namespace {

Color C(int i) { return Color{static_cast<std::uint16_t>(i)}; }

Pattern word(std::initializer_list<int> colors) {
  std::vector<Pattern::Entry> e;
  std::int32_t x = 0;
  for (int c : colors) e.emplace_back(Cell(x++), C(c));
  return Pattern(std::move(e));
}

Sft aa() { return Sft(1, {"a", "b"}, {word({0, 0})}); }

}  // namespace

TEST_CASE("radius schedule and legal moves") {
  CHECK(omega_radius(3, 1) == 4);
  CHECK(omega_radius(3, 3) == 1);
  CHECK(omega_radius(200, 1) >= (std::int64_t{1} << 40));

  MultiBoardPosition one{{Pattern({{Cell(0), C(0)}})}, 0, 3, TurnCursor{}};
  const auto moves = omega_legal_moves(one, 1, 1);
  std::set<std::int32_t> cells;
  int passes = 0, opens = 0;
  for (const auto& m : moves) {
    if (m.kind == OmegaMove::Kind::Pass) ++passes;
    if (m.kind == OmegaMove::Kind::Open) ++opens;
    if (m.kind == OmegaMove::Kind::Place) cells.insert(m.cell[0]);
  }
  CHECK(passes == 1);
  CHECK(opens == 1);
  std::set<std::int32_t> want;
  for (int x = -4; x <= 4; ++x)
    if (x != 0) want.insert(x);
  CHECK(cells == want);

  const auto start = initial_omega_position(3, TurnWord::alternating());
  const auto first = omega_legal_moves(start, 2, 1);
  REQUIRE(first.size() == 3);
  CHECK(first[0] == OmegaMove::pass());
  CHECK(first[1] == OmegaMove::open(C(0)));
  CHECK(first[2] == OmegaMove::open(C(1)));
  CHECK(omega_legal_moves(start, 2, 1, Variant::NoPass).size() == 2);

  MultiBoardPosition done{{}, 3, 3, TurnCursor{}};
  CHECK(done.over());
  CHECK(omega_legal_moves(done, 2, 1).empty());
  CHECK_THROWS_AS(apply_omega_move(done, OmegaMove::pass(), 1), IllegalMove);
}

TEST_CASE("canonical boards") {
  const auto c = canonicalize({Pattern({{Cell(5), C(1)}}), Pattern({{Cell(-3), C(0)}, {Cell(-2), C(0)}})});
  REQUIRE(c.boards.size() == 2);
  CHECK(c.boards[0] < c.boards[1]);
  for (std::size_t i = 0; i < 2; ++i) CHECK(c.boards[i].begin()->first == Cell(0));
}

TEST_CASE("small examples") {
  const Sft single(1, {"x"}, {word({0})});
  CHECK(solve_omega(single, 1, TurnWord::alternating()).a_wins == true);
  CHECK(solve_omega(single, 0, TurnWord::alternating()).a_wins == false);
  CHECK(solve_omega(aa(), 2, TurnWord::alternating()).a_wins == false);
  const auto r = solve_omega(aa(), 3, TurnWord::alternating());
  CHECK(r.a_wins == true);
  CHECK_FALSE(r.principal_line.empty());
  CHECK_THROWS_AS(OmegaSolver(Sft(1, {"a"}, {Pattern({{Cell(0), C(0)}, {Cell(2), C(0)}})}), 2, TurnWord::alternating()),
                  InputError);

  OmegaOptions tight;
  tight.node_budget = 2;
  CHECK_FALSE(solve_omega(aa(), 3, TurnWord::alternating(), tight).a_wins.has_value());
}

TEST_CASE("agrees with the flat game search") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> words{"(AB)*", "(ABB)*", "B|(AB)*", "(AAB)*", "s2"};
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = trial % 4 == 3 ? 2 : 1;
    const int colors = 1 + static_cast<int>(rng() % 2);
    std::vector<std::string> alpha;
    for (int c = 0; c < colors; ++c) alpha.push_back(std::to_string(c));
    std::vector<Pattern> forb;
    for (int f = 0, nf = 1 + static_cast<int>(rng() % 2); f < nf; ++f) {
      const int len = 1 + static_cast<int>(rng() % 3);
      std::vector<Pattern::Entry> e;
      for (int j = 0; j < len; ++j) {
        const Cell cell = dim == 2 && rng() % 2 ? Cell(0, j) : Cell(j, 0);
        if (std::none_of(e.begin(), e.end(), [&](const auto& x) { return x.first == cell; }))
          e.emplace_back(cell, C(static_cast<int>(rng() % colors)));
      }
      Pattern p(std::move(e));
      if (is_connected(p)) forb.push_back(std::move(p));
    }
    if (forb.empty()) continue;
    const Sft s(dim, alpha, forb);
    const int T = 1 + static_cast<int>(rng() % (dim == 2 ? 3 : 4));
    const auto variant = rng() % 2 ? Variant::PassAllowed : Variant::NoPass;
    const auto turns = parse_turn_word(words[rng() % words.size()]);
    OmegaOptions o;
    o.variant = variant;
    const auto got = solve_omega(s, T, turns, o);
    oracle::FlatGame flat(s, T, turns, variant);
    REQUIRE(got.a_wins.has_value());
    CHECK(*got.a_wins == flat.a_wins());
  }
}

TEST_CASE("far-placement pruning does not change results") {
  for (const auto& s : {aa(), Sft(1, {"0", "1"}, {word({0, 0, 0}), word({1, 1, 1})})}) {
    for (int T = 1; T <= 5; ++T) {
      for (auto variant : {Variant::PassAllowed, Variant::NoPass}) {
        OmegaOptions on, off;
        on.variant = off.variant = variant;
        off.prune_far = false;
        const auto turns = parse_turn_word("B|(AB)*");
        CHECK(solve_omega(s, T, turns, on).a_wins == solve_omega(s, T, turns, off).a_wins);
      }
    }
  }
}

TEST_CASE("trace transformation examples") {
  const auto far = theta({Move::place(Cell(0), C(0)), Move::place(Cell(1000000), C(1))}, 3);
  REQUIRE(far.steps.size() == 2);
  CHECK(far.steps[0].omega.kind == OmegaMove::Kind::Open);
  CHECK(far.steps[1].omega.kind == OmegaMove::Kind::Open);
  CHECK(far.steps[1].boards.size() == 2);

  const auto near = theta({Move::place(Cell(0), C(0)), Move::place(Cell(1), C(1))}, 3);
  CHECK(near.steps[1].omega.kind == OmegaMove::Kind::Place);
  REQUIRE(near.steps[1].boards.size() == 1);
  CHECK(near.steps[1].boards[0].local.size() == 2);

  CHECK_THROWS_AS(theta({Move::pass(), Move::pass()}, 1), InputError);
}

TEST_CASE("trace transformation keeps its invariants on random traces") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 2);
    const int T = 1 + static_cast<int>(rng() % 6);
    std::vector<Move> moves;
    Pattern flat;
    for (int t = 1; t <= T; ++t) {
      const auto r = rng() % 6;
      if (r == 0 || (r < 4 && flat.empty())) {
        moves.push_back(Move::pass());
        continue;
      }
      Cell c;
      if (r < 4) {
        // Near an existing tile, within the current radius.
        auto it = flat.begin();
        std::advance(it, static_cast<long>(rng() % flat.size()));
        const auto rad = omega_radius(T, t);
        c = it->first;
        c[0] += static_cast<std::int32_t>(static_cast<std::int64_t>(rng() % (2 * rad + 1)) - rad);
      } else {
        c = Cell(static_cast<std::int32_t>(rng() % 100000) - 50000, dim == 2 ? static_cast<std::int32_t>(rng() % 7) : 0);
      }
      if (flat.contains(c)) {
        moves.push_back(Move::pass());
        continue;
      }
      const Color col = C(static_cast<int>(rng() % 3));
      flat.insert(c, col);
      moves.push_back(Move::place(c, col));
    }
    const auto tr = theta(moves, T);
    REQUIRE(tr.steps.size() == moves.size());
    Pattern replay;
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      const auto& m = tr.steps[i].flat;
      if (!m.is_pass()) replay.insert(m.cell, m.color);
      const auto bad = check_theta_invariants(replay, tr.steps[i].boards, T, static_cast<int>(i) + 1);
      CHECK_MESSAGE(!bad, (bad ? *bad : ""));
    }
  }
}

TEST_CASE("reconstructed strategy wins the flat game") {
  const Sft single(1, {"x"}, {word({0})});
  auto s1 = std::make_shared<OmegaSolver>(single, 1, TurnWord::alternating());
  auto a1 = reconstruct_strategy(s1);
  auto b1 = pass_strategy();
  const auto t1 = run_game(single, *a1, *b1, TurnWord::alternating());
  CHECK(t1.outcome == GameTrace::Outcome::AFinal);
  CHECK(t1.end_ply == 1);

  // Against every B reply within reach, for the full horizon.
  auto solver = std::make_shared<OmegaSolver>(aa(), 3, TurnWord::alternating());
  REQUIRE(solver->a_wins(solver->initial()));
  VerifySpec spec{aa()};
  spec.strategy = std::shared_ptr<const Strategy>(reconstruct_strategy(solver));
  spec.depth = 3;
  spec.locality = 8;
  const auto rep = exhaust(spec);
  CHECK(rep.verdict == Verdict::Verified);

  // With B opening boards of its own, A's boards sit more than 2^T apart.
  auto a = reconstruct_strategy(solver);
  auto b = scripted_strategy({Move::place(Cell(3), C(1))});
  RunOptions ro;
  ro.max_plies = 3;
  const auto tr = run_game(aa(), *a, *b, TurnWord::alternating(), ro);
  CHECK(tr.outcome == GameTrace::Outcome::AFinal);
  std::vector<std::int32_t> a_tiles;
  for (const auto& p : tr.plies)
    if (p.who == Player::A && !p.move.is_pass()) a_tiles.push_back(p.move.cell[0]);
  REQUIRE_FALSE(a_tiles.empty());
  CHECK(std::abs(a_tiles.front() - 3) > 8);
}
