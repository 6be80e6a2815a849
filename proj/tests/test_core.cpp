#include <doctest.h>

#include <random>

#include "domino/game.hpp"
#include "domino/sft.hpp"
#include "oracles/naive_forbidden.hpp"

using namespace domino;

namespace {

Color C(int i) { return Color{static_cast<std::uint16_t>(i)}; }

Pattern word(std::initializer_list<int> colors, int from = 0) {
  std::vector<Pattern::Entry> e;
  for (int c : colors) e.emplace_back(Cell(from++), C(c));
  return Pattern(std::move(e));
}

Sft zugzwang() { return Sft(1, {"0", "1"}, {word({0, 0, 0}), word({1, 1, 1})}); }

}  // namespace

TEST_CASE("find_forbidden on literal occurrences") {
  const Sft s = zugzwang();
  auto w = find_forbidden(word({0, 0, 0}), s);
  REQUIRE(w);
  CHECK(w->index == 0);
  CHECK(w->offset == Cell(0));

  const Sft eleven(1, {"0", "1"}, {word({1, 1})});
  CHECK_FALSE(find_forbidden(word({0, 1, 0, 1}), eleven));
  CHECK_FALSE(find_forbidden(Pattern{}, s));
}

TEST_CASE("find_forbidden rejects colours outside the alphabet") {
  const Sft s = zugzwang();
  CHECK_THROWS_AS(find_forbidden(word({0, 5}), s), InputError);
}

TEST_CASE("forbidden patterns are stored normalised") {
  const Sft s(1, {"a"}, {word({0, 0}, 7)});
  CHECK(s.forbidden()[0] == word({0, 0}));
  CHECK_THROWS_AS(Sft(1, {"a"}, {Pattern{}}), InputError);
  CHECK_THROWS_AS(Sft(1, {"a"}, {word({1})}), InputError);
}

TEST_CASE("apply_move") {
  Position p{Pattern{}, TurnCursor{}, Region::whole(1)};
  auto q = apply_move(p, Move::place(Cell(0), C(0)));
  CHECK(q.pattern == word({0}));
  CHECK(q.to_move() == Player::B);

  auto r = apply_move(q, Move::pass());
  CHECK(r.pattern == q.pattern);
  CHECK(r.to_move() == Player::A);

  CHECK_THROWS_AS(apply_move(q, Move::place(Cell(0), C(1))), IllegalMove);
  CHECK_THROWS_AS(apply_move(q, Move::pass(), Variant::NoPass), IllegalMove);

  Position boxed{Pattern{}, TurnCursor{}, Region::box(1, 1)};
  CHECK_THROWS_AS(apply_move(boxed, Move::place(Cell(2), C(0))), IllegalMove);
}

TEST_CASE("legal_moves ordering") {
  Position p{Pattern{}, TurnCursor{}, Region::whole(1)};
  const std::vector<Cell> cand{Cell(0), Cell(1)};
  auto m = legal_moves(p, cand, 2, Variant::PassAllowed);
  REQUIRE(m.size() == 5);
  CHECK(m[0].is_pass());
  CHECK(m[1] == Move::place(Cell(0), C(0)));
  CHECK(m[2] == Move::place(Cell(0), C(1)));
  CHECK(m[3] == Move::place(Cell(1), C(0)));
  CHECK(m[4] == Move::place(Cell(1), C(1)));

  p.pattern = word({0});
  auto n = legal_moves(p, cand, 2, Variant::NoPass);
  REQUIRE(n.size() == 2);
  CHECK(n[0] == Move::place(Cell(1), C(0)));
  CHECK(legal_moves(p, {}, 2, Variant::NoPass).empty());
}

TEST_CASE("is_final examples") {
  const Sft s(1, {"0", "1"}, {word({1, 1, 1})});
  CHECK(is_final(word({1, 1, 1}), s));
  CHECK_FALSE(is_final(word({1, 1}), s));
  CHECK_FALSE(is_final(Pattern{}, s));
}

TEST_CASE("find_forbidden agrees with the naive scan on random patterns") {
  std::mt19937_64 rng(7);
  for (int dim = 1; dim <= 2; ++dim) {
    for (int trial = 0; trial < 400; ++trial) {
      const int colors = 2 + static_cast<int>(rng() % 2);
      std::vector<std::string> alpha;
      for (int c = 0; c < colors; ++c) alpha.push_back(std::to_string(c));
      std::vector<Pattern> forb;
      const int nf = 1 + static_cast<int>(rng() % 3);
      for (int f = 0; f < nf; ++f) {
        std::vector<Pattern::Entry> e;
        const int size = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < size; ++t) {
          Cell c(static_cast<std::int32_t>(rng() % 3), dim > 1 ? static_cast<std::int32_t>(rng() % 2) : 0);
          if (std::none_of(e.begin(), e.end(), [&](const auto& x) { return x.first == c; }))
            e.emplace_back(c, C(static_cast<int>(rng() % colors)));
        }
        forb.emplace_back(std::move(e));
      }
      const Sft s(dim, alpha, forb);
      std::vector<Pattern::Entry> tiles;
      const int size = static_cast<int>(rng() % 13);
      for (int t = 0; t < size; ++t) {
        Cell c(static_cast<std::int32_t>(rng() % 6) - 3, dim > 1 ? static_cast<std::int32_t>(rng() % 4) - 2 : 0);
        if (std::none_of(tiles.begin(), tiles.end(), [&](const auto& x) { return x.first == c; }))
          tiles.emplace_back(c, C(static_cast<int>(rng() % colors)));
      }
      const Pattern p(tiles);
      const auto got = find_forbidden(p, s);
      const auto want = oracle::naive_find(p, s);
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        CHECK(got->index == want->index);
        CHECK(got->offset == want->offset);
      }
      // Extending a final pattern keeps it final.
      if (got) {
        Pattern bigger = p;
        const Cell extra(50, 0);
        bigger.insert(extra, C(0));
        CHECK(is_final(bigger, s));
      }
    }
  }
}

TEST_CASE("support grows by one per placement and not on a pass") {
  std::mt19937_64 rng(3);
  Position p{Pattern{}, TurnCursor{}, Region::whole(2)};
  for (int i = 0; i < 50; ++i) {
    const auto before = p.pattern.size();
    if (rng() % 3 == 0) {
      p = apply_move(p, Move::pass());
      CHECK(p.pattern.size() == before);
    } else {
      Cell c(static_cast<std::int32_t>(rng() % 20), static_cast<std::int32_t>(rng() % 20));
      if (p.pattern.contains(c)) continue;
      p = apply_move(p, Move::place(c, C(0)));
      CHECK(p.pattern.size() == before + 1);
    }
  }
}

TEST_CASE("SFT text round trip") {
  const Sft s(2, {"x", "o"}, {Pattern({{Cell(0, 0), C(0)}, {Cell(1, 0), C(0)}}), Pattern({{Cell(0, 0), C(1)}, {Cell(0, 1), C(1)}})});
  const Sft back = parse_sft(dump_sft(s));
  CHECK(back.dimension() == 2);
  CHECK(back.alphabet() == s.alphabet());
  CHECK(back.forbidden() == s.forbidden());
}

TEST_CASE("SFT loader normalises offsets and reports bad input") {
  const Sft s = parse_sft(R"({"dimension":1,"alphabet":["a","b"],"forbidden":[[{"offset":[4],"color":"a"},{"offset":[5],"color":"b"}]]})");
  CHECK(s.forbidden()[0] == word({0, 1}));
  CHECK_THROWS_AS(parse_sft("{\"dimension\": 1,"), InputError);
  CHECK_THROWS_AS(parse_sft(R"({"dimension":1,"alphabet":["a"],"forbidden":[[{"offset":[0],"color":"z"}]]})"), InputError);
  CHECK_THROWS_AS(parse_sft(R"({"dimension":2,"alphabet":["a"],"forbidden":[[{"offset":[0],"color":"a"}]]})"), InputError);
}

TEST_CASE("connectivity and diameter") {
  CHECK(is_connected(word({0, 0})));
  CHECK_FALSE(is_connected(Pattern({{Cell(0), C(0)}, {Cell(2), C(0)}})));
  CHECK(is_connected(Pattern{}));
  CHECK(diameter(Pattern({{Cell(0, 0), C(0)}, {Cell(2, 1), C(0)}})) == 3);
}

TEST_CASE("box regions") {
  const auto cells = Region::box(2, 1).cells();
  CHECK(cells.size() == 9);
  CHECK(std::is_sorted(cells.begin(), cells.end()));
  CHECK_THROWS_AS(Region::whole(1).cells(), Unsupported);
  CHECK(l1_ball(Cell(0), 2, 1).size() == 5);
  CHECK(l1_ball(Cell(0, 0), 1, 2).size() == 5);
}
