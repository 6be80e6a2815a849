#include <algorithm>
#include <limits>
#include <sstream>

#include "domino/solver_bounded.hpp"

namespace domino {

std::string to_string(const OmegaMove& m, int dimension) {
  switch (m.kind) {
    case OmegaMove::Kind::Pass:
      return "pass";
    case OmegaMove::Kind::Open:
      return "open " + std::to_string(m.color.id);
    case OmegaMove::Kind::Place:
      break;
  }
  return "board " + std::to_string(m.board) + " @ " + to_string(m.cell, dimension) + " : " + std::to_string(m.color.id);
}

MultiBoardPosition initial_omega_position(int horizon, const TurnWord& turns, std::uint64_t start_index) {
  if (horizon < 0) throw InputError("horizon must be non-negative");
  MultiBoardPosition pos;
  pos.horizon = horizon;
  pos.turn = TurnCursor{turns, start_index};
  return pos;
}

std::int64_t omega_radius(int horizon, int turn) {
  const int e = horizon - turn;
  if (e < 0) return 0;
  if (e >= 40) return std::int64_t{1} << 40;  // far beyond anything enumerable
  return std::int64_t{1} << e;
}

namespace {

std::int64_t distance_to(const Pattern& board, const Cell& c) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : board) best = std::min(best, l1_distance(e.first, c));
  return best;
}

/// Uncoloured cells within `radius` of some tile of `board`, lexicographic.
std::vector<Cell> cells_near(const Pattern& board, std::int64_t radius, int dimension) {
  if (radius > 64) throw Unsupported("placement radius " + std::to_string(radius) + " too large to enumerate");
  std::vector<Cell> out;
  for (const auto& e : board) {
    auto ball = l1_ball(e.first, static_cast<int>(radius), dimension);
    out.insert(out.end(), ball.begin(), ball.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](const Cell& c) { return board.contains(c); });
  return out;
}

std::vector<OmegaMove> moves_with_radius(const MultiBoardPosition& pos, std::size_t alphabet, int dimension,
                                         Variant variant, std::int64_t radius) {
  std::vector<OmegaMove> out;
  if (pos.over()) return out;
  if (variant == Variant::PassAllowed) out.push_back(OmegaMove::pass());
  for (std::size_t k = 0; k < pos.boards.size(); ++k)
    for (const Cell& c : cells_near(pos.boards[k], radius, dimension))
      for (std::size_t a = 0; a < alphabet; ++a)
        out.push_back(OmegaMove::place(k, c, Color{static_cast<std::uint16_t>(a)}));
  for (std::size_t a = 0; a < alphabet; ++a) out.push_back(OmegaMove::open(Color{static_cast<std::uint16_t>(a)}));
  return out;
}

void apply_unchecked(MultiBoardPosition& pos, const OmegaMove& m) {
  if (m.kind == OmegaMove::Kind::Place) pos.boards[m.board].insert(m.cell, m.color);
  else if (m.kind == OmegaMove::Kind::Open) pos.boards.push_back(Pattern({{Cell{}, m.color}}));
  ++pos.plies;
  pos.turn = pos.turn.advanced();
}

}  // namespace

std::vector<OmegaMove> omega_legal_moves(const MultiBoardPosition& pos, std::size_t alphabet_size, int dimension,
                                         Variant variant) {
  return moves_with_radius(pos, alphabet_size, dimension, variant, omega_radius(pos.horizon, pos.turn_number()));
}

MultiBoardPosition apply_omega_move(const MultiBoardPosition& pos, const OmegaMove& m, int dimension, Variant variant) {
  if (pos.over()) throw IllegalMove("horizon reached");
  switch (m.kind) {
    case OmegaMove::Kind::Pass:
      if (variant == Variant::NoPass) throw IllegalMove("pass not allowed in the no-pass variant");
      break;
    case OmegaMove::Kind::Open:
      break;
    case OmegaMove::Kind::Place: {
      if (m.board >= pos.boards.size()) throw IllegalMove("no such board");
      const auto& b = pos.boards[m.board];
      if (b.contains(m.cell)) throw IllegalMove("cell already coloured");
      for (std::size_t i = static_cast<std::size_t>(dimension); i < kMaxDim; ++i)
        if (m.cell[i] != 0) throw IllegalMove("cell outside the grid dimension");
      if (distance_to(b, m.cell) > omega_radius(pos.horizon, pos.turn_number()))
        throw IllegalMove("placement too far from the board");
      break;
    }
  }
  MultiBoardPosition next = pos;
  apply_unchecked(next, m);
  return next;
}

bool omega_is_final(const MultiBoardPosition& pos, const Sft& sft) {
  return std::any_of(pos.boards.begin(), pos.boards.end(), [&](const Pattern& b) { return is_final(b, sft); });
}

CanonicalBoards canonicalize(const std::vector<Pattern>& boards) {
  std::vector<std::size_t> order(boards.size());
  std::vector<Pattern> normal(boards.size());
  for (std::size_t i = 0; i < boards.size(); ++i) {
    order[i] = i;
    normal[i] = boards[i].normalized();
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return normal[a] < normal[b]; });
  CanonicalBoards out;
  for (std::size_t i : order) {
    out.boards.push_back(normal[i]);
    out.source.push_back(i);
    out.shift.push_back(boards[i].empty() ? Cell{} : boards[i].entries().front().first);
  }
  return out;
}

// --- OmegaSolver -----------------------------------------------------------

OmegaSolver::OmegaSolver(const Sft& sft, int horizon, TurnWord turns, OmegaOptions options)
    : sft_(std::make_shared<const Sft>(sft)), horizon_(horizon), turns_(std::move(turns)), options_(options) {
  if (horizon < 0) throw InputError("horizon must be non-negative");
  if (!sft.all_connected())
    throw InputError("bounded-horizon solving assumes connected forbidden patterns; this SFT has a disconnected one");
}

std::vector<OmegaMove> OmegaSolver::moves(const MultiBoardPosition& pos) const {
  std::int64_t radius = omega_radius(pos.horizon, pos.turn_number());
  // A tile more than (remaining plies + 1) away from a board can never be joined to it by
  // a connected chain of tiles, so it behaves exactly like a freshly opened board.
  if (options_.prune_far) radius = std::min<std::int64_t>(radius, pos.horizon - pos.plies);
  return moves_with_radius(pos, sft_->alphabet_size(), sft_->dimension(), options_.variant, radius);
}

bool OmegaSolver::completes(const MultiBoardPosition& pos, const OmegaMove& m) const {
  if (m.kind == OmegaMove::Kind::Pass) return false;
  if (m.kind == OmegaMove::Kind::Open) {
    auto lookup = [&](const Cell& c) { return c == Cell{} ? static_cast<int>(m.color.id) : -1; };
    return sft_->occurs_through(lookup, Cell{});
  }
  const Pattern& b = pos.boards[m.board];
  auto lookup = [&](const Cell& c) {
    if (c == m.cell) return static_cast<int>(m.color.id);
    auto col = b.at(c);
    return col ? static_cast<int>(col->id) : -1;
  };
  return sft_->occurs_through(lookup, m.cell);
}

std::string OmegaSolver::key(const MultiBoardPosition& pos) const {
  std::string k;
  auto put = [&k](std::int32_t v) { k.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(pos.plies);
  const auto dim = static_cast<std::size_t>(sft_->dimension());
  for (const auto& b : pos.boards) {
    put(static_cast<std::int32_t>(b.size()));
    for (const auto& [cell, color] : b) {
      for (std::size_t i = 0; i < dim; ++i) put(cell[i]);
      put(color.id);
    }
  }
  return k;
}

bool OmegaSolver::search(const MultiBoardPosition& pos) {
  if (options_.node_budget && stats_.nodes >= options_.node_budget)
    throw BudgetExceeded("node budget of " + std::to_string(options_.node_budget) + " exhausted");
  ++stats_.nodes;
  if (pos.over()) return false;
  const std::string k = key(pos);
  if (auto it = memo_.find(k); it != memo_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }
  const auto ms = moves(pos);
  const bool a_turn = pos.to_move() == Player::A;
  bool result;
  if (a_turn) {
    result = std::any_of(ms.begin(), ms.end(), [&](const OmegaMove& m) { return completes(pos, m); });
    for (std::size_t i = 0; !result && i < ms.size(); ++i) {
      MultiBoardPosition child = pos;
      apply_unchecked(child, ms[i]);
      child.boards = canonicalize(child.boards).boards;
      result = search(child);
    }
  } else {
    result = true;
    for (std::size_t i = 0; result && i < ms.size(); ++i) {
      if (completes(pos, ms[i])) continue;
      MultiBoardPosition child = pos;
      apply_unchecked(child, ms[i]);
      child.boards = canonicalize(child.boards).boards;
      result = search(child);
    }
  }
  memo_.emplace(k, result);
  return result;
}

bool OmegaSolver::a_wins(const MultiBoardPosition& pos) {
  std::lock_guard lock(mutex_);
  if (omega_is_final(pos, *sft_)) return true;
  MultiBoardPosition canon = pos;
  canon.boards = canonicalize(pos.boards).boards;
  return search(canon);
}

std::optional<OmegaMove> OmegaSolver::winning_move(const MultiBoardPosition& pos) {
  std::lock_guard lock(mutex_);
  if (pos.over() || pos.to_move() != Player::A || omega_is_final(pos, *sft_)) return std::nullopt;
  const auto canon = canonicalize(pos.boards);
  MultiBoardPosition cpos = pos;
  cpos.boards = canon.boards;
  const auto ms = moves(cpos);
  std::optional<OmegaMove> pick;
  for (const auto& m : ms)
    if (completes(cpos, m)) {
      pick = m;
      break;
    }
  for (std::size_t i = 0; !pick && i < ms.size(); ++i) {
    MultiBoardPosition child = cpos;
    apply_unchecked(child, ms[i]);
    child.boards = canonicalize(child.boards).boards;
    if (search(child)) pick = ms[i];
  }
  if (pick && pick->kind == OmegaMove::Kind::Place) {
    pick->cell = pick->cell + canon.shift[pick->board];
    pick->board = canon.source[pick->board];
  }
  return pick;
}

OmegaResult solve_omega(const Sft& sft, int horizon, const TurnWord& turns, OmegaOptions options) {
  OmegaSolver solver(sft, horizon, turns, options);
  OmegaResult res;
  res.horizon = horizon;
  res.extension = !(turns.kind() == TurnWord::Kind::EventuallyPeriodic && turns.prefix().empty() &&
                    turns.period() == "AB" && options.start_index % 2 == 0);
  MultiBoardPosition pos = solver.initial();
  try {
    res.a_wins = solver.a_wins(pos);
    if (*res.a_wins) {
      while (!omega_is_final(pos, sft) && !pos.over()) {
        OmegaMove m;
        if (pos.to_move() == Player::A) {
          auto w = solver.winning_move(pos);
          if (!w) throw InternalError("winning position without a winning move");
          m = *w;
        } else {
          m = omega_legal_moves(pos, sft.alphabet_size(), sft.dimension(), options.variant).front();
        }
        res.principal_line.push_back(m);
        pos = apply_omega_move(pos, m, sft.dimension(), options.variant);
      }
      res.final_boards = pos.boards;
    }
  } catch (const BudgetExceeded&) {
    res.a_wins.reset();
  }
  res.stats = solver.stats();
  return res;
}

// --- Theta -----------------------------------------------------------------

namespace {

std::int64_t distance_to(const AnchoredBoard& b, const Cell& c) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : b.local) best = std::min(best, l1_distance(b.anchor + e.first, c));
  return best;
}

}  // namespace

OmegaMove theta_step(std::vector<AnchoredBoard>& boards, const Move& m, int horizon, int turn) {
  if (m.is_pass()) return OmegaMove::pass();
  const std::int64_t radius = omega_radius(horizon, turn);
  std::optional<std::size_t> near;
  for (std::size_t k = 0; k < boards.size(); ++k) {
    if (distance_to(boards[k], m.cell) > radius) continue;
    if (near) throw InternalError("move at turn " + std::to_string(turn) + " is close to two boards");
    near = k;
  }
  if (!near) {
    boards.push_back(AnchoredBoard{m.cell, Pattern({{Cell{}, m.color}})});
    return OmegaMove::open(m.color);
  }
  const Cell local = m.cell - boards[*near].anchor;
  boards[*near].local.insert(local, m.color);
  return OmegaMove::place(*near, local, m.color);
}

AnchoredTrace theta(const std::vector<Move>& trace, int horizon) {
  if (static_cast<std::int64_t>(trace.size()) > horizon)
    throw InputError("trace of " + std::to_string(trace.size()) + " moves exceeds horizon " + std::to_string(horizon));
  AnchoredTrace out;
  out.horizon = horizon;
  std::vector<AnchoredBoard> boards;
  Pattern flat;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const Move& m = trace[t];
    if (!m.is_pass()) {
      if (flat.contains(m.cell)) throw InputError("trace places twice on one cell");
      flat.insert(m.cell, m.color);
    }
    const OmegaMove om = theta_step(boards, m, horizon, static_cast<int>(t) + 1);
    out.steps.push_back(ThetaStep{m, om, boards});
  }
  return out;
}

std::optional<std::string> check_theta_invariants(const Pattern& flat, const std::vector<AnchoredBoard>& boards,
                                                  int horizon, int turn) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < boards.size(); ++k) {
    for (const auto& [cell, color] : boards[k].local) {
      const Cell at = boards[k].anchor + cell;
      auto c = flat.at(at);
      if (!c) {
        std::ostringstream os;
        os << "support: board " << k << " tile at " << to_string(at, kMaxDim) << " missing from the flat pattern";
        return os.str();
      }
      if (*c != color) return "colour: board " + std::to_string(k) + " disagrees with the flat pattern";
      ++total;
    }
  }
  if (total != flat.size()) return "support: flat pattern has tiles on no board";
  const std::int64_t radius = omega_radius(horizon, turn);
  for (std::size_t k = 0; k < boards.size(); ++k)
    for (std::size_t j = k + 1; j < boards.size(); ++j)
      for (const auto& e : boards[j].local)
        if (distance_to(boards[k], boards[j].anchor + e.first) <= radius)
          return "separation: boards " + std::to_string(k) + " and " + std::to_string(j) + " within " +
                 std::to_string(radius);
  return std::nullopt;
}

}  // namespace domino
