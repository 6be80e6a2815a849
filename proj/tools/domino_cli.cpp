// Command-line front end: solvers, reductions, turn words, strategy play and verification.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "domino/catalog.hpp"
#include "domino/record.hpp"
#include "domino/reductions.hpp"
#include "domino/solver_bounded.hpp"
#include "domino/solver_finite.hpp"
#include "domino/strategies.hpp"
#include "domino/verifier.hpp"

using namespace domino;

namespace {

constexpr int kComputed = 0;
constexpr int kInconclusive = 1;
constexpr int kInputError = 2;
constexpr int kCounterexample = 3;

struct Common {
  std::string sft;
  std::string turns = "(AB)*";
  std::string variant = "pass";
  std::uint64_t start = 0;
  bool json = false;
  std::string output;
};

void add_common(CLI::App* app, Common& c, bool needs_sft = true) {
  auto* o = app->add_option("--sft", c.sft, "SFT file or preset name");
  if (needs_sft) o->required();
  app->add_option("--turns", c.turns, "turn word, e.g. (AB)*, B|(AB)*, sturmian:13/21:0/1, s1, s2");
  app->add_option("--variant", c.variant, "pass | no-pass")->check(CLI::IsMember({"pass", "no-pass", "nopass"}));
  app->add_option("--start", c.start, "turn-word index of the first ply");
  app->add_flag("--json", c.json, "emit JSON instead of key = value lines");
  app->add_option("-o,--output", c.output, "write the record to a file");
}

Variant variant_of(const std::string& s) { return s == "pass" ? Variant::PassAllowed : Variant::NoPass; }

std::uint64_t env_budget(std::uint64_t fallback) {
  if (const char* v = std::getenv("DOMINO_NODE_BUDGET")) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      throw InputError(std::string("DOMINO_NODE_BUDGET is not a number: ") + v);
    }
  }
  return fallback;
}

std::uint64_t parse_budget(const std::string& s) {
  // Accepts plain integers and 10^k.
  if (auto caret = s.find('^'); caret != std::string::npos) {
    const auto base = std::stoull(s.substr(0, caret));
    const auto exp = std::stoul(s.substr(caret + 1));
    std::uint64_t v = 1;
    for (unsigned long i = 0; i < exp; ++i) v *= base;
    return v;
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("budget '" + s + "' is not a number");
  }
}

Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InputError("'" + s + "' is not a rational number");
  }
}

std::string move_text(const Move& m, const Sft& sft) {
  if (m.is_pass()) return "pass";
  return to_string(m.cell, sft.dimension()) + " " + sft.name(m.color);
}

std::string line_text(const std::vector<Move>& moves, const Sft& sft) {
  std::string s;
  for (const auto& m : moves) s += (s.empty() ? "" : ", ") + move_text(m, sft);
  return s;
}

std::string trace_text(const std::vector<TracePly>& plies, const Sft& sft) {
  std::string s;
  for (const auto& p : plies) s += (s.empty() ? "" : ", ") + std::string(1, to_char(p.who)) + ":" + move_text(p.move, sft);
  return s;
}

void echo(Record& r, const std::string& command, const Common& c) {
  r.set("command", command);
  if (!c.sft.empty()) r.set("sft", c.sft);
  r.set("turns", c.turns);
  r.set("variant", to_string(variant_of(c.variant)));
  r.set("start", c.start);
}

void emit(const Record& r, const Common& c) {
  const std::string text = c.json ? r.to_json().dump(2) + "\n" : r.to_text();
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output);
    if (!out) throw InputError("cannot write " + c.output);
    out << text;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s;
  return os.str();
}

// --- board rendering -------------------------------------------------------

char glyph_for(const Sft& sft, Color c) {
  static const std::string table = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  bool single = true;
  for (const auto& n : sft.alphabet()) single = single && n.size() == 1;
  if (single) return sft.name(c)[0];
  return c.id < table.size() ? table[c.id] : '?';
}

std::string render(const Pattern& p, const Sft& sft) {
  constexpr int margin = 2;
  std::int32_t lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
  bool first = true;
  for (const auto& [cell, color] : p) {
    if (first) {
      lo0 = hi0 = cell[0];
      lo1 = hi1 = cell[1];
      first = false;
    }
    lo0 = std::min(lo0, cell[0]);
    hi0 = std::max(hi0, cell[0]);
    lo1 = std::min(lo1, cell[1]);
    hi1 = std::max(hi1, cell[1]);
  }
  lo0 -= margin;
  hi0 += margin;
  std::ostringstream os;
  auto row = [&](std::int32_t y) {
    for (std::int32_t x = lo0; x <= hi0; ++x) {
      auto c = p.at(Cell(x, y));
      os << (c ? glyph_for(sft, *c) : '.');
    }
  };
  if (sft.dimension() == 1) {
    os << "x = " << lo0 << " .. " << hi0 << "\n";
    row(0);
    os << "\n";
  } else {
    lo1 -= margin;
    hi1 += margin;
    os << "x = " << lo0 << " .. " << hi0 << ", rows y = " << hi1 << " down to " << lo1 << "\n";
    for (std::int32_t y = hi1; y >= lo1; --y) {
      row(y);
      os << "  " << y << "\n";
    }
  }
  bool single = true;
  for (const auto& n : sft.alphabet()) single = single && n.size() == 1;
  if (!single) {
    os << "legend:";
    for (std::size_t i = 0; i < sft.alphabet_size(); ++i) {
      const Color c{static_cast<std::uint16_t>(i)};
      os << ' ' << glyph_for(sft, c) << '=' << sft.name(c);
    }
    os << "\n";
  }
  return os.str();
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos) throw InputError("parameter '" + it + "' is not key=value");
    p[it.substr(0, eq)] = it.substr(eq + 1);
  }
  return p;
}

// --- commands --------------------------------------------------------------

int cmd_solve_finite(const Common& c, int n, const std::string& engine, std::uint64_t max_entries) {
  const Sft sft = resolve_sft(c.sft);
  const auto turns = parse_turn_word(c.turns);
  SolveOptions so;
  so.engine = engine == "reference" ? Engine::Reference : Engine::Parallel;
  if (max_entries) so.max_entries = max_entries;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = solve_region(sft, n, variant_of(c.variant), turns, c.start, so);
  Record r;
  echo(r, "solve-finite", c);
  r.set("n", n);
  r.set("winner", std::string(1, to_char(res.winner)));
  r.set("value", res.value ? std::to_string(*res.value) : std::string("infinite"));
  r.set("principal_line", line_text(res.principal_line, sft));
  r.set("extended_value", res.extended_value);
  r.set("stats.nodes", res.stats.nodes);
  r.set("stats.states", res.stats.states);
  r.set("stats.seconds", fmt_seconds(seconds_since(t0)));
  emit(r, c);
  return kComputed;
}

int cmd_solve_bounded(const Common& c, int horizon, const std::string& budget, bool no_prune) {
  const Sft sft = resolve_sft(c.sft);
  const auto turns = parse_turn_word(c.turns);
  OmegaOptions o;
  o.variant = variant_of(c.variant);
  o.start_index = c.start;
  o.node_budget = budget.empty() ? env_budget(0) : parse_budget(budget);
  o.prune_far = !no_prune;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = solve_omega(sft, horizon, turns, o);
  Record r;
  echo(r, "solve-bounded", c);
  r.set("T", horizon);
  r.set("a_wins", res.a_wins ? std::string(*res.a_wins ? "true" : "false") : std::string("inconclusive"));
  std::string line;
  for (const auto& m : res.principal_line) line += (line.empty() ? "" : ", ") + to_string(m, sft.dimension());
  r.set("principal_line", line);
  r.set("extension", res.extension);
  r.set("stats.nodes", res.stats.nodes);
  r.set("stats.memo_hits", res.stats.memo_hits);
  r.set("stats.seconds", fmt_seconds(seconds_since(t0)));
  emit(r, c);
  return res.a_wins ? kComputed : kInconclusive;
}

int cmd_prove(const Common& c, const std::string& budget, const std::string& modes) {
  const Sft sft = resolve_sft(c.sft);
  const auto turns = parse_turn_word(c.turns);
  ProveOptions o;
  o.variant = variant_of(c.variant);
  o.start_index = c.start;
  o.budget = budget.empty() ? env_budget(o.budget) : parse_budget(budget);
  o.modes.clear();
  std::istringstream ms(modes);
  for (std::string m; std::getline(ms, m, ',');) {
    if (m == "window") o.modes.push_back(ProofMode::Window);
    else if (m == "horizon") o.modes.push_back(ProofMode::Horizon);
    else throw InputError("unknown mode '" + m + "' (window, horizon)");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = prove_A_wins(sft, turns, o);
  Record r;
  echo(r, "prove", c);
  r.set("budget", o.budget);
  if (res.certificate) {
    r.set("result", "A wins");
    r.set("certificate.kind", to_string(res.certificate->kind));
    r.set("certificate.parameter", res.certificate->parameter);
  } else {
    r.set("result", "inconclusive");
    r.set("note", res.note);
  }
  r.set("stats.rounds", res.rounds);
  r.set("stats.nodes", res.nodes);
  r.set("stats.seconds", fmt_seconds(seconds_since(t0)));
  emit(r, c);
  return res.certificate ? kComputed : kInconclusive;
}

int cmd_reduce(const Common& c, const std::string& construction, const std::string& rule, int inner_offset,
               int dimension, bool check_empty) {
  const Sft base = resolve_sft(c.sft);
  Record r;
  r.set("command", "reduce");
  r.set("sft", c.sft);
  r.set("construction", construction);
  if (check_empty) {
    r.set("base_empty", domino_1d_empty(base));
    const auto len = longest_admissible_length(base);
    r.set("longest_admissible", len ? std::to_string(*len) : std::string("unbounded"));
  }
  Sft derived = [&] {
    if (construction == "arrow") return build_arrow_game(base, dimension);
    VoteRule vr = rule == "majority" ? majority_rule() : rule == "fifteen" ? fifteen_vote_rule() : eleven_vote_rule();
    return build_vote_game(base, vr, inner_offset >= 0 ? std::optional<int>(inner_offset) : std::nullopt);
  }();
  r.set("alphabet_size", static_cast<std::uint64_t>(derived.alphabet_size()));
  r.set("window", static_cast<std::uint64_t>(derived.predicates().front().shape.size()));
  if (c.output.empty()) {
    std::cout << r.to_text() << dump_sft(derived) << "\n";
  } else {
    std::ofstream out(c.output);
    if (!out) throw InputError("cannot write " + c.output);
    out << dump_sft(derived) << "\n";
    r.set("written", c.output);
    std::cout << (c.json ? r.to_json().dump(2) + "\n" : r.to_text());
  }
  return kComputed;
}

int cmd_word(const Common& c, const std::string& word, bool classify_flag, std::uint64_t prefix,
             std::uint64_t balanced_n, const std::string& gap, std::uint64_t depth, const std::vector<std::int64_t>& v,
             const std::string& budget_f, std::size_t steps) {
  Record r;
  r.set("command", "word");
  if (!word.empty()) {
    const auto w = parse_turn_word(word);
    r.set("word", w.to_string());
    r.set("finite_state", w.finite_state());
    const auto f = frequency(w);
    r.set("frequency", to_string(f.value));
    r.set("balanced", f.balanced_flag);
    if (prefix) r.set("prefix", w.prefix_string(prefix));
    if (balanced_n) r.set("balanced_up_to_" + std::to_string(balanced_n), is_balanced_up_to(w, balanced_n));
    if (!gap.empty()) r.set("gap_bound." + gap, gap_bound(w, gap, depth ? depth : default_scan_depth(w)));
    if (classify_flag) {
      const auto bc = classify(w, depth ? std::optional<std::uint64_t>(depth) : std::nullopt);
      r.set("class", to_string(bc.tag));
      if (bc.gap_k) r.set("gap_k", *bc.gap_k);
      r.set("scan_depth", bc.scan_depth);
      r.set("prefix_certified", bc.prefix_certified);
    }
  }
  if (!v.empty()) {
    if (v.size() != 3) throw InputError("--v takes n c k");
    r.set("v", v_bound(v[0], v[1], v[2]));
  }
  if (!budget_f.empty()) {
    const auto seq = budget_sequence(parse_rational(budget_f), steps);
    std::string b, p;
    for (const auto& s : seq) {
      b += (b.empty() ? "" : " ") + to_string(s.budget);
      p += (p.empty() ? "" : " ") + std::to_string(s.plays);
    }
    r.set("budget.values", b);
    r.set("budget.plays", p);
  }
  emit(r, c);
  return kComputed;
}

std::optional<Move> read_human_move(const std::string& text, const Sft& sft) {
  std::istringstream in(text);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.size() == 1 && tok[0] == "pass") return Move::pass();
  if (tok.size() != static_cast<std::size_t>(sft.dimension()) + 1) return std::nullopt;
  Cell cell{};
  try {
    for (int i = 0; i < sft.dimension(); ++i) cell[static_cast<std::size_t>(i)] = std::stoi(tok[static_cast<std::size_t>(i)]);
    return Move::place(cell, sft.color(tok.back()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_play(const Common& c, const std::string& human, const std::string& engine, const std::vector<std::string>& params,
             std::uint64_t max_plies) {
  const Sft sft = resolve_sft(c.sft);
  const auto turns = parse_turn_word(c.turns);
  const Variant variant = variant_of(c.variant);
  const Player human_side = human == "B" ? Player::B : Player::A;
  StrategyContext ctx{sft, turns, variant, opponent(human_side), c.start, parse_params(params)};
  auto bot = make_strategy(engine, ctx);
  Position pos{Pattern{}, TurnCursor{turns, c.start}, Region::whole(sft.dimension())};
  std::cout << "You play " << to_char(human_side) << " against " << bot->name() << ". Enter `x"
            << (sft.dimension() > 1 ? " y" : "") << " colour` or `pass`.\n";
  for (std::uint64_t ply = 0; ply < max_plies; ++ply) {
    std::cout << "\nply " << ply << ", " << to_char(pos.to_move()) << " to move\n" << render(pos.pattern, sft);
    const Player who = pos.to_move();
    Move m;
    if (who == human_side) {
      for (;;) {
        std::cout << "> " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cout << "\ninput closed\n";
          return kComputed;
        }
        auto hm = read_human_move(line, sft);
        if (!hm) {
          std::cout << "could not read that move\n";
          continue;
        }
        try {
          pos = apply_move(pos, *hm, variant);
          m = *hm;
          break;
        } catch (const IllegalMove& e) {
          std::cout << "illegal: " << e.what() << "\n";
        }
      }
    } else {
      const GameView view{sft, pos.pattern, ply, turns, variant, c.start};
      try {
        m = bot->choose(view);
        pos = apply_move(pos, m, variant);
      } catch (const std::exception& e) {
        std::cout << bot->name() << " cannot move: " << e.what() << "\nYou win.\n";
        return kComputed;
      }
      std::cout << bot->name() << " plays " << move_text(m, sft) << "\n";
    }
    const GameView after{sft, pos.pattern, ply + 1, turns, variant, c.start};
    bot->observe(m, who, after);
    if (!m.is_pass() && occurs_through(pos.pattern, sft, m.cell)) {
      const auto w = find_forbidden(pos.pattern, sft);
      std::cout << render(pos.pattern, sft) << "Final position: forbidden pattern " << w->index << " at "
                << to_string(w->offset, sft.dimension()) << ". A wins.\n";
      return kComputed;
    }
  }
  std::cout << render(pos.pattern, sft) << "B survived " << max_plies << " plies.\n";
  return kComputed;
}

int cmd_run(const Common& c, const std::string& a_name, const std::string& b_name, const std::vector<std::string>& pa,
            const std::vector<std::string>& pb, const std::string& monitors, std::uint64_t max_plies, bool show) {
  const Sft sft = resolve_sft(c.sft);
  const auto turns = parse_turn_word(c.turns);
  const Variant variant = variant_of(c.variant);
  StrategyContext ca{sft, turns, variant, Player::A, c.start, parse_params(pa)};
  StrategyContext cb{sft, turns, variant, Player::B, c.start, parse_params(pb)};
  auto a = make_strategy(a_name, ca);
  auto b = make_strategy(b_name, cb);
  RunOptions ro;
  ro.variant = variant;
  ro.max_plies = max_plies;
  ro.start_index = c.start;
  ro.monitors = make_monitors(monitors, ca);
  const auto trace = run_game(sft, *a, *b, turns, ro);
  Record r;
  echo(r, "run", c);
  r.set("a", a_name);
  r.set("b", b_name);
  r.set("monitors", monitors);
  r.set("max_plies", max_plies);
  r.set("outcome", to_string(trace.outcome));
  r.set("end_ply", trace.end_ply);
  if (trace.faulting) r.set("faulting", std::string(1, to_char(*trace.faulting)));
  if (!trace.message.empty()) r.set("message", trace.message);
  if (trace.witness) {
    r.set("witness.pattern", static_cast<std::uint64_t>(trace.witness->index));
    r.set("witness.offset", to_string(trace.witness->offset, sft.dimension()));
  }
  r.set("trace", trace_text(trace.plies, sft));
  emit(r, c);
  if (show && !c.json) std::cout << render(trace.final_pattern, sft);
  return kComputed;
}

int cmd_verify(const std::string& path, bool json, const std::string& output, bool serial) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto cfg = Record::parse(ss.str());
  auto need = [&](const char* k) -> std::string {
    if (auto v = cfg.get(k)) return *v;
    throw InputError(std::string("verify config lacks '") + k + "'");
  };
  auto opt = [&](const char* k, std::string fallback) { return cfg.get(k) ? *cfg.get(k) : fallback; };
  auto num = [&](const std::string& key, const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError("verify config: '" + key + "' is not an integer");
    }
  };

  VerifySpec spec{resolve_sft(need("sft"))};
  spec.turns = parse_turn_word(opt("turns", "(AB)*"));
  const auto var = opt("variant", "pass");
  if (var != "pass" && var != "no-pass") throw InputError("verify config: variant must be pass or no-pass");
  spec.variant = variant_of(var);
  spec.start_index = static_cast<std::uint64_t>(num("start", opt("start", "0")));
  const auto player = opt("player", "A");
  if (player != "A" && player != "B") throw InputError("verify config: player must be A or B");
  spec.strategy_player = player == "A" ? Player::A : Player::B;
  spec.depth = static_cast<int>(num("depth", need("depth")));
  if (cfg.get("locality")) spec.locality = static_cast<int>(num("locality", *cfg.get("locality")));
  spec.objective = parse_objective(opt("objective", "strategy-wins"));
  spec.node_budget = cfg.get("budget") ? parse_budget(*cfg.get("budget")) : env_budget(0);
  if (cfg.get("adversary_colors")) spec.adversary_colors = parse_colors(spec.sft, *cfg.get("adversary_colors"));
  spec.parallel = !serial && opt("parallel", "true") != "false";
  Params params;
  for (const auto& [k, v] : cfg.fields())
    if (k.rfind("param.", 0) == 0) params[k.substr(6)] = v;
  StrategyContext ctx{spec.sft, spec.turns, spec.variant, spec.strategy_player, spec.start_index, params};
  const auto strategy_name = need("strategy");
  spec.strategy = make_strategy(strategy_name, ctx);
  spec.monitors = make_monitors(opt("monitors", ""), ctx);

  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = exhaust(spec);
  Record r;
  r.set("command", "verify");
  r.set("config", path);
  r.set("sft", need("sft"));
  r.set("strategy", strategy_name);
  r.set("player", player);
  r.set("turns", spec.turns.to_string());
  r.set("variant", to_string(spec.variant));
  r.set("objective", to_string(spec.objective));
  r.set("depth", rep.depth);
  r.set("locality", rep.locality);
  r.set("verdict", to_string(rep.verdict));
  if (rep.verdict != Verdict::Verified) r.set("reason", rep.reason);
  if (rep.verdict == Verdict::Counterexample) {
    r.set("violation_ply", rep.violation_ply);
    r.set("counterexample", trace_text(rep.counterexample, spec.sft));
  }
  r.set("locality_note", rep.note);
  r.set("stats.nodes", rep.nodes);
  r.set("stats.seconds", fmt_seconds(seconds_since(t0)));
  emit(r, Common{.json = json, .output = output});
  switch (rep.verdict) {
    case Verdict::Verified:
      return kComputed;
    case Verdict::Counterexample:
      return kCounterexample;
    case Verdict::Inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino games on Z^d: solvers, reductions, strategies and verification"};
  app.require_subcommand(1);

  Common c;
  int n = 1;
  std::string engine = "parallel";
  std::uint64_t max_entries = 0;
  auto* sf = app.add_subcommand("solve-finite", "solve the game on the box [-n, n]^d");
  add_common(sf, c);
  sf->add_option("--n", n, "box radius")->check(CLI::NonNegativeNumber);
  sf->add_option("--engine", engine, "parallel | reference")->check(CLI::IsMember({"parallel", "reference"}));
  sf->add_option("--max-entries", max_entries, "value-table cap");

  int horizon = 1;
  std::string budget;
  bool no_prune = false;
  auto* sb = app.add_subcommand("solve-bounded", "does A win within T plies");
  add_common(sb, c);
  sb->add_option("-T,--horizon", horizon, "ply horizon")->check(CLI::NonNegativeNumber);
  sb->add_option("--budget", budget, "node budget (default: DOMINO_NODE_BUDGET or unlimited)");
  sb->add_flag("--no-prune", no_prune, "keep far placements instead of folding them into Open");

  std::string modes = "window,horizon";
  auto* pr = app.add_subcommand("prove", "search for a certificate that A wins");
  add_common(pr, c);
  pr->add_option("--budget", budget, "node budget, e.g. 1000000 or 10^6");
  pr->add_option("--modes", modes, "comma list of window, horizon");

  std::string construction = "arrow", rule = "eleven";
  int inner_offset = -1, dimension = 1;
  bool check_empty = false;
  auto* rd = app.add_subcommand("reduce", "emit a derived game");
  add_common(rd, c);
  rd->add_option("--construction", construction, "arrow | vote")->check(CLI::IsMember({"arrow", "vote"}));
  rd->add_option("--rule", rule, "vote rule: eleven | majority | fifteen")
      ->check(CLI::IsMember({"eleven", "majority", "fifteen"}));
  rd->add_option("--inner-offset", inner_offset, "vote rule: start of the interpreted window");
  rd->add_option("--dimension", dimension, "arrow: target grid dimension")->check(CLI::PositiveNumber);
  rd->add_flag("--check-empty", check_empty, "also decide emptiness of the one-dimensional base");

  std::string word, gap, budget_f;
  bool classify_flag = false;
  std::uint64_t prefix = 0, balanced_n = 0, depth = 0;
  std::vector<std::int64_t> v;
  std::size_t steps = 8;
  auto* wd = app.add_subcommand("word", "turn-word tools");
  wd->add_option("word", word, "turn word");
  wd->add_flag("--classify", classify_flag, "case of the balanced-word classification");
  wd->add_option("--prefix", prefix, "print the first N letters");
  wd->add_option("--balanced", balanced_n, "check balance on windows up to N");
  wd->add_option("--gap", gap, "gap bound for a factor (AA or ABA)");
  wd->add_option("--depth", depth, "scan depth");
  wd->add_option("--v", v, "isolation bound v(n, c, k)")->expected(3);
  wd->add_option("--budget", budget_f, "budget sequence for frequency f");
  wd->add_option("--steps", steps, "budget sequence length");
  wd->add_flag("--json", c.json, "emit JSON");
  wd->add_option("-o,--output", c.output, "write the record to a file");

  std::string human = "A", bot = "pass";
  std::vector<std::string> params, params_b;
  std::uint64_t max_plies = 100;
  auto* pl = app.add_subcommand("play", "play against a strategy in the terminal");
  add_common(pl, c);
  pl->add_option("--human", human, "side you play")->check(CLI::IsMember({"A", "B"}));
  pl->add_option("--engine", bot, "strategy name");
  pl->add_option("--param", params, "strategy parameter key=value");
  pl->add_option("--max-plies", max_plies, "stop after this many plies");

  std::string a_name = "pass", b_name = "pass", monitors;
  bool show = false;
  auto* rn = app.add_subcommand("run", "strategy against strategy");
  add_common(rn, c);
  rn->add_option("--a", a_name, "strategy for A");
  rn->add_option("--b", b_name, "strategy for B");
  rn->add_option("--param-a", params, "A parameter key=value");
  rn->add_option("--param-b", params_b, "B parameter key=value");
  rn->add_option("--monitors", monitors, "comma list of invariant monitors");
  rn->add_option("--max-plies", max_plies, "horizon");
  rn->add_flag("--show", show, "render the final board");

  std::string config;
  bool serial = false;
  auto* vf = app.add_subcommand("verify", "exhaustive adversary check from a config file");
  vf->add_option("config", config, "key = value config file")->required();
  vf->add_flag("--serial", serial, "use the serial search");
  vf->add_flag("--json", c.json, "emit JSON");
  vf->add_option("-o,--output", c.output, "write the record to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*sf) return cmd_solve_finite(c, n, engine, max_entries);
    if (*sb) return cmd_solve_bounded(c, horizon, budget, no_prune);
    if (*pr) return cmd_prove(c, budget, modes);
    if (*rd) return cmd_reduce(c, construction, rule, inner_offset, dimension, check_empty);
    if (*wd) return cmd_word(c, word, classify_flag, prefix, balanced_n, gap, depth, v, budget_f, steps);
    if (*pl) return cmd_play(c, human, bot, params, max_plies);
    if (*rn) return cmd_run(c, a_name, b_name, params, params_b, monitors, max_plies, show);
    if (*vf) return cmd_verify(config, c.json, c.output, serial);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kInconclusive;
  }
  return kInputError;
}
