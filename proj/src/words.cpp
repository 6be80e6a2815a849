#include <algorithm>
#include <cctype>
#include <sstream>

#include "domino/words.hpp"

namespace domino {

namespace {

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  // q > 0
  return p >= 0 ? p / q : -((-p + q - 1) / q);
}

std::int64_t floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

void check_letters(const std::string& s, std::size_t base, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 'A' && s[i] != 'B')
      throw InputError(std::string(what) + ": expected A or B at position " + std::to_string(base + i));
}

std::uint64_t s1_repeats(std::uint64_t n) {
  const auto v = v_bound(static_cast<std::int64_t>(n), 1, static_cast<std::int64_t>(n));
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator() << '/' << r.denominator();
  return os.str();
}

TurnWord TurnWord::periodic(std::string prefix, std::string period) {
  if (period.empty()) throw InputError("turn word period must be nonempty");
  check_letters(prefix, 0, "turn word prefix");
  check_letters(period, prefix.size(), "turn word period");
  TurnWord w;
  w.kind_ = Kind::EventuallyPeriodic;
  w.prefix_ = std::move(prefix);
  w.period_ = std::move(period);
  return w;
}

TurnWord TurnWord::mechanical(Rational slope, Rational intercept) {
  if (slope < Rational(0) || slope > Rational(1)) throw InputError("mechanical slope must lie in [0, 1]");
  if (intercept < Rational(0) || intercept >= Rational(1)) throw InputError("mechanical intercept must lie in [0, 1)");
  TurnWord w;
  w.kind_ = Kind::Mechanical;
  w.slope_ = slope;
  w.intercept_ = intercept;
  // Rational slope a/b: shifting n by b shifts both floors by a, so b letters make a period.
  const auto period_len = static_cast<std::uint64_t>(slope.denominator());
  w.prefix_.clear();
  w.period_.clear();
  for (std::uint64_t n = 0; n < period_len; ++n) {
    const Rational lo = slope * static_cast<std::int64_t>(n) + intercept;
    const Rational hi = slope * static_cast<std::int64_t>(n + 1) + intercept;
    w.period_.push_back(floor_of(hi) - floor_of(lo) == 1 ? 'A' : 'B');
  }
  return w;
}

TurnWord TurnWord::s1() {
  TurnWord w;
  w.kind_ = Kind::BlocksS1;
  w.prefix_.clear();
  w.period_.clear();
  w.slope_ = Rational(1, 2);
  return w;
}

TurnWord TurnWord::s2() {
  TurnWord w;
  w.kind_ = Kind::BlocksS2;
  w.prefix_.clear();
  w.period_.clear();
  w.slope_ = Rational(1, 2);
  return w;
}

Player TurnWord::letter(std::uint64_t n) const {
  switch (kind_) {
    case Kind::EventuallyPeriodic:
    case Kind::Mechanical: {
      const char c = n < prefix_.size() ? prefix_[n] : period_[(n - prefix_.size()) % period_.size()];
      return c == 'A' ? Player::A : Player::B;
    }
    case Kind::BlocksS2: {
      // blocks A(AB)^m, m = 1, 2, ...
      for (std::uint64_t m = 1;; ++m) {
        const std::uint64_t len = 1 + 2 * m;
        if (n < len) return (n == 0 || (n - 1) % 2 == 0) ? Player::A : Player::B;
        n -= len;
      }
    }
    case Kind::BlocksS1: {
      // blocks (A(AB)^m)^{v(m,1,m)}
      for (std::uint64_t m = 1;; ++m) {
        const std::uint64_t unit = 1 + 2 * m;
        const std::uint64_t reps = s1_repeats(m);
        if (n < unit * reps) {
          const std::uint64_t j = n % unit;
          return (j == 0 || (j - 1) % 2 == 0) ? Player::A : Player::B;
        }
        n -= unit * reps;
      }
    }
  }
  return Player::B;
}

std::string TurnWord::prefix_string(std::uint64_t length) const {
  std::string s;
  s.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i) s.push_back(to_char(letter(i)));
  return s;
}

void TurnWord::require_finite_state() const {
  if (!finite_state()) throw Unsupported("turn word '" + to_string() + "' is not finite-state");
}

std::size_t TurnWord::state_count() const {
  require_finite_state();
  return prefix_.size() + period_.size();
}

std::size_t TurnWord::state_of(std::uint64_t index) const {
  require_finite_state();
  if (index < prefix_.size()) return static_cast<std::size_t>(index);
  return prefix_.size() + static_cast<std::size_t>((index - prefix_.size()) % period_.size());
}

std::size_t TurnWord::next_state(std::size_t state) const {
  return state + 1 < prefix_.size() + period_.size() ? state + 1 : prefix_.size();
}

Player TurnWord::player_in_state(std::size_t state) const {
  const char c = state < prefix_.size() ? prefix_[state] : period_[state - prefix_.size()];
  return c == 'A' ? Player::A : Player::B;
}

std::string TurnWord::to_string() const {
  switch (kind_) {
    case Kind::EventuallyPeriodic:
      return prefix_.empty() ? "(" + period_ + ")*" : prefix_ + "|(" + period_ + ")*";
    case Kind::Mechanical:
      return "sturmian:" + domino::to_string(slope_) + ":" + domino::to_string(intercept_);
    case Kind::BlocksS1:
      return "s1";
    case Kind::BlocksS2:
      return "s2";
  }
  return {};
}

namespace {

Rational parse_rational(std::string_view text, std::size_t base) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, std::size_t at) -> std::int64_t {
    if (s.empty()) throw InputError("turn word: expected a number at position " + std::to_string(at));
    std::int64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InputError("turn word: expected a digit at position " + std::to_string(at + i));
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t{1} << 40)) throw InputError("turn word: number too large at position " + std::to_string(at));
    }
    return v;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, base));
  const auto num = parse_int(text.substr(0, slash), base);
  const auto den = parse_int(text.substr(slash + 1), base + slash + 1);
  if (den == 0) throw InputError("turn word: zero denominator at position " + std::to_string(base + slash + 1));
  return Rational(num, den);
}

}  // namespace

TurnWord parse_turn_word(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("turn word: empty input");
  if (text == "s1") return TurnWord::s1();
  if (text == "s2") return TurnWord::s2();
  constexpr std::string_view kSturm = "sturmian:";
  if (text.substr(0, kSturm.size()) == kSturm) {
    auto rest = text.substr(kSturm.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw InputError("turn word: expected ':' after the slope at position " + std::to_string(text.size()));
    const auto slope = parse_rational(rest.substr(0, colon), kSturm.size());
    const auto intercept = parse_rational(rest.substr(colon + 1), kSturm.size() + colon + 1);
    return TurnWord::mechanical(slope, intercept);
  }
  const auto open = text.find('(');
  if (open == std::string_view::npos)
    throw InputError("turn word: expected '(' opening the period at position " + std::to_string(text.size()));
  if (text.size() < open + 3 || text.substr(text.size() - 2) != ")*")
    throw InputError("turn word: expected ')*' closing the period at position " + std::to_string(text.size()));
  auto prefix = text.substr(0, open);
  if (!prefix.empty() && prefix.back() == '|') prefix.remove_suffix(1);
  const auto period = text.substr(open + 1, text.size() - open - 3);
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] != 'A' && prefix[i] != 'B')
      throw InputError("turn word: unexpected '" + std::string(1, prefix[i]) + "' at position " + std::to_string(i));
  for (std::size_t i = 0; i < period.size(); ++i)
    if (period[i] != 'A' && period[i] != 'B')
      throw InputError("turn word: unexpected '" + std::string(1, period[i]) + "' at position " +
                       std::to_string(open + 1 + i));
  if (period.empty()) throw InputError("turn word: empty period at position " + std::to_string(open + 1));
  return TurnWord::periodic(std::string(prefix), std::string(period));
}

bool is_balanced_up_to(const TurnWord& word, std::uint64_t n) {
  const std::uint64_t len = n + 1;  // indices 0..n
  std::vector<std::uint32_t> sums(len + 1, 0);
  for (std::uint64_t i = 0; i < len; ++i) sums[i + 1] = sums[i] + (word.letter(i) == Player::A ? 1 : 0);
  for (std::uint64_t w = 1; w <= len; ++w) {
    std::uint32_t lo = UINT32_MAX, hi = 0;
    for (std::uint64_t i = 0; i + w <= len; ++i) {
      const auto c = sums[i + w] - sums[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

std::uint64_t default_scan_depth(const TurnWord& word) {
  if (!word.finite_state()) return 64;
  return 4 * (word.prefix().size() + word.period().size());
}

Frequency frequency(const TurnWord& word) {
  switch (word.kind()) {
    case TurnWord::Kind::Mechanical:
      return Frequency{word.slope(), true};
    case TurnWord::Kind::EventuallyPeriodic: {
      const auto a = std::count(word.period().begin(), word.period().end(), 'A');
      const auto depth = std::max<std::uint64_t>(default_scan_depth(word), 16);
      return Frequency{Rational(a, static_cast<std::int64_t>(word.period().size())), is_balanced_up_to(word, depth)};
    }
    default:
      return Frequency{Rational(1, 2), is_balanced_up_to(word, default_scan_depth(word))};
  }
}

std::vector<std::uint64_t> occurrences(const TurnWord& word, std::string_view factor, std::uint64_t length) {
  const auto s = word.prefix_string(length);
  std::vector<std::uint64_t> out;
  if (factor.empty() || factor.size() > s.size()) return out;
  for (std::size_t i = 0; i + factor.size() <= s.size(); ++i)
    if (std::string_view(s).substr(i, factor.size()) == factor) out.push_back(i);
  return out;
}

std::int64_t gap_bound(const TurnWord& word, std::string_view factor, std::uint64_t scan_depth) {
  const auto occ = occurrences(word, factor, scan_depth);
  if (occ.size() < 2)
    throw InputError("factor '" + std::string(factor) + "' occurs fewer than twice in the first " +
                     std::to_string(scan_depth) + " letters");
  std::int64_t gap = 0;
  for (std::size_t i = 1; i < occ.size(); ++i) gap = std::max<std::int64_t>(gap, occ[i] - occ[i - 1]);
  std::int64_t k = 1;
  if (factor == "ABA") {
    while (3 * k + 2 < gap) ++k;
  } else {
    while (2 * k + 1 < gap) ++k;
  }
  return k;
}

std::string to_string(BalancedTag t) {
  switch (t) {
    case BalancedTag::FreqZero: return "FreqZero";
    case BalancedTag::FreqAtMostThird_NoABA: return "FreqAtMostThird_NoABA";
    case BalancedTag::FreqAtMostThird_OneABA: return "FreqAtMostThird_OneABA";
    case BalancedTag::MidFreq_NoAA: return "MidFreq_NoAA";
    case BalancedTag::MidFreq_OneAA: return "MidFreq_OneAA";
    case BalancedTag::FreqAboveHalf: return "FreqAboveHalf";
  }
  return "?";
}

BalancedCase classify(const TurnWord& word, std::optional<std::uint64_t> scan_depth) {
  BalancedCase out;
  out.scan_depth = scan_depth.value_or(default_scan_depth(word));
  out.prefix_certified = word.kind() != TurnWord::Kind::EventuallyPeriodic;
  out.frequency = frequency(word).value;
  const Rational f = out.frequency;
  const auto aa = occurrences(word, "AA", out.scan_depth).size();
  const auto aba = occurrences(word, "ABA", out.scan_depth).size();
  auto fail = [&](const std::string& why) {
    throw InputError("classify: " + why + " (frequency " + to_string(f) + ", scan depth " +
                     std::to_string(out.scan_depth) + ")");
  };
  if (f == Rational(0)) {
    out.tag = BalancedTag::FreqZero;
  } else if (f > Rational(1, 2)) {
    out.tag = BalancedTag::FreqAboveHalf;
    out.gap_k = gap_bound(word, "AA", out.scan_depth);
  } else if (f > Rational(1, 3)) {
    if (aa > 1) fail("more than one AA with frequency at most 1/2");
    out.tag = aa == 0 ? BalancedTag::MidFreq_NoAA : BalancedTag::MidFreq_OneAA;
    if (aba >= 2) out.gap_k = gap_bound(word, "ABA", out.scan_depth);
  } else {
    if (aa > 0) fail("AA occurs with frequency at most 1/3");
    if (aba > 1) fail("more than one ABA with frequency at most 1/3");
    out.tag = aba == 0 ? BalancedTag::FreqAtMostThird_NoABA : BalancedTag::FreqAtMostThird_OneABA;
  }
  return out;
}

std::int64_t v_bound(std::int64_t n, std::int64_t c, std::int64_t k) {
  if (k <= 0) throw InputError("v: k must be at least 1");
  if (n < 0 || c < 0) throw InputError("v: n and c must be non-negative");
  __int128 pow = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    pow *= (k + 1);
    if (pow > (__int128{1} << 100)) throw InputError("v: value overflows");
  }
  const __int128 value = static_cast<__int128>(c) * (2 * k + 1) * ((pow - 1) / k);
  if (value > INT64_MAX) throw InputError("v: value overflows");
  return static_cast<std::int64_t>(value);
}

std::vector<BudgetStep> budget_sequence(Rational f, std::size_t steps) {
  if (f < Rational(0) || f >= Rational(1)) throw InputError("budget: frequency must lie in [0, 1)");
  const Rational ratio = f / (Rational(1) - f);
  std::vector<BudgetStep> out;
  Rational b = ratio;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto whole = floor_of(b);
    out.push_back(BudgetStep{b, whole});
    b = b - whole + ratio;
  }
  return out;
}

}  // namespace domino
