#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "domino/core.hpp"

namespace domino {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// Infinite word over {A, B} deciding who plays at each turn.
///
/// Three shapes are supported: eventually periodic words `prefix·period^ω`,
/// mechanical words of rational slope, and the two block-structured words
/// s1 = Π (A(AB)^n)^{v(n,1,n)} and s2 = Π A(AB)^n. Mechanical words of rational
/// slope are periodic, so they are finite-state like the first shape; s1 and s2
/// are not, and solvers reject them.
class TurnWord {
 public:
  enum class Kind : std::uint8_t { EventuallyPeriodic, Mechanical, BlocksS1, BlocksS2 };

  /// Throws InputError on an empty period or letters other than A/B.
  static TurnWord periodic(std::string prefix, std::string period);
  /// Letter n is A iff floor((n+1)·slope + intercept) - floor(n·slope + intercept) = 1.
  static TurnWord mechanical(Rational slope, Rational intercept);
  static TurnWord s1();
  static TurnWord s2();
  static TurnWord alternating() { return periodic("", "AB"); }

  Kind kind() const { return kind_; }
  Player letter(std::uint64_t n) const;
  std::string prefix_string(std::uint64_t length) const;

  bool finite_state() const { return kind_ == Kind::EventuallyPeriodic || kind_ == Kind::Mechanical; }

  // Finite-state view. States 0..|prefix|-1 walk the prefix, the rest cycle through the period.
  std::size_t state_count() const;
  std::size_t state_of(std::uint64_t index) const;
  std::size_t next_state(std::size_t state) const;
  Player player_in_state(std::size_t state) const;

  /// Prefix and period of the periodic expansion (mechanical words are expanded).
  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }
  Rational slope() const { return slope_; }
  Rational intercept() const { return intercept_; }

  /// Inverse of parse_turn_word.
  std::string to_string() const;

  friend bool operator==(const TurnWord& a, const TurnWord& b) {
    return a.kind_ == b.kind_ && a.prefix_ == b.prefix_ && a.period_ == b.period_ &&
           a.slope_ == b.slope_ && a.intercept_ == b.intercept_;
  }

 private:
  TurnWord() = default;
  void require_finite_state() const;

  Kind kind_ = Kind::EventuallyPeriodic;
  std::string prefix_;
  std::string period_ = "AB";
  Rational slope_{0};
  Rational intercept_{0};
};

/// Syntax: `(AB)*`, `B|(AB)*`, `AAB|(B)*`, `sturmian:13/21:0/1`, `s1`, `s2`.
/// Throws InputError naming the offending character position.
TurnWord parse_turn_word(std::string_view text);

/// Position of play inside a turn word.
struct TurnCursor {
  TurnWord word = TurnWord::alternating();
  std::uint64_t index = 0;

  Player current() const { return word.letter(index); }
  TurnCursor advanced() const { return TurnCursor{word, index + 1}; }
};

bool is_balanced_up_to(const TurnWord& word, std::uint64_t n);

struct Frequency {
  Rational value;
  bool balanced_flag = true;  // false when the periodic input fails the window test
};

Frequency frequency(const TurnWord& word);

/// Number of (possibly overlapping) occurrences of `factor` in the first `length` letters.
std::vector<std::uint64_t> occurrences(const TurnWord& word, std::string_view factor, std::uint64_t length);

/// Smallest k >= 1 with consecutive occurrence distances <= 2k+1 (factor AA) or <= 3k+2 (factor ABA).
/// Other factors use the 2k+1 form. Throws InputError with fewer than two occurrences.
std::int64_t gap_bound(const TurnWord& word, std::string_view factor, std::uint64_t scan_depth);

enum class BalancedTag : std::uint8_t {
  FreqZero,
  FreqAtMostThird_NoABA,
  FreqAtMostThird_OneABA,
  MidFreq_NoAA,
  MidFreq_OneAA,
  FreqAboveHalf,
};

std::string to_string(BalancedTag t);

struct BalancedCase {
  BalancedTag tag = BalancedTag::FreqZero;
  Rational frequency{0};
  std::optional<std::int64_t> gap_k;  // AA gap above 1/2, ABA gap in (1/3, 1/2]
  std::uint64_t scan_depth = 0;
  bool prefix_certified = false;      // census limited to the scanned prefix (mechanical words)
};

/// Default scan depth for periodic words: 4·(|prefix| + |period|).
std::uint64_t default_scan_depth(const TurnWord& word);

/// Throws InputError when the factor census contradicts the frequency.
BalancedCase classify(const TurnWord& word, std::optional<std::uint64_t> scan_depth = std::nullopt);

/// c(2k+1)((k+1)^n - 1)/k. Throws InputError for k = 0 or overflow.
std::int64_t v_bound(std::int64_t n, std::int64_t c, std::int64_t k);

struct BudgetStep {
  Rational budget;
  std::int64_t plays = 0;
};

/// b_0 = f/(1-f), b_{i+1} = b_i - floor(b_i) + f/(1-f); A plays floor(b_i) moves per B move.
std::vector<BudgetStep> budget_sequence(Rational f, std::size_t steps);

}  // namespace domino
