#include "dagsim/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace dagsim {

namespace {

// Relative slack for the load-condition boundary so that lambda*h == 1 is
// accepted on both sides of the high/low split.
constexpr double kBoundarySlack = 1e-12;

bool uses_high_rate(LoadRegime r) { return r != LoadRegime::low; }
bool uses_low_rate(LoadRegime r) { return r != LoadRegime::high; }

}  // namespace

std::string to_string(LoadRegime regime) {
  switch (regime) {
    case LoadRegime::high: return "hr";
    case LoadRegime::low: return "lr";
    case LoadRegime::high_to_low: return "h2lr";
    case LoadRegime::low_to_high: return "l2hr";
  }
  return "?";
}

std::optional<LoadRegime> parse_regime(const std::string& text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "hr") return LoadRegime::high;
  if (t == "lr") return LoadRegime::low;
  if (t == "h2lr") return LoadRegime::high_to_low;
  if (t == "l2hr") return LoadRegime::low_to_high;
  return std::nullopt;
}

int NetworkParams::tip_count_high_int() const {
  return static_cast<int>(std::llround(tip_count_high));
}

ConfirmationThreshold make_threshold(int m) {
  if (m < 2) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "confirmation threshold must be >= 2, got " +
                              std::to_string(m));
  }
  return ConfirmationThreshold{m};
}

NetworkParams validate(NetworkParams raw, std::optional<LoadRegime> regime) {
  if (!(raw.lambda_high > 0.0) || !(raw.lambda_low > 0.0)) {
    throw ValidationError(ErrorCode::NonPositiveRate,
                          "arrival rates must be positive");
  }
  if (!(raw.reveal_delay > 0.0)) {
    throw ValidationError(ErrorCode::NonPositiveDelay,
                          "reveal delay must be positive");
  }

  const bool check_high = !regime || uses_high_rate(*regime);
  const bool check_low = !regime || uses_low_rate(*regime);

  const double high_product = raw.lambda_high * raw.reveal_delay;
  if (check_high && high_product < 1.0 - kBoundarySlack) {
    throw ValidationError(
        ErrorCode::RegimeConditionViolated,
        "high-load condition requires lambda_high * reveal_delay >= 1, got " +
            std::to_string(high_product));
  }
  const double low_product = raw.lambda_low * raw.reveal_delay;
  if (check_low && low_product > 1.0 + kBoundarySlack) {
    throw ValidationError(
        ErrorCode::RegimeConditionViolated,
        "low-load condition requires lambda_low * reveal_delay <= 1, got " +
            std::to_string(low_product));
  }

  raw.tip_count_high = 2.0 * raw.lambda_high * raw.reveal_delay;
  const double low_tips = 2.0 * raw.lambda_low * raw.reveal_delay;
  raw.tip_count_low = low_tips <= 2.0 ? 1.0 : low_tips;
  return raw;
}

}  // namespace dagsim
