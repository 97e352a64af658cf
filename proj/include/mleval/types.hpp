#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mleval {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid data: a dataset record, a domain invariant, a bad argument.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration or CLI usage.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A judge response that cannot be turned into a verdict.
class ParseError : public Error {
 public:
  enum class Kind {
    BadJson,
    NoObject,
    MissingMetric,
    MissingScore,
    ScoreNotInteger,
    ScoreOutOfRange,
    MissingJustification,
  };

  ParseError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// ---------------------------------------------------------------------------
// Core enums
// ---------------------------------------------------------------------------

enum class Task { OpenPrompt, ContinueWriting, Summarize };

enum class Language { En, Fr, De, Es, Zh, Ja, It, PtBr, Cs };

enum class Metric { LA, OCQ, TQ, PC, H };

enum class RubricDetail { Simple, Detailed };

enum class Strategy { SingleSimple, Compound, SingleDetailed, SingleFewShot };

inline constexpr std::array<Task, 3> kAllTasks = {Task::OpenPrompt, Task::ContinueWriting,
                                                  Task::Summarize};

inline constexpr std::array<Language, 9> kAllLanguages = {
    Language::En, Language::Fr, Language::De,   Language::Es, Language::Zh,
    Language::Ja, Language::It, Language::PtBr, Language::Cs};

inline constexpr std::array<Metric, 5> kAllMetrics = {Metric::LA, Metric::OCQ, Metric::TQ,
                                                      Metric::PC, Metric::H};

// Row/column orders used by the emitted tables. Languages and report metrics
// are alphabetical by code; manifest task columns keep the dataset layout.
inline constexpr std::array<Language, 9> kLanguageTableOrder = {
    Language::Cs, Language::De, Language::En,   Language::Es, Language::Fr,
    Language::It, Language::Ja, Language::PtBr, Language::Zh};

inline constexpr std::array<Task, 3> kTaskManifestOrder = {Task::OpenPrompt, Task::Summarize,
                                                           Task::ContinueWriting};

inline constexpr std::array<Task, 3> kTaskReportOrder = {Task::ContinueWriting, Task::OpenPrompt,
                                                         Task::Summarize};

inline constexpr std::array<Metric, 5> kMetricReportOrder = {Metric::H, Metric::LA, Metric::OCQ,
                                                             Metric::PC, Metric::TQ};

// ---------------------------------------------------------------------------
// Codes and names
// ---------------------------------------------------------------------------

std::string_view task_code(Task t);          // "open_prompt"
std::string_view task_display_name(Task t);  // "Open Prompt"
std::optional<Task> parse_task(std::string_view code);

std::string_view language_code(Language l);          // "pt-br"
std::string_view language_display_code(Language l);  // "Pt-Br"
std::string_view language_name(Language l);          // "Brazilian Portuguese"
std::optional<Language> parse_language(std::string_view code);

std::string_view metric_code(Metric m);  // "LA"
std::optional<Metric> parse_metric(std::string_view code);

std::string_view strategy_code(Strategy s);  // "single"
std::optional<Strategy> parse_strategy(std::string_view code);

/// Allowed scores: {0,1,2} for LA/OCQ/TQ, {0,1} for PC/H.
std::span<const int> metric_value_set(Metric m);

inline int metric_max_score(Metric m) {
  auto vs = metric_value_set(m);
  return vs[vs.size() - 1];
}

inline bool score_in_value_set(Metric m, int score) {
  for (int v : metric_value_set(m)) {
    if (v == score) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Deterministic RNG and hashing
//
// std::shuffle and std::uniform_int_distribution are not bit-stable across
// standard libraries, so everything seeded goes through this generator.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, n). Requires n > 0.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  /// Double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view s);

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return x;
}

/// Deterministic unit double derived from a seed and string tags; used by the
/// scripted backends so results do not depend on call order.
double hash_unit(std::uint64_t seed, std::string_view tag, std::string_view key,
                 std::uint64_t extra = 0);

}  // namespace mleval
