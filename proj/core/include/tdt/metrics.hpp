#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "tdt/model.hpp"

namespace tdt {

enum class MarkableKind { Timex, Event };

// Counts behind one precision/recall/F1 triple.
struct PRF {
  std::size_t true_positive = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  // 0 when the denominator is 0.
  double precision() const noexcept;
  double recall() const noexcept;
  // 2PR/(P+R), 0 when P+R is 0.
  double f1() const noexcept;

  PRF& operator+=(const PRF& other) noexcept;
  friend bool operator==(const PRF&, const PRF&) = default;
};

// A predicted node matches a gold node of the same kind with the identical
// span. Spans are matched as multisets. Throws DocumentMismatch unless both
// documents have the same id and text.
PRF score_recognition(const Document& gold, const Document& pred, MarkableKind kind);
// Span and class must both match.
PRF score_classification(const Document& gold, const Document& pred, MarkableKind kind);
// Edges whose child is of `kind`: child span, parent (meta nodes by ID,
// annotated nodes by span) and, when labeled, the edge label must match.
PRF score_attachment(const Document& gold, const Document& pred, MarkableKind kind,
                     bool labeled);

enum class Metric {
  TimexRecognition,
  TimexClassification,
  TimexParsing,
  EventRecognition,
  EventClassification,
  EventRelationsUnlabeled,
  EventRelationsLabeled,
};

inline constexpr std::array<Metric, 7> kMetrics = {
    Metric::TimexRecognition,    Metric::TimexClassification,     Metric::TimexParsing,
    Metric::EventRecognition,    Metric::EventClassification,     Metric::EventRelationsUnlabeled,
    Metric::EventRelationsLabeled};

// "Timex Recognition", "Event Relations (labeled)", ...
const char* to_string(Metric m) noexcept;

PRF score(const Document& gold, const Document& pred, Metric metric);

using Scores = std::array<PRF, kMetrics.size()>;

Scores score_all(const Document& gold, const Document& pred);

// Micro-averaged scores: counts are summed over documents.
struct CorpusScores {
  Scores news{};
  Scores narrative{};
  Scores overall{};
  std::size_t documents = 0;

  void add(Genre genre, const Scores& scores);
};

// Table with one row per metric and F1 per genre and overall.
std::string format_scores(const CorpusScores& scores);

}  // namespace tdt
