#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tdt/format.hpp"
#include "tdt/model.hpp"

namespace tdt {

enum class ChildType { Timex, EventiveEvent, StativeEvent };
enum class ParentType { Meta, Timex, EventiveEvent, StativeEvent };

// Parent-type counts per child type, rows indexed by ChildType.
using ParentChildMatrix = std::array<std::array<std::size_t, 4>, 3>;

struct EdgeLabelCounts {
  std::size_t includes = 0;
  std::size_t before = 0;
  std::size_t after = 0;
  std::size_t overlap = 0;
  std::size_t depend_on = 0;

  std::size_t before_after() const noexcept { return before + after; }
  std::size_t total() const noexcept { return includes + before + after + overlap + depend_on; }
  friend bool operator==(const EdgeLabelCounts&, const EdgeLabelCounts&) = default;
};

struct GenreStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  // Locatable timexes: absolute, relative and vague.
  std::size_t timexes = 0;
  std::size_t events = 0;
  // Unlocatable timexes, wherever they sit; not part of `timexes`.
  std::size_t unlocatable = 0;
  std::array<std::size_t, 3> timex_classes{};  // absolute, relative, vague
  std::array<std::size_t, 8> event_classes{};  // indexed like kEventClasses
  // Edges whose child is a timex or an event.
  EdgeLabelCounts edge_labels;
  ParentChildMatrix parent_child{};

  GenreStats& operator+=(const GenreStats& other);
  friend bool operator==(const GenreStats&, const GenreStats&) = default;
};

// Counts for one document.
GenreStats document_stats(const Document& doc);

// Single- and double-annotated documents, each counted once.
struct GenreReport {
  GenreStats single;
  GenreStats double_annotated;

  GenreStats total() const;
};

struct CorpusReport {
  GenreReport news;
  GenreReport narrative;
  // Documents without sentence metadata, and similar.
  std::vector<std::string> warnings;

  GenreStats overall() const;
};

// Tallies the first annotation of every distinct document. Throws
// ValidationFailed, naming the file, if a document has LENIENT errors.
CorpusReport corpus_report(const Corpus& corpus);

ParentChildMatrix parent_child_matrix(const Corpus& corpus);

// round(100 * count / total), halves rounded up; 0 for an empty total.
int percent(std::size_t count, std::size_t total) noexcept;

// Notes on the published corpus totals when a genre has the published
// document count: the table and the prose of the source disagree slightly.
std::vector<std::string> discrepancy_notes(const CorpusReport& report);

std::string format_report(const CorpusReport& report);
std::string report_to_json(const CorpusReport& report);

}  // namespace tdt
