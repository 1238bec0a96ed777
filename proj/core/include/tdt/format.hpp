#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tdt/model.hpp"

namespace tdt {

// Reads one JSON document. Missing meta nodes, and the DEPEND_ON edges tying
// them to ROOT, are inserted. UNLOCATABLE timexes with no incident edge are
// kept outside the tree. Throws ParseError (InvariantViolation for tree
// errors).
Document parse_document(std::string_view bytes);

// A document's header and annotated nodes without any edges: the input of
// the baseline parser.
struct Markables {
  Document header;  // minimal tree, no unattached nodes
  std::vector<TimexNode> timexes;  // sorted by ID, unlocatable ones included
  std::vector<EventNode> events;   // sorted by ID
};

// Like parse_document, but "edges" may be absent and is ignored.
Markables parse_markables(std::string_view bytes);
Markables markables_of(const Document& doc);

// Canonical, deterministic rendering: nodes sorted by ID, edges by child ID,
// one node or edge per line.
std::string serialize_document(const Document& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Reads and parses a file. Errors are rethrown with the path prepended.
Document load_document(const std::filesystem::path& path);

struct ManifestEntry {
  std::filesystem::path path;
  Genre genre = Genre::News;
  std::string annotator;
};

// One `path<TAB>genre<TAB>annotator` line per file. Blank lines and lines
// starting with '#' are ignored. Relative paths resolve against `base_dir`.
struct CorpusManifest {
  std::vector<ManifestEntry> entries;

  static CorpusManifest parse(std::string_view text, const std::filesystem::path& base_dir);
  static CorpusManifest load(const std::filesystem::path& manifest_path);
};

struct CorpusDocument {
  ManifestEntry source;
  Document doc;
};

// Two annotations of the same document by different annotators, as indices
// into Corpus::documents.
struct AnnotationPair {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const AnnotationPair&, const AnnotationPair&) = default;
};

struct Corpus {
  std::vector<CorpusDocument> documents;
  std::vector<AnnotationPair> pairs;

  std::size_t count(Genre genre) const noexcept;
  // Indices of the first annotation of each distinct document ID.
  std::vector<std::size_t> distinct() const;
  // True if the document ID appears in some annotation pair.
  bool is_double_annotated(const std::string& doc_id) const;
};

// Pairs are formed between every two entries sharing a document ID, in
// manifest order. Throws IoError, ParseError (with file attribution), or
// ParseError(Schema) if a document's genre disagrees with the manifest or the
// same annotator appears twice for one document.
Corpus build_corpus(std::vector<CorpusDocument> documents);
Corpus load_corpus(const std::filesystem::path& manifest_path);

}  // namespace tdt
