#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tdt/model.hpp"

namespace tdt {

enum class Severity { Error, Warning };

enum class ValidationMode { Strict, Lenient };

const char* to_string(Severity s) noexcept;

// Rule identifiers R1..R14.
enum class Rule {
  SingleParent = 1,        // R1
  MetaUnderRoot,           // R2
  TimexParent,             // R3
  AbsoluteUnderRoot,       // R4
  RelativeParent,          // R5
  VagueParent,             // R6
  UnlocatableInTree,       // R7
  EventLabel,              // R8
  EventNotUnderRoot,       // R9
  StativeParentsEventive,  // R10
  UnknownClass,            // R11
  DctParentUse,            // R12
  SpanOverlap,             // R13
  TimexTimexLabel,         // R14
};

inline constexpr int kRuleCount = 14;

std::string rule_id(Rule r);

struct Diagnostic {
  Rule rule = Rule::SingleParent;
  Severity severity = Severity::Error;
  std::string node_id;  // the offending node (the child, for edge rules)
  std::string message;

  std::string rule_id() const { return tdt::rule_id(rule); }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Checks every annotation rule. The result is ordered by node ID, then rule
// number, and is empty iff the document conforms.
std::vector<Diagnostic> validate(const Document& doc, ValidationMode mode);

// Parses and validates. Parse failures that correspond to a rule (a node
// with zero or several parents, an unknown class label) become R1 / R11
// diagnostics; any other ParseError propagates.
std::vector<Diagnostic> validate_source(std::string_view bytes, ValidationMode mode);

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept;

// `file:rule_id:severity:node_id:message`
std::string format_diagnostic(std::string_view file, const Diagnostic& d);

}  // namespace tdt
