#pragma once

#include <map>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/rational.hpp"
#include "recolor/structure.hpp"

namespace recolor {

struct ChargeElement {
  enum Kind { VertexElem = 0, FaceElem = 1 };
  Kind kind;
  int id;

  auto operator<=>(const ChargeElement&) const = default;
  std::string name() const {
    return (kind == VertexElem ? "v" : "f") + std::to_string(id);
  }
};

struct ChargeTransfer {
  ChargeElement from, to;
  Rat amount;
  std::string rule;
};

struct ChargeLedger {
  std::vector<std::pair<ChargeElement, Rat>> initial;
  std::vector<ChargeTransfer> transfers;
  std::map<ChargeElement, Rat> finals;

  Rat initialSum() const;
  Rat finalSum() const;
  void computeFinals();
};

struct ChargeViolation {
  ChargeElement elem;
  Rat final_charge;
  std::string note;
};

struct AuditResult {
  ChargeLedger ledger;
  std::vector<ChargeViolation> violations;
  std::vector<std::string> notes;   // post-hoc assertion findings
  std::vector<std::string> header;  // hypothesis notes
  Rat threshold;                    // violation threshold (0 or 5/2)
  bool conservation_ok = false;

  bool clean() const { return violations.empty(); }
};

/// Discharging for the embedded theorem: mu(v) = 2d(v)-6, mu(f) = d(f)-6,
/// rules R1-R3, Euler sum -12. Requires a connected, embedded, simple graph.
AuditResult auditPlanar(const Graph& g);

/// Discharging for the sparse theorem: mu(v) = d(v), rules R1-R4,
/// violation threshold 5/2. Runs on any simple graph and reports.
AuditResult auditSparse(const Graph& g);

std::string auditReport(const AuditResult& a, const std::string& title);
std::string auditTable(const AuditResult& a);

}  // namespace recolor
