#include "recolor/discharging.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace recolor {

Rat ChargeLedger::initialSum() const {
  Rat s(0);
  for (const auto& [e, r] : initial) s += r;
  return s;
}

Rat ChargeLedger::finalSum() const {
  Rat s(0);
  for (const auto& [e, r] : finals) s += r;
  return s;
}

void ChargeLedger::computeFinals() {
  finals.clear();
  for (const auto& [e, r] : initial) finals[e] = r;
  for (const auto& t : transfers) {
    finals[t.from] -= t.amount;
    finals[t.to] += t.amount;
  }
}

namespace {

struct PlanarPass {
  ChargeLedger ledger;
  std::vector<std::string> notes;
};

// Runs R1-R3 with the special-5-face definition keyed on `special_pattern`.
PlanarPass runPlanarRules(const Graph& g, const FaceStructure& fs,
                          const std::vector<int>& special_pattern) {
  PlanarPass pass;
  auto& ledger = pass.ledger;

  for (Vertex v : g.vertices())
    ledger.initial.push_back(
        {{ChargeElement::VertexElem, v}, Rat(2 * g.degree(v) - 6)});
  for (int f = 0; f < fs.faceCount(); ++f)
    ledger.initial.push_back(
        {{ChargeElement::FaceElem, f}, Rat(fs.faceDegree(f) - 6)});

  // R1: every 5+-vertex pays each incident 4-face 4/3 and 5-face 2/3.
  for (Vertex v : g.vertices()) {
    if (g.degree(v) < 5) continue;
    for (int f : fs.faces_at[v]) {
      if (fs.faceDegree(f) == 4)
        ledger.transfers.push_back({{ChargeElement::VertexElem, v},
                                    {ChargeElement::FaceElem, f},
                                    Rat(4, 3),
                                    "R1"});
      else if (fs.faceDegree(f) == 5)
        ledger.transfers.push_back({{ChargeElement::VertexElem, v},
                                    {ChargeElement::FaceElem, f},
                                    Rat(2, 3),
                                    "R1"});
    }
  }

  // R2: special 5-faces collect 2/3 from the rich and 1/3 from the poor
  // 4-vertex.
  auto specials = specialFaces(fs, g, special_pattern);
  std::map<int, int> special_multiplicity;
  for (const auto& s : specials) {
    ++special_multiplicity[s.face];
    ledger.transfers.push_back({{ChargeElement::VertexElem, s.rich},
                                {ChargeElement::FaceElem, s.face},
                                Rat(2, 3),
                                "R2"});
    ledger.transfers.push_back({{ChargeElement::VertexElem, s.poor},
                                {ChargeElement::FaceElem, s.face},
                                Rat(1, 3),
                                "R2"});
  }
  for (const auto& [f, mult] : special_multiplicity)
    if (mult > 1)
      pass.notes.push_back("face f" + std::to_string(f) + " is special under " +
                           std::to_string(mult) + " alignments");

  // R3: each 4- or 5-face still negative draws its deficit evenly from
  // incident 4-vertices.
  ledger.computeFinals();
  for (int f = 0; f < fs.faceCount(); ++f) {
    int d = fs.faceDegree(f);
    if (d != 4 && d != 5) continue;
    Rat cur = ledger.finals[{ChargeElement::FaceElem, f}];
    if (cur >= Rat(0)) continue;
    std::vector<Vertex> donors;
    for (Vertex v : fs.faces[f])
      if (g.degree(v) == 4) donors.push_back(v);
    if (donors.empty()) {
      pass.notes.push_back("structural: face f" + std::to_string(f) +
                           " negative after R1-R2 with no incident 4-vertices");
      continue;
    }
    Rat share = -cur / Rat(static_cast<long long>(donors.size()));
    for (Vertex v : donors)
      ledger.transfers.push_back({{ChargeElement::VertexElem, v},
                                  {ChargeElement::FaceElem, f},
                                  share,
                                  "R3"});
  }
  ledger.computeFinals();
  return pass;
}

// The per-face giving caps of the embedded proof's charge lemma, used as a
// post-hoc assertion. reading_b treats (3,4,4,3) like (3,4,3,4); the printed
// lemma text lists (3,4,3,4) twice.
Rat chargeLemmaLimit(const Graph& g, const FaceStructure& fs, int f, Vertex v,
                     const std::set<std::pair<int, Vertex>>& rich_at,
                     bool reading_b) {
  int d = fs.faceDegree(f);
  if (d >= 6 || d == 3) return Rat(0);
  auto tuple = canonicalPattern(fs.degreeTuple(g, f));
  if (d == 4) {
    if (tuple == canonicalPattern({3, 4, 3, 4})) return Rat(1);
    if (tuple == canonicalPattern({3, 4, 4, 3})) return reading_b ? Rat(1) : Rat(1, 2);
    bool has5 = std::any_of(tuple.begin(), tuple.end(), [](int x) { return x >= 5; });
    if (has5) return Rat(2, 3);
    if (tuple == canonicalPattern({3, 4, 4, 4})) return Rat(2, 3);
    return Rat(1, 2);
  }
  // 5-face
  if (rich_at.count({f, v})) return Rat(2, 3);
  return Rat(1, 2);
}

}  // namespace

AuditResult auditPlanar(const Graph& g) {
  if (!g.hasRotation())
    throw std::invalid_argument("auditPlanar: missing embedding");
  if (!g.connected())
    throw std::invalid_argument("auditPlanar: graph must be connected");
  if (g.vertexCount() == 0)
    throw std::invalid_argument("auditPlanar: empty graph");

  auto fs = traceFaces(g);

  AuditResult res;
  res.threshold = Rat(0);
  res.header.push_back(
      "intersecting 4-cycles hypothesis applied to cycles (stronger than faces)");
  res.header.push_back("special 5-face definition as printed: adjacent (3,4,4,3)-face");

  auto printed = runPlanarRules(g, fs, {3, 4, 4, 3});
  res.ledger = printed.ledger;
  res.notes = printed.notes;

  if (res.ledger.initialSum() != Rat(-12))
    throw std::invalid_argument(
        "auditPlanar: initial charges sum to " + toString(res.ledger.initialSum()) +
        ", not -12; rotation is not a planar embedding");
  res.conservation_ok = res.ledger.finalSum() == res.ledger.initialSum();

  for (const auto& [e, r] : res.ledger.finals)
    if (r < Rat(0)) res.violations.push_back({e, r, "final charge below 0"});

  // Variant run under the (3,4,3,4) reading of the special-face definition;
  // flag any change in final charges.
  auto variant = runPlanarRules(g, fs, {3, 4, 3, 4});
  for (const auto& [e, r] : res.ledger.finals) {
    auto it = variant.ledger.finals.find(e);
    Rat other = it == variant.ledger.finals.end() ? Rat(0) : it->second;
    if (other != r) {
      res.notes.push_back("special-face definition variant changes final of " +
                          e.name() + ": " + toString(r) + " vs " + toString(other));
    }
  }

  // Charge-lemma assertion layer under both readings of its duplicated text.
  std::set<std::pair<int, Vertex>> rich_at;
  for (const auto& s : specialFaces(fs, g, {3, 4, 4, 3}))
    rich_at.insert({s.face, s.rich});
  std::map<std::pair<Vertex, int>, Rat> given;
  for (const auto& t : res.ledger.transfers)
    if (t.from.kind == ChargeElement::VertexElem && g.degree(t.from.id) == 4)
      given[{t.from.id, t.to.id}] += t.amount;
  for (const auto& [key, amount] : given) {
    auto [v, f] = key;
    Rat lim_a = chargeLemmaLimit(g, fs, f, v, rich_at, false);
    Rat lim_b = chargeLemmaLimit(g, fs, f, v, rich_at, true);
    bool ok_a = amount <= lim_a, ok_b = amount <= lim_b;
    if (ok_a != ok_b)
      res.notes.push_back("charge-lemma readings disagree at (v" +
                          std::to_string(v) + ", f" + std::to_string(f) +
                          "): gives " + toString(amount));
    else if (!ok_a && !ok_b)
      res.notes.push_back("charge-lemma cap exceeded at (v" + std::to_string(v) +
                          ", f" + std::to_string(f) + "): gives " +
                          toString(amount));
  }
  return res;
}

AuditResult auditSparse(const Graph& g) {
  AuditResult res;
  res.threshold = Rat(5, 2);
  res.header.push_back("sparse rules: mu(v) = d(v), target 5/2");

  auto& ledger = res.ledger;
  for (Vertex v : g.vertices())
    ledger.initial.push_back({{ChargeElement::VertexElem, v}, Rat(g.degree(v))});

  auto tags = tagVertices(g);

  for (const auto& [w, tag] : tags) {
    // R1: 1/4 to each nearby 2-vertex, one payment per thread end at w.
    for (Vertex x : tag.nearby_two)
      ledger.transfers.push_back({{ChargeElement::VertexElem, w},
                                  {ChargeElement::VertexElem, x},
                                  Rat(1, 4),
                                  "R1"});
    for (Vertex u : g.neighbors(w)) {
      auto it = tags.find(u);
      if (it == tags.end()) continue;
      // R2: 1/4 to each adjacent 3_{2,1,0}-vertex.
      if (it->second.is_3210)
        ledger.transfers.push_back({{ChargeElement::VertexElem, w},
                                    {ChargeElement::VertexElem, u},
                                    Rat(1, 4),
                                    "R2"});
      // R3: 1/12 to each adjacent bad 3_{1,1,0}-vertex.
      if (it->second.bad_3110)
        ledger.transfers.push_back({{ChargeElement::VertexElem, w},
                                    {ChargeElement::VertexElem, u},
                                    Rat(1, 12),
                                    "R3"});
    }
    // R4: 1/12 to each weak-adjacent 3_{1,1,1}-vertex.
    for (Vertex u : tag.weak_neighbors) {
      auto it = tags.find(u);
      if (it != tags.end() && it->second.is_3111)
        ledger.transfers.push_back({{ChargeElement::VertexElem, w},
                                    {ChargeElement::VertexElem, u},
                                    Rat(1, 12),
                                    "R4"});
    }
  }
  ledger.computeFinals();
  res.conservation_ok = ledger.finalSum() == ledger.initialSum();
  for (const auto& [e, r] : ledger.finals)
    if (r < res.threshold)
      res.violations.push_back({e, r, "final charge below 5/2"});
  return res;
}

std::string auditReport(const AuditResult& a, const std::string& title) {
  std::ostringstream os;
  os << "# " << title << "\n";
  for (const auto& h : a.header) os << "# " << h << "\n";
  os << "sum of initial charges: " << toString(a.ledger.initialSum()) << "\n";
  os << "sum of final charges: " << toString(a.ledger.finalSum()) << "\n";
  os << "conservation: " << (a.conservation_ok ? "ok" : "BROKEN") << "\n";
  os << "elements: " << a.ledger.initial.size() << "\n";
  os << "transfers: " << a.ledger.transfers.size() << "\n";
  os << "violation threshold: " << toString(a.threshold) << "\n";
  os << "violations: " << a.violations.size() << "\n";
  for (const auto& v : a.violations)
    os << "  " << v.elem.name() << " final " << toString(v.final_charge) << " ("
       << v.note << ")\n";
  if (!a.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : a.notes) os << "  " << n << "\n";
  }
  return os.str();
}

std::string auditTable(const AuditResult& a) {
  std::map<ChargeElement, Rat> in, out, init;
  for (const auto& [e, r] : a.ledger.initial) init[e] = r;
  for (const auto& t : a.ledger.transfers) {
    out[t.from] += t.amount;
    in[t.to] += t.amount;
  }
  std::ostringstream os;
  os << "element,initial,received,given,final,below_threshold\n";
  for (const auto& [e, r] : a.ledger.finals) {
    os << e.name() << "," << toString(init[e]) << "," << toString(in[e]) << ","
       << toString(out[e]) << "," << toString(r) << ","
       << (r < a.threshold ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace recolor
