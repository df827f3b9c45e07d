#include "report_format.hpp"

#include <sstream>

#include "symdist/graph6.hpp"

namespace symdist::cli {

using nlohmann::ordered_json;

namespace {

std::string vertex_list(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string notation_of(const FamilyAlias& a) {
  for (const CatalogEntry& e : catalog_entries(a.theorem)) {
    if (e.index == a.entry) return std::string(e.notation);
  }
  return "?";
}

}  // namespace

std::string format_alias(const FamilyAlias& a) {
  std::string out = to_string(a.theorem) + " (" + std::to_string(a.entry) + ") " + notation_of(a);
  if (a.param) out += ", t=" + std::to_string(*a.param);
  return out;
}

ordered_json to_json(const ClassificationReport& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["order"] = r.order;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["dim"] = r.dim ? ordered_json(*r.dim) : ordered_json(nullptr);
  j["resolving_witness"] = r.resolving_witness;
  j["D"] = r.distinguishing;
  j["distinguishing_coloring"] = r.distinguishing_witness;
  j["automorphisms"] = r.automorphisms;
  j["diameter"] = r.diameter ? ordered_json(*r.diameter) : ordered_json(nullptr);
  j["core"] = {{"diameter", r.core_diameter}, {"dim", r.core_dim}, {"twin_graph_order", r.core_twin_order}};
  ordered_json classes = ordered_json::array();
  for (std::size_t i = 0; i < r.twins.classes.size(); ++i) {
    classes.push_back({{"vertices", r.twins.classes[i]}, {"type", to_string(r.twins.types[i])}});
  }
  j["twins"] = {{"classes", classes},
                {"quotient_graph6", write_graph6(r.twins.quotient)},
                {"alpha", r.twins.alpha},
                {"almost_asymmetric", r.almost_asymmetric}};
  j["in_family_F"] = r.in_family_F;
  ordered_json matches = ordered_json::array();
  for (const auto& m : r.matches) {
    ordered_json e{{"theorem", to_string(m.theorem)}, {"entry", m.entry}, {"family", notation_of(m)}};
    e["t"] = m.param ? ordered_json(*m.param) : ordered_json(nullptr);
    matches.push_back(std::move(e));
  }
  j["matches"] = matches;
  return j;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "graph6:            " << r.graph6 << "\n";
  out << "order / edges:     " << r.order << " / " << r.edges << "\n";
  out << "connected:         " << (r.connected ? "yes" : "no") << "\n";
  if (r.dim) {
    out << "dim:               " << *r.dim << "  witness " << vertex_list(r.resolving_witness) << "\n";
    out << "diameter:          " << *r.diameter << "\n";
  } else {
    out << "dim:               n/a (disconnected)\n";
  }
  out << "D:                 " << r.distinguishing << "  colouring (";
  for (std::size_t i = 0; i < r.distinguishing_witness.size(); ++i) {
    out << (i ? " " : "") << r.distinguishing_witness[i];
  }
  out << ")\n";
  out << "|Aut|:             " << r.automorphisms << "\n";
  out << "core (G_c):        diam " << r.core_diameter << ", dim " << r.core_dim << ", |V(G_c*)| "
      << r.core_twin_order << "\n";
  out << "twin classes:      ";
  for (std::size_t i = 0; i < r.twins.classes.size(); ++i) {
    out << (i ? " " : "") << vertex_list(r.twins.classes[i]) << ":" << to_string(r.twins.types[i]);
  }
  out << "\n";
  out << "alpha(G*):         " << r.twins.alpha << "\n";
  out << "almost asymmetric: " << (r.almost_asymmetric ? "yes" : "no") << "\n";
  out << "in family F:       " << (r.in_family_F ? "yes" : "no") << "\n";
  out << "matches:           ";
  if (r.matches.empty()) out << "none";
  for (std::size_t i = 0; i < r.matches.size(); ++i) out << (i ? "; " : "") << format_alias(r.matches[i]);
  out << "\n";
  return out.str();
}

ordered_json to_json(const VerifyReport& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["order"] = r.order == 0 ? ordered_json(nullptr) : ordered_json(r.order);
  j["applicable"] = r.applicable;
  j["verdict"] = r.pass() ? "PASS" : "FAIL";
  j["scanned"] = r.scanned;
  j["matches"] = r.matches;
  j["mismatches"] = r.counterexamples.size();
  ordered_json ces = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"graph6", c.graph6}, {"expected", c.expected}, {"actual_D", c.actual_d}, {"detail", c.detail}});
  }
  j["counterexamples"] = ces;
  if (r.subject == "Dn3") {
    j["outside_family_F"] = r.outside_family_F;
    j["listed_outside_family_F"] = r.listed_outside_family_F;
  }
  j["notes"] = r.notes;
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << (r.pass() ? "PASS" : "FAIL") << "  " << r.subject;
  if (r.order) out << " n=" << r.order;
  out << "  scanned " << r.scanned << ", matches " << r.matches << ", mismatches " << r.counterexamples.size();
  out.precision(3);
  out << std::fixed << "  (" << r.elapsed_seconds << " s)\n";
  for (const auto& c : r.counterexamples) {
    out << "  counterexample " << c.graph6 << ": expected " << c.expected << ", D=" << c.actual_d;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  for (const auto& g : r.outside_family_F) out << "  outside F with D=n-3: " << g << "\n";
  for (const auto& g : r.listed_outside_family_F) out << "  listed instance outside F: " << g << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace symdist::cli
