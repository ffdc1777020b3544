#include "osg/report.hpp"

#include <sstream>

#include "json.hpp"

#include "osg/classify.hpp"
#include "osg/regularity.hpp"

namespace osg {

using json = nlohmann::ordered_json;

namespace {

json names_of(OrderedSemigroup const& s, std::vector<Element> const& elements) {
  json out = json::array();
  for (Element e : elements) out.push_back(s.name(e));
  return out;
}

std::string set_text(OrderedSemigroup const& s, ElementSet const& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Element e) {
    out += (first ? "" : ",") + s.name(e);
    first = false;
  });
  return out + "}";
}

std::string value_text(Verdict const& v) {
  switch (v.outcome) {
    case Outcome::holds:          return "true";
    case Outcome::fails:          return "false";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string verdict_text(OrderedSemigroup const& s, Verdict const& v) {
  std::string out = value_text(v);
  if (v.outcome == Outcome::holds && v.witness.empty()) return out;
  out += " (";
  out += v.clause;
  if (!v.witness.empty()) {
    out += v.clause.empty() ? "witness" : "; witness";
    for (Element w : v.witness) out += " " + s.name(w);
  }
  return out + ")";
}

json verdict_json(OrderedSemigroup const& s, Verdict const& v) {
  json out;
  out["holds"] = v.holds();
  out["outcome"] = std::string(to_string(v.outcome));
  out["clause"] = v.clause;
  out["witness"] = names_of(s, v.witness);
  return out;
}

constexpr GreenKind kKinds[] = {GreenKind::L, GreenKind::R, GreenKind::J, GreenKind::H};

json green_json(OrderedSemigroup const& s, GreenKind kind) {
  json classes = json::array();
  for (auto const& block : green_relation(s, kind).blocks()) {
    classes.push_back(names_of(s, block.members()));
  }
  return classes;
}

std::string green_text(OrderedSemigroup const& s, GreenKind kind) {
  std::string out;
  for (auto const& block : green_relation(s, kind).blocks()) {
    out += (out.empty() ? "" : " ") + set_text(s, block);
  }
  return out;
}

json theorem_json(OrderedSemigroup const& s, TheoremResult const& r) {
  json out;
  out["hypothesis_met"] = r.hypothesis_met;
  json sides = json::object();
  for (auto const& [name, value] : r.sides) sides[name] = value;
  out["sides"] = sides;
  out["verdict"] = std::string(to_string(r.verdict));
  out["detail"] = r.detail;
  out["witness"] = names_of(s, r.witness);
  return out;
}

std::string theorem_text(OrderedSemigroup const& s, TheoremResult const& r) {
  std::string out = std::string(to_string(r.id)) + ": " + std::string(to_string(r.verdict));
  if (r.verdict == TheoremVerdict::mismatch) {
    out += " (" + r.detail;
    if (!r.witness.empty()) {
      out += "; witness";
      for (Element w : r.witness) out += " " + s.name(w);
    }
    out += ")";
  } else if (!r.sides.empty() && r.hypothesis_met) {
    out += " (";
    bool first = true;
    for (auto const& [name, value] : r.sides) {
      out += (first ? "" : " ") + name + "=" + (value ? "true" : "false");
      first = false;
    }
    out += ")";
  } else if (!r.detail.empty()) {
    out += " (" + r.detail + ")";
  }
  return out;
}

}  // namespace

std::string render_analysis(OrderedSemigroup const& s, std::string const& name,
                            VerifyOptions const& options, Format format) {
  auto const classes = classify(s, options.readings.idempotents);
  auto const theorems = theorem_suite(s, options);

  if (format == Format::json) {
    json out;
    out["structure"] = name;
    json cls = json::object();
    for (auto const& [key, v] : classes.entries()) cls[key] = verdict_json(s, v);
    out["classes"] = cls;
    json green = json::object();
    for (GreenKind k : kKinds) green[std::string(to_string(k))] = green_json(s, k);
    out["green"] = green;
    json th = json::object();
    for (auto const& r : theorems.results) th[std::string(to_string(r.id))] = theorem_json(s, r);
    out["theorems"] = th;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "structure: " << name << '\n';
  out << "elements:";
  for (auto const& n : s.names()) out << ' ' << n;
  out << "\nordered idempotents: "
      << set_text(s, ordered_idempotents(s, options.readings.idempotents)) << '\n';
  out << "classes:\n";
  for (auto const& [key, v] : classes.entries()) {
    out << "  " << key << ": " << verdict_text(s, v) << '\n';
  }
  out << "green:\n";
  for (GreenKind k : kKinds) out << "  " << to_string(k) << ": " << green_text(s, k) << '\n';
  out << "theorems:\n";
  for (auto const& r : theorems.results) out << "  " << theorem_text(s, r) << '\n';
  return out.str();
}

std::string render_theorems(OrderedSemigroup const& s, std::string const& name,
                            TheoremReport const& report, Format format) {
  if (format == Format::json) {
    json out;
    out["structure"] = name;
    json th = json::object();
    for (auto const& r : report.results) th[std::string(to_string(r.id))] = theorem_json(s, r);
    out["theorems"] = th;
    out["mismatch"] = report.has_mismatch();
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "structure: " << name << '\n';
  for (auto const& r : report.results) out << theorem_text(s, r) << '\n';
  return out.str();
}

std::string render_green(OrderedSemigroup const& s, GreenKind kind, Format format) {
  if (format == Format::json) {
    json out;
    out[std::string(to_string(kind))] = green_json(s, kind);
    return out.dump(2) + "\n";
  }
  return std::string(to_string(kind)) + ": " + green_text(s, kind) + "\n";
}

std::string render_corpus_summary(CorpusSummary const& summary, Format format) {
  if (format == Format::text) return render_summary(summary);
  json out;
  out["n_max"] = summary.n_max;
  out["structures"] = summary.structures;
  json th = json::object();
  for (auto const& [id, t] : summary.tallies) {
    th[std::string(to_string(id))] = {
        {"consistent", t.consistent}, {"mismatch", t.mismatch}, {"not_applicable", t.not_applicable}};
  }
  out["theorems"] = th;
  out["mismatches"] = summary.mismatch_count();
  return out.dump(2) + "\n";
}

}  // namespace osg
