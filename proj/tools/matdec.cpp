// matdec: inspect binary matroids, grow them, test minors and certify
// k-decomposers from the command line.
//
// Exit codes: 0 success, 1 negative answer (not certified, no minor, not
// isomorphic), 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "matdec/decomposer.hpp"
#include "matdec/growth.hpp"
#include "matdec/minor.hpp"
#include "matdec/reproduce.hpp"

using namespace matdec;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

GroundSubset parse_ids(const std::string& text) {
  GroundSubset out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw Error(ErrorKind::InvalidArgument, "malformed element id '" + item + "' in '" + text + "'");
    out.push_back(make_id(static_cast<std::uint32_t>(std::stoul(item))));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty element list");
  return normalized(std::move(out));
}

void require_ids(const BinaryMatroid& m, const GroundSubset& s) {
  for (ElementId x : s) m.position_of(x);  // throws UnknownElement
}

Json ids_json(const GroundSubset& s) {
  Json a = Json::array();
  for (ElementId x : s) a.push_back(id_value(x));
  return a;
}

Execution execution_for(int jobs) { return jobs > 1 ? Execution::parallel(jobs) : Execution::serial(); }

/// Positional labels when the source is a catalog entry with a growth history.
std::optional<std::map<ElementId, std::uint32_t>> labels_for(const std::string& source) {
  if (!is_catalog_key(source)) return std::nullopt;
  const CatalogEntry& e = catalog_entry(source);
  if (!e.lineage) return std::nullopt;
  return positional_labels(e.matroid, *e.lineage);
}

std::string subset_views(const GroundSubset& s, const std::optional<std::map<ElementId, std::uint32_t>>& labels) {
  std::string out = "ids " + format_subset(s);
  if (labels) out += ", labels " + format_labelled(s, *labels);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

// ---------------------------------------------------------------- commands

struct Common {
  bool standardize = false;
  std::string format = "text";
  int jobs = 1;
};

int cmd_info(const std::string& source, const Common& c) {
  const BinaryMatroid m = resolve_source(source, {c.standardize});
  const Execution exec = execution_for(c.jobs);
  const bool simple = is_simple(m), cosimple = is_cosimple(m);
  const bool c3 = m.size() >= 2 && is_n_connected(m, 3, exec);
  const bool i4 = c3 && is_internally_4_connected(m, exec);
  std::map<std::size_t, std::size_t> census, cocensus;
  for (const auto& x : circuits(m)) ++census[x.elements.size()];
  for (const auto& x : cocircuits(m)) ++cocensus[x.elements.size()];
  const auto labels = labels_for(source);

  if (c.format == "json") {
    Json j;
    j["name"] = m.name();
    j["n"] = m.size();
    j["r"] = m.rank();
    j["simple"] = simple;
    j["cosimple"] = cosimple;
    j["three_connected"] = c3;
    j["internally_4_connected"] = i4;
    Json cj = Json::object(), dj = Json::object();
    for (auto [k, v] : census) cj[std::to_string(k)] = v;
    for (auto [k, v] : cocensus) dj[std::to_string(k)] = v;
    j["circuit_sizes"] = cj;
    j["cocircuit_sizes"] = dj;
    GroundSubset all(m.elements().begin(), m.elements().end());
    j["elements"] = ids_json(all);
    if (labels) {
      Json lj = Json::array();
      for (ElementId x : all) lj.push_back(labels->at(x));
      j["labels"] = lj;
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "name: " << m.name() << "\n"
            << "n: " << m.size() << "\nr: " << m.rank() << "\n"
            << "simple: " << (simple ? "yes" : "no") << "\ncosimple: " << (cosimple ? "yes" : "no") << "\n"
            << "3-connected: " << (c3 ? "yes" : "no") << "\n"
            << "internally 4-connected: " << (i4 ? "yes" : "no") << "\n";
  std::cout << "circuit sizes:";
  for (auto [k, v] : census) std::cout << " " << k << ":" << v;
  std::cout << "\ncocircuit sizes:";
  for (auto [k, v] : cocensus) std::cout << " " << k << ":" << v;
  std::cout << "\n";
  if (labels) {
    std::cout << "positional labels (id:label):";
    for (ElementId x : m.elements()) std::cout << " " << id_value(x) << ":" << labels->at(x);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_lambda(const std::string& source, const std::string& set, std::vector<std::size_t> ks, const Common& c) {
  const BinaryMatroid m = resolve_source(source, {c.standardize});
  const GroundSubset s = parse_ids(set);
  require_ids(m, s);
  if (ks.empty()) ks = {3};
  const std::size_t value = lambda(m, s);
  const auto labels = labels_for(source);
  Json arr = Json::array();
  std::ostringstream text;
  for (std::size_t k : ks) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
    std::string what;
    if (s.size() == m.size()) {
      what = "not a " + std::to_string(k) + "-separation (complement is empty)";
      arr.push_back({{"k", k}, {"lambda", value}, {"kind", "not a separation"}});
    } else {
      const SeparationClass sc = classify_separation(m, s, k);
      what = sc.kind == SeparationKind::NotASeparation
                 ? "not a " + std::to_string(k) + "-separation"
                 : std::string(to_string(sc.kind)) + " " + std::to_string(k) + "-separation";
      arr.push_back({{"k", k}, {"lambda", sc.lambda}, {"kind", std::string(to_string(sc.kind))}});
    }
    text << "λ = " << value << ", " << what << "\n";
  }
  if (c.format == "json") {
    Json j{{"set", ids_json(s)}, {"lambda", value}, {"separations", arr}};
    if (labels) {
      Json lj = Json::array();
      for (ElementId x : s) lj.push_back(labels->at(x));
      j["labels"] = lj;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (labels) std::cout << "set: " << subset_views(s, labels) << "\n";
    std::cout << text.str();
  }
  return kOk;
}

int cmd_grow(bool coext, const std::string& source, const std::string& vector, bool all, const std::string& in_class_spec,
             const std::string& out, const Common& c) {
  const BinaryMatroid n = resolve_source(source, {c.standardize});
  if (!vector.empty() && all) throw Error(ErrorKind::InvalidArgument, "--vector and --all are exclusive");
  if (vector.empty() && !all) throw Error(ErrorKind::InvalidArgument, "one of --vector or --all is required");
  if (!vector.empty()) {
    const gf2::Vector v = gf2::Vector::from_string(vector);
    const BinaryMatroid m = coext ? coextend(n, v) : extend(n, v);
    emit(format_matroid(m.renamed(n.name() + (coext ? "-coext-" : "-ext-") + vector)), out);
    return kOk;
  }

  std::vector<GrowthCandidate> cands = coext ? cosimple_coextension_candidates(n) : simple_extension_candidates(n);
  if (!in_class_spec.empty()) {
    const MinorClass cls = load_class(in_class_spec);
    std::vector<char> keep(cands.size());
    for_each_index(cands.size(), execution_for(c.jobs),
                   [&](std::size_t i) { keep[i] = in_class(cands[i].result, cls) ? 1 : 0; });
    std::vector<GrowthCandidate> kept;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (keep[i]) kept.push_back(std::move(cands[i]));
    cands = std::move(kept);
  }
  std::vector<BinaryMatroid> results;
  for (const auto& g : cands) results.push_back(g.result);
  const auto classes = iso_classes(results);
  std::vector<std::size_t> class_of(cands.size());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (std::size_t i : classes[k].members) class_of[i] = k;
  auto bits_of = [&](const GrowthCandidate& g) { return (coext ? *g.w : *g.v).to_string(); };

  if (!out.empty()) {
    std::filesystem::create_directories(out);
    for (const auto& g : cands) {
      const std::string name = n.name() + (coext ? "-coext-" : "-ext-") + bits_of(g);
      save_matroid(g.result.renamed(name), std::filesystem::path(out) / (name + ".mat"));
    }
  }
  if (c.format == "json") {
    Json j{{"source", n.name()}, {"kind", coext ? "coextension" : "extension"}, {"count", cands.size()}};
    Json cj = Json::array();
    for (std::size_t i = 0; i < cands.size(); ++i) cj.push_back({{"vector", bits_of(cands[i])}, {"class", class_of[i]}});
    j["candidates"] = cj;
    Json kj = Json::array();
    for (const auto& cl : classes) {
      Json members = Json::array();
      for (std::size_t i : cl.members) members.push_back(bits_of(cands[i]));
      kj.push_back({{"representative", bits_of(cands[cl.representative])}, {"members", members}});
    }
    j["classes"] = kj;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << cands.size() << " " << (coext ? "cosimple coextension" : "simple extension") << " candidate(s)"
              << (in_class_spec.empty() ? "" : " in class " + in_class_spec) << ", " << classes.size()
              << " isomorphism class(es)\n";
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::cout << "class " << k << ":";
      for (std::size_t i : classes[k].members) std::cout << " " << bits_of(cands[i]);
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_minor(const std::string& source, const std::string& target, const Common& c) {
  const BinaryMatroid m = resolve_source(source, {c.standardize});
  const BinaryMatroid t = resolve_source(target, {c.standardize});
  const auto w = has_minor(m, t);
  if (c.format == "json") {
    Json j{{"found", w.has_value()}};
    if (w) j["witness"] = {{"contract", ids_json(w->con)}, {"delete", ids_json(w->del)}};
    std::cout << j.dump(2) << "\n";
  } else if (w) {
    std::cout << "contract " << format_subset(w->con) << " delete " << format_subset(w->del) << "\n";
  } else {
    std::cout << "none\n";
  }
  return w ? kOk : kNegative;
}

int cmd_iso(const std::string& a_src, const std::string& b_src, const Common& c) {
  const BinaryMatroid a = resolve_source(a_src, {c.standardize});
  const BinaryMatroid b = resolve_source(b_src, {c.standardize});
  const auto bij = are_isomorphic(a, b);
  if (c.format == "json") {
    Json j{{"isomorphic", bij.has_value()}};
    if (bij) {
      Json m = Json::array();
      for (auto [x, y] : *bij) m.push_back({id_value(x), id_value(y)});
      j["bijection"] = m;
    }
    std::cout << j.dump(2) << "\n";
  } else if (bij) {
    for (std::size_t i = 0; i < bij->size(); ++i)
      std::cout << (i ? ", " : "") << id_value((*bij)[i].first) << "->" << id_value((*bij)[i].second);
    std::cout << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return bij ? kOk : kNegative;
}

/// Catalog entries isomorphic to m, for annotating witnesses.
std::vector<std::string> identify(const BinaryMatroid& m) {
  std::vector<std::string> out;
  for (const auto& key : catalog_keys()) {
    const BinaryMatroid& c = builtin(key);
    if (c.size() == m.size() && c.rank() == m.rank() && are_isomorphic(m, c)) out.push_back(key);
  }
  return out;
}

struct CheckArgs {
  std::string side;
  std::size_t k = 3;
  std::string cls = "regular";
  bool no_prune = false;
  bool cross_validate = false;
  bool all_matching = false;
  bool tables = false;
  bool corollary = false;
  std::string report;
  std::size_t max_witnesses = 10;
};

int cmd_check(const std::string& source, const CheckArgs& a, const Common& c) {
  const BinaryMatroid n = resolve_source(source, {c.standardize});
  GroundSubset side;
  if (!a.side.empty()) {
    side = parse_ids(a.side);
  } else if (is_catalog_key(source) && catalog_entry(source).side) {
    side = *catalog_entry(source).side;
  } else {
    throw Error(ErrorKind::InvalidArgument, "--side is required for " + source);
  }
  require_ids(n, side);
  DecompositionProblem p{n, side, a.k, load_class(a.cls), {}};
  p.options.use_pruning = !a.no_prune;
  p.options.cross_validate = a.cross_validate;
  p.options.emit_tables = a.tables;
  p.options.all_matching_cases = a.all_matching;
  const Execution exec = execution_for(c.jobs);

  if (a.corollary) {
    const Verdict v = corollary_1_2_check(p, exec);
    std::cout << "Verdict: " << to_string(v.kind) << " (4-element circuit-cocircuit fast path)\n";
    for (const auto& w : v.witnesses) std::cout << "witness: " << w.key << " " << w.note << "\n";
    return v.certified() ? kOk : kNegative;
  }

  const auto [verdict, report] = certify(p, exec);
  if (!a.report.empty()) {
    const bool json = c.format == "json" || a.report.ends_with(".json");
    emit(render_report(report, json ? ReportFormat::Json : ReportFormat::Markdown), a.report);
  }
  if (c.format == "json" && a.report.empty()) {
    std::cout << render_report(report, ReportFormat::Json) << "\n";
    return verdict.certified() ? kOk : kNegative;
  }

  const Counts t = report.total();
  std::cout << "Verdict: " << to_string(verdict.kind) << "\n";
  std::cout << "candidates: generated " << t.generated << ", pruned " << t.pruned << ", constructed " << t.constructed
            << ", checked " << t.checked << ", excluded " << t.excluded << "\n";
  if (a.cross_validate) std::cout << "cross-validation disagreements: " << report.mismatches.size() << "\n";
  for (const auto& r : verdict.reasons) std::cout << "hypothesis failed: " << r << "\n";
  if (!verdict.witnesses.empty()) {
    // Witnesses that match a catalog entry first, then in key order.
    struct Shown {
      const ConditionVerdict* v;
      std::vector<std::string> names;
    };
    std::vector<Shown> shown;
    for (const auto& w : verdict.witnesses)
      shown.push_back({&w, w.candidate ? identify(w.candidate->result) : std::vector<std::string>{}});
    std::stable_sort(shown.begin(), shown.end(),
                     [](const Shown& x, const Shown& y) { return !x.names.empty() && y.names.empty(); });
    std::cout << verdict.witnesses.size() << " failing candidate(s)\n";
    for (std::size_t i = 0; i < shown.size() && i < a.max_witnesses; ++i) {
      const ConditionVerdict& w = *shown[i].v;
      std::cout << "witness " << w.key << ": failing condition " << to_string(w.condition);
      if (!shown[i].names.empty()) {
        std::cout << ", isomorphic to";
        for (const auto& nm : shown[i].names) std::cout << " " << nm;
      }
      if (!w.note.empty()) std::cout << " [" << w.note << "]";
      std::cout << "\n";
    }
    if (shown.size() > a.max_witnesses) std::cout << "... " << shown.size() - a.max_witnesses << " more\n";
  }
  return verdict.certified() ? kOk : kNegative;
}

int cmd_reproduce(const std::string& what, const std::string& out, const Common& c) {
  const Execution exec = execution_for(c.jobs);
  if (what == "r12") {
    const TableReproduction t1 = r12_coextension_table(exec), t2 = r12_extension_table(exec);
    emit("# R12 growth tables\n\n" + t1.render() + "\n" + t2.render(), out);
    return t1.all_match() && t2.all_match() ? kOk : kNegative;
  }
  if (what == "counterexample") {
    const CounterexampleReproduction r = counterexample_checks(exec);
    emit(r.render(), out);
    return r.all_hold() ? kOk : kNegative;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown reproduction '" + what + "' (expected r12 or counterexample)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matdec: binary matroid decomposition certifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--standardize", common.standardize, "Row-reduce matroid files whose first r columns are not I_r");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-j,--jobs", common.jobs, "Worker threads (1 = serial reference path)")->check(CLI::PositiveNumber);

  std::string source, source2, set, vector, in_class_spec, out, target, what;
  std::vector<std::size_t> ks;
  bool all = false;
  CheckArgs check;

  auto* info = app.add_subcommand("info", "Size, rank, simplicity, connectivity and circuit census");
  info->add_option("source", source, "Catalog key or matroid file")->required();

  auto* lam = app.add_subcommand("lambda", "Connectivity of a set and its separation class");
  lam->add_option("source", source)->required();
  lam->add_option("--set", set, "Comma-separated element ids")->required();
  lam->add_option("--k", ks, "Separation order (repeatable, default 3)");

  CLI::App* grow[2];
  for (int i = 0; i < 2; ++i) {
    grow[i] = app.add_subcommand(i ? "coextend" : "extend",
                                 i ? "Coextend by a row or list cosimple coextensions"
                                   : "Extend by a column or list simple extensions");
    grow[i]->add_option("source", source)->required();
    grow[i]->add_option("--vector", vector, "Bit string");
    grow[i]->add_flag("--all", all, "Enumerate every candidate, grouped by isomorphism class");
    grow[i]->add_option("--in-class", in_class_spec, "Keep only results in this class");
    grow[i]->add_option("--out", out, "Output file (--vector) or directory (--all)");
  }

  auto* minor = app.add_subcommand("minor", "Search for a minor isomorphic to a target");
  minor->add_option("source", source)->required();
  minor->add_option("--target", target, "Catalog key or matroid file")->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("source", source)->required();
  iso->add_option("other", source2)->required();

  auto* chk = app.add_subcommand("check", "Certify that N is a k-decomposer with inducer (A, B)");
  chk->add_option("source", source)->required();
  chk->add_option("--side", check.side, "Side A as comma-separated ids (defaults to the catalog side)");
  chk->add_option("--k", check.k, "Separation order")->check(CLI::Range(2, 16));
  chk->add_option("--class", check.cls, "regular, all-binary, or comma-separated excluded minors");
  chk->add_flag("--no-prune", check.no_prune, "Construct every two-element growth");
  chk->add_flag("--cross-validate", check.cross_validate, "Also evaluate the circuit/cocircuit formulation");
  chk->add_flag("--all-matching-cases", check.all_matching,
                "Require the consequent of every matching case pattern, not only the governing one");
  chk->add_flag("--tables", check.tables, "Add per-parent growth tables to the report");
  chk->add_flag("--corollary", check.corollary, "Use the 4-element circuit-cocircuit fast path");
  chk->add_option("--report", check.report, "Write the full report here (markdown, or json)");
  chk->add_option("--max-witnesses", check.max_witnesses, "Failing candidates to list");

  auto* rep = app.add_subcommand("reproduce", "Regenerate the R12 tables or the counterexample checks");
  rep->add_option("what", what, "r12 or counterexample")->required()->check(CLI::IsMember({"r12", "counterexample"}));
  rep->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(source, common);
    if (*lam) return cmd_lambda(source, set, ks, common);
    if (*grow[0]) return cmd_grow(false, source, vector, all, in_class_spec, out, common);
    if (*grow[1]) return cmd_grow(true, source, vector, all, in_class_spec, out, common);
    if (*minor) return cmd_minor(source, target, common);
    if (*iso) return cmd_iso(source, source2, common);
    if (*chk) return cmd_check(source, check, common);
    if (*rep) return cmd_reproduce(what, out, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
