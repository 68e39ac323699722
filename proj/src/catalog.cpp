#include "matdec/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "matdec/connectivity.hpp"
#include "matdec/growth.hpp"

namespace matdec {

using gf2::Matrix;
using gf2::Vector;

Lineage Lineage::extended(ElementId e) const {
  Lineage out = *this;
  out.steps.emplace_back(Step::Extension, e);
  return out;
}

Lineage Lineage::coextended(ElementId f) const {
  Lineage out = *this;
  out.steps.emplace_back(Step::Coextension, f);
  return out;
}

std::map<ElementId, std::uint32_t> lineage_labels(const Lineage& lineage) {
  std::map<ElementId, std::uint32_t> labels;
  const auto base = lineage.base.elements();
  for (std::size_t i = 0; i < base.size(); ++i) labels[base[i]] = static_cast<std::uint32_t>(i + 1);
  auto n = static_cast<std::uint32_t>(base.size());
  auto r = static_cast<std::uint32_t>(lineage.base.rank());
  for (const auto& [step, id] : lineage.steps) {
    if (step == Lineage::Step::Extension) {
      labels[id] = ++n;
    } else {
      for (auto& [_, label] : labels) {
        if (label > r) ++label;
      }
      labels[id] = ++r;
      ++n;
    }
  }
  return labels;
}

std::map<ElementId, std::uint32_t> positional_labels(const BinaryMatroid& m, const Lineage& lineage) {
  std::map<ElementId, std::uint32_t> labels = lineage_labels(lineage);
  for (ElementId id : m.elements()) {
    if (!labels.contains(id)) {
      throw Error(ErrorKind::LineageIncomplete,
                  "element " + std::to_string(id_value(id)) + " of " + m.name() + " has no lineage");
    }
  }
  std::map<ElementId, std::uint32_t> out;
  for (ElementId id : m.elements()) out[id] = labels[id];
  return out;
}

std::string format_labelled(const GroundSubset& s, const std::map<ElementId, std::uint32_t>& labels) {
  GroundSubset mapped;
  for (ElementId id : s) {
    const auto it = labels.find(id);
    mapped.push_back(it == labels.end() ? id : ElementId{it->second});
  }
  return format_subset(normalized(std::move(mapped)));
}

BinaryMatroid wheel(std::size_t spokes) {
  if (spokes < 3) throw Error(ErrorKind::InvalidArgument, "a wheel needs at least 3 spokes");
  Matrix rep(spokes, 2 * spokes);
  for (std::size_t i = 0; i < spokes; ++i) {
    rep.set(i, i, true);
    rep.set(i, spokes + i, true);
    rep.set((i + 1) % spokes, spokes + i, true);
  }
  return BinaryMatroid::from_matrix(rep, std::nullopt, "W" + std::to_string(spokes));
}

namespace {

Matrix standard(std::initializer_list<std::string_view> d_rows) {
  const Matrix d = Matrix::from_rows(d_rows);
  return Matrix::identity(d.rows()).hstack(d);
}

Vector bits(std::string_view s) { return Vector::from_string(s); }

Validation size_is(std::size_t n, std::size_t r) {
  return {"n=" + std::to_string(n) + ", r=" + std::to_string(r),
          [n, r](const BinaryMatroid& m) { return m.size() == n && m.rank() == r; }};
}

Validation lambda_is(GroundSubset a, std::size_t value) {
  return {"lambda(" + format_subset(a) + ") = " + std::to_string(value),
          [a, value](const BinaryMatroid& m) { return lambda(m, a) == value; }};
}

Validation three_connected() {
  return {"3-connected", [](const BinaryMatroid& m) { return is_n_connected(m, 3); }};
}

Validation regular(bool expected) {
  return {expected ? "regular" : "non-regular",
          [expected](const BinaryMatroid& m) { return is_regular(m) == expected; }};
}

Validation simple_cosimple() {
  return {"simple and cosimple", [](const BinaryMatroid& m) { return is_simple(m) && is_cosimple(m); }};
}

Validation isomorphic_to(std::string what, std::function<BinaryMatroid()> other) {
  return {"isomorphic to " + what,
          [other = std::move(other)](const BinaryMatroid& m) { return are_isomorphic(m, other()).has_value(); }};
}

Validation exact_nonminimal(GroundSubset a, std::size_t k) {
  return {"(" + format_subset(a) + ", B) is an exact non-minimal " + std::to_string(k) + "-separation",
          [a, k](const BinaryMatroid& m) {
            return classify_separation(m, a, k).kind == SeparationKind::ExactNonMinimal;
          }};
}

Validation sides_are_unions(GroundSubset a) {
  return {"both sides are unions of circuits and of cocircuits", [a](const BinaryMatroid& m) {
            const ElementMask am = m.mask_of(a);
            const ElementMask bm = m.full_mask() & ~am;
            return side_is_union_of_circuits_mask(m, am) && side_is_union_of_cocircuits_mask(m, am) &&
                   side_is_union_of_circuits_mask(m, bm) && side_is_union_of_cocircuits_mask(m, bm);
          }};
}

struct Catalog {
  std::vector<std::string> keys;
  std::map<std::string, CatalogEntry> entries;

  const CatalogEntry& add(CatalogEntry entry) {
    keys.push_back(entry.key);
    return entries[entry.key] = std::move(entry);
  }
};

Catalog build_catalog() {
  Catalog c;

  const auto& f7 = c.add({"F7",
                          BinaryMatroid::from_matrix(standard({"1101", "1011", "0111"}), std::nullopt, "F7"),
                          "Fano plane PG(2,2), standard representation",
                          std::nullopt,
                          std::nullopt,
                          {size_is(7, 3), three_connected(), regular(false),
                           {"7 triangles", [](const BinaryMatroid& m) {
                              const auto cs = circuits(m);
                              return std::count_if(cs.begin(), cs.end(),
                                                   [](const Circuit& x) { return x.elements.size() == 3; }) == 7;
                            }}}});
  c.add({"F7dual", dual(f7.matroid).renamed("F7*"), "dual of F7", std::nullopt, std::nullopt,
         {size_is(7, 4), three_connected(), regular(false)}});

  const GroundSubset r12_a = make_subset({3, 4, 7, 8, 11, 12});
  const auto& r12 = c.add(
      {"R12",
       BinaryMatroid::from_matrix(standard({"111000", "110100", "100010", "010001", "001011", "000111"}),
                                  std::nullopt, "R12"),
       "Oxley, Matroid Theory, standard symmetric representation of R12",
       r12_a,
       std::nullopt,
       {size_is(12, 6), three_connected(), regular(true),
        {"self-dual", [](const BinaryMatroid& m) { return are_isomorphic(m, dual(m)).has_value(); }},
        {"symmetric D", [](const BinaryMatroid& m) { return m.d_block() == m.d_block().transpose(); }},
        lambda_is(make_subset({1, 2, 5, 6, 9, 10}), 2), exact_nonminimal(r12_a, 3), sides_are_unions(r12_a)}});

  const Lineage r12_lineage{r12.matroid, {}};
  const ElementId r12_new = r12.matroid.fresh_id();
  auto r12_ext = [&](const char* key, const char* name, std::string_view v, const char* note) {
    return c.add({key, extend(r12.matroid, bits(v)).renamed(name), note, r12_a, r12_lineage.extended(r12_new),
                  {size_is(13, 6), simple_cosimple(), regular(true), three_connected()}});
  };
  auto r12_coext = [&](const char* key, const char* name, std::string_view w, const char* note) {
    return c.add({key, coextend(r12.matroid, bits(w)).renamed(name), note, r12_a,
                  r12_lineage.coextended(r12_new),
                  {size_is(13, 7), simple_cosimple(), regular(true), three_connected()}});
  };
  const auto& p13 = r12_ext("P13", "P13", "000011", "R12 extended by column 000011");
  const auto& q13 = r12_ext("Q13_r12", "Q13", "001100", "R12 extended by column 001100");
  c.entries["P13"].validations.push_back(
      isomorphic_to("R12 + 110000", [m = r12.matroid] { return extend(m, bits("110000")); }));
  c.entries["P13"].validations.push_back(
      isomorphic_to("R12 + 110011", [m = r12.matroid] { return extend(m, bits("110011")); }));
  c.entries["Q13_r12"].validations.push_back(
      {"not isomorphic to P13", [p = p13.matroid](const BinaryMatroid& m) { return !are_isomorphic(m, p); }});
  r12_coext("P13dual", "P13*", "000011", "R12 coextended by row 000011");
  r12_coext("Q13dual_r12", "Q13*", "001100", "R12 coextended by row 001100");
  c.entries["P13dual"].validations.push_back(isomorphic_to("dual of P13", [p = p13.matroid] { return dual(p); }));
  c.entries["Q13dual_r12"].validations.push_back(
      isomorphic_to("dual of Q13", [q = q13.matroid] { return dual(q); }));

  const GroundSubset x_a = make_subset({1, 2, 5, 6, 7, 10});
  const auto& x = c.add({"X",
                         BinaryMatroid::from_matrix(standard({"01111", "10111", "11010", "11110", "01001"}),
                                                    std::nullopt, "X"),
                         "10-element rank-5 counterexample base",
                         x_a,
                         std::nullopt,
                         {size_is(10, 5), simple_cosimple(), lambda_is(x_a, 2), exact_nonminimal(x_a, 3)}});
  const Lineage x_lineage{x.matroid, {}};
  const ElementId x_e = x.matroid.fresh_id();
  const auto& y = c.add({"Y", extend(x.matroid, bits("11000"), x_e).renamed("Y"), "X extended by column 11000",
                         x_a, x_lineage.extended(x_e),
                         {size_is(11, 5), lambda_is(x_a, 2),
                          lambda_is(normalized([&] {
                                      GroundSubset s = x_a;
                                      s.push_back(x_e);
                                      return s;
                                    }()),
                                    2)}});
  const ElementId x_f = y.matroid.fresh_id();
  const auto& z = c.add({"Z", coextend(y.matroid, bits("110011"), x_f).renamed("Z"), "Y coextended by row 110011",
                         x_a, x_lineage.extended(x_e).coextended(x_f),
                         {size_is(12, 6), simple_cosimple(),
                          {"lambda(A) != 2", [x_a](const BinaryMatroid& m) { return lambda(m, x_a) != 2; }},
                          lambda_is(normalized([&] {
                                      GroundSubset s = x_a;
                                      s.push_back(x_e);
                                      s.push_back(x_f);
                                      return s;
                                    }()),
                                    2)}});
  c.add({"Zprime", coextend(y.matroid, bits("111001"), x_f).renamed("Z'"), "Y coextended by row 111001", x_a,
         x_lineage.extended(x_e).coextended(x_f), {size_is(12, 6), lambda_is(x_a, 2)}});
  c.add({"Q13_sec5",
         BinaryMatroid::from_matrix(
             standard({"011111", "101111", "110100", "111100", "010010", "110011", "111001"}), std::nullopt, "Q13'"),
         "Y coextended by rows 110011 and 111001 (the displayed 7x13 matrix)",
         std::nullopt,
         std::nullopt,
         {size_is(13, 7), three_connected(),
          {"internally 4-connected", [](const BinaryMatroid& m) { return is_internally_4_connected(m); }},
          isomorphic_to("Z coextended by 111001", [m = z.matroid] { return coextend(m, bits("111001")); })}});

  c.add({"W3", wheel(3), "wheel with 3 spokes, M(K4)", std::nullopt, std::nullopt,
         {size_is(6, 3), three_connected(), regular(true)}});
  c.add({"W4", wheel(4), "wheel with 4 spokes", std::nullopt, std::nullopt,
         {size_is(8, 4), three_connected(), regular(true)}});

  Matrix ag(4, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    ag.set(0, j, true);
    for (std::size_t b = 0; b < 3; ++b) ag.set(b + 1, j, (j >> b) & 1U);
  }
  c.add({"AG32", BinaryMatroid::from_matrix(ag, std::nullopt, "AG(3,2)"), "binary affine cube AG(3,2)",
         make_subset({1, 2, 3, 4}), std::nullopt,
         {size_is(8, 4), three_connected(), regular(false),
          {"every 4-circuit is a cocircuit", [](const BinaryMatroid& m) {
             for (ElementMask c4 : circuit_masks(m)) {
               if (std::popcount(c4) == 4 && !is_cocircuit_mask(m, c4)) return false;
             }
             return true;
           }}}});
  return c;
}

const Catalog& catalog() {
  static const Catalog c = build_catalog();
  return c;
}

}  // namespace

const std::vector<std::string>& catalog_keys() { return catalog().keys; }

bool is_catalog_key(const std::string& key) { return catalog().entries.contains(key); }

const CatalogEntry& catalog_entry(const std::string& key) {
  const auto& entries = catalog().entries;
  const auto it = entries.find(key);
  if (it == entries.end()) throw Error(ErrorKind::UnknownKey, "no catalog matroid named '" + key + "'");
  return it->second;
}

const BinaryMatroid& builtin(const std::string& key) { return catalog_entry(key).matroid; }

std::vector<std::pair<std::string, bool>> run_validations(const CatalogEntry& entry) {
  std::vector<std::pair<std::string, bool>> out;
  for (const Validation& v : entry.validations) out.emplace_back(v.name, v.check(entry.matroid));
  return out;
}

// ---------------------------------------------------------------- files

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::size_t parse_count(const std::string& text, std::size_t line, std::size_t column) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    parse_fail(line, column, "expected a non-negative integer, got '" + text + "'");
  }
  return std::stoul(text);
}

struct Tokens {
  std::vector<std::string> words;
  std::vector<std::size_t> columns;  // 1-based
};

Tokens tokenize(const std::string& line) {
  Tokens out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.words.push_back(line.substr(start, i - start));
    out.columns.push_back(start + 1);
  }
  return out;
}

}  // namespace

BinaryMatroid parse_matroid(const std::string& text, const LoadOptions& options) {
  std::vector<std::pair<std::size_t, Tokens>> lines;
  {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      Tokens t = tokenize(line);
      if (!t.words.empty() && t.words.front().starts_with('#')) continue;
      if (!t.words.empty()) lines.emplace_back(number, std::move(t));
    }
  }
  std::size_t cursor = 0;
  auto header = [&](const char* keyword) -> const std::pair<std::size_t, Tokens>& {
    if (cursor >= lines.size()) parse_fail(lines.empty() ? 1 : lines.back().first + 1, 1,
                                           std::string("missing '") + keyword + "' line");
    const auto& entry = lines[cursor];
    if (entry.second.words.front() != keyword) {
      parse_fail(entry.first, 1, std::string("expected '") + keyword + "', got '" + entry.second.words.front() + "'");
    }
    ++cursor;
    return entry;
  };
  auto single_value = [&](const char* keyword) {
    const auto& [number, t] = header(keyword);
    if (t.words.size() != 2) parse_fail(number, t.columns.front(), std::string("'") + keyword + "' takes one value");
    return parse_count(t.words[1], number, t.columns[1]);
  };

  std::string name;
  {
    const auto& [number, t] = header("matroid");
    if (t.words.size() < 2) parse_fail(number, 1, "'matroid' needs a name");
    for (std::size_t i = 1; i < t.words.size(); ++i) name += (i > 1 ? " " : "") + t.words[i];
  }
  const std::size_t r = single_value("rank");
  const std::size_t n = single_value("elements");
  {
    const std::size_t field_line = cursor < lines.size() ? lines[cursor].first : 0;
    if (single_value("field") != 2) parse_fail(field_line, 7, "only field 2 is supported");
  }
  if (n > kMaxGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge, "files may describe at most 64 elements");
  }
  std::optional<std::vector<ElementId>> labels;
  if (cursor < lines.size() && lines[cursor].second.words.front() == "labels") {
    const auto& [number, t] = lines[cursor++];
    if (t.words.size() != n + 1) {
      throw Error(ErrorKind::DimensionMismatch, "line " + std::to_string(number) + ": expected " +
                                                    std::to_string(n) + " labels, got " +
                                                    std::to_string(t.words.size() - 1));
    }
    labels.emplace();
    for (std::size_t i = 1; i < t.words.size(); ++i) {
      const std::size_t v = parse_count(t.words[i], number, t.columns[i]);
      if (v == 0 || v > 0xFFFFFFFFu) parse_fail(number, t.columns[i], "labels must be positive 32-bit integers");
      labels->push_back(ElementId{static_cast<std::uint32_t>(v)});
    }
  }
  if (lines.size() - cursor != r) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(r) + " matrix rows, found " +
                                                  std::to_string(lines.size() - cursor));
  }
  Matrix rep(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& [number, t] = lines[cursor + i];
    if (t.words.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "line " + std::to_string(number) + ": expected " +
                                                    std::to_string(n) + " entries, found " +
                                                    std::to_string(t.words.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (t.words[j] != "0" && t.words[j] != "1") parse_fail(number, t.columns[j], "entries must be 0 or 1");
      rep.set(i, j, t.words[j] == "1");
    }
  }

  std::vector<ElementId> elements;
  if (labels) {
    elements = *labels;
  } else {
    for (std::size_t j = 0; j < n; ++j) elements.push_back(ElementId{static_cast<std::uint32_t>(j + 1)});
  }
  if (options.standardize) {
    const BinaryMatroid m = BinaryMatroid::from_matrix(rep, elements, name);
    if (m.rank() != r) {
      throw Error(ErrorKind::NotStandardizable, "declared rank " + std::to_string(r) + " but the matrix has rank " +
                                                    std::to_string(m.rank()));
    }
    return m;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (rep.get(i, j) != (i == j)) {
        throw Error(ErrorKind::NonStandardForm,
                    "the first " + std::to_string(r) + " columns are not the identity (use --standardize)");
      }
    }
  }
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) basis[i] = i;
  return BinaryMatroid::from_standard(rep, basis, elements, name);
}

BinaryMatroid load_matroid(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matroid(buffer.str(), options);
}

std::string format_matroid(const BinaryMatroid& m) {
  std::vector<std::size_t> order(m.basis_positions().begin(), m.basis_positions().end());
  order.insert(order.end(), m.nonbasis_positions().begin(), m.nonbasis_positions().end());
  std::ostringstream out;
  out << "matroid " << (m.name().empty() ? "M" : m.name()) << '\n';
  out << "rank " << m.rank() << '\n';
  out << "elements " << m.size() << '\n';
  out << "field 2\n";
  out << "labels";
  for (std::size_t j : order) out << ' ' << id_value(m.elements()[j]);
  out << '\n';
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t k = 0; k < order.size(); ++k) out << (k ? " " : "") << (m.rep().get(i, order[k]) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

void save_matroid(const BinaryMatroid& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << format_matroid(m);
}

BinaryMatroid resolve_source(const std::string& source, const LoadOptions& options) {
  if (is_catalog_key(source)) return builtin(source);
  if (std::filesystem::exists(source)) return load_matroid(source, options);
  throw Error(ErrorKind::UnknownKey, "'" + source + "' is neither a catalog key nor a readable file");
}

MinorClass load_class(const std::string& spec) {
  if (spec == "regular") return regular_class();
  if (spec == "all-binary") return all_binary_class();
  MinorClass cls{spec, {}};
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty entry in class list '" + spec + "'");
    cls.excluded.push_back(resolve_source(item));
  }
  return cls;
}

}  // namespace matdec
