#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "matdec/growth.hpp"

using namespace matdec;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("every catalog validation holds") {
  std::size_t total = 0;
  for (const auto& key : catalog_keys()) {
    const CatalogEntry& e = catalog_entry(key);
    for (const auto& [name, ok] : run_validations(e)) {
      INFO(key << ": " << name);
      CHECK(ok);
      ++total;
    }
  }
  CHECK(total >= 40);
}

TEST_CASE("catalog keys and lookups") {
  for (const char* key : {"F7", "F7dual", "R12", "P13", "Q13_r12", "P13dual", "Q13dual_r12", "X", "Y", "Z", "Zprime",
                          "Q13_sec5", "W3", "W4", "AG32"})
    CHECK(is_catalog_key(key));
  CHECK(kind_of([] { builtin("nope"); }) == ErrorKind::UnknownKey);
  CHECK(builtin("R12").size() == 12);
  CHECK(builtin("Q13_sec5").rank() == 7);
  CHECK(builtin("Q13_r12").rank() == 6);
}

TEST_CASE("R12 is self-dual and regular with the expected separation") {
  const BinaryMatroid& r12 = builtin("R12");
  CHECK(are_isomorphic(r12, dual(r12)));
  CHECK(*catalog_entry("R12").side == make_subset({3, 4, 7, 8, 11, 12}));
  CHECK(r12.d_block() == r12.d_block().transpose());
}

TEST_CASE("wheels") {
  const BinaryMatroid w3 = wheel(3);
  CHECK(w3.size() == 6);
  CHECK(are_isomorphic(w3, builtin("W3")));
  CHECK(is_n_connected(wheel(5), 3));
}

TEST_CASE("save then load is the identity") {
  const BinaryMatroid& r12 = builtin("R12");
  const BinaryMatroid back = parse_matroid(format_matroid(r12));
  CHECK(back == r12);
  CHECK(back.name() == r12.name());
  // Matroids whose basis is not in front come back in [I | D] column order.
  const BinaryMatroid& z = builtin("Z");
  const BinaryMatroid zb = parse_matroid(format_matroid(z));
  CHECK(same_matroid(zb, z));
  CHECK(format_matroid(zb) == format_matroid(z));

  const auto path = std::filesystem::temp_directory_path() / "matdec_roundtrip.mat";
  save_matroid(z, path);
  CHECK(same_matroid(load_matroid(path), z));
  CHECK(same_matroid(resolve_source(path.string()), z));
  std::filesystem::remove(path);
}

TEST_CASE("file errors") {
  const std::string ok = "matroid t\nrank 2\nelements 4\nfield 2\n1 0 1 1\n0 1 0 1\n";
  CHECK(parse_matroid(ok).size() == 4);
  CHECK(kind_of([] { parse_matroid("matroid t\nrank 2\nelements 4\nfield 2\n1 0 1 1\n0 1 0 1\n1 1 1 1\n"); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { parse_matroid("matroid t\nrank 2\nelements 4\nfield 2\n1 0 1\n0 1 0 1\n"); }) ==
        ErrorKind::DimensionMismatch);
  const std::string nonstd = "matroid t\nrank 2\nelements 4\nfield 2\n1 1 1 0\n0 1 0 1\n";
  CHECK(kind_of([&] { parse_matroid(nonstd); }) == ErrorKind::NonStandardForm);
  CHECK(parse_matroid(nonstd, {true}).rank() == 2);
  CHECK(kind_of([] { parse_matroid("matroid t\nrank 2\nelements 4\nfield 2\n1 1 1 0\n1 1 1 0\n", {true}); }) ==
        ErrorKind::NotStandardizable);
  CHECK(kind_of([] { parse_matroid("matroid t\nrank x\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matroid("matroid t\nrank 2\nelements 4\nfield 3\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matroid("matroid t\nrank 2\nelements 4\nfield 2\n1 0 2 1\n0 1 0 1\n"); }) ==
        ErrorKind::ParseError);
  try {
    parse_matroid("matroid t\nrank 2\nelements 4\nfield 2\n1 0 2 1\n0 1 0 1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
  CHECK(kind_of([] { resolve_source("/nonexistent/file.mat"); }) != ErrorKind::InvalidArgument);
}

TEST_CASE("positional labels follow the growth history") {
  const CatalogEntry& r12 = catalog_entry("R12");
  const ElementId e = r12.matroid.fresh_id();
  const BinaryMatroid q13 = extend(r12.matroid, gf2::Vector::from_string("001100"), e);
  const ElementId f = q13.fresh_id();
  const BinaryMatroid m = coextend(q13, gf2::Vector::from_string("0000110"), f);
  const Lineage lin = Lineage{r12.matroid, {}}.extended(e).coextended(f);
  const auto labels = positional_labels(m, lin);
  GroundSubset ae = *r12.side;
  ae.push_back(e);
  CHECK(format_labelled(normalized(ae), labels) == "{3, 4, 8, 9, 12, 13, 14}");
  CHECK(labels.at(f) == 7);

  const CatalogEntry& z = catalog_entry("Z");
  const auto zl = positional_labels(z.matroid, *z.lineage);
  CHECK(zl.at(z.lineage->steps[1].second) == 6);
  CHECK(zl.at(z.lineage->steps[0].second) == 12);

  const auto id = positional_labels(r12.matroid, Lineage{r12.matroid, {}});
  for (ElementId x : r12.matroid.elements()) CHECK(id.at(x) == id_value(x));
  CHECK(kind_of([&] { positional_labels(m, Lineage{r12.matroid, {}}); }) == ErrorKind::LineageIncomplete);
}

TEST_CASE("class specifications") {
  CHECK(load_class("regular").excluded.size() == 2);
  CHECK(load_class("all-binary").excluded.empty());
  CHECK(load_class("F7,F7dual").excluded.size() == 2);
  CHECK(kind_of([] { load_class("F7,,W3"); }) == ErrorKind::InvalidArgument);
}
