#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matdec/matroid.hpp"
#include "matdec/minor.hpp"

namespace matdec {

/// How a matroid was grown from a base, one step per added element.
struct Lineage {
  enum class Step { Extension, Coextension };
  BinaryMatroid base;
  std::vector<std::pair<Step, ElementId>> steps;

  Lineage extended(ElementId e) const;
  Lineage coextended(ElementId f) const;
};

/// Positional labels in the convention of growth tables: the base is labelled
/// 1..n by column position, an extension element gets n+1, and a coextension
/// element gets r+1 with every label above r shifted up by one.
/// Throws LineageIncomplete when some element of m is not accounted for.
std::map<ElementId, std::uint32_t> positional_labels(const BinaryMatroid& m, const Lineage& lineage);

/// Labels of every element named by the lineage.
std::map<ElementId, std::uint32_t> lineage_labels(const Lineage& lineage);

/// Applies `labels` to `s` and formats the result as "{a, b, c}".
std::string format_labelled(const GroundSubset& s, const std::map<ElementId, std::uint32_t>& labels);

struct Validation {
  std::string name;
  std::function<bool(const BinaryMatroid&)> check;
};

struct CatalogEntry {
  std::string key;
  BinaryMatroid matroid;
  std::string provenance;
  std::optional<GroundSubset> side;  // distinguished separation side, if any
  std::optional<Lineage> lineage;
  std::vector<Validation> validations;
};

/// Keys in catalog order.
const std::vector<std::string>& catalog_keys();
const CatalogEntry& catalog_entry(const std::string& key);
/// Throws UnknownKey.
const BinaryMatroid& builtin(const std::string& key);
bool is_catalog_key(const std::string& key);

/// Name and outcome of every validation of one entry.
std::vector<std::pair<std::string, bool>> run_validations(const CatalogEntry& entry);

/// The graphic wheel M(W_m): spokes are the basis, rim edge i is spokes i and i+1.
BinaryMatroid wheel(std::size_t spokes);

// ---------------------------------------------------------------- files

struct LoadOptions {
  bool standardize = false;  // row-reduce instead of rejecting a non-identity prefix
};

BinaryMatroid parse_matroid(const std::string& text, const LoadOptions& options = {});
BinaryMatroid load_matroid(const std::filesystem::path& path, const LoadOptions& options = {});

/// Basis columns are written first (with labels) so the file is in [I_r | D] form.
std::string format_matroid(const BinaryMatroid& m);
void save_matroid(const BinaryMatroid& m, const std::filesystem::path& path);

/// A catalog key or a path to a matroid file.
BinaryMatroid resolve_source(const std::string& source, const LoadOptions& options = {});

/// "regular", "all-binary", or a comma-separated list of catalog keys / files.
MinorClass load_class(const std::string& spec);

}  // namespace matdec
