#ifndef SPOS_IO_HPP_
#define SPOS_IO_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "spos/congruence.hpp"
#include "spos/core.hpp"
#include "spos/enumeration.hpp"

namespace spos::io {

  using json = nlohmann::json;

  // Parses a file, reporting syntax errors as "path:line:column: message".
  json read_json(std::filesystem::path const& path);
  json parse_json(std::string const& text, std::string const& origin);

  // {"kind":"pomonoid","size":n,"mul":[[..]],"order":[[a,b],..]}
  //
  // `order` holds generating pairs a ≤ b; it is closed reflexively and
  // transitively. The identity need not be element 0: it is found in the
  // table (or read from an optional "identity" field) and swapped to 0.
  Pomonoid pomonoid_from_json(json const& j);

  // {"kind":"sposet","side":"right"|"left","monoid":<object or path>,
  //  "size":m,"act":[[..]],"order":[[a,b],..]}
  //
  // A monoid path is resolved against `base`. Action columns follow the
  // monoid's labelling in its own file and are permuted with it.
  SPoset sposet_from_json(json const& j, std::filesystem::path const& base = {});

  // {"classes":[[..],..],"class_order":[[i,j],..]} over a base of size m.
  OrderedCongruence congruence_from_json(json const& j, std::size_t m);

  json to_json(Pomonoid const& S);
  json to_json(SPoset const& A);
  json to_json(OrderedCongruence const& c);

  // Top-level keys one per line, values compact.
  std::string format(json const& j);

  using Structure = std::variant<Pomonoid, SPoset>;

  Structure load(std::filesystem::path const& path);
  Pomonoid  load_pomonoid(std::filesystem::path const& path);
  SPoset    load_sposet(std::filesystem::path const& path);

  void write_text(std::filesystem::path const& path, std::string const& text);

  // Property flags recorded in catalog indexes.
  std::map<std::string, bool> pomonoid_flags(Pomonoid const& S);
  std::map<std::string, bool> sposet_flags(SPoset const& A);

  // Writes <stem>-NNNN.json per structure and <stem>-index.json listing
  // files, keys, the count and property flags. Flags are computed here when
  // an entry carries none (left S-posets get none).
  void save_catalog(std::filesystem::path const& dir,
                    Catalog<Pomonoid>            catalog,
                    std::string const&           stem);
  void save_catalog(std::filesystem::path const& dir,
                    Catalog<SPoset>              catalog,
                    std::string const&           stem);

}  // namespace spos::io

#endif  // SPOS_IO_HPP_
