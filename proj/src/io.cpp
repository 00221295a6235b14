#include "spos/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "spos/properties.hpp"

namespace spos::io {

  namespace {
    std::string location(std::string const& text, std::size_t byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return std::to_string(line) + ":" + std::to_string(col);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object()) {
        throw InputError("expected a JSON object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw InputError(std::string("missing field '") + key + "'");
      }
      return *it;
    }

    std::size_t index(json const& v, std::size_t bound, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() < 0
          || static_cast<std::size_t>(v.get<long long>()) >= bound) {
        throw InputError(std::string(what) + ": index " + v.dump()
                         + " out of range [0, " + std::to_string(bound) + ")");
      }
      return v.get<std::size_t>();
    }

    std::size_t positive(json const& v, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() <= 0) {
        throw InputError(std::string(what) + " must be a positive integer");
      }
      return v.get<std::size_t>();
    }

    std::vector<elem> table(json const& v,
                            std::size_t rows,
                            std::size_t cols,
                            std::size_t bound,
                            char const* what) {
      if (!v.is_array() || v.size() != rows) {
        throw InputError(std::string(what) + ": expected "
                         + std::to_string(rows) + " rows");
      }
      std::vector<elem> out;
      out.reserve(rows * cols);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols) {
          throw InputError(std::string(what) + ": row " + std::to_string(i)
                           + " should have " + std::to_string(cols)
                           + " entries");
        }
        for (auto const& x : v[i]) {
          out.push_back(index(x, bound, what));
        }
      }
      return out;
    }

    // Generating pairs, closed; rejects antisymmetry violations.
    Relation order(json const& v, std::size_t m, char const* what) {
      if (!v.is_array()) {
        throw InputError(std::string(what) + ": expected a list of pairs");
      }
      Relation r(m);
      for (auto const& p : v) {
        if (!p.is_array() || p.size() != 2) {
          throw InputError(std::string(what) + ": expected pairs [a, b]");
        }
        r.set(index(p[0], m, what), index(p[1], m, what));
      }
      r.close();
      for (elem a = 0; a < m; ++a) {
        for (elem b = a + 1; b < m; ++b) {
          if (r(a, b) && r(b, a)) {
            throw ValidationError(Violation{"antisymmetry", {a, b}});
          }
        }
      }
      return r;
    }

    json pairs(Relation const& r) {
      json out = json::array();
      for (auto [a, b] : r.covering_pairs()) {
        out.push_back({a, b});
      }
      return out;
    }

    json rows(std::vector<elem> const& t, std::size_t cols) {
      json out = json::array();
      for (std::size_t i = 0; i < t.size(); i += cols) {
        out.push_back(std::vector<elem>(t.begin() + i, t.begin() + i + cols));
      }
      return out;
    }

    // The identity of a raw table, or nullopt.
    std::optional<elem> find_identity(std::size_t n, std::vector<elem> const& mul) {
      for (elem e = 0; e < n; ++e) {
        bool ok = true;
        for (elem x = 0; x < n && ok; ++x) {
          ok = mul[e * n + x] == x && mul[x * n + e] == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    struct RawMonoid {
      Pomonoid          S;
      std::vector<elem> relabel;  // file label ↦ internal label
    };

    RawMonoid read_monoid(json const& j) {
      if (j.contains("kind") && j["kind"] != "pomonoid") {
        throw InputError("expected kind \"pomonoid\"");
      }
      std::size_t const n   = positive(field(j, "size"), "size");
      auto              mul = table(field(j, "mul"), n, n, n, "mul");
      Relation          leq = j.contains("order") ? order(j["order"], n, "order")
                                                  : Relation::identity(n);
      std::optional<elem> e;
      if (j.contains("identity")) {
        e = index(j["identity"], n, "identity");
      } else {
        e = find_identity(n, mul);
      }
      std::vector<elem> p(n);
      for (elem x = 0; x < n; ++x) {
        p[x] = x;
      }
      if (e && *e != 0) {
        std::swap(p[0], p[*e]);
        std::vector<elem> swapped(n * n);
        for (elem a = 0; a < n; ++a) {
          for (elem b = 0; b < n; ++b) {
            swapped[p[a] * n + p[b]] = p[mul[a * n + b]];
          }
        }
        mul = std::move(swapped);
        leq = leq.relabel(p);
      }
      return {Pomonoid(n, std::move(mul), std::move(leq)), std::move(p)};
    }

    std::string read_text(std::filesystem::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InputError(path.string() + ": cannot open file");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    template <typename F>
    auto with_origin(std::string const& origin, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (ValidationError const& e) {
        throw;
      } catch (InputError const& e) {
        throw InputError(origin + ": " + e.what());
      } catch (json::exception const& e) {
        throw InputError(origin + ": " + e.what());
      }
    }
  }  // namespace

  json parse_json(std::string const& text, std::string const& origin) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      std::string msg = e.what();
      // Drop the library's own "[json.exception.parse_error.101] " prefix.
      if (auto k = msg.find("] "); k != std::string::npos) {
        msg = msg.substr(k + 2);
      }
      throw InputError(origin + ":" + location(text, e.byte ? e.byte - 1 : 0)
                       + ": " + msg);
    }
  }

  json read_json(std::filesystem::path const& path) {
    return parse_json(read_text(path), path.string());
  }

  Pomonoid pomonoid_from_json(json const& j) {
    return read_monoid(j).S;
  }

  SPoset sposet_from_json(json const& j, std::filesystem::path const& base) {
    if (field(j, "kind") != "sposet") {
      throw InputError("expected kind \"sposet\"");
    }
    auto const& side_field = field(j, "side");
    if (side_field != "right" && side_field != "left") {
      throw InputError("side must be \"right\" or \"left\"");
    }
    Side const  side = side_field == "right" ? Side::right : Side::left;
    auto const& mon  = field(j, "monoid");
    RawMonoid   raw  = [&] {
      if (mon.is_string()) {
        auto path = base / mon.get<std::string>();
        return with_origin(path.string(),
                           [&] { return read_monoid(read_json(path)); });
      }
      return read_monoid(mon);
    }();
    std::size_t const n   = raw.S.size();
    std::size_t const m   = positive(field(j, "size"), "size");
    auto              act = table(field(j, "act"), m, n, m, "act");
    std::vector<elem> permuted(m * n);
    for (elem a = 0; a < m; ++a) {
      for (elem s = 0; s < n; ++s) {
        permuted[a * n + raw.relabel[s]] = act[a * n + s];
      }
    }
    Relation leq = j.contains("order") ? order(j["order"], m, "order")
                                       : Relation::identity(m);
    return SPoset(raw.S, side, m, std::move(permuted), std::move(leq));
  }

  OrderedCongruence congruence_from_json(json const& j, std::size_t m) {
    auto const& cls = field(j, "classes");
    if (!cls.is_array()) {
      throw InputError("classes: expected a list of lists");
    }
    std::vector<std::vector<elem>> classes;
    for (auto const& c : cls) {
      if (!c.is_array()) {
        throw InputError("classes: expected a list of lists");
      }
      classes.emplace_back();
      for (auto const& x : c) {
        classes.back().push_back(index(x, m, "classes"));
      }
    }
    Relation q = j.contains("class_order")
                     ? order(j["class_order"], classes.size(), "class_order")
                     : Relation::identity(classes.size());
    return OrderedCongruence::from_classes(m, classes, q);
  }

  json to_json(Pomonoid const& S) {
    return json{{"kind", "pomonoid"},
                {"size", S.size()},
                {"mul", rows(S.table(), S.size())},
                {"order", pairs(S.order())}};
  }

  json to_json(SPoset const& A) {
    return json{{"kind", "sposet"},
                {"side", A.side() == Side::right ? "right" : "left"},
                {"monoid", to_json(A.monoid())},
                {"size", A.size()},
                {"act", rows(A.table(), A.monoid().size())},
                {"order", pairs(A.order())}};
  }

  json to_json(OrderedCongruence const& c) {
    return json{{"classes", c.classes()}, {"class_order", pairs(c.class_leq())}};
  }

  std::string format(json const& j) {
    if (!j.is_object()) {
      return j.dump() + "\n";
    }
    // Keys in a fixed, readable order; anything else afterwards.
    static std::vector<std::string> const preferred{
        "kind", "side", "monoid", "size", "mul", "act", "order",
        "classes", "class_order"};
    std::vector<std::string> keys;
    for (auto const& k : preferred) {
      if (j.contains(k)) {
        keys.push_back(k);
      }
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
        keys.push_back(it.key());
      }
    }
    std::string out = "{\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out += "  " + json(keys[i]).dump() + ": " + j[keys[i]].dump();
      out += i + 1 < keys.size() ? ",\n" : "\n";
    }
    return out + "}\n";
  }

  Structure load(std::filesystem::path const& path) {
    json j = read_json(path);
    return with_origin(path.string(), [&]() -> Structure {
      auto const& kind = field(j, "kind");
      if (kind == "pomonoid") {
        return pomonoid_from_json(j);
      }
      if (kind == "sposet") {
        return sposet_from_json(j, path.parent_path());
      }
      throw InputError("unknown kind " + kind.dump());
    });
  }

  Pomonoid load_pomonoid(std::filesystem::path const& path) {
    auto s = load(path);
    if (auto* S = std::get_if<Pomonoid>(&s)) {
      return *S;
    }
    throw InputError(path.string() + ": expected a pomonoid");
  }

  SPoset load_sposet(std::filesystem::path const& path) {
    auto s = load(path);
    if (auto* A = std::get_if<SPoset>(&s)) {
      return *A;
    }
    throw InputError(path.string() + ": expected an S-poset");
  }

  void write_text(std::filesystem::path const& path, std::string const& text) {
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError(path.string() + ": cannot write file");
    }
    out << text;
  }

  std::map<std::string, bool> pomonoid_flags(Pomonoid const& S) {
    std::map<std::string, bool> out;
    for (auto const& name : pomonoid_property_names()) {
      out[name] = check_property(S, name).holds;
    }
    return out;
  }

  std::map<std::string, bool> sposet_flags(SPoset const& A) {
    std::map<std::string, bool> out;
    if (A.side() != Side::right) {
      return out;
    }
    for (auto const& name :
         {"condition-e", "condition-p", "strongly-flat", "pw-po-flat",
          "w-po-flat", "almost-w-po-flat", "po-torsion-free", "i-regular",
          "generator"}) {
      out[name] = check_property(A, name).holds;
    }
    return out;
  }

  namespace {
    template <typename T, typename Flags>
    void save(std::filesystem::path const& dir,
              Catalog<T>&                  catalog,
              std::string const&           stem,
              char const*                  kind,
              Flags&&                      flags) {
      std::filesystem::create_directories(dir);
      json entries = json::array();
      for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
        auto& e = catalog.entries[i];
        if (e.flags.empty()) {
          e.flags = flags(e.structure);
        }
        std::ostringstream name;
        name << stem << '-' << std::setw(4) << std::setfill('0') << i
             << ".json";
        write_text(dir / name.str(), format(to_json(e.structure)));
        entries.push_back(
            {{"file", name.str()}, {"key", e.key.hex()}, {"flags", e.flags}});
      }
      std::string text = "{\n  \"kind\": \"catalog\",\n  \"structure\": "
                         + json(kind).dump() + ",\n  \"count\": "
                         + std::to_string(catalog.size())
                         + ",\n  \"entries\": [\n";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        text += "    " + entries[i].dump()
                + (i + 1 < entries.size() ? ",\n" : "\n");
      }
      text += "  ]\n}\n";
      write_text(dir / (stem + "-index.json"), text);
    }
  }  // namespace

  void save_catalog(std::filesystem::path const& dir,
                    Catalog<Pomonoid>            catalog,
                    std::string const&           stem) {
    save(dir, catalog, stem, "pomonoid", pomonoid_flags);
  }

  void save_catalog(std::filesystem::path const& dir,
                    Catalog<SPoset>              catalog,
                    std::string const&           stem) {
    save(dir, catalog, stem, "sposet", sposet_flags);
  }

}  // namespace spos::io
