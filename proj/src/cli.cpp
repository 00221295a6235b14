#include "spos/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "spos/congruence.hpp"
#include "spos/constructions.hpp"
#include "spos/enumeration.hpp"
#include "spos/io.hpp"
#include "spos/properties.hpp"
#include "spos/tensor.hpp"
#include "spos/verify.hpp"

namespace spos::cli {

  namespace {

    struct RunConfig {
      std::vector<std::string> inputs;
      std::string              construction;
      std::string              property;
      std::vector<std::string> theorems;
      std::size_t              max_order = 3;
      std::size_t              max_poset = 3;
      std::size_t              power_cap = 2;
      std::uint64_t            seed      = 0;
      std::size_t              workers   = 1;
      std::string              out;
    };

    std::optional<elem> parse_elem(std::string const& s) {
      elem v{};
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size()) {
        return std::nullopt;
      }
      return v;
    }

    std::vector<elem> parse_elems(std::vector<std::string> const& args,
                                  std::size_t                     from,
                                  std::size_t                     bound,
                                  char const*                     what) {
      std::vector<elem> out;
      for (std::size_t i = from; i < args.size(); ++i) {
        auto v = parse_elem(args[i]);
        if (!v || *v >= bound) {
          throw InputError(std::string(what) + ": '" + args[i]
                           + "' is not an element index below "
                           + std::to_string(bound));
        }
        out.push_back(*v);
      }
      return out;
    }

    void need_inputs(RunConfig const& c, std::size_t n, char const* usage) {
      if (c.inputs.size() < n) {
        throw InputError(std::string("usage: ") + usage);
      }
    }

    // Writes a structure to --out, or to stdout when no path is given.
    void emit(RunConfig const& c, std::ostream& out, std::string const& text) {
      if (c.out.empty()) {
        out << text;
      } else {
        io::write_text(c.out, text);
        out << "wrote " << c.out << '\n';
      }
    }

    std::string pair_text(ElemPair p) {
      return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    }

    char const* kind_name(TossKind k) {
      switch (k) {
        case TossKind::order_left: return "order_left";
        case TossKind::order_right: return "order_right";
        case TossKind::balance_out: return "balance_out";
        case TossKind::balance_in: return "balance_in";
      }
      return "?";
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int validate(RunConfig const& c, std::ostream& out) {
      need_inputs(c, 1, "validate <file>...");
      int code = ok;
      for (auto const& path : c.inputs) {
        try {
          auto s = io::load(path);
          if (auto* S = std::get_if<Pomonoid>(&s)) {
            out << "valid file=" << path << " kind=pomonoid size=" << S->size()
                << '\n';
          } else {
            auto const& A = std::get<SPoset>(s);
            out << "valid file=" << path << " kind=sposet side="
                << (A.side() == Side::right ? "right" : "left")
                << " size=" << A.size() << " monoid_size=" << A.monoid().size()
                << '\n';
          }
        } catch (ValidationError const& e) {
          out << "invalid file=" << path
              << " axiom=" << e.violation().describe() << '\n';
          code = fails;
        }
      }
      return code;
    }

    int check(RunConfig const& c, std::ostream& out) {
      need_inputs(c, 1, "check <file> --property <name>");
      if (c.property.empty()) {
        throw InputError("check: --property is required");
      }
      auto            s = io::load(c.inputs[0]);
      PropertyVerdict v = std::holds_alternative<Pomonoid>(s)
                              ? check_property(std::get<Pomonoid>(s), c.property)
                              : check_property(std::get<SPoset>(s), c.property);
      out << "check file=" << c.inputs[0] << ' ' << v.to_line() << '\n';
      return v.holds ? ok : fails;
    }

    int tensor_cmd(RunConfig const& c, std::ostream& out) {
      char const* usage = "tensor <right-sposet> <left-sposet> [a b a2 b2]";
      need_inputs(c, 2, usage);
      SPoset A = io::load_sposet(c.inputs[0]);
      SPoset B = io::load_sposet(c.inputs[1]);
      auto   T = tensor(A, B);
      out << "tensor right_size=" << A.size() << " left_size=" << B.size()
          << " classes=" << T.class_count() << '\n';
      auto classes = T.classes();
      for (std::size_t k = 0; k < classes.size(); ++k) {
        out << "class " << k << " =";
        for (auto p : classes[k]) {
          out << ' ' << pair_text(p);
        }
        out << '\n';
      }
      for (auto [i, j] : T.class_leq().strict_pairs()) {
        out << "order " << i << " <= " << j << '\n';
      }
      if (c.inputs.size() == 2) {
        return ok;
      }
      if (c.inputs.size() != 6) {
        throw InputError(std::string("usage: ") + usage);
      }
      auto     as = parse_elems({c.inputs[2], c.inputs[4]}, 0, A.size(), "tensor");
      auto     bs = parse_elems({c.inputs[3], c.inputs[5]}, 0, B.size(), "tensor");
      ElemPair from{as[0], bs[0]}, to{as[1], bs[1]};
      auto cert = tensor_leq_certificate(T, from.first, from.second, to.first,
                                         to.second);
      out << "query from=" << pair_text(from) << " to=" << pair_text(to)
          << " holds=" << (cert ? "true" : "false") << '\n';
      if (!cert) {
        return fails;
      }
      for (auto const& st : cert->steps) {
        out << "step " << kind_name(st.kind) << ' ' << pair_text(st.from)
            << " -> " << pair_text(st.to) << " scalar=" << st.scalar << '\n';
      }
      for (auto const& r : to_scheme(*cert).rows) {
        out << "scheme " << r.a << ' ' << r.s << ' ' << r.t << ' ' << r.b
            << '\n';
      }
      return ok;
    }

    int quotient_cmd(RunConfig const& c, std::ostream& out) {
      char const* usage = "quotient <sposet> (<congruence-file> | a b [a b ...])";
      need_inputs(c, 2, usage);
      SPoset A = io::load_sposet(c.inputs[0]);
      std::optional<OrderedCongruence> rho;
      if (c.inputs.size() == 2 && !parse_elem(c.inputs[1])) {
        rho = io::congruence_from_json(io::read_json(c.inputs[1]), A.size());
        if (auto v = validate_congruence(A, *rho)) {
          out << "invalid congruence axiom=" << v->describe() << '\n';
          return fails;
        }
      } else {
        auto xs = parse_elems(c.inputs, 1, A.size(), "quotient");
        if (xs.size() % 2 != 0) {
          throw InputError(std::string("usage: ") + usage);
        }
        PairSet H;
        for (std::size_t i = 0; i < xs.size(); i += 2) {
          H.push_back({xs[i], xs[i + 1]});
        }
        rho = induced_congruence(A, H);
      }
      out << "congruence " << io::to_json(*rho).dump() << '\n';
      emit(c, out, io::format(io::to_json(quotient(A, *rho))));
      return ok;
    }

    int construct(RunConfig const& c, std::ostream& out) {
      char const* usage
          = "construct amalgam <pomonoid> <ideal elements...> | product "
            "<sposet>... | diag <pomonoid> | power <pomonoid> <k>";
      std::string const& kind = c.construction;
      SPoset             X    = [&] {
        if (kind == "amalgam") {
          need_inputs(c, 1, usage);
          Pomonoid S = io::load_pomonoid(c.inputs[0]);
          return amalgam(S, parse_elems(c.inputs, 1, S.size(), "amalgam")).poset;
        }
        if (kind == "product") {
          need_inputs(c, 1, usage);
          std::vector<SPoset> factors;
          for (auto const& p : c.inputs) {
            factors.push_back(io::load_sposet(p));
          }
          return product(factors);
        }
        if (kind == "diag") {
          need_inputs(c, 1, usage);
          return diagonal(io::load_pomonoid(c.inputs[0]));
        }
        if (kind == "power") {
          need_inputs(c, 2, usage);
          auto k = parse_elem(c.inputs[1]);
          if (!k || *k == 0 || c.inputs.size() != 2) {
            throw InputError(std::string("usage: ") + usage);
          }
          return power(io::load_pomonoid(c.inputs[0]), *k);
        }
        throw InputError(std::string("usage: ") + usage);
      }();
      emit(c, out, io::format(io::to_json(X)));
      return ok;
    }

    int enumerate(RunConfig const& c, std::ostream& out) {
      if (c.inputs.empty()) {
        auto monoids   = enumerate_monoids(c.max_order, c.workers);
        auto pomonoids = enumerate_pomonoids(c.max_order, c.workers);
        out << "enumerate order=" << c.max_order
            << " monoids=" << monoids.size()
            << " pomonoids=" << pomonoids.size() << '\n';
        if (!c.out.empty()) {
          io::save_catalog(c.out, std::move(pomonoids), "pomonoid");
          out << "wrote " << c.out << '\n';
        }
        return ok;
      }
      Pomonoid S       = io::load_pomonoid(c.inputs[0]);
      auto     catalog = enumerate_sposets(S, c.max_order, c.workers);
      out << "enumerate sposets size=" << c.max_order << " side=right count="
          << catalog.size() << '\n';
      if (!c.out.empty()) {
        io::save_catalog(c.out, std::move(catalog), "sposet");
        out << "wrote " << c.out << '\n';
      }
      return ok;
    }

    int verify_cmd(RunConfig const& c, std::ostream& out, std::ostream& err) {
      std::vector<std::string> tags = c.theorems;
      if (tags.empty()) {
        throw InputError("verify: --theorem is required (a tag or 'all')");
      }
      if (std::find(tags.begin(), tags.end(), "all") != tags.end()) {
        tags = verify::tags();
      }
      verify::Scope scope;
      scope.max_order = c.max_order;
      scope.max_poset = c.max_poset;
      scope.power_cap = c.power_cap;
      scope.seed      = c.seed;
      scope.workers   = c.workers;

      auto        start   = std::chrono::steady_clock::now();
      auto        reports = verify::run_all(tags, scope);
      double      wall    = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      std::string text;
      bool        passed = true;
      for (auto const& r : reports) {
        text += r.text();
        passed = passed && r.passed();
        err << "wall theorem=" << r.id << " seconds=" << std::fixed
            << std::setprecision(3) << r.wall_seconds << '\n';
      }
      err << "wall total seconds=" << std::fixed << std::setprecision(3)
          << wall << '\n';
      if (c.out.empty()) {
        out << text;
      } else {
        io::write_text(c.out, text);
        for (auto const& r : reports) {
          out << "summary theorem=" << r.id << " instances=" << r.instances
              << " violations=" << r.violations.size()
              << " findings=" << r.findings.size() << '\n';
        }
        out << "wrote " << c.out << '\n';
      }
      return passed ? ok : fails;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    RunConfig c;
    CLI::App  app{"Finite pomonoids, S-posets and their flatness properties",
                 "spos"};
    app.require_subcommand(1);

    auto* validate_app
        = app.add_subcommand("validate", "Check the axioms of structure files");
    validate_app->add_option("files", c.inputs)->required();

    auto* check_app = app.add_subcommand("check", "Evaluate a property");
    check_app->add_option("file", c.inputs)->required();
    check_app->add_option("--property", c.property, "Property name")->required();

    auto* tensor_app = app.add_subcommand(
        "tensor", "Tensor product of a right and a left S-poset");
    tensor_app->add_option("inputs", c.inputs, "right left [a b a2 b2]")
        ->required();

    auto* quotient_app
        = app.add_subcommand("quotient", "Quotient by a congruence");
    quotient_app
        ->add_option("inputs", c.inputs,
                     "sposet, then a congruence file or generating pairs")
        ->required();
    quotient_app->add_option("--out", c.out, "Output file");

    auto* construct_app
        = app.add_subcommand("construct", "Build a standard S-poset");
    construct_app->add_option("kind", c.construction, "amalgam|product|diag|power")
        ->required()
        ->check(CLI::IsMember({"amalgam", "product", "diag", "power"}));
    construct_app->add_option("inputs", c.inputs)->required();
    construct_app->add_option("--out", c.out, "Output file");

    auto* enumerate_app = app.add_subcommand(
        "enumerate",
        "Pomonoids of a given order, or right S-posets over a pomonoid file");
    enumerate_app->add_option("pomonoid", c.inputs);
    enumerate_app
        ->add_option("--max-order,--order", c.max_order,
                     "Pomonoid order (or S-poset size with a pomonoid file)")
        ->required()
        ->check(CLI::PositiveNumber);
    enumerate_app->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
    enumerate_app->add_option("--out", c.out, "Catalog directory");

    auto* verify_app = app.add_subcommand("verify", "Run theorem checks");
    verify_app->add_option("--theorem", c.theorems, "Tag, repeatable, or 'all'")
        ->required();
    verify_app->add_option("--max-order", c.max_order)->check(CLI::PositiveNumber);
    verify_app->add_option("--max-poset", c.max_poset)->check(CLI::PositiveNumber);
    verify_app->add_option("--power-cap", c.power_cap)->check(CLI::PositiveNumber);
    verify_app->add_option("--seed", c.seed);
    verify_app->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
    verify_app->add_option("--out,--report", c.out, "Report file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : error;
    }

    try {
      if (*validate_app) {
        return validate(c, out);
      }
      if (*check_app) {
        return check(c, out);
      }
      if (*tensor_app) {
        return tensor_cmd(c, out);
      }
      if (*quotient_app) {
        return quotient_cmd(c, out);
      }
      if (*construct_app) {
        return construct(c, out);
      }
      if (*enumerate_app) {
        return enumerate(c, out);
      }
      return verify_cmd(c, out, err);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return error;
    }
  }

}  // namespace spos::cli
