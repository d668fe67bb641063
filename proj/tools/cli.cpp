#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ordmon/checker.hpp"
#include "ordmon/error.hpp"
#include "ordmon/orderiso.hpp"
#include "ordmon/topology.hpp"

namespace ordmon::cli {

  namespace {

    struct Options {
      std::string              alpha = "w + 1";
      std::vector<std::string> elements;
      std::string              nbhd;
      std::size_t              count     = 5;
      std::uint64_t            bound     = 50;
      std::uint64_t            j_max     = 64;
      std::uint64_t            k_max     = 6;
      std::uint64_t            param_max = 4;
      unsigned                 threads   = 0;
      std::string              out_path;
      std::string              json_path;
    };

    // A ParseError together with the argument it came from.
    struct ArgumentError {
      std::string text;
      ParseError  error;
    };

    // Echo the offending text with a caret under the error position.
    void report_parse_error(std::ostream&      err,
                            std::string const& text,
                            ParseError const&  e) {
      err << "error: " << e.what() << '\n'
          << "  " << text << '\n'
          << "  " << std::string(std::min(e.position(), text.size()), ' ')
          << "^\n";
    }

    template <typename F>
    auto parse_arg(std::string const& text, F&& parse) {
      try {
        return parse(text);
      } catch (ParseError const& e) {
        throw ArgumentError{text, e};
      }
    }

    std::vector<BicyclicElement> parse_elements(Options const&         o,
                                                MonoidParameter const& ctx) {
      std::vector<BicyclicElement> xs;
      for (auto const& s : o.elements) {
        xs.push_back(parse_arg(
            s, [&](std::string const& t) { return parse_element(t, ctx); }));
      }
      return xs;
    }

    int cmd_eval(Options const& o, MonoidParameter const& ctx, std::ostream& out) {
      BicyclicElement acc = BicyclicElement::identity(ctx);
      for (auto const& x : parse_elements(o, ctx)) {
        acc = acc * x;
      }
      out << acc << '\n';
      return ok;
    }

    int cmd_classify(Options const& o, MonoidParameter const& ctx, std::ostream& out) {
      for (auto const& x : parse_elements(o, ctx)) {
        out << to_string(classify_forced_isolated(x)) << '\n';
      }
      return ok;
    }

    int cmd_nbhd(Options const& o, std::ostream& out) {
      auto const U = parse_arg(o.nbhd, [](std::string const& t) {
        return parse_neighborhood(t);
      });
      for (auto const& x : nbhd_enumerate(U, o.count)) {
        out << x << '\n';
      }
      return ok;
    }

    int cmd_oracle(Options const& o, MonoidParameter const& ctx, std::ostream& out) {
      auto const xs = parse_elements(o, ctx);
      BicyclicElement acc = BicyclicElement::identity(ctx);
      UpperSetIso     iso = UpperSetIso::identity(ctx);
      for (auto const& x : xs) {
        acc = acc * x;
        iso = compose(iso, represent(x));
      }
      BicyclicElement const via_iso = unrepresent(iso);
      out << "multiply " << acc << '\n' << "orderiso " << via_iso << '\n';
      if (acc != via_iso) {
        out << "mismatch\n";
        return refuted;
      }
      out << "agree\n";
      return ok;
    }

    std::string summary(SweepResult const& r) {
      struct Tally {
        std::size_t total = 0, verified = 0, dominated = 0;
      };
      std::map<std::string_view, Tally> by_tag;
      for (auto const& e : r.entries) {
        Tally& t = by_tag[to_string(e.tag)];
        ++t.total;
        t.verified += e.verification.verified();
        t.dominated += e.recipe_dominates();
      }
      std::ostringstream os;
      for (auto const& [tag, t] : by_tag) {
        os << "case " << tag << ": " << t.verified << '/' << t.total
           << " verified_up_to_bound, recipe dominated " << t.dominated << '/'
           << t.total << '\n';
      }
      std::size_t const inv_ok = std::count_if(
          r.inversion.begin(), r.inversion.end(),
          [](ContinuityReport const& c) { return c.verified(); });
      os << "inversion: " << inv_ok << '/' << r.inversion.size()
         << " verified_up_to_bound\n";
      os << (r.all_verified() ? "all verified" : "REFUTED") << '\n';
      return os.str();
    }

    bool write_file(std::string const& path,
                    std::string const& body,
                    std::ostream&      err) {
      std::ofstream f(path, std::ios::binary);
      f << body;
      if (!f) {
        err << "error: cannot write " << path << '\n';
        return false;
      }
      return true;
    }

    int cmd_verify(Options const& o, MonoidParameter const& ctx,
                   std::ostream& out, std::ostream& err) {
      if (!(ctx == MonoidParameter::omega_plus_one())) {
        throw ContextMismatch("verify runs on B_(w + 1) only");
      }
      SweepConfig cfg;
      cfg.k_max     = o.k_max;
      cfg.param_max = o.param_max;
      cfg.bound     = o.bound;
      cfg.j_max     = o.j_max;
      cfg.threads   = o.threads != 0 ? o.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
      SweepResult const r = run_sweep(cfg);
      if (!o.out_path.empty()) {
        if (!write_file(o.out_path, sweep_report_text(r), err)) {
          return usage;
        }
      }
      if (!o.json_path.empty()) {
        if (!write_file(o.json_path, sweep_report_json(r, cfg) + "\n", err)) {
          return usage;
        }
      }
      out << summary(r);
      return r.all_verified() ? ok : refuted;
    }

  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in the alpha-bicyclic monoid", "ordmon"};
    app.require_subcommand(1);
    // lets --alpha follow the verb too
    app.fallthrough();
    Options o;
    app.add_option("--alpha", o.alpha, "monoid parameter alpha >= 1")
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "product of a sequence of elements");
    eval->add_option("elements", o.elements, "elements like \"(w^2, 3)\"")
        ->required();
    auto* classify = app.add_subcommand("classify", "forced-isolation verdict");
    classify->add_option("elements", o.elements)->required();
    auto* nbhd = app.add_subcommand("nbhd", "list a prefix of U[k]((n*w^w, m*w^w))");
    nbhd->add_option("neighborhood", o.nbhd, "e.g. \"U[0]((w^w, w^w*2))\"")
        ->required();
    nbhd->add_option("--count", o.count, "center plus count-1 members")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    auto* oracle = app.add_subcommand("oracle", "multiply versus order-isomorphism composition");
    oracle->add_option("elements", o.elements)->required();
    auto* verify = app.add_subcommand("verify", "full continuity sweep on B_(w + 1)");
    verify->add_option("--bound", o.bound, "enumeration window")->capture_default_str();
    verify->add_option("--jmax", o.j_max, "refutation search limit")->capture_default_str();
    verify->add_option("--k-max", o.k_max)->capture_default_str();
    verify->add_option("--param-max", o.param_max)->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--threads", o.threads, "0 = hardware concurrency")
        ->capture_default_str();
    verify->add_option("--out", o.out_path, "text report path");
    verify->add_option("--json", o.json_path, "JSON report path");

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    try {
      Ordinal const alpha = parse_arg(o.alpha, [](std::string const& t) {
        return parse_ordinal(t);
      });
      MonoidParameter const ctx(alpha);
      if (eval->parsed()) {
        return cmd_eval(o, ctx, out);
      }
      if (classify->parsed()) {
        return cmd_classify(o, ctx, out);
      }
      if (nbhd->parsed()) {
        return cmd_nbhd(o, out);
      }
      if (oracle->parsed()) {
        return cmd_oracle(o, ctx, out);
      }
      return cmd_verify(o, ctx, out, err);
    } catch (ArgumentError const& a) {
      report_parse_error(err, a.text, a.error);
      return usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace ordmon::cli
