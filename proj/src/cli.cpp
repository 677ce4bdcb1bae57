// fplab - factorpower semigroups and their simple modules

#include "fplab/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fplab/dualsym.hpp"
#include "fplab/errors.hpp"
#include "fplab/factorpower.hpp"
#include "fplab/limits.hpp"
#include "fplab/permgroup.hpp"
#include "fplab/repcore.hpp"
#include "fplab/symfunc.hpp"
#include "fplab/verify.hpp"

namespace fplab::cli {
  namespace {

    using Json = nlohmann::ordered_json;

    //! A table plus summary lines. TSV prints the header, the rows and then
    //! the summary lines verbatim; JSON nests the rows as objects next to
    //! the summary fields.
    struct Report {
      Report() = default;
      Report(std::string name, std::vector<std::string> cols = {})
          : command(std::move(name)), columns(std::move(cols)) {}

      std::string                    command;
      std::vector<std::string>       columns;
      std::vector<std::vector<Json>> rows;
      Json                           summary = Json::object();
      std::vector<std::string>       lines;
      int                            status = kOk;
    };

    Json big(BigInt const& x) {
      if (x >= std::numeric_limits<std::int64_t>::min()
          && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
      }
      return x.str();
    }

    std::string cell(Json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    std::string scientific(double x) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", x);
      return buf;
    }

    std::string join(std::vector<std::size_t> const& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(xs[i]);
      }
      return s;
    }

    void emit(Report const& r, std::string const& format, std::ostream& out) {
      if (format == "json") {
        Json j;
        j["schema"]  = 1;
        j["command"] = r.command;
        for (auto const& [key, value] : r.summary.items()) {
          j[key] = value;
        }
        auto rows = Json::array();
        for (auto const& row : r.rows) {
          Json obj = Json::object();
          for (std::size_t c = 0; c < r.columns.size(); ++c) {
            obj[r.columns[c]] = row[c];
          }
          rows.push_back(std::move(obj));
        }
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
        return;
      }
      for (std::size_t c = 0; c < r.columns.size(); ++c) {
        out << (c ? "\t" : "") << r.columns[c];
      }
      out << '\n';
      for (auto const& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "\t" : "") << cell(row[c]);
        }
        out << '\n';
      }
      for (auto const& line : r.lines) {
        out << line << '\n';
      }
    }

    struct Options {
      std::string              format = "tsv";
      int                      threads = 0;
      std::uint64_t            seed    = 0;
      std::vector<std::string> budgets;
      std::string              group = "S3";
      Limits                   limits;
    };

    SetPartition parse_rho(std::string const& text) {
      if (!text.empty() && text.front() == '{') {
        return SetPartition::parse(text);
      }
      return SetPartition::from_shape(IntegerPartition::parse(text));
    }

    //! --shape or --partition picks a D-class; neither means all of them.
    std::optional<std::size_t> pick_dclass(FactorPower const& fp,
                                           std::string const& shape,
                                           std::string const& partition) {
      if (!shape.empty() && !partition.empty()) {
        throw ValidationError("give either --shape or --partition, not both");
      }
      if (!shape.empty()) {
        return fp.dclass_of_shape(IntegerPartition::parse(shape));
      }
      if (!partition.empty()) {
        return fp.dclass_of_partition(SetPartition::parse(partition));
      }
      return std::nullopt;
    }

    SimpleModuleDescriptor const& simple_by_id(FactorPower const& fp, std::size_t id) {
      if (id >= fp.simples().size()) {
        throw ValidationError("no simple module with id " + std::to_string(id) + " (there are "
                              + std::to_string(fp.simples().size()) + ")");
      }
      return fp.simples()[id];
    }

    // ------------------------------------------------------------ commands

    Report cmd_enumerate(Options const& o, bool dump) {
      auto   G = parse_group(o.group, o.limits);
      auto   E = enumerate(G, o.limits);
      Report r{"enumerate"};
      r.summary["group"]       = o.group;
      r.summary["group_order"] = G.order();
      r.summary["count"]       = E.size();
      if (dump) {
        r.columns = {"index", "relation"};
        for (std::size_t i = 0; i < E.size(); ++i) {
          r.rows.push_back({i + 1, E[i].to_rows()});
        }
        r.lines.push_back("count " + std::to_string(E.size()));
      } else {
        r.columns = {"group", "group_order", "count"};
        r.rows.push_back({o.group, G.order(), E.size()});
      }
      return r;
    }

    Report cmd_idempotents(Options const& o) {
      auto   G = parse_group(o.group, o.limits);
      Report r{"idempotents", {"partition", "H_order", "shape"}};
      for (auto const& e : idempotents(G)) {
        r.rows.push_back(
            {e.partition.to_string(), e.subgroup.order(), e.partition.shape().to_string()});
      }
      r.summary["group"] = o.group;
      r.summary["count"] = r.rows.size();
      return r;
    }

    Report cmd_dclasses(Options const& o) {
      FactorPower fp(parse_group(o.group, o.limits), o.limits, o.seed);
      Report      r{"dclasses", {"shape", "partition", "k", "N_H_order", "simple_dims"}};
      for (std::size_t D = 0; D < fp.dclasses().size(); ++D) {
        auto const&              d = fp.dclasses()[D];
        std::vector<std::size_t> dims;
        for (auto const& s : fp.simples_of(D)) {
          dims.push_back(s.dim);
        }
        r.rows.push_back({d.shape.to_string(), d.idempotents.front().partition.to_string(),
                          d.k(), d.maximal_subgroup.order(), join(dims)});
      }
      r.summary["group"] = o.group;
      return r;
    }

    Report cmd_simples(Options const& o) {
      FactorPower fp(parse_group(o.group, o.limits), o.limits, o.seed);
      Report      r{"simples", {"id", "shape", "partition", "label", "dim_X", "dim"}};
      std::size_t squares = 0;
      for (auto const& s : fp.simples()) {
        auto const& d = fp.dclasses()[s.dclass];
        r.rows.push_back({s.id, d.shape.to_string(), d.idempotents.front().partition.to_string(),
                          s.label.to_string(), s.label.dim, s.dim});
        squares += s.dim * s.dim;
      }
      r.summary["group"]           = o.group;
      r.summary["sum_dim_squared"] = squares;
      r.lines.push_back("sum of squared dimensions " + std::to_string(squares));
      return r;
    }

    Report cmd_multiplicity(Options const& o, std::string const& lambda, std::string const& rho,
                            std::string const& label) {
      auto const p    = parse_rho(rho);
      auto const shape = p.shape();
      auto const l    = MultiPartition::parse(label, shape.multiplicities());
      auto const lam  = IntegerPartition::parse(lambda);
      Report     r{"multiplicity", {"lambda", "rho", "l", "multiplicity"}};
      r.rows.push_back({lam.to_string(), p.to_string(), l.to_string(),
                        big(induced_multiplicity(lam, p, l, o.limits))});
      return r;
    }

    Report cmd_mult_table(Options const& o, std::string const& rho) {
      auto const p = parse_rho(rho);
      auto const t = induced_table(p.shape(), o.limits);
      Report     r{"mult-table", {"lambda"}};
      for (auto const& l : t.labels) {
        r.columns.push_back(l.to_string());
      }
      for (std::size_t a = 0; a < t.lambdas.size(); ++a) {
        std::vector<Json> row{t.lambdas[a].to_string()};
        for (auto const& m : t.mult[a]) {
          row.push_back(big(m));
        }
        r.rows.push_back(std::move(row));
      }
      r.summary["rho"]   = p.to_string();
      r.summary["shape"] = p.shape().to_string();
      return r;
    }

    Report cmd_foulkes(Options const& o, std::size_t k, std::size_t m) {
      auto   rep = foulkes_check(k, m, o.limits);
      Report r{"foulkes", {"lambda", "mult_km", "mult_mk", "ok"}};
      for (auto const& row : rep.rows) {
        r.rows.push_back({row.lambda.to_string(), big(row.mult_km), big(row.mult_mk),
                          row.ok ? "yes" : "no"});
      }
      r.summary["k"]       = k;
      r.summary["m"]       = m;
      r.summary["verdict"] = rep.ok ? "OK" : "FAIL";
      r.lines.push_back(std::string("verdict ") + (rep.ok ? "OK" : "FAIL"));
      r.status = rep.ok ? kOk : kFailure;
      return r;
    }

    Report cmd_fstar(Options const& o, std::size_t n) {
      auto   s = fstar_structure(n, 5, o.limits);
      Report r{"fstar", {"shape", "n_lambda", "G_order", "contribution"}};
      if (s.brute_forced) {
        r.columns.push_back("brute_idempotents");
        r.columns.push_back("brute_G_order");
      }
      std::string terms;
      for (std::size_t i = 0; i < s.classes.size(); ++i) {
        auto const&       c = s.classes[i];
        BigInt const      contribution = c.count_idempotents * c.count_idempotents * c.group_order;
        std::vector<Json> row{c.shape.to_string(), big(c.count_idempotents), big(c.group_order),
                              big(contribution)};
        if (s.brute_forced) {
          row.push_back(s.brute_idempotents[i]);
          row.push_back(s.brute_group_orders[i]);
        }
        r.rows.push_back(std::move(row));
        terms += (i ? "+" : "") + contribution.str();
      }
      auto const  dim   = s.semisimple_dimension.str();
      std::string name  = "|F*_" + std::to_string(n) + "|";
      std::string identity;
      bool        ok = s.ok;
      if (n <= o.limits.fstar_degree) {
        auto count = fstar_count(n, o.limits);
        ok         = ok && count == s.semisimple_dimension;
        identity   = terms + " = " + dim + (ok ? " = " : " != " + count.str() + " = ") + name;
        r.summary["count"] = big(count);
      } else {
        identity = terms + " = " + dim + " (" + name + " not counted: over the fstar budget)";
      }
      r.summary["n"]                    = n;
      r.summary["semisimple_dimension"] = big(s.semisimple_dimension);
      r.summary["identity"]             = identity;
      r.summary["ok"]                   = ok;
      r.lines.push_back(identity);
      r.status = ok ? kOk : kFailure;
      return r;
    }

    Report cmd_correspond(Options const& o, std::size_t n) {
      auto   rep = correspondence_check(n, o.limits);
      Report r{"correspond",
               {"shape", "fp_idempotents", "fstar_idempotents", "fp_group_order",
                "fstar_group_order", "isomorphic", "simple_dims", "ok"}};
      for (auto const& row : rep.rows) {
        r.rows.push_back({row.shape.to_string(), row.fp_idempotents, row.fstar_idempotents,
                          row.fp_group_order, row.fstar_group_order,
                          row.isomorphic ? "yes" : "no", join(row.simple_dims),
                          row.ok ? "yes" : "no"});
      }
      r.summary["n"]       = n;
      r.summary["verdict"] = rep.ok ? "OK" : "FAIL";
      r.lines.push_back(std::string("verdict ") + (rep.ok ? "OK" : "FAIL"));
      r.status = rep.ok ? kOk : kFailure;
      return r;
    }

    Report cmd_unitarize(Options const& o, std::string const& shape, std::string const& partition,
                         std::string const& label) {
      FactorPower fp(parse_group(o.group, o.limits), o.limits, o.seed);
      auto const  D = pick_dclass(fp, shape, partition);
      std::vector<SimpleModuleDescriptor> chosen;
      if (D && !label.empty()) {
        chosen.push_back(fp.find_simple(*D, label));
      } else if (D) {
        chosen = fp.simples_of(*D);
      } else if (!label.empty()) {
        throw ValidationError("--label needs --shape or --partition");
      } else {
        chosen = fp.simples();
      }
      Report r{"unitarize", {"id", "shape", "label", "dim", "min_eigenvalue", "residual"}};
      double worst = 0;
      for (auto const& s : chosen) {
        auto form = unitarize(fp, s, build_simple<Complex>(fp, s));
        worst     = std::max(worst, form.residual);
        r.rows.push_back({s.id, fp.dclasses()[s.dclass].shape.to_string(), s.label.to_string(),
                          s.dim, scientific(form.min_eigenvalue), scientific(form.residual)});
      }
      r.summary["group"]        = o.group;
      r.summary["max_residual"] = scientific(worst);
      r.lines.push_back("max residual " + scientific(worst));
      return r;
    }

    template <typename T>
    Report tensor_report(FactorPower const& fp, std::size_t left, std::size_t right) {
      auto const& a = simple_by_id(fp, left);
      auto const& b = simple_by_id(fp, right);
      auto        V = tensor(build_simple<T>(fp, a), build_simple<T>(fp, b));
      Report      r{"tensor", {"id", "shape", "label", "dim", "multiplicity"}};
      std::size_t total = 0;
      for (auto const& [s, m] : decompose(fp, V)) {
        r.rows.push_back(
            {s.id, fp.dclasses()[s.dclass].shape.to_string(), s.label.to_string(), s.dim, m});
        total += m * s.dim;
      }
      r.summary["left"]  = left;
      r.summary["right"] = right;
      r.summary["mode"]  = ScalarTraits<T>::exact ? "exact" : "float";
      r.summary["accounted_dim"] = total;
      r.lines.push_back("accounting " + std::to_string(total) + " = " + std::to_string(a.dim)
                        + " x " + std::to_string(b.dim));
      return r;
    }

    Report cmd_tensor(Options const& o, std::size_t left, std::size_t right, bool use_float) {
      FactorPower fp(parse_group(o.group, o.limits), o.limits, o.seed);
      auto        r = use_float || !fp.symmetric() ? tensor_report<Complex>(fp, left, right)
                                                   : tensor_report<Rational>(fp, left, right);
      r.summary["group"] = o.group;
      return r;
    }

    Report cmd_verify(Options const& o, std::string const& only) {
      Report r{"verify", {"check", "result", "detail"}};
      bool   all = true;
      for (auto const& check : verify_checks(o.limits, o.seed)) {
        if (!only.empty() && check.name.rfind(only, 0) != 0) {
          continue;
        }
        std::string detail;
        bool        ok = false;
        try {
          ok = check.run(detail);
        } catch (std::exception const& e) {
          detail = e.what();
        }
        all = all && ok;
        r.rows.push_back({check.name, ok ? "PASS" : "FAIL", detail});
      }
      if (r.rows.empty()) {
        throw ValidationError("no check name starts with '" + only + "'");
      }
      r.summary["verdict"] = all ? "OK" : "FAIL";
      r.lines.push_back(std::string("verdict ") + (all ? "OK" : "FAIL"));
      r.status = all ? kOk : kFailure;
      return r;
    }

    Report cmd_member(Options const& o, std::string const& relation) {
      auto G = parse_group(o.group, o.limits);
      auto e = !relation.empty() && relation.front() == '[' ? FpElement::parse_json(relation)
                                                            : FpElement::parse_rows(relation);
      Report r{"member", {"relation", "member"}};
      r.rows.push_back({e.to_rows(), is_member(G, e) ? "yes" : "no"});
      r.summary["group"] = o.group;
      return r;
    }

    std::string cmd_rep(Options const& o, std::string const& shape, std::string const& partition,
                        std::string const& label, bool use_float) {
      FactorPower fp(parse_group(o.group, o.limits), o.limits, o.seed);
      auto const  D = pick_dclass(fp, shape, partition);
      if (!D) {
        throw ValidationError("rep needs --shape or --partition");
      }
      auto const& s = fp.find_simple(*D, label);
      if (use_float || !fp.symmetric()) {
        return export_json(build_simple<Complex>(fp, s));
      }
      return export_json(build_simple<Rational>(fp, s));
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fplab: factorpower semigroups FP+(G, M) and their simple modules", "fplab"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--threads", o.threads, "OpenMP worker threads (0: runtime default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "Seed for randomized steps");
    app.add_option("--budget", o.budgets,
                   "Override a budget, NAME=VALUE with NAME one of group, enumerate, "
                   "foulkes, specht, fstar, correspond, normalizer");

    auto add_group = [&](CLI::App* sub) {
      sub->add_option("--group,-g", o.group, "S3, C4, D4 or [deg:]generators such as (1 2 3);(1 2)")
          ->capture_default_str();
    };

    std::string shape, partition, label, lambda, rho, relation, only;
    std::size_t k = 0, m = 0, n = 0, left = 0, right = 0;
    bool        dump = false, use_float = false;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Count the elements of FP+(G, M)");
    add_group(enumerate_cmd);
    enumerate_cmd->add_flag("--dump", dump, "List every element as relation rows");

    auto* idem_cmd = app.add_subcommand("idempotents", "Idempotents: partition, |H|, shape");
    add_group(idem_cmd);

    auto* dclass_cmd = app.add_subcommand("dclasses", "Regular D-classes and their simple dimensions");
    add_group(dclass_cmd);

    auto* simples_cmd = app.add_subcommand("simples", "Simple modules L(H, X)");
    add_group(simples_cmd);

    auto* mult_cmd = app.add_subcommand("multiplicity", "Multiplicity of S^lambda in Ind(S^l)");
    mult_cmd->add_option("--lambda", lambda, "Partition of n, e.g. 4,2")->required();
    mult_cmd->add_option("--rho", rho, "Set partition {1,2}{3} or block shape 2,1")->required();
    mult_cmd->add_option("--l", label, "Label such as 1=2,1;2=1 (default: trivial)");

    auto* table_cmd = app.add_subcommand("mult-table", "All multiplicities for one block shape");
    table_cmd->add_option("--rho", rho, "Set partition or block shape")->required();

    auto* foulkes_cmd = app.add_subcommand("foulkes", "Compare k blocks of m with m blocks of k");
    foulkes_cmd->add_option("--k", k)->required();
    foulkes_cmd->add_option("--m", m)->required();

    auto* fstar_cmd = app.add_subcommand("fstar", "D-class structure of F*_n and the dimension identity");
    fstar_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* corr_cmd = app.add_subcommand("correspond", "Match D-classes of FP+(S_n) and F*_n");
    corr_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* unit_cmd = app.add_subcommand("unitarize", "Invariant Hermitian forms and residuals");
    add_group(unit_cmd);
    unit_cmd->add_option("--shape", shape, "Block shape of the apex");
    unit_cmd->add_option("--partition", partition, "Set partition of the apex idempotent");
    unit_cmd->add_option("--label", label, "Label of X");

    auto* tensor_cmd = app.add_subcommand("tensor", "Decompose L_left (x) L_right");
    add_group(tensor_cmd);
    tensor_cmd->add_option("--left", left, "Simple id (see `simples`)")->required();
    tensor_cmd->add_option("--right", right, "Simple id")->required();
    tensor_cmd->add_flag("--float", use_float, "Use floating point intertwiner solves");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_option("--only", only, "Run only checks whose name starts with this");

    auto* member_cmd = app.add_subcommand("member", "Test whether a relation lies in FP+(G, M)");
    add_group(member_cmd);
    member_cmd->add_option("--relation", relation, "Rows 110/011/001 or JSON [[1,2],[2,3],[3]]")
        ->required();

    auto* rep_cmd = app.add_subcommand("rep", "Export the matrices of a simple module as JSON");
    add_group(rep_cmd);
    rep_cmd->add_option("--shape", shape, "Block shape of the apex");
    rep_cmd->add_option("--partition", partition, "Set partition of the apex idempotent");
    rep_cmd->add_option("--label", label, "Label of X");
    rep_cmd->add_flag("--float", use_float, "Complex matrices instead of exact rationals");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "fplab: " << e.what() << "\n" << app.help();
      return kUsage;
    }

    try {
      o.limits = Limits::from_env();
      for (auto const& b : o.budgets) {
        auto eq = b.find('=');
        if (eq == std::string::npos) {
          throw ValidationError("--budget expects NAME=VALUE, got '" + b + "'");
        }
        std::size_t value = 0;
        try {
          value = std::stoull(b.substr(eq + 1));
        } catch (std::exception const&) {
          throw ValidationError("--budget value is not a number: '" + b + "'");
        }
        o.limits.set(b.substr(0, eq), value);
      }
      if (o.threads > 0) {
        omp_set_num_threads(o.threads);
      }

      if (rep_cmd->parsed()) {
        out << cmd_rep(o, shape, partition, label, use_float) << '\n';
        return kOk;
      }

      Report r;
      if (enumerate_cmd->parsed()) {
        r = cmd_enumerate(o, dump);
      } else if (idem_cmd->parsed()) {
        r = cmd_idempotents(o);
      } else if (dclass_cmd->parsed()) {
        r = cmd_dclasses(o);
      } else if (simples_cmd->parsed()) {
        r = cmd_simples(o);
      } else if (mult_cmd->parsed()) {
        r = cmd_multiplicity(o, lambda, rho, label);
      } else if (table_cmd->parsed()) {
        r = cmd_mult_table(o, rho);
      } else if (foulkes_cmd->parsed()) {
        r = cmd_foulkes(o, k, m);
      } else if (fstar_cmd->parsed()) {
        r = cmd_fstar(o, n);
      } else if (corr_cmd->parsed()) {
        r = cmd_correspond(o, n);
      } else if (unit_cmd->parsed()) {
        r = cmd_unitarize(o, shape, partition, label);
      } else if (tensor_cmd->parsed()) {
        r = cmd_tensor(o, left, right, use_float);
      } else if (verify_cmd->parsed()) {
        r = cmd_verify(o, only);
      } else if (member_cmd->parsed()) {
        r = cmd_member(o, relation);
      }
      emit(r, o.format, out);
      return r.status;
    } catch (ValidationError const& e) {
      err << "fplab: invalid input: " << e.what() << '\n';
      return kUsage;
    } catch (SizeLimitError const& e) {
      err << "fplab: budget exceeded: " << e.what() << '\n';
      return kBudgetExceeded;
    } catch (std::exception const& e) {
      err << "fplab: error: " << e.what() << '\n';
      return kFailure;
    }
  }

}  // namespace fplab::cli
