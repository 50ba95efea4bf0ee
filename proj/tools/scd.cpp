#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scd/catalog.hpp"
#include "scd/core.hpp"
#include "scd/engine.hpp"
#include "scd/families.hpp"
#include "scd/search.hpp"
#include "scd/verify.hpp"

namespace {

using scd::Error;
using scd::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitNonexistent = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitUsage = 4;

int exit_code_for(const Error& e) {
  if (e.code == "InfeasibleRequest" || e.code == "KnownNonexistent")
    return kExitNonexistent;
  if (e.code == "VerificationFailed") return kExitVerifyFail;
  if (e.code == "OutOfRange" || e.code == "BadKind" || e.code == "ShapeMismatch")
    return kExitUsage;
  // OpenCase, BudgetExhausted, NotFound, Unsupported, IngredientUnavailable...
  return kExitUnknown;
}

std::string render_text(const scd::SchgddDesign& d) {
  std::ostringstream out;
  out << "schgdd n=" << d.n << " m=" << d.m << " t=" << d.t
      << " blocks=" << d.base_blocks.size() << "\n";
  for (const auto& b : d.base_blocks) {
    bool first = true;
    for (const auto& p : b.points) {
      if (!first) out << " ";
      out << "(" << p.group << "," << p.residue << ")";
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_text(const scd::Chdm& c) {
  std::ostringstream out;
  out << "chdm k=" << c.k << " w=" << c.w << " t=" << c.t << "\n";
  for (const auto& row : c.rows) {
    bool first = true;
    for (int x : row) {
      if (!first) out << " ";
      out << x;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_text(const scd::DifferenceFamily& f) {
  std::ostringstream out;
  out << "df g=" << f.g << " t=" << f.t << " h=" << f.h
      << " flavor=" << scd::to_string(f.flavor)
      << " blocks=" << f.blocks.size() << "\n";
  for (const auto& b : f.blocks) {
    bool first = true;
    for (int x : b) {
      if (!first) out << " ";
      out << x;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

struct OutputOpts {
  std::string out_path;
  std::string format = "json";
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--out", opts.out_path, "write result to file");
  cmd->add_option("--format", opts.format, "json|txt")
      ->check(CLI::IsMember({"json", "txt"}));
}

template <typename T>
void emit(const T& obj, const OutputOpts& opts) {
  std::string payload = opts.format == "txt" ? render_text(obj)
                                             : scd::to_json(obj).dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opts.out_path);
    if (!f) throw Error("Io", "cannot open " + opts.out_path);
    f << payload;
  }
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("Io", "cannot open " + path);
  json j;
  f >> j;
  return j;
}

scd::VerificationReport verify_any(const json& j, std::string* kind_out) {
  const std::string kind = j.value("kind", "");
  if (kind_out) *kind_out = kind;
  if (kind == "schgdd") return scd::verify_schgdd(scd::schgdd_from_json(j));
  if (kind == "chdm") return scd::verify_chdm(scd::chdm_from_json(j));
  if (kind == "df") return scd::verify_difference_family(scd::df_from_json(j));
  throw Error("BadKind", "unrecognized kind: " + kind);
}

int cmd_exists(int n, int m, int t) {
  auto f = scd::engine::feasibility(n, m, t);
  std::cout << scd::engine::to_string(f.verdict) << " (" << f.reason << ")\n";
  switch (f.verdict) {
    case scd::engine::Verdict::Exists:
      return kExitOk;
    case scd::engine::Verdict::Nonexistent:
    case scd::engine::Verdict::InfeasibleNecessary:
      return kExitNonexistent;
    default:
      return kExitUnknown;
  }
}

scd::DifferenceFamily build_family(const std::string& kind,
                                   const std::vector<long long>& params,
                                   long long budget) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw Error("Usage", "family " + kind + " expects " +
                               std::to_string(k) + " parameter(s)");
  };
  if (kind == "pdf_4t") {
    need(1);
    return scd::fam::build_pdf_4t(static_cast<int>(params[0]), budget);
  }
  if (kind == "2pdf_8t") {
    need(1);
    return scd::fam::build_2pdf_8t(static_cast<int>(params[0]), budget);
  }
  if (kind == "cdf_4t_odd") {
    need(1);
    return scd::fam::build_cdf_4t_odd(static_cast<int>(params[0]), budget);
  }
  if (kind == "cdf_16t") {
    need(1);
    return scd::fam::build_cdf_16t(static_cast<int>(params[0]), budget);
  }
  if (kind == "pdf_345") {
    need(1);
    return scd::fam::build_pdf_345(static_cast<int>(params[0]), budget);
  }
  if (kind == "catalog") {
    throw Error("Usage", "use `catalog show ID` for catalog families");
  }
  throw Error("Usage", "unknown family kind: " + kind +
                           " (pdf_4t|2pdf_8t|cdf_4t_odd|cdf_16t|pdf_345)");
}

json run_search(const std::string& kind, const std::vector<long long>& p,
                long long budget) {
  auto at_least = [&](size_t k) {
    if (p.size() < k)
      throw Error("Usage", "search " + kind + " needs at least " +
                               std::to_string(k) + " parameter(s)");
  };
  auto ints_from = [&](size_t start) {
    std::vector<int> v;
    for (size_t i = start; i < p.size(); ++i)
      v.push_back(static_cast<int>(p[i]));
    return v;
  };
  if (kind == "mgdd") {
    at_least(2);
    auto d = scd::search::find_mgdd(static_cast<int>(p[0]),
                                    static_cast<int>(p[1]), budget);
    json j;
    j["kind"] = "mgdd";
    j["n"] = d.n;
    j["s"] = d.s;
    for (const auto& b : d.blocks) {
      json jb = json::array();
      for (const auto& pt : b) jb.push_back({pt.group, pt.residue});
      j["blocks"].push_back(jb);
    }
    return j;
  }
  if (kind == "scgdd") {
    at_least(3);
    auto d = scd::search::find_scgdd(static_cast<int>(p[0]),
                                     static_cast<int>(p[1]),
                                     static_cast<int>(p[2]), budget);
    json j;
    j["kind"] = "scgdd";
    j["n"] = d.n;
    j["m"] = d.m;
    for (const auto& b : d.base_blocks) {
      json jb = json::array();
      for (const auto& pt : b.points) jb.push_back({pt.group, pt.residue});
      j["blocks"].push_back(jb);
    }
    return j;
  }
  if (kind == "pbd") {
    at_least(2);
    auto d = scd::search::find_pbd(static_cast<int>(p[0]), ints_from(1),
                                   budget);
    json j;
    j["kind"] = "pbd";
    j["v"] = d.v;
    j["blocks"] = d.blocks;
    return j;
  }
  if (kind == "strict_gdd") {
    at_least(3);
    return scd::to_json(scd::search::find_strict_gdd(
        static_cast<int>(p[0]), static_cast<int>(p[1]), ints_from(2), budget));
  }
  if (kind == "chdm") {
    at_least(2);
    return scd::to_json(scd::search::find_chdm(static_cast<int>(p[0]),
                                               static_cast<int>(p[1]), budget));
  }
  if (kind == "schgdd") {
    at_least(3);
    return scd::to_json(scd::search::find_schgdd(
        static_cast<int>(p[0]), static_cast<int>(p[1]),
        static_cast<int>(p[2]), budget));
  }
  throw Error("Usage", "unknown search kind: " + kind +
                           " (mgdd|scgdd|pbd|strict_gdd|chdm|schgdd)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-cyclic holey group divisible design toolkit"};
  app.require_subcommand(1);

  long long budget = scd::engine::kDefaultBudget;
  bool do_verify = false;

  // exists
  int en = 0, em = 0, et = 0;
  auto* exists = app.add_subcommand("exists", "existence verdict for (n,m,t)");
  exists->add_option("n", en)->required();
  exists->add_option("m", em)->required();
  exists->add_option("t", et)->required();

  // build
  auto* build = app.add_subcommand("build", "build a design or family");
  build->require_subcommand(1);
  OutputOpts bout;
  int bn = 0, bm = 0, bt = 0;
  auto* b_schgdd = build->add_subcommand("schgdd", "build 3-SCHGDD (n,m^t)");
  b_schgdd->add_option("n", bn)->required();
  b_schgdd->add_option("m", bm)->required();
  b_schgdd->add_option("t", bt)->required();
  int cm = 0, ct = 0;
  auto* b_chdm = build->add_subcommand("chdm", "build (3,mt;m)-CHDM");
  b_chdm->add_option("m", cm)->required();
  b_chdm->add_option("t", ct)->required();
  std::string fam_kind;
  std::vector<long long> fam_params;
  auto* b_family = build->add_subcommand("family", "build a difference family");
  b_family->add_option("kind", fam_kind)->required();
  b_family->add_option("params", fam_params);
  for (auto* c : {b_schgdd, b_chdm, b_family}) {
    add_output_opts(c, bout);
    c->add_option("--budget", budget, "search node budget (0 = no search)");
    c->add_flag("--verify", do_verify, "re-verify before emitting");
  }

  // verify
  std::string verify_path;
  auto* ver = app.add_subcommand("verify", "verify a design file");
  ver->add_option("path", verify_path)->required();

  // search
  std::string search_kind;
  std::vector<long long> search_params;
  auto* sea = app.add_subcommand("search", "search for an ingredient");
  sea->add_option("kind", search_kind)->required();
  sea->add_option("params", search_params);
  sea->add_option("--budget", budget, "search node budget");

  // catalog
  auto* cat = app.add_subcommand("catalog", "browse the embedded catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog ids");
  std::string cat_id;
  auto* cat_show = cat->add_subcommand("show", "show one catalog entry");
  cat_show->add_option("id", cat_id)->required();
  OutputOpts cat_out;
  add_output_opts(cat_show, cat_out);

  // explain
  std::string explain_path;
  auto* expl = app.add_subcommand("explain", "print a design's recipe trace");
  expl->add_option("path", explain_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*exists) return cmd_exists(en, em, et);

    if (*b_schgdd) {
      auto d = scd::engine::build_schgdd(bn, bm, bt, budget);
      if (do_verify) {
        auto rep = scd::verify_schgdd(d);
        if (!rep.pass) {
          std::cerr << rep.summary() << "\n";
          return kExitVerifyFail;
        }
      }
      emit(d, bout);
      return kExitOk;
    }
    if (*b_chdm) {
      auto c = scd::engine::build_chdm(cm, ct, budget);
      if (do_verify) {
        auto rep = scd::verify_chdm(c);
        if (!rep.pass) {
          std::cerr << rep.summary() << "\n";
          return kExitVerifyFail;
        }
      }
      emit(c, bout);
      return kExitOk;
    }
    if (*b_family) {
      auto f = build_family(fam_kind, fam_params, budget);
      if (do_verify) {
        auto rep = scd::verify_difference_family(f);
        if (!rep.pass) {
          std::cerr << rep.summary() << "\n";
          return kExitVerifyFail;
        }
      }
      emit(f, bout);
      return kExitOk;
    }

    if (*ver) {
      std::string kind;
      auto rep = verify_any(load_json(verify_path), &kind);
      if (rep.pass) {
        std::cout << "pass (" << kind << ")\n";
        return kExitOk;
      }
      std::cout << "fail (" << kind << ")\n" << rep.summary() << "\n";
      return kExitVerifyFail;
    }

    if (*sea) {
      std::cout << run_search(search_kind, search_params, budget).dump(2)
                << "\n";
      return kExitOk;
    }

    if (*cat_list) {
      for (const auto& id : scd::catalog::all_ids()) std::cout << id << "\n";
      return kExitOk;
    }
    if (*cat_show) {
      if (auto f = scd::catalog::family_if(cat_id)) {
        emit(*f, cat_out);
        return kExitOk;
      }
      if (auto c = scd::catalog::chdm_if(cat_id)) {
        emit(*c, cat_out);
        return kExitOk;
      }
      if (auto d = scd::catalog::design(cat_id)) {
        std::cout << "design " << d->id << " (n=" << d->n << " m=" << d->m
                  << " t=" << d->t << ", raw catalog data)\n";
        return kExitOk;
      }
      std::cerr << "unknown catalog id: " << cat_id << "\n";
      return kExitUsage;
    }

    if (*expl) {
      json j = load_json(explain_path);
      if (!j.contains("recipe"))
        throw Error("BadKind", "file has no recipe field");
      std::cout << scd::engine::explain(scd::recipe_from_json(j["recipe"]));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  }
  return kExitUsage;
}
