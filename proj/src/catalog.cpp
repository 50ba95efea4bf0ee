#include "scd/catalog.hpp"

#include <map>
#include <mutex>

namespace scd::catalog {

namespace {

struct Store {
  std::map<std::string, DifferenceFamily> families;
  std::map<std::string, Chdm> chdms;
  std::map<std::pair<int, int>, PairData> pairs;
  std::map<std::string, CatalogDesignData> designs;
};

const Store& store() {
  static const Store s = [] {
    Store st;
    json j = json::parse(detail::catalog_json());
    for (const auto& jf : j.at("families")) {
      DifferenceFamily f;
      f.g = jf.at("g").get<int>();
      f.t = jf.at("t").get<int>();
      f.h = jf.at("h").get<int>();
      f.flavor = df_flavor_from_string(jf.at("flavor").get<std::string>());
      f.blocks = jf.at("blocks").get<std::vector<std::vector<int>>>();
      std::string id = jf.at("id").get<std::string>();
      f.recipe = RecipeNode("catalog", {}, {});
      f.recipe.rule = "catalog:" + id;
      st.families[id] = std::move(f);
    }
    // Aliases matching alternative table numbering.
    if (st.families.count("Ex:cdf-256-32"))
      st.families["Ex2.8"] = st.families["Ex:cdf-256-32"];
    for (int t : {8, 12, 14, 18}) {
      auto it = st.families.find("L8t:t=" + std::to_string(t));
      if (it != st.families.end())
        st.families["L4.14:t=" + std::to_string(t)] = it->second;
    }
    for (const auto& jc : j.at("chdms")) {
      Chdm c;
      c.k = 3;
      c.w = jc.at("w").get<int>();
      c.t = jc.at("t").get<int>();
      c.rows = jc.at("rows").get<std::vector<std::vector<int>>>();
      std::string id = jc.at("id").get<std::string>();
      c.recipe = RecipeNode("catalog:" + id);
      st.chdms[id] = std::move(c);
    }
    for (const auto& jp : j.at("pair_partitions")) {
      PairData p;
      p.d = jp.at("d").get<int>();
      p.u = jp.at("u").get<int>();
      p.c = jp.at("c").get<int>();
      for (const auto& pr : jp.at("pairs"))
        p.pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
      st.pairs[{p.d, p.u}] = std::move(p);
    }
    for (const auto& jd : j.at("designs")) {
      CatalogDesignData d;
      d.id = jd.at("id").get<std::string>();
      d.n = jd.at("n").get<int>();
      d.m = jd.at("m").get<int>();
      d.t = jd.at("t").get<int>();
      if (jd.contains("blocks"))
        for (const auto& jb : jd.at("blocks")) {
          std::vector<Point> b;
          for (const auto& jp : jb)
            b.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
          d.blocks.push_back(std::move(b));
        }
      if (jd.contains("expand")) d.expand = jd.at("expand").get<std::string>();
      if (jd.contains("seeds")) {
        if (d.expand == "rot5") {
          for (const auto& jb : jd.at("seeds")) {
            std::vector<Point> b;
            for (const auto& jp : jb)
              b.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
            d.seeds_pt.push_back(std::move(b));
          }
        } else {
          d.seeds_int = jd.at("seeds").get<std::vector<std::vector<int>>>();
        }
      }
      if (jd.contains("s")) {
        d.beta_step = jd.at("s").get<int>();
        d.beta_order = jd.at("order").get<int>();
        d.expand = "beta";
      }
      st.designs[d.id] = std::move(d);
    }
    return st;
  }();
  return s;
}

}  // namespace

std::optional<DifferenceFamily> family_if(const std::string& id) {
  auto it = store().families.find(id);
  if (it == store().families.end()) return std::nullopt;
  return it->second;
}

DifferenceFamily family(const std::string& id) {
  auto f = family_if(id);
  if (!f) throw Error("UnknownId", "no catalog family '" + id + "'");
  return *f;
}

std::vector<std::string> family_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : store().families) out.push_back(k);
  return out;
}

std::optional<Chdm> chdm_if(const std::string& id) {
  auto it = store().chdms.find(id);
  if (it == store().chdms.end()) return std::nullopt;
  return it->second;
}

Chdm chdm(const std::string& id) {
  auto c = chdm_if(id);
  if (!c) throw Error("UnknownId", "no catalog matrix '" + id + "'");
  return *c;
}

std::vector<std::string> chdm_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : store().chdms) out.push_back(k);
  return out;
}

std::optional<PairData> pair_partition(int d, int u) {
  auto it = store().pairs.find({d, u});
  if (it == store().pairs.end()) return std::nullopt;
  return it->second;
}

std::optional<CatalogDesignData> design(const std::string& id) {
  auto it = store().designs.find(id);
  if (it == store().designs.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> design_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : store().designs) out.push_back(k);
  return out;
}

std::vector<std::string> all_ids() {
  auto out = family_ids();
  for (auto& id : chdm_ids()) out.push_back(id);
  for (auto& id : design_ids()) out.push_back(id);
  return out;
}

}  // namespace scd::catalog
