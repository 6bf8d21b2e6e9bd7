#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zonocone/zonocone.hpp"

namespace {

using namespace zc;

struct Built {
  PartitionScheme scheme;
  std::vector<Generator> generators;
  Cone cone;
  std::vector<FacetOrbit> orbits;
};

Built build_cone(int n, int d) {
  Built b;
  b.scheme = enumerate_scheme(n, d);
  b.generators = generators_for(n, d, b.scheme);
  std::vector<RatVec> pts;
  pts.reserve(b.generators.size());
  for (const Generator& g : b.generators) {
    RatVec v(g.ray.size());
    for (std::size_t i = 0; i < g.ray.size(); ++i) v[i] = Rat(g.ray[i]);
    pts.push_back(std::move(v));
  }
  b.cone = conic_hull(pts);
  b.orbits = orbit_classify(b.cone.facets, b.scheme);
  return b;
}

struct GoldenCounts {
  std::size_t rays, facets;
  std::optional<std::size_t> orbit_count;
};

GoldenCounts golden_counts(int n, int d) {
  if (n == 4 && d == 2) return {3, 3, 1};
  if (n == 6 && d == 2) return {25, 975, 8};
  if (n == 6 && d == 3) return {30, 130, std::nullopt};
  throw std::invalid_argument("unsupported (n,d)");
}

json artifact_json(int n, int d, const Built& b) {
  json j;
  j["n"] = n;
  j["d"] = d;
  json cj = cone_json(b.cone, b.scheme);
  for (auto& el : cj.items()) j[el.key()] = el.value();
  json gens = json::array();
  for (const Generator& g : b.generators) {
    json gj;
    gj["type"] = g.type;
    gj["labeling"] = g.labeling;
    json dirs = json::array();
    for (const RatVec& u : g.directions) {
      json uu = json::array();
      for (const Rat& x : u) uu.push_back(to_string(x));
      dirs.push_back(std::move(uu));
    }
    gj["directions"] = std::move(dirs);
    gj["ray"] = json_ivec(g.ray);
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  j["orbits"] = orbits_json(b.orbits);
  j["counts"] = {{"rays", b.cone.rays.size()},
                 {"facets", b.cone.facets.size()},
                 {"orbits", b.orbits.size()}};
  return j;
}

int cmd_build(int n, int d, const std::string& out, const std::string& format, bool no_golden,
              const std::string& data_dir) {
  auto t0 = std::chrono::steady_clock::now();
  Built b = build_cone(n, d);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  log_info("built C(" + std::to_string(n) + "," + std::to_string(d) + ") in " +
           std::to_string(ms.count()) + " ms");

  std::string payload =
      format == "csv" ? facets_csv(b.cone, b.scheme) : dump(artifact_json(n, d, b));
  if (out.empty())
    std::cout << payload;
  else
    write_file(out, payload);

  GoldenCounts want = golden_counts(n, d);
  bool ok = true;
  auto check = [&](const std::string& what, std::size_t got, std::size_t expect) {
    if (got != expect) {
      std::cerr << "count mismatch: " << what << " = " << got << ", expected " << expect << "\n";
      ok = false;
    }
  };
  check("rays", b.cone.rays.size(), want.rays);
  check("facets", b.cone.facets.size(), want.facets);
  if (want.orbit_count) check("orbits", b.orbits.size(), *want.orbit_count);

  if (!no_golden && format == "json") {
    std::string golden_path = data_dir + "/golden/cone_" + std::to_string(n) + "_" +
                              std::to_string(d) + ".json";
    std::ifstream probe(golden_path);
    if (probe) {
      std::string expect = read_file(golden_path);
      if (expect != dump(artifact_json(n, d, b))) {
        std::cerr << "golden mismatch against " << golden_path << "\n";
        ok = false;
      } else {
        log_info("golden match: " + golden_path);
      }
    } else {
      log_info("no golden file at " + golden_path + "; skipping byte comparison");
    }
  }
  std::cout << "build (" << n << "," << d << "): rays=" << b.cone.rays.size()
            << " facets=" << b.cone.facets.size() << " orbits=" << b.orbits.size()
            << (ok ? " [ok]" : " [MISMATCH]") << "\n";
  return ok ? 0 : 1;
}

// ---------------- verify suites ----------------

struct SuiteContext {
  uint64_t seed;
  long long trials_sampling;
  long long trials_twoface;
  int jobs;
  std::string data_dir;
  std::optional<Built> c42, c62, c63;

  Built& get(int n, int d) {
    std::optional<Built>* slot = nullptr;
    if (n == 4 && d == 2) slot = &c42;
    else if (n == 6 && d == 2) slot = &c62;
    else if (n == 6 && d == 3) slot = &c63;
    else throw std::invalid_argument("unsupported (n,d)");
    if (!slot->has_value()) *slot = build_cone(n, d);
    return slot->value();
  }
};

json suite_table1(SuiteContext& ctx, bool& pass) {
  Built& b = ctx.get(6, 2);
  TypeTable table = load_type_table(ctx.data_dir + "/table1.csv", b.scheme);
  MatchReport match = match_type_table(table, b.cone.facets, b.orbits);
  json j;
  j["facets"] = b.cone.facets.size();
  j["orbit_count"] = b.orbits.size();
  json entries = json::array();
  for (const TypeMatch& m : match.entries) {
    json e;
    e["type"] = m.type;
    e["is_facet"] = m.is_facet;
    if (m.is_facet) {
      e["facet"] = m.facet_index;
      e["orbit"] = m.orbit_index;
      e["orbit_size"] = b.orbits[m.orbit_index].size;
    }
    entries.push_back(std::move(e));
  }
  j["types"] = std::move(entries);
  j["all_facets"] = match.all_facets;
  j["bijective"] = match.bijective;
  pass = match.all_facets && match.bijective && b.cone.facets.size() == 975 &&
         b.orbits.size() == 8;
  return j;
}

json suite_counterexample(SuiteContext& ctx, bool& pass) {
  Built& b = ctx.get(6, 2);
  TypeTable table = load_type_table(ctx.data_dir + "/table1.csv", b.scheme);
  MatchReport match = match_type_table(table, b.cone.facets, b.orbits);
  std::optional<std::size_t> type3_orbit;
  for (const TypeMatch& m : match.entries)
    if (m.type == 3 && m.is_facet) type3_orbit = m.orbit_index;

  CounterexampleReport rep = counterexample_check(b.cone, b.orbits, b.scheme);
  json j;
  j["phi"] = monomial_point_json(rep.point);
  j["violated_facets"] = rep.violated_facets;
  j["min_value"] = to_string(rep.min_value);
  j["violating_orbits"] = std::vector<std::size_t>(rep.violating_orbits.begin(),
                                                   rep.violating_orbits.end());
  j["type3_orbit"] = type3_orbit ? json(*type3_orbit) : json(nullptr);

  // the same normals must never fire on symmetric tuples
  SampleReport sample = sample_inequalities(b.cone, b.scheme, b.orbits, ctx.trials_sampling,
                                            ctx.seed, ctx.jobs);
  j["sampled_trials"] = sample.trials;
  j["sampled_violations"] = sample.violations;
  if (type3_orbit) j["type3_min_slack"] = to_string(sample.min_slack_per_orbit[*type3_orbit]);

  pass = rep.strict_violation && rep.min_value < 0 && type3_orbit.has_value() &&
         rep.violating_orbits.size() == 1 &&
         *rep.violating_orbits.begin() == *type3_orbit && sample.violations == 0;
  return j;
}

json suite_fiber(SuiteContext&, int n_opt, bool& pass) {
  json arr = json::array();
  pass = true;
  std::vector<int> ns = n_opt ? std::vector<int>{n_opt} : std::vector<int>{4, 6, 8};
  for (int n : ns) {
    FiberReport rep = fiber_rank_check(n);
    json j;
    j["n"] = rep.n;
    j["edges"] = rep.edge_count;
    j["matchings"] = rep.matching_count;
    j["rank_f"] = rep.rank_f;
    j["expected_rank_f"] = rep.expected_rank_f;
    j["rank_g"] = rep.rank_g;
    j["fg_all_ones"] = rep.fg_all_ones;
    j["f_ones_half_n"] = rep.f_ones_half_n;
    j["pass"] = rep.ok;
    pass = pass && rep.ok;
    arr.push_back(std::move(j));
  }
  return arr;
}

json suite_family63(SuiteContext& ctx, bool& pass) {
  Built& b = ctx.get(6, 3);
  InequalityFamily63 fam = family_63(b.scheme);
  FamilyComparison cmp = check_family_equals_facets(fam, b.cone);
  json j;
  j["family_size"] = fam.normals.size();
  j["coordinate"] = fam.coordinate_count;
  j["lower"] = fam.lower_count;
  j["upper"] = fam.upper_count;
  j["facets"] = b.cone.facets.size();
  j["equal"] = cmp.equal;
  json missing = json::array(), extra = json::array();
  for (const IntVec& v : cmp.missing) missing.push_back(json_ivec(v));
  for (const IntVec& v : cmp.extra) extra.push_back(json_ivec(v));
  j["missing"] = std::move(missing);
  j["extra"] = std::move(extra);
  pass = cmp.equal && fam.normals.size() == 130 && fam.coordinate_count == 10 &&
         fam.lower_count == 60 && fam.upper_count == 60;
  return j;
}

json suite_lemma(SuiteContext&, bool& pass) {
  PartitionScheme scheme = enumerate_scheme(6, 2);
  LemmaSplitReport rep = lemma_split_check(scheme);
  json j;
  j["equal"] = rep.equal;
  j["support_ok"] = rep.support_ok;
  j["permuted_ok"] = rep.permuted_ok;
  pass = rep.ok;
  return j;
}

json suite_twoface(SuiteContext& ctx, bool& pass) {
  Built& b = ctx.get(6, 2);
  TwoFaceReport rep = two_face_checks(b.scheme, b.cone, ctx.trials_twoface, ctx.seed);
  json j;
  j["pairs_33_checked"] = rep.pairs_33_checked;
  j["pairs_33_ok"] = rep.pairs_33_ok;
  j["mixed_path_ok"] = rep.mixed_path_ok;
  j["obstruction_exact_ok"] = rep.obstruction_exact_ok;
  j["obstruction_trials"] = rep.obstruction_trials;
  j["witnesses_found"] = rep.witnesses_found;
  j["seed"] = rep.seed;
  pass = rep.ok;
  return j;
}

json suite_sampling(SuiteContext& ctx, int n, int d, bool& pass) {
  json arr = json::array();
  pass = true;
  std::vector<std::pair<int, int>> cases;
  if (n && d)
    cases.emplace_back(n, d);
  else
    cases = {{4, 2}, {6, 2}, {6, 3}};
  for (auto [cn, cd] : cases) {
    Built& b = ctx.get(cn, cd);
    SampleReport rep = sample_inequalities(b.cone, b.scheme, b.orbits, ctx.trials_sampling,
                                           ctx.seed, ctx.jobs);
    json j;
    j["n"] = cn;
    j["d"] = cd;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["violations"] = rep.violations;
    json slacks = json::array();
    for (const Rat& s : rep.min_slack_per_orbit) slacks.push_back(to_string(s));
    j["min_slack_per_orbit"] = std::move(slacks);
    j["pass"] = rep.violations == 0;
    pass = pass && rep.violations == 0;
    arr.push_back(std::move(j));
  }
  return arr;
}

json suite_rigid(SuiteContext&, bool& pass) {
  json j;
  int rp1 = rp1_exhaustive_check();
  j["rp1_signatures_checked"] = rp1;
  GridSearchResult grid = grid_search_rp2();
  j["rp2_configs_tested"] = grid.configs_tested;
  j["rp2_rigid_doubled_triples"] = grid.rigid_a1;
  j["rp2_rigid_quadrilaterals"] = grid.rigid_a2;
  j["rp2_rigid_other"] = grid.rigid_unknown;
  json slopes = json::array();
  bool seven_ok = true;
  for (int s : {-1, 2, 3}) {
    bool r = is_rigid(seven_point_family(Rat(s)));
    slopes.push_back({{"slope", s}, {"rigid", r}});
    seven_ok = seven_ok && r;
  }
  j["seven_point"] = std::move(slopes);
  pass = rp1 == 456 && grid.rigid_unknown == 0 && grid.rigid_a1 == 17336 &&
         grid.rigid_a2 == 8642 && seven_ok;
  j["pass"] = pass;
  return j;
}

int cmd_verify(const std::string& suite, int n, int d, uint64_t seed, long long trials, int jobs,
               const std::string& out, const std::string& data_dir) {
  SuiteContext ctx;
  ctx.seed = seed;
  ctx.trials_sampling = trials > 0 ? trials : 1000;
  ctx.trials_twoface = trials > 0 ? trials : 10000;
  ctx.jobs = jobs;
  ctx.data_dir = data_dir;

  json report;
  report["command"] = "verify";
  report["suite"] = suite;
  report["seed"] = seed;
  json checks = json::array();
  bool pass = true;

  auto run = [&](const std::string& name, auto&& fn) {
    bool p = false;
    auto t0 = std::chrono::steady_clock::now();
    json body = fn(p);
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    log_info("suite " + name + ": " + (p ? "pass" : "FAIL") + " (" +
             std::to_string(ms.count()) + " ms)");
    json c;
    c["name"] = name;
    c["pass"] = p;
    c["report"] = std::move(body);
    checks.push_back(std::move(c));
    std::cout << name << ": " << (p ? "pass" : "FAIL") << "\n";
    pass = pass && p;
  };

  bool all = suite == "all";
  bool known = false;
  if (all || suite == "table1") {
    run("table1", [&](bool& p) { return suite_table1(ctx, p); });
    known = true;
  }
  if (all || suite == "counterexample") {
    run("counterexample", [&](bool& p) { return suite_counterexample(ctx, p); });
    known = true;
  }
  if (all || suite == "fiber") {
    run("fiber", [&](bool& p) { return suite_fiber(ctx, n, p); });
    known = true;
  }
  if (all || suite == "family63") {
    run("family63", [&](bool& p) { return suite_family63(ctx, p); });
    known = true;
  }
  if (all || suite == "lemma-split") {
    run("lemma-split", [&](bool& p) { return suite_lemma(ctx, p); });
    known = true;
  }
  if (all || suite == "two-face") {
    run("two-face", [&](bool& p) { return suite_twoface(ctx, p); });
    known = true;
  }
  if (all || suite == "sampling") {
    run("sampling", [&](bool& p) { return suite_sampling(ctx, n, d, p); });
    known = true;
  }
  if (all || suite == "rigid") {
    run("rigid", [&](bool& p) { return suite_rigid(ctx, p); });
    known = true;
  }
  if (!known) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }

  report["checks"] = std::move(checks);
  report["pass"] = pass;
  if (!out.empty()) write_file(out, dump(report));
  return pass ? 0 : 1;
}

// ---------------- mixed volume ----------------

Rat json_rat(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("expected integer or \"p/q\" string");
}

RatVec json_rvec(const json& v, int d) {
  if (!v.is_array() || static_cast<int>(v.size()) != d)
    throw std::invalid_argument("expected a vector of length d");
  RatVec out;
  for (const json& x : v) out.push_back(json_rat(x));
  return out;
}

int cmd_mixed_volume(const std::string& path, const std::string& out) {
  json in;
  int d = 0;
  std::vector<Zonotope> zonotopes;
  std::vector<ConvexPolygon> polygons;
  bool any_polygon = false;
  try {
    in = json::parse(read_file(path));
    d = in.at("d").get<int>();
    if (d < 1) throw std::invalid_argument("d must be positive");
    const json& bodies = in.at("bodies");
    if (!bodies.is_array() || static_cast<int>(bodies.size()) != d)
      throw std::invalid_argument("expected exactly d bodies");
    for (const json& bj : bodies) {
      if (bj.contains("segment")) {
        zonotopes.push_back(segment_body(json_rvec(bj.at("segment"), d)));
      } else if (bj.contains("zonotope")) {
        Zonotope z;
        for (const json& g : bj.at("zonotope")) z.generators.push_back(Segment{json_rvec(g, d)});
        zonotopes.push_back(std::move(z));
      } else if (bj.contains("polygon")) {
        if (d != 2) throw std::invalid_argument("polygon bodies require d = 2");
        any_polygon = true;
        std::vector<Vec2> pts;
        for (const json& p : bj.at("polygon")) {
          RatVec v = json_rvec(p, 2);
          pts.push_back(Vec2{v[0], v[1]});
        }
        polygons.push_back(convex_polygon(std::move(pts)));
        zonotopes.emplace_back();  // placeholder to keep indices aligned
      } else {
        throw std::invalid_argument("body must be segment, zonotope, or polygon");
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }

  Rat value;
  if (any_polygon) {
    // convert everything to polygons; d == 2 here
    std::vector<ConvexPolygon> bodies;
    std::size_t poly_at = 0;
    const json& bj = in.at("bodies");
    for (std::size_t i = 0; i < bj.size(); ++i) {
      if (bj[i].contains("polygon"))
        bodies.push_back(polygons[poly_at++]);
      else
        bodies.push_back(zonotope_polygon(zonotopes[i]));
    }
    value = mv_polygons(bodies[0], bodies[1]);
  } else {
    value = mv_zonotopes(zonotopes);
  }
  std::string text = to_string(value) + "\n";
  std::cout << text;
  if (!out.empty()) write_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cones of mixed-volume monomials for tuples of zonotopes"};
  app.require_subcommand(1);

  int n = 0, d = 0;
  std::string out, format = "json", data_dir = "data", suite, input;
  bool no_golden = false;
  uint64_t seed = 12345;
  long long trials = 0;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  CLI::App* build = app.add_subcommand("build", "compute a cone and its facet orbits");
  build->add_option("--n", n, "number of bodies")->required();
  build->add_option("--d", d, "ambient dimension of the bodies")->required();
  build->add_option("--out", out, "output path (stdout if omitted)");
  build->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  build->add_flag("--no-golden", no_golden, "skip comparison against the checked-in golden file");
  build->add_option("--data", data_dir, "data directory with golden files");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "table1|counterexample|fiber|family63|lemma-split|two-face|sampling|rigid|all")
      ->required();
  verify->add_option("--n", n, "restrict to one n where applicable");
  verify->add_option("--d", d, "restrict to one d where applicable");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--trials", trials, "trial count for randomized checks");
  verify->add_option("--jobs", jobs, "worker threads for sampling");
  verify->add_option("--out", out, "write the JSON report here");
  verify->add_option("--data", data_dir, "data directory with table1.csv");

  CLI::App* mv = app.add_subcommand("mixed-volume", "exact mixed volume of d bodies from JSON");
  mv->add_option("input", input, "JSON file with {\"d\": ..., \"bodies\": [...]}")->required();
  mv->add_option("--out", out, "also write the value here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) {
      if (!((n == 4 && d == 2) || (n == 6 && d == 2) || (n == 6 && d == 3))) {
        std::cerr << "unsupported (n,d); use (4,2), (6,2), or (6,3)\n";
        return 2;
      }
      return cmd_build(n, d, out, format, no_golden, data_dir);
    }
    if (verify->parsed()) return cmd_verify(suite, n, d, seed, trials, jobs, out, data_dir);
    if (mv->parsed()) return cmd_mixed_volume(input, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
