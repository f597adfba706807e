// Command line front end: verification suites, single-shot computations,
// lattice scans, and report emission.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "cayley/io.hpp"
#include "cayley/models.hpp"
#include "cayley/report.hpp"

using namespace cayley;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct RunConfig {
  std::string backend = "exact";
  double tol = 1e-10;
  int n = 16;
  std::uint64_t seed = 0xC0FFEEull;
  std::string preset, input, output;
  std::string format = "table";
  bool check = false;
  bool full = false;
};

std::string data_dir() {
  if (const char* env = std::getenv("CAYLEY_DATA_DIR")) return env;
#ifdef CAYLEY_DATA_DIR
  return CAYLEY_DATA_DIR;
#else
  return "data";
#endif
}

io::json load_preset(const std::string& name) {
  return io::load_file(data_dir() + "/presets/" + name + ".json");
}

int emit(Report& rep, const RunConfig& cfg) {
  rep.seed = cfg.seed;
  rep.sort();
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "cannot write " << cfg.output << "\n";
      return kExitData;
    }
    os = &file;
  }
  if (cfg.format == "record")
    rep.emit_record(*os);
  else
    rep.emit_table(*os);
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct TestRng {
  std::mt19937_64 g;
  explicit TestRng(std::uint64_t seed) : g(seed) {}
  Scalar rational(int lo = -3, int hi = 3, int dmax = 4) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, dmax);
    return Scalar(num(g), den(g));
  }
  Form form(int dim, int deg) {
    Form f(dim, deg);
    for (Mask m = 0; m < (Mask(1) << dim); ++m)
      if (popcount(m) == deg) f.add(m, rational());
    return f;
  }
  Mat glplus(int n) {
    while (true) {
      Mat A = Mat::identity(n);
      std::uniform_int_distribution<int> d(-1, 1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) A(i, j) = Scalar(d(g));
      if (A.det().sign() > 0) return A;
    }
  }
};

int cmd_verify_identities(const RunConfig& cfg, int structures,
                          const std::string& mutate) {
  auto t0 = std::chrono::steady_clock::now();
  TestRng rng(cfg.seed);
  Report rep;
  rep.command = "verify-identities";

  bool use_float = cfg.backend == "float";
  double worst[13] = {0};
  auto upd = [&](int slot, const Form& diff) {
    worst[slot] = std::max(worst[slot], diff.max_abs());
  };

  for (int t = 0; t <= structures; ++t) {
    su3::SU3Structure s;
    if (t == 0) {
      s = su3::standard_su3();
    } else {
      Mat A = rng.glplus(6);
      Form w = pullback(A, su3::standard_omega());
      Form re = pullback(A, su3::standard_re_omega());
      s = use_float ? su3::make_su3(w.to_float(), re.to_float())
                    : su3::make_su3(w, re);
    }
    if (mutate == "re_omega") s.im_omega = -s.im_omega;  // injected fault

    Form om2 = wedge(s.omega, s.omega);
    for (int k = 0; k < 6; ++k) {
      Vec X(6, Scalar(0));
      X[std::size_t(k)] = Scalar(1);
      Form Xf = s.metric.flat(X);
      Form JXf = s.j1(Xf);
      Vec JX(6, Scalar(0));
      for (int i = 0; i < 6; ++i) JX[std::size_t(i)] = s.J(i, k);
      upd(1, interior(X, s.omega) + JXf);
      upd(2, interior(X, s.im_omega) + interior(JX, s.re_omega));
      Form c3 = wedge(interior(X, s.re_omega), s.omega);
      upd(3, c3 - wedge(Xf, s.im_omega));
      upd(3, c3 - wedge(JXf, s.re_omega));
      upd(4, wedge(interior(X, s.re_omega), s.re_omega) - wedge(Xf, om2));
      upd(5, wedge(interior(X, s.re_omega), s.im_omega) + wedge(JXf, om2));
    }
    Form gamma = rng.form(6, 1);
    if (use_float) gamma = gamma.to_float();
    upd(6, s.star(gamma) - wedge(s.j1(gamma).scaled(Scalar(-1, 2)), om2));
    upd(7, s.star(s.omega) - om2.scaled(Scalar(1, 2)));
    {
      Vec X(6, Scalar(0));
      X[1] = Scalar(1);
      upd(8, s.star(interior(X, s.re_omega)) -
                 wedge(s.metric.flat(X), s.im_omega));
    }
    {
      su3::TypeSplit2 t2 = su3::project2(rng.form(6, 2), s);
      upd(9, s.star(wedge(t2.p8, s.omega)) + t2.p8);
      su3::TypeSplit3 t3 = su3::project3(rng.form(6, 3), s);
      upd(10, s.star(t3.p12) - s.j(t3.p12));
    }
    upd(11, s.star(wedge(gamma, s.omega)) + wedge(s.j1(gamma), s.omega));
    upd(12, s.star(s.re_omega) - s.im_omega);
    upd(12, s.star(s.im_omega) + s.re_omega);
  }

  const char* names[13] = {"",
                           "contract-omega",
                           "contract-im-vs-re",
                           "contract-re-wedge-omega",
                           "contract-re-wedge-re",
                           "contract-re-wedge-im",
                           "star-one-form",
                           "star-omega",
                           "star-contract-re",
                           "star-primitive-11",
                           "star-twelve-block",
                           "star-oneform-wedge-omega",
                           "star-re-im"};
  const char* anchors[13] = {
      "",
      "X -| w = -J(X^flat)",
      "X -| Im = -(JX) -| Re",
      "(X -| Re)^w = J(X^flat)^Re = X^flat^Im",
      "(X -| Re)^Re = X^flat ^ w^2",
      "(X -| Re)^Im = -J(X^flat) ^ w^2",
      "star g = -(1/2) J(g) ^ w^2",
      "star w = (1/2) w^2",
      "star(X -| Re) = X^flat ^ Im",
      "star(t8 ^ w) = -t8",
      "star s12 = J s12 (slotwise J)",
      "star(g ^ w) = -J(g) ^ w",
      "star Re = Im, star Im = -Re"};
  double tol = use_float ? cfg.tol : 0.0;
  for (int i = 1; i <= 12; ++i)
    rep.add(names[i], anchors[i], worst[i] <= tol, worst[i], tol);

  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "# wall_ms "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << "\n";
  RunConfig out = cfg;
  return emit(rep, out);
}

int cmd_torsion(const RunConfig& cfg) {
  spin7::JetPoint jp;
  try {
    jp = io::jet_from_json(io::load_file(cfg.input));
  } catch (const io::malformed_input& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitData;
  }
  spin7::TorsionReport tr = spin7::torsion_residuals(jp);
  io::json j = io::torsion_report_to_json(tr, cfg.full);
  j["defect_dphi_grouping"] = spin7::dphi_decomposition_defect(jp).to_double();
  std::vector<std::string> nonzero;
  for (auto& [k, v] : tr.norms)
    if (v > cfg.tol) nonzero.push_back(k);
  j["nonzero_residuals"] = nonzero;
  if (!cfg.output.empty())
    io::save_file(cfg.output, j);
  else
    std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, const std::string& kahler_csv,
             long max_coeff, int seifert_coord, long seifert_weight) {
  topo::IntersectionLattice L;
  io::json preset;
  try {
    if (!cfg.preset.empty()) {
      preset = load_preset(cfg.preset);
      L = io::lattice_from_json(preset);
    } else if (!cfg.input.empty()) {
      L = io::lattice_from_json(io::load_file(cfg.input));
    } else {
      std::cerr << "scan: need --preset or --input\n";
      return kExitUsage;
    }
  } catch (const io::malformed_input& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitData;
  }

  topo::ZVec k;
  if (!kahler_csv.empty()) {
    std::stringstream ss(kahler_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) k.emplace_back(std::stol(tok));
  } else if (preset.contains("kahler_default")) {
    for (long v : preset["kahler_default"].get<std::vector<long>>())
      k.emplace_back(v);
  }
  if (int(k.size()) != L.rank) {
    std::cerr << "scan: kahler vector must have " << L.rank << " entries\n";
    return kExitUsage;
  }

  topo::ScanFilters filters;
  filters.max_coeff = max_coeff;
  if (seifert_weight > 0) filters.seifert = {{seifert_coord, seifert_weight}};
  if (preset.contains("seifert")) {
    filters.seifert = {{preset["seifert"]["coord"].get<int>(),
                        preset["seifert"]["weight"].get<long>()}};
  }

  Report rep;
  rep.command = "scan";
  try {
    topo::ScanResult res = topo::chern_scan(L, k, filters);
    rep.add("kernel-rank", "rank{a : a.Qk = 0} = rank - 1",
            int(res.kernel_basis.size()) == L.rank - 1,
            double(res.kernel_basis.size()), double(L.rank - 1));
    rep.add("candidates", "primitive, orthogonal, within bounds",
            res.candidates.size() >= 2, double(res.candidates.size()), 2,
            "first candidates printed below");
    // admissibility against link data when the preset carries it
    if (preset.contains("link") && res.candidates.size() >= 2) {
      topo::LinkData link{preset["link"]["b2_sigma"].get<long>(),
                          preset["link"]["h5_dim"].get<long>()};
      auto adm = topo::admissibility_report(
          L, k, {res.candidates[0].a, res.candidates[1].a}, link);
      for (auto& c : adm.checks)
        rep.add("admissibility/" + c.name, c.detail, c.pass);
      rep.add("admissibility/triple-product", "vacuous iff H^5 = 0",
              true, 0, 0, adm.massey);
    }
    int code = emit(rep, cfg);
    std::cout << "# clearing factor: " << res.clearing_factor.get_str() << "\n";
    std::cout << "# kernel basis:";
    for (auto& b : res.kernel_basis) {
      std::cout << " (";
      for (std::size_t i = 0; i < b.size(); ++i)
        std::cout << b[i].get_str() << (i + 1 < b.size() ? "," : ")");
    }
    std::cout << "\n# candidates (" << res.candidates.size() << "):";
    for (std::size_t i = 0; i < std::min<std::size_t>(res.candidates.size(), 8);
         ++i) {
      std::cout << " (";
      const auto& a = res.candidates[i].a;
      for (std::size_t jx = 0; jx < a.size(); ++jx)
        std::cout << a[jx].get_str() << (jx + 1 < a.size() ? "," : ")");
    }
    std::cout << "\n";
    return cfg.check ? code : kExitOk;
  } catch (const topo::degenerate_kahler& e) {
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const topo::no_solutions& e) {
    std::cerr << e.what() << "\n";
    return cfg.check ? kExitCheckFailed : kExitOk;
  }
}

int cmd_betti(const RunConfig& cfg, long p) {
  Report rep;
  rep.command = "betti";
  std::vector<long> base;
  std::vector<std::vector<long>> ranks;
  long expect_b2 = -1, expect_b3 = -1;
  try {
    if (cfg.preset == "cAp") {
      io::json preset = load_preset("cAp");
      if (p <= 0) p = preset.value("p", 5L);
      base = {1, 0, p, 0, 0, 0, 0};
      for (const auto& s : preset.at("steps"))
        ranks.push_back(s.at("cup_rank").get<std::vector<long>>());
      expect_b2 = p - 2;
      expect_b3 = 2 * p - 1;
    } else if (!cfg.input.empty()) {
      io::json j = io::load_file(cfg.input);
      base = j.at("betti").get<std::vector<long>>();
      for (const auto& s : j.at("steps"))
        ranks.push_back(s.at("cup_rank").get<std::vector<long>>());
    } else {
      std::cerr << "betti: need --preset cAp or --input\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitData;
  }

  std::vector<long> cur = base;
  try {
    for (std::size_t s = 0; s < ranks.size(); ++s)
      cur = topo::gysin_betti({cur, ranks[s]});
  } catch (const topo::inconsistent_ranks& e) {
    std::cerr << e.what() << "\n";
    return kExitData;
  }

  std::ostringstream detail;
  for (std::size_t i = 0; i < cur.size(); ++i)
    detail << "b" << i << "=" << cur[i] << (i + 1 < cur.size() ? " " : "");
  long chi = 0;
  int sgn = 1;
  for (long v : cur) {
    chi += sgn * v;
    sgn = -sgn;
  }
  rep.add("euler-characteristic", "alternating sum vanishes for torus bundles",
          chi == 0, double(chi), 0, detail.str());
  if (expect_b2 >= 0) {
    rep.add("b2", "b2 = p - 2", cur.size() > 2 && cur[2] == expect_b2,
            double(cur[2]), double(expect_b2));
    rep.add("b3", "b3 = 2p - 1", cur.size() > 3 && cur[3] == expect_b3,
            double(cur[3]), double(expect_b3));
  }
  if (!topo::poincare_symmetric(cur))
    rep.add("poincare-symmetry", "advisory: open total spaces fail this", true,
            0, 0, "asymmetric (expected for open bases)");
  int code = emit(const_cast<Report&>(rep), cfg);
  return cfg.check ? code : kExitOk;
}

int cmd_grid(const RunConfig& cfg, const std::string& suite) {
  Report rep;
  rep.command = "grid/" + suite;
  su3::SU3Structure s = su3::standard_su3();

  if (suite == "dirac" || suite == "order") {
    std::vector<double> hs, errs;
    for (int N : {16, 32, 64}) {
      grid::GridChart c{6, N, 1.0, {1, 2, 3}};
      grid::GridField f =
          grid::make_field(c, 0, [](const std::array<double, 8>& x, Mask) {
            return std::sin(2 * M_PI * x[0]);
          });
      grid::GridField df = grid::fd_d(f);
      double worst = 0;
      for (std::size_t pt = 0; pt < df.npoints(); ++pt) {
        auto x = df.coords(pt);
        worst = std::max(worst,
                         std::fabs(df.at(pt, grid::component_rank(6, 1, 1)) -
                                   2 * M_PI * std::cos(2 * M_PI * x[0])));
      }
      hs.push_back(c.h());
      errs.push_back(worst);
    }
    double order = grid::fit_order(hs, errs);
    rep.add("fd-order", "central differences are second order",
            order > 1.8 && order < 2.2, order, 2.0);

    double worst_dev = 0;
    for (int N : {16, 32}) {
      grid::GridChart c{6, N, 1.0, {1, 2, 3}};
      auto mk = [&](int deg, double ph) {
        return grid::make_field(c, deg,
                                [=](const std::array<double, 8>& x, Mask m) {
                                  return std::sin(2 * M_PI * x[0] + ph +
                                                  0.2 * double(m)) *
                                         std::cos(2 * M_PI * x[1]);
                                });
      };
      grid::SpinorField u{mk(0, 0.1), mk(0, 0.4), mk(1, 0.7)};
      grid::SpinorField d2 = grid::dirac_flat(grid::dirac_flat(u, s), s);
      grid::SpinorField lap = grid::laplacian(u);
      worst_dev = std::max(worst_dev,
                           grid::spinor_l2(grid::spinor_sub(d2, lap)) /
                               grid::spinor_l2(lap));
    }
    rep.add("dirac-squared", "Dirac^2 = Hodge Laplacian on the flat torus",
            worst_dev <= 1e-12, worst_dev, 1e-12,
            "stencil-level identity, inside the h^2 budget");

    grid::GridChart c{6, cfg.n, 1.0, {1, 2, 3}};
    grid::GridField h =
        grid::make_field(c, 0, [](const std::array<double, 8>& x, Mask) {
          return std::sin(2 * M_PI * x[0]) * std::cos(2 * M_PI * x[1]);
        });
    grid::PointwiseOp j1 = grid::PointwiseOp::from_action(
        6, 1, 1, [&](const Form& e) { return s.j1(e); });
    double n24 = grid::l2_norm(grid::fd_dstar(j1.apply(grid::fd_d(h))));
    rep.add("codifferential-J-d", "d*(J dh) = 0 for closed Kahler form",
            n24 <= c.h() * c.h(), n24, c.h() * c.h());
  } else if (suite == "closure") {
    grid::GridChart c{8, cfg.n, 1.0, {1, 2, 3}};
    grid::Spin7Fields f{c,
                        grid::GridField(c, 2),
                        grid::GridField(c, 3),
                        grid::GridField(c, 3),
                        grid::GridField(c, 1),
                        grid::GridField(c, 1),
                        grid::GridField(c, 0),
                        grid::GridField(c, 0),
                        grid::GridField(c, 0)};
    for (std::size_t pt = 0; pt < f.p.npoints(); ++pt) {
      auto x = f.p.coords(pt);
      Mat A = Mat::identity(6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          A(i, j) += Scalar(0.06 *
                            std::sin(2 * M_PI * (x[0] + 0.1 * i + 0.2 * j)) *
                            std::cos(2 * M_PI * x[1]));
      auto st = su3::make_su3(pullback(A, su3::standard_omega()).to_float(),
                              pullback(A, su3::standard_re_omega()).to_float());
      f.omega.set_form_at(pt, st.omega.lifted(8));
      f.re.set_form_at(pt, st.re_omega.lifted(8));
      f.im.set_form_at(pt, st.im_omega.lifted(8));
      Form eh(6, 1), th(6, 1);
      for (int i = 0; i < 6; ++i) {
        eh.add(Mask(1) << i, Scalar(0.1 * std::sin(2 * M_PI * x[1] + i)));
        th.add(Mask(1) << i, Scalar(0.1 * std::cos(2 * M_PI * x[2] + i)));
      }
      f.eta_h.set_form_at(pt, eh.lifted(8));
      f.theta_h.set_form_at(pt, th.lifted(8));
      f.p.at(pt, 0) = 1.0 + 0.2 * std::sin(2 * M_PI * x[0]);
      f.q.at(pt, 0) = 1.0 + 0.2 * std::cos(2 * M_PI * x[1]);
      f.r.at(pt, 0) = 0.1 * std::sin(2 * M_PI * x[2]);
    }
    grid::ClosureReport cr = grid::spin7_closure(f);
    rep.add("closure-regroup", "d Phi decomposes by vertical type",
            cr.grouped_defect <= 1e-12 * (1 + cr.dphi_norm), cr.grouped_defect,
            1e-12 * (1 + cr.dphi_norm));
    rep.add("closure-nontrivial", "generic data has torsion",
            cr.dphi_norm > 1e-3, cr.dphi_norm, 1e-3);
  } else if (suite == "first-order") {
    Form t8(6, 2);
    t8.set(indices_mask({1, 2}), Scalar(1));
    t8.set(indices_mask({3, 4}), Scalar(-1));
    double rsd = grid::first_order_ansatz_residual(
        cfg.n >= 8 ? cfg.n : 32, s, t8, Scalar(2));
    rep.add("first-order-ansatz", "d rho = -(1/p0) dtheta1 ^ w", rsd <= 1e-12,
            rsd, 1e-12);
  } else if (suite == "se" || suite == "cone") {
    geom::SasakiEinsteinModel m;
    std::mt19937_64 g(cfg.seed);
    std::normal_distribution<double> nd;
    double worst_se = 0, worst_cone = 0, worst_ma = 0;
    for (int i = 0; i < 100; ++i) {
      std::array<double, 6> x{};
      double n2 = 0;
      for (auto& v : x) v = nd(g);
      for (auto v : x) n2 += v * v;
      for (auto& v : x) v /= std::sqrt(n2);
      auto r = geom::se_structure_check(m, x);
      worst_se = std::max({worst_se, r.r1, r.r2, r.r3});
      auto ce = geom::cone_structure(m, x, 1.0 + 0.001 * i);
      worst_cone =
          std::max({worst_cone, ce.d_omega_norm, ce.d_re_norm, ce.d_im_norm});
      if (i % 10 == 0) {
        auto c1 = geom::cone_structure(m, x, 1.0);
        auto sl = su3::make_su3(c1.omega_c, c1.re_c);
        worst_ma = std::max(worst_ma,
                            std::fabs(sl.monge_ampere_defect().to_double()));
      }
    }
    rep.add("link-structure", "d eta = 2 w1, d w2 = -3 eta^w3, d w3 = 3 eta^w2",
            worst_se <= 1e-10, worst_se, 1e-10);
    rep.add("cone-closure", "d w_C = 0, d Omega_C = 0", worst_cone <= 1e-9,
            worst_cone, 1e-9);
    rep.add("cone-slice", "unit slice satisfies the volume normalization",
            worst_ma <= 1e-10, worst_ma, 1e-10);
  } else if (suite == "volume") {
    std::mt19937_64 g(cfg.seed);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    double lo = 1e9, hi = -1e9;
    for (int t = 0; t < 10; ++t) {
      geom::AT2CModel m{Scalar(u(g)), Scalar(u(g)), Scalar(u(g)),
                        Scalar(u(g) - 1.5)};
      double e = geom::volume_growth_exponent(m);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    rep.add("volume-growth", "ball volume grows like r^6", lo > 5.9 && hi < 6.1,
            hi, 6.1, "min " + std::to_string(lo));
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return kExitUsage;
  }
  return emit(rep, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and computation toolkit for invariant Cayley "
               "forms on two-torus bundles"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig cfg;
  app.add_option("--backend", cfg.backend)->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", cfg.tol);
  app.add_option("--n", cfg.n);
  app.add_option("--seed", cfg.seed);
  app.add_option("--preset", cfg.preset);
  app.add_option("--input", cfg.input);
  app.add_option("--output", cfg.output);
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"table", "record"}));
  app.add_flag("--check", cfg.check);
  app.add_flag("--full", cfg.full);

  auto* vi = app.add_subcommand("verify-identities",
                                "run the exact pointwise identity battery");
  int structures = 200;
  std::string mutate;
  vi->add_option("--structures", structures);
  vi->add_option("--mutate-sign", mutate)->check(CLI::IsMember({"re_omega"}));

  auto* tor = app.add_subcommand("torsion", "evaluate closure residuals of a jet");

  auto* scan = app.add_subcommand("scan", "integral scan against an intersection form");
  std::string kahler_csv;
  long max_coeff = 50, seifert_weight = 0;
  int seifert_coord = 0;
  scan->add_option("--kahler", kahler_csv);
  scan->add_option("--max-coeff", max_coeff);
  scan->add_option("--seifert-coord", seifert_coord);
  scan->add_option("--seifert-weight", seifert_weight);

  auto* betti = app.add_subcommand("betti", "push Betti numbers through bundle towers");
  long pval = 0;
  betti->add_option("--p", pval);

  auto* gridc = app.add_subcommand("grid", "discrete verification suites");
  std::string suite = "dirac";
  gridc->add_option("--suite", suite)
      ->check(CLI::IsMember({"dirac", "order", "closure", "first-order", "se",
                             "cone", "volume"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (vi->parsed()) return cmd_verify_identities(cfg, structures, mutate);
    if (tor->parsed()) {
      if (cfg.input.empty()) {
        std::cerr << "torsion: need --input\n";
        return kExitUsage;
      }
      return cmd_torsion(cfg);
    }
    if (scan->parsed())
      return cmd_scan(cfg, kahler_csv, max_coeff, seifert_coord, seifert_weight);
    if (betti->parsed()) return cmd_betti(cfg, pval);
    if (gridc->parsed()) return cmd_grid(cfg, suite);
  } catch (const io::malformed_input& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
