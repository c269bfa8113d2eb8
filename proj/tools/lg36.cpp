#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lg36/dual_quartic.hpp"
#include "lg36/serialize.hpp"
#include "lg36/verify.hpp"

using namespace lg36;

namespace {

// Bad input, unreadable files, unsupported field: exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_config_error(ErrorCode c) {
  return c == ErrorCode::kInvalidArgument || c == ErrorCode::kSchemaMismatch || c == ErrorCode::kFieldMismatch;
}

struct Options {
  std::string prime;
  std::uint64_t seed = 1;
  std::string out;
  bool pretty = false;
};

std::uint64_t prime_of(const std::string& s) {
  std::uint64_t p = 0;
  try {
    std::size_t pos = 0;
    p = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ConfigError("--prime must be an integer or Q, got '" + s + "'");
  }
  if (p <= 3 || p > 1000000 || !is_prime(p)) throw ConfigError("--prime must be a prime with 3 < p <= 10^6");
  return p;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void emit(const Options& o, const json& j) {
  const std::string text = j.dump(o.pretty ? 2 : -1) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << text;
}

template <class S>
Vec<S> w_from_json(const SymplecticSpace<S>& V, const json& j) {
  if (j.contains("w")) {
    auto w = vec_from_json<S>(j.at("w"), V.field());
    if (w.size() != V.w_dim()) throw Error(ErrorCode::kSchemaMismatch, "w needs 14 coordinates");
    return w;
  }
  return sigma_point_from_json(V, j).plucker.coords();
}

template <class S>
std::array<SigmaPoint<S>, 3> read_triple(const SymplecticSpace<S>& V, const std::string& path) {
  const json j = read_json(path);
  check_envelope<S>(j, V.field());
  return triple_from_json(V, j);
}

// --- subcommand bodies ------------------------------------------------------

struct SampleArgs {
  std::string kind = "sigma";
};

template <class S>
int cmd_sample(const FieldOf<S>& F, const Options& o, const SampleArgs& a) {
  const SymplecticSpace<S> V(F);
  json body;
  if (a.kind == "sigma") {
    const auto p = sample_sigma(V, o.seed);
    body = sigma_point_json(p);
    body["w"] = to_json<S>(p.plucker.coords());
  } else if (a.kind == "omega") {
    const auto s = sample_omega(V, o.seed);
    body = {{"w", to_json<S>(s.w)}, {"x", to_json<S>(s.x)}};
  } else if (a.kind == "generic") {
    body = {{"w", to_json<S>(sample_generic(V, o.seed))}};
  } else if (a.kind == "triple") {
    Rng rng(o.seed);
    for (int k = 0; k < 50; ++k) {
      std::array<SigmaPoint<S>, 3> xi;
      for (auto& p : xi) p = sigma_point(V, random_lagrangian(V, rng));
      if (pairwise_transverse(xi[0].lagrangian, xi[1].lagrangian, xi[2].lagrangian)) {
        body = triple_json(xi);
        break;
      }
    }
    if (body.is_null()) throw Error(ErrorCode::kNotTransverse, "no transverse triple in 50 draws");
  } else {
    throw ConfigError("--kind must be sigma, omega, generic or triple");
  }
  body["kind"] = a.kind;
  emit(o, envelope<S>(F, body));
  return 0;
}

template <class S>
int cmd_stratum(const FieldOf<S>& F, const Options& o, const std::string& in) {
  const SymplecticSpace<S> V(F);
  const json j = read_json(in);
  check_envelope<S>(j, F);
  const auto w = w_from_json(V, j);
  const auto st = stratum(V, CSpan<S>(w));
  json body{{"stratum", std::string(stratum_name(st.kind))}};
  if (st.lagrangian) body["lagrangian"] = to_json(*st.lagrangian);
  if (st.x_omega) body["x"] = to_json<S>(*st.x_omega);
  if (st.tangency) body["tangency"] = to_json(*st.tangency);
  if (st.kind == Stratum::kGeneric || st.kind == Stratum::kFSmoothLocus) body["lambda"] = st.lambda.to_string();
  emit(o, envelope<S>(F, body));
  return 0;
}

template <class S>
int cmd_cubic_through(const FieldOf<S>& F, const Options& o, const std::vector<std::string>& paths) {
  const SymplecticSpace<S> V(F);
  if (paths.size() != 3) throw ConfigError("--points needs three files");
  std::vector<SigmaPoint<S>> pts;
  for (const auto& p : paths) {
    const json j = read_json(p);
    check_envelope<S>(j, F);
    pts.push_back(sigma_point_from_json(V, j));
  }
  const auto C = cubic_through_triple(V, pts[0], pts[1], pts[2]);
  emit(o, envelope<S>(F, cubic_json(C)));
  return 0;
}

template <class S>
int cmd_fibration_section(const FieldOf<S>& F, const Options& o, const std::vector<std::string>& triples, int dim) {
  const SymplecticSpace<S> V(F);
  std::vector<Vec<S>> pts;
  for (const auto& t : triples)
    for (const auto& p : read_triple(V, t)) pts.push_back(p.plucker.coords());
  emit(o, envelope<S>(F, tower_json(section_through(V, pts, dim, o.seed))));
  return 0;
}

template <class S>
SectionTower<S> read_section(const FieldOf<S>& F, const std::string& path) {
  const json j = read_json(path);
  check_envelope<S>(j, F);
  return tower_from_json<S>(j, F);
}

template <class S>
int cmd_fibration_eval(const FieldOf<S>& F, const Options& o, const std::string& section, const std::string& triple) {
  const SymplecticSpace<S> V(F);
  const auto T = read_section<S>(F, section);
  emit(o, envelope<S>(F, fiber_json(fibration_value(V, read_triple(V, triple), T))));
  return 0;
}

template <class S>
int cmd_fibration_same(const FieldOf<S>& F, const Options& o, const std::string& section, const std::string& a,
                       const std::string& b) {
  const SymplecticSpace<S> V(F);
  const auto T = read_section<S>(F, section);
  const auto ha = fibration_value(V, read_triple(V, a), T), hb = fibration_value(V, read_triple(V, b), T);
  emit(o, envelope<S>(F, {{"same", ha == hb}, {"h_a", to_json<S>(ha.h.normalized().coords())}, {"h_b", to_json<S>(hb.h.normalized().coords())}}));
  return 0;
}

int cmd_dq_interpolate(const PrimeField& F, const Options& o, std::size_t samples, unsigned threads) {
  const SymplecticSpace<Fp> V(F);
  const auto Q = interpolate_dual_quartic(sample_tangent_hyperplanes(V, o.seed, samples, threads));
  json body = quartic_json(Q);
  body["fingerprint"] = quartic_fingerprint(Q);
  emit(o, envelope<Fp>(F, body));
  return 0;
}

int cmd_dq_restrict(const PrimeField& F, const Options& o, const std::string& qpath, const std::string& lpath) {
  const json jq = read_json(qpath), jl = read_json(lpath);
  check_envelope<Fp>(jq, F);
  check_envelope<Fp>(jl, F);
  const auto Q = quartic_from_json<Fp>(jq, F);
  const Matrix<Fp> L = subspace_from_json<Fp>(jl, F).basis();
  if (L.cols() != Q.nvars) throw Error(ErrorCode::kSchemaMismatch, "subspace and quartic dimensions differ");
  emit(o, envelope<Fp>(F, quartic_json(restrict_quartic(Q, L))));
  return 0;
}

int cmd_group_setup(const PrimeField& F, const Options& o) {
  const SymplecticSpace<Fp> V(F);
  const auto ideal = build_quadric_ideal(V, derive_seed(o.seed, 0x1dea1));
  int resamples = 0;
  const auto X = marked_fano_setup(V, o.seed, ideal, 50, &resamples);
  json body = fano_json(X);
  body["resamples"] = resamples;
  emit(o, envelope<Fp>(F, body));
  return 0;
}

int cmd_group_chain(const PrimeField& F, const Options& o, const std::string& setup, const std::string& word) {
  const SymplecticSpace<Fp> V(F);
  const json j = read_json(setup);
  check_envelope<Fp>(j, F);
  for (char c : word)
    if (c != 'x' && c != 'y' && c != 'z') throw ConfigError("words are strings over {x, y, z}");
  const auto ideal = build_quadric_ideal(V, derive_seed(o.seed, 0x1dea1));
  const auto X = fano_from_json(V, j, ideal);
  const auto C = chain_apply(V, X, X.C0, word);
  const auto h = fibration_value_of_curve(C, X.tower, F);
  const auto fc = formal_class(word);
  json body = cubic_json(C);
  body["word"] = word;
  body["h"] = to_json<Fp>(h.h.normalized().coords());
  body["equals_C0"] = curves_equal(C, X.C0, F);
  body["formal_class"] = {{"curve", fc.curve}, {"x", fc.marks[0]}, {"y", fc.marks[1]}, {"z", fc.marks[2]},
                          {"c_inf", fc.c_inf}};
  emit(o, envelope<Fp>(F, body));
  return 0;
}

int print_report(const Options& o, const VerificationReport& r, bool as_json) {
  if (as_json) {
    emit(o, r.to_json());
  } else if (o.out.empty()) {
    std::cout << r.text();
  } else {
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << r.text();
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lg36: exact geometry of the Lagrangian Grassmannian LG(3,6)"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  const char* env = std::getenv("LG36_PRIME");
  o.prime = env && *env ? env : "10007";
  app.add_option("--prime", o.prime, "prime p for F_p, or Q (default 10007 or $LG36_PRIME)");
  app.add_option("--seed", o.seed, "master seed");
  app.add_option("--out", o.out, "write output to a file instead of stdout");
  app.add_flag("--pretty", o.pretty, "indent JSON output");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "random point of a stratum, or a transverse triple");
  sample->add_option("--kind", sample_args.kind, "sigma | omega | generic | triple");

  std::string in;
  auto* strat = app.add_subcommand("stratum", "stratum of a point of P(W)");
  strat->add_option("--in", in, "point JSON with \"w\" or \"lagrangian\"")->required();

  auto* cubic = app.add_subcommand("cubic", "twisted cubics");
  cubic->require_subcommand(1);
  std::vector<std::string> points;
  auto* through = cubic->add_subcommand("through", "the twisted cubic through three Sigma points");
  through->add_option("--points", points, "three point files")->required()->expected(3);

  auto* fib = app.add_subcommand("fibration", "the fibration Hilb3 S -> P^3");
  fib->require_subcommand(1);
  std::vector<std::string> triples;
  int section_dim = 9;
  std::string section, triple, ta, tb;
  auto* fsec = fib->add_subcommand("section", "random section P^9 (or P^10) through the points of triples");
  fsec->add_option("--triple", triples, "triple files")->required();
  fsec->add_option("--dim", section_dim, "9 or 10")->check(CLI::IsMember({9, 10}));
  auto* feval = fib->add_subcommand("eval", "fibration value h of a triple");
  feval->add_option("--section", section)->required();
  feval->add_option("--triple", triple)->required();
  auto* fsame = fib->add_subcommand("same-fiber", "whether two triples lie in one fiber");
  fsame->add_option("--section", section)->required();
  fsame->add_option("--a", ta)->required();
  fsame->add_option("--b", tb)->required();

  auto* dq = app.add_subcommand("dual-quartic", "the dual quartic of the tangent hyperplanes");
  dq->require_subcommand(1);
  std::size_t samples = 2600;
  unsigned threads = 0;
  std::string qpath, lpath;
  auto* dqi = dq->add_subcommand("interpolate", "interpolate the quartic from tangent hyperplanes");
  dqi->add_option("--samples", samples);
  dqi->add_option("--threads", threads, "0 = hardware concurrency");
  auto* dqr = dq->add_subcommand("restrict", "restrict the quartic to a linear subspace");
  dqr->add_option("--quartic", qpath)->required();
  dqr->add_option("--subspace", lpath, "{\"basis\": k x 14}")->required();

  auto* grp = app.add_subcommand("group", "marked Fano setups and chains");
  grp->require_subcommand(1);
  std::string setup, word;
  std::size_t setups = 50;
  auto* gsetup = grp->add_subcommand("setup", "build a marked Fano setup");
  auto* gchain = grp->add_subcommand("chain", "apply a chain word to C0");
  gchain->add_option("--setup", setup)->required();
  gchain->add_option("--word", word)->required();
  auto* gverify = grp->add_subcommand("verify", "run the group-law suite");
  gverify->add_option("--setups", setups);
  bool gjson = false;
  gverify->add_flag("--json", gjson);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  bool vjson = false;
  ver->add_option("--suite", suite, "core | secants | cubics | fibration | dual-quartic | group | all");
  ver->add_flag("--json", vjson, "JSON report");
  ver->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const bool rational = o.prime == "Q" || o.prime == "q";
    auto with_field = [&](auto&& f) -> int {
      if (rational) return f(RationalField());
      return f(PrimeField(prime_of(o.prime)));
    };
    auto prime_only = [&](const char* what) {
      if (rational) throw ConfigError(std::string(what) + " runs over F_p only");
      return PrimeField(prime_of(o.prime));
    };

    if (*sample)
      return with_field([&](const auto& F) {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        return cmd_sample<S>(F, o, sample_args);
      });
    if (*strat)
      return with_field([&](const auto& F) {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        return cmd_stratum<S>(F, o, in);
      });
    if (*through)
      return with_field([&](const auto& F) {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        return cmd_cubic_through<S>(F, o, points);
      });
    if (*fsec)
      return with_field([&](const auto& F) {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        return cmd_fibration_section<S>(F, o, triples, section_dim);
      });
    if (*feval)
      return with_field([&](const auto& F) {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        return cmd_fibration_eval<S>(F, o, section, triple);
      });
    if (*fsame)
      return with_field([&](const auto& F) {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        return cmd_fibration_same<S>(F, o, section, ta, tb);
      });
    if (*dqi) return cmd_dq_interpolate(prime_only("dual-quartic interpolate"), o, samples, threads);
    if (*dqr) return cmd_dq_restrict(prime_only("dual-quartic restrict"), o, qpath, lpath);
    if (*gsetup) return cmd_group_setup(prime_only("group setup"), o);
    if (*gchain) return cmd_group_chain(prime_only("group chain"), o, setup, word);
    if (*gverify || *ver) {
      SessionConfig cfg;
      cfg.prime = prime_only("verify").characteristic();
      cfg.seed = o.seed;
      cfg.threads = threads;
      if (*gverify) {
        cfg.group_setups = setups;
        suite = "group";
      }
      const auto names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw ConfigError("unknown suite '" + suite + "'");
      return print_report(o, run_suite(cfg, suite), *gverify ? gjson : vjson);
    }
  } catch (const ConfigError& e) {
    std::cerr << "lg36: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "lg36: " << e.what() << "\n";
    return is_config_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "lg36: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
