#include "lg36/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "lg36/dual_quartic.hpp"

namespace lg36 {

namespace {

using Clock = std::chrono::steady_clock;
using V6 = SymplecticSpace<Fp>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t stream_of(const std::string& id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Shared state across suites: the quadric ideal and the dual quartic are
// expensive and used by several suites.
struct Context {
  const SessionConfig& cfg;
  V6 V;
  std::optional<QuadricIdeal<Fp>> ideal_;
  std::optional<QuarticForm<Fp>> quartic_;
  std::map<std::string, std::string>& constants;

  std::uint64_t seed_for(const std::string& id, std::uint64_t trial) const {
    return derive_seed(derive_seed(cfg.seed, stream_of(id)), trial);
  }
  const QuadricIdeal<Fp>& ideal() {
    if (!ideal_) ideal_ = build_quadric_ideal(V, seed_for("ideal", 0));
    return *ideal_;
  }
  // Interpolated from seed stream "dual-quartic/0".
  const QuarticForm<Fp>& quartic() {
    if (!quartic_) {
      const auto s = sample_tangent_hyperplanes(V, seed_for("dual-quartic", 0), cfg.dq_samples, cfg.threads);
      quartic_ = interpolate_dual_quartic(s);
      constants["quartic_fingerprint"] = quartic_fingerprint(*quartic_);
    }
    return *quartic_;
  }
};

class Suite {
 public:
  Suite(Context& ctx, SuiteReport& rep) : ctx_(ctx), rep_(rep) {}

  // body fills passed/total (and optionally required/detail). A thrown error
  // fails the check and is reported in its detail.
  void check(const std::string& id, const std::string& description, const std::function<void(CheckResult&)>& body) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.id = id;
    r.description = description;
    r.required = std::numeric_limits<std::size_t>::max();
    try {
      body(r);
      if (r.required == std::numeric_limits<std::size_t>::max()) r.required = r.total;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
      r.required = r.total + 1;
    }
    r.seconds = since(t0);
    rep_.checks.push_back(std::move(r));
  }

  // Runs f(seed) on derived seeds until it returns without a resamplable
  // error; false once the budget is spent.
  bool attempt(const std::string& id, std::uint64_t trial, const std::function<void(std::uint64_t)>& f) {
    const std::uint64_t base = ctx_.seed_for(id, trial);
    for (int a = 0; a < ctx_.cfg.resample_budget; ++a) {
      try {
        f(derive_seed(base, static_cast<std::uint64_t>(a)));
        return true;
      } catch (const Error& e) {
        if (!is_resamplable(e.code())) throw;
        ++rep_.resamples;
      }
    }
    return false;
  }

  Context& ctx() { return ctx_; }
  void add_resamples(std::size_t n) { rep_.resamples += n; }

 private:
  Context& ctx_;
  SuiteReport& rep_;
};

std::array<SigmaPoint<Fp>, 3> transverse_triple(const V6& V, Rng& rng) {
  std::array<SigmaPoint<Fp>, 3> xi;
  for (auto& p : xi) p = sigma_point(V, random_lagrangian(V, rng));
  if (!pairwise_transverse(xi[0].lagrangian, xi[1].lagrangian, xi[2].lagrangian))
    throw Error(ErrorCode::kNotTransverse, "triple is not pairwise transverse");
  return xi;
}

std::vector<Vec<Fp>> pluckers(const std::array<SigmaPoint<Fp>, 3>& xi) {
  return {xi[0].plucker.coords(), xi[1].plucker.coords(), xi[2].plucker.coords()};
}

bool same_points(const std::array<SigmaPoint<Fp>, 3>& a, const std::array<SigmaPoint<Fp>, 3>& b) {
  for (const auto& p : a) {
    bool found = false;
    for (const auto& q : b) found = found || p.plucker == q.plucker;
    if (!found) return false;
  }
  return true;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

// ---------------------------------------------------------------------------

void suite_core(Suite& S) {
  Context& ctx = S.ctx();
  const V6& V = ctx.V;
  const auto& F = V.field();

  S.check("core.w_dim", "dim ker d_alpha = 14", [&](CheckResult& r) {
    r.total = 1;
    bool ok = V.w_dim() == 14 && rank(V.d_alpha()) == 6;
    for (std::size_t i = 0; i < V.w_dim(); ++i) ok = ok && V.in_w(V.w_basis().row_span(i));
    r.passed = ok ? 1 : 0;
    r.detail = "dim W = " + std::to_string(V.w_dim());
  });

  S.check("core.exp_chart", "exp-chart samples lie on Sigma, in P(W) and on the quadric ideal", [&](CheckResult& r) {
    const auto& I = ctx.ideal();
    for (std::size_t i = 0; i < ctx.cfg.sigma_samples; ++i) {
      const auto p = sample_sigma(V, ctx.seed_for("core.exp_chart", i));
      const auto& w = p.plucker.coords();
      const bool ok = on_sigma(V, w).has_value() && V.in_w(plucker20(p.lagrangian)) && I.vanishes_at(w);
      r.passed += ok;
      ++r.total;
    }
  });

  S.check("core.n_quad", "quadric ideal dimension N_quad = 21 on independent seeds", [&](CheckResult& r) {
    std::vector<std::size_t> ns;
    for (std::size_t k = 0; k < ctx.cfg.ideal_seeds; ++k) {
      const auto n = build_quadric_ideal(V, ctx.seed_for("core.n_quad", k)).size();
      ns.push_back(n);
      r.passed += n == 21;
      ++r.total;
    }
    std::string d = "N_quad:";
    for (auto n : ns) d += " " + std::to_string(n);
    r.detail = d;
    ctx.constants["N_quad"] = std::to_string(ctx.ideal().size());
  });

  S.check("core.normalization", "lambda(e123 + e456) = 1", [&](CheckResult& r) {
    Matrix<Fp> A(3, 6), B(3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      A(i, i) = F.one();
      B(i, i + 3) = F.one();
    }
    const auto w = add(V.to_w(plucker20(A)), CSpan<Fp>(V.to_w(plucker20(B))));
    r.total = 1;
    r.passed = hitchin_endo(V, CSpan<Fp>(w)).lambda == F.one();
  });

  S.check("core.tangent", "tangent spaces are P^6 through p, isotropic for every quadric of Sigma", [&](CheckResult& r) {
    const auto& I = ctx.ideal();
    for (std::uint64_t i = 0; i < 20; ++i) {
      Rng rng(ctx.seed_for("core.tangent", i));
      const auto p = sigma_point(V, random_lagrangian(V, rng));
      const auto T = tangent_space(V, p, rng);
      bool ok = T.dim() == 6 && T.contains(p.plucker.coords());
      for (std::size_t k = 0; ok && k < I.size(); ++k)
        for (std::size_t j = 0; ok && j < T.basis().rows(); ++j)
          ok = V6::bilinear(I.mats[k], p.plucker.coords(), T.basis().row_span(j)).is_zero();
      r.passed += ok;
      ++r.total;
    }
  });

  S.check("core.strata", "constructed witnesses receive their stratum labels", [&](CheckResult& r) {
    const auto& I = ctx.ideal();
    (void)I;
    for (std::uint64_t i = 0; i < 20; ++i) {
      const auto p = sample_sigma(V, ctx.seed_for("core.strata/sigma", i));
      r.passed += stratum(V, p.plucker.coords()).kind == Stratum::kSigma;
      const auto om = sample_omega(V, ctx.seed_for("core.strata/omega", i));
      r.passed += stratum(V, CSpan<Fp>(om.w)).kind == Stratum::kOmega;
      Rng rng(ctx.seed_for("core.strata/tangent", i));
      const auto T = tangent_space(V, p, rng);
      const auto w = add(random_combination(T.basis(), F, rng), p.plucker.coords());
      const auto st = stratum(V, CSpan<Fp>(w));
      r.passed += st.kind == Stratum::kFSmoothLocus ||
                  (rank(stack(row_matrix(w), row_matrix(p.plucker.coords()))) == 1 && st.kind == Stratum::kSigma);
      const auto g = sample_generic(V, ctx.seed_for("core.strata/generic", i));
      r.passed += stratum(V, CSpan<Fp>(g)).kind == Stratum::kGeneric;
      r.total += 4;
    }
  });
}

// ---------------------------------------------------------------------------

void suite_secants(Suite& S) {
  Context& ctx = S.ctx();
  const V6& V = ctx.V;
  const auto& F = V.field();

  auto bisecant_pair = [&](std::uint64_t seed) {
    Rng rng(seed);
    auto p = sigma_point(V, random_lagrangian(V, rng));
    auto q = sigma_point(V, random_lagrangian(V, rng));
    const Vec<Fp> w = axpy(scaled(p.plucker.coords(), F.random_nonzero(rng)), F.random_nonzero(rng),
                           q.plucker.coords());
    return std::make_tuple(std::move(p), std::move(q), w);
  };

  S.check("secants.bisecant", "off-Sigma points on bisecants decompose to the exact point pair", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < ctx.cfg.bisecant_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("secants.bisecant", i, [&](std::uint64_t seed) {
        const auto [p, q, w] = bisecant_pair(seed);
        const auto b = bisecant_decompose(V, CSpan<Fp>(w));
        ok = !b.tangent && ((b.p.plucker == p.plucker && b.q.plucker == q.plucker) ||
                            (b.p.plucker == q.plucker && b.q.plucker == p.plucker));
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("secants.length2", "bisecant lines meet the quadric-ideal zero locus in length exactly 2", [&](CheckResult& r) {
    const auto& I = ctx.ideal();
    for (std::uint64_t i = 0; i < ctx.cfg.bisecant_length_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("secants.bisecant", i, [&](std::uint64_t seed) {
        const auto [p, q, w] = bisecant_pair(seed);
        std::vector<BinaryForm<Fp>> forms;
        for (std::size_t k = 0; k < I.size(); ++k) {
          const Fp a = I.eval(k, p.plucker.coords()), c = I.eval(k, q.plucker.coords());
          const Fp b = F.from_int(2) * V6::bilinear(I.mats[k], p.plucker.coords(), q.plucker.coords());
          forms.push_back({UniPoly<Fp>(std::vector<Fp>{a, b, c}), 2});
        }
        const auto g = binary_gcd(forms);
        ok = g && g->first.degree() + g->second == 2 && !on_sigma(V, CSpan<Fp>(w));
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("secants.tangent", "points on tangent lines have lambda = 0 and recover the tangency point", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < ctx.cfg.tangent_trials; ++i) {
      Rng rng(ctx.seed_for("secants.tangent", i));
      const auto p = sigma_point(V, random_lagrangian(V, rng));
      const auto T = tangent_space(V, p, rng);
      Vec<Fp> v;
      do v = random_combination(T.basis(), F, rng);
      while (rank(stack(row_matrix(v), row_matrix(p.plucker.coords()))) < 2);
      bool ok = hitchin_endo(V, CSpan<Fp>(v)).lambda.is_zero();
      const auto b = bisecant_decompose(V, CSpan<Fp>(v));
      ok = ok && b.tangent && b.p.plucker == p.plucker;
      r.passed += ok;
      ++r.total;
    }
  });

  S.check("secants.omega", "Omega witnesses recover x(omega); Q_omega points are Lagrangian planes through it",
          [&](CheckResult& r) {
            const auto& I = ctx.ideal();
            std::size_t qpoints = 0;
            for (std::uint64_t i = 0; i < ctx.cfg.omega_trials; ++i) {
              bool ok = false;
              const bool done = S.attempt("secants.omega", i, [&](std::uint64_t seed) {
                const auto om = sample_omega(V, seed);
                const auto wit = omega_witness(V, I, CSpan<Fp>(om.w));
                ok = ProjPoint<Fp>(wit.x_omega) == ProjPoint<Fp>(om.x);
                Rng rng(derive_seed(seed, 7));
                const auto pts = sample_q_omega(V, wit, ctx.cfg.q_omega_points, rng);
                for (const auto& x : pts) {
                  const auto L = on_sigma(V, CSpan<Fp>(x));
                  const bool good = L && rank(stack(*L, row_matrix(wit.x_omega))) == 3;
                  qpoints += good;
                  ok = ok && good;
                }
                ok = ok && pts.size() == ctx.cfg.q_omega_points;
              });
              r.passed += done && ok;
              ++r.total;
            }
            r.detail = std::to_string(qpoints) + " Q_omega points checked";
          });
}

// ---------------------------------------------------------------------------

// Normalized points of P^3(F_q) (first nonzero coordinate 1).
std::vector<Vec<Fp>> projective_points(const PrimeField& F, std::size_t n, std::size_t q) {
  std::vector<Vec<Fp>> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::size_t count = 1;
    for (std::size_t k = 0; k < free; ++k) count *= q;
    for (std::size_t code = 0; code < count; ++code) {
      Vec<Fp> v(n, F.zero());
      v[lead] = F.one();
      std::size_t c = code;
      for (std::size_t k = lead + 1; k < n; ++k) {
        v[k] = F.from_int(static_cast<std::int64_t>(c % q));
        c /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

struct LineScan {
  std::size_t secants = 0;  // lines through p meeting the curve in length exactly 2
  std::optional<ProjSubspace<Fp>> line;
};

LineScan scan_lines(const DeterminantalNet<Fp>& net, const Vec<Fp>& p, const std::vector<Vec<Fp>>& dirs,
                    const PrimeField& F) {
  LineScan s;
  std::size_t lead = 0;
  while (p[lead].is_zero()) ++lead;
  for (const auto& q : dirs) {
    if (!q[lead].is_zero()) continue;
    const auto len = net_line_length(net, CSpan<Fp>(p), CSpan<Fp>(q), F);
    if (len && *len == 2) {
      ++s.secants;
      s.line = ProjSubspace<Fp>(stack(row_matrix(p), row_matrix(q)));
    }
  }
  return s;
}

DeterminantalNet<Fp> reducible_net(const PrimeField& F) {
  // [[x0, x1, 0], [x1, x2, x3]]: the conic x0x2 = x1², x3 = 0, plus the line x0 = x1 = 0
  auto e = [&](int i) {
    Vec<Fp> v(4, F.zero());
    if (i >= 0) v[static_cast<std::size_t>(i)] = F.one();
    return v;
  };
  DeterminantalNet<Fp> n;
  n.M = {{{e(0), e(1), e(-1)}, {e(1), e(2), e(3)}}};
  return n;
}

void suite_cubics(Suite& S) {
  Context& ctx = S.ctx();
  const V6& V = ctx.V;
  const auto& F = V.field();

  S.check("cubics.net_secant", "F_11, standard cubic: the M(p)a line equals the brute-force unique secant line",
          [&](CheckResult& r) {
            const PrimeField F11(11);
            std::array<Vec<Fp>, 4> v;
            for (std::size_t k = 0; k < 4; ++k) {
              v[k] = Vec<Fp>(4, F11.zero());
              v[k][k] = F11.one();
            }
            const auto C = make_param_cubic(v, F11);
            const auto pts = projective_points(F11, 4, 11);
            for (const auto& p : pts) {
              if (rank(C.net.at(p)) < 2) continue;
              ++r.total;
              const auto scan = scan_lines(C.net, p, pts, F11);
              try {
                const ProjSubspace<Fp> line(net_bisecant_line(C.net, CSpan<Fp>(p), F11));
                r.passed += scan.secants == 1 && *scan.line == line;
              } catch (const Error& e) {
                if (e.code() != ErrorCode::kDegeneratePlane) throw;
              }
            }
            r.detail = "admissible points: " + std::to_string(r.total);
          });

  S.check("cubics.net_secant_degenerate",
          "F_11, conic + line net: DEGENERATE_PLANE exactly on the plane of the conic, secant lines elsewhere",
          [&](CheckResult& r) {
            const PrimeField F11(11);
            const auto net = reducible_net(F11);
            const auto pts = projective_points(F11, 4, 11);
            std::size_t degenerate = 0;
            for (const auto& p : pts) {
              if (rank(net.at(p)) < 2) continue;
              ++r.total;
              const bool in_plane = p[3].is_zero();
              try {
                const Matrix<Fp> L = net_bisecant_line(net, CSpan<Fp>(p), F11);
                const auto len = net_line_length(net, L.row_span(0), L.row_span(1), F11);
                r.passed += !in_plane && len && *len == 2 && ProjSubspace<Fp>(L).contains(p);
              } catch (const Error& e) {
                if (e.code() != ErrorCode::kDegeneratePlane) throw;
                ++degenerate;
                r.passed += in_plane && scan_lines(net, p, pts, F11).secants > 1;
              }
            }
            r.detail = "admissible points: " + std::to_string(r.total) + ", DEGENERATE_PLANE: " +
                       std::to_string(degenerate);
          });

  S.check("cubics.orderings", "all 6 orderings of a transverse triple give the same cubic", [&](CheckResult& r) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::uint64_t i = 0; i < ctx.cfg.triple_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("cubics.orderings", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
        ok = true;
        for (const auto& p : xi) ok = ok && on_curve(C, p.plucker.coords());
        for (const auto& pm : perms) {
          const auto D = cubic_through_triple(V, xi[static_cast<std::size_t>(pm[0])],
                                              xi[static_cast<std::size_t>(pm[1])], xi[static_cast<std::size_t>(pm[2])]);
          ok = ok && curves_equal(C, D, F) && curves_equal(D, C, F);
        }
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("cubics.sigma_roundtrip", "sigma(construct(xi)) = xi and construct(sigma(C)) = C", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < ctx.cfg.triple_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("cubics.sigma_roundtrip", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto T = section_through(V, pluckers(xi), 9, rng.next());
        const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
        const auto back = intersect_with_section(V, C, T);
        const auto D = cubic_through_triple(V, back[0], back[1], back[2]);
        ok = same_points(back, xi) && curves_equal(C, D, F);
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("cubics.net_identity", "net minors vanish identically on the parametrization", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      bool ok = false;
      const bool done = S.attempt("cubics.net_identity", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
        const auto x = C.curve.coordinate_forms();
        ok = true;
        for (const auto& q : C.net().minors()) {
          UniPoly<Fp> acc;
          for (std::size_t m = 0; m < 10; ++m) {
            if (q[m].is_zero()) continue;
            const auto& t = p3::quadrics().term(m);
            acc = acc + q[m] * (x[t[0]].poly * x[t[1]].poly);
          }
          ok = ok && acc.is_zero();
        }
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("cubics.vc_incidence", "a Lagrangian plane meets V_C in 3 points on pairwise disjoint planes of V_C",
          [&](CheckResult& r) {
            for (std::uint64_t i = 0; i < 20; ++i) {
              bool ok = false;
              const bool done = S.attempt("cubics.vc_incidence", i, [&](std::uint64_t seed) {
                Rng rng(seed);
                const auto xi = transverse_triple(V, rng);
                const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
                const auto P = random_lagrangian(V, rng);
                const auto hits = plane_meets_vc(V, C, P);
                ok = hits.size() == 3;
                for (const auto& h : hits)
                  ok = ok && rank(stack(P, row_matrix(h.point))) == 3 &&
                       rank(stack(C.plane(h.t), row_matrix(h.point))) == 3 && on_vc(C, CSpan<Fp>(h.point));
                for (std::size_t a = 0; ok && a < 3; ++a)
                  for (std::size_t b = a + 1; b < 3; ++b)
                    ok = ok && rank(stack(C.plane(hits[a].t), C.plane(hits[b].t))) == 6;
              });
              r.passed += done && ok;
              ++r.total;
            }
          });

  S.check("cubics.horizontal", "horizontal lines lie in V_C, meet each plane in (u, tBu), and are disjoint",
          [&](CheckResult& r) {
            for (std::uint64_t i = 0; i < 20; ++i) {
              bool ok = false;
              const bool done = S.attempt("cubics.horizontal", i, [&](std::uint64_t seed) {
                Rng rng(seed);
                const auto xi = transverse_triple(V, rng);
                const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
                const auto u = random_vec<Fp>(3, F, rng), u2 = random_vec<Fp>(3, F, rng);
                if (is_zero_vec(u) || is_zero_vec(u2)) throw Error(ErrorCode::kNotTransverse, "zero u");
                const auto L1 = horizontal_line(C, CSpan<Fp>(u)), L2 = horizontal_line(C, CSpan<Fp>(u2));
                ok = rank(stack(L1, L2)) == 4;
                for (int k = 0; k < 10; ++k) {
                  const Fp t = F.random(rng);
                  const Vec<Fp> pt = add(L1.row(0), CSpan<Fp>(scaled(L1.row(1), t)));
                  ok = ok && on_vc(C, CSpan<Fp>(pt)) && rank(stack(C.plane(Param<Fp>::at(t)), row_matrix(pt))) == 3;
                }
              });
              r.passed += done && ok;
              ++r.total;
            }
          });

  S.check("cubics.bisecant_line", "the M(p)a line through a point of span3(C) meets C in length 2", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      bool ok = false;
      const bool done = S.attempt("cubics.bisecant_line", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
        const auto p = random_combination(C.span3().basis(), F, rng);
        const Vec<Fp> c = C.curve.coords(p);
        if (rank(C.net().at(c)) < 2) throw Error(ErrorCode::kDegeneratePlane, "point on the curve");
        const Matrix<Fp> L = net_bisecant_line(C.net(), CSpan<Fp>(c), F);
        const auto len = net_line_length(C.net(), L.row_span(0), L.row_span(1), F);
        ok = len && *len == 2 && bisecant_line_in_span(C, CSpan<Fp>(p), F).contains(p);
      });
      r.passed += done && ok;
      ++r.total;
    }
  });
}

// ---------------------------------------------------------------------------

void suite_fibration(Suite& S) {
  Context& ctx = S.ctx();
  const V6& V = ctx.V;
  const auto& F = V.field();

  S.check("fibration.proportionality", "h(C) is the same projective point at 20 curve points", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < ctx.cfg.fibration_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("fibration.triples", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto T = section_through(V, pluckers(xi), 9, rng.next());
        const auto h = fibration_value(V, xi, T);
        const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
        ok = true;
        for (std::size_t k = 0; k < ctx.cfg.fibration_points; ++k) {
          const auto v = fibration_value_at(C, T, Param<Fp>::at(F.from_int(static_cast<std::int64_t>(k) + 2)));
          ok = ok && !is_zero_vec(v) && ProjPoint<Fp>(v) == h.h;
        }
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("fibration.permutation", "h is invariant under the 6 orderings of the triple", [&](CheckResult& r) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::uint64_t i = 0; i < ctx.cfg.fibration_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("fibration.triples", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto T = section_through(V, pluckers(xi), 9, rng.next());
        const auto h = fibration_value(V, xi, T);
        ok = true;
        for (const auto& pm : perms) {
          const std::array<SigmaPoint<Fp>, 3> p{xi[static_cast<std::size_t>(pm[0])], xi[static_cast<std::size_t>(pm[1])],
                                                xi[static_cast<std::size_t>(pm[2])]};
          ok = ok && fibration_value(V, p, T) == h;
        }
      });
      r.passed += done && ok;
      ++r.total;
    }
  });

  S.check("fibration.distinct", "independent triples on a common section give distinct h (>= 99%)",
          [&](CheckResult& r) {
            for (std::uint64_t i = 0; i < ctx.cfg.fibration_trials; ++i) {
              bool ok = false;
              const bool done = S.attempt("fibration.pairs", i, [&](std::uint64_t seed) {
                Rng rng(seed);
                const auto a = transverse_triple(V, rng), b = transverse_triple(V, rng);
                auto pts = pluckers(a);
                for (auto& p : pluckers(b)) pts.push_back(p);
                const auto T = section_through(V, pts, 9, rng.next());
                ok = !same_fiber(V, a, b, T);
              });
              r.passed += done && ok;
              ++r.total;
            }
            r.required = (r.total * 99 + 99) / 100;
          });

  S.check("fibration.sigma_injective", "distinct cubics on a common section have distinct sigma triples",
          [&](CheckResult& r) {
            for (std::uint64_t i = 0; i < ctx.cfg.fibration_trials; ++i) {
              bool ok = false;
              const bool done = S.attempt("fibration.pairs", i, [&](std::uint64_t seed) {
                Rng rng(seed);
                const auto a = transverse_triple(V, rng), b = transverse_triple(V, rng);
                auto pts = pluckers(a);
                for (auto& p : pluckers(b)) pts.push_back(p);
                const auto T = section_through(V, pts, 9, rng.next());
                const auto Ca = cubic_through_triple(V, a[0], a[1], a[2]);
                const auto Cb = cubic_through_triple(V, b[0], b[1], b[2]);
                const auto sa = intersect_with_section(V, Ca, T), sb = intersect_with_section(V, Cb, T);
                ok = !curves_equal(Ca, Cb, F) && !same_points(sa, sb) && same_points(sa, a) && same_points(sb, b);
              });
              r.passed += done && ok;
              ++r.total;
            }
          });

  S.check("fibration.span_meet", "span3(C) meets p9 exactly in the plane of C ∩ S", [&](CheckResult& r) {
    for (std::uint64_t i = 0; i < ctx.cfg.fibration_trials; ++i) {
      bool ok = false;
      const bool done = S.attempt("fibration.triples", i, [&](std::uint64_t seed) {
        Rng rng(seed);
        const auto xi = transverse_triple(V, rng);
        const auto T = section_through(V, pluckers(xi), 9, rng.next());
        ok = span_meet_check(V, cubic_through_triple(V, xi[0], xi[1], xi[2]), T);
      });
      r.passed += done && ok;
      ++r.total;
    }
  });
}

// ---------------------------------------------------------------------------

void suite_dual_quartic(Suite& S) {
  Context& ctx = S.ctx();
  const V6& V = ctx.V;
  const auto& F = V.field();

  S.check("dual-quartic.kernel", "the interpolation kernel at the tangent-hyperplane samples is 1-dimensional",
          [&](CheckResult& r) {
            r.total = 1;
            const auto& Q = ctx.quartic();  // throws KERNEL_DIM otherwise
            r.passed = Q.is_zero() ? 0 : 1;
            r.detail = std::to_string(ctx.cfg.dq_samples) + " samples, " + std::to_string(Q.basis().size()) +
                       " monomials, rank " + std::to_string(Q.basis().size() - 1);
          });

  S.check("dual-quartic.heldout", "the quartic vanishes on held-out tangent hyperplanes", [&](CheckResult& r) {
    const auto& Q = ctx.quartic();
    const auto held = sample_tangent_hyperplanes(V, ctx.seed_for("dual-quartic.heldout", 0), ctx.cfg.dq_heldout,
                                                 ctx.cfg.threads);
    for (const auto& s : held) {
      r.passed += Q.eval(s.h.coords(), F).is_zero();
      ++r.total;
    }
  });

  S.check("dual-quartic.lines", "restriction to a random line is a binary quartic of exact degree 4",
          [&](CheckResult& r) {
            const auto& Q = ctx.quartic();
            Rng rng(ctx.seed_for("dual-quartic.lines", 0));
            for (std::size_t i = 0; i < ctx.cfg.dq_lines; ++i) {
              const auto a = random_vec<Fp>(V.w_dim(), F, rng), b = random_vec<Fp>(V.w_dim(), F, rng);
              bool ok = false;
              try {
                ok = restrict_to_line(Q, CSpan<Fp>(a), CSpan<Fp>(b)).poly.degree() == 4;
              } catch (const Error& e) {
                if (e.code() != ErrorCode::kZeroRestriction) throw;
              }
              r.passed += ok;
              ++r.total;
            }
          });

  S.check("dual-quartic.nonzero", "the quartic is nonzero at random covectors", [&](CheckResult& r) {
    const auto& Q = ctx.quartic();
    Rng rng(ctx.seed_for("dual-quartic.nonzero", 0));
    for (std::size_t i = 0; i < ctx.cfg.dq_random; ++i) {
      r.passed += !Q.eval(random_vec<Fp>(V.w_dim(), F, rng), F).is_zero();
      ++r.total;
    }
    r.required = r.total >= 100 ? r.total - 1 : r.total;  // a random zero has probability ~4/p
  });

  S.check("dual-quartic.seeds", "independent sample seeds give proportional quartics", [&](CheckResult& r) {
    const auto& Q = ctx.quartic();
    r.total = ctx.cfg.dq_seeds;
    r.passed = 1;
    for (std::size_t k = 1; k < ctx.cfg.dq_seeds; ++k) {
      const auto s = sample_tangent_hyperplanes(V, ctx.seed_for("dual-quartic", k), ctx.cfg.dq_samples, ctx.cfg.threads);
      r.passed += proportional(interpolate_dual_quartic(s), Q);
    }
  });

  S.check("dual-quartic.crosscheck", "F* agrees with lambda under the wedge-pairing duality (report)",
          [&](CheckResult& r) {
            const auto& Q = ctx.quartic();
            const auto tang = sample_tangent_hyperplanes(V, ctx.seed_for("dual-quartic.crosscheck", 0), 50,
                                                         ctx.cfg.threads);
            const auto rep = crosscheck_hitchin(V, Q, tang, 50, ctx.seed_for("dual-quartic.crosscheck", 1));
            r.total = rep.samples;
            r.passed = rep.both_zero + rep.ratio_agreements;
            r.detail = std::string(rep.proportional ? "proportional" : "not proportional") + ", Q(h)/lambda = " +
                       rep.ratio;
          });
}

// ---------------------------------------------------------------------------

struct GroupRun {
  bool setup = false;
  bool residual = false, marks_on_fx = false, reversal = false, involution = false, commute = false, inverse = false,
       formal = false, fiber = false;
  std::size_t chain_points = 0, tangency = 0;
  std::size_t split = 0, split_ok = 0, common = 0, common_ok = 0, sigma_split = 0, sigma_ok = 0;
};

GroupRun group_run(Suite& S, std::uint64_t index) {
  Context& ctx = S.ctx();
  const V6& V = ctx.V;
  const auto& F = V.field();
  const auto& Q = ctx.quartic();
  GroupRun g;
  int resamples = 0;
  const auto X = marked_fano_setup(V, ctx.seed_for("group.setup", index), ctx.ideal(), ctx.cfg.resample_budget,
                                   &resamples);
  S.add_resamples(static_cast<std::size_t>(resamples));
  g.setup = true;
  const auto FX = restrict_quartic(Q, X.pX);
  const TwistedCubic<Fp>& C0 = X.C0;

  // Marks are the coordinate points of P²_X.
  g.marks_on_fx = true;
  for (std::size_t m = 0; m < 3; ++m) {
    Vec<Fp> e(3, F.zero());
    e[m] = F.one();
    g.marks_on_fx = g.marks_on_fx && FX.eval(e, F).is_zero();
  }

  std::array<std::optional<TwistedCubic<Fp>>, 3> first;
  g.residual = g.involution = true;
  for (std::size_t m = 0; m < 3; ++m) {
    const auto C1 = residual_cubic(V, X, C0, m);
    const auto beta = beta_for_mark(V, C0, X.marks[m].tangency.lagrangian);
    const auto span7 = beta_span7(V, beta);
    bool ok = X.curve_in_x(C1) && curve_intersection(C0, C1, F).length == 2 && !curves_equal(C0, C1, F) &&
              span7.contains(C1.span3()) && span7.contains(C0.span3());
    for (std::int64_t t = 0; t < 5; ++t) ok = ok && on_sigma(V, C1.curve.point(Param<Fp>::at(F.from_int(t)))).has_value();
    g.residual = g.residual && ok;
    g.involution = g.involution && curves_equal(residual_cubic(V, X, C1, m), C0, F);

    const auto cp = find_chain_point(V, X, C0, C1, &FX, ctx.seed_for("group.chain_point", index * 3 + m));
    Vec<Fp> e(3, F.zero());
    e[m] = F.one();
    g.chain_points += cp.coords == ProjPoint<Fp>(e);
    try {
      g.tangency += recover_tangency(V, X.marks[m].h.coords()).plucker == X.marks[m].tangency.plucker;
    } catch (const Error&) {
    }

    // Cross-checks of the base-field Segre construction against the line routes.
    try {
      const auto Y = segre_through(V, C0, X.marks[m]);
      ++g.split;
      g.split_ok += Y.span7 == span7 && Y.span7.contains(X.marks[m].tangency.plucker.coords());
    } catch (const Error& e) {
      if (!is_resamplable(e.code())) throw;
    }
    try {
      const auto Y = segre_from_common_lines(V, C0, C1, ctx.seed_for("group.common_lines", index * 3 + m));
      ++g.common;
      g.common_ok += Y.span7 == span7;
    } catch (const Error& e) {
      if (!is_resamplable(e.code())) throw;
    }
    first[m] = C1;
  }

  auto step = [&](const TwistedCubic<Fp>& C, char c) {
    return residual_cubic(V, X, C, static_cast<std::size_t>(mark_index(c)));
  };
  const auto& Cx = *first[0];
  const auto& Cy = *first[1];
  const auto& Cz = *first[2];
  const auto Cxy = step(Cx, 'y'), Czy = step(Cz, 'y'), Cyx = step(Cy, 'x');
  const auto Cxyz = step(Cxy, 'z'), Czyx = step(Czy, 'x');
  const auto Cxyzy = step(Cxyz, 'y'), Czyxy = step(Czyx, 'y');
  const auto Cxyyx = step(step(Cxy, 'y'), 'x');
  g.reversal = curves_equal(Cxyz, Czyx, F);
  g.commute = curves_equal(Cxyzy, Czyxy, F);
  g.inverse = curves_equal(Cxyyx, C0, F);
  // The formal classes predict exactly these coincidences, and xy ≠ yx.
  g.formal = formal_class("xyz") == formal_class("zyx") && formal_class("xyzy") == formal_class("zyxy") &&
             formal_class("xyyx") == formal_class("") && formal_class("xx") == formal_class("") &&
             !(formal_class("xy") == formal_class("yx")) && !curves_equal(Cxy, Cyx, F);

  // Fiber closure: every chain image lies in X, hence in the fiber of h(X).
  const auto h0 = fibration_value_of_curve(C0, X.tower, F);
  g.fiber = true;
  for (const auto* C : {&Cx, &Cy, &Cz, &Cxy, &Czy, &Cyx, &Cxyz, &Czyx, &Cxyzy, &Czyxy, &Cxyyx}) {
    g.fiber = g.fiber && X.curve_in_x(*C) && fibration_value_of_curve(*C, X.tower, F) == h0;
    try {
      const auto xi = intersect_with_section(V, *C, X.tower);
      ++g.sigma_split;
      g.sigma_ok += fibration_value(V, xi, X.tower) == h0;
    } catch (const Error& e) {
      if (!is_resamplable(e.code())) throw;
    }
  }
  return g;
}

void suite_group(Suite& S) {
  Context& ctx = S.ctx();
  std::vector<GroupRun> runs;
  std::string setup_error;
  double setup_seconds = 0;
  {
    const auto t0 = Clock::now();
    (void)ctx.quartic();
    (void)ctx.ideal();
    for (std::uint64_t i = 0; i < ctx.cfg.group_setups; ++i) {
      try {
        runs.push_back(group_run(S, i));
      } catch (const Error& e) {
        if (setup_error.empty()) setup_error = e.what();
        runs.push_back(GroupRun{});
      }
    }
    setup_seconds = since(t0);
  }
  // The runs above do the work for every check below; the suite time is the
  // meaningful number.
  (void)setup_seconds;
  auto tally = [&](const std::string& id, const std::string& desc, auto field) {
    S.check(id, desc, [&](CheckResult& r) {
      for (const auto& g : runs) {
        r.passed += field(g);
        ++r.total;
      }
      if (!setup_error.empty()) r.detail = "first error: " + setup_error;
    });
  };
  tally("group.residual", "Y ∩ X = C ∪ C': C' a twisted cubic in X, bisecant to C, inside the Segre span",
        [](const GroupRun& g) { return g.residual; });
  tally("group.marks_on_fx", "the marks lie on the plane quartic F_X", [](const GroupRun& g) { return g.marks_on_fx; });
  tally("group.involution", "C(aa) = C for every mark", [](const GroupRun& g) { return g.involution; });
  tally("group.reversal", "C(xyz) = C(zyx)", [](const GroupRun& g) { return g.reversal; });
  tally("group.block_commute", "C(xyzy) = C(zyxy)", [](const GroupRun& g) { return g.commute; });
  tally("group.block_inverse", "C(xyyx) = C", [](const GroupRun& g) { return g.inverse; });
  tally("group.formal", "formal classes predict the identities, and C(xy) != C(yx)",
        [](const GroupRun& g) { return g.formal; });
  tally("group.fiber", "all chain images of C0 lie in X and share the fiber value h(X)",
        [](const GroupRun& g) { return g.fiber; });
  S.check("group.chain_point", "find_chain_point(C, C(a)) = a", [&](CheckResult& r) {
    for (const auto& g : runs) {
      r.passed += g.chain_points;
      r.total += 3;
    }
  });
  S.check("group.tangency", "tangency points of the marks are recovered from the hyperplane (experimental)",
          [&](CheckResult& r) {
            for (const auto& g : runs) {
              r.passed += g.tangency;
              r.total += 3;
            }
          });
  S.check("group.split_route", "where the lines are rational, plane ∩ V_C lines give the same Segre span",
          [&](CheckResult& r) {
            for (const auto& g : runs) {
              r.passed += g.split_ok;
              r.total += g.split;
            }
            r.detail = std::to_string(r.total) + " of " + std::to_string(3 * runs.size()) + " configurations split";
          });
  S.check("group.common_lines", "where rational, common horizontal lines give the same Segre span",
          [&](CheckResult& r) {
            for (const auto& g : runs) {
              r.passed += g.common_ok;
              r.total += g.common;
            }
            r.detail = std::to_string(r.total) + " of " + std::to_string(3 * runs.size()) + " pairs split";
          });
  S.check("group.sigma_fiber", "chain images meeting S in a rational triple give h(X) through sigma",
          [&](CheckResult& r) {
            for (const auto& g : runs) {
              r.passed += g.sigma_ok;
              r.total += g.sigma_split;
            }
          });
}

// ---------------------------------------------------------------------------

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& s : suites)
    for (const auto& c : s.checks)
      if (c.id == id) return &c;
  return nullptr;
}

std::string VerificationReport::body_text() const {
  std::ostringstream os;
  os << "lg36 verification report\n";
  os << "field: " << field << "\n";
  os << "seed: " << seed << "\n";
  for (const auto& s : suites) {
    os << "\n[" << s.name << "] " << (s.ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : s.checks) {
      os << "  " << (c.ok() ? "PASS" : "FAIL") << "  " << c.id << "  " << ratio(c.passed, c.total);
      if (c.required != c.total) os << " (need " << c.required << ")";
      os << "  " << c.description;
      if (!c.detail.empty()) os << "  [" << c.detail << "]";
      os << "\n";
    }
    os << "  resamples: " << s.resamples << "\n";
  }
  os << "\nconstants\n";
  for (const auto& [k, v] : constants) os << "  " << k << " = " << v << "\n";
  os << "\noverall: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::timings_text() const {
  std::ostringstream os;
  os << "\ntimings (s)\n";
  for (const auto& s : suites) {
    os << "  " << s.name << "  " << fmt_seconds(s.seconds) << "\n";
    for (const auto& c : s.checks) os << "    " << c.id << "  " << fmt_seconds(c.seconds) << "\n";
  }
  os << "  total  " << fmt_seconds(seconds) << "\n";
  return os.str();
}

json VerificationReport::body_json() const {
  json j{{"schema", kSchemaVersion}, {"field", field}, {"seed", seed}, {"ok", ok()}};
  json ss = json::array();
  for (const auto& s : suites) {
    json cs = json::array();
    for (const auto& c : s.checks)
      cs.push_back({{"id", c.id},
                    {"description", c.description},
                    {"passed", c.passed},
                    {"total", c.total},
                    {"required", c.required},
                    {"ok", c.ok()},
                    {"detail", c.detail}});
    ss.push_back({{"name", s.name}, {"ok", s.ok()}, {"resamples", s.resamples}, {"checks", cs}});
  }
  j["suites"] = ss;
  j["constants"] = constants;
  return j;
}

json VerificationReport::to_json() const {
  json j = body_json();
  json t{{"total", seconds}};
  for (const auto& s : suites) {
    json st{{"total", s.seconds}};
    for (const auto& c : s.checks) st[c.id] = c.seconds;
    t[s.name] = st;
  }
  j["timings"] = t;
  return j;
}

VerificationReport run_suite(const SessionConfig& config, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    names = {suite};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");
  }
  if (config.prime > 1000000) throw Error(ErrorCode::kInvalidArgument, "verification needs p <= 10^6");
  VerificationReport rep;
  const PrimeField F(config.prime);
  rep.field = F.name();
  rep.seed = config.seed;
  Context ctx{config, V6(F), std::nullopt, std::nullopt, rep.constants};
  const auto t0 = Clock::now();
  static const std::map<std::string, std::function<void(Suite&)>> runners{
      {"core", suite_core},           {"secants", suite_secants},           {"cubics", suite_cubics},
      {"fibration", suite_fibration}, {"dual-quartic", suite_dual_quartic}, {"group", suite_group}};
  for (const auto& name : names) {
    SuiteReport sr;
    sr.name = name;
    const auto ts = Clock::now();
    Suite S(ctx, sr);
    runners.at(name)(S);
    sr.seconds = since(ts);
    rep.suites.push_back(std::move(sr));
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace lg36
