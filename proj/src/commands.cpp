#include "ratde/commands.hpp"

#include <future>
#include <sstream>

#include "ratde/random_ics.hpp"

namespace ratde {

namespace {

long auto_window(const CommandOptions& opts, int k, long period) {
  long w = opts.window > 0 ? opts.window : 4L * k * period;
  if (w < period) w = period;
  if (w > opts.steps - period) w = opts.steps - period;
  return w;
}

void fill_classification(RunReport& rep, const Classification& cls) {
  rep.hypotheses = cls.reports;
  rep.verdict = cls.verdict;
  if (cls.applied) rep.applied = theorem_name(*cls.applied);
}

// Orbit limit must sit on an equilibrium; returns the offending distance
// string on failure.
bool near_some_equilibrium(const BigFloat& value, const EquilibriumSet& eqs,
                           const BigFloat& tol, mpfr_prec_t prec) {
  for (const Surd& e : eqs.all())
    if ((value - e.to_float(prec)).abs() < tol) return true;
  return false;
}

}  // namespace

RunReport cmd_classify(const EquationSpec& spec, const CommandOptions& opts) {
  RunReport rep;
  rep.command = "classify";
  rep.seed = opts.seed;
  Classification cls = classify(spec.equation());
  fill_classification(rep, cls);
  rep.exit_status =
      cls.verdict.kind == Verdict::Kind::OutOfScope ? kExitOutOfScope : kExitOk;
  return rep;
}

InitialConditions construct_ics(const EquationSpec& spec, ConstructorKind kind) {
  Equation eq = spec.equation();
  switch (kind) {
    case ConstructorKind::T1Periodic:
      return periodic_ic_t1(eq);
    case ConstructorKind::T2Periodic:
      return periodic_ic_t2(eq);
    case ConstructorKind::T1Unbounded:
      return unbounded_ic_t1(eq);
    case ConstructorKind::T4ivPeriodic: {
      auto shape = recognize_t3(eq);
      if (!shape)
        throw HypothesisViolated("t4iv-periodic needs the even-lag/odd-delay form");
      return periodic_ic_t4_case_iv(*shape);
    }
  }
  throw HypothesisViolated("unknown constructor");
}

BoundaryConstruction t3_boundary_ics(const Theorem3Shape& shape) {
  if (shape.alpha >= shape.A) {
    auto [t2eq, change] = shift_reduce(shape);
    InitialConditions w = periodic_ic_t2(t2eq);
    return {InitialConditions(lift_cycle(change, w.values)),
            "shift_reduce -> periodic_ic_t2 -> lift_cycle"};
  }
  try {
    auto [alpha0_eq, root_change] = surd_reduce(shape);
    auto reduced_shape = recognize_t3(alpha0_eq);
    if (!reduced_shape)
      throw HypothesisViolated("root substitution left the even-lag form");
    auto [t2eq, tail_change] = shift_reduce_tail(*reduced_shape);
    InitialConditions w = periodic_ic_t2(t2eq);
    VariableChange combined = compose(tail_change, root_change);
    return {InitialConditions(lift_cycle(combined, w.values)),
            "surd_reduce -> shift_reduce_tail -> periodic_ic_t2 -> lift_cycle"};
  } catch (const IrrationalReduction&) {
    return {periodic_ic_t3_boundary(shape), "direct quadratic-field construction"};
  }
}

namespace {

// Envelope monitors attached to verify runs. T1's applies whenever the
// alpha = 0 hypotheses hold with A >= sum(beta); T2's only on its boundary.
void run_envelope_monitor(RunReport& rep, const Equation& eq, TheoremId applied,
                          const std::vector<Trajectory>& trajectories,
                          const CommandOptions& opts) {
  IndexProfile prof = index_profile(eq);
  bool t1_style = applied == TheoremId::T1 && prof.sum_beta.is_positive() &&
                  eq.A >= prof.sum_beta;
  bool t2_style = applied == TheoremId::T2 && eq.A == prof.sum_beta;
  if (!t1_style && !t2_style) return;
  const int modulus = t1_style ? prof.g_beta : 2 * prof.g_union;
  if (modulus < 1 || eq.k / modulus < 1) return;
  long checked = 0, ok = 0;
  for (const Trajectory& traj : trajectories) {
    for (int a = 0; a < modulus; ++a) {
      Envelope env = envelope(traj, a, modulus,
                              t1_style ? EnvelopeVariant::T1 : EnvelopeVariant::T2);
      ++checked;
      if (nonincreasing(env, opts.slack)) ++ok;
    }
  }
  rep.monitors[t1_style ? "envelope_t1" : "envelope_t2"] =
      "nonincreasing " + std::to_string(ok) + "/" + std::to_string(checked) +
      " (trajectories x phases)";
  if (ok != checked) rep.exit_status = kExitMismatch;
}

void run_lemma2_monitor(RunReport& rep, const Equation& eq,
                        const std::vector<Trajectory>& trajectories,
                        const CommandOptions& opts) {
  IndexProfile prof = index_profile(eq);
  if (eq.A <= prof.sum_beta) return;
  // Every orbit stays under max(initial conditions, alpha/(A - sum(beta))).
  Ratio cap = eq.alpha / (eq.A - prof.sum_beta);
  long ok = 0;
  for (const Trajectory& traj : trajectories) {
    BigFloat bound(cap, traj.precision_bits);
    for (const Surd& v : traj.ics.values) {
      BigFloat f = v.to_float(traj.precision_bits);
      if (f > bound) bound = f;
    }
    bound = bound + BigFloat(opts.slack, traj.precision_bits);
    bool fine = true;
    for (long n = 0; n < traj.size(); ++n)
      if (traj.at(n) > bound) fine = false;
    if (fine) ++ok;
  }
  rep.monitors["lemma2_bound"] = "sup <= max(ics, alpha/(A - sum(beta))) on " +
                                 std::to_string(ok) + "/" +
                                 std::to_string(trajectories.size()) + " orbits";
  if (ok != static_cast<long>(trajectories.size())) rep.exit_status = kExitMismatch;
}

}  // namespace

RunReport cmd_verify(const EquationSpec& spec, const CommandOptions& opts) {
  RunReport rep;
  rep.command = "verify";
  rep.seed = opts.seed;

  Equation eq = spec.equation();
  Classification cls = classify(eq);
  fill_classification(rep, cls);

  if (cls.verdict.kind == Verdict::Kind::OutOfScope) {
    rep.exit_status = kExitOutOfScope;
    return rep;
  }
  rep.exit_status = kExitOk;

  RationalSampler sampler(opts.seed);
  SimulationConfig sim;
  sim.steps = opts.steps;
  sim.mode = opts.mode;
  sim.precision_bits = opts.precision_bits;

  std::vector<Trajectory> random_runs;
  auto run_random_orbits = [&](long period) {
    long converged = 0;
    long window = auto_window(opts, eq.k, period);
    std::optional<BigFloat> worst;
    for (long t = 0; t < opts.random_trials; ++t) {
      Trajectory traj = simulate(eq, sampler.next_ics(eq.k), sim);
      PeriodReport pr = detect_cycle(traj, period, opts.tolerance, window);
      if (pr.converged) ++converged;
      if (!worst || pr.residual > *worst) worst = pr.residual;
      if (t == 0 || !pr.converged)
        rep.period_report = PeriodReportData::from(pr, opts.precision_bits);
      random_runs.push_back(std::move(traj));
    }
    rep.monitors["random_convergence"] =
        std::to_string(converged) + "/" + std::to_string(opts.random_trials) +
        " orbits converged to period " + std::to_string(period) +
        " (worst residual " + (worst ? worst->str() : "n/a") + ")";
    return converged == opts.random_trials;
  };

  switch (cls.verdict.kind) {
    case Verdict::Kind::EquilibriumConvergence: {
      bool all_converged = run_random_orbits(1);
      bool on_equilibrium = true;
      try {
        EquilibriumSet eqs = equilibria(eq);
        BigFloat tol(opts.tolerance, opts.precision_bits);
        for (const Trajectory& traj : random_runs)
          if (!near_some_equilibrium(traj.at(traj.size() - 1), eqs, tol,
                                     opts.precision_bits))
            on_equilibrium = false;
        rep.monitors["equilibrium_match"] =
            on_equilibrium ? "every limit sits on an equilibrium"
                           : "some limit is off every equilibrium";
      } catch (const DegenerateEquilibria&) {
        rep.notes.push_back("equilibrium set is a continuum; limit match skipped");
      }
      if (!all_converged || !on_equilibrium) rep.exit_status = kExitMismatch;
      if (!random_runs.empty())
        rep.bound_report = BoundReportData::from(
            summarize_bounds(random_runs.front(),
                             std::max<long>(0, random_runs.front().size() - 100)),
            opts.precision_bits);
      break;
    }

    case Verdict::Kind::PeriodicConvergence: {
      const long p = cls.verdict.period;
      InitialConditions ics;
      std::string route;
      try {
        if (*cls.applied == TheoremId::T1) {
          ics = periodic_ic_t1(eq);
          route = "periodic_ic_t1";
        } else if (*cls.applied == TheoremId::T2) {
          ics = periodic_ic_t2(eq);
          route = "periodic_ic_t2";
        } else {
          const Theorem3Shape& shape = *cls.shape;
          if (theorem4_case(shape) == 4) {
            ics = periodic_ic_t4_case_iv(shape);
            route = "periodic_ic_t4_case_iv";
            // Positivity propagation summary for the zero-pattern seed.
            long horizon = 6L * shape.g() + shape.k();
            auto classes = positivity_classes(shape, ics, horizon);
            std::ostringstream os;
            bool consistent = true;
            for (const auto& [r, crep] : classes) {
              os << "class " << r << ": "
                 << (crep.status == ClassStatus::IdenticallyZero
                         ? "identically zero"
                         : "positive from " + std::to_string(crep.positive_from))
                 << "; ";
              consistent = consistent && crep.confirmed;
            }
            rep.monitors["positivity_classes"] = os.str();
            if (!consistent) rep.exit_status = kExitMismatch;
          } else {
            BoundaryConstruction bc = t3_boundary_ics(shape);
            ics = bc.ics;
            route = bc.route;
          }
        }
        rep.constructed_ics = ics.to_strings();
        rep.notes.push_back("construction route: " + route);
        CycleCertificate cert = certify_cycle(eq, ics, p, 3);
        rep.certificate = CertificateData::from(cert);
        if (!cert.certified) rep.exit_status = kExitMismatch;
      } catch (const Error& e) {
        rep.notes.push_back(std::string("construction failed: ") + e.what());
        rep.exit_status = kExitMismatch;
      }
      if (!run_random_orbits(p)) rep.exit_status = kExitMismatch;
      break;
    }

    case Verdict::Kind::UnboundedExists: {
      bool found = false;
      if (*cls.applied == TheoremId::T1) {
        InitialConditions ics = unbounded_ic_t1(eq);
        rep.constructed_ics = ics.to_strings();
        SimulationConfig wcfg = sim;
        wcfg.stop_above = opts.threshold;
        Trajectory traj = simulate(eq, ics, wcfg);
        found = traj.exceeded_at.has_value();
        rep.bound_report = BoundReportData::from(
            summarize_bounds(traj, 0, opts.threshold), opts.precision_bits);
        rep.monitors["unbounded_witness"] =
            found ? "constructed seed exceeded threshold at step " +
                        std::to_string(*traj.exceeded_at)
                  : "constructed seed stayed under threshold (inconclusive at horizon)";
      } else {
        auto witness = unbounded_witness_search(eq, default_witness_grid(eq),
                                                opts.threshold, opts.steps);
        if (witness) {
          found = true;
          rep.constructed_ics = witness->first.to_strings();
          rep.monitors["unbounded_witness"] =
              "grid seed exceeded threshold at step " + std::to_string(witness->second);
        } else if (cls.shape &&
                   cls.shape->alpha + cls.shape->sum_even_beta >= cls.shape->A) {
          // Reduction fallback: search the shifted equation, then confirm on
          // the original from the lifted seed.
          auto [red, change] = shift_reduce_tail(*cls.shape);
          auto red_witness = unbounded_witness_search(red, default_witness_grid(red),
                                                      opts.threshold, opts.steps);
          if (red_witness) {
            InitialConditions lifted(lift_cycle(change, red_witness->first.values));
            SimulationConfig wcfg = sim;
            wcfg.stop_above = opts.threshold;
            try {
              Trajectory traj = simulate(eq, lifted, wcfg);
              found = traj.exceeded_at.has_value();
              if (found) {
                rep.constructed_ics = lifted.to_strings();
                rep.monitors["unbounded_witness"] =
                    "reduction-lifted seed exceeded threshold at step " +
                    std::to_string(*traj.exceeded_at);
              }
            } catch (const ZeroDenominator&) {
              // lifted seed inadmissible; stays inconclusive
            }
          }
        }
        if (!found)
          rep.monitors["unbounded_witness"] =
              "no witness found (inconclusive at horizon, not a refutation)";
      }
      if (!found) rep.exit_status = kExitMismatch;
      break;
    }

    case Verdict::Kind::OutOfScope:
      break;  // handled above
  }

  if (cls.applied) {
    run_envelope_monitor(rep, eq, *cls.applied, random_runs, opts);
    run_lemma2_monitor(rep, eq, random_runs, opts);
  }
  return rep;
}

void cmd_simulate(const EquationSpec& spec, const CommandOptions& opts,
                  std::ostream& csv) {
  Equation eq = spec.equation();
  InitialConditions ics;
  if (spec.constructor) {
    ics = construct_ics(spec, *spec.constructor);
  } else if (spec.initial_conditions) {
    ics = InitialConditions::from_rationals(*spec.initial_conditions);
  } else {
    throw ParseError("simulate needs initial_conditions or a constructor");
  }
  SimulationConfig sim;
  sim.steps = opts.steps;
  sim.mode = opts.mode;
  sim.precision_bits = opts.precision_bits;
  if (sim.mode == ArithmeticMode::Exact && !ics.all_rational())
    sim.mode = ArithmeticMode::Float;  // surd-valued seeds need floats
  write_csv(simulate(eq, ics, sim), csv);
}

namespace {

struct SweepRow {
  Ratio value;
  std::string verdict;
  long predicted_period = 0;
  std::optional<long> prime_period;
  std::string residual;
  bool witness = false;
};

SweepRow sweep_point(const EquationSpec& base, const std::string& param,
                     const Ratio& value, const CommandOptions& opts,
                     std::uint64_t point_seed) {
  EquationSpec spec = base;
  if (param == "A")
    spec.A = value;
  else
    spec.alpha = value;
  SweepRow row;
  row.value = value;
  Equation eq = spec.equation();
  Classification cls = classify(eq);
  row.verdict = verdict_kind_name(cls.verdict.kind);
  row.predicted_period = cls.verdict.period;

  if (cls.verdict.kind == Verdict::Kind::OutOfScope) return row;

  if (cls.verdict.kind == Verdict::Kind::UnboundedExists) {
    std::vector<InitialConditions> grid = default_witness_grid(eq);
    if (index_profile(eq).sum_beta.is_positive() && eq.alpha.is_zero()) {
      try {
        grid.insert(grid.begin(), unbounded_ic_t1(eq));
      } catch (const Error&) {
        // not a T1 instance; grid alone
      }
    }
    row.witness = unbounded_witness_search(eq, grid, opts.threshold, opts.steps)
                      .has_value();
    return row;
  }

  // Convergent regimes: one orbit per point, seeded per grid index.
  InitialConditions ics;
  if (spec.initial_conditions)
    ics = InitialConditions::from_rationals(*spec.initial_conditions);
  else
    ics = RationalSampler(point_seed).next_ics(eq.k);
  long period = cls.verdict.kind == Verdict::Kind::PeriodicConvergence
                    ? cls.verdict.period
                    : 1;
  SimulationConfig sim;
  sim.steps = opts.steps;
  sim.mode = opts.mode;
  sim.precision_bits = opts.precision_bits;
  Trajectory traj = simulate(eq, ics, sim);
  PeriodReport pr =
      detect_cycle(traj, period, opts.tolerance, auto_window(opts, eq.k, period));
  row.prime_period = pr.prime_period;
  row.residual = pr.residual.str();
  return row;
}

}  // namespace

void cmd_sweep(const EquationSpec& spec, const SweepParams& params,
               const CommandOptions& opts, std::ostream& csv) {
  if (params.count < 2) throw ParseError("sweep needs count >= 2");
  if (params.param != "A" && params.param != "alpha")
    throw ParseError("sweep parameter must be A or alpha");

  std::vector<Ratio> grid;
  Ratio span = params.to - params.from;
  for (long i = 0; i < params.count; ++i)
    grid.push_back(params.from + span * Ratio(i) / Ratio(params.count - 1));

  std::vector<std::future<SweepRow>> futures;
  futures.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    futures.push_back(std::async(std::launch::async, sweep_point, spec, params.param,
                                 grid[i], opts, opts.seed + i));

  csv << "param_value,verdict,predicted_period,prime_period,residual,witness\n";
  for (auto& f : futures) {
    SweepRow row = f.get();
    csv << row.value.str() << "," << row.verdict << "," << row.predicted_period << ","
        << (row.prime_period ? std::to_string(*row.prime_period) : "") << ","
        << row.residual << "," << (row.witness ? "1" : "0") << "\n";
  }
}

}  // namespace ratde
