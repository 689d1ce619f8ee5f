#include "ratde/dynamics.hpp"

#include <algorithm>

#include "ratde/errors.hpp"
#include "ratde/numtheory.hpp"

namespace ratde {

bool Trajectory::exact_at(long n) const {
  if (n < 0) return ics.values[static_cast<std::size_t>(-n - 1)].is_rational();
  return n < static_cast<long>(exact_values.size());
}

Ratio Trajectory::exact(long n) const {
  if (n < 0) return ics.values[static_cast<std::size_t>(-n - 1)].rational();
  return exact_values[static_cast<std::size_t>(n)];
}

BigFloat Trajectory::at(long n) const {
  if (n < 0)
    return ics.values[static_cast<std::size_t>(-n - 1)].to_float(precision_bits);
  auto i = static_cast<std::size_t>(n);
  if (i < exact_values.size()) return BigFloat(exact_values[i], precision_bits);
  return float_values[i - exact_values.size()];
}

Trajectory simulate(const Equation& eq, const InitialConditions& ics,
                    const SimulationConfig& cfg) {
  if (static_cast<int>(ics.size()) != eq.k)
    throw NotApplicable("expected " + std::to_string(eq.k) +
                        " initial conditions, got " + std::to_string(ics.size()));
  if (!ics.all_nonnegative()) throw NegativeInput("negative initial condition");
  if (cfg.mode == ArithmeticMode::Exact && !ics.all_rational())
    throw NotApplicable("Exact mode admits only rational initial conditions");
  if (cfg.precision_bits < 64)
    throw NotApplicable("Float mode needs at least 64 bits of precision");

  Trajectory traj;
  traj.eq = eq;
  traj.ics = ics;
  traj.precision_bits = cfg.precision_bits;

  const std::size_t k = static_cast<std::size_t>(eq.k);
  bool exact_phase = cfg.mode == ArithmeticMode::Exact;
  if (!exact_phase) traj.degraded_at = 0;

  // Rolling history, newest first.
  std::vector<Ratio> exact_win;
  std::vector<BigFloat> float_win;
  if (exact_phase) {
    exact_win = ics.rationals();
  } else {
    float_win.reserve(k);
    for (const Surd& v : ics.values) float_win.push_back(v.to_float(cfg.precision_bits));
  }

  auto push_front = [k](auto& win, auto v) {
    win.insert(win.begin(), std::move(v));
    win.resize(k);
  };

  for (long n = 0; n < cfg.steps; ++n) {
    if (exact_phase) {
      Ratio v;
      try {
        v = step(eq, std::span<const Ratio>(exact_win));
      } catch (const ZeroDenominator&) {
        throw ZeroDenominator(n, "zero denominator at step " + std::to_string(n));
      }
      if (v.bit_size() > cfg.exact_bit_budget) {
        // The state outgrew the exact budget; carry on in floats.
        traj.degraded_at = n;
        exact_phase = false;
        float_win.reserve(k);
        for (const Ratio& r : exact_win) float_win.emplace_back(r, cfg.precision_bits);
        BigFloat fv(v, cfg.precision_bits);
        push_front(float_win, fv);
        traj.float_values.push_back(std::move(fv));
      } else {
        push_front(exact_win, v);
        traj.exact_values.push_back(std::move(v));
      }
    } else {
      BigFloat v(cfg.precision_bits);
      try {
        v = step(eq, std::span<const BigFloat>(float_win));
      } catch (const ZeroDenominator&) {
        throw ZeroDenominator(n, "zero denominator at step " + std::to_string(n));
      }
      push_front(float_win, v);
      traj.float_values.push_back(std::move(v));
    }
    if (cfg.stop_above) {
      BigFloat bound(*cfg.stop_above, cfg.precision_bits);
      if (traj.at(n) > bound) {
        traj.exceeded_at = n;
        break;
      }
    }
  }
  return traj;
}

void write_csv(const Trajectory& traj, std::ostream& os) {
  os << "n,x_n\n";
  for (long n = 0; n < traj.size(); ++n) {
    if (traj.exact_at(n))
      os << n << "," << traj.exact(n).str() << "\n";
    else
      os << n << "," << traj.at(n).str() << "\n";
  }
}

namespace {

std::vector<long> divisors_ascending(long p) {
  std::vector<long> out;
  for (long d = 1; d <= p; ++d)
    if (p % d == 0) out.push_back(d);
  return out;
}

}  // namespace

PeriodReport detect_cycle(const Trajectory& traj, long p, double tolerance,
                          long window) {
  if (p < 1 || window < p)
    throw NotApplicable("window must cover at least one full period");
  if (traj.size() < window + p)
    throw WindowTooLarge("trajectory of length " + std::to_string(traj.size()) +
                         " cannot host window " + std::to_string(window) +
                         " + period " + std::to_string(p));

  const mpfr_prec_t prec = traj.precision_bits;
  PeriodReport rep;
  rep.tested_period = p;
  BigFloat tol(tolerance, prec);
  BigFloat residual(prec);

  const long lo = traj.size() - window;
  for (long n = lo; n < traj.size(); ++n) {
    BigFloat diff = (traj.at(n) - traj.at(n - p)).abs();
    if (diff > residual) residual = diff;
  }
  rep.residual = residual;
  rep.converged = residual < tol;

  // Window averages per residue class mod p.
  rep.limit_cycle.assign(static_cast<std::size_t>(p), BigFloat(prec));
  std::vector<long> counts(static_cast<std::size_t>(p), 0);
  for (long n = lo; n < traj.size(); ++n) {
    auto r = static_cast<std::size_t>(n % p);
    rep.limit_cycle[r] = rep.limit_cycle[r] + traj.at(n);
    ++counts[r];
  }
  for (long r = 0; r < p; ++r)
    if (counts[static_cast<std::size_t>(r)] > 0)
      rep.limit_cycle[static_cast<std::size_t>(r)] =
          rep.limit_cycle[static_cast<std::size_t>(r)] /
          BigFloat(Ratio(counts[static_cast<std::size_t>(r)]), prec);

  if (rep.converged) {
    for (long d : divisors_ascending(p)) {
      BigFloat worst(prec);
      for (long r = 0; r < p; ++r) {
        BigFloat diff = (rep.limit_cycle[static_cast<std::size_t>(r)] -
                         rep.limit_cycle[static_cast<std::size_t>((r + d) % p)])
                            .abs();
        if (diff > worst) worst = diff;
      }
      if (worst < tol) {
        rep.prime_period = d;
        break;
      }
    }
  }
  return rep;
}

CycleCertificate certify_cycle(const Equation& eq, const InitialConditions& ics,
                               long p, long full_periods) {
  CycleCertificate cert;
  cert.period = p;
  cert.periods_checked = full_periods;
  if (p < 1 || static_cast<int>(ics.size()) != eq.k) {
    cert.message = "bad period or initial-condition length";
    return cert;
  }

  const long total = full_periods * p;
  std::vector<Surd> orbit;
  orbit.reserve(static_cast<std::size_t>(total));
  auto x = [&](long n) -> const Surd& {
    return n < 0 ? ics.values[static_cast<std::size_t>(-n - 1)]
                 : orbit[static_cast<std::size_t>(n)];
  };

  // Exact iteration. Sizes stay bounded on a true cycle; the budget guard
  // only fires when the claimed period is wrong.
  constexpr std::size_t kCertifyBudget = std::size_t(1) << 20;
  std::vector<Surd> window = ics.values;  // already newest first: x_{-1} ... x_{-k}
  for (long n = 0; n < total; ++n) {
    Surd v;
    try {
      v = step(eq, std::span<const Surd>(window));
    } catch (const ZeroDenominator&) {
      cert.message = "zero denominator at step " + std::to_string(n);
      return cert;
    }
    if (v.rational_part().bit_size() > kCertifyBudget ||
        v.surd_part().bit_size() > kCertifyBudget) {
      cert.message = "state size blew past the exact budget (orbit is not periodic)";
      return cert;
    }
    window.insert(window.begin(), v);
    window.resize(static_cast<std::size_t>(eq.k));
    orbit.push_back(std::move(v));
  }

  for (long n = -eq.k; n + p < total; ++n) {
    if (x(n + p) != x(n)) {
      cert.message = "x_{" + std::to_string(n + p) + "} != x_{" + std::to_string(n) + "}";
      return cert;
    }
  }

  cert.cycle.assign(orbit.begin(), orbit.begin() + p);
  for (long d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool refuted = false;
    for (long r = 0; r < p && !refuted; ++r)
      refuted = cert.cycle[static_cast<std::size_t>(r)] !=
                cert.cycle[static_cast<std::size_t>((r + d) % p)];
    if (!refuted) {
      cert.message = "proper divisor " + std::to_string(d) + " is also a period";
      return cert;
    }
    cert.refuted_divisors.push_back(d);
  }
  cert.certified = true;
  return cert;
}

std::optional<std::pair<InitialConditions, long>> unbounded_witness_search(
    const Equation& eq, const std::vector<InitialConditions>& grid,
    const Ratio& threshold, long steps) {
  if (!threshold.is_positive()) throw NotApplicable("threshold must be positive");
  SimulationConfig cfg;
  cfg.steps = steps;
  cfg.stop_above = threshold;
  for (const InitialConditions& ics : grid) {
    try {
      Trajectory traj = simulate(eq, ics, cfg);
      if (traj.exceeded_at) return std::make_pair(ics, *traj.exceeded_at);
    } catch (const ZeroDenominator&) {
      // inadmissible seed; keep searching
    }
  }
  return std::nullopt;
}

std::vector<InitialConditions> default_witness_grid(const Equation& eq) {
  IndexProfile p = index_profile(eq);
  std::set<int> moduli{1, 2};
  if (p.g_beta > 0) {
    moduli.insert(p.g_beta);
    moduli.insert(2 * p.g_beta);
  }
  if (p.g_union > 0) {
    moduli.insert(p.g_union);
    moduli.insert(2 * p.g_union);
  }
  const std::vector<long> magnitudes{10, 100, 1000};
  std::vector<InitialConditions> grid;
  for (int q : moduli) {
    if (q > eq.k) continue;
    for (long mag : magnitudes) {
      Ratio big(mag);
      Ratio small(1, mag);
      for (int phase = 0; phase < q; ++phase) {
        InitialConditions ics;
        ics.values.reserve(static_cast<std::size_t>(eq.k));
        for (int m = 1; m <= eq.k; ++m)
          ics.values.push_back((m + phase) % q == 0 ? Surd(big) : Surd(small));
        grid.push_back(std::move(ics));
      }
    }
  }
  return grid;
}

Envelope envelope(const Trajectory& traj, int phase, int modulus,
                  EnvelopeVariant variant) {
  if (modulus < 1) throw NotApplicable("modulus must be positive");
  const int k = traj.order();
  const int rho = k / modulus;
  if (rho < 1) throw TooShort("order smaller than the envelope modulus");
  const mpfr_prec_t prec = traj.precision_bits;

  Envelope env;
  env.phase = phase;
  env.modulus = modulus;
  env.rho = rho;

  const long last = traj.size() - 1;
  const long q = modulus;

  if (variant == EnvelopeVariant::T1) {
    // smallest m with (m - rho) q + phase >= -k; the first windows read the
    // initial conditions
    long m_lo = rho - (k + phase) / q;
    long m_hi = (last - phase) / q + 1;  // (m-1) q + phase <= last
    if (m_hi < m_lo) throw TooShort("trajectory too short for any envelope window");
    env.start_m = m_lo;
    for (long m = m_lo; m <= m_hi; ++m) {
      BigFloat y = traj.at((m - 1) * q + phase);
      for (long l = 2; l <= rho; ++l) {
        BigFloat cand = traj.at((m - l) * q + phase);
        if (cand > y) y = cand;
      }
      env.values.push_back(std::move(y));
    }
    return env;
  }

  // T2 variant: modulus is 2g and the reciprocal terms look back g further.
  if (modulus % 2 != 0)
    throw NotApplicable("the alpha > 0 envelope needs an even modulus (2g)");
  const long g = modulus / 2;
  IndexProfile prof = index_profile(traj.eq);
  if (!prof.sum_b.is_positive())
    throw NotApplicable("the alpha > 0 envelope needs sum(B) > 0");
  BigFloat alpha_over_sb(traj.eq.alpha / prof.sum_b, prec);
  auto recip = [&](long idx) {
    BigFloat xv = traj.at(idx);
    if (xv.is_zero()) return BigFloat::infinity(prec);
    return alpha_over_sb / xv;
  };

  long m_lo = rho - (k + phase - g) / q;  // (m - rho) q + phase - g >= -k
  long m_hi = (last - phase + g) / q;     // m q + phase - g <= last, the deepest term
  if (m_hi < m_lo) throw TooShort("trajectory too short for any envelope window");
  env.start_m = m_lo;
  for (long m = m_lo; m <= m_hi; ++m) {
    BigFloat y = recip(m * q + phase - g);
    for (long l = 1; l <= rho; ++l) {
      BigFloat direct = traj.at((m - l) * q + phase);
      if (direct > y) y = direct;
      BigFloat rec = recip((m - l) * q + phase - g);
      if (rec > y) y = rec;
    }
    env.values.push_back(std::move(y));
  }
  return env;
}

bool nonincreasing(const Envelope& env, double slack) {
  for (std::size_t i = 1; i < env.values.size(); ++i) {
    BigFloat allowance(slack, env.values[i].precision());
    if (env.values[i] > env.values[i - 1] + allowance) return false;
  }
  return true;
}

bool lemma4_monitor(const Trajectory& traj, const Ratio& c, BoundKind kind,
                    double slack) {
  const mpfr_prec_t prec = traj.precision_bits;
  const int k = traj.order();
  BigFloat cf(c, prec);
  BigFloat allowance(slack, prec);

  BigFloat bound = cf;
  for (int m = 1; m <= k; ++m) {
    BigFloat v = traj.at(-m);
    if (kind == BoundKind::Lower ? v < bound : v > bound) bound = v;
  }

  bool conclusion = true;
  for (long n = 0; n < traj.size(); ++n) {
    BigFloat extreme = cf;
    for (int i = 1; i <= k; ++i) {
      BigFloat v = traj.at(n - i);
      if (kind == BoundKind::Lower ? v < extreme : v > extreme) extreme = v;
    }
    BigFloat xn = traj.at(n);
    bool premise = kind == BoundKind::Lower ? xn >= extreme - allowance
                                            : xn <= extreme + allowance;
    if (!premise) throw HypothesisFailedAtStep(n);
    bool ok = kind == BoundKind::Lower ? xn >= bound - allowance
                                       : xn <= bound + allowance;
    if (!ok) conclusion = false;
  }
  return conclusion;
}

std::map<int, ClassReport> positivity_classes(const Theorem3Shape& shape,
                                              const InitialConditions& ics,
                                              long horizon) {
  if (!shape.alpha.is_zero())
    throw NotApplicable("positivity propagation is an alpha = 0 argument");
  const int g = shape.g();
  const int k = shape.k();
  Equation eq = shape.to_equation();

  std::set<int> scaled;
  for (int lag : shape.i_beta()) scaled.insert(lag / g);
  const long nf = frobenius_number(scaled);  // gcd(scaled) = 1 by construction

  SimulationConfig cfg;
  cfg.steps = horizon;
  Trajectory traj = simulate(eq, ics, cfg);

  auto positive = [&](long n) {
    if (traj.exact_at(n)) return traj.exact(n).is_positive();
    return traj.at(n).sign() > 0;
  };
  auto cls = [&](long n) { return static_cast<int>(((n % g) + g) % g); };

  std::map<int, ClassReport> out;
  for (int r = 0; r < g; ++r) {
    ClassReport rep;
    long first_pos = horizon;  // sentinel
    for (long n = -k; n < horizon; ++n) {
      if (cls(n) != r) continue;
      if (positive(n)) {
        first_pos = n;
        break;
      }
    }
    if (first_pos == horizon) {
      // With alpha = 0 every numerator lag is a multiple of g, so a class
      // whose seeds are all zero stays zero forever.
      rep.status = ClassStatus::IdenticallyZero;
      rep.confirmed = true;
    } else {
      rep.status = ClassStatus::EventuallyPositive;
      long threshold = first_pos + (nf + 1) * g;
      if (threshold < 0) threshold = 0;
      long from = threshold;
      while (cls(from) != r) ++from;
      rep.positive_from = from;
      rep.confirmed = true;
      for (long n = from; n < horizon; ++n)
        if (cls(n) == r && !positive(n)) rep.confirmed = false;
    }
    out[r] = rep;
  }
  return out;
}

BoundReport summarize_bounds(const Trajectory& traj, long tail_start,
                             const std::optional<Ratio>& threshold) {
  if (tail_start < 0 || tail_start >= traj.size())
    throw NotApplicable("tail start outside the trajectory");
  BoundReport rep;
  rep.tail_start = tail_start;
  rep.sup_estimate = traj.at(tail_start);
  rep.inf_estimate = traj.at(tail_start);
  for (long n = tail_start; n < traj.size(); ++n) {
    BigFloat v = traj.at(n);
    if (v > rep.sup_estimate) rep.sup_estimate = v;
    if (v < rep.inf_estimate) rep.inf_estimate = v;
  }
  if (threshold) {
    BigFloat t(*threshold, traj.precision_bits);
    for (long n = 0; n < traj.size(); ++n)
      if (traj.at(n) > t) {
        rep.exceeded = n;
        break;
      }
  }
  if (traj.exceeded_at && !rep.exceeded) rep.exceeded = traj.exceeded_at;
  return rep;
}

}  // namespace ratde
