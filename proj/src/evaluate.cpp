#include "padecert/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace padecert {

namespace {

Rational abs_rat(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

Rational max_root_abs(const Instance& inst) {
  Rational m = 0;
  for (const auto& ai : inst.alpha) {
    Rational a = abs_rat(ai);
    if (a > m) m = a;
  }
  return m;
}

long floor_rat(const Rational& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return mpz_get_si(q.get_mpz_t());
}

long ceil_rat(const Rational& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return mpz_get_si(q.get_mpz_t());
}

// bits(x) = floor(log2 x) + 1 for x >= 1.
long bit_count(const Int& x) {
  return static_cast<long>(floor_log(x, 2)) + 1;
}

double log_abs_double(const Rational& x) {
  if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
  return BigInterval::log_rational(abs_rat(x), 96).mid_double();
}

double least_squares_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  const size_t n = xs.size();
  if (n < 2) return 0;
  double xbar = 0, ybar = 0;
  for (size_t i = 0; i < n; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(n);
  ybar /= static_cast<double>(n);
  double num = 0, den = 0;
  for (size_t i = 0; i < n; ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  return num / den;
}

}  // namespace

Rational GeometricMajorant::tail_bound(const Rational& beta_abs,
                                       unsigned long from) const {
  if (!(beta_abs > rho))
    throw std::domain_error("tail bound requires |beta| > rho");
  return scale * pow_rational(rho / beta_abs, from) / (beta_abs - rho);
}

GeometricMajorant certify_majorant(const SolutionFamily& fam, unsigned j,
                                   const Rational& beta) {
  const Instance& inst = fam.inst;
  if (j >= fam.f.size())
    throw std::invalid_argument("family member index out of range");
  const Rational amax = max_root_abs(inst);
  const Rational B = abs_rat(beta);
  if (!(B > amax))
    throw std::domain_error(
        "evaluation point must lie outside the disk of the roots of a");
  Rational rho = (sgn(amax) > 0 && Rational(2 * amax) < B)
                     ? Rational(2 * amax)
                     : Rational((amax + B) / 2);

  // First shift where the recurrence's leading coefficient k + m + b_top is
  // certainly positive.
  long K1 = 0;
  {
    Rational thr = -Rational(static_cast<long>(inst.m)) - inst.b_top;
    if (sgn(thr) >= 0) K1 = floor_rat(thr) + 1;
  }

  // Ratio bound: if Phi(K0) <= 1 then |f_{k+w+1}| <= M rho^{k+w+1} follows
  // inductively for all k >= K0 from the recurrence.
  const Rational inv_rho = 1 / rho;
  auto phi_hat = [&](long K0) -> Rational {
    Rational cmin =
        Rational(K0) + Rational(static_cast<long>(inst.m)) + inst.b_top;
    Rational total = 0;
    for (unsigned i = 0; i < inst.m; ++i) {
      const Rational& ai = inst.a.coeff(i);
      if (sgn(ai) == 0) continue;
      Rational ratio = Rational(K0 + static_cast<long>(i)) / cmin;
      if (ratio < 1) ratio = 1;
      total += abs_rat(ai) * ratio * pow_rational(inv_rho, inst.m - i);
    }
    for (unsigned k = 0; k <= inst.w; ++k) {
      if (static_cast<int>(k) > inst.b.degree()) break;
      const Rational& bk = inst.b.coeff(k);
      if (sgn(bk) == 0) continue;
      total += abs_rat(bk) * pow_rational(inv_rho, inst.m - 1 - k) / cmin;
    }
    return total;
  };

  const long cap = static_cast<long>(fam.T) - static_cast<long>(inst.w) - 2;
  long K0 = -1;
  for (long off = 0; K1 + off <= cap; off = (off == 0 ? 1 : 2 * off)) {
    if (phi_hat(K1 + off) <= 1) {
      K0 = K1 + off;
      break;
    }
  }
  if (K0 < 0)
    throw truncation_error(
        "no geometric tail certificate within the truncation; increase T");

  Rational M = 0;
  Rational rpow = 1;  // (1/rho)^i
  for (long i = 0; i <= K0 + static_cast<long>(inst.w) &&
                   i < static_cast<long>(fam.T);
       ++i) {
    Rational cand = abs_rat(fam.f[j].coeff(i)) * rpow;
    if (cand > M) M = cand;
    rpow *= inv_rho;
  }
  if (sgn(M) == 0) M = 1;
  return GeometricMajorant{rho, M, static_cast<unsigned long>(K0)};
}

BigInterval eval_arch_series(const LaurentSeries& f,
                             const GeometricMajorant& cert,
                             const Rational& beta, mpfr_prec_t prec) {
  if (sgn(beta) == 0) throw std::domain_error("evaluation at beta = 0");
  const Rational B = abs_rat(beta);
  const Rational tail_q = cert.tail_bound(B, f.truncation());
  const mpfr_prec_t wp = prec + 64;
  const Rational x = 1 / beta;
  const BigInterval x_iv = BigInterval::from_rational(x, wp);
  BigInterval acc = BigInterval::from_long(0, wp);
  for (size_t k = f.truncation(); k-- > 0;)
    acc = acc * x_iv + BigInterval::from_rational(f.coeff(k), wp);
  acc = acc * x_iv;

  // The tail must be negligible at the requested precision, else a longer
  // truncation is needed (more precision alone cannot help).  The comparison
  // is done in exact rational arithmetic: doubles underflow near prec ~ 1000.
  Rational eps2(1);
  {
    Int one(1);
    mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    eps2 = Rational(1) / Rational(one);
  }
  const double mid = acc.mid_double();
  Rational scale_q = std::isfinite(mid) ? Rational(std::fabs(mid)) : Rational(0);
  if (scale_q < eps2) scale_q = eps2;
  if (tail_q > scale_q * eps2)
    throw truncation_error(
        "geometric tail exceeds the requested precision; increase T");

  const BigInterval tail_iv = BigInterval::hull(
      BigInterval::from_rational(-tail_q, wp),
      BigInterval::from_rational(tail_q, wp));
  return acc + tail_iv;
}

BigInterval eval_arch(const SolutionFamily& fam, unsigned j,
                      const Rational& beta, mpfr_prec_t prec) {
  GeometricMajorant cert = certify_majorant(fam, j, beta);
  return eval_arch_series(fam.f[j], cert, beta, prec);
}

Rational padic_margin(const Instance& inst, const Rational& beta,
                      unsigned long p) {
  if (sgn(beta) == 0) throw std::domain_error("beta must be nonzero");
  const long vb = -padic_valuation(beta, p);
  Rational sigma = 0;
  long e_alpha = 0;
  for (const auto& ai : inst.alpha) {
    if (sgn(ai) == 0) continue;
    e_alpha = std::max(e_alpha, -padic_valuation(ai, p));
  }
  sigma += Rational(std::max(0L, e_alpha));
  Int pm1 = Int(p) - 1;
  for (unsigned i = 0; i < inst.m; ++i) {
    const long vd = padic_valuation(Int(inst.exponent(i).get_den()), p);
    if (vd > 0) sigma += Rational(vd) + Rational(Int(1), pm1);
  }
  return Rational(vb) - sigma;
}

PadicValue eval_padic(const SolutionFamily& fam, unsigned j,
                      const Rational& beta, unsigned long p,
                      unsigned long N) {
  const Instance& inst = fam.inst;
  if (j >= fam.f.size())
    throw std::invalid_argument("family member index out of range");
  const Rational margin = padic_margin(inst, beta, p);
  if (!(margin > 0))
    throw std::domain_error(
        "p-adic convergence condition fails: |beta|_p too small");
  const LaurentSeries& f = fam.f[j];
  const long vb = -padic_valuation(beta, p);

  // Leading factor b_top + j + 1 of the closed form; its denominator is the
  // only k-independent denominator source.
  long c0 = 0;
  {
    Rational lead = inst.b_top + Rational(static_cast<long>(j) + 1);
    if (sgn(lead) != 0)
      c0 = std::max(0L, -padic_valuation(lead, p));
  }

  // Exact minimum valuation of the stored terms f_k beta^{-k-1}.
  long vmin = kValInfinity;
  for (size_t k = 0; k < f.truncation(); ++k) {
    if (sgn(f.coeff(k)) == 0) continue;
    vmin = std::min(vmin, padic_valuation(f.coeff(k), p) +
                              (static_cast<long>(k) + 1) * vb);
  }
  if (vmin == kValInfinity)
    return PadicValue::zero(p, static_cast<long>(N));
  const long target = vmin + static_cast<long>(N);

  // Tail valuations: v(t_K) >= K(vb - sigma) + vb - D(K) where D collects
  // the mu_K, d_K and constant denominators.  The d_K part is sub-linear;
  // absorbing it into half the convergence margin gives the linear lower
  // bound v(t_K) >= K delta + vb - C - c0 with delta = margin/2.
  const Rational delta = margin / 2;
  long K0 = std::max(1L, ceil_rat(1 / delta));
  Rational gmax;
  bool first = true;
  const Int num_abs = abs(Int(inst.b_top.get_num()));
  const Int den_b = Int(inst.b_top.get_den());
  for (long K = 0; K <= 2 * K0 + 2; ++K) {
    Int NUM = num_abs + Int(K + 1) * den_b;
    Rational g = Rational(bit_count(NUM)) - delta * Rational(K);
    if (first || g > gmax) {
      gmax = g;
      first = false;
    }
  }
  const Rational C = gmax + 1;
  const Rational tail_val_q = Rational(Int(fam.T)) * delta + Rational(vb) -
                              C - Rational(c0);
  if (floor_rat(tail_val_q) < target)
    throw truncation_error(
        "truncation too small for the requested p-adic precision");

  PadicValue acc = PadicValue::zero(p, target);
  const Rational x = 1 / beta;
  Rational xpow = x;
  for (size_t k = 0; k < f.truncation(); ++k) {
    if (sgn(f.coeff(k)) != 0)
      acc = acc + PadicValue::from_rational(Rational(f.coeff(k) * xpow), p,
                                            target);
    xpow *= x;
  }
  return acc;
}

BigInterval remainder_enclosure(const SolutionFamily& fam,
                                const PadeSystem& sys, unsigned j, unsigned l,
                                const Rational& beta, mpfr_prec_t prec) {
  GeometricMajorant cert = certify_majorant(fam, j, beta);
  auto prod = fam.f[j].mul_by_poly(sys.P[l]);
  // |tail_e| <= M rho^e sum_i |p_i| rho^i
  Rational pabs = 0, rp = 1;
  for (int i = 0; i <= sys.P[l].degree(); ++i) {
    pabs += abs_rat(sys.P[l].coeff(i)) * rp;
    rp *= cert.rho;
  }
  GeometricMajorant tail_cert{cert.rho, Rational(cert.scale * pabs),
                              cert.base_index};
  return eval_arch_series(prod.tail, tail_cert, beta, prec);
}

EstimateReport check_estimates(const SolutionFamily& fam,
                               const std::vector<PadeSystem>& systems,
                               const Rational& beta, const Place& v,
                               mpfr_prec_t prec) {
  const Instance& inst = fam.inst;
  EstimateReport rep;
  rep.v = v;
  rep.beta = beta;
  rep.decay_rate = A_value(inst, beta, v).enclose(192).mid_double();
  rep.growth_rate_u = U_value(inst, beta, v).enclose(192).mid_double();
  unsigned long n_hi = 1;
  for (const auto& sys : systems) n_hi = std::max<unsigned long>(n_hi, sys.n);
  rep.growth_rate_f =
      F_value(inst, beta, v, n_hi).enclose(192).mid_double() /
      static_cast<double>(n_hi);

  if (v.arch) {
    const BigInterval f0 = eval_arch(fam, 0, beta, prec);
    for (const auto& sys : systems) {
      EstimateRow row;
      row.n = sys.n;
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& P : sys.P)
        best = std::max(best, log_abs_double(P.eval(beta)));
      for (const auto& qrow : sys.Q)
        for (const auto& Q : qrow)
          best = std::max(best, log_abs_double(Q.eval(beta)));
      row.log_pq = best;

      const BigInterval Riv =
          BigInterval::from_rational(sys.P[0].eval(beta), prec) * f0 -
          BigInterval::from_rational(sys.Q[0][0].eval(beta), prec);
      const BigInterval absR = Riv.abs();
      if (absR.is_positive()) {
        row.log_r = absR.log().mid_double();
        row.r_exact = true;
      } else {
        row.log_r = std::log(absR.hi_double());
        row.r_exact = false;
      }
      rep.rows.push_back(row);
    }
  } else {
    const unsigned long p = v.p;
    const double lp = std::log(static_cast<double>(p));
    unsigned long N =
        64 + static_cast<unsigned long>(
                 std::ceil(std::max(0.0, rep.decay_rate) *
                           static_cast<double>(n_hi) * 1.5 / lp));
    PadicValue f0 = eval_padic(fam, 0, beta, p, N);
    for (const auto& sys : systems) {
      EstimateRow row;
      row.n = sys.n;
      double best = -std::numeric_limits<double>::infinity();
      auto log_p_abs = [&](const Rational& val) {
        if (sgn(val) == 0) return -std::numeric_limits<double>::infinity();
        return -static_cast<double>(padic_valuation(val, p)) * lp;
      };
      for (const auto& P : sys.P) best = std::max(best, log_p_abs(P.eval(beta)));
      for (const auto& qrow : sys.Q)
        for (const auto& Q : qrow) best = std::max(best, log_p_abs(Q.eval(beta)));
      row.log_pq = best;

      const long big = f0.abs_prec() + 128;
      PadicValue R =
          PadicValue::from_rational(sys.P[0].eval(beta), p, big) * f0 -
          PadicValue::from_rational(sys.Q[0][0].eval(beta), p, big);
      if (R.is_zero_to_precision()) {
        PadicValue f0b = eval_padic(fam, 0, beta, p, 2 * N);
        R = PadicValue::from_rational(sys.P[0].eval(beta), p,
                                      f0b.abs_prec() + 128) *
                f0b -
            PadicValue::from_rational(sys.Q[0][0].eval(beta), p,
                                      f0b.abs_prec() + 128);
      }
      if (R.is_zero_to_precision()) {
        row.log_r = -static_cast<double>(R.abs_prec()) * lp;
        row.r_exact = false;
      } else {
        row.log_r = -static_cast<double>(R.valuation()) * lp;
        row.r_exact = true;
      }
      rep.rows.push_back(row);
    }
  }

  std::vector<double> ns, lr, lpq;
  for (const auto& row : rep.rows) {
    if (!std::isfinite(row.log_r) || !std::isfinite(row.log_pq)) continue;
    ns.push_back(row.n);
    lr.push_back(row.log_r);
    lpq.push_back(row.log_pq);
  }
  rep.slope_r = least_squares_slope(ns, lr);
  rep.slope_pq = least_squares_slope(ns, lpq);
  return rep;
}

namespace {

// Decodes a scan cell index into the lambda vector; base = 2 h_max + 1.
void decode_lambda(unsigned long idx, unsigned long base, long h,
                   std::vector<long>& lambda) {
  for (auto& entry : lambda) {
    entry = static_cast<long>(idx % base) - h;
    idx /= base;
  }
}

}  // namespace

ScanReport linear_form_scan(const SolutionFamily& fam, const Rational& beta,
                            const Place& v0, const Rational& epsilon,
                            unsigned long h_max, mpfr_prec_t prec,
                            Exec mode, bool keep_rows) {
  const Instance& inst = fam.inst;
  ScanReport rep;
  rep.meas = measure(inst, beta, v0, epsilon, prec);
  rep.h_max = h_max;
  rep.min_log_margin = std::numeric_limits<double>::infinity();
  if (h_max == 0) return rep;  // empty scan is well defined regardless
  if (!rep.meas.applicable)
    throw std::domain_error("V - epsilon not positive; no measure to scan");

  const unsigned mm = inst.m;  // lambda vector length
  const unsigned long base = 2 * h_max + 1;
  unsigned long total = 1;
  for (unsigned i = 0; i < mm; ++i) {
    if (total > 100000000UL / base)
      throw std::invalid_argument("scan grid too large");
    total *= base;
  }
  const MeasureReport meas_hi = measure(inst, beta, v0, epsilon, 2 * prec);

  std::vector<unsigned char> status(total, 0);
  std::vector<double> margins(total,
                              std::numeric_limits<double>::infinity());
  const long h = static_cast<long>(h_max);

  if (v0.arch) {
    std::vector<BigInterval> flo, fhi;
    for (unsigned j = 0; j <= inst.w; ++j) {
      flo.push_back(eval_arch(fam, j, beta, prec));
      fhi.push_back(eval_arch(fam, j, beta, 2 * prec));
    }
    auto make_bounds = [&](const MeasureReport& ms, mpfr_prec_t pr) {
      std::vector<BigInterval> out;
      for (unsigned long hh = 1; hh <= h_max; ++hh) {
        BigInterval hiv = BigInterval::from_long(static_cast<long>(hh), pr);
        out.push_back(ms.c_iv * hiv * (-(ms.mu_iv * hiv.log())).exp());
      }
      return out;
    };
    const std::vector<BigInterval> blo = make_bounds(rep.meas, prec);
    const std::vector<BigInterval> bhi = make_bounds(meas_hi, 2 * prec);

    par_for(mode, static_cast<long>(total), [&](long c) {
      std::vector<long> lambda(mm);
      decode_lambda(static_cast<unsigned long>(c), base, h, lambda);
      long habs = 0;
      for (long v : lambda) habs = std::max(habs, std::labs(v));
      if (habs == 0) {
        status[c] = 255;
        return;
      }
      auto cell = [&](const std::vector<BigInterval>& fv,
                      const std::vector<BigInterval>& bv,
                      mpfr_prec_t pr) {
        BigInterval form = BigInterval::from_long(lambda[0], pr);
        for (unsigned j = 0; j <= inst.w; ++j)
          form = form +
                 BigInterval::from_long(lambda[j + 1], pr) * fv[j];
        return std::pair<BigInterval, const BigInterval*>(form.abs(),
                                                          &bv[habs - 1]);
      };
      auto [fa, bp] = cell(flo, blo, prec);
      if (bp->certainly_less(fa)) {
        margins[c] = std::log(fa.lo_double()) - std::log(bp->hi_double());
        status[c] = 0;
        return;
      }
      auto [fa2, bp2] = cell(fhi, bhi, 2 * prec);
      if (bp2->certainly_less(fa2)) {
        margins[c] = std::log(fa2.lo_double()) - std::log(bp2->hi_double());
        status[c] = 0;
      } else if (fa2.certainly_less(*bp2)) {
        margins[c] =
            std::log(std::max(fa2.lo_double(),
                              std::numeric_limits<double>::min())) -
            std::log(bp2->hi_double());
        status[c] = 1;
      } else {
        margins[c] =
            std::log(std::max(fa2.lo_double(),
                              std::numeric_limits<double>::min())) -
            std::log(bp2->hi_double());
        status[c] = 2;
      }
    });

    // Deterministic merge in cell order; retained rows are rebuilt serially.
    auto build_row = [&](unsigned long c) {
      ScanRow row;
      row.lambda.resize(mm);
      decode_lambda(c, base, h, row.lambda);
      long habs = 0;
      for (long v : row.lambda) habs = std::max(habs, std::labs(v));
      BigInterval form = BigInterval::from_long(row.lambda[0], 2 * prec);
      for (unsigned j = 0; j <= inst.w; ++j)
        form = form +
               BigInterval::from_long(row.lambda[j + 1], 2 * prec) * fhi[j];
      BigInterval fa = form.abs();
      row.form_lo = fa.lo_string();
      row.form_hi = fa.hi_string();
      row.bound_hi = bhi[habs - 1].hi_string();
      row.log_margin = margins[c];
      row.violation = status[c] == 1;
      row.undecided = status[c] == 2;
      return std::make_pair(std::move(row), habs);
    };
    for (unsigned long c = 0; c < total; ++c) {
      if (status[c] == 255) continue;
      ++rep.cells;
      rep.min_log_margin = std::min(rep.min_log_margin, margins[c]);
      const bool flag = status[c] == 1 || status[c] == 2;
      if (!flag && !keep_rows) continue;
      auto [row, habs] = build_row(c);
      if (keep_rows) rep.rows.push_back(row);
      if (flag) {
        rep.h0_proxy = std::max(rep.h0_proxy,
                                static_cast<unsigned long>(habs));
        rep.flagged.push_back(std::move(row));
      }
    }
    return rep;
  }

  // p-adic place: compare in log space with exact valuations.
  const unsigned long p = v0.p;
  const unsigned long N1 = 64, N2 = 128;
  std::vector<PadicValue> flo, fhi;
  for (unsigned j = 0; j <= inst.w; ++j) {
    flo.push_back(eval_padic(fam, j, beta, p, N1));
    fhi.push_back(eval_padic(fam, j, beta, p, N2));
  }
  const BigInterval lp = BigInterval::log_rational(
      Rational(static_cast<long>(p)), prec);
  auto make_log_bounds = [&](const MeasureReport& ms, mpfr_prec_t pr) {
    std::vector<BigInterval> out;
    for (unsigned long hh = 1; hh <= h_max; ++hh) {
      BigInterval hiv = BigInterval::from_long(static_cast<long>(hh), pr);
      // H_{v0}(lambda) = 1 for integer vectors at a finite place.
      out.push_back(ms.c_iv.log() - ms.mu_iv * hiv.log());
    }
    return out;
  };
  const std::vector<BigInterval> blo = make_log_bounds(rep.meas, prec);
  const std::vector<BigInterval> bhi = make_log_bounds(meas_hi, 2 * prec);

  par_for(mode, static_cast<long>(total), [&](long c) {
    std::vector<long> lambda(mm);
    decode_lambda(static_cast<unsigned long>(c), base, h, lambda);
    long habs = 0;
    for (long v : lambda) habs = std::max(habs, std::labs(v));
    if (habs == 0) {
      status[c] = 255;
      return;
    }
    auto cell = [&](const std::vector<PadicValue>& fv) {
      long big = fv[0].abs_prec() + 64;
      PadicValue form =
          PadicValue::from_rational(Rational(lambda[0]), p, big);
      for (unsigned j = 0; j <= inst.w; ++j)
        form = form + PadicValue::from_rational(Rational(lambda[j + 1]), p,
                                                big) *
                          fv[j];
      return form;
    };
    PadicValue form = cell(flo);
    const BigInterval* bound = &blo[habs - 1];
    if (form.is_zero_to_precision()) {
      form = cell(fhi);
      bound = &bhi[habs - 1];
    }
    if (form.is_zero_to_precision()) {
      status[c] = 2;
      margins[c] = -static_cast<double>(form.abs_prec()) *
                       std::log(static_cast<double>(p)) -
                   bound->hi_double();
      return;
    }
    BigInterval logform =
        BigInterval::from_long(-form.valuation(), bound->precision()) * lp;
    margins[c] = logform.lo_double() - bound->hi_double();
    if (bound->certainly_less(logform))
      status[c] = 0;
    else if (logform.certainly_less(*bound))
      status[c] = 1;
    else
      status[c] = 2;
  });

  auto build_row = [&](unsigned long c) {
    ScanRow row;
    row.lambda.resize(mm);
    decode_lambda(c, base, h, row.lambda);
    long habs = 0;
    for (long v : row.lambda) habs = std::max(habs, std::labs(v));
    PadicValue form =
        PadicValue::from_rational(Rational(row.lambda[0]), p,
                                  fhi[0].abs_prec() + 64);
    for (unsigned j = 0; j <= inst.w; ++j)
      form = form + PadicValue::from_rational(Rational(row.lambda[j + 1]),
                                              p, fhi[0].abs_prec() + 64) *
                        fhi[j];
    row.form_lo = form.to_string();
    row.form_hi = row.form_lo;
    row.bound_hi = bhi[habs - 1].hi_string();
    row.log_margin = margins[c];
    row.violation = status[c] == 1;
    row.undecided = status[c] == 2;
    return std::make_pair(std::move(row), habs);
  };
  for (unsigned long c = 0; c < total; ++c) {
    if (status[c] == 255) continue;
    ++rep.cells;
    rep.min_log_margin = std::min(rep.min_log_margin, margins[c]);
    const bool flag = status[c] == 1 || status[c] == 2;
    if (!flag && !keep_rows) continue;
    auto [row, habs] = build_row(c);
    if (keep_rows) rep.rows.push_back(row);
    if (flag) {
      rep.h0_proxy =
          std::max(rep.h0_proxy, static_cast<unsigned long>(habs));
      rep.flagged.push_back(std::move(row));
    }
  }
  return rep;
}

PerronReport perron_check_series(const LaurentSeries& f,
                                 const Rational& alpha_max_abs, unsigned lo,
                                 unsigned hi) {
  if (lo == 0) lo = 1;
  if (lo > hi) throw std::invalid_argument("empty window");
  if (hi >= f.truncation())
    throw truncation_error("window extends beyond the truncation");
  PerronReport rep;
  rep.lo = lo;
  rep.hi = hi;
  double best = -std::numeric_limits<double>::infinity();
  for (unsigned n = lo; n <= hi; ++n) {
    const Rational& c = f.coeff(n);
    if (sgn(c) == 0) continue;
    best = std::max(best, log_abs_double(c) / static_cast<double>(n));
  }
  rep.sup_root = std::isfinite(best) ? std::exp(best) : 0.0;
  rep.alpha_max =
      BigInterval::from_rational(alpha_max_abs, 64).mid_double();
  rep.margin = rep.alpha_max - rep.sup_root;
  return rep;
}

PerronReport perron_check(const SolutionFamily& fam, unsigned lo,
                          unsigned hi) {
  const Rational amax = max_root_abs(fam.inst);
  PerronReport rep;
  bool first = true;
  for (const auto& fj : fam.f) {
    PerronReport r = perron_check_series(fj, amax, lo, hi);
    if (first || r.sup_root > rep.sup_root) {
      rep = r;
      first = false;
    }
  }
  return rep;
}

}  // namespace padecert
