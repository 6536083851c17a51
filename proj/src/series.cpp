#include "padecert/series.hpp"

namespace padecert {

namespace {

void require_solvable(const Instance& inst) {
  if (!inst.flags.distinct_roots)
    throw hypothesis_error("repeated roots: solution family is not defined");
  if (!inst.flags.exponents_ok)
    throw hypothesis_error("some exponent s_i lies in Z_{<=-1}");
  if (!inst.flags.top_coeff_ok)
    throw hypothesis_error("top coefficient of b lies in Z_{<-1}");
}

// Coefficients of (1 - alpha x)^e to length L.
std::vector<Rational> binomial_factor(const Rational& alpha, const Rational& e,
                                      size_t L) {
  std::vector<Rational> c(L, Rational(0));
  if (L == 0) return c;
  c[0] = 1;
  for (size_t n = 0; n + 1 < L; ++n) {
    if (sgn(alpha) == 0) break;
    c[n + 1] = c[n] * alpha * (Rational(n) - e) / Rational(n + 1);
  }
  return c;
}

std::vector<Rational> conv_trunc(const std::vector<Rational>& x,
                                 const std::vector<Rational>& y, size_t L,
                                 Exec mode) {
  std::vector<Rational> out(L, Rational(0));
  par_for(mode, static_cast<long>(L), [&](long n) {
    Rational acc = 0;
    for (long i = 0; i <= n; ++i) acc += x[i] * y[n - i];
    out[n] = acc;
  });
  return out;
}

// Expansions of prod_i (1 - alpha_i x)^{s_i} (shift = 0) and
// prod_i (1 - alpha_i x)^{-1-s_i} (shift applied to the exponents).
std::vector<Rational> product_expansion(const Instance& inst, bool inverted,
                                        size_t L, Exec mode) {
  std::vector<Rational> acc(L, Rational(0));
  if (L == 0) return acc;
  acc[0] = 1;
  for (unsigned i = 0; i < inst.m; ++i) {
    Rational e = inverted ? Rational(-1) - inst.exponent(i) : inst.exponent(i);
    acc = conv_trunc(acc, binomial_factor(inst.alpha[i], e, L), L, mode);
  }
  return acc;
}

Rational twisted_sum(const std::vector<Rational>& A,
                     const std::vector<Rational>& B, const Rational& b_top,
                     unsigned j, unsigned long k) {
  // f_{j,j+k} = A_k + (b_top+j+1) sum_{u=1}^{k} A_{k-u} B_u / (b_top+j+u+1);
  // the u = 0 term has ratio identically 1, which also covers b_top = -1.
  Rational acc = A[k];
  Rational lead = b_top + Rational(j) + 1;
  if (sgn(lead) != 0) {
    Rational inner = 0;
    for (unsigned long u = 1; u <= k; ++u) {
      Rational den = b_top + Rational(j) + Rational(u) + 1;
      if (sgn(den) == 0)
        throw hypothesis_error("vanishing denominator b_top + j + u + 1 at u=" +
                               std::to_string(u));
      inner += A[k - u] * B[u] / den;
    }
    acc += lead * inner;
  }
  return acc;
}

}  // namespace

std::vector<Rational> canonical_seeds(const Instance& inst, unsigned j) {
  std::vector<Rational> row(inst.w + 1, Rational(0));
  for (unsigned k = j; k <= inst.w; ++k)
    row[k] = lauricella_coeff(inst, j, k - j);
  return row;
}

SolutionFamily build_by_recurrence(
    const Instance& inst, const std::vector<std::vector<Rational>>& seeds,
    size_t T) {
  require_solvable(inst);
  if (seeds.size() != inst.w + 1)
    throw std::invalid_argument("need one seed row per family member");
  if (T < inst.m)
    throw truncation_error("truncation must be at least m");
  SolutionFamily fam{inst, T, {}, {}};
  long u = inst.m;
  long v = inst.b.degree();  // -1 for b = 0
  for (unsigned j = 0; j <= inst.w; ++j) {
    if (seeds[j].size() != inst.w + 1)
      throw std::invalid_argument("seed row must have w + 1 entries");
    std::vector<Rational> f(T, Rational(0));
    for (size_t k = 0; k <= inst.w; ++k) f[k] = seeds[j][k];
    for (long k = 0; k + static_cast<long>(inst.w) + 1 < static_cast<long>(T);
         ++k) {
      long top = k + inst.w + 1;
      Rational acc = 0;
      for (long i = 0; i <= u; ++i) {
        long idx = k + i - 1;
        if (idx < 0 || idx == top) continue;
        acc += inst.a.coeff(i) * Rational(k + i) * f[idx];
      }
      for (long i = 0; i <= v; ++i) {
        long idx = k + i;
        if (idx == top) continue;
        acc += inst.b.coeff(i) * f[idx];
      }
      Rational lead = Rational(k + static_cast<long>(inst.m)) + inst.b_top;
      if (sgn(lead) == 0)
        throw hypothesis_error(
            "leading recurrence coefficient vanishes at k = " +
            std::to_string(k));
      f[top] = -acc / lead;
    }
    fam.f.emplace_back(std::move(f));
    fam.provenance.push_back(Route::Recurrence);
  }
  return fam;
}

LaurentSeries closed_form_series(const Instance& inst, unsigned j, size_t T,
                                 Exec mode) {
  require_solvable(inst);
  if (j > inst.w) throw std::invalid_argument("family index out of range");
  std::vector<Rational> f(T, Rational(0));
  if (T > j) {
    size_t L = T - j;
    std::vector<Rational> A = product_expansion(inst, false, L, mode);
    std::vector<Rational> B = product_expansion(inst, true, L, mode);
    par_for(mode, static_cast<long>(L), [&](long k) {
      f[j + k] = twisted_sum(A, B, inst.b_top, j, k);
    });
  }
  return LaurentSeries(std::move(f));
}

SolutionFamily build_family(const Instance& inst, size_t T, Route route,
                            Exec mode) {
  if (route == Route::Recurrence) {
    std::vector<std::vector<Rational>> seeds;
    for (unsigned j = 0; j <= inst.w; ++j)
      seeds.push_back(canonical_seeds(inst, j));
    return build_by_recurrence(inst, seeds, T);
  }
  require_solvable(inst);
  SolutionFamily fam{inst, T, {}, {}};
  for (unsigned j = 0; j <= inst.w; ++j) {
    fam.f.push_back(closed_form_series(inst, j, T, mode));
    fam.provenance.push_back(Route::ClosedForm);
  }
  return fam;
}

Rational lauricella_coeff(const Instance& inst, unsigned j, unsigned long k) {
  require_solvable(inst);
  if (j > inst.w) throw std::invalid_argument("family index out of range");
  std::vector<Rational> A = product_expansion(inst, false, k + 1, Exec::Serial);
  std::vector<Rational> B = product_expansion(inst, true, k + 1, Exec::Serial);
  return twisted_sum(A, B, inst.b_top, j, k);
}

Rational lauricella_coeff_enumerated(const Instance& inst, unsigned j,
                                     unsigned long k) {
  require_solvable(inst);
  auto part_sum = [&](unsigned long total, bool inverted) {
    Rational acc = 0;
    for_compositions(inst.m, total, [&](const std::vector<unsigned long>& ks) {
      Rational term = 1;
      for (unsigned i = 0; i < inst.m; ++i) {
        Rational e = -inst.exponent(i);
        if (inverted) e = Rational(1) + inst.exponent(i);
        term *= pochhammer(e, ks[i]) / Rational(factorial(ks[i]));
        Rational pw = 1;
        for (unsigned long t = 0; t < ks[i]; ++t) pw *= inst.alpha[i];
        term *= pw;
      }
      acc += term;
    });
    return acc;
  };
  Rational out = 0;
  for (unsigned long w2 = 0; w2 <= k; ++w2) {
    Rational term = part_sum(w2, false) * part_sum(k - w2, true);
    if (w2 != k) {
      Rational den = inst.b_top + Rational(j) + Rational(k - w2) + 1;
      if (sgn(den) == 0)
        throw hypothesis_error("vanishing denominator in closed form");
      term *= (inst.b_top + Rational(j) + 1) / den;
    }
    out += term;
  }
  return out;
}

LaurentSeries::PolyProduct apply_operator(const Instance& inst,
                                          const LaurentSeries& f) {
  if (f.truncation() < inst.m + 1)
    throw truncation_error("truncation too small for one tail coefficient");
  return inst.operator_L().apply(f);
}

Rational phi(const LaurentSeries& f, const Poly& p) {
  if (p.is_zero()) return 0;
  if (static_cast<size_t>(p.degree()) >= f.truncation())
    throw truncation_error("phi argument degree " +
                           std::to_string(p.degree()) +
                           " reaches beyond truncation " +
                           std::to_string(f.truncation()));
  Rational acc = 0;
  for (size_t k = 0; k <= static_cast<size_t>(p.degree()); ++k)
    acc += p.coeff(k) * f.coeff(k);
  return acc;
}

Poly phi_bivariate(const LaurentSeries& f, const Poly& P) {
  if (P.is_zero() || P.degree() == 0) return Poly();
  size_t N = static_cast<size_t>(P.degree());
  if (N > f.truncation())
    throw truncation_error("phi_bivariate degree beyond truncation");
  std::vector<Rational> q(N, Rational(0));
  for (size_t k = 0; k < N; ++k)
    for (size_t i = k + 1; i <= N; ++i)
      q[k] += P.coeff(i) * f.coeff(i - 1 - k);
  return Poly(std::move(q));
}

JpExpansion jp_expand(const Instance& inst) {
  JpExpansion out;
  DiffOpN inner(std::vector<Poly>{-inst.b, inst.a});  // a d/dz - b
  out.composed = compose(DiffOpN::derivative_power(inst.m - 1), inner);
  DiffOpN first, second;
  {
    std::vector<Poly> c(inst.m + 1);
    for (unsigned i = 0; i <= inst.m; ++i)
      c[inst.m - i] = Rational(binomial_uint(inst.m, i)) *
                      inst.a.derivative(i);
    first = DiffOpN(std::move(c));
  }
  {
    Poly ab = inst.a.derivative() + inst.b;
    std::vector<Poly> c(inst.m);
    for (unsigned i = 0; i <= inst.m - 1; ++i)
      c[inst.m - 1 - i] =
          Rational(binomial_uint(inst.m - 1, i)) * ab.derivative(i);
    second = DiffOpN(std::move(c));
  }
  out.expanded = first - second;
  out.equal = out.composed == out.expanded;
  return out;
}

FamilyCheck verify_family(const SolutionFamily& fam) {
  FamilyCheck out;
  const Instance& inst = fam.inst;
  out.orders_ok = true;
  for (unsigned j = 0; j <= inst.w; ++j) {
    auto ord = fam.f[j].ord_at_infinity();
    if (!ord.exact || ord.value != static_cast<long>(j) + 1)
      out.orders_ok = false;
  }
  out.heads_ok = true;
  for (unsigned j = 0; j <= inst.w; ++j) {
    auto lf = apply_operator(inst, fam.f[j]);
    Poly expect =
        Poly::monomial(inst.b_top + Rational(j) + 1, inst.m - j - 2);
    if (lf.polynomial != expect) out.heads_ok = false;
    if (lf.tail.ord_at_infinity().exact) out.heads_ok = false;
  }
  out.seed_matrix_ok = true;
  for (unsigned j = 0; j <= inst.w; ++j) {
    for (unsigned k = 0; k <= inst.w; ++k) {
      const Rational& v = fam.f[j].coeff(k);
      if (k < j && sgn(v) != 0) out.seed_matrix_ok = false;
      if (k == j && v != 1) out.seed_matrix_ok = false;
    }
  }
  return out;
}

}  // namespace padecert
