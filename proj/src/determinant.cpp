#include "padecert/determinant.hpp"

#include <algorithm>
#include <sstream>

namespace padecert {

namespace {

std::string rat_list(const std::vector<Rational>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(xs[i]);
  }
  return os.str();
}

Poly linear_in_n(const Rational& slope, const Rational& offset) {
  return Poly(std::vector<Rational>{offset, slope});
}

}  // namespace

const HypothesisReport::Entry* HypothesisReport::find(
    const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

Poly coprimality_resultant(const Instance& inst) {
  const unsigned m = inst.m;
  // Coefficients of a (constants in n) and of n a' + b (linear in n),
  // assembled into the Sylvester matrix over Q[n].  deg_z(n a' + b) = m - 1
  // always, because the z^{m-1} coefficient is m n + b_{m-1} != 0 in Q[n].
  const Poly da = inst.a.derivative();
  std::vector<Poly> A(m + 1), C(m);
  for (unsigned k = 0; k <= m; ++k) A[k] = Poly(inst.a.coeff(k));
  for (unsigned k = 0; k < m; ++k)
    C[k] = linear_in_n(da.coeff(k), inst.b.coeff(k));

  const unsigned size = 2 * m - 1;
  Matrix<Poly> syl(size, size, Poly());
  for (unsigned r = 0; r + 1 < m; ++r)  // m - 1 rows of a
    for (unsigned k = 0; k <= m; ++k) syl.at(r, r + k) = A[m - k];
  for (unsigned r = 0; r < m; ++r)  // m rows of n a' + b
    for (unsigned k = 0; k < m; ++k)
      syl.at(m - 1 + r, r + k) = C[m - 1 - k];
  return det_bareiss(syl);
}

std::vector<long> positive_integer_roots(const Poly& p) {
  if (p.is_zero())
    throw std::invalid_argument("root search on the zero polynomial");
  std::vector<long> roots;
  if (p.degree() == 0) return roots;
  // Cauchy bound 1 + max |c_i| / |lead| caps every integer root.
  Rational bound = 0;
  const Rational lead = p.leading();
  for (long k = 0; k <= p.degree(); ++k) {
    Rational t = abs(p.coeff(k) / lead);
    if (t > bound) bound = t;
  }
  bound += 1;
  Int cap(bound.get_num() / bound.get_den() + 1);
  if (cap > 1000000)
    throw std::logic_error("integer root bound too large to enumerate");
  for (long n = 1; Int(n) <= cap; ++n)
    if (p.eval(Rational(n)) == 0) roots.push_back(n);
  return roots;
}

HypothesisReport check_hypotheses(const Instance& inst, unsigned n_max) {
  HypothesisReport rep;
  const unsigned m = inst.m;

  {
    HypothesisReport::Entry e;
    e.name = "distinct-roots";
    e.pass = inst.flags.distinct_roots;
    e.witness = e.pass ? "roots " + rat_list(inst.alpha) + " pairwise distinct"
                       : "repeated root among " + rat_list(inst.alpha);
    rep.entries.push_back(e);
  }

  {
    HypothesisReport::Entry e;
    e.name = "exponents";
    e.pass = true;
    std::ostringstream os;
    for (unsigned i = 0; i < m; ++i) {
      if (!inst.s[i]) {
        e.pass = false;
        os << "s_" << i << " undefined at repeated root; ";
        continue;
      }
      if (is_integer_leq(*inst.s[i], -1)) {
        e.pass = false;
        os << "s_" << i << " = " << rat_to_string(*inst.s[i])
           << " is a negative integer; ";
      }
    }
    if (e.pass) {
      std::vector<Rational> vals;
      for (const auto& si : inst.s) vals.push_back(*si);
      e.witness = "s = (" + rat_list(vals) + ") avoids Z_{<=-1}";
    } else {
      e.witness = os.str();
    }
    rep.entries.push_back(e);
  }

  {
    HypothesisReport::Entry e;
    e.name = "top-coefficient";
    e.pass = !is_integer_leq(inst.b_top, -2);
    e.witness = "b_{m-1} = " + rat_to_string(inst.b_top) +
                (e.pass ? " avoids Z_{<-1}" : " lies in Z_{<-1}");
    rep.entries.push_back(e);
  }

  {
    HypothesisReport::Entry e;
    e.name = "recurrence-leading-coefficient";
    e.pass = inst.flags.leading_nonzero;
    e.witness = e.pass
                    ? "k + m + b_{m-1} != 0 for all k >= 0"
                    : "k + m + b_{m-1} vanishes at k = " +
                          rat_to_string(-(inst.b_top + m));
    rep.entries.push_back(e);
  }

  const Poly da = inst.a.derivative();
  {
    HypothesisReport::Entry e;
    e.name = "coprimality";
    e.pass = true;
    for (unsigned n = 1; n <= n_max; ++n) {
      Poly g = Poly::gcd(inst.a, Rational(static_cast<long>(n)) * da + inst.b);
      if (g.degree() != 0) {
        e.pass = false;
        e.witness = "gcd(a, n a' + b) = " + g.to_string() +
                    " at n = " + std::to_string(n);
        break;
      }
    }
    if (e.pass)
      e.witness =
          "gcd(a, n a' + b) = 1 for 1 <= n <= " + std::to_string(n_max);
    rep.entries.push_back(e);
  }

  {
    HypothesisReport::Entry e;
    e.name = "coprimality-resultant";
    Poly res = coprimality_resultant(inst);
    if (res.is_zero()) {
      e.pass = false;
      e.witness = "Res_z(a, n a' + b) vanishes identically";
    } else {
      std::vector<long> roots = positive_integer_roots(res);
      e.pass = roots.empty();
      std::ostringstream os;
      os << "Res_z(a, n a' + b) has ";
      if (roots.empty()) {
        os << "no positive integer roots";
      } else {
        os << "positive integer roots";
        for (long r : roots) os << " " << r;
      }
      // The roots are exactly the n with s_i = -n for some i; surface the
      // agreement so a mismatch with the exponent data is visible.
      std::vector<long> expected;
      if (inst.flags.distinct_roots)
        for (const auto& si : inst.s)
          if (si && is_integer_leq(*si, -1)) {
            Rational neg = -*si;
            expected.push_back(mpz_get_si(neg.get_num().get_mpz_t()));
          }
      std::sort(expected.begin(), expected.end());
      os << (roots == expected ? "; matches" : "; MISMATCH with")
         << " the negated integer exponents";
      e.witness = os.str();
    }
    rep.entries.push_back(e);
  }

  {
    HypothesisReport::Entry e;
    e.name = "coprimality-textual-b";
    e.informational = true;
    e.pass = true;
    for (unsigned n = 1; n <= n_max; ++n) {
      Poly g = Poly::gcd(inst.b, Rational(static_cast<long>(n)) * da + inst.b);
      if (g.degree() != 0) {
        e.pass = false;
        e.witness = "gcd(b, n a' + b) = " + g.to_string() +
                    " at n = " + std::to_string(n) +
                    "; the operative coprimality partner is a";
        break;
      }
    }
    if (e.pass)
      e.witness = "gcd(b, n a' + b) = 1 for 1 <= n <= " +
                  std::to_string(n_max) +
                  "; the operative coprimality partner is a";
    rep.entries.push_back(e);
  }

  rep.all_pass = true;
  for (const auto& e : rep.entries)
    if (!e.informational && !e.pass) rep.all_pass = false;
  return rep;
}

Matrix<Rational> build_Mn(const SolutionFamily& fam, unsigned n) {
  const unsigned w = fam.inst.w;
  const Poly an = fam.inst.a.pow(n);
  if (static_cast<long>(w) + an.degree() >= static_cast<long>(fam.T))
    throw truncation_error("truncation too small for the pairing matrix");
  Matrix<Rational> M(w + 1, w + 1, Rational(0));
  for (unsigned j = 0; j <= w; ++j)
    for (unsigned k = 0; k <= w; ++k)
      M.at(j, k) = phi(fam.f[j], an.shifted(k));
  return M;
}

DeterminantReport build_Delta(const SolutionFamily& fam,
                              const PadeSystem& sys) {
  const unsigned m = fam.inst.m;
  const unsigned w = fam.inst.w;
  DeterminantReport rep;
  rep.n = sys.n;

  Matrix<Poly> D(m, m, Poly());
  for (unsigned l = 0; l < m; ++l) {
    D.at(0, l) = sys.P[l];
    for (unsigned j = 0; j <= w; ++j) D.at(j + 1, l) = sys.Q[j][l];
  }
  Poly delta = det_bareiss(D);
  rep.delta_constant = delta.degree() <= 0;
  rep.delta = delta.coeff(0);
  rep.nonzero = rep.delta_constant && rep.delta != 0;

  rep.det_Mn = det_bareiss(build_Mn(fam, sys.n));
  const bool odd = (static_cast<unsigned long>(sys.n) * (w + 1)) % 2 == 1;
  Rational rhs = sys.P[w + 1].leading() * rep.det_Mn;
  if (odd) rhs = -rhs;
  rep.scalar_relation_ok = rep.delta_constant && rep.delta == rhs;
  return rep;
}

}  // namespace padecert
