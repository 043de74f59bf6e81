/*
 * Copyright 2026 The qfock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "qfock/gens/gens.hpp"

#include <algorithm>

#include "qfock/error.hpp"

namespace qfock {
namespace {

template <class F>
using Op = SparseOperator<F>;

Scalar t_pow(int k) { return Scalar::t_power(k); }
Scalar qp(std::int64_t num, std::int64_t den = 1) { return q_power(Rational(num, den)); }
const Scalar kQ = t_pow(4);

int quarter_units(const Rational& x, const char* what) {
  const Rational e = x * Rational(4);
  if (!e.is_integer() || !e.is_small()) {
    throw DomainError(std::string(what) + " " + x.to_string() +
                      " is not a quarter-integer");
  }
  return static_cast<int>(e.numerator().get_si());
}

/// s * A as a shorthand.
template <class F>
Op<F> sc(const Realization<F>& r, const Scalar& s, const Op<F>& a) {
  return scale(r, s, a);
}

template <class F>
Op<F> sq(const Op<F>& a) {
  return compose(a, a);
}

/// q^(alpha * n_mode + beta) on a single mode.
template <class F>
Op<F> q_exp_mode(const Realization<F>& r, int mode, const Rational& alpha,
                 const Rational& beta) {
  std::vector<Rational> a(r.config().modes(), Rational(0));
  a.at(mode - 1) = alpha;
  return q_exp(r, a, beta);
}

/// q^(A_b^0 + 1/2) (A_a^s)^2 + (A_b^s)^2, the pair factor shared by M+-,
/// T+- and the pair su(1,1) generators.
template <class F>
Op<F> pair_factor(const Realization<F>& r, int a, int b, bool raise) {
  const Op<F> xa = raise ? osc_plus(r, a) : osc_minus(r, a);
  const Op<F> xb = raise ? osc_plus(r, b) : osc_minus(r, b);
  return compose(q_exp_mode(r, b, Rational(1), Rational(1, 2)), sq(xa)) + sq(xb);
}

/// [2]_{q^(1/2)} = q^(1/2) + q^(-1/2).
Scalar two_half() { return qbracket(Rational(2), Rational(1, 2)); }

template <class F>
Op<F> diag_of(const Realization<F>& r,
              const std::function<Scalar(std::span<const std::uint8_t>)>& f) {
  return diag_poly(r, f);
}

void require_pair(const ModeConfig& cfg, int pair, const char* what) {
  if (pair < 1) throw IndexError(std::string(what) + ": pair index must be >= 1");
  if (2 * pair > cfg.modes()) {
    throw IndexError(std::string(what) + ": pair " + std::to_string(pair) +
                     " needs modes " + std::to_string(2 * pair - 1) + "," +
                     std::to_string(2 * pair) + " but only " +
                     std::to_string(cfg.modes()) + " exist");
  }
}

}  // namespace

void require_modes(const ModeConfig& cfg, int modes, const char* what) {
  if (cfg.modes() < modes) {
    throw ConfigError(std::string(what) + " needs " + std::to_string(modes) +
                      " modes, configuration has " + std::to_string(cfg.modes()));
  }
}

template <class F>
SparseOperator<F> q_exp(const Realization<F>& r, const std::vector<Rational>& alpha,
                        const Rational& beta) {
  std::vector<int> a(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    a[k] = quarter_units(alpha[k], "q-exponent coefficient");
  }
  return diag_exp(r, a, quarter_units(beta, "q-exponent offset"));
}

template <class F>
SparseOperator<F> number_op(const Realization<F>& r, int mode) {
  if (mode < 1 || mode > r.config().modes()) {
    throw IndexError("mode " + std::to_string(mode) + " out of range");
  }
  return diag_of(r, [k = mode - 1](auto n) { return Scalar(n[k]); });
}

template <class F>
SparseOperator<F> qnumber_op(const Realization<F>& r, int mode) {
  if (mode < 1 || mode > r.config().modes()) {
    throw IndexError("mode " + std::to_string(mode) + " out of range");
  }
  return diag_of(r, [k = mode - 1](auto n) { return qnum(n[k]); });
}

template <class F>
SparseOperator<F> q_exp_j0(const Realization<F>& r, const Su11Triple<F>& t,
                           const Rational& c) {
  return diag_of(r, [&](auto n) { return q_power(c * t.j0_spectrum(n)); });
}

template <class F>
Su11Triple<F> schwinger_su11(const Realization<F>& r, int pair) {
  require_pair(r.config(), pair, "Schwinger map");
  const int a = 2 * pair - 1, b = 2 * pair;
  Spectrum spec = [a, b](auto n) { return Rational(n[a - 1] - n[b - 1], 2); };
  std::vector<Rational> alpha(r.config().modes(), Rational(0));
  alpha[a - 1] = alpha[b - 1] = Rational(-1, 4);
  const Op<F> pref = q_exp(r, alpha, Rational(1, 4));
  return {diag_of(r, [spec](auto n) { return Scalar(spec(n)); }),
          compose(pref, compose(osc_plus(r, a), osc_minus(r, b))),
          compose(pref, compose(osc_minus(r, a), osc_plus(r, b))),
          spec,
          {a, b}};
}

template <class F>
CartesianTriple<F> cartesian_o3(const Realization<F>& r, int pair) {
  const Su11Triple<F> t = schwinger_su11(r, pair);
  const Scalar g = ((t_pow(1) + t_pow(-1)) * (t_pow(2) + t_pow(-2))).inv();
  const Scalar ig = Scalar::imaginary_unit() * g;
  const Op<F> j1 = sc(r, ig, anticommutator(q_exp_j0(r, t, Rational(1, 2)),
                                            t.jplus + t.jminus));
  const Op<F> j2 = sc(r, g, anticommutator(q_exp_j0(r, t, Rational(-1, 2)),
                                           t.jplus - t.jminus));
  Op<F> j3 = q_commutator(r, j1, j2, Rational(1, 2));
  return {j1, j2, std::move(j3)};
}

template <class F>
Su11Triple<F> metaplectic(const Realization<F>& r, int mode) {
  if (mode < 1 || mode > r.config().modes()) {
    throw IndexError("metaplectic map: mode " + std::to_string(mode) + " out of range");
  }
  Spectrum spec = [k = mode - 1](auto n) {
    return Rational(2 * n[k] + 1, 4);
  };
  const Scalar inv2 = two_half().inv();
  return {diag_of(r, [spec](auto n) { return Scalar(spec(n)); }),
          sc(r, inv2, sq(osc_plus(r, mode))),
          sc(r, inv2, sq(osc_minus(r, mode))),
          spec,
          {mode}};
}

template <class F>
Su11Triple<F> coproduct(const Realization<F>& r, const Su11Triple<F>& first,
                        const Su11Triple<F>& second) {
  for (int m : first.support) {
    if (std::find(second.support.begin(), second.support.end(), m) !=
        second.support.end()) {
      throw ConfigError("coproduct legs share mode " + std::to_string(m));
    }
  }
  const Op<F> q2 = q_exp_j0(r, second, Rational(2));
  Spectrum spec = [s1 = first.j0_spectrum, s2 = second.j0_spectrum](auto n) {
    return s1(n) + s2(n);
  };
  std::vector<int> support = first.support;
  support.insert(support.end(), second.support.begin(), second.support.end());
  return {first.j0 + second.j0, compose(first.jplus, q2) + second.jplus,
          compose(first.jminus, q2) + second.jminus, spec, support};
}

template <class F>
Su11Triple<F> su11_pair(const Realization<F>& r, int pair) {
  require_pair(r.config(), pair, "su(1,1) pair");
  const int a = 2 * pair - 1, b = 2 * pair;
  Spectrum spec = [a, b](auto n) { return Rational(n[a - 1] + n[b - 1] + 1, 2); };
  const Scalar inv2 = two_half().inv();
  return {diag_of(r, [spec](auto n) { return Scalar(spec(n)); }),
          sc(r, inv2, pair_factor(r, a, b, true)),
          sc(r, inv2, pair_factor(r, a, b, false)),
          spec,
          {a, b}};
}

template <class F>
Su11Triple<F> su11_total(const Realization<F>& r) {
  require_modes(r.config(), 4, "total su(1,1) triple");
  return coproduct(r, su11_pair(r, 1), su11_pair(r, 2));
}

namespace {

/// Scalar part of the Casimir as a function of the J0 eigenvalue j:
/// -q (q^(2j-1) + q^(-2j+1)) / (q^2-1)^2 + (q^2+1) / (q^2-1)^2.
Scalar casimir_offset(const Rational& j) {
  const Scalar d = (kQ * kQ - Scalar(1)).pow(2).inv();
  const Rational e = Rational(2) * j - Rational(1);
  return d * (kQ * kQ + Scalar(1) - kQ * (q_power(e) + q_power(-e)));
}

}  // namespace

template <class F>
SparseOperator<F> casimir_su11(const Realization<F>& r, const Su11Triple<F>& t) {
  const Op<F> shift = diag_of(r, [&](auto n) {
    return q_power(Rational(1) - Rational(2) * t.j0_spectrum(n));
  });
  const Op<F> offset = diag_of(r, [&](auto n) { return casimir_offset(t.j0_spectrum(n)); });
  return compose(compose(t.jplus, t.jminus), shift) + offset;
}

template <class F>
Su11Triple<F> tilde_su11(const Realization<F>& r, const Su11Triple<F>& t) {
  const Op<F> down = q_exp_j0(r, t, Rational(-1));
  return {t.j0, compose(t.jplus, down), compose(down, t.jminus), t.j0_spectrum,
          t.support};
}

template <class F>
SparseOperator<F> soq_L(const Realization<F>& r, int i) {
  const int m = r.config().modes();
  if (i < 1 || i + 1 > m) {
    throw IndexError("L(" + std::to_string(i) + "," + std::to_string(i + 1) +
                     ") needs modes " + std::to_string(i) + " and " +
                     std::to_string(i + 1) + " of " + std::to_string(m));
  }
  const Op<F> pref = q_exp_mode(r, i, Rational(-1, 2), Rational(1, 4));
  const Op<F> hop = sc(r, t_pow(1), compose(osc_plus(r, i), osc_minus(r, i + 1))) -
                    sc(r, t_pow(-1), compose(osc_minus(r, i), osc_plus(r, i + 1)));
  return compose(pref, hop);
}

template <class F>
Soq4Composites<F> soq4_composites(const Realization<F>& r) {
  require_modes(r.config(), 4, "o_q(4) composites");
  const Op<F> l12 = soq_L(r, 1), l23 = soq_L(r, 2), l34 = soq_L(r, 3);
  const Rational up(1, 4), down(-1, 4);
  Op<F> l13p = q_commutator(r, l12, l23, up);
  Op<F> l13m = q_commutator(r, l12, l23, down);
  Op<F> l24p = q_commutator(r, l23, l34, up);
  Op<F> l24m = q_commutator(r, l23, l34, down);
  Op<F> l14p = q_commutator(r, l13p, l34, up);
  Op<F> l14m = q_commutator(r, l13m, l34, down);
  return {l13p, l13m, l24p, l24m, l14p, l14m};
}

template <class F>
Soq4Casimirs<F> casimirs_soq4(const Realization<F>& r) {
  const Soq4Composites<F> c = soq4_composites(r);
  const Op<F> l12 = soq_L(r, 1), l23 = soq_L(r, 2), l34 = soq_L(r, 3);
  Op<F> c4 = sc(r, qp(-1), sq(l12)) + sq(l23) + sc(r, kQ, sq(l34)) +
             sc(r, qp(-1, 2), compose(c.l13p, c.l13m)) +
             sc(r, qp(1, 2), compose(c.l24p, c.l24m)) + compose(c.l14p, c.l14m);
  Op<F> c4p = sc(r, qp(-1, 2), compose(l12, l34)) - compose(c.l13p, c.l24p) +
              sc(r, qp(1, 2), compose(l23, c.l14p));
  return {std::move(c4), std::move(c4p)};
}

template <class F>
QHiggsQuad<F> qhiggs(const Realization<F>& r) {
  require_modes(r.config(), 4, "q-Higgs generators");
  Op<F> mp = compose(pair_factor(r, 1, 2, true), pair_factor(r, 3, 4, false));
  Op<F> mm = compose(pair_factor(r, 1, 2, false), pair_factor(r, 3, 4, true));
  Op<F> l = diag_of(r, [](auto n) { return Scalar(n[0] + n[1] - n[2] - n[3]); });
  Op<F> h = diag_of(r, [](auto n) { return Scalar(n[0] + n[1] + n[2] + n[3] + 2); });
  return {std::move(mp), std::move(mm), std::move(l), std::move(h)};
}

namespace {

/// q^(x L + y H) with L = n1+n2-n3-n4 and H = n1+n2+n3+n4+2.
template <class F>
Op<F> q_LH(const Realization<F>& r, const Rational& x, const Rational& y) {
  return q_exp(r, {x + y, x + y, y - x, y - x}, Rational(2) * y);
}

}  // namespace

template <class F>
SparseOperator<F> qhiggs_rhs(const Realization<F>& r) {
  require_modes(r.config(), 4, "q-Higgs commutator");
  const Rational half(1, 2);
  const Op<F> qH = q_LH(r, Rational(0), Rational(1));
  const Op<F> qL = q_LH(r, Rational(1), Rational(0));
  const Op<F> qmL = q_LH(r, Rational(-1), Rational(0));
  const Op<F> qhH = q_LH(r, Rational(0), half);
  const Op<F> qmhH = q_LH(r, Rational(0), -half);
  const Op<F> qhL = q_LH(r, half, Rational(0));
  const Op<F> qmhL = q_LH(r, -half, Rational(0));
  const Op<F> l12sq = sq(soq_L(r, 1));
  const Op<F> l34sq = sq(soq_L(r, 3));
  const Scalar one_minus_q = Scalar(1) - kQ;
  const Scalar c1 = (Scalar(1) + kQ) / (kQ * one_minus_q.pow(3));
  const Scalar c2 = (Scalar(1) + kQ) / (kQ * kQ * one_minus_q);
  const Op<F> first =
      compose(qH, sc(r, kQ + kQ.inv(), qL - qmL) -
                      sc(r, Scalar(2), compose(qhH + qmhH, qhL - qmhL)));
  const Op<F> second = compose(
      qH, compose(compose(qmhH, l12sq) + compose(qhH, l34sq), qhL) -
              compose(compose(qhH, l12sq) + compose(qmhH, l34sq), qmhL));
  return sc(r, c1, first) + sc(r, c2, second);
}

template <class F>
TPair<F> t_pm(const Realization<F>& r, const Rational& alpha) {
  require_modes(r.config(), 2, "T+- operators");
  std::vector<Rational> a(r.config().modes(), Rational(0));
  a[0] = a[1] = alpha;
  const Op<F> pref = q_exp(r, a, Rational(0));
  return {compose(pref, pair_factor(r, 1, 2, true)),
          compose(pref, pair_factor(r, 1, 2, false))};
}

template <class F>
SparseOperator<F> u4_bilinear(const Realization<F>& r, int i, int j) {
  return compose(osc_plus(r, i), osc_minus(r, j));
}

template <class F>
std::vector<LemmaPair<F>> proof_lemmas(const Realization<F>& r) {
  require_modes(r.config(), 4, "proof identities");
  std::vector<LemmaPair<F>> out;
  const Op<F> a1p = pair_factor(r, 1, 2, true), a1m = pair_factor(r, 1, 2, false);
  const Op<F> a2p = pair_factor(r, 3, 4, true), a2m = pair_factor(r, 3, 4, false);
  const Op<F> mp = compose(a1p, a2m), mm = compose(a1m, a2p);
  out.push_back({"pair-commutator-identity", commutator(mp, mm),
                 compose(commutator(a1p, a1m), compose(a2p, a2m)) -
                     compose(compose(a1p, a1m), commutator(a2p, a2m))});

  // Expansion of [M+, M-] in squared ladder operators.
  auto sq_up = [&](int k) { return sq(osc_plus(r, k)); };
  auto sq_down = [&](int k) { return sq(osc_minus(r, k)); };
  auto cross = [&](int a, int b) {
    return compose(q_exp_mode(r, b, Rational(1), Rational(1, 2)),
                   compose(sq_up(a), sq_down(b)) +
                       sc(r, qp(-2), compose(sq_down(a), sq_up(b))));
  };
  auto comm_part = [&](int a, int b) {
    return compose(q_exp_mode(r, b, Rational(2), Rational(1)),
                   commutator(sq_up(a), sq_down(a))) +
           commutator(sq_up(b), sq_down(b)) +
           sc(r, Scalar(1) - kQ * kQ, cross(a, b));
  };
  auto prod_part = [&](int a, int b) {
    return compose(q_exp_mode(r, b, Rational(2), Rational(1)),
                   compose(sq_up(a), sq_down(a))) +
           compose(sq_up(b), sq_down(b)) + cross(a, b);
  };
  out.push_back({"mplus-mminus-expansion", commutator(mp, mm),
                 compose(comm_part(1, 2), prod_part(3, 4)) -
                     compose(comm_part(3, 4), prod_part(1, 2))});

  const Op<F> n1 = qnumber_op(r, 1), n2 = qnumber_op(r, 2);
  const Op<F> l12 = soq_L(r, 1);
  const Op<F> expansion =
      sc(r, kQ, compose(sq_up(1), sq_down(2))) +
      sc(r, kQ.inv(), compose(sq_down(1), sq_up(2))) - sc(r, qp(1, 2), n1) -
      sc(r, qp(-1, 2), n2) - sc(r, kQ * (qp(1, 2) + qp(-1, 2)), compose(n1, n2));
  out.push_back({"L12-squared-expansion", sq(l12),
                 compose(q_exp_mode(r, 1, Rational(-1), Rational(1, 2)), expansion)});

  const Op<F> id = identity(r);
  out.push_back({"squared-ladder-commutator", commutator(sq_up(1), sq_down(1)),
                 sc(r, -(Scalar(1) + kQ),
                    compose(q_exp_mode(r, 1, Rational(1), Rational(0)),
                            sc(r, kQ + kQ.inv(), n1) + id))});
  out.push_back({"squared-ladder-product", sc(r, kQ, compose(sq_up(1), sq_down(1))),
                 sq(n1) - n1});

  // Final form of [M+, M-] in terms of L12^2, L34^2 and pair occupations.
  auto pair_sum_exp = [&](int a, const Rational& c) {
    std::vector<Rational> al(r.config().modes(), Rational(0));
    al[a - 1] = al[a] = Rational(1);
    return q_exp(r, al, c);
  };
  auto left = [&](int a, const Op<F>& lsq) {
    const Op<F> inner =
        sc(r, Scalar(1) - kQ, lsq) +
        sc(r, kQ / (Scalar(1) - kQ),
           sc(r, Scalar(1) + kQ * kQ, pair_sum_exp(a, Rational(0))) -
               sc(r, Scalar(2), id));
    return sc(r, Scalar(1) + kQ, compose(pair_sum_exp(a, Rational(-1)), inner));
  };
  auto right = [&](int a, const Op<F>& lsq) {
    const Op<F> pn = diag_of(r, [a](auto n) { return qnum(n[a - 1] + n[a]); });
    return compose(pair_sum_exp(a, Rational(-1)), lsq) + sq(pn);
  };
  const Op<F> l12sq = sq(l12), l34sq = sq(soq_L(r, 3));
  out.push_back({"mplus-mminus-final-form", commutator(mp, mm),
                 compose(left(1, l12sq), right(3, l34sq)) -
                     compose(left(3, l34sq), right(1, l12sq))});
  return out;
}

template <class F>
AwTriple<F> aw_K(const Realization<F>& r, const Su11Triple<F>& first,
                 const Su11Triple<F>& second) {
  for (int m : first.support) {
    if (std::find(second.support.begin(), second.support.end(), m) !=
        second.support.end()) {
      throw ConfigError("Askey-Wilson legs share mode " + std::to_string(m));
    }
  }
  const Op<F> id = identity(r);
  const Scalar one_minus_q = Scalar(1) - kQ;
  const Op<F> k1 =
      sc(r, Scalar(Rational(1, 4)) / one_minus_q,
         id - compose(q_exp_j0(r, first, Rational(1)), q_exp_j0(r, second, Rational(-1))));
  const Op<F> c1 = casimir_su11(r, first), c2 = casimir_su11(r, second);
  const Op<F> up2 = q_exp_j0(r, second, Rational(2));
  const Op<F> down1 = q_exp_j0(r, first, Rational(-2));
  const Scalar mix = (kQ * kQ + Scalar(1)) / (kQ * kQ - Scalar(1)).pow(2);
  const Op<F> body =
      compose(c1, up2) + compose(down1, c2) +
      compose(compose(first.jplus, sc(r, kQ.inv(), down1)), second.jminus) +
      compose(compose(first.jminus, sc(r, kQ, down1)), second.jplus) +
      sc(r, mix, compose(down1, up2) - up2 - down1 + id);
  const Op<F> k2 = sc(r, Scalar(Rational(1, 2)), body);
  Op<F> k3 = commutator(k1, k2);
  Op<F> k3c = sc(r, Scalar(Rational(1, 8)) * (Scalar(1) + kQ.inv()),
                 compose(compose(first.jplus, second.jminus) -
                             compose(first.jminus, second.jplus),
                         compose(q_exp_j0(r, first, Rational(-1)),
                                 q_exp_j0(r, second, Rational(-1)))));
  return {k1, k2, std::move(k3), std::move(k3c)};
}

template <class F>
AwParams<F> aw_params(const Realization<F>& r, const Su11Triple<F>& first,
                      const Su11Triple<F>& second) {
  const Op<F> id = identity(r);
  const Op<F> c1 = casimir_su11(r, first), c2 = casimir_su11(r, second);
  auto total = [&](auto n) { return first.j0_spectrum(n) + second.j0_spectrum(n); };
  const Op<F> qj = diag_of(r, [&](auto n) { return q_power(total(n)); });
  const Op<F> qmj = diag_of(r, [&](auto n) { return q_power(-total(n)); });
  const Op<F> br = diag_of(r, [&](auto n) { return qbracket(total(n)); });
  const Op<F> half_br =
      diag_of(r, [&](auto n) { return qbracket(total(n) * Rational(1, 2)); });
  const Scalar onep = Scalar(1) + kQ;
  AwParams<F> p;
  p.r = -(kQ - kQ.inv()).pow(2);
  const Op<F> xi7 = sc(r, onep.pow(2) / (Scalar(32) * kQ.pow(2)),
                       compose(c1, qj) + compose(c2, qmj) -
                           sc(r, Scalar(1) + qp(-2), sq(half_br)));
  p.xi.push_back(sc(r, (Scalar(1) + qp(-2)) / Scalar(2), id));
  p.xi.push_back(sc(r, onep.pow(2) * (Scalar(1) - kQ) / (Scalar(4) * kQ.pow(2)), id));
  p.xi.push_back(sc(r, Scalar(4) * (kQ - Scalar(1)), xi7));
  p.xi.push_back(zero(r));
  p.xi.push_back(sc(r, -(onep * (Scalar(1) + kQ.pow(2))) / (Scalar(16) * kQ.pow(3)),
                    compose(c1 - c2, br)));
  p.xi.push_back(sc(r, -onep.pow(2) / (Scalar(16) * kQ.pow(2)), id));
  p.xi.push_back(xi7);
  return p;
}

template <class F>
std::vector<SparseOperator<F>> script_K(const Realization<F>& r) {
  require_modes(r.config(), 4, "oscillator Askey-Wilson generators");
  const QHiggsQuad<F> hq = qhiggs(r);
  const Op<F> id = identity(r);
  const Rational half(1, 2);
  const Op<F> c1 = casimir_su11(r, su11_pair(r, 1));
  const Op<F> c2 = casimir_su11(r, su11_pair(r, 2));
  const Op<F> k1 = sc(r, Scalar(Rational(1, 4)) / (Scalar(1) - kQ),
                      id - q_LH(r, half, Rational(0)));
  const Op<F> qmhL = q_LH(r, -half, Rational(0));
  const Op<F> brackets = diag_of(r, [](auto n) {
    const int l = n[0] + n[1] - n[2] - n[3];
    const int h = n[0] + n[1] + n[2] + n[3] + 2;
    return qbracket(Rational(l + h, 4)) * qbracket(Rational(l - h, 4));
  });
  const Op<F> body =
      compose(compose(c1, q_LH(r, Rational(0), half)) +
                  compose(c2, q_LH(r, Rational(0), -half)),
              qmhL) +
      sc(r, Scalar(1) + qp(-2), compose(qmhL, brackets)) +
      sc(r, kQ / (Scalar(1) + kQ).pow(2),
         compose(sc(r, kQ.inv(), hq.mplus) + sc(r, kQ, hq.mminus),
                 q_LH(r, -half, -half)));
  const Op<F> k2 = sc(r, Scalar(Rational(1, 2)), body);
  const Op<F> k3 = sc(r, (Scalar(8) * (Scalar(1) + kQ)).inv(),
                      compose(hq.mplus - hq.mminus, q_LH(r, Rational(0), -half)));
  return {k1, k2, k3};
}

#define QFOCK_GENS_INSTANTIATE(F)                                              \
  template SparseOperator<F> q_exp(const Realization<F>&,                      \
                                   const std::vector<Rational>&,               \
                                   const Rational&);                           \
  template SparseOperator<F> number_op(const Realization<F>&, int);            \
  template SparseOperator<F> qnumber_op(const Realization<F>&, int);           \
  template SparseOperator<F> q_exp_j0(const Realization<F>&,                   \
                                      const Su11Triple<F>&, const Rational&);  \
  template Su11Triple<F> schwinger_su11(const Realization<F>&, int);           \
  template CartesianTriple<F> cartesian_o3(const Realization<F>&, int);        \
  template Su11Triple<F> metaplectic(const Realization<F>&, int);              \
  template Su11Triple<F> coproduct(const Realization<F>&, const Su11Triple<F>&, \
                                   const Su11Triple<F>&);                      \
  template Su11Triple<F> su11_pair(const Realization<F>&, int);                \
  template Su11Triple<F> su11_total(const Realization<F>&);                    \
  template SparseOperator<F> casimir_su11(const Realization<F>&,               \
                                          const Su11Triple<F>&);               \
  template Su11Triple<F> tilde_su11(const Realization<F>&, const Su11Triple<F>&); \
  template SparseOperator<F> soq_L(const Realization<F>&, int);                \
  template Soq4Composites<F> soq4_composites(const Realization<F>&);           \
  template Soq4Casimirs<F> casimirs_soq4(const Realization<F>&);               \
  template QHiggsQuad<F> qhiggs(const Realization<F>&);                        \
  template SparseOperator<F> qhiggs_rhs(const Realization<F>&);                \
  template TPair<F> t_pm(const Realization<F>&, const Rational&);              \
  template SparseOperator<F> u4_bilinear(const Realization<F>&, int, int);     \
  template std::vector<LemmaPair<F>> proof_lemmas(const Realization<F>&);      \
  template AwTriple<F> aw_K(const Realization<F>&, const Su11Triple<F>&,       \
                            const Su11Triple<F>&);                             \
  template AwParams<F> aw_params(const Realization<F>&, const Su11Triple<F>&,  \
                                 const Su11Triple<F>&);                        \
  template std::vector<SparseOperator<F>> script_K(const Realization<F>&);

QFOCK_GENS_INSTANTIATE(Scalar)
QFOCK_GENS_INSTANTIATE(GaussianRational)

}  // namespace qfock
