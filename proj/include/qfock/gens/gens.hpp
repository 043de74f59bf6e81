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


#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qfock/fock/sparse_operator.hpp"

namespace qfock {

/// Occupation-dependent rational value, e.g. the spectrum of a diagonal
/// generator.
using Spectrum = std::function<Rational(std::span<const std::uint8_t>)>;

/// Realized J0, J+, J- of U_q(su(1,1)) (or U_q(sl2) for the Schwinger map).
/// j0 is diagonal with eigenvalue j0_spectrum(n) on |n>, which lets q^(c J0)
/// be built exactly as a diagonal.
template <class F>
struct Su11Triple {
  SparseOperator<F> j0;
  SparseOperator<F> jplus;
  SparseOperator<F> jminus;
  Spectrum j0_spectrum;
  /// 1-based modes the triple acts on.
  std::vector<int> support;
};

template <class F>
struct CartesianTriple {
  SparseOperator<F> j1, j2, j3;
};

template <class F>
struct Soq4Composites {
  SparseOperator<F> l13p, l13m, l24p, l24m, l14p, l14m;
};

template <class F>
struct Soq4Casimirs {
  SparseOperator<F> c4, c4prime;
};

template <class F>
struct QHiggsQuad {
  SparseOperator<F> mplus, mminus, l, h;
};

template <class F>
struct TPair {
  SparseOperator<F> tplus, tminus;
};

/// K1, K2, K3 = [K1, K2] and the independently built closed form of K3.
template <class F>
struct AwTriple {
  SparseOperator<F> k1, k2, k3, k3_closed;
};

/// Structure parameters of the Askey-Wilson relations; xi[0] is xi_1.
template <class F>
struct AwParams {
  Scalar r;
  std::vector<SparseOperator<F>> xi;
};

template <class F>
struct LemmaPair {
  std::string name;
  SparseOperator<F> lhs, rhs;
};

// Mode and pair indices are 1-based; pair p means modes (2p-1, 2p).

/// q^(sum_k alpha_k n_k + beta); throws DomainError unless every 4*alpha_k
/// and 4*beta is an integer.
template <class F>
SparseOperator<F> q_exp(const Realization<F>& r, const std::vector<Rational>& alpha,
                        const Rational& beta);
/// A_mode^0, the number operator.
template <class F>
SparseOperator<F> number_op(const Realization<F>& r, int mode);
/// N_mode = A^+ A^- = (A^0)_q as a diagonal.
template <class F>
SparseOperator<F> qnumber_op(const Realization<F>& r, int mode);
/// q^(c * J0) for a triple with known spectrum.
template <class F>
SparseOperator<F> q_exp_j0(const Realization<F>& r, const Su11Triple<F>& t,
                           const Rational& c);

template <class F>
Su11Triple<F> schwinger_su11(const Realization<F>& r, int pair);
template <class F>
CartesianTriple<F> cartesian_o3(const Realization<F>& r, int pair);
template <class F>
Su11Triple<F> metaplectic(const Realization<F>& r, int mode);
/// Delta(J0) = J0 x 1 + 1 x J0, Delta(J+-) = J+- x q^(2 J0) + 1 x J+-, with
/// the two legs acting on disjoint modes.
template <class F>
Su11Triple<F> coproduct(const Realization<F>& r, const Su11Triple<F>& first,
                        const Su11Triple<F>& second);
template <class F>
Su11Triple<F> su11_pair(const Realization<F>& r, int pair);
template <class F>
Su11Triple<F> su11_total(const Realization<F>& r);
template <class F>
SparseOperator<F> casimir_su11(const Realization<F>& r, const Su11Triple<F>& t);
template <class F>
Su11Triple<F> tilde_su11(const Realization<F>& r, const Su11Triple<F>& t);

/// The o_{q^(1/2)}(n) generator on modes (i, i+1).
template <class F>
SparseOperator<F> soq_L(const Realization<F>& r, int i);
template <class F>
Soq4Composites<F> soq4_composites(const Realization<F>& r);
template <class F>
Soq4Casimirs<F> casimirs_soq4(const Realization<F>& r);

template <class F>
QHiggsQuad<F> qhiggs(const Realization<F>& r);
template <class F>
SparseOperator<F> qhiggs_rhs(const Realization<F>& r);
/// Throws DomainError unless 4*alpha is an integer.
template <class F>
TPair<F> t_pm(const Realization<F>& r, const Rational& alpha);
/// E_ij = A_i^+ A_j^-.
template <class F>
SparseOperator<F> u4_bilinear(const Realization<F>& r, int i, int j);
template <class F>
std::vector<LemmaPair<F>> proof_lemmas(const Realization<F>& r);

/// Throws ConfigError if the two triples share a mode.
template <class F>
AwTriple<F> aw_K(const Realization<F>& r, const Su11Triple<F>& first,
                 const Su11Triple<F>& second);
template <class F>
AwParams<F> aw_params(const Realization<F>& r, const Su11Triple<F>& first,
                      const Su11Triple<F>& second);
/// The oscillator-level K1, K2, K3 written through M+-, L, H.
template <class F>
std::vector<SparseOperator<F>> script_K(const Realization<F>& r);

/// Throws ConfigError unless the realization has at least `modes` modes.
void require_modes(const ModeConfig& cfg, int modes, const char* what);

}  // namespace qfock
