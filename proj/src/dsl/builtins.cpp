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


#include "qfock/dsl/builtins.hpp"

#include <cctype>

#include "qfock/dsl/bind.hpp"
#include "qfock/gens/gens.hpp"

namespace qfock::dsl {
namespace {

template <class Ctx>
using FieldOf = typename std::decay_t<Ctx>::field_type;

using ExactFn = Value<Scalar> (*)(Context<Scalar>&, const Expr&);
using SampleFn = Value<GaussianRational> (*)(Context<GaussianRational>&, const Expr&);

struct Entry {
  BuiltinInfo info;
  ExactFn exact;
  SampleFn sample;
};

template <class L>
Entry entry(std::string name, std::vector<ParamSpec> params, int min_modes,
            std::string summary, L fn) {
  return {BuiltinInfo{std::move(name), std::move(params), min_modes, std::move(summary)},
          static_cast<ExactFn>(fn), static_cast<SampleFn>(fn)};
}

// Body of a builtin; `ctx`, `r` (the realization) and `e` (the name node) are
// in scope.
#define QFOCK_BUILTIN(...)                                                      \
  [](auto& ctx, const Expr& e) -> Value<FieldOf<decltype(ctx)>> {              \
    using F = FieldOf<decltype(ctx)>;                                          \
    const Realization<F>& r = ctx.realization();                              \
    (void)e;                                                                   \
    (void)r;                                                                   \
    __VA_ARGS__                                                                \
  }

int int_arg(const Expr& e, std::size_t k) {
  return static_cast<int>(e.args.at(k).values.at(0).numerator().get_si());
}

const ParamSpec kInt{"", false, true};
const ParamSpec kRational{"", false, false};

template <class F, class T>
const T& memo(Context<F>& ctx, const std::string& key, std::function<T()> make) {
  return ctx.template cached<T>(key, make);
}

template <class F>
const Su11Triple<F>& metaplectic_of(Context<F>& ctx, int mode) {
  return memo<F, Su11Triple<F>>(ctx, "metaplectic:" + std::to_string(mode), [&] {
    return metaplectic(ctx.realization(), mode);
  });
}

template <class F>
const Su11Triple<F>& tilde_of(Context<F>& ctx, int mode) {
  return memo<F, Su11Triple<F>>(ctx, "tilde:" + std::to_string(mode), [&] {
    return tilde_su11(ctx.realization(), metaplectic_of(ctx, mode));
  });
}

template <class F>
const Su11Triple<F>& schwinger_of(Context<F>& ctx, int pair) {
  return memo<F, Su11Triple<F>>(ctx, "schwinger:" + std::to_string(pair), [&] {
    return schwinger_su11(ctx.realization(), pair);
  });
}

template <class F>
const CartesianTriple<F>& cartesian_of(Context<F>& ctx, int pair) {
  return memo<F, CartesianTriple<F>>(ctx, "cartesian:" + std::to_string(pair), [&] {
    return cartesian_o3(ctx.realization(), pair);
  });
}

template <class F>
const Su11Triple<F>& pair_of(Context<F>& ctx, int pair) {
  return memo<F, Su11Triple<F>>(ctx, "pair:" + std::to_string(pair), [&] {
    return su11_pair(ctx.realization(), pair);
  });
}

template <class F>
const Su11Triple<F>& total_of(Context<F>& ctx) {
  return memo<F, Su11Triple<F>>(ctx, "total", [&] { return su11_total(ctx.realization()); });
}

template <class F>
const SparseOperator<F>& casimir_of(Context<F>& ctx, const std::string& key,
                                    const Su11Triple<F>& t) {
  return memo<F, SparseOperator<F>>(ctx, "casimir:" + key, [&] {
    return casimir_su11(ctx.realization(), t);
  });
}

template <class F>
const Soq4Composites<F>& composites_of(Context<F>& ctx) {
  return memo<F, Soq4Composites<F>>(ctx, "composites",
                                    [&] { return soq4_composites(ctx.realization()); });
}

template <class F>
const Soq4Casimirs<F>& soq4_casimirs_of(Context<F>& ctx) {
  return memo<F, Soq4Casimirs<F>>(ctx, "soq4-casimirs",
                                  [&] { return casimirs_soq4(ctx.realization()); });
}

template <class F>
const QHiggsQuad<F>& qhiggs_of(Context<F>& ctx) {
  return memo<F, QHiggsQuad<F>>(ctx, "qhiggs", [&] { return qhiggs(ctx.realization()); });
}

template <class F>
const AwTriple<F>& aw_of(Context<F>& ctx) {
  return memo<F, AwTriple<F>>(ctx, "aw", [&] {
    return aw_K(ctx.realization(), pair_of(ctx, 1), pair_of(ctx, 2));
  });
}

template <class F>
const AwParams<F>& aw_params_of(Context<F>& ctx) {
  return memo<F, AwParams<F>>(ctx, "aw-params", [&] {
    return aw_params(ctx.realization(), pair_of(ctx, 1), pair_of(ctx, 2));
  });
}

template <class F>
const std::vector<SparseOperator<F>>& script_of(Context<F>& ctx) {
  return memo<F, std::vector<SparseOperator<F>>>(ctx, "script-K",
                                                 [&] { return script_K(ctx.realization()); });
}

std::vector<Entry> make_table() {
  std::vector<Entry> t;
  t.push_back(entry("I", {}, 0, "identity", QFOCK_BUILTIN(return identity(r);)));
  t.push_back(entry("A<k>p", {}, 1, "raising operator A_k^+ |n> = |n + e_k>",
                    QFOCK_BUILTIN(return osc_plus(r, family_mode(e.name));)));
  t.push_back(entry("A<k>m", {}, 1, "lowering operator A_k^- |n> = (n_k)_q |n - e_k>",
                    QFOCK_BUILTIN(return osc_minus(r, family_mode(e.name));)));
  t.push_back(entry("n<k>", {}, 1, "occupation number A_k^0",
                    QFOCK_BUILTIN(return number_op(r, family_mode(e.name));)));
  t.push_back(entry("N<k>", {}, 1, "N_k = A_k^+ A_k^- = (A_k^0)_q",
                    QFOCK_BUILTIN(return qnumber_op(r, family_mode(e.name));)));
  t.push_back(entry(
      "E", {{"a", true, true}, {"c", false, true}}, 1,
      "diagonal t^(a_1 n_1 + ... + a_m n_m + c); a has one entry per mode",
      QFOCK_BUILTIN({
        std::vector<int> a;
        for (const Rational& v : e.args[0].values) a.push_back(static_cast<int>(v.numerator().get_si()));
        if (static_cast<int>(a.size()) != r.config().modes()) {
          throw ConfigError("E(a=...) has " + std::to_string(a.size()) +
                            " exponents for " + std::to_string(r.config().modes()) + " modes");
        }
        return diag_exp(r, a, int_arg(e, 1));
      })));
  t.push_back(entry("E", {kInt, kInt}, 2, "bilinear E_ij = A_i^+ A_j^-",
                    QFOCK_BUILTIN(return u4_bilinear(r, int_arg(e, 0), int_arg(e, 1));)));
  t.push_back(entry("L", {kInt, kInt}, 2, "o_{q^(1/2)} generator L(i,i+1)",
                    QFOCK_BUILTIN({
                      const int i = int_arg(e, 0);
                      if (int_arg(e, 1) != i + 1) {
                        throw IndexError("L(i,j) is defined for j = i+1 only");
                      }
                      return soq_L(r, i);
                    })));
  t.push_back(entry("L13p", {}, 4, "[L(1,2), L(2,3)] at exponent +1/4",
                    QFOCK_BUILTIN(return composites_of(ctx).l13p;)));
  t.push_back(entry("L13m", {}, 4, "[L(1,2), L(2,3)] at exponent -1/4",
                    QFOCK_BUILTIN(return composites_of(ctx).l13m;)));
  t.push_back(entry("L24p", {}, 4, "[L(2,3), L(3,4)] at exponent +1/4",
                    QFOCK_BUILTIN(return composites_of(ctx).l24p;)));
  t.push_back(entry("L24m", {}, 4, "[L(2,3), L(3,4)] at exponent -1/4",
                    QFOCK_BUILTIN(return composites_of(ctx).l24m;)));
  t.push_back(entry("L14p", {}, 4, "[L13p, L(3,4)] at exponent +1/4",
                    QFOCK_BUILTIN(return composites_of(ctx).l14p;)));
  t.push_back(entry("L14m", {}, 4, "[L13m, L(3,4)] at exponent -1/4",
                    QFOCK_BUILTIN(return composites_of(ctx).l14m;)));
  t.push_back(entry("C4", {}, 4, "quadratic o_{q^(1/2)}(4) Casimir",
                    QFOCK_BUILTIN(return soq4_casimirs_of(ctx).c4;)));
  t.push_back(entry("C4prime", {}, 4, "second o_{q^(1/2)}(4) Casimir",
                    QFOCK_BUILTIN(return soq4_casimirs_of(ctx).c4prime;)));
  t.push_back(entry("Mplus", {}, 4, "q-Higgs raising generator M+",
                    QFOCK_BUILTIN(return qhiggs_of(ctx).mplus;)));
  t.push_back(entry("Mminus", {}, 4, "q-Higgs lowering generator M-",
                    QFOCK_BUILTIN(return qhiggs_of(ctx).mminus;)));
  t.push_back(entry("L", {}, 4, "L = n1 + n2 - n3 - n4", QFOCK_BUILTIN(return qhiggs_of(ctx).l;)));
  t.push_back(entry("H", {}, 4, "H = n1 + n2 + n3 + n4 + 2",
                    QFOCK_BUILTIN(return qhiggs_of(ctx).h;)));
  t.push_back(entry("QHiggsRHS", {}, 4, "closed form of [M+, M-]",
                    QFOCK_BUILTIN(return memo<F, SparseOperator<F>>(
                                      ctx, "qhiggs-rhs", [&] { return qhiggs_rhs(r); });)));
  t.push_back(entry("Tplus", {kRational}, 2, "q^(alpha (n1+n2)) times the raising pair factor",
                    QFOCK_BUILTIN(return t_pm(r, e.args[0].values[0]).tplus;)));
  t.push_back(entry("Tminus", {kRational}, 2, "q^(alpha (n1+n2)) times the lowering pair factor",
                    QFOCK_BUILTIN(return t_pm(r, e.args[0].values[0]).tminus;)));
  t.push_back(entry("j0", {kInt}, 2, "Schwinger j0 on pair p",
                    QFOCK_BUILTIN(return schwinger_of(ctx, int_arg(e, 0)).j0;)));
  t.push_back(entry("jp", {kInt}, 2, "Schwinger j+ on pair p",
                    QFOCK_BUILTIN(return schwinger_of(ctx, int_arg(e, 0)).jplus;)));
  t.push_back(entry("jm", {kInt}, 2, "Schwinger j- on pair p",
                    QFOCK_BUILTIN(return schwinger_of(ctx, int_arg(e, 0)).jminus;)));
  t.push_back(entry("j1", {kInt}, 2, "Cartesian j1 on pair p",
                    QFOCK_BUILTIN(return cartesian_of(ctx, int_arg(e, 0)).j1;)));
  t.push_back(entry("j2", {kInt}, 2, "Cartesian j2 on pair p",
                    QFOCK_BUILTIN(return cartesian_of(ctx, int_arg(e, 0)).j2;)));
  t.push_back(entry("j3", {kInt}, 2, "Cartesian j3 = qcomm(j1, j2; 1/2) on pair p",
                    QFOCK_BUILTIN(return cartesian_of(ctx, int_arg(e, 0)).j3;)));
  // Bare names refer to the first pair.
  t.push_back(entry("j0", {}, 2, "Schwinger j0 on modes 1, 2",
                    QFOCK_BUILTIN(return schwinger_of(ctx, 1).j0;)));
  t.push_back(entry("jp", {}, 2, "Schwinger j+ on modes 1, 2",
                    QFOCK_BUILTIN(return schwinger_of(ctx, 1).jplus;)));
  t.push_back(entry("jm", {}, 2, "Schwinger j- on modes 1, 2",
                    QFOCK_BUILTIN(return schwinger_of(ctx, 1).jminus;)));
  t.push_back(entry("j1", {}, 2, "Cartesian j1 on modes 1, 2",
                    QFOCK_BUILTIN(return cartesian_of(ctx, 1).j1;)));
  t.push_back(entry("j2", {}, 2, "Cartesian j2 on modes 1, 2",
                    QFOCK_BUILTIN(return cartesian_of(ctx, 1).j2;)));
  t.push_back(entry("j3", {}, 2, "Cartesian j3 on modes 1, 2",
                    QFOCK_BUILTIN(return cartesian_of(ctx, 1).j3;)));
  t.push_back(entry("J0", {kInt}, 1, "metaplectic J0 on mode k",
                    QFOCK_BUILTIN(return metaplectic_of(ctx, int_arg(e, 0)).j0;)));
  t.push_back(entry("Jp", {kInt}, 1, "metaplectic J+ on mode k",
                    QFOCK_BUILTIN(return metaplectic_of(ctx, int_arg(e, 0)).jplus;)));
  t.push_back(entry("Jm", {kInt}, 1, "metaplectic J- on mode k",
                    QFOCK_BUILTIN(return metaplectic_of(ctx, int_arg(e, 0)).jminus;)));
  t.push_back(entry("Cmeta", {kInt}, 1, "Casimir of the metaplectic triple on mode k",
                    QFOCK_BUILTIN({
                      const int k = int_arg(e, 0);
                      return casimir_of(ctx, "metaplectic:" + std::to_string(k),
                                        metaplectic_of(ctx, k));
                    })));
  t.push_back(entry("Jt0", {kInt}, 1, "standard-presentation J0 on mode k",
                    QFOCK_BUILTIN(return tilde_of(ctx, int_arg(e, 0)).j0;)));
  t.push_back(entry("Jtp", {kInt}, 1, "standard-presentation J+ = J+ q^(-J0) on mode k",
                    QFOCK_BUILTIN(return tilde_of(ctx, int_arg(e, 0)).jplus;)));
  t.push_back(entry("Jtm", {kInt}, 1, "standard-presentation J- = q^(-J0) J- on mode k",
                    QFOCK_BUILTIN(return tilde_of(ctx, int_arg(e, 0)).jminus;)));
  t.push_back(entry("J0pair", {kInt}, 2, "pair J0 on modes 2p-1, 2p",
                    QFOCK_BUILTIN(return pair_of(ctx, int_arg(e, 0)).j0;)));
  t.push_back(entry("Jppair", {kInt}, 2, "pair J+ on modes 2p-1, 2p",
                    QFOCK_BUILTIN(return pair_of(ctx, int_arg(e, 0)).jplus;)));
  t.push_back(entry("Jmpair", {kInt}, 2, "pair J- on modes 2p-1, 2p",
                    QFOCK_BUILTIN(return pair_of(ctx, int_arg(e, 0)).jminus;)));
  t.push_back(entry("Cpair", {kInt}, 2, "Casimir of the pair triple p",
                    QFOCK_BUILTIN({
                      const int p = int_arg(e, 0);
                      return casimir_of(ctx, "pair:" + std::to_string(p), pair_of(ctx, p));
                    })));
  t.push_back(entry("J0tot", {}, 4, "four-mode J0 from the two pair triples",
                    QFOCK_BUILTIN(return total_of(ctx).j0;)));
  t.push_back(entry("Jptot", {}, 4, "four-mode J+ from the two pair triples",
                    QFOCK_BUILTIN(return total_of(ctx).jplus;)));
  t.push_back(entry("Jmtot", {}, 4, "four-mode J- from the two pair triples",
                    QFOCK_BUILTIN(return total_of(ctx).jminus;)));
  t.push_back(entry("Ctot", {}, 4, "Casimir of the four-mode triple",
                    QFOCK_BUILTIN(return casimir_of(ctx, "total", total_of(ctx));)));
  t.push_back(entry("K1", {}, 4, "Askey-Wilson K1 on the two pair triples",
                    QFOCK_BUILTIN(return aw_of(ctx).k1;)));
  t.push_back(entry("K2", {}, 4, "Askey-Wilson K2 on the two pair triples",
                    QFOCK_BUILTIN(return aw_of(ctx).k2;)));
  t.push_back(entry("K3", {}, 4, "Askey-Wilson K3 = [K1, K2]",
                    QFOCK_BUILTIN(return aw_of(ctx).k3;)));
  t.push_back(entry("K3closed", {}, 4, "closed form of K3",
                    QFOCK_BUILTIN(return aw_of(ctx).k3_closed;)));
  t.push_back(entry("xi", {kInt}, 4, "Askey-Wilson structure parameter xi_k, k = 1..7",
                    QFOCK_BUILTIN({
                      const int k = int_arg(e, 0);
                      if (k < 1 || k > 7) throw IndexError("xi(k) needs 1 <= k <= 7");
                      return aw_params_of(ctx).xi[static_cast<std::size_t>(k - 1)];
                    })));
  t.push_back(entry("AWr", {}, 0, "Askey-Wilson scalar r = -(q - q^-1)^2",
                    QFOCK_BUILTIN({
                      const Scalar q = Scalar::t_power(4);
                      return Scalar(-(q - q.inv()).pow(2));
                    })));
  t.push_back(entry("sK1", {}, 4, "oscillator form of K1",
                    QFOCK_BUILTIN(return script_of(ctx)[0];)));
  t.push_back(entry("sK2", {}, 4, "oscillator form of K2",
                    QFOCK_BUILTIN(return script_of(ctx)[1];)));
  t.push_back(entry("sK3", {}, 4, "oscillator form of K3",
                    QFOCK_BUILTIN(return script_of(ctx)[2];)));
  return t;
}

#undef QFOCK_BUILTIN

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = make_table();
  return t;
}

/// "A<k>p" for "A12p", or the name itself when it is not a family member.
std::string family_pattern(const std::string& name) {
  if (name.size() < 2) return name;
  std::size_t begin = 1, end = name.size();
  if (name[0] == 'A') {
    if (name.back() != 'p' && name.back() != 'm') return name;
    --end;
  } else if (name[0] != 'n' && name[0] != 'N') {
    return name;
  }
  if (end <= begin || name[begin] == '0') return name;
  for (std::size_t k = begin; k < end; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return name;
  }
  if (end - begin > 3) return name;
  return name.substr(0, begin) + "<k>" + name.substr(end);
}

std::string signature(const BuiltinInfo& info) {
  if (info.params.empty()) return info.name;
  std::string out = info.name + "(";
  for (std::size_t k = 0; k < info.params.size(); ++k) {
    const ParamSpec& p = info.params[k];
    if (k) out += ", ";
    if (!p.key.empty()) out += p.key + "=";
    out += p.tuple ? "(...)" : p.integer ? "int" : "rational";
  }
  return out + ")";
}

bool matches(const BuiltinInfo& info, bool call, const std::vector<NameArg>& args) {
  if (info.params.empty()) return !call;
  if (!call || args.size() != info.params.size()) return false;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const ParamSpec& p = info.params[k];
    const NameArg& a = args[k];
    if (a.key != p.key || a.tuple != p.tuple) return false;
    if (!p.tuple && a.values.size() != 1) return false;
    for (const Rational& v : a.values) {
      if (p.integer && (!v.is_integer() || !v.is_small() || v.abs() > Rational(1 << 20))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_catalog() {
  static const std::vector<BuiltinInfo> infos = [] {
    std::vector<BuiltinInfo> out;
    for (const auto& e : table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

int family_mode(const std::string& name) {
  if (family_pattern(name) == name) return 0;
  const std::size_t end = name[0] == 'A' ? name.size() - 1 : name.size();
  return std::stoi(name.substr(1, end - 1));
}

int find_builtin(const std::string& name, bool call, const std::vector<NameArg>& args,
                 std::string* why) {
  const std::string key = family_pattern(name);
  const auto& t = table();
  std::string forms;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].info.name != key) continue;
    if (matches(t[k].info, call, args)) return static_cast<int>(k);
    forms += (forms.empty() ? "" : " or ") + signature(t[k].info);
  }
  if (why) {
    *why = forms.empty() ? "unknown name '" + name + "'"
                         : "'" + name + "' used with the wrong arguments; expected " + forms;
  }
  return -1;
}

template <class F>
Value<F> evaluate_builtin(Context<F>& ctx, const Expr& node) {
  std::string why;
  const int k = find_builtin(node.name, node.call, node.args, &why);
  if (k < 0) throw BindError(why);
  const Entry& entry = table()[static_cast<std::size_t>(k)];
  if constexpr (std::is_same_v<F, Scalar>) {
    return entry.exact(ctx, node);
  } else {
    return entry.sample(ctx, node);
  }
}

template Value<Scalar> evaluate_builtin(Context<Scalar>&, const Expr&);
template Value<GaussianRational> evaluate_builtin(Context<GaussianRational>&, const Expr&);

}  // namespace qfock::dsl
