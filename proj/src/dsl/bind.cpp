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


#include "qfock/dsl/bind.hpp"

namespace qfock::dsl {
namespace {

std::string at(const Expr& e) {
  return std::to_string(e.where.line) + ":" + std::to_string(e.where.column) + ": ";
}

/// Rational value of a constant real entry; the caller has established that
/// the operator's entries are constants.
Rational real_constant(const Scalar& v) { return v.constant_value().re(); }
Rational real_constant(const GaussianRational& v) { return v.re(); }
bool is_real_value(const Scalar& v) { return v.constant_value().is_real(); }
bool is_real_value(const GaussianRational& v) { return v.is_real(); }

Scalar apply(ExprKind kind, const Rational& x, const Rational& e) {
  switch (kind) {
    case ExprKind::qpow: return q_power(e * x);
    case ExprKind::qbr: return qbracket(x, e);
    default:
      if (e.is_one()) return qnum(x);
      return (Scalar(1) - q_power(e * x)) / (Scalar(1) - q_power(e));
  }
}

/// f(D) for a diagonal D with constant rational entries.
template <class F>
SparseOperator<F> functional(const Realization<F>& r, const SparseOperator<F>& d,
                             ExprKind kind, const Rational& e) {
  const DegreeMeta& meta = d.meta();
  const bool constant = !meta.range || (*meta.range == std::make_pair(0, 0) && meta.den.is_one());
  if (!constant) {
    throw DomainError("argument must be diagonal with constant entries");
  }
  const ModeConfig& cfg = r.config();
  std::vector<typename SparseOperator<F>::Column> cols(cfg.dim());
  std::vector<char> tainted(cfg.dim(), 0);
  std::vector<Scalar> values(cfg.dim());
  for (std::size_t c = 0; c < cfg.dim(); ++c) {
    const auto s = static_cast<StateIndex>(c);
    Rational x;
    for (const auto& entry : d.column(s)) {
      if (entry.target != s) throw DomainError("argument is not diagonal");
      if (!is_real_value(entry.value)) throw DomainError("argument has non-real entries");
      x = real_constant(entry.value);
    }
    values[c] = apply(kind, x, e);
    if (!values[c].is_zero()) cols[c].push_back({s, r.lift(values[c])});
    tainted[c] = d.tainted(s) ? 1 : 0;
  }
  DegreeMeta out_meta = DegreeMeta::of(values);
  std::vector<std::optional<DegreeRange>> ranges(cfg.dim());
  for (std::size_t c = 0; c < cfg.dim(); ++c) ranges[c] = entry_range(values[c], out_meta.den);
  return SparseOperator<F>(cfg, std::move(cols), std::move(tainted),
                           std::vector<int>(cfg.modes(), 0), std::move(out_meta),
                           std::vector<int>(cfg.modes(), 0), std::move(ranges));
}

}  // namespace

template <class F>
SparseOperator<F> Value<F>::as_operator(const Realization<F>& r) const {
  if (is_scalar()) return scale(r, scalar(), identity(r));
  return op();
}

template <class F>
Binder<F>::Binder(const Suite& suite, const Realization<F>& r) : suite_(&suite), ctx_(r) {
  if (r.config().modes() < suite.modes) {
    throw BindError("suite '" + suite.name + "' needs " + std::to_string(suite.modes) +
                    " modes; the configuration has " + std::to_string(r.config().modes()));
  }
}

template <class F>
Value<F> Binder<F>::evaluate(const ExprPtr& e) {
  return eval(*e);
}

template <class F>
SparseOperator<F> Binder<F>::operator_of(const ExprPtr& e) {
  return eval(*e).as_operator(ctx_.realization());
}

template <class F>
std::pair<SparseOperator<F>, SparseOperator<F>> Binder<F>::relation(std::size_t i) {
  const Relation& rel = suite_->relations.at(i);
  SparseOperator<F> lhs = operator_of(rel.lhs);
  return {std::move(lhs), operator_of(rel.rhs)};
}

template <class F>
Value<F> Binder<F>::eval(const Expr& e) {
  try {
    return eval_node(e);
  } catch (const PoleError&) {
    throw;
  } catch (const BindError&) {
    throw;
  } catch (const Error& err) {
    throw BindError(at(e) + err.what());
  }
}

template <class F>
Value<F> Binder<F>::eval_node(const Expr& e) {
  const Realization<F>& r = ctx_.realization();
  auto child = [&](std::size_t k) { return eval(*e.children[k]); };
  auto as_op = [&](const Value<F>& v) { return v.as_operator(r); };
  switch (e.kind) {
    case ExprKind::literal:
      return e.literal;
    case ExprKind::name: {
      if (!e.call) {
        if (const Binding* b = suite_->binding(e.name)) {
          if (auto it = lets_.find(e.name); it != lets_.end()) return it->second;
          if (!active_.insert(e.name).second) {
            throw BindError(at(e) + "binding '" + e.name + "' depends on itself");
          }
          Value<F> v = eval(*b->value);
          active_.erase(e.name);
          return lets_.emplace(e.name, std::move(v)).first->second;
        }
      }
      return evaluate_builtin(ctx_, e);
    }
    case ExprKind::negate: {
      const Value<F> v = child(0);
      if (v.is_scalar()) return -v.scalar();
      return -v.op();
    }
    case ExprKind::add:
    case ExprKind::subtract: {
      const Value<F> a = child(0), b = child(1);
      const bool add = e.kind == ExprKind::add;
      if (a.is_scalar() && b.is_scalar()) {
        return add ? a.scalar() + b.scalar() : a.scalar() - b.scalar();
      }
      return add ? as_op(a) + as_op(b) : as_op(a) - as_op(b);
    }
    case ExprKind::compose: {
      const Value<F> a = child(0), b = child(1);
      if (a.is_scalar() && b.is_scalar()) return a.scalar() * b.scalar();
      if (a.is_scalar()) return scale(r, a.scalar(), b.op());
      if (b.is_scalar()) return scale(r, b.scalar(), a.op());
      return compose(a.op(), b.op());
    }
    case ExprKind::divide: {
      const Value<F> a = child(0), b = child(1);
      if (!b.is_scalar()) throw BindError(at(e) + "divisor must be a scalar");
      if (b.scalar().is_zero()) throw BindError(at(e) + "division by zero");
      if (a.is_scalar()) return a.scalar() / b.scalar();
      return scale(r, b.scalar().inv(), a.op());
    }
    case ExprKind::power: {
      const Value<F> a = child(0);
      const int k = static_cast<int>(e.exponent.numerator().get_si());
      if (a.is_scalar()) {
        if (!e.exponent.is_integer()) throw BindError(at(e) + "fractional power of a scalar");
        return a.scalar().pow(k);
      }
      return power(r, a.op(), k);
    }
    case ExprKind::commutator:
    case ExprKind::anticommutator:
    case ExprKind::q_commutator: {
      const Value<F> a = child(0), b = child(1);
      if (a.is_scalar() && b.is_scalar()) {
        const Scalar ab = a.scalar() * b.scalar();
        if (e.kind == ExprKind::commutator) return Scalar();
        if (e.kind == ExprKind::anticommutator) return Scalar(2) * ab;
        return (q_power(e.exponent) - q_power(-e.exponent)) * ab;
      }
      const SparseOperator<F> x = as_op(a), y = as_op(b);
      if (e.kind == ExprKind::commutator) return commutator(x, y);
      if (e.kind == ExprKind::anticommutator) return anticommutator(x, y);
      return q_commutator(r, x, y, e.exponent);
    }
    case ExprKind::qpow:
    case ExprKind::qbr:
    case ExprKind::qnum: {
      const Value<F> d = child(0);
      if (d.is_scalar()) {
        const Scalar& s = d.scalar();
        if (!s.is_constant() || !s.constant_value().is_real()) {
          throw BindError(at(e) + "argument must be a rational constant or diagonal operator");
        }
        return apply(e.kind, s.constant_value().re(), e.exponent);
      }
      return functional(r, d.op(), e.kind, e.exponent);
    }
  }
  throw BindError(at(e) + "unknown expression node");
}

template <class F>
std::vector<BoundRelation<F>> bind(const Suite& suite, const Realization<F>& r) {
  Binder<F> binder(suite, r);
  std::vector<BoundRelation<F>> out;
  for (std::size_t i = 0; i < suite.relations.size(); ++i) {
    auto [lhs, rhs] = binder.relation(i);
    out.push_back({&suite.relations[i], std::move(lhs), std::move(rhs)});
  }
  return out;
}

template <class F>
Value<F> evaluate_expression(const ExprPtr& e, const Realization<F>& r) {
  const Suite empty;
  Binder<F> binder(empty, r);
  return binder.evaluate(e);
}

#define QFOCK_DSL_INSTANTIATE(F)                                               \
  template class Value<F>;                                                     \
  template class Binder<F>;                                                    \
  template std::vector<BoundRelation<F>> bind(const Suite&, const Realization<F>&); \
  template Value<F> evaluate_expression(const ExprPtr&, const Realization<F>&);
QFOCK_DSL_INSTANTIATE(Scalar)
QFOCK_DSL_INSTANTIATE(GaussianRational)
#undef QFOCK_DSL_INSTANTIATE

}  // namespace qfock::dsl
