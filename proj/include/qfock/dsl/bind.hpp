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
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qfock/dsl/ast.hpp"
#include "qfock/fock/sparse_operator.hpp"

namespace qfock::dsl {

/// Result of evaluating an expression: an exact scalar or an operator.
template <class F>
class Value {
 public:
  Value(Scalar s) : v_(std::move(s)) {}               // NOLINT
  Value(SparseOperator<F> op) : v_(std::move(op)) {}  // NOLINT

  bool is_scalar() const { return std::holds_alternative<Scalar>(v_); }
  const Scalar& scalar() const { return std::get<Scalar>(v_); }
  const SparseOperator<F>& op() const { return std::get<SparseOperator<F>>(v_); }
  /// Scalars become multiples of the identity.
  SparseOperator<F> as_operator(const Realization<F>& r) const;

 private:
  std::variant<Scalar, SparseOperator<F>> v_;
};

/// Realization plus a memo of builtin constructions, shared by everything
/// evaluated against one realization.
template <class F>
class Context {
 public:
  using field_type = F;

  explicit Context(const Realization<F>& r) : r_(&r) {}

  const Realization<F>& realization() const { return *r_; }

  template <class T>
  const T& cached(const std::string& key, const std::function<T()>& make) {
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, std::make_shared<T>(make())).first;
    }
    return *static_cast<const T*>(it->second.get());
  }

 private:
  const Realization<F>* r_;
  std::map<std::string, std::shared_ptr<void>> cache_;
};

/// Evaluates the builtin named by `node` (a name node that resolved to a
/// builtin).
template <class F>
Value<F> evaluate_builtin(Context<F>& ctx, const Expr& node);

/// Evaluates a suite's bindings and relations lazily against one
/// realization. Errors other than PoleError are reported as BindError with
/// the source location of the failing node.
template <class F>
class Binder {
 public:
  /// Throws BindError if the realization has fewer modes than the suite.
  Binder(const Suite& suite, const Realization<F>& r);

  Value<F> evaluate(const ExprPtr& e);
  SparseOperator<F> operator_of(const ExprPtr& e);
  /// Both sides of relation i as operators.
  std::pair<SparseOperator<F>, SparseOperator<F>> relation(std::size_t i);

 private:
  Value<F> eval(const Expr& e);
  Value<F> eval_node(const Expr& e);

  const Suite* suite_;
  Context<F> ctx_;
  std::map<std::string, Value<F>> lets_;
  std::set<std::string> active_;
};

template <class F>
struct BoundRelation {
  const Relation* relation;
  SparseOperator<F> lhs;
  SparseOperator<F> rhs;
};

template <class F>
std::vector<BoundRelation<F>> bind(const Suite& suite, const Realization<F>& r);

/// Evaluates a standalone expression that references builtins only.
template <class F>
Value<F> evaluate_expression(const ExprPtr& e, const Realization<F>& r);

#define QFOCK_DSL_EXTERN(F)                                                    \
  extern template class Value<F>;                                              \
  extern template class Binder<F>;                                             \
  extern template Value<F> evaluate_builtin(Context<F>&, const Expr&);         \
  extern template std::vector<BoundRelation<F>> bind(const Suite&,             \
                                                     const Realization<F>&);   \
  extern template Value<F> evaluate_expression(const ExprPtr&,                 \
                                               const Realization<F>&);
QFOCK_DSL_EXTERN(Scalar)
QFOCK_DSL_EXTERN(GaussianRational)
#undef QFOCK_DSL_EXTERN

}  // namespace qfock::dsl
