// Copyright 2026 The qdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdel/qdel.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "averaging.hpp"
#include "error.hpp"
#include "limiting.hpp"
#include "linalg.hpp"
#include "machines.hpp"
#include "states.hpp"
#include "verify.hpp"

struct qdel_object {
  std::variant<qdel::PureState, qdel::DensityOperator, qdel::UnitaryOperator>
      value;
};

struct qdel_verify_report {
  std::vector<qdel::VerificationOutcome> outcomes;
};

namespace {

using qdel::Complex;
using qdel::ErrorCode;

thread_local std::string g_last_error;

qdel_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return QDEL_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch:
      return QDEL_ERR_DIMENSION_MISMATCH;
    case ErrorCode::KindMismatch:
      return QDEL_ERR_KIND_MISMATCH;
    case ErrorCode::NotNormalized:
      return QDEL_ERR_NOT_NORMALIZED;
    case ErrorCode::NotHermitian:
      return QDEL_ERR_NOT_HERMITIAN;
    case ErrorCode::NotUnitary:
      return QDEL_ERR_NOT_UNITARY;
    case ErrorCode::ImaginaryResidue:
      return QDEL_ERR_IMAGINARY_RESIDUE;
    case ErrorCode::OutOfScope:
      return QDEL_ERR_OUT_OF_SCOPE;
    case ErrorCode::UnknownMachine:
      return QDEL_ERR_UNKNOWN_MACHINE;
    case ErrorCode::IndexOutOfRange:
      return QDEL_ERR_INDEX_OUT_OF_RANGE;
  }
  return QDEL_ERR_INTERNAL;
}

qdel_status fail(qdel_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
qdel_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const qdel::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QDEL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QDEL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QDEL_ERR_INTERNAL, "unknown exception");
  }
}

#define QDEL_REQUIRE(ptr)                                              \
  do {                                                                 \
    if ((ptr) == nullptr) {                                            \
      return fail(QDEL_ERR_NULL_ARGUMENT, #ptr " must not be null");   \
    }                                                                  \
  } while (0)

Complex from_c(qdel_complex z) { return {z.re, z.im}; }
qdel_complex to_c(Complex z) { return {z.real(), z.imag()}; }

qdel::BlankState blank_from_c(const qdel_blank& b) {
  return qdel::BlankState(b.m1, from_c(b.m2));
}

qdel_blank blank_to_c(const qdel::BlankState& b) {
  return qdel_blank{b.m1(), to_c(b.m2())};
}

qdel::InputQubit input_from_c(const qdel_input& in) {
  return qdel::InputQubit(in.alpha, from_c(in.beta));
}

qdel::Dims dims_from_c(const size_t* dims, size_t ndims) {
  return qdel::Dims(dims, dims + ndims);
}

qdel::Matrix matrix_from_c(const qdel::Dims& dims, const qdel_complex* entries,
                           size_t nentries) {
  const std::size_t n = qdel::total_dimension(dims);
  if (nentries != n * n) {
    throw qdel::Error(ErrorCode::DimensionMismatch,
                      "entry count does not match product of dims squared");
  }
  qdel::Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          from_c(entries[r * n + c]);
    }
  }
  return m;
}

template <typename T>
qdel_status emit(T&& value, qdel_object** out) {
  *out = new qdel_object{std::forward<T>(value)};
  return QDEL_OK;
}

template <typename T>
const T& expect(const qdel_object* obj, const char* what) {
  const T* p = std::get_if<T>(&obj->value);
  if (p == nullptr) {
    throw qdel::Error(ErrorCode::KindMismatch,
                      std::string(what) + ": wrong object kind");
  }
  return *p;
}

const qdel::Dims& dims_of(const qdel_object* obj) {
  return std::visit([](const auto& v) -> const qdel::Dims& { return v.dims(); },
                    obj->value);
}

qdel::BranchedFidelity copy_branched(const qdel::BranchedFidelity& f,
                                     qdel_branched_fidelity* out) {
  out->positive_branch = f.positive_branch;
  out->negative_branch = f.negative_branch;
  out->degenerate = f.degenerate ? 1 : 0;
  return f;
}

qdel_machine machine_to_c(qdel::Machine m) {
  return static_cast<qdel_machine>(static_cast<int>(m));
}

qdel::Machine machine_from_c(qdel_machine m) {
  switch (m) {
    case QDEL_MACHINE_ONE_TRANSFORMER_LIMIT:
      return qdel::Machine::OneTransformerLimit;
    case QDEL_MACHINE_TWO_TRANSFORMER_LIMIT:
      return qdel::Machine::TwoTransformerLimit;
    case QDEL_MACHINE_PB_WITH_TRANSFORMER:
      return qdel::Machine::PBWithTransformer;
    case QDEL_MACHINE_PB_ALONE:
      return qdel::Machine::PBAlone;
  }
  throw qdel::Error(ErrorCode::UnknownMachine, "unknown machine id");
}

void report_to_c(const qdel::FidelityReport& r, qdel_fidelity_report* out) {
  out->machine = machine_to_c(r.machine);
  out->blank = blank_to_c(r.blank);
  out->has_input = r.input ? 1 : 0;
  out->input = r.input ? qdel_input{r.input->alpha(), to_c(r.input->beta())}
                       : qdel_input{0.0, {0.0, 0.0}};
  out->fidelity = r.fidelity;
  out->branch = !r.branch ? QDEL_BRANCH_NONE
                : *r.branch == qdel::Branch::PositiveProduct
                    ? QDEL_BRANCH_POSITIVE_PRODUCT
                    : QDEL_BRANCH_NEGATIVE_PRODUCT;
}

}  // namespace

extern "C" {

const char* qdel_version(void) { return "0.1.0"; }

const char* qdel_status_string(qdel_status status) {
  switch (status) {
    case QDEL_OK:
      return "ok";
    case QDEL_ERR_NULL_ARGUMENT:
      return "null argument";
    case QDEL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QDEL_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case QDEL_ERR_KIND_MISMATCH:
      return "kind mismatch";
    case QDEL_ERR_NOT_NORMALIZED:
      return "not normalized";
    case QDEL_ERR_NOT_HERMITIAN:
      return "not Hermitian";
    case QDEL_ERR_NOT_UNITARY:
      return "not unitary";
    case QDEL_ERR_IMAGINARY_RESIDUE:
      return "imaginary residue";
    case QDEL_ERR_OUT_OF_SCOPE:
      return "out of scope";
    case QDEL_ERR_UNKNOWN_MACHINE:
      return "unknown machine";
    case QDEL_ERR_INDEX_OUT_OF_RANGE:
      return "index out of range";
    case QDEL_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case QDEL_ERR_INTERNAL:
      return "internal error";
  }
  return "unrecognized status";
}

const char* qdel_last_error_message(void) { return g_last_error.c_str(); }

// -- Objects -------------------------------------------------------------------

qdel_status qdel_pure_state_create(const size_t* dims, size_t ndims,
                                   const qdel_complex* amps, size_t namps,
                                   qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(dims);
    QDEL_REQUIRE(amps);
    QDEL_REQUIRE(out);
    qdel::Dims d = dims_from_c(dims, ndims);
    if (namps != qdel::total_dimension(d)) {
      return fail(QDEL_ERR_DIMENSION_MISMATCH,
                  "amplitude count does not match product of dims");
    }
    qdel::Vector v(static_cast<Eigen::Index>(namps));
    for (size_t i = 0; i < namps; ++i) {
      v(static_cast<Eigen::Index>(i)) = from_c(amps[i]);
    }
    return emit(qdel::PureState(std::move(d), std::move(v)), out);
  });
}

qdel_status qdel_density_operator_create(const size_t* dims, size_t ndims,
                                         const qdel_complex* entries,
                                         size_t nentries, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(dims);
    QDEL_REQUIRE(entries);
    QDEL_REQUIRE(out);
    qdel::Dims d = dims_from_c(dims, ndims);
    qdel::Matrix m = matrix_from_c(d, entries, nentries);
    return emit(qdel::DensityOperator(std::move(d), std::move(m)), out);
  });
}

qdel_status qdel_unitary_create(const size_t* dims, size_t ndims,
                                const qdel_complex* entries, size_t nentries,
                                qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(dims);
    QDEL_REQUIRE(entries);
    QDEL_REQUIRE(out);
    qdel::Dims d = dims_from_c(dims, ndims);
    qdel::Matrix m = matrix_from_c(d, entries, nentries);
    return emit(qdel::UnitaryOperator(std::move(d), std::move(m)), out);
  });
}

void qdel_object_destroy(qdel_object* obj) { delete obj; }

qdel_status qdel_object_kind(const qdel_object* obj, qdel_kind* out) {
  return guarded([&] {
    QDEL_REQUIRE(obj);
    QDEL_REQUIRE(out);
    *out = static_cast<qdel_kind>(obj->value.index());
    return QDEL_OK;
  });
}

qdel_status qdel_object_dims(const qdel_object* obj, size_t* dims,
                             size_t capacity, size_t* ndims) {
  return guarded([&] {
    QDEL_REQUIRE(obj);
    QDEL_REQUIRE(ndims);
    const qdel::Dims& d = dims_of(obj);
    *ndims = d.size();
    if (capacity < d.size()) {
      return fail(QDEL_ERR_BUFFER_TOO_SMALL, "dims buffer too small");
    }
    QDEL_REQUIRE(dims);
    std::copy(d.begin(), d.end(), dims);
    return QDEL_OK;
  });
}

qdel_status qdel_object_data(const qdel_object* obj, qdel_complex* data,
                             size_t capacity, size_t* count) {
  return guarded([&] {
    QDEL_REQUIRE(obj);
    QDEL_REQUIRE(count);
    if (const auto* s = std::get_if<qdel::PureState>(&obj->value)) {
      const auto n = static_cast<size_t>(s->amps().size());
      *count = n;
      if (capacity < n) {
        return fail(QDEL_ERR_BUFFER_TOO_SMALL, "data buffer too small");
      }
      QDEL_REQUIRE(data);
      for (size_t i = 0; i < n; ++i) {
        data[i] = to_c(s->amps()(static_cast<Eigen::Index>(i)));
      }
      return QDEL_OK;
    }
    const qdel::Matrix& m = std::visit(
        [](const auto& v) -> const qdel::Matrix& {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>,
                                       qdel::PureState>) {
            throw qdel::Error(ErrorCode::KindMismatch, "unreachable");
          } else {
            return v.matrix();
          }
        },
        obj->value);
    const auto n = static_cast<size_t>(m.rows());
    *count = n * n;
    if (capacity < n * n) {
      return fail(QDEL_ERR_BUFFER_TOO_SMALL, "data buffer too small");
    }
    QDEL_REQUIRE(data);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        data[r * n + c] =
            to_c(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
      }
    }
    return QDEL_OK;
  });
}

qdel_status qdel_tensor_product(const qdel_object* a, const qdel_object* b,
                                qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(a);
    QDEL_REQUIRE(b);
    QDEL_REQUIRE(out);
    if (a->value.index() != b->value.index()) {
      return fail(QDEL_ERR_KIND_MISMATCH,
                  "tensor_product: operands are of different kinds");
    }
    return std::visit(
        [&](const auto& lhs) {
          using T = std::decay_t<decltype(lhs)>;
          return emit(qdel::tensor_product(lhs, std::get<T>(b->value)), out);
        },
        a->value);
  });
}

qdel_status qdel_partial_trace(const qdel_object* rho, const size_t* keep,
                               size_t nkeep, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(rho);
    QDEL_REQUIRE(out);
    if (nkeep > 0) QDEL_REQUIRE(keep);
    const auto& r = expect<qdel::DensityOperator>(rho, "partial_trace");
    std::vector<std::size_t> k(keep, keep + nkeep);
    return emit(qdel::partial_trace(r, k), out);
  });
}

qdel_status qdel_outer(const qdel_object* phi, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(phi);
    QDEL_REQUIRE(out);
    return emit(qdel::outer(expect<qdel::PureState>(phi, "outer")), out);
  });
}

qdel_status qdel_apply(const qdel_object* unitary, const qdel_object* phi,
                       qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(unitary);
    QDEL_REQUIRE(phi);
    QDEL_REQUIRE(out);
    const auto& u = expect<qdel::UnitaryOperator>(unitary, "apply");
    return emit(u.apply(expect<qdel::PureState>(phi, "apply")), out);
  });
}

qdel_status qdel_fidelity_against(const qdel_object* rho,
                                  const qdel_object* phi, double* out) {
  return guarded([&] {
    QDEL_REQUIRE(rho);
    QDEL_REQUIRE(phi);
    QDEL_REQUIRE(out);
    *out = qdel::fidelity_against(expect<qdel::DensityOperator>(rho, "fidelity"),
                                  expect<qdel::PureState>(phi, "fidelity"));
    return QDEL_OK;
  });
}

qdel_status qdel_eigen_min(const qdel_object* rho, double* out) {
  return guarded([&] {
    QDEL_REQUIRE(rho);
    QDEL_REQUIRE(out);
    *out = qdel::eigen_min(expect<qdel::DensityOperator>(rho, "eigen_min"));
    return QDEL_OK;
  });
}

// -- Machines ------------------------------------------------------------------

const char* qdel_machine_name(qdel_machine machine) {
  switch (machine) {
    case QDEL_MACHINE_ONE_TRANSFORMER_LIMIT:
    case QDEL_MACHINE_TWO_TRANSFORMER_LIMIT:
    case QDEL_MACHINE_PB_WITH_TRANSFORMER:
    case QDEL_MACHINE_PB_ALONE:
      return qdel::machine_name(machine_from_c(machine)).data();
  }
  return nullptr;
}

qdel_status qdel_machine_parse(const char* name, qdel_machine* out) {
  return guarded([&] {
    QDEL_REQUIRE(name);
    QDEL_REQUIRE(out);
    const auto m = qdel::parse_machine(name);
    if (!m) {
      return fail(QDEL_ERR_UNKNOWN_MACHINE,
                  std::string("unknown machine id '") + name + "'");
    }
    *out = machine_to_c(*m);
    return QDEL_OK;
  });
}

qdel_status qdel_sigma(const qdel_blank* blank, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    return emit(qdel::sigma(blank_from_c(*blank)), out);
  });
}

qdel_status qdel_sigma_perp(const qdel_blank* blank, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    return emit(qdel::sigma_perp(blank_from_c(*blank)), out);
  });
}

qdel_status qdel_sigma_prime(const qdel_blank* blank, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    return emit(qdel::sigma_prime(blank_from_c(*blank)), out);
  });
}

qdel_status qdel_transformer(qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(out);
    return emit(qdel::transformer().gate(), out);
  });
}

qdel_status qdel_pb_delete(const qdel_input* input, const qdel_blank* blank,
                           qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(input);
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    return emit(qdel::pb_delete(input_from_c(*input), blank_from_c(*blank)),
                out);
  });
}

qdel_status qdel_pb_with_transformer_rho2(const qdel_input* input,
                                          const qdel_blank* blank,
                                          qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(input);
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    return emit(qdel::pb_with_transformer_rho2(input_from_c(*input),
                                               blank_from_c(*blank)),
                out);
  });
}

qdel_status qdel_pb_alone_rho2(const qdel_input* input,
                               const qdel_blank* blank, qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(input);
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    return emit(
        qdel::pb_alone_rho2(input_from_c(*input), blank_from_c(*blank)), out);
  });
}

qdel_status qdel_pb_with_transformer_rho2_closed_form(const qdel_input* input,
                                                      const qdel_blank* blank,
                                                      qdel_complex out[4]) {
  return guarded([&] {
    QDEL_REQUIRE(input);
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    const qdel::Matrix m = qdel::pb_with_transformer_rho2_closed_form(
        input_from_c(*input), blank_from_c(*blank));
    out[0] = to_c(m(0, 0));
    out[1] = to_c(m(0, 1));
    out[2] = to_c(m(1, 0));
    out[3] = to_c(m(1, 1));
    return QDEL_OK;
  });
}

qdel_status qdel_pb_with_transformer_f2_closed_form(const qdel_input* input,
                                                    const qdel_blank* blank,
                                                    double* out) {
  return guarded([&] {
    QDEL_REQUIRE(input);
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    *out = qdel::pb_with_transformer_f2_closed_form(input_from_c(*input),
                                                    blank_from_c(*blank));
    return QDEL_OK;
  });
}

qdel_status qdel_fidelity(qdel_machine machine, const qdel_blank* blank,
                          const qdel_input* input, qdel_fidelity_report* out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    std::optional<qdel::InputQubit> in;
    if (input != nullptr) in = input_from_c(*input);
    const qdel::Machine m = machine_from_c(machine);
    if (qdel::is_input_independent(m)) in.reset();
    report_to_c(qdel::evaluate(m, blank_from_c(*blank), in), out);
    return QDEL_OK;
  });
}

qdel_status qdel_average_fidelity(qdel_machine machine,
                                  const qdel_blank* blank, size_t samples,
                                  double* out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    *out = qdel::average_fidelity(machine_from_c(machine), blank_from_c(*blank),
                                  samples);
    return QDEL_OK;
  });
}

qdel_status qdel_monte_carlo_average_fidelity(qdel_machine machine,
                                              const qdel_blank* blank,
                                              size_t samples, uint64_t seed,
                                              double* out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    *out = qdel::monte_carlo_average_fidelity(
        machine_from_c(machine), blank_from_c(*blank), samples, seed);
    return QDEL_OK;
  });
}

// -- Limiting fidelities -------------------------------------------------------

qdel_status qdel_f1_limiting(const qdel_blank* blank,
                             qdel_branched_fidelity* out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    copy_branched(qdel::f1_limiting(blank_from_c(*blank)), out);
    return QDEL_OK;
  });
}

qdel_status qdel_f_two_transformer(const qdel_blank* blank, double* out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    *out = qdel::f_two_transformer(blank_from_c(*blank));
    return QDEL_OK;
  });
}

qdel_status qdel_f_two_transformer_against_sigma(const qdel_blank* blank,
                                                 double* out) {
  return guarded([&] {
    QDEL_REQUIRE(blank);
    QDEL_REQUIRE(out);
    *out = qdel::f_two_transformer_against_sigma(blank_from_c(*blank));
    return QDEL_OK;
  });
}

qdel_status qdel_f_two_transformer_branched(double m1_sq,
                                            qdel_branched_fidelity* out) {
  return guarded([&] {
    QDEL_REQUIRE(out);
    copy_branched(qdel::f_two_transformer_branched(m1_sq), out);
    return QDEL_OK;
  });
}

qdel_status qdel_rho2_two_transformer_limit(qdel_object** out) {
  return guarded([&] {
    QDEL_REQUIRE(out);
    return emit(qdel::rho2_two_transformer_limit(), out);
  });
}

qdel_status qdel_table(int which, qdel_table_row* rows, size_t capacity,
                       size_t* count) {
  return guarded([&] {
    QDEL_REQUIRE(count);
    if (which != 1 && which != 2) {
      return fail(QDEL_ERR_INVALID_ARGUMENT, "table must be 1 or 2");
    }
    const auto table = which == 1 ? qdel::table1() : qdel::table2();
    *count = table.size();
    if (capacity < table.size()) {
      return fail(QDEL_ERR_BUFFER_TOO_SMALL, "row buffer too small");
    }
    QDEL_REQUIRE(rows);
    for (size_t i = 0; i < table.size(); ++i) {
      rows[i].m1_sq = table[i].m1_sq;
      rows[i].m2_sq = table[i].m2_sq;
      rows[i].diff = table[i].diff;
      copy_branched(table[i].fidelity, &rows[i].fidelity);
    }
    return QDEL_OK;
  });
}

// -- Verification --------------------------------------------------------------

void qdel_verify_options_default(qdel_verify_options* options) {
  if (options == nullptr) return;
  const qdel::VerifyOptions d;
  options->algebraic_tolerance = d.tol.algebraic;
  options->eigen_tolerance = d.tol.eigen;
  options->table_tolerance = d.table_tolerance;
  options->average_tolerance = d.average_tolerance;
  options->quadrature_samples = d.quadrature_samples;
  options->transformer_perturbation = d.transformer_perturbation;
  options->seed = d.seed;
}

qdel_status qdel_verify_run(const qdel_verify_options* options,
                            qdel_verify_report** out) {
  return guarded([&] {
    QDEL_REQUIRE(out);
    qdel::VerifyOptions opt;
    if (options != nullptr) {
      opt.tol.algebraic = options->algebraic_tolerance;
      opt.tol.eigen = options->eigen_tolerance;
      opt.table_tolerance = options->table_tolerance;
      opt.average_tolerance = options->average_tolerance;
      opt.quadrature_samples = options->quadrature_samples;
      opt.transformer_perturbation = options->transformer_perturbation;
      opt.seed = options->seed;
    }
    if (opt.quadrature_samples == 0) {
      return fail(QDEL_ERR_INVALID_ARGUMENT,
                  "quadrature_samples must be at least 1");
    }
    *out = new qdel_verify_report{qdel::run_verification(opt)};
    return QDEL_OK;
  });
}

size_t qdel_verify_report_count(const qdel_verify_report* report) {
  return report == nullptr ? 0 : report->outcomes.size();
}

qdel_status qdel_verify_report_get(const qdel_verify_report* report,
                                   size_t index, qdel_verify_outcome* out) {
  return guarded([&] {
    QDEL_REQUIRE(report);
    QDEL_REQUIRE(out);
    if (index >= report->outcomes.size()) {
      return fail(QDEL_ERR_INDEX_OUT_OF_RANGE, "outcome index out of range");
    }
    const auto& o = report->outcomes[index];
    out->check = o.check.c_str();
    out->passed = o.passed ? 1 : 0;
    out->deviation = o.deviation;
    out->tolerance = o.tolerance;
    out->anchor = o.anchor.c_str();
    return QDEL_OK;
  });
}

int qdel_verify_report_all_passed(const qdel_verify_report* report) {
  return report != nullptr && qdel::all_passed(report->outcomes) ? 1 : 0;
}

void qdel_verify_report_destroy(qdel_verify_report* report) { delete report; }

}  // extern "C"
