#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcoh/cohomology.hpp"
#include "lcoh/les.hpp"
#include "lcoh/named_cochains.hpp"

namespace lcoh {

/// Builtin algebra ("h_n", "so_n", "j_n", "sl_2") or "file" with a JSON path.
LieAlgebra select_algebra(const std::string& kind, int n, const std::string& file = {});

enum class ComplexChoice { leibniz, lie, relative, cr };

/// Cohomology dimensions of the chosen complex for degrees 0..max_degree.
/// cr ignores the coefficients (always the adjoint dual construction).
CohomologyReport cohomology_dims(const LieAlgebra& algebra, ModuleKind coefficients, ComplexChoice complex,
                                 int max_degree, const EngineOptions& options);

/// {algebra, n, coefficients, complex, dims, ranks, exactness}.
nlohmann::json dims_report_json(const std::string& algebra, int n, const std::string& coefficients,
                                const CohomologyReport& report);
std::string dims_report_table(const std::string& algebra, int n, const std::string& coefficients,
                              const CohomologyReport& report);

nlohmann::json les_report_json(const std::string& algebra, int n, const LESReport& report);
std::string les_report_table(const LESReport& report);

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);
std::string checks_table(const std::vector<CheckResult>& checks);
bool all_pass(const std::vector<CheckResult>& checks);

/// [I] and [rho] are non-coboundary Leibniz cocycles and HL^1 = HL^2 = 1.
std::vector<CheckResult> verify_class_spans(int n, const EngineOptions& options);

/// n = 3: I (x) theta is a coboundary in CL^4; I ^ theta is a non-trivial CE 4-cocycle.
std::vector<CheckResult> verify_theta_products(const EngineOptions& options);

/// Invariant-subspace tables against their expected shapes (n = 4, k = 2 against the baseline 2).
std::vector<CheckResult> verify_invariant_tables(int n);

/// Named-cochain relations, invariance and invariant tables for one n.
std::vector<CheckResult> verify_invariants(int n);

/// Every check available for n: named cochains, Lie and Leibniz tables,
/// relative groups and long exact sequences (n = 3), connection identities.
std::vector<CheckResult> verify_paper(int n, const EngineOptions& options, std::uint64_t seed);

}  // namespace lcoh
