// Copyright 2026 The galwig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GALWIG_FACTOR_FACTOR_H
#define GALWIG_FACTOR_FACTOR_H

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galwig/wigner/wigner.h"

namespace galwig {

/// Signs (s_x, s_y, s_z) of one qubit's Pauli operators.
using SignTriple = std::array<int, 3>;

/// One sign triple per qubit; qubit 0 is the most significant tensor factor.
struct SignAssignment {
    std::vector<SignTriple> qubits;

    /// Rank among all 8^n assignments: '-' is bit 1, s_x is the high bit of
    /// each triple and qubit 0 the most significant triple.
    int rank() const;
    static SignAssignment from_rank(int rank, int num_qubits);
    /// E.g. "(+,+,+)x(-,-,-)".
    std::string to_string() const;
};

/// Outcome of one factorisation candidate or constructive check.
struct FactorReport {
    int id = 0;
    std::string label;
    bool acceptable = false;
    std::map<std::string, double> residuals;
    /// Global index -> local indices, for auditability.
    std::vector<std::pair<std::string, std::string>> index_map;
    /// Sign-parity prediction for product scans (true = predicted acceptable).
    bool witness = false;

    double worst_residual() const;
};

inline constexpr double kFactorTol = 1e-8;

/// The qubit phase-point operators with the given signs:
/// W(k, l) = (1/2)(I + (-1)^k s_z Z + (-1)^l s_x X + (-1)^(k+l) s_y Y).
std::vector<CMatrix> qubit_wigner_operators(const SignTriple &signs);

/// Tensor products of per-qubit families laid out on the GF(2^n) grid:
/// global coordinate k has binary digits (k_0 ... k_{n-1}), qubit 0 being
/// the most significant digit.
WignerFamily product_family(const SignAssignment &signs);

/// True when every pair of triples agrees in an even number of positions.
bool sign_parity_witness(const SignAssignment &signs);

/// Tests one product candidate against global acceptability.
FactorReport evaluate_product(const SignAssignment &signs);

std::vector<FactorReport> scan_two_qubit_products();
std::vector<FactorReport> scan_three_qubit_products();

/// Verifies W_ext((a1,b1),(a2,b2)) = W(b1, R b2) (x) W(a1, a2) for every
/// index tuple, where ext labels are a + d b (a the unit coordinate, b the
/// coordinate of the adjoined root). Throws kResidualExceeded with the worst
/// tuple.
FactorReport factor_odd_bipartite(int p, int m);

/// Modulo-d displacement operator sum_k w^((k+m) n) |k+m><k|, w = e^(2 pi i/d).
CMatrix modular_displacement(int d, int m, int n);

/// Verifies that every modulo-(d1 d2) displacement factors, up to a unit
/// phase, as a tensor product under m = d2 m_a + d1 m_b and
/// n = e_a n_a + e_b n_b (e_a, e_b the CRT idempotents) together with the
/// basis relabelling k = d2 k_a + d1 k_b. Throws kResidualExceeded.
FactorReport crt_factor_check(int d1, int d2);

/// "id,label,acceptable,worst_residual" rows with a header.
std::string factor_reports_csv(const std::vector<FactorReport> &reports);

}  // namespace galwig

#endif
