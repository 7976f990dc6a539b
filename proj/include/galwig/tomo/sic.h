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

#ifndef GALWIG_TOMO_SIC_H
#define GALWIG_TOMO_SIC_H

#include <array>
#include <vector>

#include "galwig/tomo/tomography.h"

namespace galwig {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// (<X>, <Y>, <Z>) of a qubit state; throws kShapeMismatch.
BlochVector bloch_vector(const CMatrix &rho);

/// The 4x4 system-ancilla unitary realising the qubit SIC measurement, in
/// the product basis |system, ancilla> with the system most significant:
/// (1/2) [[e a, a, b, -e b], [a, -e* a, -e* b, -b], [b, -e b, e a, a],
/// [-e* b, -b, a, -e* a]], e = exp(i pi/4), a = sqrt(1 + 1/sqrt 3),
/// b = sqrt(1 - 1/sqrt 3).
CMatrix sic_unitary_qubit();

/// Elements E_x = A_x^dagger A_x with A_x = <x| U |., 0>, labelled "00",
/// "01", "10", "11".
POVM sic_povm_qubit();

/// Normalised rank-1 directions of the elements of a rank-1 POVM.
std::vector<std::vector<cplx>> povm_fiducials(const POVM &povm);

/// Closed-form outcome probabilities in the order P00, P01, P10, P11:
/// (1/4)(1 + (s_x x + s_y y + s_z z)/sqrt 3) with sign patterns
/// (+,+,+), (-,-,+), (+,-,-), (-,+,-).
std::array<double, 4> sic_probabilities(const CMatrix &rho);

/// Probabilities read off the diagonal of U (rho (x) |0><0|) U^dagger.
std::array<double, 4> sic_probabilities_operational(const CMatrix &rho);

/// Inverts the closed form; throws kNotNormalized if sum P is off by > 1e-6.
BlochVector bloch_from_sic(const std::array<double, 4> &p);

/// Outcome x <-> phase-space point (k, l) under which
/// P = W / sqrt 3 + (1 - 1/sqrt 3) / 4 for the canonical qubit Wigner
/// function. Found by matching the relation on probe states; throws if no
/// assignment fits.
std::array<PhasePoint, 4> sic_wigner_correspondence();

/// Max deviation of the affine SIC/Wigner relation for one state.
double sic_wigner_affine_residual(const CMatrix &rho);

/// The 16 products E^a_x (x) E^b_y of two qubit SIC POVMs, labelled "xy|x'y'".
POVM product_sic_two_qubit();

struct FrameReport {
    int rank = 0;
    double condition = 0.0;
    std::vector<double> singular_values;
    /// Distinct moduli |<phi_a|phi_b>| over pairs of distinct fiducials.
    std::vector<double> overlap_values;
};

/// Frame analysis of a POVM: each element expanded over the d^2
/// tensor-product Pauli operators (real coefficients tr(E P)).
FrameReport pauli_frame_report(const POVM &povm);

MeasurementScheme sic_qubit_scheme();
MeasurementScheme product_sic_scheme();

}  // namespace galwig

#endif
