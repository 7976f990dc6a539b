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

#ifndef GALWIG_GF_FIELD_H
#define GALWIG_GF_FIELD_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galwig {

using cplx = std::complex<double>;

/// Label of a field element: an integer in [0, d) whose p-ary digits
/// (least significant first) are the element's coordinates.
using Label = int;

/// Largest field order supported by the table representation.
inline constexpr int kMaxFieldOrder = 256;

bool is_prime(int n);

/// Exact unit root exp(2*pi*i*k/n). Quarter turns are returned exactly.
cplx unit_root(long long k, long long n);

struct PrimePower {
    int p = 2;
    int m = 1;
    int d = 2;

    /// Throws kNotPrime if p is not prime, kInvalidArgument if m < 1 or p^m
    /// exceeds kMaxFieldOrder.
    static PrimePower make(int p, int m);
    /// Factors d as p^m; nullopt if d is not a prime power.
    static std::optional<PrimePower> from_order(int d);

    bool operator==(const PrimePower &) const = default;
};

enum class ArithOp { kAdd, kSub, kMul, kNeg, kInv, kDiv };

/// Complete arithmetic tables of GF(p^m).
///
/// Addition is componentwise mod-p addition of digit vectors. The additive
/// character is gamma^x = exp(2*pi*i*c(x)/p) where c is the F_p-linear
/// functional c(x) = sum_n weight[n]*digit[n] mod p. Fields built from a
/// modulus use all-ones weights (the digit sum); quadratic extensions
/// project onto the base coordinate instead.
///
/// Immutable after construction.
class FieldTables {
   public:
    /// Builds GF(p^m) as F_p[x]/(modulus). The modulus is given as m+1
    /// coefficients, constant term first. Without a modulus, the monic
    /// irreducible polynomial with the smallest coefficient label
    /// sum_k c_k p^k is used.
    static FieldTables build(int p, int m, const std::optional<std::vector<int>> &modulus = std::nullopt);

    /// Assembles a field from explicit tables and checks every field axiom.
    /// `description` is carried into exports (e.g. how the tables arose).
    static FieldTables from_tables(
        PrimePower pp,
        std::vector<Label> add,
        std::vector<Label> mul,
        std::vector<int> weights,
        std::string description);

    const PrimePower &prime_power() const {
        return pp_;
    }
    int p() const {
        return pp_.p;
    }
    int m() const {
        return pp_.m;
    }
    int d() const {
        return pp_.d;
    }

    Label add(Label x, Label y) const {
        return add_[x * pp_.d + y];
    }
    Label mul(Label x, Label y) const {
        return mul_[x * pp_.d + y];
    }
    Label neg(Label x) const {
        return neg_[x];
    }
    Label sub(Label x, Label y) const {
        return add(x, neg(y));
    }
    /// Throws kDivisionByZero for x == 0.
    Label inv(Label x) const;
    /// Throws kDivisionByZero for y == 0.
    Label div(Label x, Label y) const;
    /// Generic entry point; `y` is required for the binary operations.
    Label apply(ArithOp op, Label x, std::optional<Label> y = std::nullopt) const;

    /// 1 + 1 (zero in characteristic 2).
    Label two() const {
        return add(1, 1);
    }
    /// The element whose only nonzero digit is a 1 in position n.
    Label basis_element(int n) const;

    std::vector<int> digits(Label x) const;
    Label from_digits(std::span<const int> digits) const;

    /// c(x) in [0, p).
    int functional(Label x) const;
    /// sum_n weight[n]*digit[n] as a plain (unreduced) integer.
    int weighted_digit_sum(Label x) const;

    /// gamma^x.
    cplx character(Label x) const {
        return characters_[x];
    }
    /// Fixed square root of gamma^x: gamma^(x/2) for odd p, and
    /// i^weighted_digit_sum(x) for p = 2.
    cplx half_character(Label x) const {
        return half_characters_[x];
    }
    cplx char_phase(Label x, bool half) const {
        return half ? half_character(x) : character(x);
    }

    /// Modulus coefficients (constant term first); empty for fields not
    /// built from a prime-field polynomial.
    const std::vector<int> &modulus() const {
        return modulus_;
    }
    const std::vector<int> &functional_weights() const {
        return weights_;
    }
    const std::string &description() const {
        return description_;
    }
    const std::vector<Label> &add_table() const {
        return add_;
    }
    const std::vector<Label> &mul_table() const {
        return mul_;
    }

    /// Largest violation count of the field axioms (0 means valid). Checks
    /// associativity, commutativity, distributivity, identities, inverses
    /// exhaustively.
    std::size_t count_axiom_violations() const;

   private:
    FieldTables() = default;
    void finish();

    PrimePower pp_;
    std::vector<Label> add_;
    std::vector<Label> mul_;
    std::vector<Label> neg_;
    std::vector<Label> inv_;
    std::vector<int> modulus_;
    std::vector<int> weights_;
    std::vector<cplx> characters_;
    std::vector<cplx> half_characters_;
    std::string description_;
};

/// True if the polynomial (coefficients constant-first, leading nonzero)
/// has no factor of positive degree smaller than its own over F_p.
bool is_irreducible_poly(std::span<const int> coeffs, int p);

}  // namespace galwig

#endif
