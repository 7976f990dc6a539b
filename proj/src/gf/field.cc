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

#include "galwig/gf/field.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "galwig/error.h"

namespace galwig {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int ipow(int base, int exp) {
    int r = 1;
    for (int k = 0; k < exp; ++k) {
        r *= base;
    }
    return r;
}

int inverse_mod_p(int a, int p) {
    for (int z = 1; z < p; ++z) {
        if ((a * z) % p == 1) {
            return z;
        }
    }
    throw Error(ErrorCode::kDivisionByZero, "no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

// Remainder of a modulo b over F_p; b must have a nonzero leading coefficient.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    int lead_inv = inverse_mod_p(b.back(), p);
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        int c = a[k] * lead_inv % p;
        if (c == 0) {
            continue;
        }
        for (int t = 0; t <= db; ++t) {
            a[k - db + t] = mod_p(a[k - db + t] - c * b[t], p);
        }
    }
    a.resize(std::max(db, 0));
    return a;
}

std::vector<int> poly_mulmod(std::span<const int> a, std::span<const int> b, std::span<const int> modulus, int p) {
    std::vector<int> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_rem(std::move(prod), modulus, p);
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

cplx unit_root(long long k, long long n) {
    long long r = ((k % n) + n) % n;
    if ((4 * r) % n == 0) {
        switch (4 * r / n) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

PrimePower PrimePower::make(int p, int m) {
    if (!is_prime(p)) {
        throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw Error(ErrorCode::kInvalidArgument, "extension degree must be positive");
    }
    long long d = 1;
    for (int k = 0; k < m; ++k) {
        d *= p;
        if (d > kMaxFieldOrder) {
            throw Error(
                ErrorCode::kInvalidArgument,
                "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds " +
                    std::to_string(kMaxFieldOrder));
        }
    }
    return PrimePower{p, m, static_cast<int>(d)};
}

std::optional<PrimePower> PrimePower::from_order(int d) {
    if (d < 2 || d > kMaxFieldOrder) {
        return std::nullopt;
    }
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) {
            continue;
        }
        if (!is_prime(p)) {
            return std::nullopt;
        }
        int m = 0;
        int rest = d;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest != 1) {
            return std::nullopt;
        }
        return PrimePower{p, m, d};
    }
    return std::nullopt;
}

bool is_irreducible_poly(std::span<const int> coeffs, int p) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1 || coeffs.back() % p == 0) {
        return false;
    }
    std::vector<int> a(coeffs.begin(), coeffs.end());
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int fd = 1; 2 * fd <= deg; ++fd) {
        int count = ipow(p, fd);
        for (int lab = 0; lab < count; ++lab) {
            std::vector<int> f(fd + 1);
            int t = lab;
            for (int k = 0; k < fd; ++k) {
                f[k] = t % p;
                t /= p;
            }
            f[fd] = 1;
            auto r = poly_rem(a, f, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) {
                return false;
            }
        }
    }
    return true;
}

FieldTables FieldTables::build(int p, int m, const std::optional<std::vector<int>> &modulus) {
    PrimePower pp = PrimePower::make(p, m);
    std::vector<int> mod;
    if (modulus.has_value()) {
        if (static_cast<int>(modulus->size()) != m + 1) {
            throw Error(ErrorCode::kInvalidArgument, "modulus must have m+1 coefficients");
        }
        for (int c : *modulus) {
            if (c < 0 || c >= p) {
                throw Error(ErrorCode::kInvalidArgument, "modulus coefficients must lie in [0, p)");
            }
        }
        if (modulus->back() == 0) {
            throw Error(ErrorCode::kInvalidArgument, "modulus must have degree m");
        }
        // Normalise to monic; the quotient ring is unchanged.
        int lead_inv = inverse_mod_p(modulus->back(), p);
        for (int c : *modulus) {
            mod.push_back(c * lead_inv % p);
        }
        if (!is_irreducible_poly(mod, p)) {
            throw Error(ErrorCode::kReducibleModulus, "supplied modulus factors over F_" + std::to_string(p));
        }
    } else if (m == 1) {
        mod = {0, 1};
    } else {
        int count = ipow(p, m);
        for (int lab = 0; lab < count && mod.empty(); ++lab) {
            std::vector<int> cand(m + 1);
            int t = lab;
            for (int k = 0; k < m; ++k) {
                cand[k] = t % p;
                t /= p;
            }
            cand[m] = 1;
            if (is_irreducible_poly(cand, p)) {
                mod = std::move(cand);
            }
        }
    }

    FieldTables f;
    f.pp_ = pp;
    f.modulus_ = mod;
    f.weights_.assign(m, 1);
    f.description_ = modulus.has_value() ? "polynomial basis, supplied modulus"
                                         : "polynomial basis, smallest monic irreducible modulus";
    int d = pp.d;
    f.add_.resize(d * d);
    f.mul_.resize(d * d);
    std::vector<std::vector<int>> dig(d);
    for (Label x = 0; x < d; ++x) {
        dig[x] = f.digits(x);
    }
    for (Label x = 0; x < d; ++x) {
        for (Label y = 0; y < d; ++y) {
            std::vector<int> s(m);
            for (int n = 0; n < m; ++n) {
                s[n] = (dig[x][n] + dig[y][n]) % p;
            }
            f.add_[x * d + y] = f.from_digits(s);
            f.mul_[x * d + y] = f.from_digits(poly_mulmod(dig[x], dig[y], mod, p));
        }
    }
    f.finish();
    return f;
}

FieldTables FieldTables::from_tables(
    PrimePower pp, std::vector<Label> add, std::vector<Label> mul, std::vector<int> weights, std::string description) {
    int d = pp.d;
    if (static_cast<int>(add.size()) != d * d || static_cast<int>(mul.size()) != d * d ||
        static_cast<int>(weights.size()) != pp.m) {
        throw Error(ErrorCode::kShapeMismatch, "table sizes do not match the field order");
    }
    FieldTables f;
    f.pp_ = pp;
    f.add_ = std::move(add);
    f.mul_ = std::move(mul);
    f.weights_ = std::move(weights);
    f.description_ = std::move(description);
    for (Label v : f.add_) {
        if (v < 0 || v >= d) {
            throw Error(ErrorCode::kInvalidArgument, "addition table entry out of range");
        }
    }
    for (Label v : f.mul_) {
        if (v < 0 || v >= d) {
            throw Error(ErrorCode::kInvalidArgument, "multiplication table entry out of range");
        }
    }
    if (std::all_of(f.weights_.begin(), f.weights_.end(), [&](int w) { return w % pp.p == 0; })) {
        throw Error(ErrorCode::kInvalidArgument, "character functional must be nontrivial");
    }
    for (Label x = 0; x < d; ++x) {
        for (Label y = 0; y < d; ++y) {
            auto dx = f.digits(x);
            auto dy = f.digits(y);
            for (int n = 0; n < pp.m; ++n) {
                dx[n] = (dx[n] + dy[n]) % pp.p;
            }
            if (f.add_[x * d + y] != f.from_digits(dx)) {
                throw Error(ErrorCode::kInvalidArgument, "addition is not componentwise mod p");
            }
        }
    }
    f.finish();
    if (std::size_t bad = f.count_axiom_violations(); bad != 0) {
        throw Error(ErrorCode::kInvalidArgument, "tables violate the field axioms (" + std::to_string(bad) + ")");
    }
    return f;
}

void FieldTables::finish() {
    int d = pp_.d;
    neg_.assign(d, -1);
    inv_.assign(d, -1);
    for (Label x = 0; x < d; ++x) {
        for (Label y = 0; y < d; ++y) {
            if (add(x, y) == 0) {
                neg_[x] = y;
            }
            if (x != 0 && mul(x, y) == 1) {
                inv_[x] = y;
            }
        }
    }
    for (Label x = 0; x < d; ++x) {
        if (neg_[x] < 0 || (x != 0 && inv_[x] < 0)) {
            throw Error(ErrorCode::kInvalidArgument, "tables lack inverses for element " + std::to_string(x));
        }
    }
    characters_.resize(d);
    half_characters_.resize(d);
    int p = pp_.p;
    for (Label x = 0; x < d; ++x) {
        characters_[x] = unit_root(functional(x), p);
        if (p == 2) {
            half_characters_[x] = unit_root(weighted_digit_sum(x), 4);
        } else {
            half_characters_[x] = unit_root(functional(mul(x, inv_[two()])), p);
        }
    }
}

Label FieldTables::inv(Label x) const {
    if (x == 0) {
        throw Error(ErrorCode::kDivisionByZero, "zero has no multiplicative inverse");
    }
    return inv_[x];
}

Label FieldTables::div(Label x, Label y) const {
    if (y == 0) {
        throw Error(ErrorCode::kDivisionByZero, "division by zero");
    }
    return mul(x, inv_[y]);
}

Label FieldTables::apply(ArithOp op, Label x, std::optional<Label> y) const {
    auto in_range = [&](Label v) { return v >= 0 && v < pp_.d; };
    if (!in_range(x) || (y.has_value() && !in_range(*y))) {
        throw Error(ErrorCode::kInvalidArgument, "field label out of range");
    }
    bool binary = op == ArithOp::kAdd || op == ArithOp::kSub || op == ArithOp::kMul || op == ArithOp::kDiv;
    if (binary && !y.has_value()) {
        throw Error(ErrorCode::kInvalidArgument, "binary field operation needs two operands");
    }
    switch (op) {
        case ArithOp::kAdd:
            return add(x, *y);
        case ArithOp::kSub:
            return sub(x, *y);
        case ArithOp::kMul:
            return mul(x, *y);
        case ArithOp::kNeg:
            return neg(x);
        case ArithOp::kInv:
            return inv(x);
        case ArithOp::kDiv:
            return div(x, *y);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown field operation");
}

Label FieldTables::basis_element(int n) const {
    if (n < 0 || n >= pp_.m) {
        throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
    return ipow(pp_.p, n);
}

std::vector<int> FieldTables::digits(Label x) const {
    std::vector<int> out(pp_.m);
    for (int n = 0; n < pp_.m; ++n) {
        out[n] = x % pp_.p;
        x /= pp_.p;
    }
    return out;
}

Label FieldTables::from_digits(std::span<const int> digits) const {
    Label x = 0;
    for (int n = static_cast<int>(digits.size()) - 1; n >= 0; --n) {
        x = x * pp_.p + digits[n];
    }
    return x;
}

int FieldTables::weighted_digit_sum(Label x) const {
    int s = 0;
    for (int n = 0; n < pp_.m; ++n) {
        s += weights_[n] * (x % pp_.p);
        x /= pp_.p;
    }
    return s;
}

int FieldTables::functional(Label x) const {
    return weighted_digit_sum(x) % pp_.p;
}

std::size_t FieldTables::count_axiom_violations() const {
    int d = pp_.d;
    std::size_t bad = 0;
    for (Label x = 0; x < d; ++x) {
        if (add(x, 0) != x || mul(x, 1) != x || mul(x, 0) != 0) {
            ++bad;
        }
        if (x != 0 && inv_[x] < 0) {
            ++bad;
        }
        for (Label y = 0; y < d; ++y) {
            if (add(x, y) != add(y, x) || mul(x, y) != mul(y, x)) {
                ++bad;
            }
            if (x != 0 && y != 0 && mul(x, y) == 0) {
                ++bad;
            }
            for (Label z = 0; z < d; ++z) {
                if (add(add(x, y), z) != add(x, add(y, z))) {
                    ++bad;
                }
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
                    ++bad;
                }
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
                    ++bad;
                }
            }
        }
    }
    return bad;
}

}  // namespace galwig
