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

#include "galwig/factor/factor.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "galwig/error.h"
#include "galwig/gf/quadratic.h"

namespace galwig {

namespace {

const CMatrix &pauli_x() {
    static const CMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}
const CMatrix &pauli_y() {
    static const CMatrix m{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}};
    return m;
}
const CMatrix &pauli_z() {
    static const CMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

std::string pair_name(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

int SignAssignment::rank() const {
    int r = 0;
    for (const auto &t : qubits) {
        for (int s : t) {
            r = 2 * r + (s < 0 ? 1 : 0);
        }
    }
    return r;
}

SignAssignment SignAssignment::from_rank(int rank, int num_qubits) {
    SignAssignment out;
    out.qubits.resize(num_qubits);
    for (int q = num_qubits; q-- > 0;) {
        for (int k = 3; k-- > 0;) {
            out.qubits[q][k] = (rank & 1) ? -1 : 1;
            rank >>= 1;
        }
    }
    return out;
}

std::string SignAssignment::to_string() const {
    std::string s;
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        if (q > 0) {
            s += "x";
        }
        s += "(";
        for (int k = 0; k < 3; ++k) {
            s += qubits[q][k] < 0 ? "-" : "+";
            if (k < 2) {
                s += ",";
            }
        }
        s += ")";
    }
    return s;
}

double FactorReport::worst_residual() const {
    double worst = 0.0;
    for (const auto &[name, r] : residuals) {
        worst = std::max(worst, r);
    }
    return worst;
}

std::vector<CMatrix> qubit_wigner_operators(const SignTriple &signs) {
    std::vector<CMatrix> ops;
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            double sk = k ? -1.0 : 1.0;
            double sl = l ? -1.0 : 1.0;
            CMatrix w = CMatrix::identity(2);
            w.add_scaled(sk * signs[2], pauli_z());
            w.add_scaled(sl * signs[0], pauli_x());
            w.add_scaled(sk * sl * signs[1], pauli_y());
            w *= 0.5;
            ops.push_back(std::move(w));
        }
    }
    return ops;
}

WignerFamily product_family(const SignAssignment &signs) {
    int n = static_cast<int>(signs.qubits.size());
    if (n < 1 || n > 4) {
        throw Error(ErrorCode::kInvalidArgument, "product families support 1 to 4 qubits");
    }
    std::vector<std::vector<CMatrix>> local;
    for (const auto &t : signs.qubits) {
        local.push_back(qubit_wigner_operators(t));
    }
    int d = 1 << n;
    std::vector<CMatrix> ops;
    ops.reserve(d * d);
    for (int i1 = 0; i1 < d; ++i1) {
        for (int i2 = 0; i2 < d; ++i2) {
            CMatrix acc = CMatrix::identity(1);
            for (int q = 0; q < n; ++q) {
                int bit = n - 1 - q;
                int k = (i1 >> bit) & 1;
                int l = (i2 >> bit) & 1;
                acc = kron(acc, local[q][k * 2 + l]);
            }
            ops.push_back(std::move(acc));
        }
    }
    return WignerFamily::from_operators(FieldTables::build(2, n), std::move(ops));
}

bool sign_parity_witness(const SignAssignment &signs) {
    for (std::size_t a = 0; a < signs.qubits.size(); ++a) {
        for (std::size_t b = a + 1; b < signs.qubits.size(); ++b) {
            int agree = 0;
            for (int k = 0; k < 3; ++k) {
                agree += signs.qubits[a][k] == signs.qubits[b][k] ? 1 : 0;
            }
            if (agree % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

FactorReport evaluate_product(const SignAssignment &signs) {
    WignerFamily fam = product_family(signs);
    auto acc = verify_acceptability(fam);
    FactorReport r;
    r.id = signs.rank();
    r.label = signs.to_string();
    r.residuals = {
        {"hermiticity", acc.hermiticity},
        {"a", acc.trace},
        {"b", acc.orthonormality},
        {"c_projector", acc.projector},
        {"c_parallel", acc.parallel},
    };
    r.acceptable = r.worst_residual() < kFactorTol;
    r.witness = sign_parity_witness(signs);
    int n = static_cast<int>(signs.qubits.size());
    int d = 1 << n;
    for (int k = 0; k < d; ++k) {
        std::string local;
        for (int q = 0; q < n; ++q) {
            local += std::to_string((k >> (n - 1 - q)) & 1);
        }
        r.index_map.emplace_back(std::to_string(k), local);
    }
    return r;
}

namespace {

std::vector<FactorReport> scan_products(int num_qubits) {
    std::vector<FactorReport> out;
    int total = 1 << (3 * num_qubits);
    for (int rank = 0; rank < total; ++rank) {
        out.push_back(evaluate_product(SignAssignment::from_rank(rank, num_qubits)));
    }
    return out;
}

}  // namespace

std::vector<FactorReport> scan_two_qubit_products() {
    return scan_products(2);
}

std::vector<FactorReport> scan_three_qubit_products() {
    return scan_products(3);
}

FactorReport factor_odd_bipartite(int p, int m) {
    if (!is_prime(p) || p == 2) {
        throw Error(ErrorCode::kInvalidArgument, "odd bipartite factorisation needs an odd prime");
    }
    FieldTables base = FieldTables::build(p, m);
    QuadExtension ext = QuadExtension::build(base);
    WignerFamily big = build_canonical_wigner_family(ext.ext());
    WignerFamily small = build_canonical_wigner_family(base);
    int d = base.d();
    Label r = ext.R();

    FactorReport rep;
    rep.id = 0;
    rep.label = "GF(" + std::to_string(ext.ext().d()) + ") over GF(" + std::to_string(d) + "), " +
                ext.ext().description();
    double worst = 0.0;
    std::string worst_tuple = "none";
    for (Label a1 = 0; a1 < d; ++a1) {
        for (Label b1 = 0; b1 < d; ++b1) {
            for (Label a2 = 0; a2 < d; ++a2) {
                for (Label b2 = 0; b2 < d; ++b2) {
                    Label i1 = ext.pair_to_elt(a1, b1);
                    Label i2 = ext.pair_to_elt(a2, b2);
                    CMatrix prod = kron(small.op(b1, base.mul(r, b2)), small.op(a1, a2));
                    double res = frob_dist(big.op(i1, i2), prod);
                    if (res > worst) {
                        worst = res;
                        worst_tuple = pair_name(i1, i2);
                    }
                }
            }
        }
    }
    for (Label x = 0; x < ext.ext().d(); ++x) {
        auto [a, b] = ext.elt_to_pair(x);
        rep.index_map.emplace_back(std::to_string(x), pair_name(a, b));
    }
    rep.residuals["factorisation"] = worst;
    rep.acceptable = worst < kFactorTol;
    rep.witness = rep.acceptable;
    if (!rep.acceptable) {
        throw Error(ErrorCode::kResidualExceeded, "factorisation fails at " + worst_tuple, worst);
    }
    return rep;
}

CMatrix modular_displacement(int d, int m, int n) {
    if (d < 1) {
        throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
    }
    m = ((m % d) + d) % d;
    n = ((n % d) + d) % d;
    CMatrix v(d, d);
    for (int k = 0; k < d; ++k) {
        int row = (k + m) % d;
        v(row, k) = unit_root(static_cast<long long>(row) * n, d);
    }
    return v;
}

FactorReport crt_factor_check(int d1, int d2) {
    if (d1 < 1 || d2 < 1 || std::gcd(d1, d2) != 1 || d1 % 2 == 0 || d2 % 2 == 0) {
        throw Error(ErrorCode::kInvalidArgument, "CRT factorisation needs coprime odd factors");
    }
    int d = d1 * d2;
    if (d > 63) {
        throw Error(ErrorCode::kInvalidArgument, "CRT check is limited to d <= 63");
    }
    // Idempotents: e_a = 1 mod d1, 0 mod d2; e_b = 0 mod d1, 1 mod d2.
    int ea = 0;
    int eb = 0;
    for (int x = 0; x < d; ++x) {
        if (x % d1 == 1 % d1 && x % d2 == 0) {
            ea = x;
        }
        if (x % d1 == 0 && x % d2 == 1 % d2) {
            eb = x;
        }
    }
    auto embed_m = [&](int ma, int mb) { return (d2 * ma + d1 * mb) % d; };
    auto embed_n = [&](int na, int nb) { return (ea * na + eb * nb) % d; };

    // Basis relabelling: tensor index ka*d2 + kb -> k = d2 ka + d1 kb mod d.
    CMatrix perm(d, d);
    for (int ka = 0; ka < d1; ++ka) {
        for (int kb = 0; kb < d2; ++kb) {
            perm(embed_m(ka, kb), ka * d2 + kb) = 1.0;
        }
    }
    CMatrix perm_dag = dagger(perm);

    double phase_identity = 0.0;
    for (int ma = 0; ma < d1; ++ma) {
        for (int mb = 0; mb < d2; ++mb) {
            for (int na = 0; na < d1; ++na) {
                for (int nb = 0; nb < d2; ++nb) {
                    cplx lhs = unit_root(static_cast<long long>(embed_m(ma, mb)) * embed_n(na, nb), d);
                    cplx rhs = unit_root(ma * na, d1) * unit_root(mb * nb, d2);
                    phase_identity = std::max(phase_identity, std::abs(lhs - rhs));
                }
            }
        }
    }

    FactorReport rep;
    rep.label = "Z_" + std::to_string(d) + " = Z_" + std::to_string(d1) + " x Z_" + std::to_string(d2);
    double factor_res = 0.0;
    double unit_res = 0.0;
    std::string worst = "none";
    for (int ma = 0; ma < d1; ++ma) {
        for (int mb = 0; mb < d2; ++mb) {
            for (int na = 0; na < d1; ++na) {
                for (int nb = 0; nb < d2; ++nb) {
                    CMatrix v = modular_displacement(d, embed_m(ma, mb), embed_n(na, nb));
                    CMatrix local = perm * kron(modular_displacement(d1, ma, na), modular_displacement(d2, mb, nb)) * perm_dag;
                    cplx phase = hs_inner(local, v) / static_cast<double>(d);
                    unit_res = std::max(unit_res, std::abs(std::abs(phase) - 1.0));
                    double res = max_abs_diff(phase * local, v);
                    if (res > factor_res) {
                        factor_res = res;
                        worst = "m=" + pair_name(ma, mb) + " n=" + pair_name(na, nb);
                    }
                }
            }
        }
    }
    for (int ma = 0; ma < d1; ++ma) {
        for (int mb = 0; mb < d2; ++mb) {
            rep.index_map.emplace_back(std::to_string(embed_m(ma, mb)), pair_name(ma, mb));
        }
    }
    rep.residuals["factorisation"] = factor_res;
    rep.residuals["unit_phase"] = unit_res;
    rep.residuals["phase_identity"] = phase_identity;
    rep.acceptable = rep.worst_residual() < kEqualityTol;
    rep.witness = rep.acceptable;
    if (!rep.acceptable) {
        throw Error(ErrorCode::kResidualExceeded, "CRT factorisation fails at " + worst, rep.worst_residual());
    }
    return rep;
}

std::string factor_reports_csv(const std::vector<FactorReport> &reports) {
    std::ostringstream out;
    out.precision(6);
    out << "id,label,acceptable,worst_residual\n";
    for (const auto &r : reports) {
        out << r.id << ",\"" << r.label << "\"," << (r.acceptable ? "true" : "false") << "," << std::scientific
            << r.worst_residual() << std::defaultfloat << "\n";
    }
    return out.str();
}

}  // namespace galwig
