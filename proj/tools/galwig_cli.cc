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

// Command-line front end: every subcommand prints one JSON document that
// embeds the tool version and the parsed configuration.
//
// Exit codes: 0 success, 1 usage or input error, 2 failed verification.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "galwig/error.h"
#include "galwig/factor/factor.h"
#include "galwig/io/json.h"
#include "galwig/mat/spectral.h"
#include "galwig/tomo/ledger.h"
#include "galwig/tomo/mean_king.h"
#include "galwig/tomo/sampling.h"
#include "galwig/tomo/sic.h"
#include "galwig/wigner/wigner.h"

namespace {

using galwig::Error;
using galwig::ErrorCode;
using galwig::Json;

constexpr const char *kVersion = "1.0.0";

struct Options {
    double tol = 1e-8;
    std::string format = "json";
    std::string out;
    int p = 0;
    int m = 1;
    int d = 0;
    std::string modulus;
    int i = -1;
    int j = -1;
    std::string state;
    std::int64_t shots = 0;
    std::optional<std::uint64_t> seed;
    int d1 = 0;
    int d2 = 0;
    std::string scheme;
    int prep = 0;
    std::string detector;
};

double default_tolerance() {
    if (const char *env = std::getenv("GALWIG_TOLERANCE")) {
        try {
            return std::stod(env);
        } catch (const std::exception &) {
            throw Error(ErrorCode::kInvalidArgument, std::string("GALWIG_TOLERANCE is not a number: ") + env);
        }
    }
    return 1e-8;
}

galwig::FieldTables field_for_order(int d) {
    auto pp = galwig::PrimePower::from_order(d);
    if (!pp) {
        throw Error(ErrorCode::kWrongDimension, "d = " + std::to_string(d) + " is not a prime power");
    }
    return galwig::FieldTables::build(pp->p, pp->m);
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception &) {
            throw Error(ErrorCode::kInvalidArgument, "expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

void require_verified(double residual, double tol, const std::string &what) {
    if (!(residual < tol)) {
        throw Error(ErrorCode::kResidualExceeded, what + " residual exceeds tolerance", residual);
    }
}

std::string scalar_text(const Json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

/// Lossy CSV view: factor report arrays become one row per report, other
/// results one key,value row per scalar field.
std::string to_csv(const Json &doc) {
    std::ostringstream out;
    if (doc.contains("reports")) {
        out << "id,label,acceptable,worst_residual\n";
        for (const auto &r : doc["reports"]) {
            double worst = 0.0;
            for (const auto &[k, v] : r["residuals"].items()) {
                worst = std::max(worst, v.get<double>());
            }
            out << r["id"].dump() << ",\"" << r["label"].get<std::string>() << "\"," << r["acceptable"].dump() << ","
                << Json(worst).dump() << "\n";
        }
        return out.str();
    }
    out << "key,value\n";
    for (const auto &[k, v] : doc.items()) {
        if (v.is_primitive()) {
            out << k << "," << scalar_text(v) << "\n";
        }
    }
    return out.str();
}

Json run_factor(const std::string &mode, const Options &o) {
    Json out;
    if (mode == "scan2q" || mode == "scan3q") {
        auto reports = mode == "scan2q" ? galwig::scan_two_qubit_products() : galwig::scan_three_qubit_products();
        int acceptable = 0;
        int witness_agree = 0;
        Json arr = Json::array();
        for (const auto &r : reports) {
            acceptable += r.acceptable ? 1 : 0;
            witness_agree += r.acceptable == r.witness ? 1 : 0;
            arr.push_back(galwig::to_json(r));
        }
        out["summary"] = Json{
            {"acceptable", acceptable},
            {"total", static_cast<int>(reports.size())},
            {"witness_agreement", witness_agree},
        };
        out["reports"] = std::move(arr);
        if (witness_agree != static_cast<int>(reports.size())) {
            throw Error(ErrorCode::kResidualExceeded, "parity witness disagrees with the matrix verdicts");
        }
    } else if (mode == "odd") {
        auto rep = galwig::factor_odd_bipartite(o.p, o.m);
        require_verified(rep.worst_residual(), o.tol, "factorisation");
        out["report"] = galwig::to_json(rep);
    } else {
        auto rep = galwig::crt_factor_check(o.d1, o.d2);
        require_verified(rep.worst_residual(), o.tol, "CRT factorisation");
        out["report"] = galwig::to_json(rep);
    }
    return out;
}

Json run_tomo(const std::string &mode, const Options &o) {
    galwig::MeasurementScheme scheme;
    if (mode == "sic") {
        scheme = galwig::sic_qubit_scheme();
    } else if (mode == "product-sic") {
        scheme = galwig::product_sic_scheme();
    } else {
        scheme = galwig::mub_pvm_scheme(o.d);
    }
    galwig::CMatrix rho = galwig::parse_state(o.state, scheme.d);
    if (static_cast<int>(rho.rows()) != scheme.d) {
        throw Error(ErrorCode::kWrongDimension, "state dimension differs from the scheme dimension " + std::to_string(scheme.d));
    }
    Json out{{"scheme", scheme.id}, {"d", scheme.d}, {"state", galwig::to_json(rho)}};
    if (o.shots <= 0) {
        auto probs = galwig::scheme_probabilities(scheme, rho);
        auto est = galwig::invert_frequencies(scheme, probs);
        out["probabilities"] = probs;
        out["estimate"] = galwig::to_json(est);
        out["trace_distance"] = galwig::trace_distance(rho, est);
        require_verified(galwig::frob_dist(rho, est), o.tol, "exact inversion");
        return out;
    }
    if (!o.seed) {
        throw Error(ErrorCode::kInvalidArgument, "--seed is required when sampling (--shots > 0)");
    }
    auto run = galwig::sample_and_estimate(rho, scheme, o.shots, *o.seed);
    Json counts = Json::array();
    for (const auto &h : run.histograms) {
        counts.push_back(h.counts);
    }
    out["counts"] = std::move(counts);
    out["seed"] = *o.seed;
    out["generator"] = galwig::kGeneratorName;
    out["estimate"] = galwig::to_json(run.raw_estimate);
    out["projected_estimate"] = galwig::to_json(run.projected_estimate);
    out["fidelity"] = run.fidelity;
    out["trace_distance"] = run.trace_distance;
    return out;
}

Json run_mean_king(const Options &o) {
    auto fam = galwig::build_canonical_wigner_family(field_for_order(o.d));
    auto pt = parse_int_list(o.detector);
    if (pt.size() != 2) {
        throw Error(ErrorCode::kInvalidArgument, "--detector expects k,l");
    }
    galwig::PhasePoint det{pt[0], pt[1]};
    galwig::Label inferred = galwig::mean_king_infer(fam, o.prep, det);
    galwig::Label oracle = galwig::mean_king_oracle(fam, galwig::mubs_from_wigner(fam), o.prep, det);
    if (inferred != oracle) {
        throw Error(ErrorCode::kResidualExceeded, "inference disagrees with the Wigner-support oracle");
    }
    return Json{
        {"d", o.d},
        {"prep_direction", o.prep},
        {"detector", Json::array({det.i1, det.i2})},
        {"state_index", inferred},
    };
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"galwig: finite-field Wigner functions, mutually unbiased bases and tomography"};
    app.require_subcommand(1);
    // Global options may also follow the subcommand.
    app.fallthrough();
    Options o;
    try {
        o.tol = default_tolerance();
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    app.add_option("--tol", o.tol, "Verification tolerance (default 1e-8, or $GALWIG_TOLERANCE)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", o.out, "Write output to a file instead of stdout");

    std::function<Json()> action;
    Json config;

    auto *field = app.add_subcommand("field", "Addition/multiplication tables of GF(p^m)");
    field->add_option("--p", o.p, "Characteristic")->required();
    field->add_option("--m", o.m, "Extension degree");
    field->add_option("--modulus", o.modulus, "Modulus coefficients c0,c1,...,cm (low degree first)");
    field->callback([&] {
        action = [&] {
            std::optional<std::vector<int>> mod;
            if (!o.modulus.empty()) {
                mod = parse_int_list(o.modulus);
            }
            auto f = galwig::FieldTables::build(o.p, o.m, mod);
            return Json{{"field", galwig::to_json(f)}};
        };
        config = Json{{"subcommand", "field"}, {"p", o.p}, {"m", o.m}, {"modulus", o.modulus}};
    });

    auto *weyl = app.add_subcommand("weyl", "Displacement operators V^j_i and their composition law");
    weyl->add_option("--d", o.d, "Dimension (prime power)")->required();
    weyl->add_option("--i", o.i, "Shift index (omit for all)");
    weyl->add_option("--j", o.j, "Phase index (omit for all)");
    weyl->callback([&] {
        action = [&] {
            auto f = field_for_order(o.d);
            Json ops = Json::array();
            for (galwig::Label i = 0; i < o.d; ++i) {
                for (galwig::Label j = 0; j < o.d; ++j) {
                    if ((o.i >= 0 && i != o.i) || (o.j >= 0 && j != o.j)) {
                        continue;
                    }
                    ops.push_back(Json{{"i", i}, {"j", j}, {"matrix", galwig::to_json(galwig::displacement(f, {i, j}))}});
                }
            }
            double worst = 0.0;
            auto all = galwig::all_displacements(f);
            for (int a = 0; a < o.d * o.d; ++a) {
                for (int b = 0; b < o.d * o.d; ++b) {
                    auto prod = galwig::displacement_product_phase(f, {a / o.d, a % o.d}, {b / o.d, b % o.d});
                    const auto &target = all[prod.index.i * o.d + prod.index.j];
                    worst = std::max(worst, galwig::max_abs_diff(all[a] * all[b], prod.phase * target));
                }
            }
            require_verified(worst, o.tol, "composition law");
            return Json{{"d", o.d}, {"operators", std::move(ops)}, {"composition_residual", worst}};
        };
        config = Json{{"subcommand", "weyl"}, {"d", o.d}, {"i", o.i}, {"j", o.j}};
    });

    auto *wigner = app.add_subcommand("wigner", "Phase-point operators under the canonical convention");
    wigner->require_subcommand(1);
    auto *wbuild = wigner->add_subcommand("build", "Emit the operators and their verification");
    wbuild->add_option("--d", o.d, "Dimension (prime power)")->required();
    wbuild->add_option("--state", o.state, "Also emit the Wigner and Weyl distributions of this state");
    auto *wverify = wigner->add_subcommand("verify", "Acceptability residuals only");
    wverify->add_option("--d", o.d, "Dimension (prime power)")->required();
    auto wigner_action = [&](bool full) {
        action = [&, full] {
            auto f = field_for_order(o.d);
            auto fam = galwig::WignerFamily::assemble(f, galwig::canonical_conventions(f));
            auto report = galwig::verify_acceptability(fam);
            double cov = galwig::covariance_residual(fam);
            Json out = full ? galwig::wigner_family_json(fam, report) : galwig::to_json(report);
            out["covariance"] = cov;
            if (full && !o.state.empty()) {
                auto rho = galwig::parse_state(o.state, o.d);
                out["wigner_distribution"] = galwig::to_json(galwig::wigner_distribution(rho, fam));
                out["weyl_distribution"] = galwig::to_json(galwig::weyl_distribution(rho, f));
            }
            require_verified(std::max(report.worst(), cov), o.tol, "acceptability");
            return out;
        };
        config = Json{{"subcommand", full ? "wigner build" : "wigner verify"}, {"d", o.d}, {"state", o.state}};
    };
    wbuild->callback([&] { wigner_action(true); });
    wverify->callback([&] { wigner_action(false); });

    auto *mub = app.add_subcommand("mub", "Mutually unbiased bases from line averages");
    mub->add_option("--d", o.d, "Dimension (prime power)")->required();
    mub->callback([&] {
        action = [&] {
            auto fam = galwig::build_canonical_wigner_family(field_for_order(o.d));
            auto mubs = galwig::mubs_from_wigner(fam, o.tol);
            return Json{{"d", o.d}, {"mubs", galwig::to_json(mubs)}};
        };
        config = Json{{"subcommand", "mub"}, {"d", o.d}};
    });

    auto *factor = app.add_subcommand("factor", "Factorisation analyses");
    factor->require_subcommand(1);
    auto *scan2q = factor->add_subcommand("scan2q", "All 64 two-qubit sign products");
    auto *scan3q = factor->add_subcommand("scan3q", "All 512 three-qubit sign products");
    auto *odd = factor->add_subcommand("odd", "GF(p^2m) = GF(p^m) x GF(p^m) factorisation, p odd");
    odd->add_option("--p", o.p, "Odd prime")->required();
    odd->add_option("--m", o.m, "Base extension degree");
    auto *crt = factor->add_subcommand("crt", "Modulo-(d1 d2) factorisation for coprime odd d1, d2");
    crt->add_option("--d1", o.d1, "First factor")->required();
    crt->add_option("--d2", o.d2, "Second factor")->required();
    for (auto *sub : {scan2q, scan3q, odd, crt}) {
        std::string mode = sub->get_name();
        sub->callback([&, mode] {
            action = [&, mode] { return run_factor(mode, o); };
            config = Json{{"subcommand", "factor " + mode}, {"p", o.p}, {"m", o.m}, {"d1", o.d1}, {"d2", o.d2}};
        });
    }

    auto *tomo = app.add_subcommand("tomo", "Tomography by linear inversion, exact or sampled");
    tomo->require_subcommand(1);
    for (const char *name : {"sic", "mub", "product-sic"}) {
        auto *sub = tomo->add_subcommand(name, std::string("Tomography with the ") + name + " scheme");
        sub->add_option("--state", o.state, "Preset, JSON matrix of [re,im], or bloch:x,y,z")->required();
        sub->add_option("--shots", o.shots, "Shots per measurement setting (0 = exact probabilities)");
        sub->add_option("--seed", o.seed, "64-bit seed (required when sampling)");
        if (std::string(name) == "mub") {
            sub->add_option("--d", o.d, "Dimension (prime power)")->required();
        }
        std::string mode = name;
        sub->callback([&, mode] {
            action = [&, mode] { return run_tomo(mode, o); };
            config = Json{{"subcommand", "tomo " + mode}, {"state", o.state}, {"shots", o.shots}, {"d", o.d}};
            config["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
        });
    }

    auto *ledger = app.add_subcommand("ledger", "Counting-rate redundancy of a scheme");
    ledger->add_option("--scheme", o.scheme, "mub-pvm, sic-povm or local-mub-two-qubit")->required();
    ledger->add_option("--d", o.d, "Dimension")->required();
    ledger->callback([&] {
        action = [&] { return Json{{"ledger", galwig::to_json(galwig::redundancy_ledger(o.scheme, o.d))}}; };
        config = Json{{"subcommand", "ledger"}, {"scheme", o.scheme}, {"d", o.d}};
    });

    auto *king = app.add_subcommand("mean-king", "Infer the prepared basis state from a detector click");
    king->add_option("--d", o.d, "Dimension (prime power)")->required();
    king->add_option("--prep", o.prep, "Preparation direction 0..d")->required();
    king->add_option("--detector", o.detector, "Detector point k,l")->required();
    king->callback([&] {
        action = [&] { return run_mean_king(o); };
        config = Json{{"subcommand", "mean-king"}, {"d", o.d}, {"prep", o.prep}, {"detector", o.detector}};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Json doc{{"tool", "galwig"}, {"version", kVersion}};
    try {
        config["tol"] = o.tol;
        config["format"] = o.format;
        doc["config"] = config;
        Json result = action();
        for (auto &[k, v] : result.items()) {
            doc[k] = v;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what();
        if (e.residual() != 0.0) {
            std::cerr << " (residual " << e.residual() << ")";
        }
        std::cerr << "\n";
        return e.is_verification_failure() ? 2 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text = o.format == "csv" ? to_csv(doc) : doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot open " << o.out << "\n";
            return 1;
        }
        f << text;
    }
    return 0;
}
