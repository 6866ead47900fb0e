// Copyright 2026 The mumeb Authors
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

#include "mumeb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "mumeb/bounds.hpp"
#include "mumeb/construct.hpp"
#include "mumeb/mols.hpp"
#include "mumeb/serialize.hpp"
#include "mumeb/verify.hpp"

namespace mumeb::cli {
namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return os.str();
}

std::string join(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

// Writes text to path, or to out when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw SchemaError("cannot write " + path);
    f << text;
}

MolsSet mols_input(const RunConfig& cfg) {
    if (!cfg.mols_path.empty()) return import_mols(cfg.mols_path);
    if (!cfg.x) throw UsageError("need a MOLS file or --x");
    return {*cfg.x, mols_for_order(*cfg.x)};
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.d) throw UsageError("construct: --d is required");
    const std::uint64_t d = *cfg.d;
    const std::uint64_t k = cfg.k.value_or(1);
    const ProductRing ring = odd_ring(d);
    std::optional<MEBFamily> fam;
    if (cfg.variant == "gauss") {
        fam = k == 1 ? family_cd(ring) : family_ckd(ring, k);
    } else if (cfg.variant == "mols") {
        const std::uint64_t x = exact_sqrt(k);
        if (k < 4 || x * x != k) {
            throw PreconditionError("--variant mols needs k to be a perfect square >= 4; got k=" +
                                    std::to_string(k));
        }
        if (!cfg.mols_path.empty()) {
            fam = family_ckd_mols(ring, k, import_mols(cfg.mols_path), "imported:" + cfg.mols_path);
        } else {
            fam = family_ckd_mols(ring, k, MolsSet{x, mols_for_order(x)},
                                  is_prime_power(x) ? "prime-power" : "macneish");
        }
    } else {
        throw UsageError("construct: unknown variant \"" + cfg.variant + "\"");
    }
    if (cfg.with_identity) {
        if (k != 1) throw PreconditionError("--with-identity is only defined for k = 1");
        MEBFamily extended = *fam;
        append_identity(extended);
        const auto rep = certify_family(extended, {cfg.tolerance, 1e-9, 1e-8, true});
        if (rep.pass) {
            fam = std::move(extended);
            err << "identity extension: verified\n";
        } else {
            fam->metadata["experimental_identity"] = "rejected: " + rep.failures.front();
            err << "identity extension: rejected (" << rep.failures.front() << ")\n";
        }
    }
    fam->metadata["command_line"] = join(cfg.to_args());
    const std::string summary = "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                " bases=" + std::to_string(fam->generators.size()) +
                                " rule=" + fam->metadata.at("construction").get<std::string>() + "\n";
    emit(family_to_json(*fam).dump() + "\n", cfg.out_path, out);
    (cfg.out_path.empty() ? err : out) << summary;
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.family_path.empty()) throw UsageError("verify: family file is required");
    const MEBFamily fam = read_family(cfg.family_path);
    VerifyOptions opts;
    opts.overlap_tolerance = cfg.tolerance;
    opts.agreement_tolerance = cfg.tolerance;
    opts.pairs_only = cfg.pairs_only;
    VerificationReport rep;
    try {
        rep = certify_family(fam, opts);
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
    const auto j = report_to_json(rep);
    if (!cfg.report_path.empty()) emit(j.dump(2) + "\n", cfg.report_path, out);
    if (cfg.json) out << j.dump(2) << "\n";
    double worst = 0.0;
    for (const auto& p : rep.pairs) worst = std::max(worst, p.overlap_deviation);
    std::ostream& text = cfg.json ? err : out;
    text << (rep.pass ? "PASS " : "FAIL ") << rep.family_id << " dimension=" << rep.dimension
         << " pairs=" << rep.pairs.size() << " max_overlap_deviation=" << worst << "\n";
    for (const auto& f : rep.failures) text << "  " << f << "\n";
    return rep.pass ? kOk : kVerificationFailed;
}

std::string bound_line(const BoundBreakdown& b) {
    std::ostringstream os;
    os << "d=" << b.d << " k=" << b.k << " m_dd=" << b.m_dd;
    if (b.pp_bound) os << " pp=" << *b.pp_bound;
    if (b.mols_bound) os << " mols=" << *b.mols_bound << " (" << b.mols_provenance << ")";
    os << " k_side=" << b.k_side << " combined=" << b.combined << " rule=" << b.rule;
    if (b.capped_by_m_dd) os << " capped_by_m_dd";
    return os.str();
}

int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.d) throw UsageError("bound: --d is required");
    ImportedMolsCounts imported;
    if (!cfg.mols_path.empty()) {
        const auto set = import_mols(cfg.mols_path);
        imported[set.order] = set.squares.size();
    }
    std::uint64_t lo = cfg.k.value_or(1), hi = lo;
    if (!cfg.k_range.empty()) {
        if (cfg.k) throw UsageError("bound: give either --k or --k-range");
        const auto dots = cfg.k_range.find("..");
        try {
            if (dots == std::string::npos) throw std::invalid_argument("no ..");
            lo = std::stoull(cfg.k_range.substr(0, dots));
            hi = std::stoull(cfg.k_range.substr(dots + 2));
        } catch (const std::exception&) {
            throw UsageError("bound: --k-range must look like A..B");
        }
        if (lo < 1 || hi < lo) throw UsageError("bound: --k-range needs 1 <= A <= B");
    }
    auto rows = nlohmann::json::array();
    for (std::uint64_t k = lo; k <= hi; ++k) {
        const auto b = bound_dkd(*cfg.d, k, imported);
        if (cfg.json) {
            rows.push_back(to_json(b));
        } else {
            out << bound_line(b) << "\n";
        }
    }
    if (cfg.json) out << (cfg.k_range.empty() ? rows[0] : rows).dump(2) << "\n";
    return kOk;
}

int cmd_gauss(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.q) {
        if (!cfg.c) throw UsageError("gauss: --c is required with --q");
        const auto ord = static_cast<std::uint32_t>(cfg.order.value_or(2));
        const auto q = static_cast<std::uint32_t>(*cfg.q);
        const auto c = static_cast<std::uint32_t>(*cfg.c);
        const Complex g = gauss_sum_reference(q, c, ord);
        const auto pp = factorize(q).front();
        const FiniteField f(static_cast<std::uint32_t>(pp.p), pp.a);
        const Complex direct = power_character_sum(f, {c}, ord);
        const double diff = std::abs(g - direct);
        if (cfg.json) {
            out << nlohmann::json{{"q", q},
                                  {"c", c},
                                  {"order", ord},
                                  {"reference", complex_to_json(g)},
                                  {"direct", complex_to_json(direct)},
                                  {"difference", diff}}
                       .dump(2)
                << "\n";
        } else {
            out << "q=" << q << " c=" << c << " order=" << ord << " g=" << g.real() << "+"
                << g.imag() << "i direct_difference=" << diff << "\n";
        }
        return diff < 1e-9 ? kOk : kVerificationFailed;
    }
    if (!cfg.d) throw UsageError("gauss: --d or --q is required");
    const auto res = gauss_sum_check(odd_ring(*cfg.d));
    const bool pass = res.max_deviation < 1e-10;
    if (cfg.json) {
        out << nlohmann::json{{"d", *cfg.d},
                              {"units", res.units_checked},
                              {"max_deviation", res.max_deviation},
                              {"pass", pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "d=" << *cfg.d << " units=" << res.units_checked
            << " max_deviation=" << res.max_deviation << (pass ? " PASS" : " FAIL") << "\n";
    }
    return pass ? kOk : kVerificationFailed;
}

int cmd_mols(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.subcommand == "gen") {
        if (!cfg.x) throw UsageError("mols gen: --x is required");
        const auto squares = mols_for_order(*cfg.x);
        std::ostringstream os;
        write_mols(os, squares, *cfg.x);
        emit(os.str(), cfg.out_path, out);
        return kOk;
    }
    if (cfg.subcommand == "check") {
        if (cfg.mols_path.empty()) throw UsageError("mols check: file is required");
        const auto set = import_mols(cfg.mols_path);
        out << "ok: order=" << set.order << " squares=" << set.squares.size()
            << " pairwise orthogonal\n";
        return kOk;
    }
    const MolsSet set = mols_input(cfg);
    const Net net = net_from_mols(set.squares, set.order);
    const NetCheck nc = check_net(net);
    if (cfg.subcommand == "net") {
        if (cfg.json) {
            auto blocks = nlohmann::json::array();
            for (const auto& b : net.blocks) {
                auto vs = nlohmann::json::array();
                for (const auto& m : b) vs.push_back(m.support);
                blocks.push_back(vs);
            }
            out << nlohmann::json{{"n", net.n}, {"x", net.x}, {"valid", nc.ok}, {"blocks", blocks}}
                       .dump(2)
                << "\n";
        } else {
            out << "(" << net.n << "," << net.x << ")-net " << (nc.ok ? "valid" : "INVALID: " + nc.message)
                << "\n";
        }
        return nc.ok ? kOk : kVerificationFailed;
    }
    if (cfg.subcommand == "mubs") {
        const auto bases = mubs_from_net(net, GeneralizedHadamard::fourier(set.order));
        const double k = static_cast<double>(set.order * set.order);
        const double target = 1.0 / std::sqrt(k);
        double orth = 0.0, flat = 0.0;
        for (std::size_t a = 0; a < bases.size(); ++a) {
            orth = std::max(orth, is_unitary(bases[a], 1e-9).max_deviation);
            for (std::size_t b = a + 1; b < bases.size(); ++b) {
                const ComplexMatrix g = adjoint_product(bases[a], bases[b]);
                for (const auto& z : g.entries()) {
                    flat = std::max(flat, std::abs(std::abs(z) - target));
                }
            }
        }
        const bool pass = nc.ok && orth <= 1e-9 && flat <= cfg.tolerance;
        if (cfg.json) {
            out << nlohmann::json{{"k", set.order * set.order},
                                  {"bases", bases.size()},
                                  {"orthonormality_deviation", orth},
                                  {"overlap_deviation", flat},
                                  {"pass", pass}}
                       .dump(2)
                << "\n";
        } else {
            out << bases.size() << " bases of C^" << set.order * set.order
                << " orthonormality_deviation=" << orth << " overlap_deviation=" << flat
                << (pass ? " PASS" : " FAIL") << "\n";
        }
        return pass ? kOk : kVerificationFailed;
    }
    throw UsageError("mols: unknown subcommand \"" + cfg.subcommand + "\"");
}

}  // namespace

std::vector<std::string> RunConfig::to_args() const {
    std::vector<std::string> a{command};
    if (!subcommand.empty()) a.push_back(subcommand);
    auto num = [&](const char* flag, const std::optional<std::uint64_t>& v) {
        if (v) {
            a.push_back(flag);
            a.push_back(std::to_string(*v));
        }
    };
    auto str = [&](const char* flag, const std::string& v) {
        if (!v.empty()) {
            a.push_back(flag);
            a.push_back(v);
        }
    };
    num("--d", d);
    num("--k", k);
    num("--x", x);
    num("--q", q);
    num("--c", c);
    num("--order", order);
    str("--k-range", k_range);
    if (command == "construct") str("--variant", variant);
    if (command == "verify" || (command == "mols" && subcommand == "mubs") ||
        (command == "construct" && with_identity)) {
        a.push_back("--tolerance");
        a.push_back(format_double(tolerance));
    }
    if (pairs_only) a.push_back("--pairs-only");
    if (json) a.push_back("--json");
    if (with_identity) a.push_back("--with-identity");
    str("--out", out_path);
    str("--report", report_path);
    if (command == "verify") {
        if (!family_path.empty()) a.push_back(family_path);
    } else if (command == "mols" && subcommand != "gen") {
        if (!mols_path.empty()) a.push_back(mols_path);
    } else {
        str("--mols-file", mols_path);
    }
    return a;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Mutually unbiased maximally entangled bases: construction and verification", "mumeb"};
    app.require_subcommand(1);
    std::uint64_t d = 0, k = 0, x = 0, q = 0, c = 0, order = 0;

    auto add_d = [&](CLI::App* s) { return s->add_option("--d", d, "local dimension d"); };

    auto* construct = app.add_subcommand("construct", "build a MUMEB family");
    auto* cd = add_d(construct)->required();
    auto* ck = construct->add_option("--k", k, "multiplicity k (default 1)");
    construct->add_option("--variant", cfg.variant, "gauss | mols")->check(CLI::IsMember({"gauss", "mols"}));
    construct->add_option("--mols-file", cfg.mols_path, "MOLS file for --variant mols");
    construct->add_option("--out", cfg.out_path, "output family file (default stdout)");
    construct->add_flag("--with-identity", cfg.with_identity, "try extending the family by I (verified)");
    construct->add_option("--tolerance", cfg.tolerance, "tolerance for --with-identity check");

    auto* verify = app.add_subcommand("verify", "certify a family file");
    verify->add_option("family", cfg.family_path, "family JSON")->required();
    verify->add_option("--tolerance", cfg.tolerance, "overlap tolerance");
    verify->add_flag("--pairs-only", cfg.pairs_only, "skip per-basis checks");
    verify->add_option("--report", cfg.report_path, "write JSON report here");
    verify->add_flag("--json", cfg.json, "print the JSON report");

    auto* bound = app.add_subcommand("bound", "lower bounds on M(d, kd)");
    auto* bd = add_d(bound)->required();
    auto* bk = bound->add_option("--k", k, "k");
    bound->add_option("--k-range", cfg.k_range, "table mode A..B");
    bound->add_option("--mols-file", cfg.mols_path, "imported MOLS set");
    bound->add_flag("--json", cfg.json, "JSON output");

    auto* gauss = app.add_subcommand("gauss", "quadratic character sum check");
    auto* gd = add_d(gauss);
    auto* gq = gauss->add_option("--q", q, "reference mode: field size");
    auto* gc = gauss->add_option("--c", c, "reference mode: nonzero element index");
    auto* go = gauss->add_option("--order", order, "reference mode: character order (default 2)");
    gauss->add_flag("--json", cfg.json, "JSON output");

    auto* mols = app.add_subcommand("mols", "Latin square tooling");
    mols->require_subcommand(1);
    auto* gen = mols->add_subcommand("gen", "print a MOLS set of order x");
    auto* genx = gen->add_option("--x", x, "order")->required();
    gen->add_option("--out", cfg.out_path, "output file");
    auto* check = mols->add_subcommand("check", "validate a MOLS file");
    check->add_option("file", cfg.mols_path, "MOLS file")->required();
    std::vector<CLI::Option*> xs{genx};
    for (const char* name : {"net", "mubs"}) {
        auto* s = mols->add_subcommand(name, std::string(name) == "net" ? "build the net" : "build MUBs of C^{x^2}");
        s->add_option("file", cfg.mols_path, "MOLS file");
        xs.push_back(s->add_option("--x", x, "order (built-in squares)"));
        s->add_flag("--json", cfg.json, "JSON output");
        if (std::string(name) == "mubs") s->add_option("--tolerance", cfg.tolerance, "overlap tolerance");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (auto* s : app.get_subcommands()) cfg.command = s->get_name();
    if (cfg.command == "mols") {
        for (auto* s : mols->get_subcommands()) cfg.subcommand = s->get_name();
    }
    if (cd->count() || bd->count() || gd->count()) cfg.d = d;
    if (ck->count() || bk->count()) cfg.k = k;
    for (auto* o : xs) {
        if (o->count()) cfg.x = x;
    }
    if (gq->count()) cfg.q = q;
    if (gc->count()) cfg.c = c;
    if (go->count()) cfg.order = order;
    if (!(cfg.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
    return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& e) {
        out << e.what();
        return kOk;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    try {
        if (cfg.command == "construct") return cmd_construct(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "bound") return cmd_bound(cfg, out, err);
        if (cfg.command == "gauss") return cmd_gauss(cfg, out, err);
        if (cfg.command == "mols") return cmd_mols(cfg, out, err);
        err << "unknown command\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kSchema;
    } catch (const MolsParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kSchema;
    } catch (const LatinViolation& e) {
        err << e.what() << "\n";
        return kVerificationFailed;
    } catch (const OrthogonalityViolation& e) {
        err << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace mumeb::cli
