// Copyright 2026 The ecs-concentration Authors
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

#include "ecs/cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecs/verify.h"

namespace ecs::cli {

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";  // folds -0
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

namespace {

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) {
        return format_number(z.real());
    }
    if (z.real() == 0.0) {
        return format_number(z.imag()) + "i";
    }
    std::string im = format_number(z.imag());
    return format_number(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

void write_state(std::ostream &out, const StateSuperposition &s) {
    out << "  coeff";
    for (const auto &m : s.modes()) {
        out << "\t" << m;
    }
    out << "\n";
    for (const auto &t : s.terms()) {
        out << "  " << format_complex(t.coeff);
        for (const auto &a : t.amps) {
            out << "\t" << format_complex(a.value());
        }
        out << "\n";
    }
}

}  // namespace

void write_report(std::ostream &out, const ProtocolReport &report) {
    out << "protocol " << protocol_name(report.kind) << "  alpha=" << format_number(report.alpha)
        << "  c1=" << format_number(report.c1) << "  c2=" << format_number(report.c2) << "\n";
    for (const auto &st : report.stages) {
        out << "stage " << st.name << " (" << st.state.term_count() << " terms)\n";
        write_state(out, st.state);
    }
    out << "paper_probability " << format_number(report.paper_probability) << "\n";
    out << "exact_probability " << format_number(report.exact_probability) << "\n";
    out << "final_fidelity " << format_number(report.final_fidelity) << "\n";
    out << "amplitude_check " << format_number(report.amplitude_check) << "\n";
}

void write_sweep(std::ostream &out, ProtocolKind kind, const std::vector<double> &alphas, int points,
                 SweepFormat format) {
    const std::string proto = protocol_name(kind);
    if (format == SweepFormat::kCsv) {
        out << "protocol,alpha,c1,c2,p_paper,p_exact,fidelity\n";
    }
    for (double alpha : alphas) {
        std::vector<SweepRow> rows = sweep(kind, alpha, points);
        for (const auto &r : rows) {
            if (format == SweepFormat::kCsv) {
                out << proto << ',' << format_number(alpha) << ',' << format_number(r.c1) << ','
                    << format_number(r.c2) << ',' << format_number(r.paper_probability) << ','
                    << format_number(r.exact_probability) << ',' << format_number(r.final_fidelity) << '\n';
            } else {
                nlohmann::ordered_json j;
                j["protocol"] = static_cast<int>(kind);
                j["alpha"] = alpha;
                j["c1"] = r.c1;
                j["c2"] = r.c2;
                j["p_paper"] = r.paper_probability;
                j["p_exact"] = r.exact_probability;
                j["fidelity"] = r.final_fidelity;
                out << j.dump() << '\n';
            }
        }
        if (format == SweepFormat::kCsv) {
            Peak p = find_peak(rows);
            out << "# peak alpha=" << format_number(alpha) << " c1=" << format_number(p.c1)
                << " p=" << format_number(p.paper_probability) << '\n';
        }
    }
}

namespace {

int exit_for(const Error &e, std::ostream &err) {
    switch (e.kind()) {
        case ErrorKind::kEmptySelection:
        case ErrorKind::kDegenerateState:
            err << "error: " << e.what() << "\nsuccess probability: 0\n";
            return kExitDegenerate;
        case ErrorKind::kInvalidArgument:
        case ErrorKind::kInvalidAmplitude:
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        default:
            err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
            return kExitTolerance;
    }
}

struct EcpArgs {
    double alpha = 1.0;
    double c1 = 0.70710678118654752;
    std::optional<double> c2;
    bool normalize_inputs = false;
};

void add_ecp_options(CLI::App *cmd, EcpArgs &a) {
    cmd->add_option("--alpha", a.alpha, "coherent amplitude (> 0)")->capture_default_str();
    cmd->add_option("--c1", a.c1, "weight of |a a a>, in [0, 1]")->capture_default_str();
    cmd->add_option("--c2", a.c2, "weight of |-a -a -a>; default sqrt(1 - c1^2)");
    cmd->add_flag("--normalize-inputs", a.normalize_inputs, "rescale (c1, c2) to unit length");
}

int cmd_ecp(ProtocolKind kind, const EcpArgs &a, std::ostream &out, std::ostream &err) {
    ProtocolConfig cfg;
    cfg.alpha = a.alpha;
    cfg.c1 = a.c1;
    cfg.c2 = a.c2;
    cfg.normalize_inputs = a.normalize_inputs;
    ProtocolReport rep = run_protocol(kind, cfg);
    write_report(out, rep);
    if (std::abs(rep.final_fidelity - 1.0) > kFidelityTolerance) {
        err << "error: final fidelity " << format_number(rep.final_fidelity) << " deviates from 1\n";
        return kExitTolerance;
    }
    return kExitOk;
}

struct SweepArgs {
    int protocol = 1;
    std::vector<double> alphas{0.5, 1.0, 2.0};
    int points = 99;
    std::string out_path;
    SweepFormat format = SweepFormat::kCsv;
};

int cmd_sweep(const SweepArgs &a, std::ostream &out, std::ostream &err) {
    const ProtocolKind kind = a.protocol == 1 ? ProtocolKind::kAncilla : ProtocolKind::kTwoCopy;
    // Render fully before touching the output so a failed sweep leaves no
    // partial file behind.
    std::ostringstream buf;
    write_sweep(buf, kind, a.alphas, a.points, a.format);
    if (a.out_path.empty() || a.out_path == "-") {
        out << buf.str();
        return kExitOk;
    }
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file || !(file << buf.str()) || !file.flush()) {
        err << "error: cannot write '" << a.out_path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out) {
    bool ok = true;
    for (const auto &c : run_verification(opts)) {
        out << c.name << ": checked=" << c.checked << " refused=" << c.refused
            << " max_dev=" << format_number(c.max_deviation) << " tol=" << format_number(c.tolerance) << " "
            << (c.passed() ? "PASS" : "FAIL") << "\n";
        ok = ok && c.passed();
    }
    out << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitTolerance;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement concentration of GHZ-type entangled coherent states"};
    app.require_subcommand(1);

    EcpArgs ecp1_args;
    EcpArgs ecp2_args;
    auto *ecp1 = app.add_subcommand("ecp1", "single copy plus single-mode ancilla");
    auto *ecp2 = app.add_subcommand("ecp2", "two partially entangled copies");
    add_ecp_options(ecp1, ecp1_args);
    add_ecp_options(ecp2, ecp2_args);

    SweepArgs sweep_args;
    auto *sweep_cmd = app.add_subcommand("sweep", "success probability against c1, as CSV");
    sweep_cmd->add_option("--protocol", sweep_args.protocol, "1 or 2")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    sweep_cmd->add_option("--alpha", sweep_args.alphas, "comma-separated amplitudes")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--points", sweep_args.points, "grid points in (0, 1)")
        ->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_args.out_path, "output file (default stdout)");
    std::map<std::string, SweepFormat> formats{{"csv", SweepFormat::kCsv}, {"json-lines", SweepFormat::kJsonLines}};
    sweep_cmd->add_option("--format", sweep_args.format, "csv or json-lines")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    VerifyOptions verify_opts;
    auto *verify = app.add_subcommand("verify", "Fock-oracle and unitarity checks");
    verify->add_option("--n-max", verify_opts.n_max, "Fock truncation")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    verify->add_option("--trials", verify_opts.trials, "random cases")
        ->check(CLI::Range(1, 100000000))
        ->capture_default_str();
    verify->add_option("--seed", verify_opts.seed, "RNG seed")->capture_default_str();
    verify->add_option("--amp-max", verify_opts.amp_max, "largest |a| drawn")
        ->check(CLI::Range(0.0, 4.0))
        ->capture_default_str();

    std::vector<std::string> argv_store(args);
    if (argv_store.empty()) {
        argv_store.push_back("ecs_cli");
    }
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*ecp1) {
            return cmd_ecp(ProtocolKind::kAncilla, ecp1_args, out, err);
        }
        if (*ecp2) {
            return cmd_ecp(ProtocolKind::kTwoCopy, ecp2_args, out, err);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_args, out, err);
        }
        return cmd_verify(verify_opts, out);
    } catch (const Error &e) {
        return exit_for(e, err);
    }
}

}  // namespace ecs::cli
