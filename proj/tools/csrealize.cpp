// Command-line front end: compute differential-operator realizations, run
// the verification suites, print coefficient/degree tables, export JSON.
#include "csreal/gl3.hpp"
#include "csreal/json_io.hpp"
#include "csreal/oracle.hpp"
#include "csreal/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

namespace {

using namespace csreal;

struct JobSpec {
    std::string algebra = "A1";
    std::string parabolic;            // comma-separated excluded simple roots, "" = Borel
    std::string weight = "symbolic";  // or comma-separated rationals
    std::string convention = "formal";
    std::string generator = "all";
    std::string format = "text";
    std::string output;  // export target; empty = stdout
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string piece;
    while (std::getline(in, piece, ','))
        if (!piece.empty()) out.push_back(piece);
    return out;
}

std::set<int> parse_parabolic(const RootSystem& rs, const std::string& s) {
    std::set<int> excluded;
    for (const std::string& name : split_csv(s)) {
        if (name.size() < 2 || name[0] != 'a')
            throw std::invalid_argument("--parabolic entries look like 'a2', got '" + name + "'");
        int k = std::stoi(name.substr(1));
        if (k < 1 || k > rs.rank())
            throw std::invalid_argument("--parabolic index out of range: '" + name + "'");
        excluded.insert(k - 1);
    }
    return excluded;
}

std::optional<std::vector<Rational>> parse_weight(const RootSystem& rs, const std::string& s) {
    if (s == "symbolic") return std::nullopt;
    std::vector<Rational> w;
    for (const std::string& piece : split_csv(s)) w.push_back(parse_rational(piece));
    if (static_cast<int>(w.size()) != rs.rank())
        throw std::invalid_argument("--weight needs " + std::to_string(rs.rank()) +
                                    " entries or 'symbolic'");
    return w;
}

Convention parse_convention(const std::string& s) {
    if (s == "formal") return Convention::Formal;
    if (s == "fock") return Convention::Fock;
    throw std::invalid_argument("--convention must be formal or fock");
}

struct Session {
    RootSystem rs;
    StructureConstants sc;
    OrbitContext ctx;
    Convention conv;

    explicit Session(const JobSpec& job)
        : rs(LieType::parse(job.algebra)),
          sc(rs),
          ctx(rs, partition(rs, parse_parabolic(rs, job.parabolic)), sc,
              parse_weight(rs, job.weight)),
          conv(parse_convention(job.convention)) {}
};

std::unique_ptr<Session> open_session(const JobSpec& job) {
    return std::make_unique<Session>(job);
}

std::vector<std::pair<GenId, DiffOp>> selected_operators(const Session& s,
                                                         const std::string& generator) {
    std::vector<std::pair<GenId, DiffOp>> out;
    if (generator == "all") {
        Realization real = realize_all(s.ctx, s.conv);
        out.assign(real.operators.begin(), real.operators.end());
        // Cartan generators first, then roots in list order.
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.first.cartan != b.first.cartan) return a.first.cartan;
            return a.first.index < b.first.index;
        });
    } else {
        GenId g = parse_generator(s.ctx.root_system(), generator);
        GenId src = s.conv == Convention::Fock ? adjoint_generator(s.ctx.root_system(), g) : g;
        out.emplace_back(g, realize_general(s.ctx, src));
    }
    return out;
}

int cmd_realize(const JobSpec& job) {
    auto s = open_session(job);
    auto ops = selected_operators(*s, job.generator);
    if (job.format == "json") {
        nlohmann::json docs = nlohmann::json::array();
        for (const auto& [g, op] : ops) docs.push_back(operator_to_json(s->ctx, s->conv, g, op));
        std::cout << docs.dump(2) << "\n";
    } else if (job.format == "latex") {
        for (const auto& [g, op] : ops)
            std::cout << "D_{" << generator_name(s->ctx.root_system(), g)
                      << "} = " << render_latex(op, s->ctx) << "\n";
    } else if (job.format == "text") {
        for (const auto& [g, op] : ops)
            std::cout << "D[" << generator_name(s->ctx.root_system(), g)
                      << "] = " << render(op, default_namer(s->ctx)) << "\n";
    } else {
        throw std::invalid_argument("--format must be text, latex or json");
    }
    return 0;
}

int report_outcome(const std::string& label, const VerificationReport& r) {
    std::cout << label << ": " << r.pass_count() << "/" << r.checks.size() << " pass\n";
    if (r.all_pass()) return 0;
    for (const auto& c : r.checks)
        if (!c.pass) {
            std::cout << "  first failure: " << c.name << " residual " << c.detail << "\n";
            break;
        }
    return 1;
}

int cmd_verify(const JobSpec& job) {
    auto s = open_session(job);
    int status = 0;

    Realization real = realize_all(s->ctx, Convention::Formal);
    status |= report_outcome("bracket pairs", bracket_check(real, s->ctx));
    status |= report_outcome("closed form vs series", cross_check(s->ctx));

    // Matrix fixtures run on their own numeric-weight contexts.
    const RootSystem& rs = s->rs;
    auto run_fixture = [&](const std::string& label, const MatrixRep& rep) {
        rep.validate(rs, s->sc, s->ctx.parabolic());
        OrbitContext fctx(rs, s->ctx.parabolic(), s->sc, rep.weight);
        Realization freal = realize_all(fctx, Convention::Formal);
        status |= report_outcome(label, matrix_check(freal, fctx, rep));
    };
    if (s->ctx.parabolic().excluded.empty()) {
        if (rs.rank() == 1) {
            run_fixture("matrix fixture spin-1/2", sl2_spin_half(rs));
            run_fixture("matrix fixture spin-1", sl2_spin_one(rs));
        }
        if (rs.lie_type().family == Family::A && rs.rank() == 2)
            run_fixture("matrix fixture sl3 defining", sl3_defining(rs, s->sc));
    }
    return status;
}

int cmd_table(bool show_nu, int coeff_order) {
    if (show_nu) {
        const std::vector<std::string> types = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                                "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4",
                                                "D5", "G2", "F4", "E6", "E7", "E8"};
        std::cout << "type  nu\n";
        for (const std::string& t : types) {
            RootSystem rs(LieType::parse(t));
            std::cout << t << (t.size() == 2 ? "    " : "   ") << nu_degree(rs) << "\n";
        }
    }
    if (coeff_order > 0) {
        CoeffTable t = coeff_table(coeff_order);
        for (size_t k = 0; k < t.c.size(); ++k)
            std::cout << "c" << k << " = " << to_string(t.c[k]) << "\n";
        for (size_t k = 0; k < t.d.size(); ++k)
            std::cout << "d" << k << " = " << to_string(t.d[k]) << "\n";
    }
    return 0;
}

int cmd_export(const JobSpec& job) {
    auto s = open_session(job);
    auto ops = selected_operators(*s, job.generator);
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& [g, op] : ops) docs.push_back(operator_to_json(s->ctx, s->conv, g, op));
    if (job.output.empty() || job.output == "-") {
        std::cout << docs.dump(2) << "\n";
    } else {
        std::ofstream out(job.output);
        if (!out) throw std::invalid_argument("cannot open output file: " + job.output);
        out << docs.dump(2) << "\n";
    }
    return 0;
}

void apply_config(JobSpec& job, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    auto pick = [&doc](const char* key, std::string& slot) {
        if (doc.contains(key)) slot = doc.at(key).get<std::string>();
    };
    pick("algebra", job.algebra);
    pick("weight", job.weight);
    pick("convention", job.convention);
    pick("generator", job.generator);
    pick("format", job.format);
    pick("output", job.output);
    if (doc.contains("parabolic")) {
        const auto& p = doc.at("parabolic");
        if (p.is_string()) {
            job.parabolic = p.get<std::string>();
        } else {
            std::string joined;
            for (const auto& e : p) {
                if (!joined.empty()) joined += ",";
                joined += e.get<std::string>();
            }
            job.parabolic = joined;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential-operator realizations of semisimple Lie algebras "
                 "on coherent-state orbits"};
    app.require_subcommand(1);

    JobSpec job;
    std::string config;
    bool show_nu = false;
    int coeff_order = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", job.algebra, "Lie type, e.g. A2, B3, G2");
        cmd->add_option("--parabolic", job.parabolic,
                        "excluded simple roots, e.g. 'a2' or 'a1,a3' (empty = Borel)");
        cmd->add_option("--weight", job.weight, "'symbolic' or rationals, e.g. '-1,0'");
        cmd->add_option("--convention", job.convention, "formal | fock");
        cmd->add_option("--generator", job.generator, "all | H1 | E[1,1] | E[-1,0] ...");
        cmd->add_option("--config", config, "JSON file with the same keys; flags override");
    };

    CLI::App* realize = app.add_subcommand("realize", "print the requested operators");
    add_common(realize);
    realize->add_option("--format", job.format, "text | latex | json");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify);

    CLI::App* table = app.add_subcommand("table", "print coefficient and degree tables");
    table->add_flag("--nu", show_nu, "print the nu table for the simple types");
    table->add_option("--coeffs", coeff_order, "print c_0..c_n and d_0..d_{n-1}");

    CLI::App* exportc = app.add_subcommand("export", "write JSON operator documents");
    add_common(exportc);
    exportc->add_option("--output", job.output, "output file ('-' or empty = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (!config.empty()) {
            JobSpec from_file;
            apply_config(from_file, config);
            // Flags override: re-parse so explicitly passed options win.
            JobSpec defaults;
            auto merge = [](std::string& slot, const std::string& flag_value,
                            const std::string& default_value, const std::string& file_value) {
                slot = flag_value != default_value ? flag_value : file_value;
            };
            JobSpec flags = job;
            merge(job.algebra, flags.algebra, defaults.algebra, from_file.algebra);
            merge(job.parabolic, flags.parabolic, defaults.parabolic, from_file.parabolic);
            merge(job.weight, flags.weight, defaults.weight, from_file.weight);
            merge(job.convention, flags.convention, defaults.convention, from_file.convention);
            merge(job.generator, flags.generator, defaults.generator, from_file.generator);
            merge(job.format, flags.format, defaults.format, from_file.format);
            merge(job.output, flags.output, defaults.output, from_file.output);
        }
        if (realize->parsed()) return cmd_realize(job);
        if (verify->parsed()) return cmd_verify(job);
        if (table->parsed()) return cmd_table(show_nu, coeff_order);
        if (exportc->parsed()) return cmd_export(job);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
