#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <weilptb/distinction.hpp>
#include <weilptb/error.hpp>
#include <weilptb/langlands.hpp>
#include <weilptb/orbits.hpp>
#include <weilptb/parse.hpp>
#include <weilptb/report.hpp>
#include <weilptb/sweep.hpp>
#include <weilptb/weil_rep.hpp>

using namespace weilptb;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Which flag carried the text that failed, for error reports.
struct InputError {
    std::string flag;
    std::string input;
};

void print_json(const ojson &j)
{
    std::cout << j.dump(2) << "\n";
}

int report_error(const Error &e, const std::optional<InputError> &where)
{
    ojson j;
    j["error"] = std::string(errc_name(e.code()));
    j["message"] = e.what();
    if (where) {
        j["flag"] = where->flag;
        j["input"] = where->input;
    }
    if (const auto *se = dynamic_cast<const SyntaxError *>(&e)) {
        j["offset"] = se->offset();
        j["expected"] = se->expected();
    }
    std::cerr << j.dump() << "\n";
    return kUsage;
}

template <typename F>
auto parse_flag(const std::string &flag, const std::string &text, F &&f, std::optional<InputError> &where)
{
    where = InputError{flag, text};
    auto v = f(text);
    where.reset();
    return v;
}

void warn(const std::vector<std::string> &warnings)
{
    for (const auto &w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Archimedean Langlands parameter calculator: epsilon factors, distinction criteria and orbit data"};
    app.require_subcommand(1);

    std::string phi_text, s_text = "1/2", a_text = "1", pi_text, chi_text, d_text = "R", sweep_path, csv_path,
                          partition_text;
    bool inverse = false;
    bool witness = false;

    auto *eps = app.add_subcommand("eps", "epsilon(s, phi, psi_a) as unit times a power of |a|");
    eps->add_option("--phi", phi_text, "parameter, e.g. phi2(3;1/2)+phi1(0;0)")->required();
    eps->add_option("--s", s_text, "Gaussian rational s")->capture_default_str();
    eps->add_option("--a", a_text, "nonzero rational a")->capture_default_str();

    auto *rootnum = app.add_subcommand("rootnum", "root number of a self-dual parameter with trivial determinant");
    rootnum->add_option("--phi", phi_text, "parameter")->required();

    auto *llc_cmd = app.add_subcommand("llc", "local Langlands correspondence for GL_N(R) or GL_n(H)");
    llc_cmd->add_option("--pi", pi_text, "blocks, e.g. P2(1;0) x P1(0;0)");
    llc_cmd->add_option("--phi", phi_text, "parameter (with --inverse)");
    llc_cmd->add_option("--D", d_text, "R or H")->capture_default_str();
    llc_cmd->add_flag("--inverse", inverse, "map a parameter back to a representation");

    auto *dist = app.add_subcommand("distinguish", "involution set T, GSp test, root-number identity");
    dist->add_option("--D", d_text, "R or H")->capture_default_str();
    dist->add_option("--pi", pi_text, "blocks of the standard module")->required();
    dist->add_option("--chi", chi_text, "character, e.g. chi(4;0)")->required();

    auto *verify = app.add_subcommand("verify", "grid and family sweep of all checks");
    verify->add_option("--sweep", sweep_path, "JSON sweep configuration")->required();
    verify->add_option("--csv", csv_path, "write one CSV row per evaluated module");

    auto *orbits = app.add_subcommand("orbits", "orbit parameters, representatives, block maps");
    orbits->add_option("--D", d_text, "R or H")->capture_default_str();
    orbits->add_option("--partition", partition_text, "block sizes, e.g. 1,1,2")->required();
    orbits->add_flag("--witness", witness, "solve the positivity cone for each orbit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    std::optional<InputError> where;
    try {
        if (eps->parsed()) {
            std::vector<std::string> warnings;
            const WeilRep phi = parse_flag("--phi", phi_text, [&](const std::string &t) { return parse_weil(t, &warnings); }, where);
            const GaussianRational s = parse_flag("--s", s_text, [](const std::string &t) { return parse_gauss(t); }, where);
            const Rational a = parse_flag("--a", a_text, [](const std::string &t) { return parse_rational(t); }, where);
            warn(warnings);
            if (a == 0) {
                where = InputError{"--a", a_text};
                throw Error(Errc::invalid_argument, "a must be nonzero");
            }
            print_json({{"phi", to_string(phi)}, {"s", to_string(s)}, {"a", to_string(a)}, {"epsilon", to_string(epsilon(s, phi, a))}});
            return kOk;
        }
        if (rootnum->parsed()) {
            std::vector<std::string> warnings;
            const WeilRep phi = parse_flag("--phi", phi_text, [&](const std::string &t) { return parse_weil(t, &warnings); }, where);
            warn(warnings);
            where = InputError{"--phi", phi_text};
            const int rn = root_number(phi);
            print_json({{"phi", to_string(phi)}, {"root_number", rn}});
            return kOk;
        }
        if (llc_cmd->parsed()) {
            const DivAlg d = parse_flag("--D", d_text, [](const std::string &t) { return parse_divalg(t); }, where);
            if (inverse) {
                std::vector<std::string> warnings;
                const WeilRep phi =
                    parse_flag("--phi", phi_text, [&](const std::string &t) { return parse_weil(t, &warnings); }, where);
                warn(warnings);
                where = InputError{"--phi", phi_text};
                const IrrRepGL pi = llc_inverse(phi, d);
                print_json({{"D", to_string(d)}, {"phi", to_string(phi)}, {"pi", to_string(pi)}});
                return kOk;
            }
            const auto blocks = parse_flag("--pi", pi_text, [](const std::string &t) { return parse_blocks(t); }, where);
            where = InputError{"--pi", pi_text};
            const IrrRepGL pi(d, blocks);
            print_json({{"D", to_string(d)}, {"pi", to_string(pi)}, {"phi", to_string(llc(pi))}});
            return kOk;
        }
        if (dist->parsed()) {
            const DivAlg d = parse_flag("--D", d_text, [](const std::string &t) { return parse_divalg(t); }, where);
            const auto blocks = parse_flag("--pi", pi_text, [](const std::string &t) { return parse_blocks(t); }, where);
            const HeckeCharacter chi = parse_flag("--chi", chi_text, [](const std::string &t) { return parse_chi(t); }, where);
            where = InputError{"--pi", pi_text};
            const StandardModule sm = make_standard(d, blocks);
            where.reset();
            const DistinctionReport rep = check_main_theorem(sm, chi);
            ojson j = to_json(rep);
            j["duality_corollary"] = check_duality_corollary(sm, chi);
            print_json(j);
            if (!rep.ok() || !j["duality_corollary"].get<bool>()) {
                std::cerr << j.dump() << "\n";
                return kCheckFailed;
            }
            return kOk;
        }
        if (verify->parsed()) {
            where = InputError{"--sweep", sweep_path};
            std::ifstream in(sweep_path);
            if (!in) {
                throw Error(Errc::invalid_argument, "cannot read " + sweep_path);
            }
            nlohmann::json cfg_json;
            try {
                cfg_json = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception &e) {
                throw Error(Errc::syntax_error, std::string("sweep config is not valid JSON: ") + e.what());
            }
            const SweepConfig cfg = SweepConfig::from_json(cfg_json);
            where.reset();
            const SweepResult res = run_sweep(cfg);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) {
                    where = InputError{"--csv", csv_path};
                    throw Error(Errc::invalid_argument, "cannot write " + csv_path);
                }
                out << csv_header() << "\n";
                for (const auto *list : {&res.esi_reports, &res.family_reports}) {
                    for (const auto &r : *list) {
                        out << csv_row(r) << "\n";
                    }
                }
            }
            const ojson summary = to_json(res);
            print_json(summary);
            if (!res.ok()) {
                std::cerr << summary["failures"].dump() << "\n";
                return kCheckFailed;
            }
            return kOk;
        }
        if (orbits->parsed()) {
            const DivAlg d = parse_flag("--D", d_text, [](const std::string &t) { return parse_divalg(t); }, where);
            const auto parts =
                parse_flag("--partition", partition_text, [](const std::string &t) { return parse_partition(t); }, where);
            const PartitionSpec spec{d, parts};
            where = InputError{"--partition", partition_text};
            spec.validate();
            where.reset();
            const ojson j = orbits_json(spec, {witness});
            print_json(j);
            for (const auto &o : j["orbits"]) {
                bool bad = false;
                if (o.contains("block_map")) {
                    for (const auto &b : o["block_map"]) {
                        bad = bad || (b["chi_composite"].is_boolean() && !b["chi_composite"].get<bool>()) ||
                              (b["fixed_dim"].is_number() && b["fixed_dim"].get<int>() != 2);
                    }
                }
                if (o.contains("witness") && o["witness"].contains("ok")) {
                    bad = bad || !o["witness"]["ok"].get<bool>();
                }
                if (bad) {
                    std::cerr << o.dump() << "\n";
                    return kCheckFailed;
                }
            }
            return kOk;
        }
    } catch (const Error &e) {
        if (!where) {
            // Errors raised by the checks themselves are verification failures.
            switch (e.code()) {
            case Errc::well_definedness_violation:
            case Errc::consistency_violation:
            case Errc::sample_not_in_h:
            case Errc::infeasible:
                std::cerr << ojson{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
                return kCheckFailed;
            default:
                break;
            }
        }
        return report_error(e, where);
    }
    return kUsage;
}
