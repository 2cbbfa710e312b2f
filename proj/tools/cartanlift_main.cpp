#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cartanlift/cartan.hpp"
#include "cartanlift/fp_solver.hpp"
#include "cartanlift/json_io.hpp"
#include "cartanlift/oracle.hpp"
#include "cartanlift/steenrod.hpp"
#include "cartanlift/verify.hpp"

using namespace cartanlift;

namespace {

std::string slurp_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;  // inline JSON
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class K>
void emit(const FormalSum<K>& fs, const std::string& format) {
    if (format == "json")
        std::cout << sum_to_json(fs) << "\n";
    else
        std::cout << fs.str() << "\n";
}

void emit(const Cochain& c, const std::string& format) {
    if (format == "json")
        std::cout << cochain_to_json(c) << "\n";
    else
        std::cout << c.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cartanlift: exact cochain-level Steenrod operations at odd primes and the "
                 "coboundaries trivializing their Cartan formulas"};
    app.require_subcommand(1);
    std::string format = "text";

    int r = 3, n = 2, ii = 0, beta = 0, max_n = 5, max_dim = 2;
    long long s_index = 0;
    unsigned seed = 0;
    std::uint32_t p = 3;
    bool count_only = false;
    std::string space_arg = "delta:2", a_arg, b_arg, cochain_arg, suite = "all";

    CLI::App* cmd_iota = app.add_subcommand("iota", "image of a resolution generator");
    cmd_iota->add_option("--r", r, "arity")->required();
    cmd_iota->add_option("--n", n, "degree")->required();

    CLI::App* cmd_k1 = app.add_subcommand("k1", "first homotopy applied to the degree-n image");
    CLI::App* cmd_k2 = app.add_subcommand("k2", "second homotopy applied to the degree-n image");
    CLI::App* cmd_k3 = app.add_subcommand("k3", "coproduct homotopy of the degree-n generator");
    for (CLI::App* c : {cmd_k1, cmd_k2, cmd_k3}) {
        c->add_option("--r", r, "arity")->required();
        c->add_option("--n", n, "degree")->required();
        c->add_flag("--count", count_only, "print only the number of terms");
    }

    CLI::App* cmd_zeta = app.add_subcommand("zeta", "Cartan coboundary of two mod-p cocycles");
    cmd_zeta->add_option("--p", p, "odd prime")->required();
    cmd_zeta->add_option("--i", ii, "operation index")->required();
    cmd_zeta->add_option("--space", space_arg, "delta:N, boundary:N, or a JSON file");
    cmd_zeta->add_option("--a", a_arg, "first cocycle (JSON file or inline)")->required();
    cmd_zeta->add_option("--b", b_arg, "second cocycle (JSON file or inline)")->required();

    CLI::App* cmd_st = app.add_subcommand("steenrod", "power-operation representative");
    cmd_st->add_option("--p", p, "odd prime")->required();
    cmd_st->add_option("--s", s_index, "operation index")->required();
    cmd_st->add_option("--beta", beta, "0 for P_s, 1 for beta P_s")->check(CLI::Range(0, 1));
    cmd_st->add_option("--space", space_arg, "delta:N, boundary:N, or a JSON file");
    cmd_st->add_option("--cocycle", cochain_arg, "mod-p cocycle (JSON)")->required();

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "independent homotopy constructions");
    CLI::App* cmd_cmp = cmd_oracle->add_subcommand("compare", "three-way comparison");
    cmd_cmp->add_option("--r", r, "arity")->required();
    cmd_cmp->add_option("--max-n", max_n, "top degree");

    CLI::App* cmd_cob = app.add_subcommand("coboundary", "solve delta x = c over F_p");
    cmd_cob->add_option("--p", p, "prime")->required();
    cmd_cob->add_option("--space", space_arg, "delta:N, boundary:N, or a JSON file");
    cmd_cob->add_option("--cochain", cochain_arg, "mod-p cocycle (JSON)")->required();

    for (CLI::App* c : {cmd_iota, cmd_k1, cmd_k2, cmd_k3, cmd_zeta, cmd_st, cmd_cob})
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "suite name or 'all'");
    cmd_verify->add_option("--p", p, "odd prime for the cartan suite");
    cmd_verify->add_option("--max-dim", max_dim, "top cocycle degree for the cartan suite");
    cmd_verify->add_option("--seed", seed, "seed for sampled checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_iota->parsed()) {
            emit(iota(r, n), format);
        } else if (cmd_k1->parsed() || cmd_k2->parsed()) {
            ESum out;
            for (const auto& [t, c] : iota(r, n)) {
                ESum part = cmd_k1->parsed() ? homotopy_k1(t) : homotopy_k2(t);
                part *= c;
                out += part;
            }
            if (count_only)
                std::cout << out.size() << "\n";
            else
                emit(out, format);
        } else if (cmd_k3->parsed()) {
            KTensor out = homotopy_k3(r, n);
            if (count_only)
                std::cout << out.size() << "\n";
            else
                emit(out, format);
        } else if (cmd_zeta->parsed()) {
            auto X = load_space(space_arg);
            Cochain a = parse_cochain_json(slurp_arg(a_arg), X.get());
            Cochain b = parse_cochain_json(slurp_arg(b_arg), X.get());
            emit(zeta(p, ii, a, b), format);
        } else if (cmd_st->parsed()) {
            auto X = load_space(space_arg);
            Cochain a = parse_cochain_json(slurp_arg(cochain_arg), X.get());
            emit(steenrod_rep(s_index, beta, p, a), format);
        } else if (cmd_cmp->parsed()) {
            CompareReport rep = compare_all(r, max_n);
            if (rep.ok) {
                std::cout << "PASS three-way agreement, arity " << r << " through degree "
                          << max_n << "\n";
                return 0;
            }
            std::cout << "FAIL first divergence " << rep.first_divergence << "\n";
            return 1;
        } else if (cmd_cob->parsed()) {
            auto X = load_space(space_arg);
            Cochain c = parse_cochain_json(slurp_arg(cochain_arg), X.get());
            CoboundaryResult res = is_coboundary(c.reduced_mod(p), p);
            if (res.solvable) {
                std::cout << "solvable; witness: ";
                emit(*res.witness, format);
            } else {
                std::cout << "not a coboundary; refuting functional on top simplices:";
                for (std::uint32_t v : res.refuting_functional) std::cout << " " << v;
                std::cout << "\n";
                return 1;
            }
        } else if (cmd_verify->parsed()) {
            VerifyOptions opt{p, max_dim, seed};
            auto results = run_suite(suite, opt);
            int passed = print_results(results, std::cout);
            return passed == static_cast<int>(results.size()) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
