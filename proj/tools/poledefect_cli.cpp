// poledefect: defect of projective hypersurfaces with isolated singularities.
//
//   poledefect defect --expr "(x+y+z+u+v)^3-(x^3+y^3+z^3+u^3+v^3)"
//   poledefect defect --input segre.terms --json
//   poledefect hodge --n 3 --d 5
//   poledefect corpus --skip-slow
//   poledefect terms --expr "..." > f.terms
//
// Exit codes: 0 success, 1 corpus mismatch, 2 bad input, 3 rank budget exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poledefect/poledefect.hpp"
#include "poledefect/corpus.hpp"
#include "poledefect/report_json.hpp"

namespace {

using namespace poledefect;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

struct RankFlags {
    std::optional<unsigned> prime_count;
    std::string prime_list;
    bool exact = false;
    std::optional<std::uint64_t> exact_max_cells;

    void attach(CLI::App* app) {
        app->add_option("--primes", prime_count, "use the first N primes of the built-in table (1-10)")
            ->check(CLI::Range(1, 10));
        app->add_option("--prime-list", prime_list, "comma-separated primes, overrides --primes");
        app->add_flag("--exact", exact, "certify every rank with exact integer elimination");
        app->add_option("--exact-max-cells", exact_max_cells, "largest rows*cols given to exact elimination");
    }

    RankConfig config() const {
        RankConfig cfg;
        if (!prime_list.empty()) {
            cfg.primes.clear();
            for (const auto& p : split_csv(prime_list)) {
                std::size_t used = 0;
                unsigned long v = std::stoul(p, &used);
                if (used != p.size()) throw std::invalid_argument("bad prime '" + p + "'");
                cfg.primes.push_back(static_cast<std::uint32_t>(v));
            }
        } else if (prime_count) {
            cfg.primes.assign(std::begin(listing_primes), std::begin(listing_primes) + *prime_count);
        }
        cfg.exact = exact;
        if (exact_max_cells) cfg.exact_budget.max_cells = *exact_max_cells;
        cfg.validate();
        return cfg;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rank_cell(const RankReport& r) {
    std::ostringstream os;
    os << r.value() << "  [";
    for (std::size_t i = 0; i < r.per_prime.size(); ++i)
        os << (i ? " " : "") << r.per_prime[i].prime << ':' << r.per_prime[i].rank;
    os << ']';
    if (r.exact_rank) os << (r.certified ? "  exact, certified" : "  exact, MISMATCH");
    if (!r.agreed) os << "  primes disagree";
    return os.str();
}

void print_block(const char* name, const BlockSummary& b) {
    std::cout << "  " << std::left << std::setw(5) << name << std::right << std::setw(6) << b.rows << " x "
              << std::left << std::setw(6) << b.cols << " nnz " << std::setw(8) << b.nonzeros << " rank "
              << rank_cell(b.rank) << '\n';
}

void print_e2(const E2Report& e) {
    const auto& g = e.degrees;
    std::cout << "grading " << e.kk << "d: source coefficient degrees " << g.lower_source << ", "
              << g.upper_source << "; target " << g.lower_target << ", " << g.upper_target << '\n';
    print_block("A", e.A);
    print_block("B", e.B);
    print_block("full", e.full);
    std::cout << "mu = " << e.mu << ", gamma = " << e.gamma << ", nu = " << e.nu << ", rank d1 = " << e.rank_d1
              << ", dim N2 = " << e.dim_n2 << '\n';
    for (const auto& w : e.warnings) std::cout << "warning: " << w << '\n';
}

void dump_matrices(const std::filesystem::path& dir, const PhiBlocks& phi) {
    std::filesystem::create_directories(dir);
    auto write = [&](const char* name, const SparseIntMatrix& m) {
        std::ofstream out(dir / name);
        m.write_triplets(out);
    };
    write("A.txt", phi.A);
    write("B.txt", phi.B);
    write("Dm.txt", phi.Dm);
    write("full.txt", phi.full);
}

struct DefectCommand {
    std::string expr;
    std::string input;
    std::string vars = "x,y,z,u,v";
    unsigned kk = 3;
    bool json = false;
    std::string dump_dir;
    std::optional<std::int64_t> nodes, dim_v, dim_nv1, dim_v1, gr2_v;
    RankFlags rank;

    void attach(CLI::App* app) {
        auto* e = app->add_option("--expr", expr, "polynomial expression");
        auto* i = app->add_option("--input", input, "term-list file")->check(CLI::ExistingFile);
        e->excludes(i);
        app->add_option("--vars", vars, "comma-separated variable names")->capture_default_str();
        app->add_option("--k", kk, "grading multiplier kk (the grading is kk*d)")->capture_default_str()
            ->check(CLI::Range(2u, 1000u));
        app->add_flag("--json", json, "emit the JSON report");
        app->add_option("--dump-matrices", dump_dir, "write A, B, Dm and full as triplet files to DIR");
        app->add_option("--nodes", nodes, "X has exactly S ordinary double points (sets dim V = dim V1 = s)");
        app->add_option("--dim-v", dim_v, "dim V, total vanishing cohomology");
        app->add_option("--dim-nv1", dim_nv1, "dim Ker N on the unipotent part V1");
        app->add_option("--dim-v1", dim_v1, "dim V1");
        app->add_option("--gr2-v", gr2_v, "dim Gr_F^2 V");
        rank.attach(app);
    }

    int run() const {
        if (expr.empty() && input.empty()) throw std::invalid_argument("one of --expr or --input is required");
        const auto variables = split_csv(vars);
        const RankConfig cfg = rank.config();
        Polynomial poly = expr.empty() ? parse_term_list(read_file(input), {variables, 100000})
                                       : parse_expression(expr, variables);
        HomogeneousForm f(std::move(poly));
        if (!dump_dir.empty()) dump_matrices(dump_dir, assemble_phi(f, kk));

        if (kk != 3 || f.variable_count() != 5) {
            const E2Report e2 = e2_piece(f, kk, cfg);
            if (json) {
                std::cout << e2_json(f.poly(), f.degree(), e2, cfg).dump(2) << '\n';
            } else {
                std::cout << "f: degree " << f.degree() << " in " << f.variable_count() << " variables ("
                          << f.poly().size() << " terms)\n";
                print_e2(e2);
                std::cout << "defect not reported: it needs 5 variables and --k 3\n";
            }
            return exit_ok;
        }

        const DefectReport rep = defect(f, cfg);
        std::optional<IhReport> ih;
        LocalData local;
        if (nodes) local = LocalData::nodes(*nodes);
        if (dim_v) local.dim_v = dim_v;
        if (dim_nv1) local.dim_nv1 = dim_nv1;
        if (dim_v1) local.dim_v1 = dim_v1;
        if (gr2_v) local.gr2_v = gr2_v;
        if (local.dim_v || local.dim_nv1 || local.dim_v1 || local.gr2_v) ih = ih_report(rep, local);

        if (json) {
            std::cout << defect_json(f.poly(), rep, cfg, ih).dump(2) << '\n';
            return exit_ok;
        }
        std::cout << "f: degree " << rep.d << " in 5 variables (" << rep.terms << " terms)\n";
        print_e2(rep.e2);
        std::cout << "mu_2 = " << rep.mu2 << ", mu_3 = " << rep.e2.mu << ", nu_3 = " << rep.e2.nu << '\n';
        std::cout << "def(X) = " << rep.defect << '\n';
        for (const auto& h : rep.hypotheses) std::cout << "note: " << h << '\n';
        if (ih) {
            std::cout << "dim H^3(X_c) = " << ih->h3_smooth << ", dim IH^3(X) = " << ih->dim_ih3 << '\n';
            if (ih->gr2_ih3) std::cout << "dim Gr_F^2 IH^3(X) = " << *ih->gr2_ih3 << '\n';
            if (ih->inequality)
                std::cout << "def(X) >= Gr_F^2 V - Gr_F^2 H^3(X_c): " << ih->inequality->defect
                          << " >= " << ih->inequality->bound
                          << (ih->inequality->satisfied ? "  ok" : "  VIOLATED") << '\n';
            std::cout << "sigma(X) = " << ih->sigma << '\n';
            for (const auto& n : ih->notes) std::cout << "note: " << n << '\n';
        }
        return exit_ok;
    }
};

struct HodgeCommand {
    unsigned n = 0;
    unsigned d = 0;
    bool json = false;

    void attach(CLI::App* app) {
        app->add_option("--n", n, "dimension of the hypersurface")->required()->check(CLI::Range(1u, 1000u));
        app->add_option("--d", d, "degree")->required()->check(CLI::Range(1u, 100000u));
        app->add_flag("--json", json, "emit JSON");
    }

    int run() const {
        const auto s = SmoothFiberInvariants::compute(n, d);
        if (json) {
            std::cout << hodge_json(s).dump(2) << '\n';
            return exit_ok;
        }
        std::cout << "smooth degree-" << d << " hypersurface in P^" << n + 1 << '\n';
        std::cout << "euler = " << s.euler.get_str() << '\n';
        std::cout << "Gr_F^p H^" << n << "_prim, p = 0.." << n << ":";
        for (const auto& h : s.hodge_prim) std::cout << ' ' << h.get_str();
        std::cout << "\nsymmetric: " << (s.symmetric() ? "yes" : "NO") << '\n';
        return exit_ok;
    }
};

struct CorpusCommand {
    CorpusOptions opt;
    bool json = false;
    RankFlags rank;

    void attach(CLI::App* app) {
        app->add_option("--filter", opt.filter, "run fixtures whose name contains NAME");
        app->add_flag("--skip-slow", opt.skip_slow, "skip the degree-6 fixtures");
        app->add_option("--jobs", opt.jobs, "fixtures to run concurrently")->capture_default_str();
        app->add_flag("--json", json, "emit JSON");
        rank.attach(app);
    }

    int run() const {
        const auto results = run_corpus(opt, rank.config());
        bool all = true;
        for (const auto& r : results) all = all && r.passed();
        if (json) {
            std::cout << corpus_json(results).dump(2) << '\n';
            return all ? exit_ok : exit_mismatch;
        }
        std::cout << std::left << std::setw(22) << "fixture" << std::right << std::setw(3) << "d" << std::setw(8)
                  << "gamma" << std::setw(8) << "defect" << std::setw(10) << "expected" << std::setw(10) << "seconds"
                  << "  status\n";
        for (const auto& r : results) {
            std::cout << std::left << std::setw(22) << r.fixture->name << std::right << std::setw(3) << r.report.d
                      << std::setw(8) << r.report.e2.gamma << std::setw(8) << r.report.defect << std::setw(10)
                      << r.fixture->defect << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds
                      << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
            if (!r.passed())
                std::cout << "    expected defect " << r.fixture->defect << ", gamma " << r.fixture->gamma
                          << "; got defect " << r.report.defect << ", gamma " << r.report.e2.gamma << '\n';
        }
        std::cout << results.size() << " fixtures, " << (all ? "all PASS" : "MISMATCH") << '\n';
        return all ? exit_ok : exit_mismatch;
    }
};

struct TermsCommand {
    std::string expr;
    std::string vars = "x,y,z,u,v";

    void attach(CLI::App* app) {
        app->add_option("--expr", expr, "polynomial expression")->required();
        app->add_option("--vars", vars, "comma-separated variable names")->capture_default_str();
    }

    int run() const {
        std::cout << emit_term_list(parse_expression(expr, split_csv(vars))) << '\n';
        return exit_ok;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Defect of projective hypersurfaces with isolated singularities"};
    app.require_subcommand(1);

    DefectCommand defect_cmd;
    HodgeCommand hodge_cmd;
    CorpusCommand corpus_cmd;
    TermsCommand terms_cmd;
    auto* defect_app = app.add_subcommand("defect", "compute def(X) for a quintic-style input in P^4");
    auto* hodge_app = app.add_subcommand("hodge", "Euler number and primitive Hodge numbers of a smooth fiber");
    auto* corpus_app = app.add_subcommand("corpus", "run the bundled published examples");
    auto* terms_app = app.add_subcommand("terms", "expand an expression into term-list format");
    defect_cmd.attach(defect_app);
    hodge_cmd.attach(hodge_app);
    corpus_cmd.attach(corpus_app);
    terms_cmd.attach(terms_app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*defect_app) return defect_cmd.run();
        if (*hodge_app) return hodge_cmd.run();
        if (*corpus_app) return corpus_cmd.run();
        if (*terms_app) return terms_cmd.run();
    } catch (const NonHomogeneousError& e) {
        std::cerr << "error: NonHomogeneous: " << e.what() << '\n';
        return exit_input;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
