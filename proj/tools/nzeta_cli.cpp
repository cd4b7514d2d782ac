#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nzeta/problem.hpp"

using namespace nzeta;

namespace {

struct Cli {
    std::string input;
    std::string output;
    std::string zeta_file;
    long prime = 0;
    int precision = 0;
    int terms = 0;
    int transversal = -1;
    int jobs = 1;
    long long budget = 0;
    bool early_stop = false;
    bool dump_reductions = false;
    int max_degree = -1;
    int r = 1;
    int max_r = 2;
    std::vector<std::string> q_coeffs;
};

void add_common(CLI::App* cmd, Cli& c) {
    cmd->add_option("--input", c.input, "problem input file")->required();
    cmd->add_option("--prime", c.prime, "override the prime p");
    cmd->add_option("--output", c.output, "write the structured report here");
    cmd->add_option("--budget", c.budget, "enumeration budget for point counts");
    cmd->add_option("--jobs", c.jobs, "worker threads");
}

RunOptions options_from(const Cli& c) {
    RunOptions opt;
    if (c.prime) opt.prime = Int(c.prime);
    opt.precision = c.precision;
    opt.terms = c.terms;
    opt.transversal = c.transversal;
    opt.budget = c.budget;
    opt.jobs = c.jobs;
    opt.early_stop = c.early_stop;
    opt.dump_reductions = c.dump_reductions;
    opt.max_degree = c.max_degree;
    opt.count_r = c.r;
    opt.verify_max_r = c.max_r;
    return opt;
}

void emit(const Report& rep, const std::string& output) {
    if (!output.empty()) rep.write(output);
    std::cout << rep.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta functions of nodal hypersurfaces over prime fields"};
    app.require_subcommand(1);
    Cli c;

    CLI::App* analyze = app.add_subcommand("analyze", "dimension tables, tau, gate, E2 basis");
    add_common(analyze, c);
    analyze->add_option("--max-degree", c.max_degree, "largest coefficient degree in the table");

    CLI::App* zeta = app.add_subcommand("zeta", "full pipeline to the zeta function");
    add_common(zeta, c);
    zeta->add_option("--precision", c.precision, "p-adic working digits D");
    zeta->add_option("--terms", c.terms, "series terms M");
    zeta->add_option("--transversal", c.transversal, "pivot variable index");
    zeta->add_flag("--early-stop", c.early_stop, "stop when columns are stable twice");
    zeta->add_flag("--dump-reductions", c.dump_reductions, "per-term exact coordinates");

    CLI::App* count = app.add_subcommand("count", "brute-force point count over F_{p^r}");
    add_common(count, c);
    count->add_option("--r", c.r, "extension degree");

    CLI::App* verify = app.add_subcommand("verify", "check a zeta output against counts");
    add_common(verify, c);
    verify->add_option("--max-r", c.max_r, "verify counts for r = 1..R");
    verify->add_option("--q-coeffs", c.q_coeffs, "Q(T) coefficients, ascending");
    verify->add_option("--zeta-file", c.zeta_file, "read Q(T) from a zeta report");

    CLI11_PARSE(app, argc, argv);

    try {
        ProblemInput in = parse_problem_file(c.input);
        RunOptions opt = options_from(c);

        if (analyze->parsed()) {
            AnalyzeOutcome out = run_analyze(in, opt);
            emit(out.report, c.output);
        } else if (zeta->parsed()) {
            ZetaOutcome out = run_zeta(in, opt);
            emit(out.report, c.output);
        } else if (count->parsed()) {
            Report rep = run_count(in, opt);
            emit(rep, c.output);
        } else if (verify->parsed()) {
            std::vector<Int> q;
            std::vector<int> de;
            if (!c.q_coeffs.empty()) {
                for (const auto& s : c.q_coeffs) q.emplace_back(s);
                de.assign(static_cast<size_t>(in.n), 1);
            } else if (!c.zeta_file.empty()) {
                std::ifstream f(c.zeta_file);
                require(f.good(), ErrorCode::Parse, "cannot open " + c.zeta_file);
                std::string line;
                while (std::getline(f, line)) {
                    auto eq = line.find(" = ");
                    if (eq == std::string::npos) continue;
                    std::string key = line.substr(0, eq), val = line.substr(eq + 3);
                    std::istringstream vs(val);
                    if (key == "q_coefficients") {
                        std::string tok;
                        while (vs >> tok) q.emplace_back(tok);
                    } else if (key == "denominator_exponents") {
                        int e;
                        while (vs >> e) de.push_back(e);
                    }
                }
                require(!q.empty(), ErrorCode::Parse, "zeta file lacks q_coefficients");
            } else {
                fail(ErrorCode::Parse, "verify needs --q-coeffs or --zeta-file");
            }
            Report rep = run_verify(in, opt, q, de);
            emit(rep, c.output);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
