// obdd-phase-lab: sampling, solving, compiling and certifying random 2-CNF,
// plus sweeps and plots.

#include "obddlab/certify.hpp"
#include "obddlab/dimacs.hpp"
#include "obddlab/errors.hpp"
#include "obddlab/lab.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/ordering.hpp"
#include "obddlab/plot.hpp"
#include "obddlab/random_models.hpp"
#include "obddlab/sat2.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace obddlab;

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kCapacity = 3 };

struct FormulaArgs {
    std::string input;
    std::string dist = "F2";
    std::optional<std::size_t> n, m;
    std::optional<std::string> delta;
    std::uint64_t seed = 0;
};

void addFormulaOptions(CLI::App* cmd, FormulaArgs& a, bool withInput) {
    if (withInput)
        cmd->add_option("input", a.input, "DIMACS file ('-' for stdin); sampled from the flags when absent");
    cmd->add_option("--dist", a.dist, "F2, H2 or monotone");
    cmd->add_option("--n", a.n, "number of variables");
    cmd->add_option("--m", a.m, "number of clauses");
    cmd->add_option("--delta", a.delta, "clause density; m = round(delta * n)");
    cmd->add_option("--seed", a.seed, "master seed");
}

std::string readAll(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Cnf formulaFrom(const FormulaArgs& a) {
    if (!a.input.empty())
        return parseDimacs(readAll(a.input));
    if (!a.n)
        throw UsageError("give an input file or --n with --m or --delta");
    std::size_t m = 0;
    if (a.m)
        m = *a.m;
    else if (a.delta)
        m = clauseCount(Fraction::parseDecimal(*a.delta), *a.n);
    else
        throw UsageError("--m or --delta is required when sampling");
    return sample(parseDistribution(a.dist), *a.n, m, Seed{a.seed, 0});
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text))
        throw IoError("cannot write '" + out + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random 2-CNF to OBDD laboratory"};
    app.require_subcommand(1);

    FormulaArgs fa;
    std::string order = "sifting", out, config, kind;
    std::size_t capacity = kDefaultNodeCapacity;
    bool dump = false;

    auto* sampleCmd = app.add_subcommand("sample", "write a random formula as DIMACS");
    addFormulaOptions(sampleCmd, fa, false);
    sampleCmd->add_option("--out", out, "output file (default stdout)");

    auto* solveCmd = app.add_subcommand("solve", "2-SAT verdict");
    addFormulaOptions(solveCmd, fa, true);

    auto* compileCmd = app.add_subcommand("compile", "OBDD size under an order strategy");
    addFormulaOptions(compileCmd, fa, true);
    compileCmd->add_option("--order", order, "identity, minfill, bfs or sifting");
    compileCmd->add_option("--capacity", capacity, "node limit");
    compileCmd->add_flag("--dump", dump, "print the diagram");
    compileCmd->add_option("--out", out, "write the dump here instead of stdout");

    auto* certifyCmd = app.add_subcommand("certify", "fooling-set lower bound");
    addFormulaOptions(certifyCmd, fa, true);
    certifyCmd->add_option("--order", order, "identity, minfill, bfs or sifting");
    certifyCmd->add_option("--capacity", capacity, "node limit for sifting and the width check");
    certifyCmd->add_option("--out", out, "output file (default stdout)");

    auto* sweepCmd = app.add_subcommand("sweep", "run a sweep from a JSON config");
    sweepCmd->add_option("--config", config, "config file")->required();
    sweepCmd->add_option("--out", out, "overrides outputPath");

    auto* plotCmd = app.add_subcommand("plot", "render a sweep CSV as SVG");
    std::string csv;
    plotCmd->add_option("csv", csv, "trial CSV")->required();
    plotCmd->add_option("--kind", kind, "satFraction, twRegime, obddSizeMedian or thetaFraction")->required();
    plotCmd->add_option("--out", out, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (sampleCmd->parsed()) {
            emit(writeDimacs(formulaFrom(fa)), out);
        } else if (solveCmd->parsed()) {
            const Cnf f = formulaFrom(fa);
            const SatResult r = solve2Sat(f);
            if (!r.satisfiable) {
                std::cout << "UNSAT\n";
            } else {
                std::cout << "SAT\nv";
                for (const auto& l : r.witness->literals())
                    std::cout << ' ' << l.toDimacs();
                std::cout << " 0\n";
            }
        } else if (compileCmd->parsed()) {
            const Cnf f = formulaFrom(fa);
            const VarOrder pi = heuristicOrder(f, order, fa.seed, capacity);
            const Obdd b = compile(f, pi, capacity);
            std::cout << "size " << b.size() << "\nmodels " << modelCount(b) << '\n';
            if (dump)
                emit(dumpObdd(b), out);
        } else if (certifyCmd->parsed()) {
            const Cnf f = formulaFrom(fa);
            const VarOrder pi = heuristicOrder(f, order, fa.seed, capacity);
            const CertifiedBound cb = certifiedLowerBound(f, pi);
            std::ostringstream os;
            os << "order";
            for (Var v : pi.perm())
                os << ' ' << v;
            os << "\ntheta " << cb.theta.toString() << "\nfloor " << cb.floor << '\n';
            if (cb.certificate) {
                os << serializeCertificate(*cb.certificate);
                const Verdict v = verifyCertificate(f, pi, *cb.certificate);
                os << "verified " << (v.ok ? "yes" : "no " + v.reason) << '\n';
            } else {
                os << "certificate none\n";
            }
            emit(os.str(), out);
        } else if (sweepCmd->parsed()) {
            SweepConfig c = loadSweepConfig(config);
            if (!out.empty())
                c.outputPath = out;
            const auto records = runSweep(c);
            std::cout << records.size() << " trials -> " << c.outputPath << ", " << summaryPathFor(c.outputPath)
                      << '\n';
        } else if (plotCmd->parsed()) {
            plot(csv, parsePlotKind(kind), out);
        }
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
