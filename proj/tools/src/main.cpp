#include "ratmod_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ratmod::cli;

std::vector<std::string> split_triple(const std::string& text)
{
    std::vector<std::string> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

int emit(const Report& r, const std::string& output)
{
    const std::string text = dump(r);
    if (output.empty()) {
        std::cout << text;
    }
    else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "ratmod: cannot write " << output << "\n";
            return 1;
        }
        out << text;
    }
    for (const auto& v : r.violations)
        std::cerr << "ratmod: " << (r.exit_code == 0 ? "violation" : r.status) << ": " << v << "\n";
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational models of complements and configuration spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    std::optional<int> max_degree;
    app.add_option("-o,--output", output, "write the JSON report here instead of stdout");
    app.add_option("--max-degree", max_degree, "highest degree reported");

    InputOptions in;
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", in.input, "presentation TOML")->required(); };
    CLI::App* verify = app.add_subcommand("verify", "check the CDGA and Poincare duality axioms");
    CLI::App* cohomology = app.add_subcommand("cohomology", "Betti numbers and cohomology ring");
    CLI::App* series = app.add_subcommand("series", "Poincare series");
    add_input(verify);
    add_input(cohomology);
    add_input(series);

    MasseyOptions massey;
    CLI::App* massey_cmd = app.add_subcommand("massey", "triple Massey products");
    massey_cmd->add_option("input", massey.input, "presentation TOML")->required();
    std::string triple;
    massey_cmd->add_option("--triple", triple, "three comma-separated cocycles, e.g. \"[x], 2*[y], [z]\"");
    massey_cmd->add_flag("--auto", massey.search, "search for nontrivial triples");

    DiskBundleOptions disk;
    CLI::App* disk_cmd = app.add_subcommand("conf2-disk-bundle", "Conf(W,2) for a disk bundle W over a closed manifold");
    disk_cmd->add_option("--base", disk.base, "oriented presentation of the base")->required();
    disk_cmd->add_option("--euler", disk.euler, "Euler class as a polynomial in the base generators")->required();
    disk_cmd->add_option("--rank", disk.rank, "rank of the bundle (even)")->required();
    disk_cmd->add_option("--massey", disk.massey, "none or auto")->check(CLI::IsMember({"none", "auto"}));
    disk_cmd->add_option("--check-presentation", disk.check_presentation, "TOML ring presentation to verify");
    disk_cmd->add_flag("--truncate", disk.truncate, "truncate the model above degree 2n-3");

    PuncturedOptions punct;
    CLI::App* punct_cmd = app.add_subcommand("conf2-punctured", "Conf(M minus a disk, 2) for a closed manifold M");
    punct_cmd->add_option("--manifold", punct.manifold, "oriented presentation")->required();
    punct_cmd->add_flag("--truncate", punct.truncate, "truncate the model above degree 2n-3");

    PrettyOptions pretty;
    CLI::App* pretty_cmd = app.add_subcommand("conf2-pretty", "Conf(W,2) from a model P -> Q of (W, boundary)");
    pretty_cmd->add_option("--source", pretty.source, "oriented presentation of P")->required();
    pretty_cmd->add_option("--target", pretty.target, "presentation of Q")->required();
    pretty_cmd->add_option("--map", pretty.map, "TOML [images] of the generators of P")->required();
    pretty_cmd->add_flag("--truncate", pretty.truncate, "truncate the model above degree 2n-3");

    ComplementOptions comp;
    CLI::App* comp_cmd = app.add_subcommand("complement", "model of W minus K");
    comp_cmd->add_option("--ambient", comp.ambient, "presentation of a model A of W")->required();
    comp_cmd->add_option("--fiber", comp.fiber, "TOML generators (name, degree, image) of Q")->required();
    comp_cmd->add_option("--n", comp.n, "dimension of W")->required();
    comp_cmd->add_option("--k", comp.k, "dimension of K")->required();
    comp_cmd->add_option("--r", comp.r, "connectivity of K -> W and of the boundary inclusion")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    in.max_degree = massey.max_degree = disk.max_degree = punct.max_degree = pretty.max_degree = comp.max_degree =
        max_degree;
    if (*verify)
        return emit(run_verify(in), output);
    if (*cohomology)
        return emit(run_cohomology(in), output);
    if (*series)
        return emit(run_series(in), output);
    if (*massey_cmd) {
        massey.triple = split_triple(triple);
        if (massey.search == !massey.triple.empty()) {
            std::cerr << "ratmod: massey needs exactly one of --triple or --auto\n";
            return 1;
        }
        return emit(run_massey(massey), output);
    }
    if (*disk_cmd)
        return emit(run_conf2_disk_bundle(disk), output);
    if (*punct_cmd)
        return emit(run_conf2_punctured(punct), output);
    if (*pretty_cmd)
        return emit(run_conf2_pretty(pretty), output);
    return emit(run_complement(comp), output);
}
