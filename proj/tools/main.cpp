#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leibniz/commands.hpp"

namespace {

using namespace leibniz;

struct Cli {
    std::string file;
    std::string out_path;
    std::string backend_str;
    std::string element_text;
    double tolerance = 1e-9;
    bool allow_invalid = false;
};

CommandOptions make_options(const Cli& cli) {
    CommandOptions opt;
    opt.tol = TolerancePolicy::scaled(cli.tolerance);
    if (cli.backend_str == "exact") opt.force_backend = Backend::exact;
    if (cli.backend_str == "float") opt.force_backend = Backend::floating;
    opt.allow_invalid = cli.allow_invalid;
    return opt;
}

void emit(const io::json& report, const Cli& cli) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (cli.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cli.out_path);
        if (!out) throw parse_error("cannot write to " + cli.out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural invariants of finite-dimensional complex Leibniz algebras"};
    app.require_subcommand(1);
    Cli cli;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", cli.file, "algebra description (JSON)")->required();
        sub->add_option("--tolerance", cli.tolerance,
                        "float-backend comparison tolerance; scales every threshold "
                        "proportionally (default 1e-9)");
        sub->add_option("--backend", cli.backend_str,
                        "force the computation backend; exact input may be demoted to "
                        "float, never the reverse")
            ->check(CLI::IsMember({"exact", "float"}));
        sub->add_flag("--allow-invalid", cli.allow_invalid,
                      "analyze the algebra even if its tensor fails the Leibniz identity");
        sub->add_option("--out", cli.out_path, "write the JSON report here instead of stdout");
        return sub;
    };

    CLI::App* c_check =
        add_common(app.add_subcommand("check", "verify the Leibniz identity on the tensor"));
    CLI::App* c_classify = add_common(app.add_subcommand(
        "classify", "isomorphism class of a 3-dimensional cyclic algebra"));
    CLI::App* c_analyze =
        add_common(app.add_subcommand("analyze", "full structural report"));
    CLI::App* c_series = add_common(
        app.add_subcommand("series", "lower central, derived, and right-normed series"));
    CLI::App* c_engel = add_common(app.add_subcommand(
        "engel", "Engel subalgebra and Fitting decomposition for one element"));
    c_engel->add_option("--element", cli.element_text, "comma-separated coordinates")
        ->required();
    CLI::App* c_cartan = add_common(app.add_subcommand(
        "cartan", "Cartan subalgebra of a cyclic algebra with its normalizers"));
    CLI::App* c_maximals = add_common(app.add_subcommand(
        "maximals", "maximal subalgebras, Frattini subalgebra, ideal status"));
    CLI::App* c_derivations =
        add_common(app.add_subcommand("derivations", "derivation algebra basis"));
    CLI::App* c_killing = add_common(
        app.add_subcommand("killing", "Killing form, its radical, degeneracy flags"));
    CLI::App* c_is_cyclic =
        add_common(app.add_subcommand("is-cyclic", "search for a single generator"));

    CLI11_PARSE(app, argc, argv);

    try {
        io::ParsedAlgebra parsed = io::load_algebra_file(cli.file);
        CommandOptions opt = make_options(cli);
        CommandOutcome out;
        if (app.got_subcommand(c_check)) out = cmd_check(parsed, opt);
        else if (app.got_subcommand(c_classify)) out = cmd_classify(parsed, opt);
        else if (app.got_subcommand(c_analyze)) out = cmd_analyze(parsed, opt);
        else if (app.got_subcommand(c_series)) out = cmd_series(parsed, opt);
        else if (app.got_subcommand(c_engel)) out = cmd_engel(parsed, cli.element_text, opt);
        else if (app.got_subcommand(c_cartan)) out = cmd_cartan(parsed, opt);
        else if (app.got_subcommand(c_maximals)) out = cmd_maximals(parsed, opt);
        else if (app.got_subcommand(c_derivations)) out = cmd_derivations(parsed, opt);
        else if (app.got_subcommand(c_killing)) out = cmd_killing(parsed, opt);
        else if (app.got_subcommand(c_is_cyclic)) out = cmd_is_cyclic(parsed, opt);
        emit(out.report, cli);
        return out.exit_code;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const dimension_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const backend_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const math_error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return exit_property_failure;
    }
}
