#include <iostream>

#include "CLI11.hpp"
#include "pie/driver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Type checker for .pie files"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Parse and check one or more .pie files");
    std::vector<std::string> files;
    pie::CheckOptions opts;
    bool noPrelude = false;
    std::string normalizeName;
    check->add_option("files", files, ".pie files to check")->required();
    check->add_flag("--dump-types", opts.dumpTypes, "Print every declaration with its checked type");
    check->add_option("--normalize", normalizeName, "Print the normal form of the named declaration");
    check->add_flag("--no-prelude", noPrelude, "Do not declare Void and Null implicitly");
    check->add_option("--budget", opts.budget, "Normalisation step budget")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    opts.prelude = !noPrelude;
    if (!normalizeName.empty()) opts.normalizeName = normalizeName;

    int exit = 0;
    for (const auto& r : pie::runCheck(files, opts)) {
        std::cout << pie::formatReport(r, opts);
        exit = std::max(exit, r.exitCode);
    }
    return exit;
}
