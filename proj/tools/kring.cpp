// Command-line surface for the K-ring pipeline.
//
// kring <validate|shell|present|cohomology|report> [input.kspec] [flags]
//
// Exit codes: 0 conforming, 2 non-conforming, 3 hypothesis failure,
// 4 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kring.hpp"

namespace {

struct CliOptions {
    std::string input_path;
    std::string example;
    std::string order;
    std::string sign;
    std::vector<std::string> extra_t;
    int bound = -1;
    std::string output;
    std::string format = "text";
    bool emit_spec = false;
    bool timings = false;
};

void attach_options(CLI::App* sub, CliOptions& opt) {
    sub->add_option("input", opt.input_path, "input document in the kspec format");
    sub->add_option("--example", opt.example,
                    "built-in generator expression, e.g. simplex(2), hirzebruch(1), "
                    "bott([[0,1],[0,0]]), product(simplex(1),simplex(1))");
    sub->add_option("--order", opt.order, "term order: degrevlex (default) or deglex")
        ->check(CLI::IsMember({"degrevlex", "deglex"}));
    sub->add_option("--sign", opt.sign, "relation sign convention: minus (default) or plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    sub->add_option("--extra-t", opt.extra_t,
                    "extra covector for type (ii) relations, comma-separated integers; repeatable");
    sub->add_option("--bound", opt.bound, "degree bound for the truncated-module fallback")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--output", opt.output, "write the report to this file (atomically)");
    sub->add_option("--format", opt.format, "report format: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--emit-spec", opt.emit_spec,
                  "print the canonical kspec serialization of the input instead of a report");
    sub->add_flag("--timings", opt.timings, "include stage timings in the report");
}

std::vector<kring::Int> parse_covector(const std::string& text) {
    std::vector<kring::Int> t;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("--extra-t: empty entry in '" + text + "'");
        if (!kring::detail::looks_like_integer(cur))
            throw std::invalid_argument("--extra-t: '" + cur + "' is not an integer");
        t.emplace_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush();
    return t;
}

kring::SpecDocument load_document(const CliOptions& opt) {
    if (opt.input_path.empty() == opt.example.empty())
        throw std::invalid_argument("provide exactly one of an input file or --example");
    kring::SpecDocument doc;
    if (!opt.example.empty()) {
        doc = kring::generate_example(opt.example);
    } else {
        doc = kring::parse_spec(kring::read_file(opt.input_path));
    }
    if (!opt.order.empty())
        doc.options.order =
            opt.order == "degrevlex" ? kring::TermOrder::degrevlex : kring::TermOrder::deglex;
    if (!opt.sign.empty())
        doc.options.sign =
            opt.sign == "minus" ? kring::SignConvention::minus : kring::SignConvention::plus;
    if (opt.bound >= 0) doc.options.bound = opt.bound;
    for (const std::string& t : opt.extra_t) doc.options.extra_t.push_back(parse_covector(t));
    return doc;
}

int dispatch(kring::Command cmd, const CliOptions& opt) {
    kring::SpecDocument doc;
    try {
        doc = load_document(opt);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kring::kExitInput;
    }

    int code = 0;
    std::string body;
    if (opt.emit_spec) {
        body = kring::serialize(doc);
    } else {
        kring::Report rep = kring::run(cmd, doc, opt.timings);
        body = opt.format == "json" ? kring::render_json(rep) : kring::render_text(rep);
        code = rep.exit_code;
    }
    try {
        if (opt.output.empty()) {
            std::cout << body;
        } else {
            kring::write_file_atomic(opt.output, body);
        }
    } catch (const std::exception& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kring::kExitInput;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generators-and-relations presentations of torus manifold K-rings"};
    app.require_subcommand(1);

    static const char* kCommands[] = {"validate", "shell", "present", "cohomology", "report"};
    static const char* kDescriptions[] = {
        "check the nerve and the unimodularity condition on every face",
        "find a shelling order, restriction faces, h-vector, and Betti numbers",
        "compute the K-ring presentation, rank certificate, basis, and structure constants",
        "compute the graded cohomology presentation and compare with the Betti numbers",
        "run the full pipeline and emit a complete report",
    };

    CliOptions opts[5];
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(kCommands[i], kDescriptions[i]);
        attach_options(sub, opts[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is an input error.
        return code == 0 ? 0 : kring::kExitInput;
    }

    for (int i = 0; i < 5; ++i) {
        if (app.get_subcommands().size() == 1 &&
            app.get_subcommands().front()->get_name() == kCommands[i]) {
            return dispatch(*kring::parse_command(kCommands[i]), opts[i]);
        }
    }
    std::cerr << "no subcommand selected\n";
    return kring::kExitInput;
}
