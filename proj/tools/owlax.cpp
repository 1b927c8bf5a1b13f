// owlax: validate class diagrams, generate candidate axioms, integrate reviewed
// candidates into an ontology, and serve the same workflow over HTTP.

#include <cstdlib>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "owlax/diagram.hpp"
#include "owlax/generator.hpp"
#include "owlax/service.hpp"
#include "owlax/session.hpp"
#include "owlax/syntax.hpp"

namespace fs = std::filesystem;
using namespace owlax;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Carries an exit code out of a subcommand.
struct Exit {
    int code;
};

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "owlax: " << message << "\n";
    throw Exit{kUsage};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        usage_error("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        usage_error("cannot read '" + path + "'");
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out)
        usage_error("cannot write '" + path + "'");
}

bool same_file(const std::string& a, const std::string& b) {
    std::error_code ec;
    if (fs::exists(a, ec) && fs::exists(b, ec))
        return fs::equivalent(a, b, ec);
    return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

void check_output(const std::string& output, const std::vector<std::string>& inputs) {
    for (const auto& in : inputs)
        if (!in.empty() && same_file(output, in))
            usage_error("output '" + output + "' would overwrite input '" + in + "'");
}

std::optional<PrefixEnvironment> base_iri_option(const std::string& flag) {
    std::string value = flag;
    if (value.empty())
        if (const char* env = std::getenv("OWLAX_BASE_IRI"))
            value = env;
    if (value.empty())
        return std::nullopt;
    try {
        return PrefixEnvironment(value);
    } catch (const Error& e) {
        usage_error(e.what());
    }
}

void print_findings(const ValidationReport& report) {
    for (const auto& f : report.errors)
        std::cout << "ERROR " << f.code << " " << f.element << ": " << f.message << "\n";
    for (const auto& f : report.warnings)
        std::cout << "WARNING " << f.code << " " << f.element << ": " << f.message << "\n";
}

Diagram load_diagram(const std::string& path) {
    const auto text = read_file(path);
    try {
        return diagram_from_json(text);
    } catch (const DiagramFormatError& e) {
        usage_error("malformed diagram '" + path + "': " + e.what());
    }
}

// Loads and validates; prints findings and exits 1 on errors.
Diagram load_valid_diagram(const std::string& path) {
    Diagram d = load_diagram(path);
    auto report = validate_diagram(d);
    if (!report.valid()) {
        print_findings(report);
        throw Exit{kFailed};
    }
    return d;
}

Ontology load_ontology(const std::string& path) {
    const auto text = read_file(path);
    try {
        return parse_functional(text);
    } catch (const Error& e) {
        std::cout << "ERROR " << e.code() << " " << path << ": " << e.what() << "\n";
        throw Exit{kFailed};
    }
}

int cmd_validate(const std::string& diagram_path) {
    auto report = validate_diagram(load_diagram(diagram_path));
    print_findings(report);
    return report.valid() ? kOk : kFailed;
}

int cmd_candidates(const std::string& diagram_path, const std::string& ontology_path, const std::string& output,
                   const std::string& base_iri) {
    check_output(output, {diagram_path, ontology_path});
    auto env = base_iri_option(base_iri);
    Diagram d = load_valid_diagram(diagram_path);
    Ontology o = ontology_path.empty() ? Ontology(env.value_or(PrefixEnvironment{})) : load_ontology(ontology_path);

    auto review = merge_existing(generate(d), o);
    write_file(output, review_to_json(review) + "\n");

    std::size_t existing = 0;
    for (const auto& e : review.entries)
        existing += e.candidate.status == CandidateStatus::Existing;
    std::cout << review.entries.size() << " candidates (" << existing << " existing)\n";
    return kOk;
}

int cmd_integrate(const std::string& diagram_path, const std::string& review_path, const std::string& ontology_path,
                  const std::string& output, const std::string& base_iri) {
    check_output(output, {diagram_path, review_path, ontology_path});
    auto env = base_iri_option(base_iri);
    Diagram d = load_valid_diagram(diagram_path);
    Ontology o = ontology_path.empty() ? Ontology(env.value_or(PrefixEnvironment{})) : load_ontology(ontology_path);
    if (env)
        o.set_prefixes(*env);

    ReviewList review;
    const auto review_text = read_file(review_path);
    try {
        review = review_from_json(review_text, o.prefixes());
    } catch (const ReviewFormatError& e) {
        usage_error("malformed review '" + review_path + "': " + e.what());
    }

    // Every id in the file must name a candidate of this diagram and ontology.
    const auto expected = merge_existing(generate(d), o);
    std::vector<std::string> unknown;
    for (const auto& e : review.entries)
        if (!expected.find(e.candidate.id))
            unknown.push_back(e.candidate.id);
    if (!unknown.empty()) {
        for (const auto& id : unknown)
            std::cout << "ERROR UNKNOWN_CANDIDATE_ID " << id << ": not a candidate of this diagram and ontology\n";
        return kFailed;
    }

    Ontology result = integrate(review, o);
    declare_entities(d, result);
    write_file(output, render_functional(result));
    std::cout << result.size() << " axioms written\n";
    return kOk;
}

int cmd_render(const std::string& ontology_path, const std::string& format) {
    Ontology o = load_ontology(ontology_path);
    if (format == "functional") {
        std::cout << render_functional(o);
    } else {
        for (const auto& axiom : o.axioms())
            std::cout << render_manchester(axiom, o.prefixes()) << "\n";
    }
    return kOk;
}

Service* running_service = nullptr;

void handle_signal(int) {
    if (running_service)
        running_service->stop();
}

int cmd_serve(const std::string& host, int port, const std::string& static_dir, const std::string& state_dir,
              const std::string& base_iri) {
    ServiceConfig config;
    if (auto env = base_iri_option(base_iri))
        config.prefixes = *env;
    if (!static_dir.empty()) {
        if (!fs::is_directory(static_dir))
            usage_error("static directory '" + static_dir + "' does not exist");
        config.static_dir = static_dir;
    }
    if (!state_dir.empty())
        config.state_dir = state_dir;

    std::unique_ptr<Service> service;
    try {
        service = std::make_unique<Service>(std::move(config));
    } catch (const Error& e) {
        std::cerr << "owlax: " << e.what() << "\n";
        return kFailed;
    }
    if (!service->bind(host, port)) {
        std::cerr << "owlax: cannot bind " << host << ":" << port << "\n";
        return kFailed;
    }
    running_service = service.get();
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    std::cerr << "owlax: serving on http://" << host << ":" << port << "/\n";
    service->listen_after_bind();
    running_service = nullptr;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Candidate OWL axioms from ontology class diagrams", "owlax"};
    app.require_subcommand(1);

    std::string diagram, ontology, review, output, base_iri, static_dir, state_dir;
    std::string format = "manchester";
    std::string host = "127.0.0.1";
    int port = 8080;

    auto* validate = app.add_subcommand("validate", "Check a diagram against the allowed node-edge-node configurations");
    validate->add_option("-d,--diagram", diagram, "Diagram JSON file")->required();

    auto* candidates = app.add_subcommand("candidates", "Generate candidate axioms into a review file");
    candidates->add_option("-d,--diagram", diagram, "Diagram JSON file")->required();
    candidates->add_option("--ontology", ontology, "Existing ontology (functional syntax)");
    candidates->add_option("-o,--output", output, "Review file to write")->required();
    candidates->add_option("--base-iri", base_iri, "Default namespace IRI (fallback: OWLAX_BASE_IRI)");

    auto* integrate_cmd = app.add_subcommand("integrate", "Integrate accepted review entries into an ontology");
    integrate_cmd->add_option("-d,--diagram", diagram, "Diagram JSON file")->required();
    integrate_cmd->add_option("-r,--review", review, "Review file")->required();
    integrate_cmd->add_option("--ontology", ontology, "Existing ontology (functional syntax)");
    integrate_cmd->add_option("-o,--output", output, "Ontology file to write")->required();
    integrate_cmd->add_option("--base-iri", base_iri, "Default namespace IRI (fallback: OWLAX_BASE_IRI)");

    auto* render = app.add_subcommand("render", "Print an ontology in Manchester or functional syntax");
    render->add_option("--ontology", ontology, "Ontology file (functional syntax)")->required();
    render->add_option("--format", format, "manchester|functional")
        ->capture_default_str()
        ->check(CLI::IsMember({"manchester", "functional"}));

    auto* serve = app.add_subcommand("serve", "Run the HTTP service for the web UI");
    serve->add_option("--port", port, "Port to listen on")->required()->check(CLI::Range(1, 65535));
    serve->add_option("--host", host, "Interface to bind");
    serve->add_option("--static", static_dir, "Directory of UI assets served at /");
    serve->add_option("--state-dir", state_dir, "Directory for session snapshots");
    serve->add_option("--base-iri", base_iri, "Default namespace IRI (fallback: OWLAX_BASE_IRI)");

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
        if (*validate)
            return cmd_validate(diagram);
        if (*candidates)
            return cmd_candidates(diagram, ontology, output, base_iri);
        if (*integrate_cmd)
            return cmd_integrate(diagram, review, ontology, output, base_iri);
        if (*render)
            return cmd_render(ontology, format);
        if (*serve)
            return cmd_serve(host, port, static_dir, state_dir, base_iri);
    } catch (const Exit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "owlax: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
