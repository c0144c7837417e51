#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "commands.hpp"

using namespace cli;

namespace {

struct Flags {
    std::string input, inline_json, format = "json";
    long seed = 0, cap_stage = 0, cap_degree = 0, truncation = 0, threads = 1;
    std::string f, g, v;
    long m = 0, r = 0;
};

json read_input(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

const std::map<std::string, std::string> kHelp = {
    {"hilbert", "Hilbert basis of the normalization"},
    {"normalize", "normalization n(M) and normality test"},
    {"seminormalize", "seminormalization sn(M) with the adjoined elements per step"},
    {"interior", "interior submonoid M_*: membership and truncated irreducibles"},
    {"region", "the submonoid M(W) over a region of the cross-section"},
    {"invert-extremal", "quotient by an extremal generator made invertible"},
    {"stage", "membership in a stage of the dilation tower"},
    {"excision-witness", "decompose a_i = b_i + u + v inside a dilation stage"},
    {"check-pyramidal", "test whether M in N is a pyramidal extension"},
    {"check-polarized", "verify a polarized monoid (t, Gamma, N)"},
    {"antipode", "antipodal polarized monoid and its scheme fan"},
    {"approx-b", "nested polarized approximations of a pyramidal extension"},
    {"bipyramid-approx", "approximation across a bipyramidal split"},
    {"birkhoff", "Birkhoff factorization of an invertible Laurent matrix"},
    {"interval", "polarization interval of a Laurent matrix"},
    {"lambda-check", "membership of a monomial matrix in a Lambda ring"},
    {"tilde-c", "apply the endomorphism c~ and its minimal exponent"},
    {"witt add", "sum of Witt vectors (power series product)"},
    {"witt star", "Witt product"},
    {"witt ghost", "ghost components"},
    {"witt from-ghost", "Witt vector from ghost components"},
    {"witt expand", "factor expansion f = prod (1 - r_n T^n)"},
    {"witt degree", "filtration degree"},
    {"classify-p", "classify a polytope by iterated pyramids and bipyramids"},
    {"enumerate-types", "all classification types in a dimension with witnesses"},
    {"corner", "corner cone of a normal monoid at a vertex ray"},
};

std::string help_for(const std::string& name) {
    auto it = kHelp.find(name);
    return it == kHelp.end() ? "run " + name : it->second;
}

void common_options(CLI::App* sub, Flags& fl) {
    sub->add_option("--input", fl.input, "JSON input file, - for stdin");
    sub->add_option("--json", fl.inline_json, "inline JSON input");
    sub->add_option("--format", fl.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", fl.seed, "seed for randomized searches");
    sub->add_option("--cap-stage", fl.cap_stage, "largest dilation stage searched");
    sub->add_option("--cap-degree", fl.cap_degree, "degree bound for truncated enumerations");
    sub->add_option("--truncation", fl.truncation, "default Witt truncation");
}

bool given(const CLI::App* sub, const std::string& name) {
    const CLI::Option* o = sub->get_option_no_throw(name);
    return o && o->count() > 0;
}

// Flags given on the command line, validated by Config::merge.
json config_flags(const CLI::App* sub, const Flags& fl) {
    json c = json::object();
    if (given(sub, "--seed")) c["seed"] = fl.seed;
    if (given(sub, "--cap-stage")) c["cap_stage"] = fl.cap_stage;
    if (given(sub, "--cap-degree")) c["cap_degree"] = fl.cap_degree;
    if (given(sub, "--truncation")) c["truncation"] = fl.truncation;
    return c;
}

void emit(const json& report, const std::string& format) {
    if (format == "table")
        std::cout << render_table(report);
    else
        std::cout << report.dump(2) << "\n";
}

int run_single(const std::string& command, const CLI::App* sub, const Flags& fl) {
    Job job;
    job.command = command;
    try {
        job.config.merge(config_flags(sub, fl));
        if (!fl.input.empty() && !fl.inline_json.empty()) throw InputError("give --input or --json, not both");
        if (!fl.input.empty()) job.input = read_input(fl.input);
        if (!fl.inline_json.empty()) {
            try {
                job.input = json::parse(fl.inline_json);
            } catch (const json::parse_error& e) {
                throw InputError(std::string("malformed inline JSON: ") + e.what());
            }
        }
        if (!job.input.is_object()) throw InputError("input must be a JSON object");
        if (given(sub, "--f")) job.input["f"] = fl.f;
        if (given(sub, "--g")) job.input["g"] = fl.g;
        if (given(sub, "--m")) job.input["m"] = fl.m;
        if (given(sub, "--r")) job.input["r"] = fl.r;
        if (given(sub, "--v")) {
            json v = json::array();
            std::stringstream ss(fl.v);
            for (std::string item; std::getline(ss, item, ',');) v.push_back(item);
            job.input["v"] = v;
        }
    } catch (const Error& e) {
        Outcome o = failure(job, "input", e.what());
        emit(o.report, fl.format);
        return o.exit_code;
    }
    Outcome o = run(job);
    emit(o.report, fl.format);
    return o.exit_code;
}

int run_batch(const CLI::App* sub, const Flags& fl) {
    std::vector<Job> jobs;
    std::vector<Outcome> outcomes;
    try {
        if (fl.threads < 1 || fl.threads > 64) throw InputError("--threads must lie in [1, 64]");
        if (fl.input.empty()) throw InputError("batch needs --input");
        Config defaults;
        defaults.merge(config_flags(sub, fl));
        json arr = read_input(fl.input);
        if (!arr.is_array()) throw InputError("a batch file is a JSON array of jobs");
        std::string base = fl.input == "-" ? "" : std::filesystem::path(fl.input).parent_path().string();
        for (auto& j : arr) jobs.push_back(parse_job(j, defaults, base));
    } catch (const Error& e) {
        Job job;
        job.command = "batch";
        emit(failure(job, "input", e.what()).report, fl.format);
        return 2;
    }
    // Each job writes only its own slot, so the output order is the file order.
    outcomes.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < jobs.size();) outcomes[i] = run(jobs[i]);
    };
    std::vector<std::thread> pool;
    for (long k = 0; k < fl.threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int code = 0;
    json reports = json::array();
    for (auto& o : outcomes) {
        code = std::max(code, o.exit_code);
        reports.push_back(o.report);
    }
    if (fl.format == "table") {
        for (size_t i = 0; i < outcomes.size(); ++i) std::cout << (i ? "\n" : "") << render_table(reports[i]);
    } else {
        json doc = {{"schema", kSchema}, {"version", version()}, {"reports", reports}, {"exit_code", code}};
        std::cout << doc.dump(2) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torkit: exact toric monoid, Laurent matrix and Witt vector computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());
    Flags fl;
    std::vector<std::pair<std::string, CLI::App*>> subs;

    for (auto& name : command_names()) {
        if (name.rfind("witt ", 0) == 0) continue;
        CLI::App* sub = app.add_subcommand(name, help_for(name));
        common_options(sub, fl);
        if (name == "enumerate-types") sub->add_option("--r", fl.r, "dimension");
        subs.emplace_back(name, sub);
    }
    CLI::App* witt = app.add_subcommand("witt", "truncated big Witt vectors over Q");
    witt->require_subcommand(1);
    for (auto& name : command_names()) {
        if (name.rfind("witt ", 0) != 0) continue;
        CLI::App* sub = witt->add_subcommand(name.substr(5), help_for(name));
        common_options(sub, fl);
        sub->add_option("--f", fl.f, "Witt vector, e.g. 1-2T+T^3");
        sub->add_option("--g", fl.g, "second Witt vector");
        sub->add_option("--m", fl.m, "truncation");
        sub->add_option("--v", fl.v, "comma-separated ghost components");
        subs.emplace_back(name, sub);
    }
    CLI::App* batch = app.add_subcommand("batch", "run a JSON array of jobs");
    common_options(batch, fl);
    batch->add_option("--threads", fl.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version exit 0; any other parse failure is an input error
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*batch) return run_batch(batch, fl);
    for (auto& [name, sub] : subs)
        if (*sub) return run_single(name, sub, fl);
    return 2;
}
