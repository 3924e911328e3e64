#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ordclust/adversarial.hpp"
#include "ordclust/experiment.hpp"
#include "ordclust/io.hpp"

using namespace ordclust;

namespace {

struct RunArgs {
    BatchConfig config;
    std::string instance;
    std::string generate;
    std::string out;
    std::string summary;
    std::string trace;
    std::string oracle = "auto";
    std::string augment = "zero";
};

void add_batch_options(CLI::App* cmd, RunArgs& a, bool with_algorithm) {
    auto& c = a.config;
    if (with_algorithm) {
        cmd->add_option("--algorithm", c.algorithm, "Algorithm id")
            ->required()
            ->check(CLI::IsMember(algorithm_names()));
    }
    auto* inst = cmd->add_option("--instance", a.instance, "Instance JSON file")->check(CLI::ExistingFile);
    auto* gen = cmd->add_option("--generate", a.generate, "Generated family")->check(CLI::IsMember(family_names()));
    inst->excludes(gen);
    cmd->add_option("--k", c.k, "Number of centers")->check(CLI::PositiveNumber);
    cmd->add_option("--z", c.z, "Exponent of the (k,z) objective")->check(CLI::Range(1.0, 1e9));
    cmd->add_option("--f", c.f, "Facility opening cost")->check(CLI::PositiveNumber);
    cmd->add_option("--trials", c.trials, "Trials per instance");
    cmd->add_option("--seed", c.seed, "Master seed");
    cmd->add_option("--T", c.rounds, "Rounds of the low-query sampler")->check(CLI::PositiveNumber);
    cmd->add_option("--out", a.out, "CSV output (default stdout)");
    cmd->add_option("--summary", a.summary, "JSON summary output");
    cmd->add_option("--trace", a.trace, "JSON lines trace output");
    cmd->add_option("--oracle", a.oracle, "Brute-force optimum")->check(CLI::IsMember({"auto", "skip"}));
    cmd->add_option("--augment", a.augment, "k-center augmentation")->check(CLI::IsMember({"zero", "2k"}));
    cmd->add_option("--rings-log-base", c.log_base, "Base of the logarithms in draw counts and T")
        ->check(CLI::Range(1.000001, 1e9));
    cmd->add_option("--n", c.n, "Points per generated euclidean instance")->check(CLI::PositiveNumber);
    cmd->add_option("--dim", c.dim, "Dimension of generated euclidean instances")->check(CLI::PositiveNumber);
    cmd->add_option("--instances", c.instances, "Number of generated instances");
    cmd->add_option("--threshold", c.success_threshold, "Distortion counted as success in the summary");
    cmd->add_flag("--timing", c.timing, "Add a wall_ms column");
    cmd->add_option("--D", c.D, "Large distance of the tree families");
    cmd->add_option("--alpha", c.alpha, "Bundle growth parameter");
    cmd->add_option("--n-prime", c.n_prime, "Points scale of each bundle gadget");
    cmd->add_option("--cluster-size", c.cluster_size, "Cluster size of the facility family");
    cmd->add_option("--clusters", c.clusters, "Cluster count of the facility family");
}

int run_batch_command(RunArgs& a) {
    auto& c = a.config;
    if (!a.instance.empty()) c.instance_path = a.instance;
    if (!a.generate.empty()) c.family = a.generate;
    c.run_oracle = a.oracle == "auto";
    c.augment = a.augment == "2k" ? Augment::two_k : Augment::zero;

    std::unique_ptr<std::ofstream> trace_file;
    if (!a.trace.empty()) {
        trace_file = std::make_unique<std::ofstream>(a.trace);
        if (!*trace_file) throw std::runtime_error("cannot write " + a.trace);
    }
    const auto records = run_batch(c, trace_file.get());

    if (a.out.empty()) {
        write_csv(std::cout, records, c.timing);
    } else {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        write_csv(out, records, c.timing);
    }
    const Json summary = summary_json(summarize(records, c.success_threshold));
    if (!a.summary.empty()) {
        write_json(a.summary, summary);
    } else {
        std::cerr << summary.dump() << '\n';
    }
    return 0;
}

struct GenerateArgs {
    std::string family = "euclidean";
    std::string out;
    std::string descriptor;
    BatchConfig config;
};

int generate_command(const GenerateArgs& g) {
    const auto& c = g.config;
    Rng rng(instance_seed(c.seed, 0));
    const std::string sidecar = g.descriptor.empty() ? g.out + ".descriptor.json" : g.descriptor;
    if (g.family == "euclidean") {
        save_instance(g.out, uniform_cube_instance(c.n, rng, c.dim));
    } else if (g.family == "tree") {
        auto gen = gen_kcenter_tree({c.k, c.D}, rng);
        save_instance(g.out, gen.instance, &gen.profile);
        write_json(sidecar, descriptor_json(gen.descriptor));
    } else if (g.family == "bundles") {
        auto gen = gen_kmedian_bundles({c.k, c.alpha, c.n_prime, c.D, 1e-6}, rng);
        save_instance(g.out, gen.instance, &gen.profile);
        write_json(sidecar, descriptor_json(gen.descriptor));
    } else {
        auto gen = gen_facility_hard({c.cluster_size, c.clusters, 0.0, 1e-6, c.f}, rng);
        save_instance(g.out, gen.instance, &gen.profile);
        write_json(sidecar, descriptor_json(gen.descriptor));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinal clustering experiments with metered distance queries"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run an algorithm over instances and trials, writing CSV");
    add_batch_options(run, run_args, true);

    RunArgs facility_args;
    facility_args.config.algorithm = "meyerson";
    auto* facility = app.add_subcommand("facility", "Run online facility location trials");
    add_batch_options(facility, facility_args, false);

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "Write one generated instance as JSON");
    generate->add_option("--family", gen_args.family, "Instance family")
        ->check(CLI::IsMember(family_names()));
    generate->add_option("--out", gen_args.out, "Instance JSON output")->required();
    generate->add_option("--descriptor", gen_args.descriptor, "Descriptor sidecar (default <out>.descriptor.json)");
    generate->add_option("--seed", gen_args.config.seed, "Seed");
    generate->add_option("--k", gen_args.config.k, "Tree depth parameter")->check(CLI::PositiveNumber);
    generate->add_option("--n", gen_args.config.n, "Points (euclidean)")->check(CLI::PositiveNumber);
    generate->add_option("--dim", gen_args.config.dim, "Dimension (euclidean)")->check(CLI::PositiveNumber);
    generate->add_option("--D", gen_args.config.D, "Large distance");
    generate->add_option("--alpha", gen_args.config.alpha, "Bundle growth parameter");
    generate->add_option("--n-prime", gen_args.config.n_prime, "Bundle gadget scale");
    generate->add_option("--cluster-size", gen_args.config.cluster_size, "Facility cluster size");
    generate->add_option("--clusters", gen_args.config.clusters, "Facility cluster count");
    generate->add_option("--f", gen_args.config.f, "Facility opening cost")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return run_batch_command(run_args);
        if (*facility) return run_batch_command(facility_args);
        return generate_command(gen_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
