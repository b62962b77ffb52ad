// Command-line front end: exact computations in the jet and higher
// tangent groups of a Lie (or Leibniz) algebra, plus the verification
// suites. All input and output is JSON text with "p/q" rationals.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jetgroups/checks.hpp"
#include "jetgroups/cocycles.hpp"
#include "jetgroups/errors.hpp"
#include "jetgroups/io.hpp"
#include "jetgroups/jet.hpp"
#include "jetgroups/numbers.hpp"
#include "jetgroups/partitions.hpp"
#include "jetgroups/tangent.hpp"

namespace {

using namespace jetgroups;

constexpr int kJetOrderCap = 20;
constexpr int kTangentOrderCap = 8;

// JETGROUPS_MAX_K can lower (never raise) the order caps.
int env_cap(int hard_cap) {
    const char* raw = std::getenv("JETGROUPS_MAX_K");
    if (!raw) return hard_cap;
    try {
        const int v = std::stoi(raw);
        return v < hard_cap ? v : hard_cap;
    } catch (const std::exception&) {
        throw InputError("JETGROUPS_MAX_K must be an integer");
    }
}

void require_order(int k, int cap, const char* what) {
    if (k < 1 || k > cap)
        throw InputError(std::string(what) + " order k must be in 1.." + std::to_string(cap));
}

Side parse_side(const std::string& s) {
    if (s == "right") return Side::right;
    if (s == "left") return Side::left;
    throw InputError("side must be right or left");
}

JetElement load_jet(const std::string& path, const AlgebraPtr& algebra, int expect_k,
                    const std::string* expect_side) {
    JetElement j = parse_jet_json(read_file(path), algebra);
    if (expect_k > 0 && j.k() != expect_k)
        throw InputError(path + ": jet order does not match --k");
    if (expect_side && j.side() != parse_side(*expect_side))
        throw InputError(path + ": trivialization side does not match --side");
    require_order(j.k(), env_cap(kJetOrderCap), "jet");
    return j;
}

TangentElement load_tangent(const std::string& path, const AlgebraPtr& algebra) {
    TangentElement t = parse_tangent_json(read_file(path), algebra);
    require_order(t.k(), env_cap(kTangentOrderCap), "tangent");
    return t;
}

struct CheckArgs {
    std::string algebra;
    int k = 0;
    int trials = 50;
    std::uint64_t seed = 1;
};

CheckOptions to_options(const CheckArgs& args) {
    CheckOptions opts;
    opts.trials = args.trials;
    opts.triples = 100;
    opts.seed = args.seed;
    if (args.k > 0) {
        opts.max_jet_order = std::min(args.k, 5);
        opts.max_tangent_order = std::min(args.k, 4);
        opts.max_oracle_order = std::min(args.k, 6);
        opts.max_cocycle_order = std::min(std::max(args.k, 2), 5);
    }
    return opts;
}

std::vector<AlgebraPtr> check_targets(const std::string& name) {
    if (!name.empty()) return {load_algebra(name)};
    std::vector<AlgebraPtr> out;
    for (const char* builtin :
         {"sl2", "heis3", "so3", "nilpotent_upper(4)", "abelian(2)", "leibniz2"})
        out.push_back(AlgebraSpec::builtin(builtin));
    return out;
}

int report(const std::vector<CheckResult>& results) {
    print_results(std::cout, results);
    const bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in jet groups J^kG and higher tangent groups T^kG"};
    app.require_subcommand(1);

    // partitions
    auto* partitions_cmd = app.add_subcommand("partitions", "ordered set partitions of {1..n}");
    partitions_cmd->require_subcommand(1);
    int part_n = 0;
    std::vector<int> part_sizes;
    auto* part_list = partitions_cmd->add_subcommand("list", "enumerate P_n");
    part_list->add_option("--n", part_n, "size of the ground set")->required();
    part_list->add_option("--sizes", part_sizes, "restrict to a block-size profile")
        ->delimiter(',');
    auto* part_count = partitions_cmd->add_subcommand("count", "count via the binomial product");
    part_count->add_option("--sizes", part_sizes, "block-size profile")
        ->delimiter(',')
        ->required();

    // jet
    auto* jet_cmd = app.add_subcommand("jet", "jet group J^kG");
    jet_cmd->require_subcommand(1);
    std::string algebra_name, side_name = "right";
    int order = 0, pure_i = 0, pure_j = 0;
    std::vector<std::string> files;
    auto add_common = [&](CLI::App* cmd, int nfiles, bool with_side) {
        cmd->add_option("--algebra", algebra_name, "builtin name or algebra JSON file")->required();
        cmd->add_option("--k", order, "jet order (validated against element files)");
        if (with_side) cmd->add_option("--side", side_name, "right or left trivialization");
        cmd->add_option("files", files, "element JSON files")->expected(nfiles);
    };
    auto* jet_mul = jet_cmd->add_subcommand("mul", "multiply two jets");
    add_common(jet_mul, 2, true);
    auto* jet_inv = jet_cmd->add_subcommand("inv", "invert a jet");
    add_common(jet_inv, 1, true);
    auto* jet_pure = jet_cmd->add_subcommand("pure", "product of two pure elements");
    jet_pure->add_option("--algebra", algebra_name)->required();
    jet_pure->add_option("--i", pure_i, "slot of the first pure element")->required();
    jet_pure->add_option("--j", pure_j, "slot of the second pure element")->required();
    jet_pure->add_option("--k", order, "jet order")->required();
    jet_pure->add_option("files", files, "two algebra-element JSON files")->expected(2);

    // tangent
    auto* tangent_cmd = app.add_subcommand("tangent", "higher tangent group T^kG");
    tangent_cmd->require_subcommand(1);
    std::vector<int> sigma_image;
    auto* tan_mul = tangent_cmd->add_subcommand("mul", "multiply two tangent elements");
    tan_mul->add_option("--algebra", algebra_name)->required();
    tan_mul->add_option("files", files)->expected(2);
    auto* tan_inv = tangent_cmd->add_subcommand("inv", "invert a tangent element");
    tan_inv->add_option("--algebra", algebra_name)->required();
    tan_inv->add_option("files", files)->expected(1);
    auto* tan_permute = tangent_cmd->add_subcommand("permute", "apply the S_k action");
    tan_permute->add_option("--algebra", algebra_name)->required();
    tan_permute->add_option("--sigma", sigma_image, "permutation image sigma(1),...,sigma(k)")
        ->delimiter(',')
        ->required();
    tan_permute->add_option("files", files)->expected(1);
    auto* tan_embed = tangent_cmd->add_subcommand("embed", "embed a jet as an S_k fixed point");
    tan_embed->add_option("--algebra", algebra_name)->required();
    tan_embed->add_option("files", files, "jet element JSON file")->expected(1);
    auto* tan_project = tangent_cmd->add_subcommand("project", "project a symmetric element to J^kG");
    tan_project->add_option("--algebra", algebra_name)->required();
    tan_project->add_option("files", files)->expected(1);
    auto* tan_factor = tangent_cmd->add_subcommand("factor", "decompose into pure elements");
    tan_factor->add_option("--algebra", algebra_name)->required();
    tan_factor->add_option("files", files)->expected(1);

    // cocycle
    auto* cocycle_cmd = app.add_subcommand("cocycle", "extension cocycles of J^kG -> J^{k-1}G");
    cocycle_cmd->require_subcommand(1);
    auto* coc_group = cocycle_cmd->add_subcommand("group", "group 2-cocycle c_k");
    coc_group->add_option("--algebra", algebra_name)->required();
    coc_group->add_option("--k", order, "extension order k (inputs have order k-1)")->required();
    coc_group->add_option("files", files, "two jet element JSON files")->expected(2);
    auto* coc_algebra = cocycle_cmd->add_subcommand("algebra", "Lie algebra 2-cocycle sigma_k");
    coc_algebra->add_option("--algebra", algebra_name)->required();
    coc_algebra->add_option("--k", order, "extension order k (inputs have order k-1)")->required();
    coc_algebra->add_option("files", files, "two jet-algebra element JSON files")->expected(2);

    // check
    auto* check_cmd = app.add_subcommand("check", "verification suites");
    check_cmd->require_subcommand(1);
    CheckArgs check_args;
    for (const char* sub : {"all", "group-axioms", "oracle", "cocycles", "partitions"}) {
        auto* c = check_cmd->add_subcommand(sub);
        if (std::string(sub) != "partitions") {
            c->add_option("--algebra", check_args.algebra, "builtin name or algebra JSON file");
            c->add_option("--k", check_args.k, "cap the verified orders");
            c->add_option("--trials", check_args.trials, "random trials per property");
            c->add_option("--seed", check_args.seed, "random seed");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (part_list->parsed()) {
            if (part_n < 1 || part_n > 12) throw InputError("partitions: --n must be in 1..12");
            std::vector<Partition> out;
            if (part_sizes.empty()) {
                out = enumerate_partitions(part_n);
            } else {
                out = partitions_with_sizes(part_n, Composition(part_sizes));
            }
            std::cout << "[";
            for (std::size_t i = 0; i < out.size(); ++i)
                std::cout << (i ? ", " : "") << "\"" << out[i].str() << "\"";
            std::cout << "]\n";
            return 0;
        }
        if (part_count->parsed()) {
            std::cout << count_with_sizes(Composition(part_sizes)).get_str() << "\n";
            return 0;
        }

        if (jet_mul->parsed() || jet_inv->parsed()) {
            const AlgebraPtr algebra = load_algebra(algebra_name);
            const JetElement a = load_jet(files[0], algebra, order, &side_name);
            if (jet_mul->parsed()) {
                const JetElement b = load_jet(files[1], algebra, order, &side_name);
                std::cout << jet_to_json(jet_multiply(a, b)) << "\n";
            } else {
                std::cout << jet_to_json(jet_inverse(a)) << "\n";
            }
            return 0;
        }
        if (jet_pure->parsed()) {
            const AlgebraPtr algebra = load_algebra(algebra_name);
            require_order(order, env_cap(kJetOrderCap), "jet");
            const AlgebraElement x = parse_element_json(read_file(files[0]), algebra);
            const AlgebraElement y = parse_element_json(read_file(files[1]), algebra);
            std::cout << jet_to_json(pure_product(algebra, order, pure_i, x, pure_j, y)) << "\n";
            return 0;
        }

        if (tan_mul->parsed() || tan_inv->parsed() || tan_permute->parsed() ||
            tan_project->parsed() || tan_factor->parsed()) {
            const AlgebraPtr algebra = load_algebra(algebra_name);
            const TangentElement a = load_tangent(files[0], algebra);
            if (tan_mul->parsed()) {
                const TangentElement b = load_tangent(files[1], algebra);
                std::cout << tangent_to_json(tangent_multiply(a, b)) << "\n";
            } else if (tan_inv->parsed()) {
                std::cout << tangent_to_json(tangent_inverse(a)) << "\n";
            } else if (tan_permute->parsed()) {
                std::cout << tangent_to_json(permute(Permutation(sigma_image), a)) << "\n";
            } else if (tan_project->parsed()) {
                std::cout << jet_to_json(project_jet(a)) << "\n";
            } else {
                const auto factors = factor_pure(a);
                std::cout << "[";
                for (std::size_t i = 0; i < factors.size(); ++i)
                    std::cout << (i ? ",\n" : "\n") << tangent_to_json(factors[i]);
                std::cout << "\n]\n";
            }
            return 0;
        }
        if (tan_embed->parsed()) {
            const AlgebraPtr algebra = load_algebra(algebra_name);
            const JetElement j = parse_jet_json(read_file(files[0]), algebra);
            require_order(j.k(), env_cap(kTangentOrderCap), "tangent");
            std::cout << tangent_to_json(embed_jet(j)) << "\n";
            return 0;
        }

        if (coc_group->parsed()) {
            const AlgebraPtr algebra = load_algebra(algebra_name);
            require_order(order, env_cap(kJetOrderCap), "jet");
            if (order < 2) throw InputError("cocycle: --k must be at least 2");
            const JetElement a = load_jet(files[0], algebra, order - 1, nullptr);
            const JetElement b = load_jet(files[1], algebra, order - 1, nullptr);
            std::cout << element_to_json(group_cocycle(order, a, b)) << "\n";
            return 0;
        }
        if (coc_algebra->parsed()) {
            const AlgebraPtr algebra = load_algebra(algebra_name);
            require_order(order, env_cap(kJetOrderCap), "jet");
            if (order < 2) throw InputError("cocycle: --k must be at least 2");
            const JetAlgebraElement a = parse_jet_algebra_json(read_file(files[0]), algebra);
            const JetAlgebraElement b = parse_jet_algebra_json(read_file(files[1]), algebra);
            if (a.k() != order - 1 || b.k() != order - 1)
                throw InputError("cocycle: elements must have order k-1");
            std::cout << element_to_json(algebra_cocycle(order, a, b)) << "\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            CheckOptions opts = to_options(check_args);
            const std::string sub = check_cmd->get_subcommands().front()->get_name();
            if (sub == "partitions") return report(check_partitions());
            std::vector<CheckResult> results;
            if (sub == "all") {
                if (check_args.algebra.empty()) {
                    results = check_all(opts);
                } else {
                    results = check_partitions();
                    auto golden = check_golden(opts);
                    results.insert(results.end(), golden.begin(), golden.end());
                    for (const AlgebraPtr& algebra : check_targets(check_args.algebra))
                        for (auto&& suite :
                             {check_group_axioms(algebra, opts), check_oracle(algebra, opts),
                              check_cocycles(algebra, opts), check_pure(algebra, opts),
                              check_fixed_point(algebra, opts), check_affine(algebra, opts)})
                            results.insert(results.end(), suite.begin(), suite.end());
                }
            } else {
                for (const AlgebraPtr& algebra : check_targets(check_args.algebra)) {
                    std::vector<CheckResult> suite;
                    if (sub == "group-axioms") suite = check_group_axioms(algebra, opts);
                    if (sub == "oracle") suite = check_oracle(algebra, opts);
                    if (sub == "cocycles") suite = check_cocycles(algebra, opts);
                    results.insert(results.end(), suite.begin(), suite.end());
                }
            }
            return report(results);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RepresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "error: no subcommand executed\n";
    return 2;
}
