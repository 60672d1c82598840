#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "hlkit/bijection.hpp"
#include "hlkit/formulas.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr std::uint64_t kDefaultSeed = 20240614;

std::uint64_t env_budget() {
    if (const char* s = std::getenv("HLKIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
        throw CLI::ValidationError("HLKIT_BUDGET must be a positive integer");
    }
    return hlkit::EnumOptions{}.budget;
}

hlkit::Partition parse_lambda(const std::string& s, int n) {
    hlkit::Partition lambda = hlkit::Partition::parse(s);
    if (static_cast<int>(lambda.length()) > n - 1)
        throw CLI::ValidationError("lambda must have at most n-1 non-zero parts");
    return lambda;
}

/// All partitions with at most n-1 parts and |lambda| <= max_size, the empty
/// partition included.
std::vector<hlkit::Partition> partition_range(int n, int max_size) {
    std::vector<hlkit::Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == n - 1) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    return out;
}

void print_result(const hlkit::Partition& lambda, int n,
                  const std::string& method, const hlkit::SymPoly& poly,
                  std::uint64_t term_count, bool json) {
    if (json) {
        std::cout << "{\"lambda\":[";
        for (std::size_t i = 0; i < lambda.length(); ++i)
            std::cout << (i ? "," : "") << lambda.parts()[i];
        std::cout << "],\"n\":" << n << ",\"method\":\"" << method
                  << "\",\"poly\":" << poly.to_json_string()
                  << ",\"term_count\":" << term_count << "}\n";
    } else {
        std::cout << poly.to_string() << "\n";
        std::cout << "term_count: " << term_count << "\n";
    }
}

int report_verify(const hlkit::VerifyResult& r) {
    for (const auto& f : r.failures) std::cout << "FAIL: " << f << "\n";
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
    return r.pass ? kExitPass : kExitVerifyFail;
}

int run_compute(const std::string& method, const hlkit::Partition& lambda,
                int n, const hlkit::EnumOptions& opts, bool json) {
    using namespace hlkit;
    if (method == "p-alcove" || method == "p-fillings" || method == "q-hhl") {
        FormulaResult r = method == "p-alcove" ? p_alcove(lambda, n, opts)
                          : method == "q-hhl"  ? q_hhl(lambda, n, opts)
                                               : p_fillings(lambda, n, opts);
        print_result(lambda, n, r.method, r.poly, r.term_count, json);
    } else if (method == "p-from-q") {
        FormulaResult q = q_hhl(lambda, n, opts);
        print_result(lambda, n, "p-from-q", p_from_q(q.poly, lambda, n),
                     q.term_count, json);
    } else if (method == "schur") {
        SymPoly p = schur_ssyt(lambda, n);
        print_result(lambda, n, "schur", p, p.num_terms(), json);
    } else {
        SymPoly p = monomial_sym(lambda, n);
        print_result(lambda, n, "monomial", p, p.num_terms(), json);
    }
    return kExitPass;
}

int run_table(const hlkit::EnumOptions& opts) {
    struct Row { const char* lambda; int n; };
    const Row rows[] = {{"4,2,1", 4}, {"4,2,1", 5}, {"4,2,1", 6},
                        {"4,3,2,1", 5}, {"4,3,2,1", 6}};
    std::cout << "lambda      n  t(lambda)  c(lambda)\n";
    for (const auto& r : rows) {
        hlkit::Partition lambda = hlkit::Partition::parse(r.lambda);
        hlkit::TableRow row = hlkit::table_row(lambda, r.n, opts);
        std::cout << "(" << r.lambda << ")";
        for (std::size_t i = std::string(r.lambda).size(); i < 10; ++i)
            std::cout << " ";
        std::cout << r.n << "  " << row.fillings << "  " << row.factor << "\n";
    }
    return kExitPass;
}

template <typename Fn>
int run_over_range(const std::string& lambda_str, bool lambda_given, int n,
                   int sample, std::uint64_t seed, Fn verify_one) {
    using namespace hlkit;
    VerifyResult all;
    if (lambda_given) {
        VerifyResult r = verify_one(parse_lambda(lambda_str, n), n);
        for (auto& f : r.failures) all.fail(std::move(f));
        if (!r.pass) all.pass = false;
    } else {
        auto range = partition_range(n, 6);
        if (sample > 0 && sample < static_cast<int>(range.size())) {
            std::cout << "seed: " << seed << "\n";
            std::mt19937_64 rng(seed);
            std::shuffle(range.begin(), range.end(), rng);
            range.resize(sample);
        }
        for (const auto& lambda : range) {
            VerifyResult r = verify_one(lambda, n);
            for (auto& f : r.failures) all.fail(std::move(f));
        }
    }
    return report_verify(all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hall-Littlewood polynomial toolkit"};
    app.require_subcommand(1);

    std::string lambda_str;
    int n = 0;
    std::string output = "text";
    unsigned threads = 1;
    std::uint64_t budget = 0;  // 0 = env or default
    int sample = 0;
    std::uint64_t seed = kDefaultSeed;

    auto add_common = [&](CLI::App* cmd, bool need_n) {
        cmd->add_option("--lambda", lambda_str,
                        "partition as a comma list; empty = zero partition");
        auto* n_opt = cmd->add_option("--n", n, "number of variables");
        if (need_n) n_opt->required();
        cmd->add_option("--threads", threads, "worker thread cap");
        cmd->add_option("--budget", budget, "max enumerated pairs");
    };

    auto* compute = app.add_subcommand("compute", "evaluate one formula");
    std::string method;
    compute->add_option("method", method, "formula")
        ->required()
        ->check(CLI::IsMember({"p-alcove", "p-fillings", "q-hhl", "p-from-q",
                               "schur", "monomial"}));
    add_common(compute, true);
    compute->add_option("--output", output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "reproduce the compression table");
    table->add_option("--budget", budget, "max enumerated pairs");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string which;
    verify->add_option("what", which, "suite")
        ->required()
        ->check(CLI::IsMember({"compress", "bijection", "cross", "specialize",
                               "levels", "segments"}));
    add_common(verify, false);
    verify->add_option("--sample", sample,
                       "sample this many partitions instead of all");
    verify->add_option("--seed", seed, "seed for sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    using namespace hlkit;
    try {
        EnumOptions opts;
        opts.budget = budget > 0 ? budget : env_budget();
        opts.threads = threads;

        if (compute->parsed())
            return run_compute(method, parse_lambda(lambda_str, n), n, opts,
                               output == "json");
        if (table->parsed()) return run_table(opts);

        if (verify->parsed() && n < 2)
            throw CLI::ValidationError("--n is required (n >= 2)");
        if (which == "segments") return report_verify(verify_segments(n));
        if (which == "cross")
            return run_over_range(lambda_str, !lambda_str.empty(), n, sample,
                                  seed, [&](const Partition& l, int nn) {
                                      return verify_cross(l, nn, opts);
                                  });
        if (which == "specialize")
            return run_over_range(lambda_str, !lambda_str.empty(), n, sample,
                                  seed, [&](const Partition& l, int nn) {
                                      return verify_specialize(l, nn, opts);
                                  });

        Partition lambda = parse_lambda(lambda_str, n);
        if (which == "levels") return report_verify(verify_levels(lambda, n));
        if (which == "compress") {
            CompressionReport rep = compression_report(lambda, n, opts);
            for (const auto& f : rep.failures)
                std::cout << "FAIL: group mismatch at filling "
                          << f.filling.to_string() << " collected "
                          << f.collected.to_string() << " expected "
                          << f.expected.to_string() << "\n";
            for (const auto& m : rep.missed_fillings)
                std::cout << "FAIL: empty fiber at " << m.to_string() << "\n";
            std::cout << "pairs: " << rep.pair_count
                      << " fillings: " << rep.filling_count
                      << " factor: " << rep.factor_rounded << "\n";
            std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
            return rep.pass ? kExitPass : kExitVerifyFail;
        }
        // bijection
        BijectionReport rep = bijection_report(lambda, n);
        for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
        std::cout << "|A^L|: " << rep.size_l << " |A^R|: " << rep.size_r << "\n";
        std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
        return rep.pass ? kExitPass : kExitVerifyFail;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
