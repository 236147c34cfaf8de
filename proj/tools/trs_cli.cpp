#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "trs/errors.hpp"
#include "trs/game.hpp"
#include "trs/harness.hpp"

using namespace trs;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNoRoute = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PricingParams load_pricing(const std::string& path) {
    if (path.empty()) return PricingParams{};
    return PricingParams::from_json(nlohmann::json::parse(read_file(path)));
}

int run_gen_instance(std::uint64_t seed, int count, std::int64_t horizon, double mean_start,
                     double mean_len, double std_len, const std::string& out_path) {
    auto windows = generate_instance(seed, count, horizon, mean_start, mean_len, std_len);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    out << format_instance(windows);
    std::cout << "windows=" << windows.size() << "\n"
              << "path=" << out_path << "\n";
    if (windows.empty()) std::cerr << "warning: empty instance\n";
    return 0;
}

int run_select(const std::string& instance_path, std::int64_t t_s, std::int64_t t_r,
               std::int64_t transfer, const std::string& deposit_eth, std::int64_t deadline,
               bool have_deadline) {
    auto windows = parse_instance(read_file(instance_path));
    SelectionRequest req{TimeWindow{t_s, t_r}, transfer, Money::parse_eth(deposit_eth),
                         have_deadline ? deadline : t_s};
    try {
        RoutePlan plan = select_peers(windows, req);
        std::cout << "hops=" << plan.size() << "\n";
        for (std::size_t i = 0; i < plan.hops.size(); ++i) {
            const auto& hop = plan.hops[i];
            std::cout << "hop." << i + 1 << '=' << hop.owner << ',' << hop.segment.begin << ','
                      << hop.segment.end << "\n";
        }
        std::cout << "# route of " << plan.size() << " peers covering [" << t_s << ", " << t_r
                  << "] plus a " << transfer << "h handoff buffer\n";
        return 0;
    } catch (const NoFeasibleRoute& e) {
        std::cerr << "no feasible route: " << e.what() << "\n";
        return kExitNoRoute;
    }
}

int run_quote(const std::string& v_eth, std::int64_t hours, int peers,
              const std::string& params_path) {
    PricingParams pricing = load_pricing(params_path);
    Money v = Money::parse_eth(v_eth);
    Dec30 multiplier = value_multiplier(v, pricing);
    Money storage = storage_charge(hours, pricing);
    Money total = total_remuneration(v, hours, peers, pricing);
    std::cout << "multiplier=" << multiplier.str() << "\n"
              << "call_compensation=" << (peers * pricing.r_c).to_eth() << "\n"
              << "storage_charge=" << storage.to_eth() << "\n"
              << "total_remuneration=" << total.to_eth() << "\n"
              << "deposit=" << required_deposit(v, pricing).to_eth() << "\n"
              << "award=" << report_award(v, pricing).to_eth() << "\n";
    std::cout << "# " << peers << " peers storing a " << v.to_eth() << " ETH key for " << hours
              << "h cost " << total.to_eth() << " ETH in total\n";
    return 0;
}

int run_simulate(const std::string& spec_path, bool with_trace) {
    ScenarioSpec spec = ScenarioSpec::from_json(nlohmann::json::parse(read_file(spec_path)));
    RunResult result = run_scenario(spec);
    std::cout << result.report_text();
    if (with_trace)
        for (const auto& line : result.trace_lines()) std::cout << "trace: " << line << "\n";
    return 0;
}

int run_analyze(const std::string& v_eth, const std::string& deposit_eth,
                const std::string& pay_eth, const std::string& cost_eth,
                const std::string& award_eth, int peers, const std::string& bribe_eth) {
    GameParams params;
    params.value = Money::parse_eth(v_eth);
    params.deposit = Money::parse_eth(deposit_eth);
    params.peer_pay = Money::parse_eth(pay_eth);
    params.peer_cost = cost_eth.empty() ? Money::micro(params.peer_pay.units() / 2)
                                        : Money::parse_eth(cost_eth);
    params.award = Money::parse_eth(award_eth);

    GameTree tree = build_enforcement_game(params, peers);
    auto equilibria = enumerate_nash(tree);
    std::cout << "peers=" << peers << "\n"
              << "choice_nodes=" << tree.choice_count() << "\n"
              << "terminals=" << tree.terminal_count() << "\n"
              << "equilibria=" << equilibria.size() << "\n";
    bool honest = false;
    for (std::size_t i = 0; i < equilibria.size(); ++i) {
        std::cout << "equilibrium." << i + 1 << '=' << equilibria[i].str() << "\n";
        honest |= equilibria[i].all_honest();
    }
    std::cout << "honest_equilibrium=" << (honest ? "yes" : "no") << "\n";
    std::cout << "unique_honest=" << (honest && equilibria.size() == 1 ? "yes" : "no") << "\n";
    std::cout << "dominance.recipient=" << (check_dominance(tree, peers + 1, 0, 1) ? "yes" : "no")
              << "\n";
    if (peers > 0)
        std::cout << "dominance.peer=" << (check_dominance(tree, 1, 0, 1) ? "yes" : "no") << "\n";

    VariantReport variants = analyze_bayesian_variants(params, peers);
    std::cout << "variants_honest=" << (variants.honest_in_all ? "yes" : "no") << "\n";

    BriberyReport bribery = analyze_release_bribery(params, Money::parse_eth(bribe_eth));
    std::cout << "bribery.equilibrium="
              << (bribery.equilibrium_reject_report ? "reject,report" : "degenerate") << "\n";

    DisputeReport dispute = analyze_drop_dispute(params);
    std::cout << "dispute.no_drop=" << (dispute.no_drop_equilibrium ? "yes" : "no") << "\n";
    if (!dispute.params_ok) std::cout << "dispute.violation=" << dispute.violation << "\n";
    std::cout << "# " << (honest && equilibria.size() == 1
                              ? "unique pure equilibrium: everyone honest"
                              : "honest play is not the unique equilibrium")
              << "\n";
    return 0;
}

int run_conditions() {
    auto suite = condition_suite();
    int failed = 0;
    for (const auto& c : suite) {
        RunResult run = run_scenario(c.spec);
        bool ok = run.locked_pool_delta == c.expected_locked_delta;
        for (const auto& [name, expected] : c.expected_finals)
            ok &= run.finals.at(name) == expected;
        std::cout << "condition." << c.name << '=' << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) {
            ++failed;
            for (const auto& [name, expected] : c.expected_finals)
                if (run.finals.at(name) != expected)
                    std::cout << "#   " << name << ": got " << run.finals.at(name).to_eth()
                              << ", want " << expected.to_eth() << "\n";
        }
    }
    std::cout << "passed=" << suite.size() - static_cast<std::size_t>(failed) << "/"
              << suite.size() << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"timed-release service toolkit: selection, pricing, simulation and analysis"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-instance", "generate a random working-window instance");
    std::uint64_t seed = 1;
    int count = 100;
    std::int64_t horizon = 1200;
    double mean_start = 300.0, mean_len = 15.0, std_len = 5.0;
    std::string out_path = "instance.csv";
    gen->add_option("--seed", seed);
    gen->add_option("--n", count);
    gen->add_option("--horizon", horizon);
    gen->add_option("--mean-start", mean_start);
    gen->add_option("--mean-length", mean_len);
    gen->add_option("--std-length", std_len);
    gen->add_option("--out", out_path)->required();

    auto* select = app.add_subcommand("select", "select a route over an instance file");
    std::string instance_path, deposit_eth = "1.2";
    std::int64_t t_s = 0, t_r = 300, transfer = 1, deadline = 0;
    select->add_option("--instance", instance_path)->required();
    select->add_option("--t-s", t_s);
    select->add_option("--t-r", t_r);
    select->add_option("--transfer", transfer);
    select->add_option("--deposit", deposit_eth);
    auto* deadline_opt = select->add_option("--deadline", deadline);

    auto* quote = app.add_subcommand("quote", "price a service");
    std::string v_eth = "1";
    std::int64_t hours = 1;
    int peers = 1;
    std::string params_path;
    quote->add_option("--v", v_eth);
    quote->add_option("--hours", hours);
    quote->add_option("--peers", peers);
    quote->add_option("--params", params_path);

    auto* simulate = app.add_subcommand("simulate", "run a scenario config");
    std::string spec_path;
    bool with_trace = false;
    simulate->add_option("--spec", spec_path)->required();
    simulate->add_flag("--trace", with_trace);

    auto* analyze = app.add_subcommand("analyze-game", "equilibria of the enforcement game");
    std::string av = "3", adeposit = "3.6", apay = "0.026", acost, aaward = "0.3", abribe = "1";
    int apeers = 1;
    analyze->add_option("--v", av);
    analyze->add_option("--deposit", adeposit);
    analyze->add_option("--pay", apay);
    analyze->add_option("--cost", acost);
    analyze->add_option("--award", aaward);
    analyze->add_option("--peers", apeers)->check(CLI::Range(0, 4));
    analyze->add_option("--bribe", abribe);

    app.add_subcommand("conditions", "replay the built-in security evaluation suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen_instance(seed, count, horizon, mean_start, mean_len, std_len, out_path);
        if (select->parsed())
            return run_select(instance_path, t_s, t_r, transfer, deposit_eth, deadline,
                              deadline_opt->count() > 0);
        if (quote->parsed()) return run_quote(v_eth, hours, peers, params_path);
        if (simulate->parsed()) return run_simulate(spec_path, with_trace);
        if (analyze->parsed()) return run_analyze(av, adeposit, apay, acost, aaward, apeers, abribe);
        return run_conditions();
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
