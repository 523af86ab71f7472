// Command-line front end: element/partition/sequence literals in, operation
// results or verification reports out. Exit codes: 0 success or all
// properties pass, 1 property failure, 2 parse or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include <purering/literal.hpp>
#include <purering/verify.hpp>

using namespace purering;
using nlohmann::ordered_json;

namespace {

std::string read_argument(const std::string& arg) {
    if (arg != "-") return arg;
    std::string all, line;
    while (std::getline(std::cin, line)) {
        if (!all.empty()) all += '\n';
        all += line;
    }
    return all;
}

bool json_format(const std::string& flag) {
    if (flag == "json") return true;
    if (flag == "text") return false;
    const char* env = std::getenv("PURERING_FORMAT");
    return env != nullptr && std::string(env) == "json";
}

void emit(bool as_json, const ordered_json& payload, const std::string& text) {
    if (as_json) {
        ordered_json wrapped;
        wrapped["schema"] = 1;
        for (const auto& [key, value] : payload.items()) wrapped[key] = value;
        std::cout << wrapped.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in pure subrings of the product of all prime fields"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand
    std::string format = "default";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text", "default"}));

    std::string eval_expr;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an element expression");
    eval->add_option("expr", eval_expr, "expression over element literals")->required();

    std::string qinv_elem;
    CLI::App* qinv = app.add_subcommand("qinv", "quasi-inverse of an element");
    qinv->add_option("elem", qinv_elem, "element literal or -")->required();

    int64_t split_prime = 0;
    std::string split_elem;
    CLI::App* split = app.add_subcommand("split", "split off the p-torsion part");
    split->add_option("p", split_prime, "prime")->required();
    split->add_option("elem", split_elem, "element literal or -")->required();

    std::string order_elem;
    CLI::App* order = app.add_subcommand("order", "additive torsion order");
    order->add_option("elem", order_elem, "element literal or -")->required();

    std::string member_partition;
    std::vector<int64_t> member_ideal;
    std::string member_elem;
    CLI::App* member = app.add_subcommand("member", "purity-closure membership");
    member->add_option("--t", member_partition, "partition literal for the lattice")
        ->required();
    member->add_option("--ideal", member_ideal,
                       "restrict the lattice to these blocks (ideal support)");
    member->add_option("elem", member_elem, "element literal or -")->required();

    std::string phi_elem;
    CLI::App* phi = app.add_subcommand("phi", "image in the quotient by the torsion part");
    phi->add_option("elem", phi_elem, "element literal or -")->required();

    std::string ann_elem;
    CLI::App* ann = app.add_subcommand("ann", "minimal integer annihilating polynomial");
    ann->add_option("elem", ann_elem, "element literal or -")->required();

    std::string integral_elem;
    CLI::App* integral = app.add_subcommand("integral", "integrality certificate");
    integral->add_option("elem", integral_elem, "element literal or -")->required();

    std::string omega_seq;
    CLI::App* omega = app.add_subcommand("omega-check",
                                         "regularity of a bounded-denominator sequence");
    omega->add_option("seq", omega_seq, "sequence literal or -")->required();

    std::string verify_suite = "all";
    uint64_t verify_seed = 42;
    int64_t verify_trials = 500;
    int64_t verify_pmax = 10'000;
    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", verify_suite, "suite name or 'all'");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--trials", verify_trials, "trials per randomized property");
    verify->add_option("--pmax", verify_pmax, "prime bound for coordinatewise oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    bool as_json = json_format(format);
    try {
        if (*eval) {
            TailedElement x = parse_expression(read_argument(eval_expr));
            emit(as_json, {{"result", element_to_json(x)}}, print_element(x));
        } else if (*qinv) {
            TailedElement x = parse_element(read_argument(qinv_elem));
            TailedElement y = quasi_inverse(x);
            emit(as_json, {{"result", element_to_json(y)}}, print_element(y));
        } else if (*split) {
            TailedElement x = parse_element(read_argument(split_elem));
            Splitting s = split_at(x, split_prime);
            emit(as_json,
                 {{"torsion", element_to_json(s.torsion)},
                  {"cofactor", element_to_json(s.cofactor)}},
                 "torsion:  " + print_element(s.torsion) +
                     "\ncofactor: " + print_element(s.cofactor));
        } else if (*order) {
            TailedElement x = parse_element(read_argument(order_elem));
            TorsionOrder ord = x.torsion_order();
            ordered_json j;
            j["finite"] = ord.is_finite();
            if (ord.is_finite()) j["order"] = ord.order.get_str();
            emit(as_json, {{"result", j}},
                 ord.is_finite() ? "Finite(" + ord.order.get_str() + ")" : "Infinite");
        } else if (*member) {
            PrimePartition partition = parse_partition(member_partition);
            LatticeSpec lattice =
                member_ideal.empty()
                    ? LatticeSpec::full(partition)
                    : LatticeSpec::ideal(partition, std::set<BlockId>(member_ideal.begin(),
                                                                      member_ideal.end()));
            TailedElement x = parse_element(read_argument(member_elem));
            bool yes = is_member(x, lattice);
            emit(as_json, {{"member", yes}}, yes ? "true" : "false");
        } else if (*phi) {
            TailedElement x = parse_element(read_argument(phi_elem));
            QuotientElement q = quotient_map(x);
            emit(as_json, {{"result", quotient_to_json(q)}}, print_quotient(q));
        } else if (*ann) {
            TailedElement x = parse_element(read_argument(ann_elem));
            IntPolynomial f = annihilator(x);
            emit(as_json, {{"result", polynomial_to_json(f)}}, print_polynomial(f, 'X'));
        } else if (*integral) {
            TailedElement x = parse_element(read_argument(integral_elem));
            IntegralityCertificate cert = is_integral(x);
            ordered_json j;
            j["integral"] = cert.integral;
            if (cert.integral) {
                j["witness"] = polynomial_to_json(cert.witness);
                emit(as_json, {{"result", j}},
                     "Integral; witness " + print_polynomial(cert.witness, 'X'));
            } else {
                j["block"] = cert.block;
                j["tail_value"] = cert.tail_value.get_str();
                j["obstruction_prime"] = cert.obstruction_prime.get_str();
                j["argument"] = cert.argument;
                emit(as_json, {{"result", j}},
                     "NotIntegral; block " + std::to_string(cert.block) + " tail " +
                         cert.tail_value.get_str() + "\n" + cert.argument);
            }
        } else if (*omega) {
            BoundedDenomSeq s = parse_sequence(read_argument(omega_seq));
            RegularityVerdict v = regularity_check(s);
            ordered_json j;
            j["regular"] = v.regular();
            if (v.regular()) {
                j["quasi_inverse"] = sequence_to_json(*v.quasi_inverse);
                emit(as_json, {{"result", j}},
                     "QuasiInverse: " + print_sequence(*v.quasi_inverse));
            } else {
                j["witness_indices"] = v.witness_indices;
                std::string text = "NonRegular; witness indices [";
                for (size_t i = 0; i < v.witness_indices.size(); ++i) {
                    if (i) text += ", ";
                    text += std::to_string(v.witness_indices[i]);
                }
                emit(as_json, {{"result", j}}, text + "]");
            }
        } else if (*verify) {
            std::vector<Report> reports;
            if (verify_suite == "all") {
                reports = run_all_suites(verify_seed, verify_trials, verify_pmax);
            } else {
                reports.push_back(
                    run_suite(verify_suite, verify_seed, verify_trials, verify_pmax));
            }
            bool all_passed = true;
            int64_t wall_ms = 0;
            for (const Report& r : reports) {
                all_passed = all_passed && r.all_passed();
                wall_ms += r.wall_ms;
            }
            if (as_json) {
                ordered_json out;
                out["schema"] = 1;
                ordered_json list = ordered_json::array();
                for (const Report& r : reports) list.push_back(report_to_json(r));
                out["reports"] = std::move(list);
                out["all_passed"] = all_passed;
                std::cout << out.dump(2) << "\n";
                std::cerr << "wall time: " << wall_ms << " ms\n";
            } else {
                for (const Report& r : reports) std::cout << report_to_text(r);
                std::cout << (all_passed ? "all properties passed" : "FAILURES above")
                          << "\n";
            }
            return all_passed ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
