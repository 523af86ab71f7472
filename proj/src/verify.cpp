#include "purering/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "purering/literal.hpp"
#include "purering/random.hpp"
#include "purering/structure.hpp"

namespace purering {

namespace {

constexpr size_t kMaxCounterexamples = 5;

class PropertyRecorder {
public:
    PropertyRecorder(Report& report, std::string name) : report_(report) {
        result_.name = std::move(name);
    }
    ~PropertyRecorder() { report_.properties.push_back(std::move(result_)); }

    void check(bool passed, const std::function<std::string()>& counterexample) {
        ++result_.trials;
        if (passed) {
            ++result_.passes;
        } else {
            ++result_.failures;
            if (result_.counterexamples.size() < kMaxCounterexamples)
                result_.counterexamples.push_back(counterexample());
        }
    }

    void check(bool passed, const std::string& input) {
        check(passed, [&input] { return input; });
    }

private:
    Report& report_;
    PropertyResult result_;
};

RandomBounds acceptance_bounds() { return RandomBounds{24, 50, 50, 6}; }

// --- suites ------------------------------------------------------------

void suite_regularity(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    PropertyRecorder xyx(report, "xyx_equals_x");
    PropertyRecorder yxy(report, "yxy_equals_y");
    PropertyRecorder idem(report, "xy_and_yx_idempotent");
    PropertyRecorder invol(report, "double_quasi_inverse_is_identity");
    for (int64_t i = 0; i < trials; ++i) {
        TailedElement x = random_element(rng, bounds);
        TailedElement y = quasi_inverse(x);
        std::string lit = print_element(x);
        xyx.check(x * y * x == x, lit);
        yxy.check(y * x * y == y, lit);
        idem.check((x * y).is_idempotent() && (y * x).is_idempotent(), lit);
        invol.check(quasi_inverse(y) == x, lit);
    }
}

TailedElement torsionize(Rng& rng) {
    std::map<int64_t, int64_t> fixes;
    const int64_t pool[] = {2, 3, 5, 7, 11, 13};
    int count = static_cast<int>(rng.uniform(0, 3));
    for (int i = 0; i < count; ++i) {
        int64_t p = pool[rng.uniform(0, 5)];
        fixes.try_emplace(p, rng.uniform(0, p - 1));
    }
    return TailedElement::from_rational_vector(PrimePartition::trivial(), {Rat(0)}, fixes);
}

void suite_phi(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    PropertyRecorder additive(report, "phi_preserves_addition");
    PropertyRecorder multiplicative(report, "phi_preserves_multiplication");
    PropertyRecorder kernel(report, "phi_kernel_is_torsion");
    PropertyRecorder fragment(report, "constant_fragment_maps_to_single_rational");
    for (int64_t i = 0; i < trials; ++i) {
        TailedElement x = random_element(rng, bounds);
        TailedElement y = random_element(rng, bounds);
        std::string lit = print_element(x) + " ; " + print_element(y);
        additive.check(quotient_map(x + y) == quotient_map(x) + quotient_map(y), lit);
        multiplicative.check(quotient_map(x * y) == quotient_map(x) * quotient_map(y), lit);

        // Mix true torsion elements into the kernel property.
        TailedElement probe = rng.chance(40) ? torsionize(rng) : x;
        kernel.check(quotient_map(probe).is_zero() == probe.torsion_order().is_finite(),
                     print_element(probe));

        TailedElement constant =
            random_element_over(rng, PrimePartition::trivial(), bounds);
        QuotientElement image = quotient_map(constant);
        fragment.check(image.partition().modulus() == 1 && image.values().size() == 1,
                       print_element(constant));
    }
}

void suite_purity(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    PropertyRecorder recover(report, "divide_recovers_exact_multiples");
    PropertyRecorder multiplier(report, "minimal_multiplier_clears_denominators");
    for (int64_t i = 0; i < trials; ++i) {
        TailedElement x = random_element(rng, bounds);
        int64_t n = rng.uniform(1, 60);
        TailedElement nx = Int(n) * x;
        DivisionResult r = divide_exact(nx, n);
        recover.check(r.ok() && Int(n) * *r.quotient == nx,
                      print_element(x) + " ; n=" + std::to_string(n));

        Int k = minimal_multiplier(x);
        TailedElement kx = k * x;
        bool integral = true;
        for (const Rat& t : kx.tails())
            if (t.get_den() != 1) integral = false;
        multiplier.check(integral, print_element(x));
    }

    PropertyRecorder blocked(report, "blocked_division_names_the_prime");
    int64_t constructed = std::max<int64_t>(trials / 5, 100);
    for (int64_t i = 0; i < constructed; ++i) {
        // n with a designated prime p | n where the coordinate is nonzero and
        // zero coordinates at every smaller prime divisor of n.
        const int64_t candidates[] = {2, 3, 5};
        int64_t p = candidates[rng.uniform(0, 2)];
        int64_t n = p * rng.uniform(1, 12);
        std::map<int64_t, int64_t> fixes;
        for (int64_t q : prime_divisors(Int(n))) {
            if (q < p) fixes[q] = 0;
            if (q == p) fixes[q] = rng.uniform(1, q - 1);
        }
        TailedElement x = TailedElement::from_rational_vector(
            PrimePartition::trivial(), {Rat(n)}, fixes);
        DivisionResult r = divide_exact(x, n);
        blocked.check(!r.ok() && r.blocking_prime == p,
                      print_element(x) + " ; n=" + std::to_string(n));
    }
}

void suite_splitting(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    PropertyRecorder reassemble(report, "torsion_plus_p_cofactor_reassembles");
    PropertyRecorder support(report, "torsion_part_supported_on_p");
    PropertyRecorder annihilate(report, "summands_annihilate");
    int64_t per_prime = std::min<int64_t>(trials, 100);
    for (int64_t p : primes_up_to(50)) {
        for (int64_t i = 0; i < per_prime; ++i) {
            TailedElement x = random_element(rng, bounds);
            Splitting s = split_at(x, p);
            std::string lit = print_element(x) + " ; p=" + std::to_string(p);
            reassemble.check(s.torsion + Int(p) * s.cofactor == x, lit);
            TorsionOrder ord = s.torsion.torsion_order();
            support.check(ord.is_finite() && (ord.order == 1 || ord.order == p) &&
                              s.cofactor.coordinate(p).value == 0,
                          lit);
            annihilate.check((s.torsion * (Int(p) * s.cofactor)).is_zero(), lit);
        }
    }
}

void suite_d(Report& report, uint64_t, int64_t, int64_t pmax) {
    TailedElement d = parse_element("{2; fix 2 -> 1}");
    TailedElement dinv = parse_element("{1/2; fix 2 -> 1}");

    PropertyRecorder coords(report, "d_inverse_coordinates_match_the_listed_values");
    const std::pair<int64_t, int64_t> expected[] = {{2, 1}, {3, 2}, {5, 3}, {7, 4}, {11, 6}};
    for (auto [p, v] : expected)
        coords.check(dinv.coordinate(p).value == v,
                     "p=" + std::to_string(p) + " expected " + std::to_string(v));

    PropertyRecorder inverse(report, "d_times_d_inverse_is_one");
    inverse.check(d * dinv == TailedElement::one(), "{2; fix 2 -> 1}");
    inverse.check(quasi_inverse(d) == dinv, "{2; fix 2 -> 1}");

    PropertyRecorder oracle(report, "annihilators_pass_the_coordinatewise_oracle");
    IntPolynomial fd = annihilator(d);
    IntPolynomial fdinv = annihilator(dinv);
    bool fd_ok = fd.degree() == 2 && annihilates(fd, d);
    bool fdinv_ok = fdinv.degree() == 2 && annihilates(fdinv, dinv);
    for (int64_t p : primes_up_to(pmax)) {
        fd_ok = fd_ok && fd.eval_mod(d.coordinate(p).value, p) == 0;
        fdinv_ok = fdinv_ok && fdinv.eval_mod(dinv.coordinate(p).value, p) == 0;
    }
    oracle.check(fd_ok, print_polynomial(fd, 'X'));
    oracle.check(fdinv_ok, print_polynomial(fdinv, 'X'));

    PropertyRecorder integral(report, "integrality_certificates");
    IntegralityCertificate cd = is_integral(d);
    integral.check(cd.integral && cd.witness.is_monic() && annihilates(cd.witness, d),
                   "{2; fix 2 -> 1}");
    IntegralityCertificate cdinv = is_integral(dinv);
    integral.check(!cdinv.integral && cdinv.tail_value == make_rat(1, 2) &&
                       cdinv.obstruction_prime == 2,
                   "{1/2; fix 2 -> 1}");
}

void suite_omega(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);

    PropertyRecorder witness(report, "odd_over_two_is_non_regular_with_decade_witnesses");
    BoundedDenomSeq a = parse_sequence("seq k=2 prefix [] poly \"2n-1\"");
    RegularityVerdict v = regularity_check(a);
    bool ok = !v.regular() && v.witness_indices.size() == 6;
    Int bound = 10;
    Int last = 0;
    for (size_t i = 0; ok && i < v.witness_indices.size(); ++i, bound *= 10) {
        Rat t = a.term(v.witness_indices[i]);
        Int den = abs(Int(t.get_num()));
        ok = den > bound && den > last;
        last = den;
    }
    witness.check(ok, print_sequence(a));

    PropertyRecorder pointwise(report, "eventually_constant_quasi_inverse_pointwise");
    int64_t specs = std::min<int64_t>(trials, 50);
    for (int64_t i = 0; i < specs; ++i) {
        BoundedDenomSeq x = random_sequence(rng, true);
        RegularityVerdict verdict = regularity_check(x);
        bool good = verdict.regular();
        if (good) {
            const BoundedDenomSeq& y = *verdict.quasi_inverse;
            for (int64_t n = 1; good && n <= 10'000; ++n) {
                Rat xn = x.term(n), yn = y.term(n);
                good = xn * yn * xn == xn && yn * xn * yn == yn;
            }
        }
        pointwise.check(good, print_sequence(x));
    }

    PropertyRecorder closure(report, "direct_limit_closed_and_regular");
    for (int64_t i = 0; i < specs; ++i) {
        BoundedDenomSeq x = random_sequence(rng, true);
        BoundedDenomSeq y = random_sequence(rng, true);
        bool good = limit_member(x) && limit_member(y) && limit_member(x + y) &&
                    limit_member(x * y) && regularity_check(x + y).regular() &&
                    regularity_check(x * y).regular();
        closure.check(good, print_sequence(x) + " ; " + print_sequence(y));
    }
}

void suite_divisible(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    PropertyRecorder divisible(report, "scalar_division_always_succeeds");
    int64_t count = std::min<int64_t>(trials, 100);
    for (int64_t i = 0; i < count; ++i) {
        QuotientElement q = random_quotient(rng, bounds);
        bool good = true;
        for (int64_t k = 1; good && k <= 100; ++k) {
            QuotientElement divided = divide_scalar(q, k);
            good = QuotientElement::constant(Rat(k)) * divided == q;
        }
        divisible.check(good, print_quotient(q));
    }
}

void suite_chain(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    std::vector<PrimePartition> chain = make_chain(4);
    PropertyRecorder monotone(report, "membership_is_monotone_along_the_chain");
    int64_t count = std::min<int64_t>(trials, 100);
    for (int64_t i = 0; i < count; ++i) {
        const PrimePartition& base = chain[static_cast<size_t>(rng.uniform(0, 3))];
        TailedElement x = random_element_over(rng, base, bounds);
        bool good = true;
        bool previous = false;
        for (size_t j = 0; j < chain.size(); ++j) {
            bool member = is_member(x, LatticeSpec::full(chain[j]));
            if (previous && !member) good = false;
            previous = member;
        }
        monotone.check(good && previous, print_element(x));
    }
}

void suite_roundtrip(Report& report, uint64_t seed, int64_t trials, int64_t) {
    Rng rng(seed);
    RandomBounds bounds = acceptance_bounds();
    int64_t count = std::min<int64_t>(trials, 200);

    PropertyRecorder elements(report, "element_literals_round_trip");
    for (int64_t i = 0; i < count; ++i) {
        TailedElement x = random_element(rng, bounds);
        elements.check(parse_element(print_element(x)) == x, print_element(x));
    }
    PropertyRecorder partitions(report, "partition_literals_round_trip");
    for (int64_t i = 0; i < count; ++i) {
        PrimePartition p = random_partition(rng, bounds.max_modulus);
        partitions.check(parse_partition(print_partition(p)) == p, print_partition(p));
    }
    PropertyRecorder sequences(report, "sequence_literals_round_trip");
    for (int64_t i = 0; i < count; ++i) {
        BoundedDenomSeq s = random_sequence(rng, rng.chance(50));
        sequences.check(parse_sequence(print_sequence(s)) == s, print_sequence(s));
    }
}

}  // namespace

bool Report::all_passed() const {
    for (const PropertyResult& p : properties)
        if (p.failures > 0) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "regularity", "phi",       "purity", "splitting", "d",
        "omega",      "divisible", "chain",  "roundtrip",
    };
    return names;
}

Report run_suite(const std::string& name, uint64_t seed, int64_t trials, int64_t pmax) {
    Report report;
    report.suite = name;
    report.seed = seed;
    report.trials = trials;
    report.pmax = pmax;
    auto start = std::chrono::steady_clock::now();
    if (name == "regularity") suite_regularity(report, seed, trials, pmax);
    else if (name == "phi") suite_phi(report, seed, trials, pmax);
    else if (name == "purity") suite_purity(report, seed, trials, pmax);
    else if (name == "splitting") suite_splitting(report, seed, trials, pmax);
    else if (name == "d") suite_d(report, seed, trials, pmax);
    else if (name == "omega") suite_omega(report, seed, trials, pmax);
    else if (name == "divisible") suite_divisible(report, seed, trials, pmax);
    else if (name == "chain") suite_chain(report, seed, trials, pmax);
    else if (name == "roundtrip") suite_roundtrip(report, seed, trials, pmax);
    else throw std::invalid_argument("unknown suite: " + name);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

std::vector<Report> run_all_suites(uint64_t seed, int64_t trials, int64_t pmax) {
    std::vector<Report> reports;
    for (const std::string& name : suite_names())
        reports.push_back(run_suite(name, seed, trials, pmax));
    return reports;
}

nlohmann::ordered_json report_to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["pmax"] = report.pmax;
    nlohmann::ordered_json properties = nlohmann::ordered_json::array();
    for (const PropertyResult& p : report.properties) {
        nlohmann::ordered_json entry;
        entry["name"] = p.name;
        entry["trials"] = p.trials;
        entry["passes"] = p.passes;
        entry["failures"] = p.failures;
        entry["counterexamples"] = p.counterexamples;
        properties.push_back(std::move(entry));
    }
    j["properties"] = std::move(properties);
    j["all_passed"] = report.all_passed();
    return j;
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " (seed=" << report.seed
        << ", trials=" << report.trials << ", pmax=" << report.pmax << ")\n";
    for (const PropertyResult& p : report.properties) {
        out << "  " << (p.failures == 0 ? "PASS" : "FAIL") << "  " << p.name << "  "
            << p.passes << "/" << p.trials << "\n";
        for (const std::string& c : p.counterexamples)
            out << "        counterexample: " << c << "\n";
    }
    out << "  time: " << report.wall_ms << " ms\n";
    return out.str();
}

}  // namespace purering
