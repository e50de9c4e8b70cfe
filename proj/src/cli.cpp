#include "gfp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "gfp/bivar.hpp"
#include "gfp/congruence.hpp"
#include "gfp/frobenius.hpp"
#include "gfp/product_spec.hpp"
#include "gfp/serialize.hpp"
#include "gfp/theorems.hpp"

namespace gfp::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

// Oracle comparisons stop here; enumeration cost grows quickly past it.
constexpr int kOracleLimit = 12;

struct CheckResult {
    bool passed = true;
    Json detail = Json::object();
};

CheckResult series_equal(const std::string& target, int N, const IntSeries& lhs, const IntSeries& rhs,
                         const std::string& lhs_name, const std::string& rhs_name) {
    CheckResult r;
    r.detail["target"] = target;
    r.detail["N"] = N;
    const int diff = first_difference(lhs, rhs);
    r.passed = diff < 0;
    r.detail["status"] = r.passed ? "pass" : "fail";
    r.detail["compared"] = Json::array({lhs_name, rhs_name});
    if (!r.passed) {
        r.detail["first_divergence"] = diff;
        r.detail[lhs_name] = lhs[diff].get_str();
        r.detail[rhs_name] = rhs[diff].get_str();
    }
    return r;
}

CheckResult check_theorem_congruence(const std::string& target, int N) {
    const bool colored = target == "thm4";
    const IntSeries s = colored ? corollary2_series(N) : corollary1_series(N);
    const auto claim = verify_congruence(s, 5, 4, 5);
    CheckResult r;
    r.passed = claim.status == ClaimStatus::verified;
    r.detail["target"] = target;
    r.detail["N"] = N;
    r.detail["status"] = r.passed ? "pass" : "fail";
    const std::string name = colored ? "cphi_{2,-1}" : "phi_{2,-1}";
    if (r.passed) {
        r.detail["report"] = name + "(5n+4) ≡ 0 mod 5, " + std::to_string(claim.witnesses) + " witnesses";
    } else {
        const int i = *claim.first_counterexample;
        r.detail["report"] = name + "(" + std::to_string(i) + ") = " + s[i].get_str() + " is not ≡ 0 mod 5";
    }
    r.detail["witnesses"] = claim.witnesses;
    r.detail["claim"] = claim_to_json(claim);
    return r;
}

// product formula, theorem formula, bivariate extraction, enumeration oracle
CheckResult check_four_way(const std::string& target, int N) {
    const bool colored = target == "cor2";
    const Variant variant = colored ? Variant::colored : Variant::repetition;
    CheckResult r;
    r.detail["target"] = target;
    r.detail["N"] = N;

    const IntSeries product = colored ? corollary2_series(N) : corollary1_series(N);
    std::vector<std::pair<std::string, IntSeries>> paths;
    try {
        paths.emplace_back(colored ? "theorem2" : "theorem1",
                           colored ? theorem2_series({2, -1, N}) : theorem1_series({2, -1, N}));
    } catch (const NonIntegralCoefficient& e) {
        r.passed = false;
        r.detail["status"] = "fail";
        r.detail["path"] = "theorem1";
        r.detail["first_divergence"] = e.index();
        r.detail["error"] = e.what();
        return r;
    }
    paths.emplace_back("bivariate", bivar_coefficient_series(variant, 2, -1, N));

    const int oracle_n = std::min(N, kOracleLimit);
    IntSeries oracle(oracle_n, BigInt(0));
    for (int n = 0; n <= oracle_n; ++n) oracle[n] = count_arrays({variant, 2, -1, n});
    paths.emplace_back("enumeration", oracle);

    Json compared = Json::array({"product"});
    for (const auto& [name, s] : paths) {
        compared.push_back(name);
        const int diff = first_difference(product, s);
        if (diff >= 0 && r.passed) {
            r.passed = false;
            r.detail["path"] = name;
            r.detail["first_divergence"] = diff;
            r.detail["product"] = product[diff].get_str();
            r.detail[name] = s[diff].get_str();
        }
    }
    r.detail["status"] = r.passed ? "pass" : "fail";
    r.detail["compared"] = compared;
    r.detail["oracle_up_to"] = oracle_n;
    Json prefix = Json::array();
    for (int i = 0; i <= std::min(N, 4); ++i) prefix.push_back(product[i].get_str());
    r.detail["prefix"] = prefix;
    return r;
}

CheckResult check_jtp(int N) {
    const int half = static_cast<int>(std::ceil(std::sqrt(2.0 * N))) + 1;
    const auto sides = jacobi_triple(N, {-half, half});
    CheckResult r;
    r.passed = sides.product == sides.sum;
    r.detail["target"] = "jtp";
    r.detail["N"] = N;
    r.detail["status"] = r.passed ? "pass" : "fail";
    r.detail["z_window"] = Json::array({-half, half});
    if (!r.passed) {
        for (int z = -half; z <= half && !r.detail.contains("first_divergence"); ++z) {
            const int d = first_difference(sides.product.z_slice(z), sides.sum.z_slice(z));
            if (d >= 0) r.detail["first_divergence"] = Json::object({{"z", z}, {"q", d}});
        }
    }
    return r;
}

CheckResult check_thm3_numerator(int N) {
    const auto prod = theorem3_numerator_product(N);
    auto r = series_equal("thm3numerator", N, prod, theorem3_numerator_lattice(N), "product", "lattice_sum");
    if (r.passed) {
        auto second = series_equal("thm3numerator", N, prod, theorem3_numerator_ak_form(N), "product", "a_k_sum");
        if (!second.passed) return second;
        r.detail["compared"] = Json::array({"product", "lattice_sum", "a_k_sum"});
    }
    return r;
}

CheckResult check_residue() {
    const auto pairs = residue_argument_check(1, 2, 5);
    const bool progression = progression_exponent_check(5, 4, 5);
    CheckResult r;
    r.passed = pairs == std::vector<std::pair<long, long>>{{0, 0}} && progression;
    r.detail["target"] = "residue";
    r.detail["status"] = r.passed ? "pass" : "fail";
    Json list = Json::array();
    for (const auto& [x, y] : pairs) list.push_back(Json::array({x, y}));
    r.detail["solutions_x2_plus_2y2_mod5"] = list;
    r.detail["progression_equivalence"] = progression;
    return r;
}

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> targets{"thm3", "thm4", "cor1", "cor2", "psi2",
                                                  "thm3numerator", "jtp", "eulercube", "residue"};
    return targets;
}

CheckResult run_target(const std::string& target, int N) {
    if (target == "thm3" || target == "thm4") return check_theorem_congruence(target, N);
    if (target == "cor1" || target == "cor2") return check_four_way(target, N);
    if (target == "psi2") return series_equal("psi2", N, psi2_product(N), corollary1_series(N), "psi2_product", "corollary1");
    if (target == "thm3numerator") return check_thm3_numerator(N);
    if (target == "jtp") return check_jtp(N);
    if (target == "eulercube")
        return series_equal("eulercube", N, euler_cube(N), ps_pow(euler_product(N), 3), "cube_sum", "euler_product_cubed");
    if (target == "residue") return check_residue();
    throw UsageError("unknown verify target '" + target + "'");
}

void print_series(std::ostream& out, const IntSeries& s, bool csv) {
    if (csv) {
        out << "n,coefficient\n";
        for (int i = 0; i <= s.order(); ++i) out << i << ',' << s[i].get_str() << '\n';
    } else {
        out << series_to_json(s).dump() << '\n';
    }
}

ProductSpec builtin_spec(const std::string& name) {
    if (name == "phi2m1") return phi2m1_spec();
    if (name == "cphi2m1") return cphi2m1_spec();
    throw UsageError("unknown builtin '" + name + "' (expected phi2m1 or cphi2m1)");
}

ProductSpec parse_spec_for_cli(const std::string& text) {
    try {
        return parse_product_spec(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--spec: ") + e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generating functions and congruences for generalized Frobenius partitions"};
    app.name("gfp");
    app.require_subcommand(1, 1);

    bool csv = false;
    app.add_flag("--csv", csv, "Print tables as CSV instead of JSON lines");

    // expand
    auto* expand = app.add_subcommand("expand", "Expand an infinite product given in the factor DSL");
    std::string spec_text;
    int expand_N = -1, theorem_N = -1, verify_N = 100, scan_N = -1, identities_N = 100;
    expand->add_option("--spec", spec_text, "Factors 'SIGN,PERIOD,RESIDUE,EXP' joined by ';'")->required();
    expand->add_option("--N", expand_N, "Truncation order")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Count (or list) arrays by exhaustive search");
    std::string variant_name;
    int k = 0, alpha = 0, n = -1;
    bool list = false;
    enumerate->add_option("--variant", variant_name)->required()->check(CLI::IsMember({"repetition", "colored"}));
    enumerate->add_option("--k", k)->required();
    enumerate->add_option("--alpha", alpha)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_flag("--list", list, "Print every array before the count");

    // theorem
    auto* theorem = app.add_subcommand("theorem", "Series from the theta-sum formula");
    int which = 0;
    theorem->add_option("--which", which)->required()->check(CLI::IsMember({1, 2}));
    theorem->add_option("--k", k)->required();
    theorem->add_option("--alpha", alpha)->required();
    theorem->add_option("--N", theorem_N)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Check one identity or congruence");
    std::string target;
    verify->add_option("--target", target)->required()->check(CLI::IsMember(verify_targets()));
    verify->add_option("--N", verify_N, "Truncation order")->default_val(100);

    // scan
    auto* scan = app.add_subcommand("scan", "Search for congruences c(An+B) = 0 mod M");
    std::string builtin;
    ScanOptions scan_opts;
    auto* scan_spec = scan->add_option("--spec", spec_text);
    auto* scan_builtin = scan->add_option("--builtin", builtin)->check(CLI::IsMember({"phi2m1", "cphi2m1"}));
    scan_spec->excludes(scan_builtin);
    scan->add_option("--N", scan_N)->required();
    scan->add_option("--maxA", scan_opts.max_A)->default_val(8);
    scan->add_option("--maxM", scan_opts.max_M)->default_val(7);
    scan->add_option("--min-witnesses", scan_opts.min_witnesses)->default_val(20);
    scan->add_flag("--all-moduli", scan_opts.all_moduli, "Include composite moduli");

    // identities
    auto* identities = app.add_subcommand("identities", "Run the full identity battery");
    identities->add_option("--N", identities_N)->default_val(100);

    std::vector<const char*> argv{"gfp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (expand->parsed()) {
            require(expand_N >= 0, "--N must be >= 0");
            const ProductSpec spec = parse_spec_for_cli(spec_text);
            try {
                print_series(out, product_from_spec(spec, expand_N), csv);
            } catch (const NonUnitConstant& e) {
                throw UsageError(std::string("--spec: ") + e.what());
            }
            return kSuccess;
        }

        if (enumerate->parsed()) {
            require(k >= 1, "--k must be >= 1");
            require(n >= 0, "--n must be >= 0");
            require(n <= kEnumerationGuard, "guard enumeration_guard: --n " + std::to_string(n) +
                                                " exceeds " + std::to_string(kEnumerationGuard));
            const CountRequest req{parse_variant(variant_name), k, alpha, n};
            BigInt count = 0;
            if (list) {
                for_each_array(req, [&](const FrobeniusArray& a) {
                    out << array_to_json(a).dump() << '\n';
                    count += 1;
                });
            } else {
                count = count_arrays(req);
            }
            if (csv) {
                out << "variant,k,alpha,n,count\n"
                    << variant_name << ',' << k << ',' << alpha << ',' << n << ',' << count.get_str() << '\n';
            } else {
                Json j = Json::object();
                j["variant"] = variant_name;
                j["k"] = k;
                j["alpha"] = alpha;
                j["n"] = n;
                j["count"] = count.get_str();
                out << j.dump() << '\n';
            }
            return kSuccess;
        }

        if (theorem->parsed()) {
            require(k >= 1, "--k must be >= 1");
            require(theorem_N >= 0, "--N must be >= 0");
            const ThetaSumSpec spec{k, alpha, theorem_N};
            Json j = Json::object();
            j["theorem"] = which;
            j["k"] = k;
            j["alpha"] = alpha;
            j["N"] = theorem_N;
            if (which == 2) {
                const auto s = theorem2_series(spec);
                if (csv) {
                    print_series(out, s, true);
                    return kSuccess;
                }
                j["coefficients"] = series_to_json(s);
                out << j.dump() << '\n';
                return kSuccess;
            }
            try {
                const auto s = theorem1_series(spec);
                if (csv) {
                    print_series(out, s, true);
                    return kSuccess;
                }
                j["integral"] = true;
                j["coefficients"] = series_to_json(s);
                out << j.dump() << '\n';
                return kSuccess;
            } catch (const NonIntegralCoefficient& e) {
                j["integral"] = false;
                j["first_non_integral"] = e.index();
                j["error"] = e.what();
                out << j.dump() << '\n';
                return kDisagreement;
            }
        }

        if (verify->parsed()) {
            require(verify_N >= 0, "--N must be >= 0");
            const auto r = run_target(target, verify_N);
            out << r.detail.dump() << '\n';
            return r.passed ? kSuccess : kDisagreement;
        }

        if (scan->parsed()) {
            require(scan_N >= 0, "--N must be >= 0");
            require(scan_spec->count() + scan_builtin->count() == 1, "scan needs exactly one of --spec or --builtin");
            require(scan_opts.max_A >= 1, "--maxA must be >= 1");
            require(scan_opts.max_M >= 2, "--maxM must be >= 2");
            require(scan_opts.min_witnesses >= 1, "--min-witnesses must be >= 1");
            const ProductSpec spec = builtin.empty() ? parse_spec_for_cli(spec_text) : builtin_spec(builtin);
            std::vector<CongruenceClaim> claims;
            try {
                claims = scan_congruences(product_from_spec(spec, scan_N), scan_opts);
            } catch (const InsufficientWitnesses& e) {
                throw UsageError(std::string("guard min_witnesses: ") + e.what());
            } catch (const NonUnitConstant& e) {
                throw UsageError(std::string("--spec: ") + e.what());
            }
            if (csv) {
                out << "A,B,M,verified_up_to,status,subsumed\n";
                for (const auto& c : claims)
                    out << c.A << ',' << c.B << ',' << c.M << ',' << c.verified_up_to << ",verified,"
                        << (c.subsumed ? "true" : "false") << '\n';
            } else {
                for (const auto& c : claims) out << claim_to_json(c).dump() << '\n';
            }
            return kSuccess;
        }

        if (identities->parsed()) {
            require(identities_N >= 0, "--N must be >= 0");
            int failed = 0;
            for (const auto& t : verify_targets()) {
                const auto r = run_target(t, identities_N);
                if (!r.passed) ++failed;
                out << r.detail.dump() << '\n';
            }
            Json summary = Json::object();
            summary["identities"] = static_cast<int>(verify_targets().size());
            summary["passed"] = static_cast<int>(verify_targets().size()) - failed;
            summary["failed"] = failed;
            out << summary.dump() << '\n';
            return failed == 0 ? kSuccess : kDisagreement;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace gfp::cli
