#include <cstdio>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylowchar/char_eval.hpp"
#include "sylowchar/lr.hpp"
#include "sylowchar/multiplicity.hpp"
#include "sylowchar/omega.hpp"
#include "sylowchar/partition.hpp"
#include "sylowchar/sylow.hpp"

using json = nlohmann::json;
using namespace sylowchar;

namespace {

json partition_json(const Partition& lambda) {
    json arr = json::array();
    for (unsigned part : lambda.parts()) arr.push_back(part);
    return arr;
}

json partition_list_json(const std::vector<Partition>& list) {
    json arr = json::array();
    for (const Partition& lambda : list) arr.push_back(partition_json(lambda));
    return arr;
}

json report_json(const MultiplicityReport& report) {
    json entries = json::array();
    for (const auto& [lambda, f] : report.entries)
        entries.push_back({{"partition", partition_json(lambda)},
                           {"multiplicity", f.get_str()}});
    return json{{"prime", report.prime},
                {"degree", report.degree},
                {"entries", entries},
                {"zero_set", partition_list_json(report.zero_set)},
                {"checks",
                 {{"degree_identity", report.degree_identity_holds()},
                  {"conjugation_symmetry", report.conjugation_symmetry_holds()}}}};
}

void require_odd_prime(unsigned p) {
    if (!is_odd_prime(p)) throw CLI::ValidationError("--p", "p must be an odd prime");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicities of the trivial character in restrictions of "
                 "irreducible symmetric-group characters to Sylow p-subgroups"};
    app.require_subcommand(1);
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Scan parallelism (default: available cores)")
        ->capture_default_str();

    // multiplicity
    unsigned mp_p = 3;
    std::uint64_t mp_n = 0;
    std::string mp_lambda;
    bool mp_json = false;
    auto* mult = app.add_subcommand("multiplicity", "f(lambda) for one partition or all of P(n)");
    mult->add_option("--p", mp_p, "odd prime")->required();
    mult->add_option("--n", mp_n, "degree")->required();
    mult->add_option("--lambda", mp_lambda, "partition (comma list, a^b exponents allowed)");
    mult->add_flag("--json", mp_json, "emit JSON");

    // lr / lr-types
    std::string lr_lambda, lr_mu, lr_nu, lt_outer, lt_inner;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr->add_option("--lambda", lr_lambda)->required();
    lr->add_option("--mu", lr_mu)->required();
    lr->add_option("--nu", lr_nu)->required();
    auto* lrt = app.add_subcommand("lr-types", "all filling types of a skew shape");
    lrt->add_option("--outer", lt_outer)->required();
    lrt->add_option("--inner", lt_inner, "inner shape (default empty)");

    // omega
    unsigned om_q = 2;
    std::string om_lambda;
    auto* om = app.add_subcommand("omega", "part-shrinking operator P(qn) -> P((q-1)n)");
    om->add_option("--q", om_q)->required();
    om->add_option("--lambda", om_lambda)->required();

    // sylow-classes
    unsigned sc_p = 3;
    std::uint64_t sc_n = 0;
    bool sc_oracle = false;
    auto* sc = app.add_subcommand("sylow-classes", "cycle-type distribution of P_n");
    sc->add_option("--p", sc_p)->required();
    sc->add_option("--n", sc_n)->required();
    sc->add_flag("--oracle", sc_oracle, "cross-check against brute-force group enumeration");

    // constituent-count
    unsigned cc_p = 3;
    std::uint64_t cc_n = 0;
    auto* cc = app.add_subcommand("constituent-count",
                                  "number of irreducible constituents of the permutation character");
    cc->add_option("--p", cc_p)->required();
    cc->add_option("--n", cc_n)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verification drivers");
    verify->require_subcommand(1);
    unsigned va_p = 3;
    std::uint64_t va_maxn = 0;
    auto* v_thma = verify->add_subcommand("zero-sets", "zero sets of f against the predicted lists");
    v_thma->add_option("--p", va_p)->required();
    v_thma->add_option("--max-n", va_maxn)->required();

    unsigned vp_p = 3, vp_k = 1;
    auto* v_pp = verify->add_subcommand("prime-power", "zero set of f at n = p^k");
    v_pp->add_option("--p", vp_p)->required();
    v_pp->add_option("--k", vp_k)->required();

    unsigned vd_q = 2, vd_p = 3, vd_k = 1;
    bool vd_expect_unequal = false;
    auto* v_ds = verify->add_subcommand("dset", "compare D(q,p^k) with A(q,p^k)");
    v_ds->add_option("--q", vd_q)->required();
    v_ds->add_option("--p", vd_p)->required();
    v_ds->add_option("--k", vd_k)->required();
    v_ds->add_flag("--expect-unequal", vd_expect_unequal,
                   "pass when A strictly contains D");

    unsigned vt_p = 3, vt_k = 2;
    auto* v_tb = verify->add_subcommand("tables", "witness tables at p^k in {9, 27}");
    v_tb->add_option("--p", vt_p)->required();
    v_tb->add_option("--k", vt_k)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mult) {
            require_odd_prime(mp_p);
            if (!mp_lambda.empty()) {
                Partition lambda = parse_partition(mp_lambda);
                if (lambda.size() != mp_n)
                    throw CLI::ValidationError("--lambda", "|lambda| must equal n");
                mpz_class f = trivial_multiplicity(mp_p, lambda);
                if (mp_json)
                    std::cout << json{{"prime", mp_p},
                                      {"degree", mp_n},
                                      {"partition", partition_json(lambda)},
                                      {"multiplicity", f.get_str()}}
                              << "\n";
                else
                    std::cout << f.get_str() << "\n";
            } else {
                MultiplicityReport report = compute_report(mp_p, mp_n, threads);
                if (mp_json) {
                    std::cout << report_json(report) << "\n";
                } else {
                    for (const auto& [lambda, f] : report.entries)
                        std::printf("%-24s %s\n", format_partition(lambda).c_str(),
                                    f.get_str().c_str());
                }
            }
            return 0;
        }

        if (*lr) {
            std::cout << lr_coefficient(parse_partition(lr_lambda), parse_partition(lr_mu),
                                        parse_partition(lr_nu))
                      << "\n";
            return 0;
        }

        if (*lrt) {
            SkewShape gamma(parse_partition(lt_outer), parse_partition(lt_inner));
            std::cout << partition_list_json(lr_types(gamma)) << "\n";
            return 0;
        }

        if (*om) {
            Partition lambda = parse_partition(om_lambda);
            auto d = residue_decompose(lambda, om_q);
            std::cout << json{{"q", om_q},
                              {"lambda", partition_json(lambda)},
                              {"omega", partition_json(omega(lambda, om_q))},
                              {"zeta", d.zeta}}
                      << "\n";
            return 0;
        }

        if (*sc) {
            require_odd_prime(sc_p);
            ClassDistribution dist = distribution(sc_p, sc_n);
            if (sc_oracle) {
                ClassDistribution tally = enumeration_oracle(sc_p, sc_n);
                if (dist.counts != tally.counts) {
                    std::cerr << "FAIL: recursion and enumeration oracle disagree\n";
                    return 1;
                }
                std::cerr << "oracle check passed (" << tally.total().get_str()
                          << " elements enumerated)\n";
            }
            json classes = json::array();
            for (const auto& [type, count] : dist.counts)
                classes.push_back({{"type", partition_json(type)}, {"count", count.get_str()}});
            std::cout << json{{"prime", sc_p},
                              {"degree", sc_n},
                              {"order", sylow_order(sc_p, sc_n).get_str()},
                              {"classes", classes}}
                      << "\n";
            return 0;
        }

        if (*cc) {
            require_odd_prime(cc_p);
            std::cout << constituent_count(cc_p, cc_n, threads) << "\n";
            return 0;
        }

        if (*v_thma) {
            require_odd_prime(va_p);
            ZeroSetScanResult result = verify_zero_sets(va_p, va_maxn, threads);
            json degrees = json::array();
            for (const auto& entry : result.degrees) {
                std::cerr << "n=" << entry.n << ": " << (entry.pass ? "pass" : "FAIL") << " ("
                          << entry.zero_set.size() << " zero entries)\n";
                degrees.push_back({{"n", entry.n},
                                   {"pass", entry.pass},
                                   {"zero_set", partition_list_json(entry.zero_set)},
                                   {"expected", partition_list_json(entry.expected)}});
            }
            std::cout << json{{"pass", result.pass}, {"degrees", degrees}} << "\n";
            return result.pass ? 0 : 1;
        }

        if (*v_pp) {
            require_odd_prime(vp_p);
            std::uint64_t n = 1;
            for (unsigned i = 0; i < vp_k; ++i) n *= vp_p;
            MultiplicityReport report = compute_report(vp_p, n, threads);
            std::vector<Partition> expected = expected_zero_set(vp_p, n);
            bool pass = report.zero_set == expected;
            std::cerr << "p^" << vp_k << "=" << n << ": " << (pass ? "pass" : "FAIL") << "\n";
            std::cout << json{{"pass", pass},
                              {"zero_set", partition_list_json(report.zero_set)},
                              {"expected", partition_list_json(expected)}}
                      << "\n";
            return pass ? 0 : 1;
        }

        if (*v_ds) {
            require_odd_prime(vd_p);
            DsetComparison cmp = verify_D_equals_A(vd_q, vd_p, vd_k);
            bool pass = vd_expect_unequal ? (!cmp.equal && cmp.in_D_not_A.empty()) : cmp.equal;
            std::cerr << "D(" << vd_q << "," << vd_p << "^" << vd_k << ") "
                      << (cmp.equal ? "==" : "!=") << " A: " << (pass ? "pass" : "FAIL") << "\n";
            std::cout << json{{"pass", pass},
                              {"equal", cmp.equal},
                              {"in_A_not_D", partition_list_json(cmp.in_A_not_D)},
                              {"in_D_not_A", partition_list_json(cmp.in_D_not_A)}}
                      << "\n";
            return pass ? 0 : 1;
        }

        if (*v_tb) {
            require_odd_prime(vt_p);
            TableResult result = verify_witness_tables(vt_p, vt_k);
            json rows = json::array();
            for (const auto& row : result.rows) {
                std::cerr << format_partition(row.lambda) << " | " << format_partition(row.gamma)
                          << " ; " << format_partition(row.delta) << ": "
                          << (row.pass ? "pass" : "FAIL") << "\n";
                rows.push_back({{"lambda", partition_json(row.lambda)},
                                {"gamma", partition_json(row.gamma)},
                                {"delta", partition_json(row.delta)},
                                {"pass", row.pass}});
            }
            std::cout << json{{"pass", result.pass}, {"rows", rows}} << "\n";
            return result.pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
