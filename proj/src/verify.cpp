#include "fusionkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "fusionkit/adjoint_rules.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/oracle.hpp"

namespace fusionkit {

std::string to_string(Suite suite) {
    switch (suite) {
        case Suite::rules: return "rules";
        case Suite::tadpole: return "tadpole";
        case Suite::tables: return "tables";
        case Suite::structure: return "structure";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : all_suites())
        if (to_string(s) == name) return s;
    throw ParseError("unknown suite '" + std::string(name) + "' (expected rules, tadpole, tables or structure)");
}

std::vector<Suite> all_suites() { return {Suite::rules, Suite::tadpole, Suite::tables, Suite::structure}; }

FormulaFault parse_fault(std::string_view text) {
    FormulaFault fault;
    std::string s(text);
    std::vector<std::string> parts;
    std::stringstream in(s);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3 || parts[0].size() != 1)
        throw ParseError("fault must look like FAMILY:RESIDUE[:DELTA], got '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(parts[0][0])));
    if (std::string("ABCDEFG").find(f) == std::string::npos) throw ParseError("unknown family in fault '" + s + "'");
    fault.family = static_cast<Family>(f);
    try {
        fault.residue = std::stoi(parts[1]);
        if (parts.size() == 3) fault.delta = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw ParseError("fault must look like FAMILY:RESIDUE[:DELTA], got '" + s + "'");
    }
    return fault;
}

bool VerifyReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures.empty(); });
}

const Counterexample* VerifyReport::first_failure() const {
    for (const auto& s : suites)
        if (!s.failures.empty()) return &s.failures.front();
    return nullptr;
}

std::vector<AlgebraId> algebras_up_to(int max_rank) {
    std::vector<AlgebraId> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int r = 1; r <= max_rank; ++r) {
            AlgebraId id{f, r};
            if (id.is_valid()) out.push_back(id);
        }
    return out;
}

std::string branch_name(int period, int residue) {
    std::string out = period == 1 ? "J" : std::to_string(period) + "J";
    if (residue != 0) out += "+" + std::to_string(residue);
    return out;
}

namespace {

struct TaskResult {
    long long checks = 0;
    std::vector<Counterexample> failures;
};

struct Task {
    Suite suite;
    std::function<TaskResult()> run;
};

std::string first_difference(const FusionDecomposition& a, const FusionDecomposition& b, const std::string& name_a,
                             const std::string& name_b) {
    std::map<Weight, std::pair<long long, long long>> merged;
    for (const auto& [w, m] : a.entries) merged[w].first = m;
    for (const auto& [w, m] : b.entries) merged[w].second = m;
    for (const auto& [w, v] : merged)
        if (v.first != v.second)
            return "nu=" + w.str() + " " + name_a + "=" + std::to_string(v.first) + " " + name_b + "=" +
                   std::to_string(v.second);
    return "decompositions differ";
}

TaskResult rules_task(const RootSystemPtr& rs, const AdjointRules& rules, const Oracle& oracle, int level) {
    TaskResult out;
    const std::string name = rs->algebra().str();
    for (const AffineWeight& mu : enumerate_level(*rs, level)) {
        FusionDecomposition by_rule = rules.decompose(mu);
        FusionDecomposition by_oracle = oracle.kac_walton_fusion(mu);
        ++out.checks;
        if (by_rule != by_oracle)
            out.failures.push_back({Suite::rules, name, level,
                                    "fusion mu=" + mu.str() + " " + first_difference(by_rule, by_oracle, "rule", "oracle")});
        FusionDecomposition t_rule = rules.decompose_tensor(mu.finite());
        FusionDecomposition t_oracle = oracle.racah_speiser_tensor(mu.finite());
        ++out.checks;
        if (t_rule != t_oracle)
            out.failures.push_back({Suite::rules, name, level,
                                    "tensor mu=" + mu.finite().str() + " " +
                                        first_difference(t_rule, t_oracle, "rule", "oracle")});
    }
    return out;
}

std::string rational_str(const Rational& q) { return q.str(); }

TaskResult tadpole_task(const RootSystemPtr& rs, const PiecewisePolynomial& theta, const PiecewisePolynomial& zero,
                        int level) {
    TaskResult out;
    const std::string name = rs->algebra().str();
    const int residue = level % theta.period;
    const std::string branch = branch_name(theta.period, residue) + " (J=" + std::to_string(level / theta.period) + ")";
    PolytopeSums sums = polytope_sums(rs->comarks(), level);
    if (level >= 2) {
        Rational formula = theta.evaluate_exact(level);
        Int128 counted = checked_sub(sums.nonzero_sum, sums.count);
        ++out.checks;
        if (!formula.is_integer() || formula != Rational(counted))
            out.failures.push_back({Suite::tadpole, name, level,
                                    "T_theta branch " + branch + ": formula=" + rational_str(formula) +
                                        " enumeration=" + to_string(counted)});
    }
    Rational formula = zero.evaluate_exact(level);
    ++out.checks;
    if (!formula.is_integer() || formula != Rational(sums.count))
        out.failures.push_back({Suite::tadpole, name, level,
                                "T_0 branch " + branch_name(zero.period, level % zero.period) + ": formula=" +
                                    rational_str(formula) + " enumeration=" + to_string(sums.count)});
    return out;
}

TaskResult structure_roots_task(const RootSystemPtr& rs) {
    TaskResult out;
    const std::string name = rs->algebra().str();
    const auto roots = rs->roots();
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        int nontrivial = 0;
        for (int i = 0; i < rs->rank(); ++i) {
            int d = rs->depth(idx, i);
            int h = rs->height(idx, i);
            ++out.checks;
            if (h - d != roots[idx].labels[i])
                out.failures.push_back({Suite::structure, name, -1,
                                        "root " + coords_str(roots[idx].coords) + " index " + std::to_string(i) +
                                            ": h - d = " + std::to_string(h - d) + " but label " +
                                            std::to_string(roots[idx].labels[i])});
            if (d + h + 1 > 4)
                out.failures.push_back({Suite::structure, name, -1,
                                        "root " + coords_str(roots[idx].coords) + " has an alpha-string of length " +
                                            std::to_string(d + h + 1)});
            if (d > std::max(0, -roots[idx].labels[i])) ++nontrivial;
        }
        ++out.checks;
        if (nontrivial > 1)
            out.failures.push_back({Suite::structure, name, -1,
                                    "root " + coords_str(roots[idx].coords) + " has " + std::to_string(nontrivial) +
                                        " nontrivial indices"});
    }
    return out;
}

TaskResult structure_rules_task(const RootSystemPtr& rs, const AdjointRules& rules, int level) {
    TaskResult out;
    const std::string name = rs->algebra().str();
    for (const AffineWeight& mu : enumerate_level(*rs, level)) {
        const Weight m = mu.finite();
        for (const Root& beta : rs->roots()) {
            Weight nu = m + beta.labels;
            if (!nu.is_dominant()) continue;
            int depth_form = rules.offdiag_tensor(m, nu);
            int forms[] = {rules.offdiag_tensor_signed(m, nu), rules.offdiag_tensor_two_case(m, nu),
                           rules.offdiag_tensor_fast(m, nu)};
            ++out.checks;
            for (int f : forms)
                if (f != depth_form) {
                    out.failures.push_back({Suite::structure, name, level,
                                            "offdiag forms disagree at mu=" + m.str() + " nu=" + nu.str()});
                    break;
                }
            int nu0 = level - rs->theta_product(nu);
            if (nu0 < 0) continue;
            AffineWeight nu_hat{level, {nu0}};
            nu_hat.labels.insert(nu_hat.labels.end(), nu.labels.begin(), nu.labels.end());
            ++out.checks;
            if (rules.offdiag_fusion_full(mu, nu_hat) != depth_form)
                out.failures.push_back({Suite::structure, name, level,
                                        "affine clause changes the coefficient at mu=" + mu.str() +
                                            " nu=" + nu_hat.str()});
        }
    }
    return out;
}

TaskResult tables_task_b(FormulaVariant variant) {
    TaskResult out;
    for (const auto& c : regenerate_b_tadpoles(variant)) {
        ++out.checks;
        if (!c.ok())
            out.failures.push_back({Suite::tables, AlgebraId{Family::B, c.rank}.str(), c.level,
                                    "b-tadpoles cell: reference=" + to_string(c.expected) + " formula=" +
                                        to_string(c.formula) + " enumeration=" + to_string(c.enumeration)});
    }
    return out;
}

TaskResult tables_task_g2() {
    TaskResult out;
    const auto got = regenerate_g2_offdiag(8);
    const auto& want = g2_offdiag_reference();
    for (std::size_t i = 0; i < want.size(); ++i) {
        ++out.checks;
        if (i >= got.size() || !(got[i] == want[i]))
            out.failures.push_back({Suite::tables, "G2", -1,
                                    "g2-offdiag row " + coords_str({want[i].coords[0], want[i].coords[1]}) +
                                        " differs from the reference"});
    }
    return out;
}

TaskResult tables_task_nontrivial(const RootSystemPtr& rs, Transcription copy) {
    TaskResult out;
    NontrivialDiff diff = compare_nontrivial(*rs, copy);
    ++out.checks;
    for (const auto& row : diff.missing_from_reference)
        out.failures.push_back({Suite::tables, rs->algebra().str(), -1,
                                "nontrivial: generated root " + coords_str(row.coords) + " index " +
                                    std::to_string(row.index + 1) + " is not in the reference"});
    for (const auto& row : diff.missing_from_generated)
        out.failures.push_back({Suite::tables, rs->algebra().str(), -1,
                                "nontrivial: reference root " + coords_str(row.coords) + " index " +
                                    std::to_string(row.index + 1) + " is not generated"});
    return out;
}

TaskResult tables_task_f4() {
    TaskResult out;
    ++out.checks;
    if (regenerate_f4_strings() != f4_strings_reference())
        out.failures.push_back({Suite::tables, "F4", -1, "f4-strings differ from the reference"});
    return out;
}

std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i].run();
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.max_rank < 1 || options.max_level < 1)
        throw std::invalid_argument("verify bounds must be at least 1");
    std::vector<Suite> suites = options.suites.empty() ? all_suites() : options.suites;
    std::sort(suites.begin(), suites.end());
    suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
    auto wants = [&](Suite s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };

    struct AlgebraData {
        RootSystemPtr rs;
        std::shared_ptr<AdjointRules> rules;
        std::shared_ptr<Oracle> oracle;
    };
    std::vector<AlgebraData> algebras;
    for (AlgebraId id : algebras_up_to(options.max_rank)) {
        auto rs = RootSystem::build(id);
        algebras.push_back({rs, std::make_shared<AdjointRules>(rs), std::make_shared<Oracle>(rs)});
    }

    std::vector<Task> tasks;
    if (wants(Suite::rules))
        for (const auto& a : algebras)
            for (int k = 2; k <= options.max_level; ++k)
                tasks.push_back({Suite::rules, [a, k] { return rules_task(a.rs, *a.rules, *a.oracle, k); }});

    if (wants(Suite::tadpole))
        for (const auto& a : algebras) {
            if (!has_closed_form(a.rs->algebra())) continue;
            auto theta = std::make_shared<PiecewisePolynomial>(
                adjoint_tadpole_polynomial(a.rs->algebra(), options.variant));
            auto zero = std::make_shared<PiecewisePolynomial>(zero_tadpole_polynomial(a.rs->algebra()));
            if (options.fault && options.fault->family == a.rs->algebra().family) {
                const int residue = options.fault->residue;
                if (residue < 0 || residue >= theta->period)
                    throw std::invalid_argument("fault residue " + std::to_string(residue) + " outside 0.." +
                                                std::to_string(theta->period - 1));
                theta->branches[static_cast<std::size_t>(residue)] += Polynomial::constant(Rational(options.fault->delta));
            }
            for (int k = 0; k <= options.max_level; ++k)
                tasks.push_back({Suite::tadpole, [a, theta, zero, k] { return tadpole_task(a.rs, *theta, *zero, k); }});
        }

    if (wants(Suite::tables)) {
        const FormulaVariant variant = options.variant;
        tasks.push_back({Suite::tables, [variant] { return tables_task_b(variant); }});
        tasks.push_back({Suite::tables, [] { return tables_task_g2(); }});
        const Transcription copy = options.copy;
        for (AlgebraId id : nontrivial_algebras(options.max_rank)) {
            auto rs = RootSystem::build(id);
            tasks.push_back({Suite::tables, [rs, copy] { return tables_task_nontrivial(rs, copy); }});
        }
        tasks.push_back({Suite::tables, [] { return tables_task_f4(); }});
    }

    if (wants(Suite::structure))
        for (const auto& a : algebras) {
            tasks.push_back({Suite::structure, [a] { return structure_roots_task(a.rs); }});
            for (int k = 2; k <= options.max_level; ++k)
                tasks.push_back({Suite::structure, [a, k] { return structure_rules_task(a.rs, *a.rules, k); }});
        }

    std::vector<TaskResult> results = run_tasks(tasks, options.threads);
    VerifyReport report;
    for (Suite s : suites) {
        SuiteResult sr{s, 0, {}};
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (tasks[i].suite != s) continue;
            sr.checks += results[i].checks;
            sr.failures.insert(sr.failures.end(), results[i].failures.begin(), results[i].failures.end());
        }
        report.suites.push_back(std::move(sr));
    }
    return report;
}

}  // namespace fusionkit
