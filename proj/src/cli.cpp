#include "fusionkit/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionkit/error.hpp"
#include "fusionkit/oracle.hpp"
#include "fusionkit/tables.hpp"
#include "fusionkit/tadpole.hpp"
#include "fusionkit/verify.hpp"

namespace fusionkit::cli {

using Json = nlohmann::ordered_json;

namespace {

/// Raised when a computed result disagrees with another method or a reference.
class Mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json json_int(Int128 v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return to_string(v);
}

struct Context {
    std::ostream& out;
    bool json = false;
    std::string echo;

    Json record(const std::string& command) const {
        Json r;
        r["command"] = command;
        r["echo"] = echo;
        return r;
    }
    void emit(const Json& r) const { out << r.dump() << '\n'; }
};

// ---- fuse ----

struct FuseArgs {
    std::string algebra;
    int level = 0;
    std::string labels;
    std::string mode = "fusion";
    std::string engine = "rule";
};

void cmd_fuse(const Context& ctx, const FuseArgs& a) {
    const AlgebraId id = AlgebraId::parse(a.algebra);
    const auto rs = RootSystem::build(id);
    Weight mu;
    std::optional<AffineWeight> mu_hat;
    if (!a.labels.empty() && a.labels.front() == '(') {
        mu_hat = AffineWeight::parse(a.labels, a.level);
        if (mu_hat->rank() != id.rank)
            throw AlgebraMismatch(id.str() + " needs " + std::to_string(id.rank + 1) + " affine labels");
        if (mu_hat->labels[0] + rs->theta_product(mu_hat->finite()) != a.level)
            throw LevelMismatch("labels " + mu_hat->str() + " do not have level " + std::to_string(a.level));
        mu = mu_hat->finite();
    } else {
        mu = Weight::parse(a.labels);
        if (mu.rank() != id.rank)
            throw AlgebraMismatch(id.str() + " needs " + std::to_string(id.rank) + " labels, got " +
                                  std::to_string(mu.rank()));
    }
    if (!mu.is_dominant()) throw std::domain_error("mu = " + mu.str() + " is not dominant");

    FusionDecomposition result;
    if (a.mode == "fusion") {
        if (a.level < 2) throw LevelTooSmall("fusion needs level >= 2, got " + std::to_string(a.level));
        if (!mu_hat) mu_hat = affinize(*rs, mu, a.level);
        result = a.engine == "rule" ? AdjointRules(rs).decompose(*mu_hat) : Oracle(rs).kac_walton_fusion(*mu_hat);
    } else {
        result = a.engine == "rule" ? AdjointRules(rs).decompose_tensor(mu) : Oracle(rs).racah_speiser_tensor(mu);
    }

    if (ctx.json) {
        Json r = ctx.record("fuse");
        r["algebra"] = id.str();
        r["level"] = a.mode == "fusion" ? Json(a.level) : Json(nullptr);
        r["mode"] = a.mode;
        r["engine"] = a.engine;
        r["mu"] = mu.labels;
        Json entries = Json::array();
        for (const auto& [nu, m] : result.entries) {
            Json e;
            e["nu"] = nu.labels;
            if (a.mode == "fusion") e["nu_hat"] = affinize(*rs, nu, a.level).labels;
            e["multiplicity"] = m;
            entries.push_back(e);
        }
        r["entries"] = entries;
        ctx.emit(r);
        return;
    }
    for (const auto& [nu, m] : result.entries) ctx.out << nu.str() << ": " << m << '\n';
}

// ---- tadpole ----

struct TadpoleArgs {
    std::string algebra;
    int level = 0;
    std::string method = "enum";
    bool zero = false;
    bool as_printed = false;
};

void cmd_tadpole(const Context& ctx, const TadpoleArgs& a) {
    const AlgebraId id = AlgebraId::parse(a.algebra);
    const auto rs = RootSystem::build(id);
    const FormulaVariant variant = a.as_printed ? FormulaVariant::printed : FormulaVariant::corrected;
    if (!a.zero && a.level < 2) throw LevelTooSmall("the adjoint tadpole needs level >= 2, got " + std::to_string(a.level));
    if (a.zero && a.level < 0) throw LevelTooSmall("level must be nonnegative, got " + std::to_string(a.level));

    std::vector<std::pair<TadpoleMethod, Int128>> values;
    auto run = [&](TadpoleMethod m) {
        Int128 v = 0;
        switch (m) {
            case TadpoleMethod::formula:
                v = a.zero ? zero_tadpole_formula(id, a.level) : adjoint_tadpole_formula(id, a.level, variant);
                break;
            case TadpoleMethod::enumeration:
                v = a.zero ? zero_tadpole_enum(*rs, a.level) : adjoint_tadpole_enum(*rs, a.level);
                break;
            case TadpoleMethod::oracle: {
                Oracle oracle(rs);
                v = a.zero ? zero_tadpole_oracle(oracle, a.level) : adjoint_tadpole_oracle(oracle, a.level);
                break;
            }
        }
        values.push_back({m, v});
    };
    if (a.method == "formula") {
        run(TadpoleMethod::formula);
    } else if (a.method == "enum") {
        run(TadpoleMethod::enumeration);
    } else if (a.method == "oracle") {
        run(TadpoleMethod::oracle);
    } else {
        if (has_closed_form(id)) run(TadpoleMethod::formula);
        run(TadpoleMethod::enumeration);
    }

    if (ctx.json) {
        Json r = ctx.record("tadpole");
        r["algebra"] = id.str();
        r["level"] = a.level;
        r["tadpole"] = a.zero ? "T_0" : "T_theta";
        if (has_closed_form(id)) {
            PiecewisePolynomial p = a.zero ? zero_tadpole_polynomial(id) : adjoint_tadpole_polynomial(id, variant);
            r["branch"] = branch_name(p.period, a.level % p.period);
        }
        Json results = Json::array();
        for (const auto& [m, v] : values) results.push_back(Json{{"method", to_string(m)}, {"value", json_int(v)}});
        r["results"] = results;
        ctx.emit(r);
    } else {
        for (const auto& [m, v] : values) ctx.out << to_string(m) << ": " << to_string(v) << '\n';
    }
    for (const auto& [m, v] : values)
        if (v != values.front().second)
            throw Mismatch(id.str() + " level " + std::to_string(a.level) + ": " + to_string(values.front().first) +
                           " gives " + to_string(values.front().second) + " but " + to_string(m) + " gives " +
                           to_string(v));
}

// ---- table ----

struct TableArgs {
    std::string name;
    bool check = false;
    std::string algebra;
    int max_rank = 7;
    int max_level = 8;
    bool as_printed = false;
};

std::string threshold_str(int index, int value) { return "mu_" + std::to_string(index) + " >= " + std::to_string(value); }

void table_b(const Context& ctx, const TableArgs& a) {
    const auto cells = regenerate_b_tadpoles(a.as_printed ? FormulaVariant::printed : FormulaVariant::corrected);
    int good = 0;
    for (const auto& c : cells) good += c.ok() ? 1 : 0;
    if (ctx.json) {
        for (const auto& c : cells) {
            Json r = ctx.record("table");
            r["table"] = a.name;
            r["algebra"] = AlgebraId{Family::B, c.rank}.str();
            r["level"] = c.level;
            r["formula"] = json_int(c.formula);
            r["enumeration"] = json_int(c.enumeration);
            if (a.check) {
                r["reference"] = json_int(c.expected);
                r["match"] = c.ok();
            }
            ctx.emit(r);
        }
    } else {
        ctx.out << std::setw(4) << "k";
        for (int r = kBTableMinRank; r <= kBTableMaxRank; ++r) ctx.out << std::setw(8) << ("B" + std::to_string(r));
        ctx.out << '\n';
        for (int k = kBTableMinLevel; k <= kBTableMaxLevel; ++k) {
            ctx.out << std::setw(4) << k;
            for (const auto& c : cells)
                if (c.level == k) ctx.out << std::setw(8) << to_string(c.enumeration) << (a.check && !c.ok() ? "!" : "");
            ctx.out << '\n';
        }
    }
    if (a.check) {
        std::ostringstream summary;
        summary << good << "/" << cells.size() << " cells match";
        if (!ctx.json) ctx.out << summary.str() << '\n';
        if (good != static_cast<int>(cells.size())) throw Mismatch("b-tadpoles: " + summary.str());
    }
}

void table_g2(const Context& ctx, const TableArgs& a) {
    const auto rows = regenerate_g2_offdiag(a.max_level);
    const auto& reference = g2_offdiag_reference();
    int good = 0;
    int starred = 0;
    auto triple = [](const std::array<int, 3>& t, const std::array<bool, 3>* stars, bool signs) {
        std::string s = "(";
        for (int j = 0; j < 3; ++j) {
            if (j) s += ",";
            if (signs && t[j] > 0) s += "+";
            s += std::to_string(t[j]);
            if (stars && (*stars)[j]) s += "*";
        }
        return s + ")";
    };
    if (!ctx.json) ctx.out << std::left << std::setw(10) << "beta" << std::setw(14) << "mu-hat >=" << "nu-hat - mu-hat\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        bool ok = i < reference.size() && row == reference[i];
        good += ok ? 1 : 0;
        starred += static_cast<int>(std::count(row.nontrivial.begin(), row.nontrivial.end(), true));
        if (ctx.json) {
            Json r = ctx.record("table");
            r["table"] = a.name;
            r["algebra"] = "G2";
            r["beta"] = row.coords;
            r["thresholds"] = row.thresholds;
            r["offset"] = row.offset;
            r["nontrivial"] = row.nontrivial;
            if (a.check) r["match"] = ok;
            ctx.emit(r);
        } else {
            ctx.out << std::setw(10) << coords_str({row.coords[0], row.coords[1]}) << std::setw(14)
                    << triple(row.thresholds, &row.nontrivial, false) << triple(row.offset, nullptr, true)
                    << (a.check && !ok ? "  !" : "") << '\n';
        }
    }
    ctx.out << std::right;
    if (a.check) {
        std::string summary = std::to_string(good) + "/" + std::to_string(reference.size()) + " rows match, " +
                              std::to_string(starred) + " starred";
        if (!ctx.json) ctx.out << summary << '\n';
        if (good != static_cast<int>(reference.size()) || rows.size() != reference.size())
            throw Mismatch("g2-offdiag: " + summary);
    }
}

void table_nontrivial(const Context& ctx, const TableArgs& a) {
    std::vector<AlgebraId> algebras =
        a.algebra.empty() ? nontrivial_algebras(a.max_rank) : std::vector<AlgebraId>{AlgebraId::parse(a.algebra)};
    const Transcription copy = a.as_printed ? Transcription::printed : Transcription::corrected;
    std::vector<std::string> problems;
    for (AlgebraId id : algebras) {
        const auto rs = RootSystem::build(id);
        const auto rows = regenerate_nontrivial(*rs);
        for (const auto& row : rows) {
            if (ctx.json) {
                Json r = ctx.record("table");
                r["table"] = a.name;
                r["algebra"] = id.str();
                r["beta"] = row.coords;
                r["index"] = row.index + 1;
                r["threshold_plus"] = row.threshold_plus;
                r["threshold_minus"] = row.threshold_minus;
                ctx.emit(r);
            } else {
                ctx.out << std::left << std::setw(5) << id.str() << std::setw(16) << coords_str(row.coords)
                        << std::setw(14) << threshold_str(row.index + 1, row.threshold_plus)
                        << threshold_str(row.index + 1, row.threshold_minus) << std::right << '\n';
            }
        }
        if (a.check) {
            NontrivialDiff diff = compare_nontrivial(*rs, copy);
            for (const auto& row : diff.missing_from_reference)
                problems.push_back(id.str() + " " + coords_str(row.coords) + " generated but not in the reference");
            for (const auto& row : diff.missing_from_generated)
                problems.push_back(id.str() + " " + coords_str(row.coords) + " in the reference but not generated");
            if (!ctx.json)
                ctx.out << id.str() << ": " << rows.size() << " roots, " << (diff.ok() ? "match" : "MISMATCH") << '\n';
        }
    }
    if (!problems.empty()) {
        std::string msg = "nontrivial: " + std::to_string(problems.size()) + " differences; first: " + problems.front();
        throw Mismatch(msg);
    }
}

void table_f4(const Context& ctx, const TableArgs& a) {
    const auto rows = regenerate_f4_strings();
    const auto& reference = f4_strings_reference();
    auto labels = [](const std::array<int, 4>& l) {
        std::string s = "(";
        for (int j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string(l[static_cast<std::size_t>(j)]);
        return s + ")";
    };
    int good = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool ok = i < reference.size() && rows[i] == reference[i];
        good += ok ? 1 : 0;
        if (ctx.json) {
            Json r = ctx.record("table");
            r["table"] = a.name;
            r["algebra"] = "F4";
            r["beta"] = rows[i].coords;
            r["index"] = rows[i].index + 1;
            r["lower"] = rows[i].lower;
            r["upper"] = rows[i].upper;
            if (a.check) r["match"] = ok;
            ctx.emit(r);
        } else {
            ctx.out << std::left << std::setw(12) << coords_str(rows[i].coords) << "i=" << std::setw(3)
                    << rows[i].index + 1 << std::setw(16) << labels(rows[i].lower) << labels(rows[i].upper)
                    << std::right << (a.check && !ok ? "  !" : "") << '\n';
        }
    }
    if (a.check) {
        std::string summary = std::to_string(good) + "/" + std::to_string(reference.size()) + " strings match";
        if (!ctx.json) ctx.out << summary << '\n';
        if (good != static_cast<int>(reference.size()) || rows.size() != reference.size())
            throw Mismatch("f4-strings: " + summary);
    }
}

void cmd_table(const Context& ctx, const TableArgs& a) {
    if (a.name == "b-tadpoles") return table_b(ctx, a);
    if (a.name == "g2-offdiag") return table_g2(ctx, a);
    if (a.name == "nontrivial") return table_nontrivial(ctx, a);
    return table_f4(ctx, a);
}

// ---- verify ----

struct VerifyArgs {
    int max_rank = 4;
    int max_level = 6;
    std::vector<std::string> suites;
    int threads = 0;
    bool as_printed = false;
    std::string fault;
};

void cmd_verify(const Context& ctx, const VerifyArgs& a) {
    VerifyOptions options;
    options.max_rank = a.max_rank;
    options.max_level = a.max_level;
    for (const auto& s : a.suites) options.suites.push_back(parse_suite(s));
    options.threads = a.threads > 0 ? static_cast<unsigned>(a.threads) : configured_threads();
    if (a.as_printed) {
        options.variant = FormulaVariant::printed;
        options.copy = Transcription::printed;
    }
    if (!a.fault.empty()) options.fault = parse_fault(a.fault);

    const VerifyReport report = run_verify(options);
    for (const auto& s : report.suites) {
        if (ctx.json) {
            Json r = ctx.record("verify");
            r["suite"] = to_string(s.suite);
            r["checks"] = s.checks;
            r["failures"] = s.failures.size();
            if (!s.failures.empty()) {
                const auto& f = s.failures.front();
                r["first"] = Json{{"algebra", f.algebra}, {"level", f.level < 0 ? Json(nullptr) : Json(f.level)},
                                  {"detail", f.detail}};
            }
            ctx.emit(r);
        } else {
            ctx.out << std::left << std::setw(10) << to_string(s.suite) << std::right << std::setw(9) << s.checks
                    << " checks  " << s.failures.size() << " failures\n";
        }
    }
    if (const Counterexample* f = report.first_failure()) {
        std::string where = f->algebra + (f->level >= 0 ? " level " + std::to_string(f->level) : "");
        throw Mismatch(to_string(f->suite) + ": " + where + ": " + f->detail);
    }
}

int classify(const std::exception& e) {
    if (dynamic_cast<const Mismatch*>(&e)) return kMismatch;
    if (dynamic_cast<const NoClosedForm*>(&e)) return kNoClosedForm;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const AlgebraMismatch*>(&e)) return kParseError;
    return kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adjoint affine fusion coefficients and fusion tadpoles", "fusionkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit line-delimited JSON records");

    FuseArgs fuse;
    auto* fuse_cmd = app.add_subcommand("fuse", "Decompose adjoint x L(mu)");
    fuse_cmd->add_option("algebra", fuse.algebra, "Algebra, e.g. A2, G2")->required();
    fuse_cmd->add_option("level", fuse.level, "Level k")->required();
    fuse_cmd->add_option("labels", fuse.labels, "Dynkin labels '1,0' or affine '(l0; l1,...)'")->required();
    fuse_cmd->add_option("--mode", fuse.mode)->check(CLI::IsMember({"fusion", "tensor"}));
    fuse_cmd->add_option("--engine", fuse.engine)->check(CLI::IsMember({"rule", "oracle"}));

    TadpoleArgs tadpole;
    auto* tadpole_cmd = app.add_subcommand("tadpole", "Adjoint (or zero) fusion tadpole");
    tadpole_cmd->add_option("algebra", tadpole.algebra)->required();
    tadpole_cmd->add_option("level", tadpole.level)->required();
    tadpole_cmd->add_option("--method", tadpole.method)->check(CLI::IsMember({"enum", "formula", "oracle", "all"}));
    tadpole_cmd->add_flag("--zero", tadpole.zero, "Zero tadpole |P_+^k| instead of T_theta");
    tadpole_cmd->add_flag("--as-printed", tadpole.as_printed, "Use the D_r odd branch with coefficient 4r");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Regenerate a reference table");
    table_cmd->add_option("name", table.name)
        ->required()
        ->check(CLI::IsMember({"b-tadpoles", "g2-offdiag", "nontrivial", "f4-strings"}));
    table_cmd->add_flag("--check", table.check, "Compare against the embedded reference copy");
    table_cmd->add_option("--algebra", table.algebra, "Restrict the nontrivial table to one algebra");
    table_cmd->add_option("--max-rank", table.max_rank, "Largest classical rank for the nontrivial table");
    table_cmd->add_option("--max-level", table.max_level, "Largest level scanned for g2-offdiag")
        ->check(CLI::Range(2, 30));
    table_cmd->add_flag("--as-printed", table.as_printed, "Compare against the verbatim transcription");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-method verification suites");
    verify_cmd->add_option("--max-rank", verify.max_rank)->check(CLI::Range(1, 8));
    verify_cmd->add_option("--max-level", verify.max_level)->check(CLI::Range(1, 40));
    verify_cmd->add_option("--suite", verify.suites, "rules, tadpole, tables, structure (repeatable)");
    verify_cmd->add_option("--threads", verify.threads, "Worker count (default FUSIONKIT_THREADS)");
    verify_cmd->add_flag("--as-printed", verify.as_printed, "Check the verbatim formulas and tables");
    verify_cmd->add_option("--inject-fault", verify.fault)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    std::string echo;
    for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
    Context ctx{out, json, echo};
    try {
        if (fuse_cmd->parsed()) cmd_fuse(ctx, fuse);
        if (tadpole_cmd->parsed()) cmd_tadpole(ctx, tadpole);
        if (table_cmd->parsed()) cmd_table(ctx, table);
        if (verify_cmd->parsed()) cmd_verify(ctx, verify);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return classify(e);
    }
    return kOk;
}

FusionDecomposition decomposition_from_record(const std::string& line) {
    Json r;
    try {
        r = Json::parse(line);
        if (r.at("command") != "fuse") throw ParseError("not a fuse record");
        FusionDecomposition d;
        d.algebra = AlgebraId::parse(r.at("algebra").get<std::string>());
        if (!r.at("level").is_null()) d.level = r.at("level").get<int>();
        for (const auto& e : r.at("entries"))
            d.entries.emplace(Weight(e.at("nu").get<std::vector<int>>()), e.at("multiplicity").get<long long>());
        return d;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed fuse record: ") + e.what());
    }
}

}  // namespace fusionkit::cli
