#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/algebra.hpp"
#include "cyclo/chern.hpp"
#include "cyclo/cyclic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/growth.hpp"
#include "cyclo/hochschild.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/report_io.hpp"
#include "cyclo/verify.hpp"

namespace {

using namespace cyclo;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
    std::string family;
    std::string input;
    std::size_t truncation = 1;
    std::size_t cutoff = 4;
    bool unnormalized = false;
    bool no_mod_check = false;
    bool force_size = false;
    std::string format = "text";
    std::string cache_dir;
};

void add_algebra_options(CLI::App* cmd, CommonOpts& o, bool with_cutoff = true) {
    cmd->add_option("--family", o.family,
                    "built-in family: field, m2, m3, dual, s1, su2");
    cmd->add_option("--input", o.input, "algebra definition file (JSON)");
    cmd->add_option("--truncation", o.truncation, "truncation level for s1/su2 families");
    if (with_cutoff) cmd->add_option("--cutoff", o.cutoff, "top degree of the report");
    cmd->add_flag("--unnormalized", o.unnormalized, "use the unnormalized chain complex");
    cmd->add_flag("--no-mod-check", o.no_mod_check, "skip the modular rank cross-check");
    cmd->add_flag("--force-size", o.force_size, "override the per-degree size cap");
    cmd->add_option("--format", o.format, "output format: text, json, csv");
    cmd->add_option("--cache-dir", o.cache_dir,
                    "differential cache directory (or set CYCLO_CACHE_DIR)");
}

struct LoadedAlgebra {
    Algebra algebra;
    std::optional<BlockDecomposition> blocks;
    std::string name;
};

LoadedAlgebra resolve_algebra(const CommonOpts& o) {
    if (!o.family.empty() && !o.input.empty())
        throw InputError("give either --family or --input, not both");
    if (!o.input.empty()) return {load_algebra_file(o.input), std::nullopt, o.input};
    if (o.family == "field") {
        auto [a, b] = truncated_convolution(CompactGroup::S1, 0);
        return {std::move(a), std::move(b), "field"};
    }
    if (o.family == "m2") {
        BlockDecomposition bd{{2}, {0}};
        return {matrix_algebra(2), std::move(bd), "m2"};
    }
    if (o.family == "m3") {
        BlockDecomposition bd{{3}, {0}};
        return {matrix_algebra(3), std::move(bd), "m3"};
    }
    if (o.family == "dual") return {dual_numbers(), std::nullopt, "dual"};
    if (o.family == "s1") {
        auto [a, b] = truncated_convolution(CompactGroup::S1, o.truncation);
        return {std::move(a), std::move(b), "s1"};
    }
    if (o.family == "su2") {
        auto [a, b] = truncated_convolution(CompactGroup::SU2, o.truncation);
        return {std::move(a), std::move(b), "su2"};
    }
    if (o.family.empty()) throw InputError("an algebra is required: --family or --input");
    throw InputError("unknown family: " + o.family);
}

struct Session {
    ComputeOptions opts;
    std::unique_ptr<DiffCache> cache;
    OutputFormat format = OutputFormat::Text;
};

Session make_session(const CommonOpts& o) {
    Session s;
    s.opts.normalized = !o.unnormalized;
    s.opts.mod_check = !o.no_mod_check;
    s.opts.force_size = o.force_size;
    s.format = format_from_name(o.format);
    std::string dir = o.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("CYCLO_CACHE_DIR")) dir = env;
    if (!dir.empty()) {
        s.cache = std::make_unique<DiffCache>(dir);
        s.opts.cache = s.cache.get();
    }
    return s;
}

int run_homology(const CommonOpts& o, Theory theory) {
    Session s = make_session(o);
    const LoadedAlgebra la = resolve_algebra(o);
    HomologyReport rep;
    switch (theory) {
        case Theory::HH: rep = hh_dims(la.algebra, o.cutoff, s.opts); break;
        case Theory::HH_co: rep = hh_cohomology_dims(la.algebra, o.cutoff, s.opts); break;
        case Theory::HC: rep = hc_dims(la.algebra, o.cutoff, s.opts); break;
        case Theory::HC_co: rep = hc_cohomology_dims(la.algebra, o.cutoff, s.opts); break;
        case Theory::HP: rep = hp_dims(la.algebra, o.cutoff, s.opts); break;
        case Theory::HP_co: rep = hp_cohomology_dims(la.algebra, o.cutoff, s.opts); break;
    }
    std::cout << render_homology_report(rep, s.format);
    return kExitOk;
}

int run_algebra_check(const CommonOpts& o) {
    Session s = make_session(o);
    const LoadedAlgebra la = resolve_algebra(o);
    const AssociativityReport assoc = check_associative(la.algebra);
    const UnitReport unit = check_unit(la.algebra);
    const bool ok = assoc.ok && (!unit.has_unit || unit.ok);
    if (s.format == OutputFormat::Json) {
        json j;
        j["dim"] = la.algebra.dim();
        j["associative"] = assoc.ok;
        j["witness"] = assoc.ok ? json(nullptr)
                                : json::array({assoc.witness[0], assoc.witness[1], assoc.witness[2]});
        j["has_unit"] = unit.has_unit;
        j["unit_ok"] = !unit.has_unit ? json(nullptr) : json(unit.ok);
        j["unit_witness"] = (unit.has_unit && !unit.ok) ? json(unit.witness) : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim: " << la.algebra.dim() << "\n";
        if (assoc.ok) {
            std::cout << "associative: yes\n";
        } else {
            const auto& lbl = la.algebra.labels();
            std::cout << "associative: NO\nwitness: (" << lbl[assoc.witness[0]] << ", "
                      << lbl[assoc.witness[1]] << ", " << lbl[assoc.witness[2]] << ") = indices ("
                      << assoc.witness[0] << ", " << assoc.witness[1] << ", " << assoc.witness[2]
                      << ")\n";
        }
        if (!unit.has_unit)
            std::cout << "unit: none declared\n";
        else if (unit.ok)
            std::cout << "unit: valid two-sided identity\n";
        else
            std::cout << "unit: INVALID at basis index " << unit.witness << "\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int run_sbi(const CommonOpts& o) {
    Session s = make_session(o);
    const LoadedAlgebra la = resolve_algebra(o);
    const SBICertificate cert = sbi_report(la.algebra, o.cutoff, s.opts);
    std::cout << render_sbi_certificate(cert, s.format);
    return cert.all_exact ? kExitOk : kExitMathFailure;
}

std::string matrix_to_text(const RationalMatrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m.at(r, c));
        out << "]\n";
    }
    return out.str();
}

int run_chern(const CommonOpts& o) {
    Session s = make_session(o);
    const LoadedAlgebra la = resolve_algebra(o);
    if (!la.blocks)
        throw InputError("chern needs a block-decomposed family (field, m2, m3, s1, su2)");
    const RationalMatrix cm = chern_matrix(la.algebra, *la.blocks);
    const std::size_t cm_rank = rank_checked(cm, s.opts.mod_check);
    const bool invertible = cm_rank == cm.rows();
    // Closedness of every block generator's character up to the requested even degree.
    const std::size_t top = o.cutoff - o.cutoff % 2;
    bool closed = true;
    for (std::size_t blk = 0; blk < la.blocks->block_sizes.size(); ++blk) {
        Idempotent e;
        e.coeffs.assign(la.algebra.dim(), Rational(0));
        e.coeffs[la.blocks->block_offsets[blk]] = 1;
        chern_character(la.algebra, e, top, s.opts); // throws if the cycle condition fails
    }
    if (s.format == OutputFormat::Json) {
        json rows = json::array();
        for (std::size_t r = 0; r < cm.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < cm.cols(); ++c) row.push_back(to_string(cm.at(r, c)));
            rows.push_back(row);
        }
        json j;
        j["pairing_matrix"] = rows;
        j["rank"] = cm_rank;
        j["invertible"] = invertible;
        j["checked_even_degree"] = top;
        j["cycles_closed"] = closed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chern pairing matrix (traces x minimal idempotents):\n" << matrix_to_text(cm);
        std::cout << "rank: " << cm_rank << (invertible ? " (invertible)" : " (SINGULAR)") << "\n";
        std::cout << "characters (b+B)-closed up to degree " << top << ": yes\n";
    }
    return invertible ? kExitOk : kExitMathFailure;
}

int run_verify_all(const CommonOpts& o) {
    Session s = make_session(o);
    const std::size_t cutoff = o.cutoff;
    bool all_ok = true;
    auto line = [&](const std::string& name, bool ok, const std::string& detail = "") {
        all_ok = all_ok && ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
    };

    const Algebra field = matrix_algebra(1);
    const Algebra m2 = matrix_algebra(2);
    const Algebra m3 = matrix_algebra(3);
    const Algebra dual = dual_numbers();
    auto [s1n1, s1n1_blocks] = truncated_convolution(CompactGroup::S1, 1);
    auto [su2n2, su2n2_blocks] = truncated_convolution(CompactGroup::SU2, 2);

    {
        const auto rep = verify_additivity(field, field, std::min<std::size_t>(cutoff, 4), s.opts);
        line("additivity field+field", rep.additive);
        const auto rep2 = verify_additivity(dual, m2, std::min<std::size_t>(cutoff, 3), s.opts);
        line("additivity dual+m2", rep2.additive);
    }
    for (const auto& [name, alg] : {std::pair<std::string, const Algebra*>{"field", &field},
                                    {"m2", &m2},
                                    {"m3", &m3},
                                    {"s1 N=1", &s1n1},
                                    {"su2 N=2", &su2n2}}) {
        auto e = separability_idempotent(*alg);
        line("separability " + name, e && is_separability_idempotent(*alg, *e));
    }
    line("separability dual rejected", !separability_idempotent(dual).has_value(),
         "NotSeparable as expected");
    for (const auto& [name, alg] : {std::pair<std::string, const Algebra*>{"field", &field},
                                    {"dual", &dual},
                                    {"m2+field", nullptr}}) {
        const Algebra sum = alg ? *alg : direct_sum(m2, field);
        const auto rep = resolution_of_unitalization(sum, s.opts.mod_check);
        std::ostringstream detail;
        detail << "homology [" << rep.homology[0] << ", " << rep.homology[1] << ", "
               << rep.homology[2] << "]";
        line("resolution " + name, rep.exact, detail.str());
    }
    {
        BlockDecomposition m2_blocks{{2}, {0}};
        const RationalMatrix p = adjoint_projection(m2, m2_blocks);
        line("adjoint projection m2", p.times(p) == p && rank_checked(p, s.opts.mod_check) == 1);
        const RationalMatrix p2 = adjoint_projection(su2n2, su2n2_blocks);
        line("adjoint projection su2 N=2",
             p2.times(p2) == p2 && rank_checked(p2, s.opts.mod_check) == 2);
        const RationalMatrix p3 = adjoint_projection(s1n1, s1n1_blocks);
        line("adjoint projection s1 N=1 (identity)", p3 == RationalMatrix::identity(3));
    }
    {
        const auto hh_field = hh_dims(field, std::min<std::size_t>(cutoff, 3), s.opts).dims;
        const auto hh_m2 = hh_dims(m2, std::min<std::size_t>(cutoff, 3), s.opts).dims;
        const auto hh_m3 = hh_dims(m3, std::min<std::size_t>(cutoff, 2), s.opts).dims;
        bool morita = true;
        for (std::size_t n = 0; n < hh_m2.size(); ++n) morita = morita && hh_m2[n] == hh_field[n];
        for (std::size_t n = 0; n < hh_m3.size(); ++n) morita = morita && hh_m3[n] == hh_field[n];
        line("Morita invariance m2, m3 vs field", morita);
    }
    std::cout << (all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
    return all_ok ? kExitOk : kExitMathFailure;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        case Membership::Undecided: return "undecided";
    }
    return "?";
}

json table_to_json(const ClassificationTable& t) {
    json j;
    j["weight"] = t.weight == Weight::Dim ? "n" : "1";
    j["FinitelySupported"] = membership_name(t.finitely_supported);
    j["PolynomialGrowth"] = membership_name(t.polynomial_growth);
    j["DimWeightedSummable"] = membership_name(t.dim_weighted_summable);
    j["FinGenSubgroupEntries"] = membership_name(t.fin_gen_subgroup);
    j["Arbitrary"] = membership_name(t.arbitrary);
    return j;
}

void print_table_text(const GrowthSequence& seq, const ClassificationTable& t) {
    std::cout << "sequence: " << seq.to_string() << "\n";
    std::cout << "weight: " << (t.weight == Weight::Dim ? "n" : "1") << "\n";
    std::cout << "FinitelySupported:     " << membership_name(t.finitely_supported) << "\n";
    std::cout << "PolynomialGrowth:      " << membership_name(t.polynomial_growth) << "\n";
    std::cout << "DimWeightedSummable:   " << membership_name(t.dim_weighted_summable) << "\n";
    std::cout << "FinGenSubgroupEntries: " << membership_name(t.fin_gen_subgroup) << "\n";
    std::cout << "Arbitrary:             " << membership_name(t.arbitrary) << "\n";
}

Weight weight_from_string(const std::string& w) {
    if (w == "1") return Weight::One;
    if (w == "n") return Weight::Dim;
    throw InputError("weight must be 1 or n");
}

int run_growth_classify(const std::string& expr, const std::string& support, const std::string& w,
                        const std::string& format) {
    if (expr.empty() == support.empty())
        throw InputError("give exactly one of --seq or --support");
    const GrowthSequence seq = expr.empty() ? parse_support(support) : parse_sequence(expr);
    const ClassificationTable t = classify(seq, weight_from_string(w));
    if (format_from_name(format) == OutputFormat::Json) {
        json j = table_to_json(t);
        j["sequence"] = seq.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        print_table_text(seq, t);
    }
    return kExitOk;
}

int run_growth_witness(const std::string& lower, const std::string& upper, const std::string& w,
                       const std::string& format) {
    const Weight weight = weight_from_string(w);
    const GrowthSequence seq =
        inclusion_witness(growth_class_from_name(lower), growth_class_from_name(upper), weight);
    const ClassificationTable t = classify(seq, weight);
    if (format_from_name(format) == OutputFormat::Json) {
        json j;
        j["witness"] = seq.to_string();
        j["classification"] = table_to_json(t);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "witness for " << lower << " < " << upper << ":\n";
        print_table_text(seq, t);
    }
    return kExitOk;
}

int run_lim_prod(std::size_t stages, const std::string& format) {
    const LimProdCertificate cert = lim_prod_demo(stages);
    if (format_from_name(format) == OutputFormat::Json) {
        json j;
        j["stages"] = cert.stages;
        j["support_bound"] = cert.support_bound;
        j["first_uncovered"] = cert.first_uncovered;
        j["obstruction_at_every_stage"] = cert.obstruction_at_every_stage;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "staircase system X_{j,m} = Q for m >= j, inclusions as structure maps\n";
        std::cout << "target: the all-ones element of prod_j colim_m X_{j,m} (support on every j)\n";
        std::cout << "stage  max support  first uncovered coordinate\n";
        for (std::size_t i = 0; i < cert.stages; ++i)
            std::cout << (i + 1) << "      " << cert.support_bound[i] << "            "
                      << cert.first_uncovered[i] << "\n";
        std::cout << "every colim-of-products element has support bounded by its stage;\n";
        std::cout << "the all-ones element is never attained: obstruction at every stage\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclo — exact-arithmetic Hochschild / cyclic / periodic cyclic homology workbench"};
    app.require_subcommand(1);

    CommonOpts hh_o, hhco_o, hc_o, hcco_o, hp_o, hpco_o, sbi_o, check_o, chern_o, verify_o;

    auto* algebra = app.add_subcommand("algebra", "inspect an algebra");
    auto* algebra_check = algebra->add_subcommand("check", "validate associativity and the unit");
    algebra_check->positionals_at_end();
    std::string check_positional;
    algebra_check->add_option("file", check_positional, "algebra definition file");
    add_algebra_options(algebra_check, check_o, false);

    auto* hh = app.add_subcommand("hh", "Hochschild homology dimensions");
    add_algebra_options(hh, hh_o);
    auto* hhco = app.add_subcommand("hh-co", "Hochschild cohomology dimensions");
    add_algebra_options(hhco, hhco_o);
    auto* hc = app.add_subcommand("hc", "cyclic homology dimensions");
    add_algebra_options(hc, hc_o);
    auto* hcco = app.add_subcommand("hc-co", "cyclic cohomology dimensions");
    add_algebra_options(hcco, hcco_o);
    auto* hp = app.add_subcommand("hp", "periodic cyclic homology via S-stabilization");
    add_algebra_options(hp, hp_o);
    auto* hpco = app.add_subcommand("hp-co", "periodic cyclic cohomology via S-stabilization");
    add_algebra_options(hpco, hpco_o);
    auto* sbi = app.add_subcommand("sbi", "SBI sequence exactness certificate");
    add_algebra_options(sbi, sbi_o);
    auto* chern = app.add_subcommand("chern", "Chern character pairing matrix and cycle checks");
    add_algebra_options(chern, chern_o);

    auto* verify = app.add_subcommand("verify", "structural verification suites");
    auto* verify_all = verify->add_subcommand("all", "run every verifier on the built-in corpus");
    verify_all->add_option("--cutoff", verify_o.cutoff, "homology cutoff for the suites")
        ->default_val(3);
    verify_all->add_flag("--no-mod-check", verify_o.no_mod_check);
    verify_all->add_option("--cache-dir", verify_o.cache_dir);

    auto* growth = app.add_subcommand("growth", "growth-class model of the cohomology answers");
    auto* gclassify = growth->add_subcommand("classify", "classify a sequence");
    std::string g_expr, g_support, g_weight = "1", g_format = "text";
    gclassify->add_option("--seq", g_expr, "symbolic sequence, e.g. \"n^3\" or \"2^n\"");
    gclassify->add_option("--support", g_support, "finite support list, e.g. \"0=1,3=2/5\"");
    gclassify->add_option("--weight", g_weight, "summability weight: 1 or n");
    gclassify->add_option("--format", g_format);
    auto* gwitness = growth->add_subcommand("witness", "strict-inclusion witness");
    std::string w_lower, w_upper, w_weight = "1", w_format = "text";
    gwitness->add_option("--lower", w_lower)->required();
    gwitness->add_option("--upper", w_upper)->required();
    gwitness->add_option("--weight", w_weight);
    gwitness->add_option("--format", w_format);

    auto* demo = app.add_subcommand("demo", "structural counterexample demos");
    auto* limprod = demo->add_subcommand("lim-prod", "limits vs products obstruction certificate");
    std::size_t stages = 10;
    std::string lp_format = "text";
    limprod->add_option("--stages", stages, "number of stages to tabulate");
    limprod->add_option("--format", lp_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (algebra_check->parsed()) {
            if (!check_positional.empty()) check_o.input = check_positional;
            return run_algebra_check(check_o);
        }
        if (hh->parsed()) return run_homology(hh_o, Theory::HH);
        if (hhco->parsed()) return run_homology(hhco_o, Theory::HH_co);
        if (hc->parsed()) return run_homology(hc_o, Theory::HC);
        if (hcco->parsed()) return run_homology(hcco_o, Theory::HC_co);
        if (hp->parsed()) return run_homology(hp_o, Theory::HP);
        if (hpco->parsed()) return run_homology(hpco_o, Theory::HP_co);
        if (sbi->parsed()) return run_sbi(sbi_o);
        if (chern->parsed()) return run_chern(chern_o);
        if (verify_all->parsed()) return run_verify_all(verify_o);
        if (gclassify->parsed()) return run_growth_classify(g_expr, g_support, g_weight, g_format);
        if (gwitness->parsed()) return run_growth_witness(w_lower, w_upper, w_weight, w_format);
        if (limprod->parsed()) return run_lim_prod(stages, lp_format);
        std::cerr << "no subcommand given (try --help)\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const MathError& e) {
        std::cerr << "mathematical check failed: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
