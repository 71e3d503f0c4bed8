// latticetri: exact triangularizability analysis for nonnegative matrices
// and finitely generated matrix semigroups. JSON in, JSON out.
//
// Exit codes: 0 success/affirmative verdict, 1 negative verdict,
//             2 parse failure, 3 domain error, 70 internal assertion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latticetri/json_io.hpp"
#include "latticetri/latticetri.hpp"

namespace {

using namespace latticetri;

constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 70;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

Matrix load_matrix_file(const std::string& path) { return matrix_from_json(load_json_file(path)); }

void emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot write '" + out_path + "'");
    out << text;
}

json tool_info() { return json{{"name", "latticetri"}, {"version", kVersion}}; }

json seed_provenance() {
    const char* env = std::getenv("LATTICETRI_SEED");
    return env ? json(std::string(env)) : json();
}

std::uint64_t default_seed() {
    const char* env = std::getenv("LATTICETRI_SEED");
    if (!env) return 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw ParseError("LATTICETRI_SEED must be an unsigned integer");
    return static_cast<std::uint64_t>(value);
}

int run_analyze(const std::string& input, const std::string& output, bool with_oracle,
                bool with_idempotent) {
    const Matrix m = load_matrix_file(input);

    json report;
    report["tool"] = tool_info();
    report["seed_env"] = seed_provenance();
    report["input"] = matrix_to_json(m);

    const CriteriaReport criteria = criteria_equivalence(m);
    report["criteria"] = criteria_report_to_json(criteria);
    report["char_poly"] = charpoly_to_json(char_poly(m));
    VecR diag_entries(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) diag_entries[i] = m(i, i);
    report["diagonal_poly"] = charpoly_to_json(CharPoly::from_linear_factors(diag_entries));

    const Matrix diag = atomic_diagonal(m);
    const VoigtCheck voigt = voigt_contraction_check(m);
    report["diagonal"] = json{{"matrix", grid_to_json(diag)},
                              {"diagonal_norm", rational_to_json(voigt.diagonal_norm)},
                              {"input_norm", rational_to_json(voigt.input_norm)},
                              {"voigt_contraction", voigt.contraction},
                              {"band_projection", diagonal_band_projection_check(m)},
                              {"trace_preserved", diag.trace() == m.trace()}};

    {
        const std::vector<Matrix> family{m};
        const InvariantIdealAnalysis analysis = invariant_ideals(family);
        json ideals = json::array();
        for (const CoordIdeal& ideal : analysis.minimal_ideals) ideals.push_back(ideal_to_json(ideal));
        const auto witness = reducibility_witnesses(family);
        report["reducibility"] = json{{"irreducible", analysis.irreducible},
                                      {"minimal_ideals", std::move(ideals)},
                                      {"witness", witness ? witness_to_json(*witness) : json()}};
    }

    if (with_oracle) {
        const Matrix oracle = schep_oracle(m);
        report["schep"] = json{{"diag", grid_to_json(diag)},
                               {"schep", grid_to_json(oracle)},
                               {"equal", oracle == diag}};
    }

    if (with_idempotent) {
        if (verify_idempotent(m)) {
            const IdempotentDecomposition d = decompose_idempotent(m);
            const auto check = triangularizable_idempotent_check(m);
            report["idempotent"] = json{{"idempotent", true},
                                        {"decomposition", decomposition_to_json(d)},
                                        {"core_identity_check", check ? json(*check) : json()}};
        } else {
            report["idempotent"] = json{{"idempotent", false}};
        }
    }

    const SpectralRadiusEstimate estimate = spectral_radius_estimate(m);
    report["spectral_radius_estimate"] = json{{"value", estimate.value},
                                              {"converged", estimate.converged},
                                              {"iterations", estimate.iterations}};

    emit(report, output);
    return 0;
}

int run_idempotent(const std::string& input, const std::string& output) {
    const Matrix m = load_matrix_file(input);
    const IdempotentDecomposition d = decompose_idempotent(m);
    const auto check = triangularizable_idempotent_check(m);

    json parts_irreducible = json::array();
    for (const RankOnePart& part : d.parts)
        parts_irreducible.push_back(rank_one_irreducibility(part.column, part.functional));

    json report;
    report["tool"] = tool_info();
    report["input"] = matrix_to_json(m);
    report["decomposition"] = decomposition_to_json(d);
    report["verdicts"] =
        json{{"idempotent", true},
             {"rank", exact_rank(m)},
             {"structural_triangularizable", check.has_value()},
             {"core_identity_check", check ? json(*check) : json()},
             {"parts_irreducible", std::move(parts_irreducible)}};
    emit(report, output);
    return 0;
}

int run_semigroup(const std::vector<std::string>& gen_paths, std::size_t depth,
                  const std::string& output) {
    std::vector<Matrix> generators;
    generators.reserve(gen_paths.size());
    for (const std::string& path : gen_paths) generators.push_back(load_matrix_file(path));

    const SemigroupVerdict verdict = semigroup_pipeline(generators, depth);
    json report = verdict_to_json(verdict);
    report["tool"] = tool_info();
    emit(report, output);
    return verdict.commonly_triangularizable ? 0 : kExitNegative;
}

int run_oracle_schep(const std::string& input, const std::string& output) {
    const Matrix m = load_matrix_file(input);
    const Matrix diag = atomic_diagonal(m);
    const Matrix oracle = schep_oracle(m);
    emit(json{{"diag", grid_to_json(diag)},
              {"schep", grid_to_json(oracle)},
              {"equal", oracle == diag}},
         output);
    return 0;
}

struct GenOptions {
    std::string mode = "raw";
    std::size_t n = 4;
    bool n_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string density = "1/2";
    std::uint64_t max_numerator = 9;
    std::uint64_t max_denominator = 4;
    std::size_t kernel_size = 0;
    std::size_t core_size = 0;
    std::size_t cokernel_size = 0;
    bool sizes_given = false;
    std::size_t count = 3;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    GenSpec spec;
    spec.seed = opt.seed_given ? opt.seed : default_seed();
    spec.density = parse_rational(opt.density);
    spec.max_numerator = opt.max_numerator;
    spec.max_denominator = opt.max_denominator;

    if (opt.mode == "raw") spec.mode = GenMode::raw;
    else if (opt.mode == "triangularizable") spec.mode = GenMode::triangularizable;
    else if (opt.mode == "idempotent") spec.mode = GenMode::idempotent;
    else if (opt.mode == "semigroup-framed") spec.mode = GenMode::semigroup_framed;
    else throw DomainError("gen: unknown mode '" + opt.mode + "'");

    spec.n = opt.n;
    if (spec.mode == GenMode::idempotent) {
        if (opt.sizes_given) {
            spec.idempotent_sizes = {opt.kernel_size, opt.core_size, opt.cokernel_size};
            const std::size_t total = opt.kernel_size + opt.core_size + opt.cokernel_size;
            if (opt.n_given && total != opt.n)
                throw DomainError("gen: block sizes must sum to n");
            spec.n = total;
        } else {
            spec.idempotent_sizes = {0, spec.n, 0};
        }
    }

    if (spec.mode == GenMode::semigroup_framed) {
        if (opt.output.empty())
            throw DomainError("gen: semigroup-framed mode requires -o as a file prefix");
        const std::vector<Matrix> family = gen_semigroup_framed(spec, opt.count);
        json files = json::array();
        for (std::size_t i = 0; i < family.size(); ++i) {
            const std::string path = opt.output + std::to_string(i) + ".json";
            emit(matrix_to_json(family[i]), path);
            files.push_back(path);
        }
        std::cout << json{{"files", std::move(files)}, {"seed", spec.seed}}.dump(2) << "\n";
        return 0;
    }

    const Matrix m = spec.mode == GenMode::idempotent ? gen_idempotent(spec) : gen_matrix(spec);
    emit(matrix_to_json(m), opt.output);
    return 0;
}

int run_fixtures(bool list_only) {
    if (list_only) {
        for (const std::string& name : fixture_names()) std::cout << name << "\n";
        return 0;
    }
    bool all_pass = true;
    for (const std::string& name : fixture_names()) {
        for (const FixtureCheck& check : run_fixture(name)) {
            std::cout << (check.pass ? "ok   " : "FAIL ") << check.name;
            if (!check.pass && !check.detail.empty()) std::cout << " (" << check.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && check.pass;
        }
    }
    std::cout << (all_pass ? "fixtures: all checks passed" : "fixtures: FAILURES present") << "\n";
    return all_pass ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ideal-triangularizability toolkit for nonnegative matrices"};
    app.require_subcommand(1);

    std::string analyze_input, analyze_output;
    bool analyze_oracle = false, analyze_idempotent = false;
    CLI::App* analyze = app.add_subcommand("analyze", "triangularizability report for one matrix");
    analyze->add_option("-i,--input", analyze_input, "matrix JSON file")->required();
    analyze->add_option("-o,--output", analyze_output, "write report here instead of stdout");
    analyze->add_flag("--oracle", analyze_oracle, "include the partition-infimum comparison (n <= 12)");
    analyze->add_flag("--idempotent", analyze_idempotent, "include the idempotent decomposition");

    std::string idem_input, idem_output;
    CLI::App* idem = app.add_subcommand("idempotent", "canonical decomposition of a nonnegative idempotent");
    idem->add_option("-i,--input", idem_input, "matrix JSON file")->required();
    idem->add_option("-o,--output", idem_output, "write report here instead of stdout");

    std::vector<std::string> semigroup_gens;
    std::size_t semigroup_depth = 6;
    std::string semigroup_output;
    CLI::App* semigroup = app.add_subcommand("semigroup", "common triangularizability of a generated semigroup");
    semigroup->add_option("--gens", semigroup_gens, "generator matrix JSON files")->required()->expected(-1);
    semigroup->add_option("--depth", semigroup_depth, "maximum word length to enumerate");
    semigroup->add_option("-o,--output", semigroup_output, "write verdict here instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "independent brute-force oracles");
    oracle->require_subcommand(1);
    std::string schep_input, schep_output;
    CLI::App* schep = oracle->add_subcommand("schep", "partition-infimum diagonal oracle");
    schep->add_option("-i,--input", schep_input, "matrix JSON file")->required();
    schep->add_option("-o,--output", schep_output, "write result here instead of stdout");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "reproducible random instances");
    gen->add_option("--mode", gen_opt.mode, "raw | triangularizable | idempotent | semigroup-framed");
    CLI::Option* gen_n = gen->add_option("--n", gen_opt.n, "dimension");
    CLI::Option* gen_seed = gen->add_option("--seed", gen_opt.seed, "64-bit seed (default: LATTICETRI_SEED or 0)");
    gen->add_option("--density", gen_opt.density, "nonzero-entry probability as a rational, e.g. 1/2");
    gen->add_option("--max-num", gen_opt.max_numerator, "largest numerator drawn");
    gen->add_option("--max-den", gen_opt.max_denominator, "largest denominator drawn");
    CLI::Option* gen_k = gen->add_option("--kernel-size", gen_opt.kernel_size, "idempotent kernel block size");
    CLI::Option* gen_c = gen->add_option("--core-size", gen_opt.core_size, "idempotent core block size");
    CLI::Option* gen_d = gen->add_option("--cokernel-size", gen_opt.cokernel_size, "idempotent cokernel block size");
    gen->add_option("--k", gen_opt.count, "family size for semigroup-framed mode");
    gen->add_option("-o,--output", gen_opt.output, "output file (or file prefix for semigroup-framed)");

    bool fixtures_list = false;
    CLI::App* fixtures = app.add_subcommand("fixtures", "run the built-in fixture families");
    fixtures->add_flag("--list", fixtures_list, "list fixture names without running");
    std::string fixtures_action = "run";
    fixtures->add_option("action", fixtures_action, "only 'run' is supported")
        ->check(CLI::IsMember({"run"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(analyze_input, analyze_output, analyze_oracle, analyze_idempotent);
        if (app.got_subcommand(idem)) return run_idempotent(idem_input, idem_output);
        if (app.got_subcommand(semigroup))
            return run_semigroup(semigroup_gens, semigroup_depth, semigroup_output);
        if (app.got_subcommand(oracle)) return run_oracle_schep(schep_input, schep_output);
        if (app.got_subcommand(gen)) {
            gen_opt.n_given = gen_n->count() > 0;
            gen_opt.seed_given = gen_seed->count() > 0;
            gen_opt.sizes_given = gen_k->count() > 0 || gen_c->count() > 0 || gen_d->count() > 0;
            return run_gen(gen_opt);
        }
        if (app.got_subcommand(fixtures)) return run_fixtures(fixtures_list);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InternalError& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}
