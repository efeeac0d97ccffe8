#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "srtop/io.hpp"
#include "srtop/strand.hpp"

namespace {

using namespace srtop;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GlobalOpts {
    std::vector<std::string> chars;
    int max_m = kDefaultHochsterCap;
    int gen_cap = kDefaultGeneratorCap;
    int jobs = 1;
    std::string format = "text";
    std::uint64_t seed = 0;

    std::vector<CoefficientSpec> coeffs() const {
        std::vector<CoefficientSpec> out;
        for (const auto& c : chars) out.push_back(CoefficientSpec::parse(c));
        if (out.empty()) out.push_back(CoefficientSpec::rationals());
        return out;
    }
    CoefficientSpec single_field() const {
        auto cs = coeffs();
        if (cs.size() != 1 || !cs.front().is_field())
            throw UsageError("this subcommand needs exactly one field via --char <0|p>");
        return cs.front();
    }
};

SimplicialComplex load_complex(const std::string& path, bool nonfaces) {
    return parse_facet_text(slurp(path), nonfaces ? SimplicialComplex::Mode::Nonfaces
                                                  : SimplicialComplex::Mode::Facets);
}

void cmd_betti(const GlobalOpts& g, const std::string& path, bool nonfaces,
               const std::string& module, bool multigraded) {
    auto K = load_complex(path, nonfaces);
    for (const auto& spec : g.coeffs()) {
        if (!spec.is_field())
            throw UsageError("betti needs field coefficients (use --char 0 or --char <p>)");
        auto T = with_field(spec, [&](auto f) {
            return betti_table(f, K, module == "ideal" ? ModuleView::Ideal : ModuleView::Quotient,
                               g.max_m);
        });
        if (g.format == "json") {
            std::cout << betti_table_to_json(T);
        } else {
            std::cout << "Betti table of " << (module == "ideal" ? "I_K" : "k[K]") << " over "
                      << spec.name() << ":\n"
                      << render_betti_table(T);
            if (multigraded) {
                for (const auto& [key, v] : T.multigraded)
                    std::cout << "beta_{" << key.first << ","
                              << mask_to_string(multidegree_to_mask(key.second)) << "} = " << v
                              << "\n";
            }
            std::cout << "projdim=" << T.projdim << " regularity=" << T.regularity << "\n";
        }
    }
}

void cmd_classify(const GlobalOpts& g, const std::string& path, bool nonfaces) {
    auto K = load_complex(path, nonfaces);
    ClassifyOptions opt;
    opt.coeffs = g.coeffs();
    opt.max_m = g.max_m;
    opt.gen_cap = g.gen_cap;
    auto rep = classify(K, opt);
    std::cout << (g.format == "json" ? report_to_json(rep) : report_to_text(rep));
}

void cmd_strand(const GlobalOpts& g, const std::string& path, bool nonfaces) {
    auto K = load_complex(path, nonfaces);
    auto spec = g.single_field();
    auto T = with_field(spec, [&](auto f) { return quasi_linear_strand(f, K, g.max_m); });
    std::cout << "quasi-linear strand over " << spec.name() << " (i, U, strand_dim, beta):\n";
    for (const auto& [key, v] : T.entries)
        std::cout << key.first << " " << mask_to_string(key.second) << " " << v.first << " "
                  << v.second << "\n";
    std::cout << "quasi_koszul=" << T.full() << " aqk=" << T.full_below(T.projdim_quotient)
              << "\n";
}

void cmd_homology(const GlobalOpts& g, const std::string& path, bool nonfaces) {
    auto K = load_complex(path, nonfaces);
    for (const auto& spec : g.coeffs()) {
        if (spec.kind == CoeffKind::Integers) {
            auto H = integral_reduced_homology(K);
            std::cout << "reduced homology over Z:\n";
            for (int n = -1; n <= K.dim(); ++n) {
                const auto* grp = H.group(n);
                std::cout << "H~_" << n << " = Z^" << grp->free_rank;
                for (const auto& t : grp->torsion) std::cout << " + Z/" << t.get_str();
                std::cout << "\n";
            }
        } else {
            auto b = with_field(spec, [&](auto f) { return reduced_betti_numbers(f, K); });
            std::cout << "reduced Betti numbers over " << spec.name() << ":";
            for (std::size_t i = 0; i < b.size(); ++i)
                std::cout << " b_" << (static_cast<int>(i) - 1) << "=" << b[i];
            std::cout << "\n";
        }
    }
}

void cmd_dual(const GlobalOpts&, const std::string& path, bool nonfaces) {
    auto K = load_complex(path, nonfaces);
    auto D = alexander_dual(K);
    std::cout << render_facets(D);
    auto ghosts = D.ghost_vertices();
    if (!ghosts.empty()) {
        std::cout << "# ghost vertices:";
        for (int v : ghosts) std::cout << " " << v;
        std::cout << "\n";
    }
}

void cmd_generate(const GlobalOpts& g, const std::string& family, int a, int b, int subdivisions,
                  const std::vector<int>& facet_seq) {
    FamilySpec spec;
    if (family == "cycle") spec.kind = FamilySpec::Kind::Cycle;
    else if (family == "simplex-boundary") spec.kind = FamilySpec::Kind::SimplexBoundary;
    else if (family == "cyclic") spec.kind = FamilySpec::Kind::Cyclic;
    else if (family == "stacked") spec.kind = FamilySpec::Kind::Stacked;
    else if (family == "join") spec.kind = FamilySpec::Kind::JoinOfBoundaries;
    else throw UsageError("unknown family '" + family + "'");
    spec.a = a;
    spec.b = b;
    spec.subdivisions = subdivisions;
    spec.seed = g.seed;
    for (int f : facet_seq) spec.facet_sequence.push_back(static_cast<VertexMask>(f));
    std::cout << render_facets(generate_family(spec));
}

void cmd_sum(const std::string& path_k, const std::string& path_l, const std::string& facet_k,
             const std::string& facet_l, const std::string& glue) {
    auto K = load_complex(path_k, false);
    auto L = load_complex(path_l, false);
    auto parse_face = [](const std::string& s, int m) {
        std::istringstream in(s);
        std::vector<int> vs;
        int v;
        while (in >> v) vs.push_back(v);
        return vertices_to_mask(vs, m);
    };
    VertexMask sK = parse_face(facet_k, K.m());
    VertexMask sL = parse_face(facet_l, L.m());
    std::vector<std::pair<int, int>> pairs;
    std::istringstream in(glue);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw UsageError("glue pairs must look like lv:kv,lv:kv,...");
        pairs.push_back({std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))});
    }
    auto res = connected_sum(K, sK, L, sL, pairs);
    std::cout << render_facets(res.complex);
    std::cout << "# relabeling of the second summand:";
    for (std::size_t v = 0; v < res.l_vertex_relabel.size(); ++v)
        std::cout << " " << (v + 1) << "->" << res.l_vertex_relabel[v];
    std::cout << "\n";
}

void cmd_stellar(const std::string& path, const std::string& facet) {
    auto K = load_complex(path, false);
    std::istringstream in(facet);
    std::vector<int> vs;
    int v;
    while (in >> v) vs.push_back(v);
    std::cout << render_facets(stellar_subdivide_facet(K, vertices_to_mask(vs, K.m())));
}

void cmd_survey(const GlobalOpts& g, const std::vector<std::string>& paths, bool facet_files) {
    std::vector<std::pair<std::string, SimplicialComplex>> records;
    for (const auto& p : paths) {
        if (facet_files)
            records.emplace_back(p, load_complex(p, false));
        else
            for (auto& rec : parse_lutz_library(slurp(p))) records.push_back(std::move(rec));
    }
    SurveyOptions opt;
    opt.coeffs = g.coeffs();
    opt.jobs = g.jobs;
    opt.max_m = g.max_m;
    opt.gen_cap = g.gen_cap;
    auto res = survey(records, opt);
    std::cout << res.csv;
    std::cerr << res.summary;
    if (res.failures > 0) throw UsageError(std::to_string(res.failures) + " records failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner homological invariants and classification"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--char", g.chars, "coefficients: 0 (Q), a prime p, or Z (repeatable)")
        ->allow_extra_args(false);
    app.add_option("--max-m", g.max_m, "subset-enumeration cap override");
    app.add_option("--gen-cap", g.gen_cap, "monomial generator cap override");
    app.add_option("--jobs", g.jobs, "worker threads for survey");
    app.add_option("--format", g.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", g.seed, "PRNG seed for generated families");

    std::string path, path_l, module = "quotient", family, facet_k, facet_l, glue;
    bool nonfaces = false, multigraded = false, facet_files = false;
    int fam_a = 0, fam_b = 0, subdivisions = 0;
    std::vector<int> facet_seq;
    std::vector<std::string> paths;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", path, "facet-list file ('-' for stdin)")->required();
        sub->add_flag("--nonfaces", nonfaces, "input lines are minimal non-faces");
    };

    auto* betti = app.add_subcommand("betti", "graded Betti table via Hochster's formula")->fallthrough();
    add_input(betti);
    betti->add_option("--module", module, "quotient|ideal")
        ->check(CLI::IsMember({"quotient", "ideal"}));
    betti->add_flag("--multigraded", multigraded, "also print multigraded entries");

    auto* classify_cmd = app.add_subcommand("classify", "full classification report")->fallthrough();
    add_input(classify_cmd);

    auto* strand_cmd = app.add_subcommand("strand", "quasi-linear strand dimensions")->fallthrough();
    add_input(strand_cmd);

    auto* homology_cmd = app.add_subcommand("homology", "reduced homology of the complex")->fallthrough();
    add_input(homology_cmd);

    auto* dual_cmd = app.add_subcommand("dual", "Alexander dual")->fallthrough();
    add_input(dual_cmd);

    auto* gen = app.add_subcommand("generate", "generate a named family")->fallthrough();
    gen->add_option("family", family, "cycle|simplex-boundary|cyclic|stacked|join")->required();
    gen->add_option("-a", fam_a, "first parameter (m, n, or n1)");
    gen->add_option("-b", fam_b, "second parameter (m for cyclic, n2 for join)");
    gen->add_option("--subdivisions", subdivisions, "stacked: number of subdivisions");
    gen->add_option("--facet-sequence", facet_seq, "stacked: explicit facet masks to subdivide");

    auto* sum_cmd = app.add_subcommand("sum", "connected sum of two complexes")->fallthrough();
    sum_cmd->add_option("first", path, "facet-list file for K")->required();
    sum_cmd->add_option("second", path_l, "facet-list file for L")->required();
    sum_cmd->add_option("--facet-k", facet_k, "facet of K, e.g. \"1 2 3\"")->required();
    sum_cmd->add_option("--facet-l", facet_l, "facet of L")->required();
    sum_cmd->add_option("--glue", glue, "vertex pairs lv:kv,lv:kv,...")->required();

    auto* stellar_cmd = app.add_subcommand("stellar", "stellar subdivision of a facet")->fallthrough();
    stellar_cmd->add_option("input", path, "facet-list file")->required();
    stellar_cmd->add_option("--facet", facet_k, "facet to subdivide, e.g. \"1 2 3\"")->required();

    auto* survey_cmd = app.add_subcommand("survey", "batch classification, CSV output")->fallthrough();
    survey_cmd->add_option("inputs", paths, "library files (name=[[...]] records)")->required();
    survey_cmd->add_flag("--facet-files", facet_files, "treat inputs as facet-list files");

    try {
        app.parse(argc, argv);
        if (betti->parsed()) cmd_betti(g, path, nonfaces, module, multigraded);
        else if (classify_cmd->parsed()) cmd_classify(g, path, nonfaces);
        else if (strand_cmd->parsed()) cmd_strand(g, path, nonfaces);
        else if (homology_cmd->parsed()) cmd_homology(g, path, nonfaces);
        else if (dual_cmd->parsed()) cmd_dual(g, path, nonfaces);
        else if (gen->parsed()) cmd_generate(g, family, fam_a, fam_b, subdivisions, facet_seq);
        else if (sum_cmd->parsed()) cmd_sum(path, path_l, facet_k, facet_l, glue);
        else if (stellar_cmd->parsed()) cmd_stellar(path, facet_k);
        else if (survey_cmd->parsed()) cmd_survey(g, paths, facet_files);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CapExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
