#include "srtop/io.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace srtop {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_vertex(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw UsageError("line " + std::to_string(line_no) + ": non-numeric token '" + tok + "'");
    }
    if (pos != tok.size())
        throw UsageError("line " + std::to_string(line_no) + ": non-numeric token '" + tok + "'");
    if (v < 1)
        throw UsageError("line " + std::to_string(line_no) + ": vertex index must be >= 1");
    return v;
}

}  // namespace

SimplicialComplex parse_facet_text(const std::string& text, SimplicialComplex::Mode mode) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int header_m = 0;
    bool saw_content = false;
    std::vector<std::vector<int>> facets;
    int max_vertex = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;

        if (!saw_content && line.size() >= 2 && (line[0] == 'm' || line[0] == 'M')) {
            std::string rest = trim(line.substr(1));
            if (!rest.empty() && rest[0] == '=') {
                header_m = parse_vertex(trim(rest.substr(1)), line_no);
                saw_content = true;
                continue;
            }
        }
        saw_content = true;

        std::istringstream toks(line);
        std::string tok;
        std::vector<int> facet;
        while (toks >> tok) facet.push_back(parse_vertex(tok, line_no));
        if (facet.empty())
            throw UsageError("line " + std::to_string(line_no) + ": empty facet");
        for (int v : facet) max_vertex = std::max(max_vertex, v);
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw UsageError("no facets in input");

    int m = header_m > 0 ? header_m : max_vertex;
    std::vector<VertexMask> masks;
    for (const auto& f : facets) masks.push_back(vertices_to_mask(f, m));
    return SimplicialComplex::from_facets(m, std::move(masks), mode);
}

std::vector<std::pair<std::string, SimplicialComplex>> parse_lutz_library(const std::string& text) {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    std::vector<std::string> names;
    while (true) {
        skip_ws();
        if (pos >= n) break;

        std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos)
            throw UsageError("library: trailing content without '=' near offset " +
                             std::to_string(pos));
        std::string name = trim(text.substr(pos, eq - pos));
        if (name.empty()) throw UsageError("library: record with empty name");
        for (const auto& seen : names)
            if (seen == name) throw UsageError("library: duplicate record name '" + name + "'");
        names.push_back(name);
        pos = eq + 1;

        skip_ws();
        if (pos >= n || text[pos] != '[')
            throw UsageError("record '" + name + "': expected '[' after '='");
        ++pos;

        std::vector<std::vector<int>> facets;
        while (true) {
            skip_ws();
            if (pos < n && text[pos] == ']') { ++pos; break; }
            if (pos >= n || text[pos] != '[')
                throw UsageError("record '" + name + "': expected '[' starting a facet");
            ++pos;
            std::vector<int> facet;
            while (true) {
                skip_ws();
                std::size_t start = pos;
                while (pos < n && (std::isdigit(static_cast<unsigned char>(text[pos])))) ++pos;
                if (start == pos)
                    throw UsageError("record '" + name + "': expected a vertex index");
                facet.push_back(std::stoi(text.substr(start, pos - start)));
                skip_ws();
                if (pos < n && text[pos] == ',') { ++pos; continue; }
                if (pos < n && text[pos] == ']') { ++pos; break; }
                throw UsageError("record '" + name + "': expected ',' or ']' in facet");
            }
            facets.push_back(std::move(facet));
            skip_ws();
            if (pos < n && text[pos] == ',') ++pos;
        }

        int m = 0;
        for (const auto& f : facets)
            for (int v : f) m = std::max(m, v);
        if (facets.empty()) throw UsageError("record '" + name + "': no facets");
        std::vector<VertexMask> masks;
        try {
            for (const auto& f : facets) masks.push_back(vertices_to_mask(f, m));
            out.emplace_back(name, SimplicialComplex::from_facets(m, std::move(masks)));
        } catch (const ValidationError& e) {
            throw UsageError("record '" + name + "': " + e.what());
        }
        skip_ws();
        if (pos < n && (text[pos] == ',' || text[pos] == ';')) ++pos;
    }
    return out;
}

std::string render_facets(const SimplicialComplex& K) {
    std::string out = "m=" + std::to_string(K.m()) + "\n";
    for (VertexMask f : K.facets()) {
        bool first = true;
        for (int v : mask_to_vertices(f)) {
            if (!first) out += " ";
            out += std::to_string(v);
            first = false;
        }
        if (f == 0) out += "# empty face";
        out += "\n";
    }
    return out;
}

std::string render_betti_table(const GradedBettiTable& T) {
    if (T.coarse.empty()) return "(empty table)\n";

    int max_i = 0;
    std::vector<int> rows;
    for (const auto& [key, v] : T.coarse) {
        if (v == 0) continue;
        max_i = std::max(max_i, key.first);
        int row = key.second - key.first;
        if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());

    auto cell = [&](int row, int i) -> std::string {
        auto v = T.coarse_at(i, i + row);
        return v == 0 ? "." : std::to_string(v);
    };

    std::size_t label_w = 0;
    for (int row : rows) label_w = std::max(label_w, std::to_string(row).size() + 1);
    std::vector<std::size_t> col_w(max_i + 1, 1);
    for (int i = 0; i <= max_i; ++i) {
        col_w[i] = std::to_string(i).size();
        for (int row : rows) col_w[i] = std::max(col_w[i], cell(row, i).size());
    }

    std::ostringstream out;
    out << std::string(label_w, ' ');
    for (int i = 0; i <= max_i; ++i)
        out << " " << std::string(col_w[i] - std::to_string(i).size(), ' ') << i;
    out << "\n";
    for (int row : rows) {
        std::string label = std::to_string(row) + ":";
        out << label << std::string(label_w - label.size(), ' ');
        for (int i = 0; i <= max_i; ++i) {
            std::string c = cell(row, i);
            out << " " << std::string(col_w[i] - c.size(), ' ') << c;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

nlohmann::json betti_json(const GradedBettiTable& T) {
    nlohmann::json j;
    j["module"] = T.module;
    j["coefficients"] = T.coeff.name();
    j["projdim"] = T.projdim;
    j["regularity"] = T.regularity;
    auto coarse = nlohmann::json::array();
    for (const auto& [key, v] : T.coarse)
        coarse.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
    j["coarse"] = coarse;
    auto multi = nlohmann::json::array();
    for (const auto& [key, v] : T.multigraded)
        multi.push_back({{"i", key.first}, {"multidegree", key.second}, {"beta", v}});
    j["multigraded"] = multi;
    return j;
}

nlohmann::json optional_bool_json(const std::optional<bool>& b) {
    if (!b) return nullptr;
    return *b;
}

nlohmann::json field_json(const FieldClassification& r) {
    nlohmann::json j;
    j["coefficients"] = r.coeff.name();
    j["is_cm"] = r.is_cm;
    j["is_sequentially_cm_dual"] = r.is_sequentially_cm_dual;
    j["is_gorenstein_star"] = r.is_gorenstein_star;
    j["gl_index"] = r.gl_index.to_string();
    j["has_linear_resolution"] = r.has_linear_resolution;
    j["has_almost_linear_resolution"] = r.has_almost_linear_resolution;
    j["is_componentwise_linear"] = optional_bool_json(r.is_componentwise_linear);
    j["is_cal"] = optional_bool_json(r.is_cal);
    j["is_quasi_koszul"] = r.is_quasi_koszul;
    j["is_aqk"] = r.is_aqk;
    j["projdim_quotient"] = r.invariants.projdim_quotient;
    j["projdim_ideal"] = r.invariants.projdim_ideal;
    j["regularity"] = r.invariants.regularity;
    return j;
}

}  // namespace

std::string betti_table_to_json(const GradedBettiTable& T) {
    nlohmann::json j = betti_json(T);
    j["schema_version"] = kReportSchemaVersion;
    return j.dump(2) + "\n";
}

std::string report_to_json(const ClassificationReport& rep) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["m"] = rep.m;
    j["dim"] = rep.dim;
    j["f_vector"] = rep.predicates.f_vector;
    j["is_flag"] = rep.predicates.is_flag;
    j["is_neighbourly"] = rep.predicates.is_neighbourly;
    j["is_cone"] = rep.predicates.is_cone;
    j["is_pure"] = rep.predicates.is_pure;
    if (!rep.chordless_known)
        j["chordless_cycle_threshold"] = "unknown";
    else if (rep.chordless_threshold)
        j["chordless_cycle_threshold"] = *rep.chordless_threshold;
    else
        j["chordless_cycle_threshold"] = "chordal";
    auto fields = nlohmann::json::array();
    for (const auto& r : rep.fields) fields.push_back(field_json(r));
    j["fields"] = fields;
    auto labels = nlohmann::json::array();
    for (const auto& l : rep.labels)
        labels.push_back({{"name", l.name}, {"value", l.value}, {"provenance", l.provenance}});
    j["derived_labels"] = labels;
    if (rep.connected_sum_pairs) {
        auto pairs = nlohmann::json::array();
        for (auto [a, b] : rep.connected_sum_pairs->pairs) pairs.push_back({a, b});
        j["connected_sum"] = {{"pairs", pairs}, {"genus", rep.connected_sum_pairs->genus}};
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const ClassificationReport& rep) {
    std::ostringstream out;
    out << "m=" << rep.m << " dim=" << rep.dim;
    out << " flag=" << rep.predicates.is_flag << " neighbourly=" << rep.predicates.is_neighbourly
        << " cone=" << rep.predicates.is_cone << " pure=" << rep.predicates.is_pure << "\n";
    if (!rep.chordless_known)
        out << "chordless cycle threshold: unknown (search capped)\n";
    else if (rep.chordless_threshold)
        out << "chordless cycle threshold: " << *rep.chordless_threshold << "\n";
    else
        out << "chordless cycle threshold: none (chordal 1-skeleton)\n";
    auto show = [](const std::optional<bool>& b) {
        return !b ? std::string("NA") : (*b ? std::string("1") : std::string("0"));
    };
    for (const auto& r : rep.fields) {
        out << "[" << r.coeff.name() << "]"
            << " cm=" << r.is_cm << " seq_cm_dual=" << r.is_sequentially_cm_dual
            << " gorenstein*=" << r.is_gorenstein_star << " gl_index=" << r.gl_index.to_string()
            << " linear=" << r.has_linear_resolution
            << " almost_linear=" << r.has_almost_linear_resolution
            << " cw_linear=" << show(r.is_componentwise_linear) << " cal=" << show(r.is_cal)
            << " quasi_koszul=" << r.is_quasi_koszul << " aqk=" << r.is_aqk
            << " projdim(k[K])=" << r.invariants.projdim_quotient
            << " reg=" << r.invariants.regularity << "\n";
    }
    for (const auto& l : rep.labels)
        out << "label " << l.name << ": " << l.value << "  [" << l.provenance << "]\n";
    return out.str();
}

const char* const kSurveyCsvHeader =
    "name,m,dim,is_flag,is_neighbourly,is_cone,is_pure,chordless,is_cm,is_seq_cm_dual,"
    "is_gorenstein_star,gl_index,linear,almost_linear,componentwise_linear,cal,quasi_koszul,"
    "aqk,projdim_quotient,regularity,pairs,genus,error";

namespace {

struct SurveyCounts {
    std::size_t records = 0, failures = 0, cm = 0, gorenstein_star = 0, neighbourly = 0,
                cone = 0, flag = 0, linear = 0, almost_linear = 0, cw_linear = 0, cal = 0,
                quasi_koszul = 0, aqk = 0, aqk_neighbourly = 0;
};

std::string survey_row(const std::string& name, const SimplicialComplex& K,
                       const SurveyOptions& opt, SurveyCounts& counts) {
    ClassifyOptions copt;
    copt.coeffs = opt.coeffs;
    copt.max_m = opt.max_m;
    copt.gen_cap = opt.gen_cap;
    auto rep = classify(K, copt);

    // aggregate over the requested coefficient systems: conjunction of
    // booleans, worst-case numerics
    bool cm = true, seq = true, gstar = true, lin = true, alin = true, qk = true, aqk = true;
    std::optional<bool> cwl = true, cal = true;
    GlIndexResult gl;
    int projdim = 0, reg = 0;
    bool first = true;
    for (const auto& r : rep.fields) {
        cm &= r.is_cm;
        seq &= r.is_sequentially_cm_dual;
        gstar &= r.is_gorenstein_star;
        lin &= r.has_linear_resolution;
        alin &= r.has_almost_linear_resolution;
        qk &= r.is_quasi_koszul;
        aqk &= r.is_aqk;
        auto and_opt = [](std::optional<bool> a, std::optional<bool> b) -> std::optional<bool> {
            if ((a && !*a) || (b && !*b)) return false;
            if (!a || !b) return std::nullopt;
            return true;
        };
        cwl = and_opt(cwl, r.is_componentwise_linear);
        cal = and_opt(cal, r.is_cal);
        if (first) gl = r.gl_index;
        else if (r.gl_index.kind == GlIndexResult::Kind::NotEquigenerated)
            gl = r.gl_index;
        else if (r.gl_index.kind == GlIndexResult::Kind::Finite &&
                 (gl.kind == GlIndexResult::Kind::Infinite ||
                  (gl.kind == GlIndexResult::Kind::Finite && r.gl_index.value < gl.value)))
            gl = r.gl_index;
        projdim = std::max(projdim, r.invariants.projdim_quotient);
        reg = std::max(reg, r.invariants.regularity);
        first = false;
    }

    ++counts.records;
    counts.cm += cm;
    counts.gorenstein_star += gstar;
    counts.neighbourly += rep.predicates.is_neighbourly;
    counts.cone += rep.predicates.is_cone;
    counts.flag += rep.predicates.is_flag;
    counts.linear += lin;
    counts.almost_linear += alin;
    counts.cw_linear += cwl && *cwl;
    counts.cal += cal && *cal;
    counts.quasi_koszul += qk;
    counts.aqk += aqk;
    counts.aqk_neighbourly += aqk && rep.predicates.is_neighbourly;

    auto ob = [](const std::optional<bool>& b) {
        return !b ? std::string("NA") : (*b ? std::string("1") : std::string("0"));
    };
    std::string chordless = !rep.chordless_known
                                ? "unknown"
                                : (rep.chordless_threshold
                                       ? std::to_string(*rep.chordless_threshold)
                                       : "chordal");
    std::string pairs = "", genus = "";
    if (rep.connected_sum_pairs) {
        nlohmann::json pj = nlohmann::json::array();
        for (auto [a, b] : rep.connected_sum_pairs->pairs) pj.push_back({a, b});
        pairs = pj.dump();
        // commas inside the JSON cell: quote it
        pairs = "\"" + pairs + "\"";
        genus = std::to_string(rep.connected_sum_pairs->genus);
    }

    std::ostringstream row;
    row << name << "," << rep.m << "," << rep.dim << "," << rep.predicates.is_flag << ","
        << rep.predicates.is_neighbourly << "," << rep.predicates.is_cone << ","
        << rep.predicates.is_pure << "," << chordless << "," << cm << "," << seq << "," << gstar
        << "," << gl.to_string() << "," << lin << "," << alin << "," << ob(cwl) << "," << ob(cal)
        << "," << qk << "," << aqk << "," << projdim << "," << reg << "," << pairs << "," << genus
        << ",";
    return row.str();
}

}  // namespace

SurveyResult survey(const std::vector<std::pair<std::string, SimplicialComplex>>& records,
                    const SurveyOptions& opt) {
    const std::size_t n = records.size();
    std::vector<std::string> rows(n);
    std::vector<SurveyCounts> counts(n);
    std::atomic<std::size_t> next{0};
    std::atomic<int> failures{0};

    auto worker = [&] {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= n) return;
            try {
                rows[k] = survey_row(records[k].first, records[k].second, opt, counts[k]);
            } catch (const std::exception& e) {
                ++counts[k].records;
                ++counts[k].failures;
                ++failures;
                std::string msg = e.what();
                for (auto& c : msg)
                    if (c == ',' || c == '\n') c = ';';
                rows[k] = records[k].first + ",,,,,,,,,,,,,,,,,,,,,," + msg;
            }
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();

    SurveyCounts total;
    for (const auto& c : counts) {
        total.records += c.records;
        total.failures += c.failures;
        total.cm += c.cm;
        total.gorenstein_star += c.gorenstein_star;
        total.neighbourly += c.neighbourly;
        total.cone += c.cone;
        total.flag += c.flag;
        total.linear += c.linear;
        total.almost_linear += c.almost_linear;
        total.cw_linear += c.cw_linear;
        total.cal += c.cal;
        total.quasi_koszul += c.quasi_koszul;
        total.aqk += c.aqk;
        total.aqk_neighbourly += c.aqk_neighbourly;
    }

    SurveyResult out;
    out.failures = failures.load();
    std::ostringstream csv;
    csv << kSurveyCsvHeader << "\n";
    for (const auto& r : rows) csv << r << "\n";
    out.csv = csv.str();

    std::ostringstream sum;
    sum << "records=" << total.records << " failures=" << total.failures << " cm=" << total.cm
        << " gorenstein_star=" << total.gorenstein_star << " neighbourly=" << total.neighbourly
        << " cone=" << total.cone << " flag=" << total.flag << " linear=" << total.linear
        << " almost_linear=" << total.almost_linear << " componentwise_linear=" << total.cw_linear
        << " cal=" << total.cal << " quasi_koszul=" << total.quasi_koszul << " aqk=" << total.aqk
        << " aqk_neighbourly=" << total.aqk_neighbourly << " elapsed_ms=" << ms << "\n";
    out.summary = sum.str();
    return out;
}

}  // namespace srtop
