#include "cyclo/report_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyclo/errors.hpp"

namespace cyclo {

using nlohmann::json;

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::HH: return "HH";
        case Theory::HH_co: return "HH_co";
        case Theory::HC: return "HC";
        case Theory::HC_co: return "HC_co";
        case Theory::HP: return "HP";
        case Theory::HP_co: return "HP_co";
    }
    return "?";
}

Theory theory_from_name(const std::string& name) {
    for (Theory t : {Theory::HH, Theory::HH_co, Theory::HC, Theory::HC_co, Theory::HP, Theory::HP_co})
        if (theory_name(t) == name) return t;
    throw InputError("unknown theory: " + name);
}

std::string sbi_node_label(const SBINode& node) {
    switch (node.slot) {
        case SBISlot::HochschildNode:
            return "HH_" + std::to_string(node.degree) + " (B in, I out)";
        case SBISlot::CyclicNodeI:
            return "HC_" + std::to_string(node.degree) + " (I in, S out)";
        case SBISlot::CyclicNodeS:
            return "HC_" + std::to_string(node.degree) + " (S in, B out)";
    }
    return "?";
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw InputError("unknown output format: " + name);
}

namespace {

Rational rational_from_json(const json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_array() && v.size() == 2)
            return rat(v[0].get<long>(), v[1].get<long>());
    } catch (const std::exception&) {
    }
    throw InputError("field '" + field + "': expected an integer, \"num/den\", or [num, den]");
}

} // namespace

Algebra load_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open algebra file: " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("parse error in " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw InputError(path.string() + ": top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw InputError(path.string() + ": field 'dim' (nonnegative integer) is required");
    const std::size_t dim = doc["dim"].get<std::size_t>();

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw InputError("field 'labels': expected an array");
        for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
    }

    std::optional<std::vector<Rational>> unit;
    if (doc.contains("unit") && !doc["unit"].is_null()) {
        if (!doc["unit"].is_array()) throw InputError("field 'unit': expected an array");
        unit.emplace();
        for (const auto& v : doc["unit"]) unit->push_back(rational_from_json(v, "unit"));
    }

    std::map<Algebra::Key, SparseVec> table;
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) throw InputError("field 'entries': expected an array");
        std::size_t line = 0;
        for (const auto& e : doc["entries"]) {
            ++line;
            if (!e.is_array() || e.size() != 5)
                throw InputError("entry " + std::to_string(line) +
                                 ": expected [i, j, k, numerator, denominator]");
            const std::size_t i = e[0].get<std::size_t>();
            const std::size_t j = e[1].get<std::size_t>();
            const std::size_t k = e[2].get<std::size_t>();
            if (i >= dim || j >= dim || k >= dim)
                throw InputError("entry " + std::to_string(line) + ": index out of range");
            if (e[4].get<long>() == 0)
                throw InputError("entry " + std::to_string(line) + ": zero denominator");
            const Rational c = rat(e[3].get<long>(), e[4].get<long>());
            if (c == 0) continue;
            table[static_cast<Algebra::Key>(i) * dim + j].emplace_back(k, c);
        }
    }
    return Algebra(dim, std::move(labels), std::move(table), std::move(unit));
}

DiffCache::DiffCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<RationalMatrix> DiffCache::load(const std::string& key) const {
    std::ifstream in(dir_ / (key + ".mat"));
    if (!in) return std::nullopt;
    std::size_t rows, cols, nnz;
    if (!(in >> rows >> cols >> nnz)) return std::nullopt;
    RationalMatrix m(rows, cols);
    for (std::size_t t = 0; t < nnz; ++t) {
        std::size_t r, c;
        std::string value;
        if (!(in >> r >> c >> value)) return std::nullopt;
        if (r >= rows || c >= cols) return std::nullopt;
        try {
            m.set(r, c, parse_rational(value));
        } catch (const InputError&) {
            return std::nullopt;
        }
    }
    return m;
}

void DiffCache::store(const std::string& key, const RationalMatrix& m) const {
    const auto tmp = dir_ / (key + ".mat.tmp");
    const auto final_path = dir_ / (key + ".mat");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return; // cache is best-effort
        out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r)) out << r << ' ' << c << ' ' << to_string(v) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec);
}

namespace {

json certificate_to_json(const StabilizationCertificate& cert) {
    json window;
    window["lo"] = cert.hh_window_lo;
    window["hi"] = cert.hh_window_hi;
    window["dims"] = cert.hh_window_dims;
    window["vanishes"] = cert.hh_window_vanishes;
    json j;
    j["tested_degrees"] = cert.tested_degrees;
    j["iso_flags"] = cert.iso_flags;
    j["hh_window"] = window;
    j["conclusive"] = cert.conclusive;
    j["stable_even_rank"] = cert.stable_even_rank;
    j["stable_odd_rank"] = cert.stable_odd_rank;
    return j;
}

StabilizationCertificate certificate_from_json(const json& j) {
    StabilizationCertificate cert;
    cert.tested_degrees = j.at("tested_degrees").get<std::vector<std::size_t>>();
    cert.iso_flags = j.at("iso_flags").get<std::vector<bool>>();
    cert.hh_window_lo = j.at("hh_window").at("lo").get<std::size_t>();
    cert.hh_window_hi = j.at("hh_window").at("hi").get<std::size_t>();
    cert.hh_window_dims = j.at("hh_window").at("dims").get<std::vector<std::size_t>>();
    cert.hh_window_vanishes = j.at("hh_window").at("vanishes").get<bool>();
    cert.conclusive = j.at("conclusive").get<bool>();
    cert.stable_even_rank = j.at("stable_even_rank").get<std::size_t>();
    cert.stable_odd_rank = j.at("stable_odd_rank").get<std::size_t>();
    return cert;
}

} // namespace

std::string render_homology_report(const HomologyReport& rep, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        j["theory"] = theory_name(rep.theory);
        j["cutoff"] = rep.cutoff;
        j["dims"] = rep.dims;
        j["flags"] = rep.reliable;
        j["certificates"] = rep.certificate ? certificate_to_json(*rep.certificate) : json(nullptr);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "degree,dim,reliable\n";
        for (std::size_t n = 0; n < rep.dims.size(); ++n)
            out << n << ',' << rep.dims[n] << ',' << (rep.reliable[n] ? 1 : 0) << '\n';
        return out.str();
    }
    out << "theory: " << theory_name(rep.theory) << "\ncutoff: " << rep.cutoff << '\n';
    out << "degree  dim  reliable\n";
    for (std::size_t n = 0; n < rep.dims.size(); ++n)
        out << n << "       " << rep.dims[n] << "    " << (rep.reliable[n] ? "yes" : "no") << '\n';
    if (rep.certificate) {
        const auto& c = *rep.certificate;
        out << "stabilization: " << (c.conclusive ? "conclusive" : "inconclusive") << '\n';
        out << "  tested S at degrees:";
        for (std::size_t i = 0; i < c.tested_degrees.size(); ++i)
            out << ' ' << c.tested_degrees[i] << (c.iso_flags[i] ? "(iso)" : "(not iso)");
        out << '\n';
        out << "  HH window [" << c.hh_window_lo << ", " << c.hh_window_hi << "]:";
        if (c.hh_window_dims.empty()) {
            out << " empty";
        } else {
            for (auto d : c.hh_window_dims) out << ' ' << d;
            out << (c.hh_window_vanishes ? " (vanishes)" : " (does not vanish)");
        }
        out << '\n';
        out << "  iterated-S image ranks: even " << c.stable_even_rank << ", odd "
            << c.stable_odd_rank << '\n';
    }
    return out.str();
}

HomologyReport parse_homology_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("report parse error: ") + e.what());
    }
    HomologyReport rep;
    try {
        rep.theory = theory_from_name(j.at("theory").get<std::string>());
        rep.cutoff = j.at("cutoff").get<std::size_t>();
        rep.dims = j.at("dims").get<std::vector<std::size_t>>();
        rep.reliable = j.at("flags").get<std::vector<bool>>();
        if (!j.at("certificates").is_null())
            rep.certificate = certificate_from_json(j.at("certificates"));
    } catch (const json::exception& e) {
        throw InputError(std::string("report schema error: ") + e.what());
    }
    return rep;
}

std::string render_sbi_certificate(const SBICertificate& cert, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json nodes = json::array();
        for (const auto& n : cert.nodes) {
            json node;
            node["node"] = sbi_node_label(n);
            node["degree"] = n.degree;
            node["rank_in"] = n.rank_in;
            node["ker_out"] = n.ker_out;
            node["exact"] = n.exact;
            nodes.push_back(node);
        }
        json j;
        j["cutoff"] = cert.cutoff;
        j["nodes"] = nodes;
        j["unchecked"] = cert.unchecked;
        j["all_exact"] = cert.all_exact;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "node,rank_in,ker_out,exact\n";
        for (const auto& n : cert.nodes)
            out << '"' << sbi_node_label(n) << "\"," << n.rank_in << ',' << n.ker_out << ','
                << (n.exact ? 1 : 0) << '\n';
        return out.str();
    }
    out << "SBI exactness certificate (cutoff " << cert.cutoff << ")\n";
    out << "node                      rank_in  ker_out  exact\n";
    for (const auto& n : cert.nodes) {
        std::string label = sbi_node_label(n);
        label.resize(26, ' ');
        out << label << n.rank_in << "        " << n.ker_out << "        "
            << (n.exact ? "yes" : "NO") << '\n';
    }
    for (const auto& u : cert.unchecked) out << "unchecked: " << u << '\n';
    out << "all exact: " << (cert.all_exact ? "yes" : "NO") << '\n';
    return out.str();
}

} // namespace cyclo
